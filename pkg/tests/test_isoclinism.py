import itertools

import pytest

from qtensor import builtin
from qtensor.catalog import DEFAULT_CORPUS
from qtensor.isoclinism import MODES, check, check_weak, normalize_mode, validate_witness
from qtensor.tensor import multipliers, realize_wedge


def test_identity_witness(s3):
    w = check(s3, s3)
    assert w is not None and validate_witness(w)


def test_abelian_pairs_classical():
    for a, b in [("C2", "C6"), ("C4", "E2^3"), ("1", "C2xC4")]:
        assert check(builtin(a), builtin(b)) is not None


def test_d4_q8(d4, q8):
    w = check(d4, q8, "isoclinic")
    assert w is not None
    js = w.to_json()
    assert js["mode"] == "classical" and len(js["alpha"]) == 4


def test_c2_c4_q2():
    assert check(builtin("C2"), builtin("C4"), "q", 2) is None


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6])
def test_cyclic_exterior_trivial(n):
    assert check(builtin(f"C{n}"), builtin("1"), "exterior", 0) is not None


def test_unknown_mode():
    with pytest.raises(ValueError):
        normalize_mode("strong")


def test_weak_reuses_exterior():
    G, H = builtin("C2xC2"), builtin("C2xC4")
    assert check(G, H, "q-exterior", 0) is not None
    assert check_weak(G, H, 0) is not None


def test_weak_absent_on_mismatched_derived(s3, d4):
    assert check_weak(s3, d4, 0) is None


SMALL = ["1", "C2", "C4", "C2xC2", "S3", "D4", "Q8"]


@pytest.mark.parametrize("mode", MODES[:4])
@pytest.mark.parametrize("q", [0, 2])
def test_symmetric_outcome(mode, q):
    for a, b in itertools.combinations(SMALL, 2):
        G, H = builtin(a), builtin(b)
        assert (check(G, H, mode, q) is None) == (check(H, G, mode, q) is None)


@pytest.mark.parametrize("q", [1, 2, 3])
def test_bogomolov_agrees_on_q_isoclinic_pairs(q):
    for a, b in itertools.combinations(DEFAULT_CORPUS, 2):
        G, H = builtin(a), builtin(b)
        for mode, field in (("q-isoclinic", "B0_q"), ("hat-q-isoclinic", "B0_hat_q")):
            if check(G, H, mode, q) is not None:
                x = getattr(multipliers(realize_wedge(G, q)), field).to_json()
                y = getattr(multipliers(realize_wedge(H, q)), field).to_json()
                assert x == y, (a, b, mode)
