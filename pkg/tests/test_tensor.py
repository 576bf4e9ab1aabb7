import numpy as np
import pytest

from qtensor import builtin
from qtensor.catalog import DEFAULT_CORPUS
from qtensor.errors import HypothesisNotMet, OrderLimit
from qtensor.fp import abelianized_invariants
from qtensor.groups import abelian_invariants, are_isomorphic, center, identity_hom
from qtensor.tensor import (
    REPORT_FIELDS,
    build_presentation,
    center_tower,
    conjugation_action,
    eta,
    invariant_report,
    is_capable,
    multipliers,
    realize_tensor,
    realize_wedge,
    splitting_alpha,
    splitting_beta,
    wedge,
)

ABELIAN = [n for n in DEFAULT_CORPUS if builtin(n).is_abelian]


def test_presentation_sizes():
    P = build_presentation(builtin("C2"), 0)
    assert (P.generator_count, len(P.relators)) == (4, 16)
    assert build_presentation(builtin("C2"), 1).generator_count == 6


@pytest.mark.parametrize("q", [0, 1, 2, 3])
def test_trivial_group(q):
    assert realize_tensor(builtin("1"), q).realized.order == 1


def test_c2_q0():
    QT = realize_tensor(builtin("C2"), 0)
    assert QT.realized.order == 2
    assert QT.nabla.order == 2
    assert QT.tensor(0, 1) == 0 and QT.tensor(1, 0) == 0


def test_c2_q1():
    QT = realize_tensor(builtin("C2"), 1)
    assert QT.realized.order == 2
    assert QT.tensor(1, 1) == 0 and QT.hat(1) != 0


@pytest.mark.parametrize("name", ABELIAN)
@pytest.mark.parametrize("q", [0, 1, 2, 3])
def test_abelian_matches_snf(name, q):
    G = builtin(name)
    QT = realize_tensor(G, q)
    assert QT.realized.is_abelian
    assert abelian_invariants(QT.realized).factors == abelianized_invariants(build_presentation(G, q)).factors


@pytest.mark.parametrize("name,order", [("C2xC2", 2), ("S3", 3), ("D4", 4), ("Q8", 2), ("C6", 1)])
def test_wedge_orders(name, order):
    assert realize_wedge(builtin(name), 0).realized.order == order


@pytest.mark.parametrize("name", DEFAULT_CORPUS)
@pytest.mark.parametrize("q", [0, 2])
def test_direct_wedge_matches_quotient(name, q):
    G = builtin(name)
    a = wedge(realize_tensor(G, q)).realized
    b = realize_wedge(G, q).realized
    assert are_isomorphic(a, b)


@pytest.mark.parametrize("name", ["S3", "D4", "Q8", "E2^3"])
def test_simplify_agrees(name):
    G = builtin(name)
    for q in (0, 2):
        assert realize_tensor(G, q, simplify=True).realized.order == realize_tensor(G, q).realized.order


def test_multiplier_examples():
    md = multipliers(realize_wedge(builtin("D4"), 0))
    assert md.M_q.order == 2 and md.B0_q.to_json() == []
    for n in ("C2", "C4", "C6", "C2xC4"):
        md = multipliers(realize_wedge(builtin(n), 0))
        assert md.B0_q.to_json() == []
    assert multipliers(realize_wedge(builtin("C6"), 0)).M_q.order == 1


@pytest.mark.parametrize("name", DEFAULT_CORPUS)
@pytest.mark.parametrize("q", [0, 1, 2, 3])
def test_eta_image(name, q):
    from qtensor.groups import power_commutator_subgroup

    G = builtin(name)
    e = eta(realize_wedge(G, q))
    assert e.is_homomorphism()
    assert e.image() == power_commutator_subgroup(G, q)


def test_center_tower_examples():
    for n in ("C2", "C3", "C6"):
        G = builtin(n)
        assert center_tower(G, 0).Z_wedge.order == G.order
    assert center_tower(builtin("Q8"), 0).Z_wedge == center(builtin("Q8"))
    assert center_tower(builtin("D4"), 0).Z_wedge.order == 1


@pytest.mark.parametrize("name", DEFAULT_CORPUS)
@pytest.mark.parametrize("q", [1, 2, 3])
def test_center_inclusions(name, q):
    ct = center_tower(builtin(name), q)
    assert ct.E_wedge_q <= ct.Z_q and ct.E_wedge_q <= ct.Z_hat_q


def test_capability():
    assert is_capable(builtin("C2xC2"))
    assert is_capable(builtin("D4"))
    assert not is_capable(builtin("C5"))
    assert not is_capable(builtin("Q8"))


def test_alpha_examples():
    for name in ("S3", "D4", "C2xC2"):
        QT = realize_tensor(builtin(name), 1)
        a = splitting_alpha(QT, 1)
        assert (a.images == 0).all()
    QT = realize_tensor(builtin("S3"), 3)
    a = splitting_alpha(QT, 3)
    assert (a.images[QT.nabla.array] == QT.nabla.array).all()
    with pytest.raises(HypothesisNotMet):
        splitting_alpha(realize_tensor(builtin("C2"), 0), 1)
    with pytest.raises(ValueError):
        splitting_alpha(QT, 2)


def test_beta_examples():
    QT = realize_tensor(builtin("C3"), 3)
    b = splitting_beta(QT, 2)
    assert (b.images[QT.nabla.array] == QT.nabla.array).all()
    with pytest.raises(HypothesisNotMet):
        splitting_beta(realize_tensor(builtin("C2"), 0), 2)
    trivial = realize_tensor(builtin("1"), 2)
    assert (splitting_beta(trivial, 4).images == 0).all()
    with pytest.raises(ValueError):
        splitting_beta(QT, 3)


def test_order_identity_odd_q():
    for name in DEFAULT_CORPUS:
        for q in (1, 3):
            QT = realize_tensor(builtin(name), q)
            assert QT.realized.order == QT.nabla.order * realize_wedge(builtin(name), q).realized.order


def test_conjugation_action(s3):
    QT = realize_tensor(s3, 0)
    assert conjugation_action(QT, 0).images.tolist() == identity_hom(QT.realized).images.tolist()
    t = next(g for g in range(6) if s3.element_orders[g] == 2)
    phi = conjugation_action(QT, t)
    assert phi.is_bijective and phi.is_homomorphism()
    assert (phi.images != np.arange(QT.realized.order)).any()
    assert (phi.images[QT.nabla.array] == QT.nabla.array).all()
    QA = realize_tensor(builtin("C2xC4"), 2)
    for g in range(8):
        assert (conjugation_action(QA, g).images == np.arange(QA.realized.order)).all()


def test_report_shape():
    r = invariant_report(builtin("Q8"), 2)
    assert tuple(r) == REPORT_FIELDS
    assert r["b0_q"] == [2, 2]
    with pytest.raises(OrderLimit):
        invariant_report(builtin("S5"), 2)


def _nu_tensor_order(G):
    """|[G, G^phi]| inside the group nu(G), an independent route to |G (x) G|."""
    from qtensor.fp import Presentation, realize
    from qtensor.groups import generate

    n, T, inv = G.order, G.table, G.inverses
    x = lambda g: g + 1
    y = lambda g: n + g + 1
    rels = []
    for c in (x, y):
        rels.append((c(0),))
        rels += [(c(a), c(b), -c(int(T[a, b]))) for a in range(n) for b in range(n)]
    comm = lambda a, b: (x(a), y(b), -x(a), -y(b))
    inverse = lambda w: tuple(-l for l in reversed(w))
    for g3 in range(1, n):
        k = lambda h: int(T[T[g3, h], inv[g3]])
        for g1 in range(1, n):
            for g2 in range(1, n):
                for z in (x, y):
                    rels.append((z(g3),) + comm(g1, g2) + (-z(g3),) + inverse(comm(k(g1), k(g2))))
    N, gens = realize(Presentation(2 * n, tuple(rels)))
    cm = lambda a, b: int(N.table[N.table[N.table[a, b], N.inverses[a]], N.inverses[b]])
    return generate(N, [cm(gens[a], gens[n + b]) for a in range(n) for b in range(n)]).order


@pytest.mark.parametrize("name", ["C2", "C4", "C2xC2", "S3", "D4"])
def test_tensor_order_matches_nu_construction(name):
    G = builtin(name)
    assert realize_tensor(G, 0).realized.order == _nu_tensor_order(G)
