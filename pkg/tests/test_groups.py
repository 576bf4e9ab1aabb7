import numpy as np
import pytest
from hypothesis import given, strategies as st
from conftest import relabel

from qtensor import builtin, load_group
from qtensor.catalog import DEFAULT_CORPUS, ORDER_16, SMALL_P_GROUPS, cyclic
from qtensor.errors import InvalidAmalgam, InvalidGroup, NotAbelian, NotNormal
from qtensor.groups import (
    Homomorphism,
    abelian_invariants,
    are_isomorphic,
    center,
    derived_subgroup,
    find_isomorphism,
    frattini_subgroup,
    generate,
    minimal_generator_count,
    power_commutator_subgroup,
    product,
    quotient,
    subgroup_from_mask,
    trivial_subgroup,
    whole_group,
)

CORPUS = [builtin(n) for n in DEFAULT_CORPUS]


def test_load_order_two_table():
    G = load_group({"kind": "cayley", "order": 2, "table": [[0, 1], [1, 0]]})
    assert G.order == 2


def test_s3_nonabelian(s3):
    assert s3.order == 6 and not s3.is_abelian


def test_idempotent_rejected():
    with pytest.raises(InvalidGroup):
        load_group({"kind": "cayley", "table": [[0, 1], [1, 1]]})


def test_nonassociative_rejected():
    # a Latin square with identity 0 that is not associative
    t = [[0, 1, 2, 3, 4], [1, 0, 3, 4, 2], [2, 4, 0, 1, 3], [3, 2, 4, 0, 1], [4, 3, 1, 2, 0]]
    with pytest.raises(InvalidGroup):
        load_group({"kind": "cayley", "table": t})


@pytest.mark.parametrize(
    "name,z,dsub,phi",
    [("S3", 1, 3, 1), ("D4", 2, 2, 2), ("Q8", 2, 2, 2), ("C6", 6, 1, 1), ("C4", 4, 1, 2), ("C2", 2, 1, 1)],
)
def test_characteristic_subgroups(name, z, dsub, phi):
    G = builtin(name)
    assert center(G).order == z
    assert derived_subgroup(G).order == dsub
    assert frattini_subgroup(G).order == phi


def test_frattini_d4_is_center(d4):
    assert frattini_subgroup(d4) == center(d4)


def test_power_commutator():
    assert power_commutator_subgroup(builtin("C4"), 2).order == 2
    assert power_commutator_subgroup(builtin("S3"), 3).order == 6
    for G in CORPUS:
        assert power_commutator_subgroup(G, 0) == derived_subgroup(G)


def test_quotients(d4):
    Q, pi = quotient(d4, center(d4))
    assert Q.order == 4 and Q.exponent == 2
    assert quotient(d4, whole_group(d4))[0].order == 1
    Q1, pi1 = quotient(d4, trivial_subgroup(d4))
    assert pi1.is_bijective and pi1.is_homomorphism()


def test_quotient_not_normal(s3):
    t = next(g for g in range(6) if s3.element_orders[g] == 2)
    with pytest.raises(NotNormal):
        quotient(s3, generate(s3, [t]))


def test_abelian_invariants():
    assert list(abelian_invariants(builtin("C6")).factors) == [6]
    assert list(abelian_invariants(builtin("C2xC4")).factors) == [2, 4]
    assert list(abelian_invariants(builtin("1")).factors) == []
    with pytest.raises(NotAbelian):
        abelian_invariants(builtin("S3"))


@pytest.mark.parametrize("G", CORPUS, ids=DEFAULT_CORPUS)
def test_abelianization_order(G):
    Gab, _ = quotient(G, derived_subgroup(G))
    assert abelian_invariants(Gab).order == G.order // derived_subgroup(G).order


def test_generator_counts():
    assert minimal_generator_count(builtin("1")) == 0
    assert minimal_generator_count(builtin("C6")) == 1
    assert minimal_generator_count(builtin("D4")) == 2
    assert minimal_generator_count(builtin("E2^4")) == 4
    assert minimal_generator_count(builtin("S4")) == 2


@pytest.mark.parametrize("name", SMALL_P_GROUPS + ORDER_16)
def test_burnside_count(name):
    G = builtin(name)
    p = int(G.element_orders[G.element_orders > 1].min())
    index = G.order // frattini_subgroup(G).order
    assert p ** minimal_generator_count(G) == index


def test_isomorphism_examples(d4, q8):
    assert find_isomorphism(builtin("C4"), builtin("C2xC2")) is None
    assert find_isomorphism(d4, q8) is None
    assert find_isomorphism(builtin("D6"), builtin("S3xC2")) is not None


@given(st.sampled_from(["S3", "D4", "Q8", "C2xC4", "D6", "A4", "C4:C4", "SD16"]), st.randoms(use_true_random=False))
def test_relabeling_isomorphic(name, rnd):
    G = builtin(name)
    rest = list(range(1, G.order))
    rnd.shuffle(rest)
    H = relabel(G, [0] + rest)
    phi = find_isomorphism(G, H)
    assert phi is not None and phi.is_bijective and phi.is_homomorphism()


@given(st.sampled_from(ORDER_16), st.sampled_from(ORDER_16))
def test_isomorphism_symmetric(a, b):
    G, H = builtin(a), builtin(b)
    assert are_isomorphic(G, H) == are_isomorphic(H, G) == (a == b)


def test_direct_product():
    P = product(builtin("C2"), builtin("C3"))
    assert P.order == 6 and P.is_abelian


def test_coprime_product_unique_subgroup():
    P = product(builtin("C4"), builtin("C3"))
    of_order_4 = {tuple(generate(P, [g]).elements) for g in range(12) if P.element_orders[g] == 4}
    assert len(of_order_4) == 1


def _center_embedding(G, D):
    z = next(g for g in center(G).elements if G.element_orders[g] == 2)
    return Homomorphism(D, G, np.array([0, z]))


def test_central_product_order(d4):
    C2, C4 = builtin("C2"), builtin("C4")
    P = product(d4, C4, mode="central", embeddings=(_center_embedding(d4, C2), _center_embedding(C4, C2)))
    assert P.order == 16
    assert are_isomorphic(P, builtin("C4oD4"))


def test_central_product_rejects_noncentral(d4):
    C2 = builtin("C2")
    t = next(g for g in range(8) if d4.element_orders[g] == 2 and g not in center(d4))
    bad = Homomorphism(C2, d4, np.array([0, t]))
    with pytest.raises(InvalidAmalgam):
        product(d4, builtin("C4"), mode="central", embeddings=(bad, _center_embedding(builtin("C4"), C2)))


def test_subgroup_mask_roundtrip(s3):
    S = derived_subgroup(s3)
    assert subgroup_from_mask(s3, S.mask) == S
    assert S <= whole_group(s3)


def test_cyclic_generator():
    G = cyclic(12)
    assert generate(G, [1]).order == 12
