import pytest

from qtensor import builtin
from qtensor.cohomology import bar_boundaries, schur_multiplier_cohomology
from qtensor.groups import abelian_invariants, as_group
from qtensor.tensor import multipliers, realize_wedge

# Schur multipliers of standard small groups
KNOWN = {
    "1": (), "C2": (), "C4": (), "C6": (), "S3": (), "Q8": (),
    "C2xC2": (2,), "D4": (2,), "C2xC4": (2,), "D6": (2,), "C3xC3": (3,), "A4": (2,),
    "E2^3": (2, 2, 2),
}


@pytest.mark.parametrize("name", sorted(KNOWN))
def test_known_multipliers(name):
    assert schur_multiplier_cohomology(builtin(name)).multiplier.factors == KNOWN[name]


@pytest.mark.parametrize("name", ["C2xC2", "S3", "D4", "Q8", "C2xC4", "E2^3", "D6", "C3xC3"])
def test_matches_kernel_of_eta(name):
    G = builtin(name)
    M = multipliers(realize_wedge(G, 0)).M_q
    local, _ = as_group(M)
    assert abelian_invariants(local).factors == schur_multiplier_cohomology(G).multiplier.factors


def test_boundary_composite_vanishes():
    G = builtin("S3")
    d2, d3, dim1, dim2 = bar_boundaries(G)
    for row in d3:
        acc = {}
        for j, v in row.items():
            for k, w in d2[j].items():
                acc[k] = acc.get(k, 0) + v * w
        assert not any(acc.values())
