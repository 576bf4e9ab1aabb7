import pytest
from hypothesis import given, strategies as st

from qtensor import builtin
from qtensor.errors import EnumerationLimit
from qtensor.fp import (
    Presentation,
    abelianized_invariants,
    coset_enumerate,
    cyclic_reduce,
    evaluate_word,
    free_reduce,
    invert,
    realize,
    tietze_simplify,
)
from qtensor.groups import are_isomorphic

S3_PRES = Presentation(2, ((1, 1), (2, 2), (1, 2, 1, 2, 1, 2)))
letters = st.integers(-3, 3).filter(bool)
words = st.lists(letters, max_size=20)


def _naive_reduce(w):
    w = list(w)
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i] == -w[i + 1]:
                del w[i : i + 2]
                changed = True
                break
    return tuple(w)


@given(words)
def test_free_reduce_matches_naive(w):
    assert tuple(free_reduce(w)) == _naive_reduce(w)


@given(words)
def test_invert_cancels(w):
    assert tuple(free_reduce(list(w) + list(invert(w)))) == ()


@given(words)
def test_cyclic_reduce_is_reduced(w):
    c = tuple(cyclic_reduce(w))
    assert _naive_reduce(c) == c
    assert not (len(c) > 1 and c[0] == -c[-1])


def test_cyclic_counts():
    assert coset_enumerate(Presentation(1, ((1,) * 5,))).cosets == 5
    assert coset_enumerate(S3_PRES).cosets == 6
    assert coset_enumerate(Presentation(1, ()), [(1, 1)]).cosets == 2


def test_realize_c3():
    G, gens = realize(Presentation(1, ((1, 1, 1),)))
    assert G.order == 3 and G.element_orders[gens[0]] == 3


def test_realize_s3():
    G, _ = realize(S3_PRES)
    assert are_isomorphic(G, builtin("S3"))


def test_infinite_is_capped():
    with pytest.raises(EnumerationLimit):
        realize(Presentation(1, ()), max_cosets=1000)


@given(st.lists(st.integers(1, 2).flatmap(lambda g: st.sampled_from([g, -g])), max_size=30))
def test_words_evaluate_consistently(w):
    G, gens = realize(S3_PRES)
    left = evaluate_word(G, gens, w)
    right = evaluate_word(G, gens, free_reduce(w))
    assert left == right
    assert G.table[left, evaluate_word(G, gens, invert(w))] == 0


def test_abelianized():
    assert list(abelianized_invariants(Presentation(2, ((1, 1), (2, 2, 2, 2)))).factors) == [2, 4]
    assert list(abelianized_invariants(Presentation(1, ((1,) * 6,))).factors) == [6]
    # rows (2,1) and (0,2): a^2 b, b^2
    assert list(abelianized_invariants(Presentation(2, ((1, 1, 2), (2, 2)))).factors) == [4]


def test_free_rank():
    inv = abelianized_invariants(Presentation(2, ((1, 1),)))
    assert inv.free_rank == 1 and list(inv.factors) == [2]


def test_tietze():
    P = tietze_simplify(Presentation(2, ((2, -1), (2, 2, 2))))
    assert P.generator_count == 1
    assert realize(P)[0].order == 3
    Q = tietze_simplify(S3_PRES)
    assert len(Q.relators) <= len(S3_PRES.relators)
    assert realize(Q)[0].order == 6


def test_json_roundtrip():
    assert Presentation.from_json(S3_PRES.to_json()) == S3_PRES
