from hypothesis import given, strategies as st
from sympy import Matrix, ZZ
from sympy.matrices.normalforms import smith_normal_form

from qtensor.snf import matrix_invariants, smith_diagonal

matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-12, 12), min_size=c, max_size=c), min_size=r, max_size=r)
    )
)


def _sympy_diag(m):
    S = smith_normal_form(Matrix(m), domain=ZZ)
    k = min(S.shape)
    return sorted(abs(int(S[i, i])) for i in range(k) if S[i, i] != 0)


@given(matrices)
def test_matches_sympy(m):
    assert sorted(abs(d) for d in smith_diagonal(m) if d) == _sympy_diag(m)


@given(matrices)
def test_divisibility_chain(m):
    d = [abs(x) for x in smith_diagonal(m) if x]
    assert all(b % a == 0 for a, b in zip(d, d[1:]))


def test_examples():
    assert list(matrix_invariants([[2, 0], [0, 4]]).factors) == [2, 4]
    assert list(matrix_invariants([[2, 1], [0, 2]]).factors) == [4]
    assert list(matrix_invariants([[6]]).factors) == [6]
    assert matrix_invariants([[0, 0]]).free_rank == 2
