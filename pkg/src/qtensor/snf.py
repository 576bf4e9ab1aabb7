"""Exact Smith normal form over the integers.

Tall sparse relation matrices are first folded into an echelon basis of
their row lattice (rank <= columns), then diagonalised with least-absolute
pivoting.  All arithmetic uses Python integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .groups import AbelianInvariants


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: tuple  # row-major tuple of tuples

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntegerMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        ncols = cols if cols is not None else (len(rows[0]) if rows else 0)
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged matrix")
        return cls(len(rows), ncols, tuple(rows))


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def _axpy(row: dict, s: int, other: Mapping[int, int], t: int) -> dict:
    """``s*row + t*other`` on sparse rows."""
    out = {k: s * v for k, v in row.items()} if s != 1 else dict(row)
    for k, v in other.items():
        nv = out.get(k, 0) + t * v
        if nv:
            out[k] = nv
        else:
            out.pop(k, None)
    return {k: v for k, v in out.items() if v}


def echelon_basis(rows: Iterable[Mapping[int, int]]) -> dict[int, dict]:
    """Incremental integer row reduction; returns ``{pivot column: row}``."""
    piv: dict[int, dict] = {}
    for r in rows:
        row = {k: v for k, v in r.items() if v}
        while row:
            c = min(row)
            b = row[c]
            if c not in piv:
                if b < 0:
                    row = {k: -v for k, v in row.items()}
                piv[c] = row
                break
            p = piv[c]
            a = p[c]
            if b % a == 0:
                row = _axpy(row, 1, p, -(b // a))
                continue
            g, s, t = _egcd(a, b)
            newp = _axpy(p, s, row, t) if s else {k: t * v for k, v in row.items()}
            row = _axpy(row, a // g, p, -(b // g))
            if newp[c] < 0:
                newp = {k: -v for k, v in newp.items()}
            piv[c] = newp
    return piv


def smith_diagonal(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Non-zero diagonal of the Smith normal form, each dividing the next."""
    A = [[int(x) for x in r] for r in matrix]
    A = [r for r in A if any(r)]
    if not A:
        return []
    m, n = len(A), len(A[0])
    diag = []
    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            Ai = A[i]
            for j in range(t, n):
                v = Ai[j]
                if v and (best is None or abs(v) < best[0]):
                    best = (abs(v), i, j)
                    if best[0] == 1:
                        break
            if best and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        A[t], A[i] = A[i], A[t]
        if j != t:
            for r in A:
                r[t], r[j] = r[j], r[t]
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                v = A[i][t]
                if v:
                    q = v // p
                    if q:
                        Ai, At = A[i], A[t]
                        for k in range(t, n):
                            if At[k]:
                                Ai[k] -= q * At[k]
                    if A[i][t]:
                        dirty = True
            for j in range(t + 1, n):
                v = A[t][j]
                if v:
                    q = v // p
                    if q:
                        for r in A[t:]:
                            if r[t]:
                                r[j] -= q * r[t]
                    if A[t][j]:
                        dirty = True
            if dirty:
                # move the smallest leftover in row/column t onto the pivot
                cands = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
                cands += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
                _, i, j = min(cands)
                if i != t:
                    A[t], A[i] = A[i], A[t]
                else:
                    for r in A:
                        r[t], r[j] = r[j], r[t]
                continue
            bad = next(
                (i for i in range(t + 1, m) if any(A[i][k] % p for k in range(t + 1, n))), None
            )
            if bad is None:
                break
            A[t] = [x + y for x, y in zip(A[t], A[bad])]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def sparse_smith_diagonal(rows: Iterable[Mapping[int, int]], cols: int) -> list[int]:
    piv = echelon_basis(rows)
    dense = [[row.get(k, 0) for k in range(cols)] for _, row in sorted(piv.items())]
    return smith_diagonal(dense)


def relation_invariants(rows: Iterable[Mapping[int, int]], cols: int) -> AbelianInvariants:
    """Abelian group ``Z^cols / <rows>`` as invariant factors plus free rank."""
    diag = sparse_smith_diagonal(rows, cols)
    return AbelianInvariants(tuple(d for d in diag if d > 1), cols - len(diag))


def matrix_invariants(matrix: Sequence[Sequence[int]]) -> AbelianInvariants:
    """Cokernel of an integer matrix whose rows are relations."""
    rows = [{j: int(v) for j, v in enumerate(r) if v} for r in matrix]
    cols = len(matrix[0]) if len(matrix) else 0
    return relation_invariants(rows, cols)
