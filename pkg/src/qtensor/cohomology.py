"""Schur multiplier from second cohomology, independent of tensor squares.

Normalized bar cochains with trivial coefficients give integer coboundary
matrices ``d1: C^1 -> C^2`` and ``d2: C^2 -> C^3``.  From their Smith
diagonals we count ``|H^2(G; Z_m)|`` exactly for prime powers ``m``.  The
universal coefficient theorem gives

    |H^2(G; Z_m)| = |Hom(M(G), Z_m)| * |Ext(G^ab, Z_m)|

and ``|Ext(G^ab, Z_m)| = |G^ab / m G^ab|``, so the ``Hom`` counts for
``m = p, p^2, ...`` pin down every primary component of ``M(G)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .groups import AbelianInvariants, FiniteGroup, abelian_invariants, derived_subgroup, invariants_from_primary, quotient
from .snf import sparse_smith_diagonal


def _prime_powers(n: int) -> dict[int, int]:
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def bar_boundaries(G: FiniteGroup) -> tuple[list[dict], list[dict], int, int]:
    """Rows of the normalized bar boundaries ``d2: C_2 -> C_1`` and ``d3: C_3 -> C_2``.

    Basis of ``C_k`` is the tuples of non-identity elements; the rows of the
    boundary matrices are the coboundary matrices transposed, with the same
    Smith diagonal.
    """
    n = G.order
    T = G.table
    k = n - 1
    idx1 = lambda g: g - 1
    idx2 = lambda g, h: (g - 1) * k + (h - 1)

    def add(row, key, v):
        nv = row.get(key, 0) + v
        if nv:
            row[key] = nv
        else:
            row.pop(key, None)

    d2 = []
    for g in range(1, n):
        for h in range(1, n):
            row: dict[int, int] = {}
            add(row, idx1(h), 1)
            gh = int(T[g, h])
            if gh:
                add(row, idx1(gh), -1)
            add(row, idx1(g), 1)
            d2.append(row)
    d3 = []
    for g in range(1, n):
        for h in range(1, n):
            gh = int(T[g, h])
            for l in range(1, n):
                hl = int(T[h, l])
                row = {}
                add(row, idx2(h, l), 1)
                if gh:
                    add(row, idx2(gh, l), -1)
                if hl:
                    add(row, idx2(g, hl), 1)
                add(row, idx2(g, h), -1)
                d3.append(row)
    return d2, d3, k, k * k


def _kernel_log(diag: list[int], dim: int, p: int, j: int) -> int:
    """log_p of the kernel size of a map ``Z_m^dim -> ...`` with Smith diagonal ``diag``, m = p^j."""
    m = p**j
    total = j * (dim - len(diag))
    for d in diag:
        total += _vp(math.gcd(d, m), p)
    return total


def _vp(x: int, p: int) -> int:
    e = 0
    while x % p == 0 and x > 1:
        x //= p
        e += 1
    return e


@dataclass(frozen=True)
class CohomologyData:
    order: int
    abelianization: AbelianInvariants
    h2_logs: dict  # {(p, j): log_p |H^2(G; Z_{p^j})|}
    multiplier: AbelianInvariants


def h2_cyclic_log(diag1: list[int], diag2: list[int], dim1: int, dim2: int, p: int, j: int) -> int:
    """log_p |H^2(G; Z_{p^j})| from the Smith diagonals of the two coboundaries."""
    ker2 = _kernel_log(diag2, dim2, p, j)
    ker1 = _kernel_log(diag1, dim1, p, j)
    im1 = j * dim1 - ker1
    return ker2 - im1


def schur_multiplier_cohomology(G: FiniteGroup) -> CohomologyData:
    """``M(G)`` via ``H^2(G; Z_{p^j})`` for every prime power dividing ``|G|``."""
    Gab, _ = quotient(G, derived_subgroup(G))
    ab = abelian_invariants(Gab)
    if G.order == 1:
        return CohomologyData(1, ab, {}, AbelianInvariants(()))
    d2, d3, dim1, dim2 = bar_boundaries(G)
    diag1 = sparse_smith_diagonal(d2, dim1)
    diag2 = sparse_smith_diagonal(d3, dim2)
    logs = {}
    parts = {}
    for p, top in _prime_powers(G.order).items():
        hom = [0]
        for j in range(1, top + 1):
            h = h2_cyclic_log(diag1, diag2, dim1, dim2, p, j)
            logs[(p, j)] = h
            ext = sum(_vp(math.gcd(a, p**j), p) for a in ab.factors)
            hom.append(h - ext)
        # hom[j] = sum_i min(e_i, j); exponents of M are bounded by top
        ge = [hom[j] - hom[j - 1] for j in range(1, top + 1)] + [0]
        exps = []
        for j in range(top):
            exps += [j + 1] * (ge[j] - ge[j + 1])
        parts[p] = exps
    return CohomologyData(G.order, ab, logs, AbelianInvariants(invariants_from_primary(parts)))
