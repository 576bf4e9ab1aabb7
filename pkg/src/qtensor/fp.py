"""Finitely presented groups: coset enumeration, realization, abelianization.

Words are tuples of non-zero signed 1-based generator indices, so ``2`` is
the second generator and ``-2`` its inverse (the same encoding as the JSON
format).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import _enum
from .errors import EnumerationLimit, InternalInconsistency
from .groups import AbelianInvariants, FiniteGroup
from .snf import relation_invariants

log = logging.getLogger(__name__)

DEFAULT_MAX_COSETS = 1_000_000
# dense Cayley tables beyond this order do not fit in memory
MAX_TABLE_ORDER = 4096

Word = tuple


def free_reduce(word: Iterable[int]) -> Word:
    out: list[int] = []
    for x in word:
        if out and out[-1] == -x:
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def cyclic_reduce(word: Iterable[int]) -> Word:
    w = list(free_reduce(word))
    i, j = 0, len(w) - 1
    while i < j and w[i] == -w[j]:
        i += 1
        j -= 1
    return tuple(w[i : j + 1])


def invert(word: Sequence[int]) -> Word:
    return tuple(-x for x in reversed(word))


def canonical_relator(word: Sequence[int]) -> Word:
    """Least cyclic rotation of the word or its inverse (identifies equivalent relators)."""
    w = cyclic_reduce(word)
    if not w:
        return w
    cands = []
    for v in (w, invert(w)):
        cands.extend(v[i:] + v[:i] for i in range(len(v)))
    return min(cands)


@dataclass(frozen=True)
class Presentation:
    generator_count: int
    relators: tuple
    generator_labels: tuple = ()

    def __post_init__(self):
        rels = tuple(free_reduce(r) for r in self.relators)
        for r in rels:
            for x in r:
                if x == 0 or abs(x) > self.generator_count:
                    raise ValueError(f"relator letter {x} out of range")
        object.__setattr__(self, "relators", rels)
        labels = tuple(self.generator_labels) or tuple(f"x{i}" for i in range(self.generator_count))
        if len(labels) != self.generator_count:
            raise ValueError("label count does not match generator count")
        object.__setattr__(self, "generator_labels", labels)

    def to_json(self) -> dict:
        return {"generators": list(self.generator_labels), "relators": [list(r) for r in self.relators]}

    @classmethod
    def from_json(cls, data: dict) -> "Presentation":
        gens = list(data["generators"])
        return cls(len(gens), tuple(tuple(int(x) for x in r) for r in data["relators"]), tuple(gens))


@dataclass(frozen=True)
class CosetTable:
    presentation: Presentation
    cosets: int
    action: np.ndarray = field(repr=False)  # cosets x 2m, column 2g is g, 2g+1 is g^-1
    status: str = "complete"

    @property
    def complete(self) -> bool:
        return self.status == "complete"

    def generator_action(self, g: int) -> np.ndarray:
        """Permutation of cosets induced by generator ``g`` (0-based)."""
        return self.action[:, 2 * g]


def _column(letter: int) -> int:
    return 2 * (letter - 1) if letter > 0 else 2 * (-letter - 1) + 1


def _pack(words: Sequence[Sequence[int]]):
    flat, start, length = [], [], []
    for w in words:
        start.append(len(flat))
        length.append(len(w))
        flat.extend(_column(x) for x in w)
    return (
        np.array(flat, dtype=np.int32),
        np.array(start, dtype=np.int64),
        np.array(length, dtype=np.int64),
    )


def _relator_tables(P: Presentation):
    """Distinct cyclic conjugates of relators and inverses, bucketed by first column."""
    canon = sorted({canonical_relator(r) for r in P.relators} - {()})
    rotations = set()
    for r in canon:
        for v in (r, invert(r)):
            rotations.update(v[i:] + v[:i] for i in range(len(v)))
    rotations = sorted(rotations, key=lambda w: (_column(w[0]), len(w), w))
    flat, start, length = _pack(rotations)
    ncols = 2 * P.generator_count
    firsts = np.array([_column(w[0]) for w in rotations], dtype=np.int64)
    col_start = np.searchsorted(firsts, np.arange(ncols + 1)).astype(np.int64)
    col_words = np.arange(len(rotations), dtype=np.int64)
    return canon, flat, start, length, col_start, col_words


def apply_word(action: np.ndarray, word: Sequence[int], cosets: np.ndarray | None = None) -> np.ndarray:
    cur = np.arange(action.shape[0]) if cosets is None else np.asarray(cosets)
    for x in word:
        cur = action[cur, _column(x)]
    return cur


def coset_enumerate(
    P: Presentation,
    subgroup_words: Sequence[Sequence[int]] = (),
    max_cosets: int = DEFAULT_MAX_COSETS,
    verify: bool = True,
) -> CosetTable:
    """Todd-Coxeter enumeration of the cosets of ``<subgroup_words>`` in ``P``.

    Returns a standardized table (coset 0 is the subgroup).  If the live
    coset count would exceed ``max_cosets`` the table has status
    ``"exceeded"`` and no action.
    """
    m = P.generator_count
    ncols = 2 * m
    if m == 0:
        return CosetTable(P, 1, np.zeros((1, 0), dtype=np.int32))
    canon, flat, start, length, col_start, col_words = _relator_tables(P)
    subs = [free_reduce(w) for w in subgroup_words]
    subs = [w for w in subs if w]
    sflat, sstart, slen = _pack(subs)
    invc = np.arange(ncols, dtype=np.int64) ^ 1
    status, table, n = _enum.enumerate_cosets(
        ncols, invc, flat, start, length, col_start, col_words,
        sflat, sstart, slen, int(max_cosets), int(min(max_cosets, 1024)),
    )
    if status != _enum.STATUS_COMPLETE:
        return CosetTable(P, 0, np.zeros((0, ncols), dtype=np.int32), status="exceeded")
    table = np.ascontiguousarray(table)
    if verify:
        idx = np.arange(n)
        for c in range(ncols):
            if not np.array_equal(table[table[:, c], c ^ 1], idx):
                raise InternalInconsistency(f"column {c} is not a permutation")
        for r in canon:
            if not np.array_equal(apply_word(table, r), idx):
                raise InternalInconsistency(f"relator {r} does not close")
        for w in subs:
            if apply_word(table, w, [0])[0] != 0:
                raise InternalInconsistency("subgroup generator does not fix coset 0")
    table.setflags(write=False)
    return CosetTable(P, int(n), table)


def regular_group(action: np.ndarray, label: str = "") -> FiniteGroup:
    """Cayley table of a group from its regular right action on cosets."""
    n, ncols = action.shape
    parent = np.full(n, -1, dtype=np.int64)
    via = np.full(n, -1, dtype=np.int64)
    parent[0] = 0
    order = [0]
    for c in order:
        for x in range(ncols):
            d = int(action[c, x])
            if parent[d] < 0:
                parent[d] = c
                via[d] = x
                order.append(d)
    mult = np.empty((n, n), dtype=np.int32)
    mult[:, 0] = np.arange(n)
    for j in order[1:]:
        mult[:, j] = action[mult[:, parent[j]], via[j]]
    return FiniteGroup(mult, label=label, validate=False)


def realize(
    P: Presentation, max_cosets: int = DEFAULT_MAX_COSETS, label: str = ""
) -> tuple[FiniteGroup, np.ndarray]:
    """The presented group as a FiniteGroup, plus the element of each generator."""
    ct = coset_enumerate(P, (), max_cosets)
    if not ct.complete:
        raise EnumerationLimit(f"enumeration exceeded {max_cosets} cosets")
    if ct.cosets > MAX_TABLE_ORDER:
        raise EnumerationLimit(f"group of order {ct.cosets} exceeds the dense-table limit {MAX_TABLE_ORDER}")
    G = regular_group(ct.action, label=label)
    gens = np.array([int(ct.action[0, 2 * g]) for g in range(P.generator_count)], dtype=np.int64)
    return G, gens


def evaluate_word(G: FiniteGroup, images: Sequence[int], word: Sequence[int]) -> int:
    """Value of a word in ``G`` under generator images."""
    cur = 0
    for x in word:
        v = images[x - 1] if x > 0 else G.inverses[images[-x - 1]]
        cur = int(G.table[cur, v])
    return cur


def exponent_matrix(P: Presentation) -> list[dict[int, int]]:
    rows = []
    for r in P.relators:
        row: dict[int, int] = {}
        for x in r:
            g = abs(x) - 1
            row[g] = row.get(g, 0) + (1 if x > 0 else -1)
        row = {k: v for k, v in row.items() if v}
        if row:
            rows.append(row)
    return rows


def abelianized_invariants(P: Presentation) -> AbelianInvariants:
    """Invariant factors of ``P`` abelianized, by Smith normal form."""
    return relation_invariants(exponent_matrix(P), P.generator_count)


# ---------------------------------------------------------------------------
# Tietze


def tietze_eliminate(P: Presentation) -> tuple[Presentation, list[Word]]:
    """Eliminate generators fixed by relators of length 1 or 2.

    Returns the new presentation and, for every original generator, a word
    in the new generators representing it.
    """
    m = P.generator_count
    subst: list[Word] = [(g + 1,) for g in range(m)]
    labels = list(P.generator_labels)
    rels = [cyclic_reduce(r) for r in P.relators]
    while True:
        k = len(labels)
        one = k  # virtual identity generator
        parent = list(range(k + 1))
        sign = [1] * (k + 1)

        def find(g):
            s = 1
            while parent[g] != g:
                s *= sign[g]
                g = parent[g]
            return g, s

        kept_rels = []
        changed = False
        for r in rels:
            if len(r) == 1:
                g, _ = find(abs(r[0]) - 1)
                if g != one:
                    parent[g] = one
                    changed = True
                continue
            if len(r) == 2 and abs(r[0]) != abs(r[1]):
                rx, sx = find(abs(r[0]) - 1)
                ry, sy = find(abs(r[1]) - 1)
                a = sx * (1 if r[0] > 0 else -1)
                b = sy * (1 if r[1] > 0 else -1)
                # rx^a * ry^b = 1
                if rx == ry:
                    if rx != one and a + b != 0:
                        kept_rels.append((rx + 1, rx + 1))
                    continue
                if rx == one:
                    parent[ry] = one
                elif ry == one:
                    parent[rx] = one
                else:
                    lo, hi = min(rx, ry), max(rx, ry)
                    # hi = lo^(-a*b)
                    parent[hi] = lo
                    sign[hi] = -a * b
                changed = True
                continue
            kept_rels.append(r)
        if not changed:
            break
        roots = [g for g in range(k) if find(g)[0] == g]
        newidx = {g: i for i, g in enumerate(roots)}
        image = []
        for g in range(k):
            root, s = find(g)
            image.append(() if root == one else ((newidx[root] + 1) * s,))

        def rewrite(w):
            out = []
            for x in w:
                v = image[abs(x) - 1]
                out.extend(v if x > 0 else invert(v))
            return free_reduce(out)

        rels = sorted({canonical_relator(rewrite(r)) for r in kept_rels} - {()})
        subst = [rewrite(w) for w in subst]
        labels = [labels[g] for g in roots]
    rels = sorted({canonical_relator(r) for r in rels} - {()})
    return Presentation(len(labels), tuple(rels), tuple(labels)), subst


def tietze_simplify(P: Presentation) -> Presentation:
    return tietze_eliminate(P)[0]
