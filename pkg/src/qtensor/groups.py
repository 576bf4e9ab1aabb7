"""Finite groups stored as multiplication tables.

Elements are integers ``0..n-1`` with the identity fixed at ``0``.  Subgroups
are sorted tuples of element indices and homomorphisms are image arrays.
"""

from __future__ import annotations

import hashlib
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import InternalInconsistency, InvalidAmalgam, InvalidGroup, NotAbelian, NotNormal, SearchCap

# Groups up to this order get full associativity checks on construction.
VALIDATE_ASSOCIATIVITY_UP_TO = 256


class FiniteGroup:
    """A finite group given by its Cayley table (``table[g, h] = g*h``)."""

    def __init__(self, table, label: str = "", validate: bool = True):
        t = np.array(table, dtype=np.int32, copy=True)
        if t.ndim != 2 or t.shape[0] != t.shape[1] or t.shape[0] == 0:
            raise InvalidGroup("table must be a non-empty square array")
        if validate:
            _validate_table(t)
        t.setflags(write=False)
        self.table = t
        self.label = label

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.label or '?'}, order={self.order})"

    @cached_property
    def key(self) -> str:
        """Content hash of the table, used for memoising expensive constructions."""
        return hashlib.sha1(self.table.tobytes() + str(self.order).encode()).hexdigest()

    @cached_property
    def inverses(self) -> np.ndarray:
        inv = np.argmax(self.table == 0, axis=1).astype(np.int32)
        inv.setflags(write=False)
        return inv

    @cached_property
    def element_orders(self) -> np.ndarray:
        n = self.order
        idx = np.arange(n)
        orders = np.zeros(n, dtype=np.int64)
        cur = idx.copy()
        k = 1
        while True:
            hit = (cur == 0) & (orders == 0)
            orders[hit] = k
            if orders.all():
                break
            cur = self.table[cur, idx]
            k += 1
        orders.setflags(write=False)
        return orders

    @cached_property
    def exponent(self) -> int:
        return int(np.lcm.reduce(self.element_orders))

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    def mul(self, a: int, b: int) -> int:
        return int(self.table[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverses[a])

    def pow(self, a: int, k: int) -> int:
        k %= int(self.element_orders[a])
        r = 0
        base = a
        while k:
            if k & 1:
                r = int(self.table[r, base])
            base = int(self.table[base, base])
            k >>= 1
        return r

    def pow_all(self, k: int) -> np.ndarray:
        """Array of ``g**k`` for every element ``g``."""
        if k < 0:
            return self.pow_all(-k)[self.inverses]
        idx = np.arange(self.order)
        result = np.zeros(self.order, dtype=np.int32)
        base = idx.astype(np.int32)
        while k:
            if k & 1:
                result = self.table[result, base]
            base = self.table[base, base]
            k >>= 1
        return result

    def conj(self, g: int, h: int) -> int:
        """Left conjugation ``g h g^-1``."""
        return int(self.table[self.table[g, h], self.inverses[g]])

    def comm(self, g: int, h: int) -> int:
        """Commutator ``g h g^-1 h^-1``."""
        t = self.table
        inv = self.inverses
        return int(t[t[t[g, h], inv[g]], inv[h]])

    @cached_property
    def commutator_table(self) -> np.ndarray:
        t = self.table
        inv = self.inverses
        gh = t
        c = t[t[gh, inv[:, None]], inv[None, :]]
        c.setflags(write=False)
        return c

    @cached_property
    def class_sizes(self) -> np.ndarray:
        t = self.table
        conj = t[t[:, :], self.inverses[:, None]]  # conj[x, g] = x g x^-1
        sizes = np.array([len(np.unique(conj[:, g])) for g in range(self.order)])
        sizes.setflags(write=False)
        return sizes

    def elements(self) -> range:
        return range(self.order)


def _validate_table(t: np.ndarray) -> None:
    n = t.shape[0]
    if t.min() < 0 or t.max() >= n:
        raise InvalidGroup("table entries out of range")
    want = np.arange(n)
    if not (np.sort(t, axis=1) == want).all() or not (np.sort(t, axis=0) == want[:, None]).all():
        raise InvalidGroup("table is not a Latin square")
    if not ((t[0] == want).all() and (t[:, 0] == want).all()):
        raise InvalidGroup("element 0 is not the identity")
    if n <= VALIDATE_ASSOCIATIVITY_UP_TO:
        left = t[t[:, :, None], want[None, None, :]]  # (ab)c
        right = t[want[:, None, None], t[None, :, :]]  # a(bc)
        if not (left == right).all():
            raise InvalidGroup("table is not associative")


def reindex_identity_first(table) -> np.ndarray:
    """Relabel a Cayley table so its identity element becomes index 0."""
    t = np.asarray(table, dtype=np.int64)
    n = t.shape[0]
    cands = [e for e in range(n) if (t[e] == np.arange(n)).all() and (t[:, e] == np.arange(n)).all()]
    if not cands:
        raise InvalidGroup("table has no identity element")
    e = cands[0]
    perm = np.arange(n)
    perm[[0, e]] = perm[[e, 0]]  # perm maps new index -> old index
    back = np.argsort(perm)
    return back[t[np.ix_(perm, perm)]]


# ---------------------------------------------------------------------------
# subgroups


@dataclass(frozen=True, eq=False)
class Subgroup:
    parent: FiniteGroup
    elements: tuple

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g) -> bool:
        return bool(self.mask[g])

    @cached_property
    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[list(self.elements)] = True
        m.setflags(write=False)
        return m

    @cached_property
    def array(self) -> np.ndarray:
        return np.array(self.elements, dtype=np.int64)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subgroup)
            and other.elements == self.elements
            # equal tables are the same group; the caches rely on this
            and (other.parent is self.parent or other.parent.key == self.parent.key)
        )

    def __hash__(self) -> int:
        return hash((self.parent.key, self.elements))

    def __le__(self, other: "Subgroup") -> bool:
        return bool(np.all(other.mask[list(self.elements)]))

    def __repr__(self) -> str:
        return f"Subgroup(order={self.order} of {self.parent.label or '?'})"


def subgroup_from_mask(G: FiniteGroup, mask: np.ndarray) -> Subgroup:
    return Subgroup(G, tuple(int(x) for x in np.flatnonzero(mask)))


def closure_mask(G: FiniteGroup, gens: Iterable[int]) -> np.ndarray:
    gens = np.unique(np.asarray(list(gens), dtype=np.int64))
    gens = gens[gens != 0]
    mask = np.zeros(G.order, dtype=bool)
    mask[0] = True
    if gens.size == 0:
        return mask
    frontier = np.array([0], dtype=np.int64)
    while frontier.size:
        nxt = G.table[np.ix_(frontier, gens)].ravel()
        nxt = np.unique(nxt)
        nxt = nxt[~mask[nxt]]
        mask[nxt] = True
        frontier = nxt
    return mask


def generate(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    return subgroup_from_mask(G, closure_mask(G, gens))


def trivial_subgroup(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, (0,))


def whole_group(G: FiniteGroup) -> Subgroup:
    return Subgroup(G, tuple(range(G.order)))


def is_subgroup(G: FiniteGroup, elements: Iterable[int]) -> bool:
    els = np.unique(np.asarray(list(elements), dtype=np.int64))
    if els.size == 0 or els[0] != 0:
        return False
    mask = np.zeros(G.order, dtype=bool)
    mask[els] = True
    return bool(mask[G.table[np.ix_(els, els)]].all())


def normal_closure(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    """Smallest normal subgroup containing ``gens``."""
    gens = np.unique(np.asarray(list(gens), dtype=np.int64))
    if gens.size == 0:
        return trivial_subgroup(G)
    allg = np.arange(G.order)
    conjugates = G.table[G.table[allg[:, None], gens[None, :]], G.inverses[allg][:, None]]
    return generate(G, np.unique(conjugates))


def is_normal(G: FiniteGroup, N: Subgroup) -> bool:
    allg = np.arange(G.order)
    els = N.array
    conj = G.table[G.table[allg[:, None], els[None, :]], G.inverses[allg][:, None]]
    return bool(N.mask[conj].all())


def intersection(A: Subgroup, B: Subgroup) -> Subgroup:
    return subgroup_from_mask(A.parent, A.mask & B.mask)


def join(A: Subgroup, B: Subgroup) -> Subgroup:
    return generate(A.parent, list(A.elements) + list(B.elements))


def product_set(A: Subgroup, B: Subgroup) -> np.ndarray:
    """Mask of the set ``AB``."""
    G = A.parent
    mask = np.zeros(G.order, dtype=bool)
    mask[G.table[np.ix_(A.array, B.array)].ravel()] = True
    return mask


def center(G: FiniteGroup) -> Subgroup:
    return subgroup_from_mask(G, (G.table == G.table.T).all(axis=1))


def centralizer(G: FiniteGroup, elements: Iterable[int]) -> Subgroup:
    els = np.asarray(list(elements), dtype=np.int64)
    if els.size == 0:
        return whole_group(G)
    return subgroup_from_mask(G, (G.table[:, els] == G.table[els, :].T).all(axis=1))


def derived_subgroup(G: FiniteGroup) -> Subgroup:
    return generate(G, np.unique(G.commutator_table))


def power_commutator_subgroup(G: FiniteGroup, q: int) -> Subgroup:
    """The subgroup ``G^q [G,G]`` generated by all q-th powers and commutators."""
    gens = np.unique(G.commutator_table)
    if q != 0:
        gens = np.union1d(gens, G.pow_all(q))
    return generate(G, gens)


def power_subgroup(G: FiniteGroup, q: int) -> Subgroup:
    return generate(G, G.pow_all(q))


def _mask_to_int(mask: np.ndarray) -> int:
    return int.from_bytes(np.packbits(mask, bitorder="little").tobytes(), "little")


def _int_to_mask(bits: int, n: int) -> np.ndarray:
    raw = np.frombuffer(bits.to_bytes((n + 7) // 8, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:n].astype(bool)


def cyclic_subgroups(G: FiniteGroup) -> list[Subgroup]:
    seen = {}
    for g in range(G.order):
        m = closure_mask(G, [g])
        key = _mask_to_int(m)
        if key not in seen:
            seen[key] = subgroup_from_mask(G, m)
    return sorted(seen.values(), key=lambda s: (s.order, s.elements))


def all_subgroups(G: FiniteGroup, cap: int = 20000) -> list[Subgroup]:
    """Every subgroup of ``G``, built by joining cyclic subgroups until closed.

    Sorted by (order, elements).  Raises :class:`SearchCap` past ``cap``
    subgroups.
    """
    n = G.order
    cyc = []
    cyc_bits = []
    for C in cyclic_subgroups(G):
        cyc.append(C)
        cyc_bits.append(_mask_to_int(C.mask))
    # generator of each cyclic subgroup: its smallest element of full order
    cyc_gen = []
    for C in cyc:
        gen = next((g for g in C.elements if G.element_orders[g] == C.order), 0)
        cyc_gen.append(gen)
    found = {1: ()}  # bits -> generating tuple
    frontier = [1]
    for b, g in zip(cyc_bits, cyc_gen):
        if b not in found:
            found[b] = (g,) if g else ()
    frontier = [b for b in found]
    while frontier:
        new = []
        for hb in frontier:
            hgens = found[hb]
            for cb, g in zip(cyc_bits, cyc_gen):
                if cb & ~hb == 0:
                    continue
                jm = closure_mask(G, hgens + (g,))
                jb = _mask_to_int(jm)
                if jb not in found:
                    found[jb] = hgens + (g,)
                    new.append(jb)
                    if len(found) > cap:
                        raise SearchCap(f"more than {cap} subgroups")
        frontier = new
    subs = [subgroup_from_mask(G, _int_to_mask(b, n)) for b in found]
    return sorted(subs, key=lambda s: (s.order, s.elements))


def maximal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    proper = [S for S in all_subgroups(G) if S.order < G.order]
    result = []
    for S in proper:
        if not any(S.order < T.order and S <= T for T in proper):
            result.append(S)
    return result


def frattini_subgroup(G: FiniteGroup) -> Subgroup:
    maxes = maximal_subgroups(G)
    mask = np.ones(G.order, dtype=bool)
    for M in maxes:
        mask &= M.mask
    return subgroup_from_mask(G, mask)


def normal_subgroups(G: FiniteGroup) -> list[Subgroup]:
    return [S for S in all_subgroups(G) if is_normal(G, S)]


# ---------------------------------------------------------------------------
# homomorphisms


@dataclass(frozen=True, eq=False)
class Homomorphism:
    source: FiniteGroup
    target: FiniteGroup
    images: np.ndarray

    def __call__(self, g: int) -> int:
        return int(self.images[g])

    def kernel(self) -> Subgroup:
        return subgroup_from_mask(self.source, self.images == 0)

    def image(self) -> Subgroup:
        mask = np.zeros(self.target.order, dtype=bool)
        mask[self.images] = True
        return subgroup_from_mask(self.target, mask)

    @property
    def is_injective(self) -> bool:
        return len(np.unique(self.images)) == self.source.order

    @property
    def is_bijective(self) -> bool:
        return self.is_injective and self.source.order == self.target.order

    def is_homomorphism(self) -> bool:
        im = self.images
        return bool((im[self.source.table] == self.target.table[np.ix_(im, im)]).all())

    def compose(self, other: "Homomorphism") -> "Homomorphism":
        """``self`` after ``other``."""
        return Homomorphism(other.source, self.target, self.images[other.images])

    def inverse(self) -> "Homomorphism":
        inv = np.empty(self.target.order, dtype=np.int64)
        inv[self.images] = np.arange(self.source.order)
        return Homomorphism(self.target, self.source, inv)


def identity_hom(G: FiniteGroup) -> Homomorphism:
    return Homomorphism(G, G, np.arange(G.order))


def extend_generator_images(
    G: FiniteGroup, gens: Sequence[int], H: FiniteGroup, imgs: Sequence[int]
) -> np.ndarray | None:
    """Extend ``gens[i] -> imgs[i]`` to a homomorphism on ``<gens>``.

    Returns an image array (``-1`` outside the generated subgroup), or
    ``None`` when the assignment does not extend.
    """
    img = np.full(G.order, -1, dtype=np.int64)
    img[0] = 0
    gens = [int(g) for g in gens]
    imgs = [int(h) for h in imgs]
    frontier = np.array([0], dtype=np.int64)
    while frontier.size:
        fresh = []
        for g, h in zip(gens, imgs):
            y = G.table[frontier, g].astype(np.int64)
            v = H.table[img[frontier], h]
            unseen = img[y] < 0
            if unseen.any():
                ys, first = np.unique(y[unseen], return_index=True)
                img[ys] = v[unseen][first]
                fresh.append(ys)
        frontier = np.unique(np.concatenate(fresh)) if fresh else np.array([], dtype=np.int64)
    dom = np.flatnonzero(img >= 0)
    for g, h in zip(gens, imgs):
        if (img[G.table[dom, g]] != H.table[img[dom], h]).any():
            return None
    return img


def hom_from_generators(
    G: FiniteGroup, gens: Sequence[int], H: FiniteGroup, imgs: Sequence[int]
) -> Homomorphism | None:
    """The homomorphism ``G -> H`` sending ``gens`` to ``imgs``, if it exists."""
    img = extend_generator_images(G, gens, H, imgs)
    if img is None or (img < 0).any():
        return None
    return Homomorphism(G, H, img)


def as_group(S: Subgroup, label: str = "") -> tuple[FiniteGroup, Homomorphism]:
    """A subgroup as a standalone group, with its embedding into the parent."""
    G = S.parent
    els = S.array
    local = np.full(G.order, -1, dtype=np.int64)
    local[els] = np.arange(len(els))
    table = local[G.table[np.ix_(els, els)]]
    sub = FiniteGroup(table, label=label, validate=False)
    return sub, Homomorphism(sub, G, els.copy())


def restrict_subgroup(S: Subgroup, emb: Homomorphism, sub: FiniteGroup) -> Subgroup:
    """Pull a subgroup of the parent back along an embedding ``sub -> parent``."""
    return subgroup_from_mask(sub, S.mask[emb.images])


def quotient(G: FiniteGroup, N: Subgroup, label: str = "") -> tuple[FiniteGroup, Homomorphism]:
    """``G/N`` with its projection; cosets numbered by first appearance."""
    if not is_normal(G, N):
        raise NotNormal("subgroup is not normal")
    labels = np.full(G.order, -1, dtype=np.int64)
    reps = []
    for g in range(G.order):
        if labels[g] < 0:
            labels[G.table[g, N.array]] = len(reps)
            reps.append(g)
    reps = np.array(reps, dtype=np.int64)
    table = labels[G.table[np.ix_(reps, reps)]]
    Q = FiniteGroup(table, label=label or f"{G.label}/N", validate=False)
    return Q, Homomorphism(G, Q, labels)


# ---------------------------------------------------------------------------
# invariants


@dataclass(frozen=True)
class AbelianInvariants:
    """Invariant factors ``d_1 | d_2 | ...``; ``free_rank`` counts copies of Z."""

    factors: tuple = ()
    free_rank: int = 0

    @property
    def order(self) -> int:
        if self.free_rank:
            return 0
        return math.prod(self.factors)

    def as_list(self) -> list[int]:
        return list(self.factors) + [0] * self.free_rank


def invariants_from_primary(parts: dict[int, list[int]]) -> tuple:
    """Combine prime-power exponents ``{p: [e1, e2, ...]}`` into invariant factors."""
    width = max((len(v) for v in parts.values()), default=0)
    factors = [1] * width
    for p, exps in parts.items():
        exps = sorted(exps, reverse=True)
        for i, e in enumerate(exps):
            factors[i] *= p**e
    return tuple(sorted(f for f in factors if f > 1))


def _prime_factors(n: int) -> list[int]:
    ps = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            ps.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        ps.append(n)
    return ps


def abelian_invariants(G: FiniteGroup) -> AbelianInvariants:
    if not G.is_abelian:
        raise NotAbelian(f"{G.label or 'group'} is not abelian")
    orders = G.element_orders
    parts = {}
    for p in _prime_factors(G.order):
        # |{g : g^(p^j) = 1}| = p^(sum_i min(e_i, j))
        logs = [0]
        j = 1
        while True:
            cnt = int(np.sum((p**j) % orders == 0))
            logs.append(round(math.log(cnt, p)))
            if cnt == G.order or logs[-1] == logs[-2] and j > 1:
                break
            j += 1
        # number of cyclic factors with exponent >= j
        ge = [logs[j] - logs[j - 1] for j in range(1, len(logs))]
        exps = []
        for j in range(len(ge)):
            nxt = ge[j + 1] if j + 1 < len(ge) else 0
            exps += [j + 1] * (ge[j] - nxt)
        parts[p] = exps
    return AbelianInvariants(invariants_from_primary(parts))


def sylow_subgroups_if_nilpotent(G: FiniteGroup) -> dict[int, Subgroup] | None:
    """``{p: P}`` when every Sylow subgroup is normal (``G`` nilpotent), else None."""
    out = {}
    orders = G.element_orders
    for p in _prime_factors(G.order):
        pk = p ** _valuation(G.order, p)
        mask = (pk % orders) == 0
        if int(mask.sum()) != pk:
            return None
        out[p] = subgroup_from_mask(G, mask)
    return out


def _valuation(n: int, p: int) -> int:
    e = 0
    while n % p == 0:
        n //= p
        e += 1
    return e


def _burnside_basis(G: FiniteGroup, P: Subgroup, p: int) -> list[int]:
    """Elements of ``P`` whose images form a basis of ``P/Phi(P)``, with ``Phi(P) = P^p[P,P]``."""
    local, emb = as_group(P)
    phi = power_commutator_subgroup(local, p)
    basis: list[int] = []
    span = phi.mask.copy()
    for g in sorted(range(local.order), key=lambda g: (-int(local.element_orders[g]), g)):
        if not span[g]:
            basis.append(g)
            span = closure_mask(local, basis + list(phi.elements))
    return [int(emb.images[g]) for g in basis]


def minimal_generating_set(G: FiniteGroup, exhaustive_up_to: int = 64) -> tuple:
    """A generating set of minimum size.

    Nilpotent groups use a basis of ``P/Phi(P)`` for every Sylow ``P``,
    multiplied together coordinatewise, which is minimal by the Burnside basis
    theorem.  Other groups are searched exhaustively up to ``exhaustive_up_to``
    elements and greedily beyond.
    """
    if G.order == 1:
        return ()
    sylow = sylow_subgroups_if_nilpotent(G)
    if sylow is not None:
        bases = [_burnside_basis(G, P, p) for p, P in sylow.items()]
        width = max(len(b) for b in bases)
        gens = []
        for i in range(width):
            g = 0
            for b in bases:
                if i < len(b):
                    g = int(G.table[g, b[i]])
            gens.append(g)
        if not closure_mask(G, gens).all():
            raise InternalInconsistency("Burnside basis does not generate")
        return tuple(gens)
    if G.order > exhaustive_up_to:
        return greedy_generating_set(G)
    # one generator per cyclic subgroup suffices
    reps = []
    for C in cyclic_subgroups(G):
        if C.order > 1:
            reps.append(next(g for g in C.elements if G.element_orders[g] == C.order))
    reps.sort(key=lambda g: (-int(G.element_orders[g]), g))
    from itertools import combinations

    for k in range(1, len(reps) + 1):
        for combo in combinations(reps, k):
            if closure_mask(G, combo).all():
                return tuple(combo)
    raise AssertionError("group is not generated by its elements")


def greedy_generating_set(G: FiniteGroup) -> tuple:
    gens = []
    mask = closure_mask(G, [])
    order = sorted(range(G.order), key=lambda g: (-int(G.element_orders[g]), g))
    for g in order:
        if mask.all():
            break
        if not mask[g]:
            gens.append(g)
            mask = closure_mask(G, gens)
    # drop redundant generators
    for g in list(gens):
        rest = [x for x in gens if x != g]
        if closure_mask(G, rest).all():
            gens = rest
    return tuple(gens)


def minimal_generator_count(G: FiniteGroup) -> int:
    return len(minimal_generating_set(G))


def _profile(G: FiniteGroup) -> np.ndarray:
    if G.order <= 2048:
        return G.element_orders * (G.order + 1) + G.class_sizes
    return G.element_orders.copy()


def _quick_reject(G: FiniteGroup, H: FiniteGroup) -> bool:
    if G.order != H.order or G.is_abelian != H.is_abelian:
        return True
    if not np.array_equal(np.sort(G.element_orders), np.sort(H.element_orders)):
        return True
    if center(G).order != center(H).order:
        return True
    if derived_subgroup(G).order != derived_subgroup(H).order:
        return True
    if not np.array_equal(np.sort(_profile(G)), np.sort(_profile(H))):
        return True
    return False


def iter_isomorphisms(G: FiniteGroup, H: FiniteGroup, check_invariants: bool = True) -> Iterator[Homomorphism]:
    """All isomorphisms ``G -> H`` in a deterministic order."""
    if check_invariants and _quick_reject(G, H):
        return
    if G.order == 1:
        yield Homomorphism(G, H, np.zeros(1, dtype=np.int64))
        return
    gens = list(minimal_generating_set(G))
    pg, ph = _profile(G), _profile(H)
    cands = [np.flatnonzero(ph == pg[g]) for g in gens]
    # fewest candidates first
    order = sorted(range(len(gens)), key=lambda i: (len(cands[i]), int(G.element_orders[gens[i]]), gens[i]))
    gens = [gens[i] for i in order]
    cands = [cands[i] for i in order]

    def rec(depth: int, imgs: list[int]):
        if depth == len(gens):
            img = extend_generator_images(G, gens, H, imgs)
            if img is not None and (img >= 0).all() and len(np.unique(img)) == H.order:
                yield Homomorphism(G, H, img)
            return
        for h in cands[depth]:
            h = int(h)
            trial = imgs + [h]
            img = extend_generator_images(G, gens[: depth + 1], H, trial)
            if img is None:
                continue
            dom = img[img >= 0]
            if len(np.unique(dom)) != len(dom):
                continue
            yield from rec(depth + 1, trial)

    yield from rec(0, [])


def find_isomorphism(G: FiniteGroup, H: FiniteGroup) -> Homomorphism | None:
    return next(iter_isomorphisms(G, H), None)


def are_isomorphic(G: FiniteGroup, H: FiniteGroup) -> bool:
    return find_isomorphism(G, H) is not None


# ---------------------------------------------------------------------------
# products


def direct_product(G: FiniteGroup, H: FiniteGroup, label: str = "") -> FiniteGroup:
    m = H.order
    a = np.arange(G.order * m)
    g, h = a // m, a % m
    table = G.table[np.ix_(g, g)] * m + H.table[np.ix_(h, h)]
    return FiniteGroup(table, label=label or f"{G.label}x{H.label}", validate=False)


def product(
    G: FiniteGroup,
    H: FiniteGroup,
    mode: str = "direct",
    embeddings: tuple[Homomorphism, Homomorphism] | None = None,
    label: str = "",
) -> FiniteGroup:
    """Direct product, or central product amalgamating a common subgroup ``D``.

    For ``mode="central"`` pass ``embeddings=(D->G, D->H)``; both must be
    injective with central image.  The result is ``(G x H)/{(d, d^-1)}``.
    """
    P = direct_product(G, H)
    if mode == "direct":
        if label:
            P.label = label
        return P
    if mode != "central" or embeddings is None:
        raise InvalidAmalgam("central mode needs a pair of embeddings")
    eg, eh = embeddings
    if eg.source.order != eh.source.order:
        raise InvalidAmalgam("embeddings have different sources")
    for e, X in ((eg, G), (eh, H)):
        if not e.is_homomorphism() or not e.is_injective:
            raise InvalidAmalgam("embedding is not an injective homomorphism")
        if not all(int(x) in center(X) for x in e.images):
            raise InvalidAmalgam("embedded subgroup is not central")
    D = eg.source
    m = H.order
    N = generate(P, [int(eg.images[d]) * m + int(H.inverses[eh.images[d]]) for d in range(D.order)])
    Q, _ = quotient(P, N, label=label or f"{G.label}o{H.label}")
    return Q
