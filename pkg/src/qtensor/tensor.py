"""The q-tensor square, q-exterior square and the multipliers built on them.

Generators of the presentation of ``G (x)^q G`` are indexed by group
elements: ``t(g,h)`` is generator ``g*n + h`` and, for ``q >= 1``, the hat
symbol ``{(g,g)}`` is generator ``n*n + g``.  Conjugation is on the left,
``^g h = g h g^-1``, and commutators are ``[g,h] = g h g^-1 h^-1``.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import EnumerationLimit, HypothesisNotMet, InternalInconsistency, OrderLimit
from .fp import DEFAULT_MAX_COSETS, Presentation, evaluate_word, realize, tietze_eliminate
from .groups import (
    AbelianInvariants,
    FiniteGroup,
    Homomorphism,
    Subgroup,
    abelian_invariants,
    as_group,
    center,
    generate,
    hom_from_generators,
    is_normal,
    normal_closure,
    quotient,
    subgroup_from_mask,
)

log = logging.getLogger(__name__)

DEFAULT_MAX_BASE_ORDER = 16


def t_index(n: int, g: int, h: int) -> int:
    return g * n + h + 1  # 1-based signed letter


def y_index(n: int, g: int) -> int:
    return n * n + g + 1


def generator_labels(G: FiniteGroup, q: int) -> tuple:
    n = G.order
    labels = [f"t_{g}_{h}" for g in range(n) for h in range(n)]
    if q >= 1:
        labels += [f"y_{g}" for g in range(n)]
    return tuple(labels)


def hat_product_word(G: FiniteGroup, q: int, g: int, g1: int) -> list[int]:
    """The product over i = 1..q-1 of t(g^-1, (^(g^(1-q+i)) g1)^i), in order."""
    n = G.order
    ginv = G.inv(g)
    word = []
    for i in range(1, q):
        c = G.pow(g, 1 - q + i)
        x = G.pow(G.conj(c, g1), i)
        word.append(t_index(n, ginv, x))
    return word


def tensor_relators(G: FiniteGroup, q: int) -> list[tuple]:
    n = G.order
    T = G.table
    inv = G.inverses
    conj = T[T, inv[:, None]]  # conj[g, h] = g h g^-1
    rels = []
    t = lambda a, b: t_index(n, int(a), int(b))
    for g in range(n):
        for g1 in range(n):
            gg1 = int(T[g, g1])
            for h in range(n):
                # g g1 (x) h = (^g g1 (x) ^g h)(g (x) h)
                rels.append((-t(gg1, h), t(conj[g, g1], conj[g, h]), t(g, h)))
    for g in range(n):
        for h in range(n):
            for h1 in range(n):
                # g (x) h h1 = (g (x) h)(^h g (x) ^h h1)
                rels.append((-t(g, T[h, h1]), t(g, h), t(conj[h, g], conj[h, h1])))
    if q == 0:
        return rels
    gq = G.pow_all(q)
    y = lambda a: y_index(n, int(a))
    for g in range(n):
        c = gq[g]
        for g1 in range(n):
            for h1 in range(n):
                # {g} (g1 (x) h1) {g}^-1 = ^(g^q) g1 (x) ^(g^q) h1
                rels.append((y(g), t(g1, h1), -y(g), -t(conj[c, g1], conj[c, h1])))
    for g in range(n):
        for g1 in range(n):
            rels.append(tuple([-y(T[g, g1]), y(g)] + hat_product_word(G, q, g, g1) + [y(g1)]))
    for g in range(n):
        for g1 in range(n):
            rels.append((y(g), y(g1), -y(g), -y(g1), -t(gq[g], gq[g1])))
    comm = G.commutator_table
    for g in range(n):
        for h in range(n):
            rels.append(tuple([-y(comm[g, h])] + [t(g, h)] * q))
    return rels


def build_presentation(G: FiniteGroup, q: int) -> Presentation:
    """Presentation of ``G (x)^q G`` on the symbols ``t(g,h)`` and ``{(g,g)}``."""
    if q < 0:
        raise ValueError("q must be non-negative")
    return Presentation(
        G.order * G.order + (G.order if q >= 1 else 0),
        tuple(tensor_relators(G, q)),
        generator_labels(G, q),
    )


def wedge_presentation(G: FiniteGroup, q: int) -> Presentation:
    """The tensor presentation with every ``t(g,g)`` killed."""
    P = build_presentation(G, q)
    n = G.order
    extra = tuple((t_index(n, g, g),) for g in range(n))
    return Presentation(P.generator_count, P.relators + extra, P.generator_labels)


def _realize_presentation(P: Presentation, max_cosets: int, simplify: bool, label: str):
    """Realize ``P``; returns the group and the element of every original generator."""
    if not simplify:
        return realize(P, max_cosets, label=label)
    Q, subst = tietze_eliminate(P)
    R, gens = realize(Q, max_cosets, label=label)
    images = np.array([evaluate_word(R, gens, w) for w in subst], dtype=np.int64)
    # the images must satisfy the original relators and generate R
    for r in P.relators:
        if evaluate_word(R, images, r) != 0:
            raise InternalInconsistency("simplified realization violates an original relator")
    if generate(R, np.unique(images)).order != R.order:
        raise InternalInconsistency("original generators do not generate the simplified realization")
    return R, images


def _check_cap(G: FiniteGroup, max_order: int) -> None:
    if G.order > max_order:
        raise OrderLimit(f"base group order {G.order} exceeds cap {max_order}")


# ---------------------------------------------------------------------------
# q-tensor square


@dataclass(eq=False)
class QTensorSquare:
    base: FiniteGroup
    q: int
    realized: FiniteGroup
    tensor_symbol: np.ndarray  # n x n element indices
    hat_symbol: np.ndarray | None  # n element indices, None when q == 0
    presentation: Presentation = field(repr=False)

    @cached_property
    def nabla(self) -> Subgroup:
        return normal_closure(self.realized, np.diagonal(self.tensor_symbol))

    @cached_property
    def delta(self) -> Subgroup:
        T = self.realized.table
        s = self.tensor_symbol
        return normal_closure(self.realized, np.unique(T[s, s.T]))

    @property
    def symbol_images(self) -> np.ndarray:
        """Element of every presentation generator, in generator order."""
        parts = [self.tensor_symbol.ravel()]
        if self.hat_symbol is not None:
            parts.append(self.hat_symbol)
        return np.concatenate(parts)

    def tensor(self, g: int, h: int) -> int:
        return int(self.tensor_symbol[g, h])

    def hat(self, g: int) -> int:
        if self.hat_symbol is None:
            raise ValueError("hat symbols do not exist at q=0")
        return int(self.hat_symbol[g])


_TENSOR_CACHE: dict = {}
_WEDGE_CACHE: dict = {}


def realize_tensor(
    G: FiniteGroup,
    q: int,
    max_cosets: int = DEFAULT_MAX_COSETS,
    max_order: int = DEFAULT_MAX_BASE_ORDER,
    simplify: bool = False,
) -> QTensorSquare:
    """Build and enumerate the presentation of ``G (x)^q G``."""
    _check_cap(G, max_order)
    key = (G.key, q, simplify, max_cosets)
    if key in _TENSOR_CACHE:
        return _TENSOR_CACHE[key]
    P = build_presentation(G, q)
    n = G.order
    label = f"{G.label}(x)^{q}{G.label}"
    T, images = _realize_presentation(P, max_cosets, simplify, label)
    tensor_symbol = images[: n * n].reshape(n, n)
    hat = images[n * n :] if q >= 1 else None
    QT = QTensorSquare(G, q, T, tensor_symbol, hat, P)
    _TENSOR_CACHE[key] = QT
    return QT


# ---------------------------------------------------------------------------
# q-exterior square


@dataclass(eq=False)
class WedgeSquare:
    base: FiniteGroup
    q: int
    realized: FiniteGroup
    wedge_symbol: np.ndarray
    hat_symbol: np.ndarray | None
    tensor: QTensorSquare | None = None
    projection: Homomorphism | None = None
    presentation: Presentation | None = field(default=None, repr=False)

    def wedge(self, g: int, h: int) -> int:
        return int(self.wedge_symbol[g, h])

    def hat(self, g: int) -> int:
        if self.hat_symbol is None:
            raise ValueError("hat symbols do not exist at q=0")
        return int(self.hat_symbol[g])

    @property
    def symbol_images(self) -> np.ndarray:
        parts = [self.wedge_symbol.ravel()]
        if self.hat_symbol is not None:
            parts.append(self.hat_symbol)
        return np.concatenate(parts)


def wedge(QT: QTensorSquare) -> WedgeSquare:
    """``G (x)^q G / nabla`` with the induced symbols."""
    W, proj = quotient(QT.realized, QT.nabla, label=f"{QT.base.label}^{QT.q}{QT.base.label}")
    ws = proj.images[QT.tensor_symbol]
    hs = proj.images[QT.hat_symbol] if QT.hat_symbol is not None else None
    return WedgeSquare(QT.base, QT.q, W, ws, hs, tensor=QT, projection=proj,
                       presentation=wedge_presentation(QT.base, QT.q))


def realize_wedge(
    G: FiniteGroup,
    q: int,
    max_cosets: int = DEFAULT_MAX_COSETS,
    max_order: int = DEFAULT_MAX_BASE_ORDER,
    simplify: bool = False,
) -> WedgeSquare:
    """Enumerate the exterior-square presentation directly, skipping the tensor square."""
    _check_cap(G, max_order)
    key = (G.key, q, simplify, max_cosets)
    if key in _WEDGE_CACHE:
        return _WEDGE_CACHE[key]
    P = wedge_presentation(G, q)
    n = G.order
    W, images = _realize_presentation(P, max_cosets, simplify, f"{G.label}^{q}{G.label}")
    ws = images[: n * n].reshape(n, n)
    hs = images[n * n :] if q >= 1 else None
    WS = WedgeSquare(G, q, W, ws, hs, presentation=P)
    _WEDGE_CACHE[key] = WS
    return WS


def clear_caches() -> None:
    _TENSOR_CACHE.clear()
    _WEDGE_CACHE.clear()


# ---------------------------------------------------------------------------
# homomorphisms defined on symbols


def _symbol_hom(source: FiniteGroup, P: Presentation, gen_elements, target: FiniteGroup, gen_images, what: str) -> Homomorphism:
    """Homomorphism from a realized presentation given images of all generators.

    Every relator is evaluated in ``target`` first; a failure means the
    assignment is not well defined on the presented group.
    """
    gen_images = [int(x) for x in gen_images]
    for r in P.relators:
        if evaluate_word(target, gen_images, r) != 0:
            raise InternalInconsistency(f"{what}: relator {r} does not map to the identity")
    pairs = sorted(set(zip((int(x) for x in gen_elements), gen_images)))
    gens = [a for a, _ in pairs]
    if len(set(gens)) != len(gens):
        raise InternalInconsistency(f"{what}: one element receives two images")
    hom = hom_from_generators(source, gens, target, [b for _, b in pairs])
    if hom is None:
        raise InternalInconsistency(f"{what}: symbol assignment does not extend")
    return hom


def eta_images(G: FiniteGroup, q: int) -> np.ndarray:
    parts = [G.commutator_table.ravel()]
    if q >= 1:
        parts.append(G.pow_all(q))
    return np.concatenate(parts).astype(np.int64)


def eta(W: WedgeSquare) -> Homomorphism:
    """``x ^ y -> [x,y]`` and ``{(g,g)} -> g^q`` as a homomorphism to ``G``."""
    P = W.presentation if W.presentation is not None else wedge_presentation(W.base, W.q)
    return _symbol_hom(W.realized, P, W.symbol_images, W.base, eta_images(W.base, W.q), "eta")


@dataclass(frozen=True, eq=False)
class QuotientStructure:
    """Structure of a (possibly nonabelian) quotient group."""

    group: FiniteGroup
    invariants: AbelianInvariants | None

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def exponent(self) -> int:
        return self.group.exponent

    def to_json(self):
        if self.invariants is not None:
            return list(self.invariants.factors)
        return {"order": self.order, "exponent": self.exponent}


def quotient_structure(N: Subgroup, M: Subgroup) -> QuotientStructure:
    """Structure of ``N/M`` for subgroups ``M <= N`` of the same group, ``M`` normal in ``N``."""
    NG, emb = as_group(N)
    local = subgroup_from_mask(NG, M.mask[emb.images])
    Q, _ = quotient(NG, local)
    inv = abelian_invariants(Q) if Q.is_abelian else None
    return QuotientStructure(Q, inv)


def commuting_pairs(G: FiniteGroup) -> np.ndarray:
    return np.argwhere(G.commutator_table == 0)


@dataclass(eq=False)
class MultiplierData:
    wedge: WedgeSquare
    eta: Homomorphism
    M_q: Subgroup
    M0_q: Subgroup
    M0_hat_q: Subgroup
    B0_q: QuotientStructure
    B0_hat_q: QuotientStructure


def multipliers(W: WedgeSquare) -> MultiplierData:
    G, q = W.base, W.q
    e = eta(W)
    Mq = e.kernel()
    pairs = commuting_pairs(G)
    gens0 = np.unique(W.wedge_symbol[pairs[:, 0], pairs[:, 1]])
    M0 = generate(W.realized, gens0)
    hat_gens = gens0
    if q >= 1:
        killed = np.flatnonzero(G.pow_all(q) == 0)
        hat_gens = np.union1d(gens0, W.hat_symbol[killed])
    M0hat = generate(W.realized, hat_gens)
    for S, name in ((M0, "M_0^q"), (M0hat, "hat M_0^q")):
        if not S <= Mq:
            raise InternalInconsistency(f"{name} is not inside the q-Schur multiplier")
        if not is_normal(W.realized, S):
            raise InternalInconsistency(f"{name} is not normal")
    return MultiplierData(W, e, Mq, M0, M0hat, quotient_structure(Mq, M0), quotient_structure(Mq, M0hat))


def schur_multiplier(G: FiniteGroup, q: int = 0, **kw) -> tuple[FiniteGroup, MultiplierData]:
    md = multipliers(realize_wedge(G, q, **kw))
    M, _ = as_group(md.M_q, label=f"M^{q}({G.label})")
    return M, md


# ---------------------------------------------------------------------------
# center-like subgroups


def _annihilator(G: FiniteGroup, symbols: np.ndarray) -> Subgroup:
    """Elements g with symbol(g, h) = 1 for every h."""
    return subgroup_from_mask(G, (symbols == 0).all(axis=1))


def exterior_center(G: FiniteGroup, **kw) -> Subgroup:
    return _annihilator(G, realize_wedge(G, 0, **kw).wedge_symbol)


def is_capable(G: FiniteGroup, **kw) -> bool:
    """A group is capable exactly when its exterior center is trivial."""
    return exterior_center(G, **kw).order == 1


def _checked_subgroup(G: FiniteGroup, mask: np.ndarray, name: str) -> Subgroup:
    S = subgroup_from_mask(G, mask)
    if S.order == 0 or 0 not in S or not generate(G, S.elements).order == S.order:
        raise InternalInconsistency(f"{name} is not a subgroup")
    return S


@dataclass(frozen=True, eq=False)
class CenterTower:
    Z_wedge: Subgroup
    Z_wedge_q: Subgroup
    E_wedge_q: Subgroup
    Z_q: Subgroup
    Z_hat_q: Subgroup


def center_tower(G: FiniteGroup, q: int, **kw) -> CenterTower:
    W0 = realize_wedge(G, 0, **kw)
    Zw = _annihilator(G, W0.wedge_symbol)
    Z = center(G)
    if q == 0:
        # E_0 := Z^wedge; Z_0 := Z(G) and hat Z_0 = Z(G) since g^0 = 1
        return CenterTower(Zw, Zw, Zw, Z, Z)
    Wq = realize_wedge(G, q, **kw)
    Zwq = _annihilator(G, Wq.wedge_symbol)
    E = _checked_subgroup(G, Zwq.mask & (Wq.hat_symbol == 0), "E^wedge_q")
    pairs = commuting_pairs(G)
    M0 = generate(Wq.realized, np.unique(Wq.wedge_symbol[pairs[:, 0], pairs[:, 1]]))
    Zq = _checked_subgroup(G, Z.mask & M0.mask[Wq.hat_symbol], "Z_q")
    Zhat = _checked_subgroup(G, Z.mask & (G.pow_all(q) == 0), "hat Z_q")
    return CenterTower(Zw, Zwq, E, Zq, Zhat)


# ---------------------------------------------------------------------------
# retractions onto nabla


def _retraction(QT: QTensorSquare, t_images: np.ndarray, y_images, what: str) -> Homomorphism:
    images = [t_images.ravel()]
    if QT.q >= 1:
        images.append(np.asarray(y_images))
    hom = _symbol_hom(QT.realized, QT.presentation, QT.symbol_images, QT.realized, np.concatenate(images), what)
    nab = QT.nabla
    if not nab.mask[hom.images].all():
        raise InternalInconsistency(f"{what}: image is not inside nabla")
    if not (hom.images[nab.array] == nab.array).all():
        raise InternalInconsistency(f"{what}: not the identity on nabla")
    return hom


def _pow_elements(T: FiniteGroup, elements: np.ndarray, k: int) -> np.ndarray:
    return T.pow_all(k)[elements]


def splitting_alpha(QT: QTensorSquare, k: int) -> Homomorphism:
    """Retraction ``G (x)^q G -> nabla`` for odd ``k`` with every ``(g (x) g)^k = 1``."""
    if k <= 0 or k % 2 == 0:
        raise ValueError("k must be an odd positive integer")
    T = QT.realized
    s = QT.tensor_symbol
    diag = np.diagonal(s)
    if (T.pow_all(k)[diag] != 0).any():
        raise HypothesisNotMet(f"(g(x)g)^{k} != 1 for some g")
    n = (k - 1) // 2
    sym = T.table[s, s.T]  # (g(x)h)(h(x)g)
    t_img = _pow_elements(T, sym, -n)
    y_img = _pow_elements(T, diag, n * math.comb(QT.q, 2)) if QT.q >= 1 else None
    return _retraction(QT, t_img, y_img, "alpha'")


def splitting_beta(QT: QTensorSquare, n: int) -> Homomorphism:
    """Retraction via unique square roots in nabla, for even ``n`` with ``x -> x^n`` bijective."""
    if n <= 0 or n % 2:
        raise ValueError("n must be an even positive integer")
    T = QT.realized
    nab = QT.nabla
    powered = T.pow_all(n)[nab.array]
    if len(np.unique(powered)) != nab.order or not nab.mask[powered].all():
        raise HypothesisNotMet(f"x -> x^{n} is not a bijection of nabla")
    m = int(np.lcm.reduce(T.element_orders[nab.array]))
    half = n // 2
    e = (half * pow(n, -1, m)) % m if m > 1 else 0
    s = QT.tensor_symbol
    diag = np.diagonal(s)
    t_img = _pow_elements(T, T.table[s, s.T], e)
    y_img = _pow_elements(T, diag, (-e * math.comb(QT.q, 2)) % m if m > 1 else 0) if QT.q >= 1 else None
    return _retraction(QT, t_img, y_img, "beta'")


def conjugation_action(QT: QTensorSquare, g: int) -> Homomorphism:
    """Automorphism of ``G (x)^q G`` relabelling every symbol by ``^g``."""
    G = QT.base
    c = G.table[G.table[g], G.inverses[g]]  # c[a] = g a g^-1
    t_img = QT.tensor_symbol[np.ix_(c, c)]
    images = [t_img.ravel()]
    if QT.q >= 1:
        images.append(QT.hat_symbol[c])
    hom = _symbol_hom(QT.realized, QT.presentation, QT.symbol_images, QT.realized, np.concatenate(images), "conjugation")
    if not hom.is_bijective:
        raise InternalInconsistency("conjugation action is not an automorphism")
    return hom


# ---------------------------------------------------------------------------
# reports

REPORT_FIELDS = (
    "group", "group_order", "q", "tensor_order", "nabla_order", "delta_order", "wedge_order",
    "m_q", "m0_q", "m0_hat_q", "b0_q", "b0_hat_q",
    "z_wedge", "z_wedge_q", "e_wedge_q", "z_q", "z_hat_q", "capable",
)


def invariant_report(G: FiniteGroup, q: int, **kw) -> dict:
    """All invariants of one ``(G, q)`` pair, keyed by the fixed report field names."""
    QT = realize_tensor(G, q, **kw)
    W = wedge(QT)
    md = multipliers(W)
    ct = center_tower(G, q, **kw)
    report = {
        "group": G.label,
        "group_order": G.order,
        "q": q,
        "tensor_order": QT.realized.order,
        "nabla_order": QT.nabla.order,
        "delta_order": QT.delta.order,
        "wedge_order": W.realized.order,
        "m_q": md.M_q.order,
        "m0_q": md.M0_q.order,
        "m0_hat_q": md.M0_hat_q.order,
        "b0_q": md.B0_q.to_json(),
        "b0_hat_q": md.B0_hat_q.to_json(),
        "z_wedge": ct.Z_wedge.order,
        "z_wedge_q": ct.Z_wedge_q.order,
        "e_wedge_q": ct.E_wedge_q.order,
        "z_q": ct.Z_q.order,
        "z_hat_q": ct.Z_hat_q.order,
        "capable": ct.Z_wedge.order == 1,
    }
    return {k: report[k] for k in REPORT_FIELDS}
