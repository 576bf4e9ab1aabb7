"""Witness search for the five isoclinism relations.

Every relation asks for isomorphisms ``alpha: G/N_G -> H/N_H`` and
``beta: G^q[G,G] -> H^q[H,H]`` such that whenever ``alpha`` sends the cosets
of ``g1, g2`` to those of ``h1, h2`` we get ``beta([g1,g2]) = [h1,h2]`` and
``beta(g1^q) = h1^q``.  The modes differ only in the choice of ``N``:

==================  =========================
mode                N
==================  =========================
classical           Z(G)
q-isoclinic         Z_q(G)
hat-q-isoclinic     hat Z_q(G)
q-exterior          E^wedge_q(G)
weak-q-exterior     any A <= E^wedge_q(G)
==================  =========================

All these ``N`` are central with ``N^q = 1``, so commutators and ``q``-th
powers only depend on cosets and checking coset representatives is enough.
Witnesses are still re-validated on every pair of elements.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import InternalInconsistency, SearchCap
from .groups import (
    FiniteGroup,
    Homomorphism,
    Subgroup,
    all_subgroups,
    as_group,
    center,
    extend_generator_images,
    iter_isomorphisms,
    power_commutator_subgroup,
    quotient,
    subgroup_from_mask,
)
from .tensor import center_tower

MODES = ("classical", "q-isoclinic", "hat-q-isoclinic", "q-exterior", "weak-q-exterior")
_ALIASES = {
    "isoclinic": "classical",
    "q": "q-isoclinic",
    "hat-q": "hat-q-isoclinic",
    "exterior": "q-exterior",
    "weak": "weak-q-exterior",
}

WEAK_PAIR_CAP = 1 << 12


def normalize_mode(mode: str) -> str:
    mode = _ALIASES.get(mode, mode)
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}; choose from {', '.join(MODES)}")
    return mode


def _beta_source(G: FiniteGroup, mode: str, q: int) -> Subgroup:
    return power_commutator_subgroup(G, 0 if mode == "classical" else q)


@dataclass(frozen=True, eq=False)
class IsoclinismWitness:
    mode: str
    q: int
    G: FiniteGroup
    H: FiniteGroup
    A: Subgroup  # the subgroup of G factored out
    B: Subgroup
    alpha: Homomorphism  # G/A -> H/B
    beta: Homomorphism  # G -> H, defined on G^q[G,G]; -1 elsewhere

    def __post_init__(self):
        if not validate_witness(self):
            raise InternalInconsistency("isoclinism witness failed re-validation")

    @property
    def power(self) -> int:
        return 0 if self.mode == "classical" else self.q

    def beta_domain(self) -> np.ndarray:
        return np.flatnonzero(self.beta.images >= 0)

    def to_json(self) -> dict:
        dom = self.beta_domain()
        return {
            "mode": self.mode,
            "q": self.q,
            "G": self.G.label,
            "H": self.H.label,
            "alpha": [int(x) for x in self.alpha.images],
            "beta": {"domain": [int(x) for x in dom], "images": [int(x) for x in self.beta.images[dom]]},
            "A": [int(x) for x in self.A.elements],
            "B": [int(x) for x in self.B.elements],
        }


def _projections(G: FiniteGroup, N: Subgroup):
    Q, pi = quotient(G, N)
    reps = np.full(Q.order, -1, dtype=np.int64)
    for g in range(G.order - 1, -1, -1):
        reps[pi.images[g]] = g
    return Q, pi, reps


def validate_witness(w: IsoclinismWitness) -> bool:
    """Check the compatibility condition on every pair of elements of ``G``."""
    G, H = w.G, w.H
    QG, piG, _ = _projections(G, w.A)
    QH, piH, repH = _projections(H, w.B)
    if w.alpha.source.order != QG.order or w.alpha.target.order != QH.order:
        return False
    if not (w.alpha.is_bijective and w.alpha.is_homomorphism()):
        return False
    SG = _beta_source(G, w.mode, w.q)
    SH = _beta_source(H, w.mode, w.q)
    b = w.beta.images
    dom = np.flatnonzero(b >= 0)
    if not np.array_equal(dom, SG.array):
        return False
    if not np.array_equal(np.sort(b[dom]), SH.array):
        return False
    # homomorphism on the domain
    sub = G.table[np.ix_(dom, dom)]
    if (b[sub] != H.table[np.ix_(b[dom], b[dom])]).any():
        return False
    # images of every element of G under the coset correspondence
    h_of = repH[w.alpha.images[piG.images]]
    # any h in the matched coset gives the same commutator and power
    if (b[G.commutator_table] != H.commutator_table[np.ix_(h_of, h_of)]).any():
        return False
    k = w.power
    if (b[G.pow_all(k)] != H.pow_all(k)[h_of]).any():
        return False
    # independence from the choice of h inside its coset
    cosets = piH.images
    if not _coset_invariant(H, cosets, k):
        return False
    return True


def _coset_invariant(H: FiniteGroup, cosets: np.ndarray, k: int) -> bool:
    """Commutators and k-th powers are constant on cosets."""
    n = H.order
    firsts = np.full(cosets.max() + 1, -1, dtype=np.int64)
    for h in range(n - 1, -1, -1):
        firsts[cosets[h]] = h
    rep = firsts[cosets]
    C = H.commutator_table
    if (C != C[np.ix_(rep, rep)]).any():
        return False
    P = H.pow_all(k)
    return bool((P == P[rep]).all())


def search(G: FiniteGroup, H: FiniteGroup, A: Subgroup, B: Subgroup, mode: str, q: int) -> IsoclinismWitness | None:
    """First compatible pair ``(alpha, beta)`` for the given quotients, or None."""
    SG = _beta_source(G, mode, q)
    SH = _beta_source(H, mode, q)
    if SG.order != SH.order or G.order * B.order != H.order * A.order:
        return None
    k = 0 if mode == "classical" else q
    QG, piG, repG = _projections(G, A)
    QH, piH, repH = _projections(H, B)
    if not (_coset_invariant(G, piG.images, k) and _coset_invariant(H, piH.images, k)):
        raise InternalInconsistency("quotient subgroup is not central with trivial q-th powers")
    CG = G.commutator_table[np.ix_(repG, repG)].ravel()
    PG = G.pow_all(k)[repG]
    src_all = np.concatenate([CG, PG])
    # one representative pair per distinct source element fixes beta on generators
    uniq, first, inverse = np.unique(src_all, return_index=True, return_inverse=True)
    CHfull = H.commutator_table
    PHfull = H.pow_all(k)
    for alpha in iter_isomorphisms(QG, QH):
        s = repH[alpha.images]
        dst_all = np.concatenate([CHfull[np.ix_(s, s)].ravel(), PHfull[s]])
        # beta must be a function: equal sources need equal targets
        if (dst_all != dst_all[first][inverse]).any():
            continue
        img = extend_generator_images(G, uniq, H, dst_all[first])
        if img is None:
            continue
        dom = np.flatnonzero(img >= 0)
        if len(dom) != SG.order:
            raise InternalInconsistency("commutators and powers do not generate G^q[G,G]")
        if len(np.unique(img[dom])) != len(dom) or not SH.mask[img[dom]].all():
            continue
        return IsoclinismWitness(mode, q, G, H, A, B, alpha, Homomorphism(G, H, img))
    return None


def quotient_subgroup(G: FiniteGroup, mode: str, q: int, **kw) -> Subgroup:
    """The subgroup ``N`` factored out of ``G`` by a (non-weak) mode."""
    mode = normalize_mode(mode)
    if mode == "classical":
        return center(G)
    if mode == "hat-q-isoclinic":
        Z = center(G)
        return subgroup_from_mask(G, Z.mask & (G.pow_all(q) == 0))
    ct = center_tower(G, q, **kw)
    if mode == "q-isoclinic":
        return ct.Z_q
    if mode == "q-exterior":
        return ct.E_wedge_q
    raise ValueError("weak mode has no single quotient subgroup; use check_weak")


def check(G: FiniteGroup, H: FiniteGroup, mode: str = "classical", q: int = 0, **kw) -> IsoclinismWitness | None:
    mode = normalize_mode(mode)
    if mode == "weak-q-exterior":
        return check_weak(G, H, q, **kw)
    A = quotient_subgroup(G, mode, q, **kw)
    B = quotient_subgroup(H, mode, q, **kw)
    return search(G, H, A, B, mode, q)


def _subgroups_of(S: Subgroup) -> list[Subgroup]:
    """All subgroups of ``S`` as subgroups of its parent, largest first."""
    local, emb = as_group(S)
    out = []
    for T in all_subgroups(local):
        mask = np.zeros(S.parent.order, dtype=bool)
        mask[emb.images[T.array]] = True
        out.append(subgroup_from_mask(S.parent, mask))
    out.sort(key=lambda X: (-X.order, X.elements))
    return out


def check_weak(G: FiniteGroup, H: FiniteGroup, q: int = 0, cap: int = WEAK_PAIR_CAP, **kw) -> IsoclinismWitness | None:
    """Weak q-exterior isoclinism: search all ``A <= E^wedge_q(G)``, ``B <= E^wedge_q(H)``."""
    EG = center_tower(G, q, **kw).E_wedge_q
    EH = center_tower(H, q, **kw).E_wedge_q
    subs_g = _subgroups_of(EG)
    subs_h = _subgroups_of(EH)
    if len(subs_g) * len(subs_h) > cap:
        raise SearchCap(f"{len(subs_g) * len(subs_h)} subgroup pairs exceed cap {cap}")
    for A in subs_g:
        for B in subs_h:
            if G.order * B.order != H.order * A.order:
                continue
            w = search(G, H, A, B, "weak-q-exterior", q)
            if w is not None:
                return w
    return None
