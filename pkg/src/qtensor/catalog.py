"""Builtin groups and the group-spec loader.

Builtin names: ``C{n}``, ``D{n}`` (dihedral of order 2n), ``Q{4m}``
(dicyclic, so ``Q8`` is the quaternion group), ``S{n}``/``A{n}`` (n <= 5),
``E{p}^{k}``, products joined by ``x`` such as ``C2xC4`` or ``C2xD4``, and a
few named groups of order 16 (``SD16``, ``M16``, ``C4:C4``, ``C2^2:C4``,
``C4oD4``) plus the central product ``Q8oC6`` of order 24.
"""

from __future__ import annotations

import itertools
import json
import re
from functools import lru_cache
from pathlib import Path

import numpy as np

from .errors import InvalidGroup, OrderLimit
from .groups import FiniteGroup, direct_product, reindex_identity_first

DEFAULT_MAX_ORDER = 10_000


def cyclic(n: int) -> FiniteGroup:
    a = np.arange(n)
    return FiniteGroup((a[:, None] + a[None, :]) % n, label=f"C{n}", validate=False)


def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n; element ``r^i s^j`` has index ``i + n*j``."""
    m = 2 * n
    a = np.arange(m)
    i, j = a % n, a // n
    sign = np.where(j == 1, -1, 1)
    rot = (i[:, None] + sign[:, None] * i[None, :]) % n
    ref = (j[:, None] + j[None, :]) % 2
    return FiniteGroup(rot + n * ref, label=f"D{n}", validate=False)


def dicyclic(order: int) -> FiniteGroup:
    """``<a, b | a^(2m), b^2 = a^m, b a b^-1 = a^-1>`` of order 4m."""
    if order % 4 or order < 8:
        raise InvalidGroup("dicyclic order must be a multiple of 4, at least 8")
    m = order // 4
    n = 2 * m
    table = np.zeros((order, order), dtype=np.int64)
    for x in range(order):
        i, j = x % n, x // n
        for y in range(order):
            k, l = y % n, y // n
            if j == 0:
                e, f = i + k, l
            else:
                e, f = i - k, 1 + l
            if f == 2:
                e, f = e + m, 0
            table[x, y] = e % n + n * f
    return FiniteGroup(table, label=f"Q{order}", validate=False)


def permutation_group(degree: int, generators, max_order: int = DEFAULT_MAX_ORDER, label: str = "") -> FiniteGroup:
    """Close permutations under composition (apply left factor first)."""
    gens = [np.asarray(g, dtype=np.int64) for g in generators]
    for g in gens:
        if g.shape != (degree,) or sorted(g.tolist()) != list(range(degree)):
            raise InvalidGroup("generator is not a permutation of the stated degree")
    ident = np.arange(degree)
    elems = [ident]
    index = {ident.tobytes(): 0}
    for e in elems:
        for g in gens:
            h = g[e]
            key = h.tobytes()
            if key not in index:
                if len(elems) >= max_order:
                    raise OrderLimit(f"closure exceeds {max_order} elements")
                index[key] = len(elems)
                elems.append(h)
    P = np.array(elems)
    n = len(elems)
    table = np.empty((n, n), dtype=np.int64)
    for i in range(n):
        prods = P[:, P[i]]  # row j is P[j][P[i]]: apply P[i] then P[j]
        table[i] = [index[r.tobytes()] for r in prods]
    return FiniteGroup(table, label=label, validate=False)


def symmetric(n: int) -> FiniteGroup:
    if n <= 1:
        return FiniteGroup([[0]], label=f"S{n}")
    gens = [np.roll(np.arange(n), 1)]
    if n > 2:
        t = np.arange(n)
        t[[0, 1]] = [1, 0]
        gens.append(t)
    return permutation_group(n, gens, label=f"S{n}")


def alternating(n: int) -> FiniteGroup:
    if n <= 2:
        return FiniteGroup([[0]], label=f"A{n}")
    gens = []
    for k in range(2, n):
        c = np.arange(n)
        c[[0, 1, k]] = [1, k, 0]
        gens.append(c)
    return permutation_group(n, gens, label=f"A{n}")


def elementary_abelian(p: int, k: int) -> FiniteGroup:
    G = FiniteGroup([[0]], label="1")
    for _ in range(k):
        G = direct_product(G, cyclic(p))
    G.label = f"E{p}^{k}"
    return G


# presentations for the remaining groups of order 16
_PRESENTED = {
    "SD16": (2, [(1,) * 8, (2, 2), (2, 1, -2, -1, -1, -1)]),
    "M16": (2, [(1,) * 8, (2, 2), (2, 1, -2) + (-1,) * 5]),
    "C4:C4": (2, [(1,) * 4, (2,) * 4, (2, 1, -2, 1)]),
    "C2^2:C4": (3, [(1,) * 4, (2, 2), (3, 3), (1, 2, -1, -2), (2, 3, -2, -3), (3, 1, -3, -2, -1)]),
}


def _presented(name: str) -> FiniteGroup:
    from .fp import Presentation, realize

    m, rels = _PRESENTED[name]
    G, _ = realize(Presentation(m, tuple(rels)), label=name)
    return G


def _central_d4_c4() -> FiniteGroup:
    from .groups import Homomorphism, center, product

    D4, C4 = dihedral(4), cyclic(4)
    C2 = cyclic(2)
    zd = [g for g in center(D4).elements if g][0]
    eg = Homomorphism(C2, D4, np.array([0, zd]))
    eh = Homomorphism(C2, C4, np.array([0, 2]))
    return product(D4, C4, mode="central", embeddings=(eg, eh), label="C4oD4")


def _central_q8_c6() -> FiniteGroup:
    """Q8 and C6 amalgamating their central subgroups of order 2 (order 24)."""
    from .groups import Homomorphism, center, product

    Q8, C6 = dicyclic(8), cyclic(6)
    zq = [g for g in center(Q8).elements if g][0]
    eg = Homomorphism(cyclic(2), Q8, np.array([0, zq]))
    eh = Homomorphism(cyclic(2), C6, np.array([0, 3]))
    return product(Q8, C6, mode="central", embeddings=(eg, eh), label="Q8oC6")


_CONSTRUCTED = {"C4oD4": _central_d4_c4, "Q8oC6": _central_q8_c6}


def builtin_names() -> list[str]:
    return [
        "C{n}", "D{n}", "Q8", "Q{4m}", "S{n} (n<=5)", "A{n} (n<=5)", "E{p}^{k}", "C{n}xC{m}",
        "SD16", "M16", "C4:C4", "C2^2:C4", "C4oD4", "Q8oC6",
    ]


@lru_cache(maxsize=None)
def builtin(name: str) -> FiniteGroup:
    name = name.strip()
    if name in ("1", "C1", "trivial"):
        return FiniteGroup([[0]], label="1")
    if name in _PRESENTED:
        return _presented(name)
    if name in _CONSTRUCTED:
        return _CONSTRUCTED[name]()
    if (m := re.fullmatch(r"E(\d+)\^(\d+)", name)):
        return elementary_abelian(int(m[1]), int(m[2]))
    if "x" in name:
        parts = name.split("x")
        G = builtin(parts[0])
        for part in parts[1:]:
            G = direct_product(G, builtin(part))
        G.label = name
        return G
    if (m := re.fullmatch(r"C(\d+)", name)):
        return cyclic(int(m[1]))
    if (m := re.fullmatch(r"D(\d+)", name)):
        return dihedral(int(m[1]))
    if (m := re.fullmatch(r"Q(\d+)", name)):
        return dicyclic(int(m[1]))
    if (m := re.fullmatch(r"S(\d)", name)) and int(m[1]) <= 5:
        return symmetric(int(m[1]))
    if (m := re.fullmatch(r"A(\d)", name)) and int(m[1]) <= 5:
        return alternating(int(m[1]))
    raise InvalidGroup(f"unknown builtin group {name!r}")


def group_from_json(spec: dict, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    kind = spec.get("kind")
    label = spec.get("label", "")
    if kind == "cayley":
        table = np.asarray(spec["table"], dtype=np.int64)
        if "order" in spec and table.shape != (spec["order"], spec["order"]):
            raise InvalidGroup("table shape does not match order")
        if table.ndim != 2 or table.shape[0] != table.shape[1]:
            raise InvalidGroup("table must be square")
        if table.shape[0] > max_order:
            raise OrderLimit(f"order {table.shape[0]} exceeds {max_order}")
        if table.min() < 0 or table.max() >= table.shape[0]:
            raise InvalidGroup("table entries out of range")
        return FiniteGroup(reindex_identity_first(table), label=label)
    if kind == "perm":
        return permutation_group(int(spec["degree"]), spec["generators"], max_order=max_order, label=label)
    raise InvalidGroup(f"unknown group spec kind {kind!r}")


def group_to_json(G: FiniteGroup) -> dict:
    return {"kind": "cayley", "order": G.order, "table": G.table.tolist(), "label": G.label}


def load_group(spec, max_order: int = DEFAULT_MAX_ORDER) -> FiniteGroup:
    """Load a group from a builtin name, ``builtin:NAME``, ``file:PATH`` or a JSON dict."""
    if isinstance(spec, FiniteGroup):
        return spec
    if isinstance(spec, dict):
        return group_from_json(spec, max_order)
    spec = str(spec)
    if spec.startswith("file:"):
        data = json.loads(Path(spec[5:]).read_text())
        return group_from_json(data, max_order)
    if spec.startswith("builtin:"):
        spec = spec[8:]
    G = builtin(spec)
    if G.order > max_order:
        raise OrderLimit(f"order {G.order} exceeds {max_order}")
    return G


# corpora -----------------------------------------------------------------

DEFAULT_CORPUS = ("1", "C2", "C3", "C4", "C2xC2", "C6", "S3", "D4", "Q8", "C2xC4", "E2^3", "D6")

ORDER_16 = (
    "C16", "C4xC4", "C2^2:C4", "C4:C4", "C2xC8", "M16", "D8", "SD16", "Q16",
    "C2xC2xC4", "C2xD4", "C2xQ8", "C4oD4", "E2^4",
)

SMALL_P_GROUPS = (
    "C2", "C3", "C4", "C2xC2", "C5", "C7", "C8", "C2xC4", "E2^3", "D4", "Q8",
    "C9", "C3xC3", "C11", "C13",
)


# groups whose direct or central factorizations exercise the multiplier corollaries
PRODUCT_INSTANCES = ("Q8oC6", "D4xC3", "S3xC5")


def default_corpus() -> list[FiniteGroup]:
    return [builtin(n) for n in DEFAULT_CORPUS]


def extended_p_groups() -> list[FiniteGroup]:
    return [builtin(n) for n in SMALL_P_GROUPS + ORDER_16]


def iter_builtin_examples():
    return itertools.chain(DEFAULT_CORPUS, ORDER_16)
