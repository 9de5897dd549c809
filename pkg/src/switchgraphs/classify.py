"""Enumeration of switch-iso types on ``n`` vertices.

Two independent routes build the same catalog: an inductive one that extends
every type on ``n-1`` vertices by a new vertex joined to a subset ``Z``, and a
transversal one that keys every graph with vertex 0 isolated (exactly one per
switching class).
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from math import comb
from pathlib import Path
from typing import Iterable, Optional

import numpy as np

from .canonical import (
    ClassKey,
    automorphisms,
    subset_orbit_representatives,
    switch_iso_key,
    switch_iso_key_bits,
)
from .graph_core import (
    Graph,
    GraphError,
    complement,
    complete,
    cycle,
    disjoint_union,
    empty,
    num_pairs,
    pad,
    pair_index,
    pairs,
    path,
)
from .invariants import PatternClass, _family, named_pattern

log = logging.getLogger(__name__)

TRANSVERSAL_MAX_N = 7
METHODS = ("inductive", "transversal")


@dataclass(frozen=True)
class InvariantProfile:
    k3: int
    n3: int
    k4: int
    n4: int
    l4: int

    def as_dict(self) -> dict:
        return {"k3": self.k3, "n3": self.n3, "k4": self.k4, "n4": self.n4, "l4": self.l4}


@dataclass(frozen=True)
class TypeRecord:
    key: ClassKey
    representative: Graph
    name: str
    profile: InvariantProfile
    label: Optional[str] = None
    aliases: tuple[str, ...] = ()


@dataclass(frozen=True)
class Catalog:
    n: int
    types: tuple[TypeRecord, ...]
    index: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        keys = [t.key for t in self.types]
        if any(a >= b for a, b in zip(keys, keys[1:])):
            raise ValueError("catalog keys must be strictly increasing")
        if any(k.n != self.n for k in keys):
            raise ValueError(f"catalog for n={self.n} holds keys of another order")
        object.__setattr__(self, "types", tuple(self.types))
        object.__setattr__(self, "index", {k: i for i, k in enumerate(keys)})

    def __len__(self) -> int:
        return len(self.types)

    def keys(self) -> list[ClassKey]:
        return [t.key for t in self.types]


@lru_cache(maxsize=None)
def _profile_patterns() -> tuple[PatternClass, ...]:
    return tuple(named_pattern(name) for name in ("K3", "N3", "K4", "N4", "L4"))


def profile(g: Graph) -> InvariantProfile:
    """Counts of induced 3- and 4-vertex subgraphs by switch-iso class."""
    counts = [len(_family(g, p)) if p.k <= g.n else 0 for p in _profile_patterns()]
    return InvariantProfile(*counts)


# --------------------------------------------------------------------------
# names used in the published classification

def _u(*parts: Graph) -> Graph:
    return disjoint_union(*parts)


def _paper_types(n: int) -> list[tuple[str, str, Graph, list[tuple[str, Graph]]]]:
    """(label, name, graph, aliases) for the named types on ``n`` vertices."""
    K, N, L, C, co = complete, empty, path, cycle, complement
    if n == 1:
        return [("1:1", "K_1", K(1), [("N_1", N(1))])]
    if n == 2:
        return [("2:1", "K_2", K(2), [("N_2", N(2))])]
    if n == 3:
        return [("3:1", "K_3", K(3), [("L_2^3", pad(L(2), 3))]),
                ("3:2", "N_3", N(3), [("L_3", L(3))])]
    if n == 4:
        return [("4:1", "K_4", K(4), [("K_3^4", pad(K(3), 4)), ("L_2+L_2", _u(L(2), L(2)))]),
                ("4:2", "N_4", N(4), [("C_4", C(4))]),
                ("4:3", "L_4", L(4), [("L_2^4", pad(L(2), 4)), ("L_3^4", pad(L(3), 4))])]
    if n == 5:
        return [("5:1", "K_5", K(5), [("K_4^5", pad(K(4), 5))]),
                ("5:2", "N_5", N(5), []),
                ("5:3", "C_5", C(5), []),
                ("5:4", "L_2^5", pad(L(2), 5), []),
                ("5:5", "co(L_2^5)", co(pad(L(2), 5)), [("K_3^5", pad(K(3), 5))]),
                ("5:6", "L_3^5", pad(L(3), 5), []),
                ("5:7", "co(L_3^5)", co(pad(L(3), 5)), [("L_5", L(5))])]
    if n == 6:
        return [("6:1", "K_6", K(6), []),
                ("6:2", "N_6", N(6), []),
                ("6:3", "L_2^6", pad(L(2), 6), []),
                ("6:4", "co(L_2^6)", co(pad(L(2), 6)),
                 [("K_4^6", pad(K(4), 6)), ("C_3+L_3", _u(C(3), L(3)))]),
                ("6:5", "C_5^6", pad(C(5), 6), []),
                ("6:6", "(L_2+L_2)^6", pad(_u(L(2), L(2)), 6), []),
                ("6:7", "L_3^6", pad(L(3), 6), []),
                ("6:8", "K_3^6", pad(K(3), 6), []),
                ("6:9", "(L_3+L_2)^6", pad(_u(L(3), L(2)), 6), []),
                ("6:10", "L_4^6", pad(L(4), 6), []),
                ("6:11", "co(L_3^6)", co(pad(L(3), 6)), [("(C_3+L_2)^6", pad(_u(C(3), L(2)), 6))]),
                ("6:12", "L_3+L_3", _u(L(3), L(3)), []),
                ("6:13", "C_4^6", pad(C(4), 6),
                 [("co(C_6)", co(C(6))), ("co(L_2+L_2+L_2)", co(_u(L(2), L(2), L(2))))]),
                ("6:14", "L_5^6", pad(L(5), 6), []),
                ("6:15", "L_6", L(6), []),
                ("6:16", "C_6", C(6), [("L_2+L_2+L_2", _u(L(2), L(2), L(2)))])]
    return []


def named_graphs(n: int) -> dict[str, Graph]:
    """Every named graph (primary names and aliases) for order ``n``."""
    out = {}
    for _, name, g, aliases in _paper_types(n):
        out[name] = g
        out.update(aliases)
    return out


@lru_cache(maxsize=None)
def _name_index(n: int) -> dict[int, tuple[str, str, tuple[str, ...]]]:
    index = {}
    for label, name, g, aliases in _paper_types(n):
        bits = switch_iso_key(g).bits
        if bits in index:
            raise AssertionError(f"named types {index[bits][1]} and {name} share a class")
        for alias, h in aliases:
            if switch_iso_key(h).bits != bits:
                raise AssertionError(f"alias {alias} is not in the class of {name}")
        index[bits] = (label, name, tuple(a for a, _ in aliases))
    return index


def _build_catalog(n: int, key_bits: Iterable[int]) -> Catalog:
    names = _name_index(n)
    records = []
    for pos, bits in enumerate(sorted(set(int(b) for b in key_bits)), start=1):
        label, name, aliases = names.get(bits, (None, f"type-{n}-{pos}", ()))
        rep = Graph(n, bits)
        records.append(TypeRecord(ClassKey(n, bits), rep, name, profile(rep), label, aliases))
    return Catalog(n, tuple(records))


# --------------------------------------------------------------------------
# enumeration

def _check_order(n: int) -> None:
    if n < 1:
        raise GraphError(f"classification needs n >= 1, got {n}")


def enumerate_types_inductive(n: int, previous: Optional[Catalog] = None) -> Catalog:
    """Types on ``n`` vertices from the types on ``n - 1`` vertices.

    A new vertex ``w = n - 1`` is joined to ``Z`` for each type ``G0`` and each
    ``Aut(G0)``-orbit of subsets with ``|Z| <= n // 2`` (the complementary
    choice gives a switch of the same graph at ``w``); duplicates are merged
    by key.
    """
    _check_order(n)
    if n == 1:
        return _build_catalog(1, [0])
    if previous is None:
        previous = enumerate_types_inductive(n - 1)
    if previous.n != n - 1:
        raise ValueError(f"previous catalog is for n={previous.n}, expected {n - 1}")
    w = n - 1
    candidates = []
    for rec in previous.types:
        g0 = rec.representative
        group = automorphisms(g0)
        for z in subset_orbit_representatives(w, group, n // 2):
            bits = g0.edges
            for v in range(w):
                if z >> v & 1:
                    bits |= 1 << pair_index(v, w)
            candidates.append(bits)
    log.debug("n=%d: %d inductive candidates from %d types", n, len(candidates), len(previous))
    keys = switch_iso_key_bits(np.array(candidates, dtype=np.uint64), n)
    return _build_catalog(n, np.unique(keys))


def transversal_bits(n: int) -> np.ndarray:
    """Edge bit sets of all graphs on ``n`` vertices with vertex 0 isolated."""
    _check_order(n)
    m = num_pairs(n - 1)
    h = np.arange(1 << m, dtype=np.uint64)
    out = np.zeros_like(h)
    for p, (i, j) in enumerate(pairs(n - 1)):
        out |= ((h >> np.uint64(p)) & np.uint64(1)) << np.uint64(pair_index(i + 1, j + 1))
    return out


def enumerate_types_transversal(n: int, allow_large: bool = False) -> Catalog:
    _check_order(n)
    if n > TRANSVERSAL_MAX_N and not allow_large:
        raise ValueError(f"transversal enumeration above n={TRANSVERSAL_MAX_N} needs allow_large=True")
    keys = switch_iso_key_bits(transversal_bits(n), n, max_n=max(n, 8))
    return _build_catalog(n, np.unique(keys))


def build_catalog(n: int, method: str = "inductive", cache_dir: Optional[Path] = None) -> Catalog:
    """Catalog for ``n``, read from or written to ``cache_dir`` when given."""
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    if cache_dir is not None:
        from .cli_io import catalog_cache_path, load_catalog, save_catalog

        cached = catalog_cache_path(cache_dir, n)
        if cached.exists():
            return load_catalog(cached)
    if method == "inductive":
        cat = enumerate_types_inductive(n)
    else:
        cat = enumerate_types_transversal(n)
    if cache_dir is not None:
        save_catalog(cat, cached)
    return cat


def mu(n: int, method: str = "inductive") -> int:
    return len(build_catalog(n, method))


def switch_class_count(n: int) -> int:
    _check_order(n)
    return 2 ** (comb(n, 2) - n + 1)


def type_of(g: Graph, catalog: Catalog) -> TypeRecord:
    if g.n != catalog.n:
        raise GraphError(f"graph has {g.n} vertices, catalog is for n={catalog.n}")
    key = switch_iso_key(g)
    try:
        return catalog.types[catalog.index[key]]
    except KeyError:
        raise LookupError(f"key {key} missing from the n={catalog.n} catalog; catalog is incomplete") from None
