"""Isomorphism, canonical forms and switch-iso class keys."""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

import numpy as np

from . import _kernels
from .graph_core import Graph, GraphError, pair_index

DEFAULT_MAX_N = 8
HARD_MAX_N = _kernels.KERNEL_MAX_N

Permutation = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class ClassKey:
    """Canonical edge bit set of an isomorphism class or a switch-iso class."""

    n: int
    bits: int

    def graph(self) -> Graph:
        return Graph(self.n, self.bits)


def _check_bound(n: int, max_n: Optional[int]) -> None:
    bound = DEFAULT_MAX_N if max_n is None else max_n
    if bound > HARD_MAX_N:
        raise GraphError(f"canonicalization bound {bound} exceeds the hard limit {HARD_MAX_N}")
    if n > bound:
        raise GraphError(f"n={n} exceeds the canonicalization bound {bound}")


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Image of ``g`` under the vertex map ``v -> perm[v]``."""
    if sorted(perm) != list(range(g.n)):
        raise GraphError(f"{tuple(perm)} is not a permutation of range({g.n})")
    bits = 0
    for i, j in g.edge_list():
        bits |= 1 << pair_index(perm[i], perm[j])
    return Graph(g.n, bits)


def compose(f: Permutation, g: Permutation) -> Permutation:
    """``f`` after ``g``."""
    return tuple(f[v] for v in g)


def canonical_form(g: Graph, max_n: Optional[int] = None) -> ClassKey:
    _check_bound(g.n, max_n)
    return ClassKey(g.n, int(_kernels.canonical_batch([g.edges], g.n)[0]))


def canonical_forms(graphs: Sequence[Graph], max_n: Optional[int] = None) -> list[ClassKey]:
    """Batched ``canonical_form`` for graphs sharing one vertex count."""
    if not graphs:
        return []
    n = _common_n(graphs)
    _check_bound(n, max_n)
    out = _kernels.canonical_batch([g.edges for g in graphs], n)
    return [ClassKey(n, int(b)) for b in out]


def switch_iso_key(g: Graph, max_n: Optional[int] = None) -> ClassKey:
    """Smallest canonical form over the switching class of ``g``.

    Two graphs get the same key exactly when one is isomorphic to a switch
    of the other.
    """
    _check_bound(g.n, max_n)
    return ClassKey(g.n, int(_kernels.switch_iso_batch([g.edges], g.n)[0]))


def switch_iso_keys(graphs: Sequence[Graph], max_n: Optional[int] = None) -> list[ClassKey]:
    if not graphs:
        return []
    n = _common_n(graphs)
    _check_bound(n, max_n)
    out = _kernels.switch_iso_batch([g.edges for g in graphs], n)
    return [ClassKey(n, int(b)) for b in out]


def switch_iso_key_bits(bits: np.ndarray, n: int, max_n: Optional[int] = None) -> np.ndarray:
    """Array form of ``switch_iso_keys`` for bulk enumeration."""
    _check_bound(n, max_n)
    return _kernels.switch_iso_batch(bits, n)


def switch_iso_equivalent(g1: Graph, g2: Graph, max_n: Optional[int] = None) -> bool:
    if g1.n != g2.n:
        raise GraphError(f"graphs on different vertex counts ({g1.n} vs {g2.n})")
    return switch_iso_key(g1, max_n) == switch_iso_key(g2, max_n)


def isomorphic(g1: Graph, g2: Graph, max_n: Optional[int] = None) -> Optional[Permutation]:
    """A permutation ``f`` with ``relabel(g1, f) == g2``, or None."""
    if g1.n != g2.n:
        raise GraphError(f"graphs on different vertex counts ({g1.n} vs {g2.n})")
    _check_bound(g1.n, max_n)
    n = g1.n
    d1, d2 = g1.degrees(), g2.degrees()
    if g1.edge_count != g2.edge_count or Counter(d1) != Counter(d2):
        return None
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> bool:
        if v == n:
            return True
        for w in range(n):
            if used[w] or d2[w] != d1[v]:
                continue
            if any(g1.has_edge(u, v) != g2.has_edge(image[u], w) for u in range(v)):
                continue
            image[v], used[w] = w, True
            if extend(v + 1):
                return True
            used[w] = False
        return False

    return tuple(image) if extend(0) else None


def automorphisms(g: Graph, max_n: Optional[int] = None) -> list[Permutation]:
    """All vertex permutations fixing ``g``, identity first."""
    _check_bound(g.n, max_n)
    perms, _ = _kernels.perm_data(g.n)
    images = _kernels.relabel_all(g.edges, g.n)
    found = sorted(tuple(int(x) for x in perms[r]) for r in np.flatnonzero(images == g.edges))
    return found


def subset_orbit_representatives(n: int, group: Sequence[Permutation], max_size: int) -> list[int]:
    """Smallest mask of each orbit of vertex subsets of size <= ``max_size``."""
    reps = []
    for size in range(max_size + 1):
        for combo in itertools.combinations(range(n), size):
            mask = sum(1 << v for v in combo)
            if all(sum(1 << f[v] for v in combo) >= mask for f in group):
                reps.append(mask)
    return reps


def _common_n(graphs: Sequence[Graph]) -> int:
    n = graphs[0].n
    if any(g.n != n for g in graphs):
        raise GraphError("batched graphs must share one vertex count")
    return n
