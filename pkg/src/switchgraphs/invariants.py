"""Induced-subgraph invariants: families ``G/G0``, counts ``#(G;G0)``, and
closed-form counts for paths, cycles and their disjoint unions."""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from math import comb
from typing import Optional, Sequence

import numpy as np

from . import _kernels
from .canonical import ClassKey, switch_iso_key
from .graph_core import (
    Graph,
    GraphError,
    complement,
    complete,
    cycle,
    disjoint_union,
    empty,
    induced,
    num_pairs,
    pad,
    path,
)

# Patterns up to this order are matched through a precomputed table over all
# labelled graphs; larger ones go through the batched key kernel.
_TABLE_MAX_K = 6


@dataclass(frozen=True)
class PatternClass:
    """A switch-iso class of ``k``-vertex graphs used as a search pattern."""

    k: int
    key: ClassKey
    name: Optional[str] = field(default=None, compare=False)

    @classmethod
    def of(cls, g: Graph, name: Optional[str] = None) -> "PatternClass":
        return cls(g.n, switch_iso_key(g), name)

    def complement(self) -> "PatternClass":
        label = f"co-{self.name}" if self.name else None
        return PatternClass.of(complement(self.key.graph()), label)


_PATTERN_RE = re.compile(r"^([KNLC])_?(\d+)$")


def named_pattern(name: str) -> PatternClass:
    """Pattern from a name such as ``K3``, ``N4``, ``L4`` or ``C5``."""
    match = _PATTERN_RE.match(name.strip())
    if not match:
        raise ValueError(f"unknown pattern name {name!r}; expected K<m>, N<m>, L<m> or C<m>")
    kind, m = match.group(1), int(match.group(2))
    build = {"K": complete, "N": empty, "L": path, "C": cycle}[kind]
    return PatternClass.of(build(m), f"{kind}{m}")


@lru_cache(maxsize=None)
def _key_table(k: int) -> np.ndarray:
    """Switch-iso key bits for every labelled graph on ``k`` vertices."""
    bits = np.arange(1 << num_pairs(k), dtype=np.uint64)
    return _kernels.switch_iso_batch(bits, k)


def _subset_masks(n: int, k: int) -> list[int]:
    return sorted(sum(1 << v for v in c) for c in itertools.combinations(range(n), k))


def _induced_keys(g: Graph, k: int, masks: Sequence[int]) -> np.ndarray:
    bits = np.array([induced(g, z).edges for z in masks], dtype=np.uint64)
    if k <= _TABLE_MAX_K:
        return _key_table(k)[bits.astype(np.int64)]
    return _kernels.switch_iso_batch(bits, k)


def _family(g: Graph, pattern: PatternClass) -> list[int]:
    masks = _subset_masks(g.n, pattern.k)
    if not masks:
        return []
    keys = _induced_keys(g, pattern.k, masks)
    hit = keys == np.uint64(pattern.key.bits)
    return [z for z, h in zip(masks, hit) if h]


def sub_family(g: Graph, pattern: PatternClass) -> list[int]:
    """Vertex masks ``Z`` of size ``k`` with ``G|Z`` switch-iso to the pattern, ascending."""
    if pattern.k >= g.n:
        raise GraphError(f"pattern order {pattern.k} must be below the graph order {g.n}")
    return _family(g, pattern)


def count_sub(g: Graph, pattern: PatternClass) -> int:
    return len(sub_family(g, pattern))


def induced_key_multiset(g: Graph, k: int) -> list[ClassKey]:
    """Sorted switch-iso keys of all induced ``k``-vertex subgraphs."""
    masks = _subset_masks(g.n, k)
    return sorted(ClassKey(k, int(b)) for b in _induced_keys(g, k, masks))


def common_core(family: Sequence[int]) -> int:
    if not family:
        raise ValueError("common core of an empty family is undefined")
    return reduce(lambda a, b: a & b, family)


# --------------------------------------------------------------------------
# closed forms

def _binom(a: int, b: int) -> int:
    return comb(a, b) if 0 <= b <= a else 0


def _parse_km(pattern: str) -> tuple[str, int]:
    match = _PATTERN_RE.match(pattern.strip())
    if not match or match.group(1) not in "KN":
        raise ValueError(f"closed forms exist for K<m> and N<m> patterns only, got {pattern!r}")
    m = int(match.group(2))
    if m < 3:
        raise ValueError(f"closed forms need m >= 3, got {m}")
    return match.group(1), m


def formula_path(n: int, pattern: str) -> int:
    """Closed form for ``#(L_n; K_m)`` or ``#(L_n; N_m)``."""
    if n < 2:
        raise ValueError(f"path formulas need n >= 2, got {n}")
    kind, m = _parse_km(pattern)
    if kind == "K":
        if m == 3:
            return (n - 2) * (n - 3)
        if m == 4:
            return _binom(n - 3, 2)
        return 0
    if m == 3:
        # the N3 class also holds the induced 2-edge paths
        return (n - 2) + _binom(n - 2, 3)
    return _binom(n - m + 1, m)


def formula_cycle(n: int, pattern: str) -> int:
    """Closed form for ``#(C_n; K_m)`` or ``#(C_n; N_m)``, ``n >= 4``."""
    if n <= 3:
        raise ValueError(f"cycle formulas need n >= 4, got {n}")
    kind, m = _parse_km(pattern)
    if kind == "K":
        if m == 3:
            return n * (n - 4)
        if m == 4:
            return n * (n - 5) // 2 if n >= 5 else 0
        return 0
    if m == 3:
        return n + n * (n - 4) * (n - 5) // 6
    return n * _binom(n - m - 1, m - 1) // m


@dataclass(frozen=True)
class UnionShape:
    """Disjoint union of paths and cycles padded with isolated vertices to ``total``."""

    path_lengths: tuple[int, ...] = ()
    cycle_lengths: tuple[int, ...] = ()
    total: int = 0

    def __post_init__(self):
        object.__setattr__(self, "path_lengths", tuple(self.path_lengths))
        object.__setattr__(self, "cycle_lengths", tuple(self.cycle_lengths))
        if any(p < 2 for p in self.path_lengths):
            raise ValueError(f"path components need >= 2 vertices: {self.path_lengths}")
        if any(c <= 3 for c in self.cycle_lengths):
            raise ValueError(f"cycle components need > 3 vertices: {self.cycle_lengths}")
        used = sum(self.path_lengths) + sum(self.cycle_lengths)
        if used > self.total:
            raise ValueError(f"components use {used} vertices but total is {self.total}")

    def realize(self) -> Graph:
        parts = [path(p) for p in self.path_lengths] + [cycle(c) for c in self.cycle_lengths]
        return pad(disjoint_union(*parts), self.total)


def formula_union_k3(shape: UnionShape) -> int:
    n = shape.total
    return (sum((p - 2) * (p - 3) + (p - 1) * (n - p) for p in shape.path_lengths)
            + sum(c * (c - 4) + c * (n - c) for c in shape.cycle_lengths))


def formula_union_k4(shape: UnionShape) -> int:
    # counts induced pairs of independent edges; every member of the K4 class
    # other than 2K2 needs a triangle, which these shapes lack
    ps, cs = shape.path_lengths, shape.cycle_lengths
    within = sum(_binom(p - 3, 2) for p in ps) + sum(c * (c - 5) // 2 for c in cs if c >= 5)
    path_pairs = sum((a - 1) * (b - 1) for a, b in itertools.combinations(ps, 2))
    cycle_pairs = sum(a * b for a, b in itertools.combinations(cs, 2))
    mixed = sum((p - 1) * c for p in ps for c in cs)
    return within + path_pairs + cycle_pairs + mixed
