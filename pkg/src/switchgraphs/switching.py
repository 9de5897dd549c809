"""Switching: the complete-bipartite subgroup, local complementation, and
the switch-equivalence relation with explicit witnesses."""

from __future__ import annotations

from typing import Optional

from .graph_core import (
    Graph,
    GraphError,
    VertexSetLike,
    as_mask,
    complement,
    complete_bipartite,
    members,
    star_masks,
)

# A witness is the vertex mask A (vertex 0 not in A) with G2 = switch(G1, A).
BipartitionWitness = int


def _nonempty(g: Graph) -> None:
    if g.n == 0:
        raise GraphError("switching needs at least one vertex")


def normalize_side(n: int, side: int) -> int:
    """Pick the side of a bipartition that avoids vertex 0."""
    return side ^ ((1 << n) - 1) if side & 1 else side


def switch(g: Graph, side: VertexSetLike) -> Graph:
    """Toggle every pair with exactly one end in ``side``."""
    _nonempty(g)
    return Graph(g.n, g.edges ^ complete_bipartite(g.n, as_mask(g.n, side)).edges)


def local_complement(g: Graph, a: int) -> Graph:
    _nonempty(g)
    if not 0 <= a < g.n:
        raise GraphError(f"vertex {a} out of range for n={g.n}")
    return Graph(g.n, g.edges ^ star_masks(g.n)[a])


def bipartite_witness(d: Graph) -> Optional[BipartitionWitness]:
    """The side ``A`` (without vertex 0) with ``d == K_{A, X-A}``, if any."""
    _nonempty(d)
    side = d.neighbors(0)
    if complete_bipartite(d.n, side).edges == d.edges:
        return side
    return None


def switch_equivalent(g1: Graph, g2: Graph) -> Optional[BipartitionWitness]:
    if g1.n != g2.n:
        raise GraphError(f"graphs on different vertex counts ({g1.n} vs {g2.n})")
    return bipartite_witness(Graph(g1.n, g1.edges ^ g2.edges))


def switch_class(g: Graph) -> list[Graph]:
    """All ``2**(n-1)`` members of the switching class, one per side avoiding vertex 0."""
    _nonempty(g)
    return [switch(g, side << 1) for side in range(1 << (g.n - 1))]


def local_complement_path(g1: Graph, g2: Graph) -> Optional[list[int]]:
    """Vertices whose local complementations, applied in order, turn ``g1`` into ``g2``."""
    side = switch_equivalent(g1, g2)
    return None if side is None else members(side)


def extended_equivalent(g1: Graph, g2: Graph) -> bool:
    """Switch-equivalence up to complementing one of the graphs."""
    return switch_equivalent(g1, g2) is not None or switch_equivalent(g1, complement(g2)) is not None
