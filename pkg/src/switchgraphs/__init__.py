"""Switching classes of small simple graphs.

Graphs on up to 16 vertices are edge bit sets; switch-equivalence is
congruence modulo the spanning complete bipartite graphs, and ``~`` adds
isomorphism on top. Canonical forms and class keys are exact permutation
searches, compiled with numba when available.
"""

__version__ = "0.1.0"

from .graph_core import (  # noqa: E402
    MAX_VERTICES,
    Graph,
    GraphError,
    as_mask,
    complement,
    complete,
    complete_bipartite,
    cycle,
    disjoint_union,
    empty,
    induced,
    make_graph,
    members,
    pad,
    path,
    symmetric_difference,
)
from .switching import (  # noqa: E402
    bipartite_witness,
    extended_equivalent,
    local_complement,
    local_complement_path,
    switch,
    switch_class,
    switch_equivalent,
)
from .canonical import (  # noqa: E402
    ClassKey,
    automorphisms,
    canonical_form,
    isomorphic,
    relabel,
    switch_iso_equivalent,
    switch_iso_key,
)
from .invariants import (  # noqa: E402
    PatternClass,
    UnionShape,
    common_core,
    count_sub,
    formula_cycle,
    formula_path,
    formula_union_k3,
    formula_union_k4,
    named_pattern,
    sub_family,
)
from .classify import (  # noqa: E402
    Catalog,
    InvariantProfile,
    TypeRecord,
    build_catalog,
    enumerate_types_inductive,
    enumerate_types_transversal,
    mu,
    profile,
    switch_class_count,
    type_of,
)
