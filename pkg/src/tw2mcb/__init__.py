"""Linear-time minimum cycle bases of weighted partial 2-trees."""

from .assembly import (
    ExplicitCycle,
    ImplicitMCB,
    expand_cycle,
    minimum_cycle_basis,
    report_explicit,
)
from .errors import (
    MCBError,
    NotOuterplanar,
    NotPartial2Tree,
    ParseError,
)
from .graph import (
    WeightedGraph,
    biconnected_components,
    cycle_space_dimension,
    dump_graph,
    gen_random_partial_2tree,
    load_graph,
    recognize_partial_2tree,
)

__all__ = [
    "ExplicitCycle",
    "ImplicitMCB",
    "MCBError",
    "NotOuterplanar",
    "NotPartial2Tree",
    "ParseError",
    "WeightedGraph",
    "biconnected_components",
    "cycle_space_dimension",
    "dump_graph",
    "expand_cycle",
    "gen_random_partial_2tree",
    "load_graph",
    "minimum_cycle_basis",
    "recognize_partial_2tree",
    "report_explicit",
]

__version__ = "0.1.0"
