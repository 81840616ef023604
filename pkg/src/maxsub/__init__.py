"""Enumeration of maximal induced subgraphs satisfying a graph property.

Hereditary properties are handled by a pool that grows the solutions one
vertex at a time; connected- and rooted-hereditary properties by a two-stack
search through a fixed vertex, which also drives a streaming mode.  Both
reduce the general problem to a restricted one supplied per property.
"""

from .errors import ContractError, GraphParseError, MaxSubError, OracleLimitError
from .framework import (
    Property,
    SolutionSet,
    almost_satisfies,
    generic_restricted,
    is_max,
    restricted_all,
    restricted_with_vertex,
    sat,
)
from .graph import (
    Graph,
    InducedSubgraph,
    PropertyClass,
    VertexSet,
    extend,
    format_graph,
    induced,
    is_connected,
    is_rooted,
    neighbors,
    parse_graph,
    union_sub,
)
from .hered import gen_hered, gen_ordered, prefix_solutions
from .oracle import brute_force_all, brute_force_with_vertex
from .properties import CATALOG, get_property, make_G1, make_G2
from .stats import EngineStats
from .vcs import (
    SolutionSink,
    StackEntry,
    enumerate_incremental,
    gen_all_connected,
    gen_all_rooted,
    gen_with_vertex,
    push_appropriate,
)

__version__ = "0.1.0"
