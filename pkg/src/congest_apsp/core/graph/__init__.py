from .errors import DisconnectedGraphError, GraphError, GraphFormatError, GraphValidationError
from .generate import generate_gnp
from .models import INF, Distance, Edge, NodeView, WeightedDigraph, format_distance, saturating_add, underlying_undirected
from .parse import parse_graph, read_graph, serialize_graph, write_graph

__all__ = [
    "INF",
    "DisconnectedGraphError",
    "Distance",
    "Edge",
    "GraphError",
    "GraphFormatError",
    "GraphValidationError",
    "NodeView",
    "WeightedDigraph",
    "format_distance",
    "generate_gnp",
    "parse_graph",
    "read_graph",
    "saturating_add",
    "serialize_graph",
    "underlying_undirected",
    "write_graph",
]
