from src.graph.core import Graph, matrix_norm, permute
from src.graph.generators import generate, generate_dataset
from src.graph.io import (
    load_dense_matrix,
    load_edge_list,
    load_graph,
    load_graph_named,
    load_manifest,
    write_edge_list,
)

__all__ = [
    "Graph",
    "matrix_norm",
    "permute",
    "generate",
    "generate_dataset",
    "load_dense_matrix",
    "load_edge_list",
    "load_graph",
    "load_graph_named",
    "load_manifest",
    "write_edge_list",
]
