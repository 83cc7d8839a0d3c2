from src.transport.gaussian_w2 import (
    gaussian_w2_full,
    gaussian_w2_scaled,
    gaussian_w2_tied,
    sqrtm_psd,
)
from src.transport.solver import (
    CostMatrix,
    TransportPlan,
    build_cost,
    cached_graph_mixture,
    export_cost_csv,
    export_plan_csv,
    graph_mixture,
    mixture_cache_key,
    mixture_distance,
    node_alignment,
    solve_discrete_ot,
)

__all__ = [
    "gaussian_w2_full",
    "gaussian_w2_scaled",
    "gaussian_w2_tied",
    "sqrtm_psd",
    "CostMatrix",
    "TransportPlan",
    "build_cost",
    "cached_graph_mixture",
    "export_cost_csv",
    "export_plan_csv",
    "graph_mixture",
    "mixture_cache_key",
    "mixture_distance",
    "node_alignment",
    "solve_discrete_ot",
]
