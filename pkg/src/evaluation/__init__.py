from src.evaluation.baselines import baseline_degree, baseline_ev, dominant_eigenvector
from src.evaluation.distance_matrix import (
    DistanceMatrix,
    load_distance_matrix,
    pairwise_distances,
    save_distance_matrix,
)
from src.evaluation.metrics import (
    class_separation,
    evaluate,
    hierarchical_order,
    knn_cv,
    silhouette,
)

__all__ = [
    "baseline_degree",
    "baseline_ev",
    "dominant_eigenvector",
    "DistanceMatrix",
    "load_distance_matrix",
    "pairwise_distances",
    "save_distance_matrix",
    "class_separation",
    "evaluate",
    "hierarchical_order",
    "knn_cv",
    "silhouette",
]
