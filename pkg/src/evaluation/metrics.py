"""
Quality of a graph distance matrix against known class labels.

- knn_cv: repeated random train/test splits scored with an inverse-distance
  weighted kNN classifier on the precomputed distances
- silhouette: cluster density of the labelled classes
- hierarchical_order: average-linkage dendrogram leaf order (heatmap order)
- class_separation: mean intra- vs inter-class distance per class
"""

import warnings

import numpy as np
from scipy.cluster.hierarchy import leaves_list, linkage
from scipy.spatial.distance import squareform
from sklearn.metrics import silhouette_score
from sklearn.model_selection import ShuffleSplit, StratifiedShuffleSplit
from sklearn.neighbors import KNeighborsClassifier

from src.constants import KNN_DISTANCE_FLOOR, SYMMETRY_TOL
from src.entity.artifact_schemas import ClassSeparation, EvalReport
from src.evaluation.distance_matrix import DistanceMatrix
from src.utils.exception import DomainError
from src.utils.logger import get_logger

logger = get_logger(__name__)

MAX_SPLIT_ATTEMPTS = 1000


def check_distance_matrix(dm: DistanceMatrix) -> np.ndarray:
    """
    Validated copy of the matrix values with an exactly zero diagonal.

    Raises:
        DomainError: Non-finite or negative entries, asymmetry or a non-zero
            diagonal beyond 1e-9 (relative to the largest entry when that exceeds 1).
    """
    D = np.array(dm.values, dtype=np.float64)
    if not np.all(np.isfinite(D)) or D.min(initial=0.0) < 0:
        raise DomainError("distance matrix must be finite and non-negative")
    tol = SYMMETRY_TOL * max(1.0, float(D.max(initial=0.0)))
    if np.abs(D - D.T).max(initial=0.0) > tol:
        raise DomainError("distance matrix is not symmetric")
    if np.abs(np.diag(D)).max(initial=0.0) > tol:
        raise DomainError("distance matrix has a non-zero diagonal")
    np.fill_diagonal(D, 0.0)
    return (D + D.T) / 2.0


def inverse_distance_weights(distances: np.ndarray) -> np.ndarray:
    """kNN vote weights 1 / max(d, 1e-12); a zero-distance neighbour dominates."""
    return 1.0 / np.maximum(distances, KNN_DISTANCE_FLOOR)


def _draw_split(labels: np.ndarray, test_frac: float, seed: int, stratified: bool):
    splitter_cls = StratifiedShuffleSplit if stratified else ShuffleSplit
    splitter = splitter_cls(n_splits=1, test_size=test_frac, random_state=seed)
    return next(splitter.split(np.zeros((labels.size, 1)), labels))


def knn_cv(
    dm: DistanceMatrix,
    k: int = 5,
    folds: int = 20,
    test_frac: float = 0.2,
    seed: int = 0,
) -> EvalReport:
    """
    Weighted kNN accuracy over `folds` seeded random splits.

    Fold f first uses seed `seed + f`, shifted by the number of splits redrawn
    so far. Splits are stratified by class; if the labels cannot be stratified
    (e.g. a singleton class or fewer test slots than classes) plain shuffled
    splits are used instead. A split whose training part misses a class is
    redrawn with the next seed and counted in `regenerated_folds`.

    Raises:
        DomainError: Invalid k, folds or test_frac, or no valid split found.
    """
    if k < 1:
        raise DomainError(f"k must be >= 1, got {k}")
    if folds < 2:
        raise DomainError(f"folds must be >= 2, got {folds}")
    if not 0.0 < test_frac < 1.0:
        raise DomainError(f"test_frac must lie in (0, 1), got {test_frac}")

    D = check_distance_matrix(dm)
    labels = np.asarray(dm.labels)
    classes = np.unique(labels)

    stratified = True
    try:
        _draw_split(labels, test_frac, seed, stratified=True)
    except ValueError as e:
        logger.warning(f"Stratified split impossible ({e}); using shuffled splits")
        stratified = False

    scores: list[float] = []
    regenerated = 0
    for fold in range(folds):
        for _ in range(MAX_SPLIT_ATTEMPTS):
            train, test = _draw_split(labels, test_frac, seed + fold + regenerated, stratified)
            if np.unique(labels[train]).size == classes.size:
                break
            regenerated += 1
            logger.warning(f"Fold {fold}: a class is missing from training, redrawing")
        else:
            raise DomainError(f"no split with every class in training after {MAX_SPLIT_ATTEMPTS} tries")

        clf = KNeighborsClassifier(
            n_neighbors=min(k, train.size),
            weights=inverse_distance_weights,
            metric="precomputed",
        )
        clf.fit(D[np.ix_(train, train)], labels[train])
        predicted = clf.predict(D[np.ix_(test, train)])
        scores.append(float(np.mean(predicted == labels[test])))

    logger.info(
        f"kNN (k={k}) over {folds} folds: {np.mean(scores):.3f} +- {np.std(scores):.3f}"
    )
    return EvalReport(
        knn_mean=float(np.mean(scores)),
        knn_std=float(np.std(scores)),
        knn_fold_scores=scores,
        knn_neighbors=k,
        folds=folds,
        test_frac=test_frac,
        seed=seed,
        regenerated_folds=regenerated,
        method=dm.method,
        variant=dm.variant,
        time_ms=dm.times.mean_pair_ms if dm.times else None,
        n_graphs=dm.size,
    )


def singleton_classes(labels: list[str]) -> list[str]:
    values, counts = np.unique(np.asarray(labels), return_counts=True)
    return [str(v) for v in values[counts == 1]]


def silhouette(dm: DistanceMatrix) -> float:
    """
    Mean silhouette of the labelled classes on the precomputed distances.

    Points of singleton classes score 0. When every class is a singleton the
    score is 0.

    Raises:
        DomainError: Fewer than two classes.
    """
    D = check_distance_matrix(dm)
    labels = np.asarray(dm.labels)
    n_classes = np.unique(labels).size
    if n_classes < 2:
        raise DomainError(f"silhouette needs at least 2 classes, got {n_classes}")
    if n_classes == labels.size:
        return 0.0

    singles = singleton_classes(dm.labels)
    if singles:
        logger.warning(f"Singleton classes score 0 in the silhouette: {singles}")
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        score = float(silhouette_score(D, labels, metric="precomputed"))
    return float(np.clip(score, -1.0, 1.0))


def hierarchical_order(dm: DistanceMatrix) -> np.ndarray:
    """0-based leaf order of the average-linkage dendrogram."""
    D = check_distance_matrix(dm)
    if dm.size < 2:
        return np.arange(dm.size)
    Z = linkage(squareform(D, checks=False), method="average")
    return leaves_list(Z)


def class_separation(dm: DistanceMatrix) -> dict[str, ClassSeparation]:
    """
    Per class, the mean distance between distinct members (None for a
    singleton) and the mean distance from members to all other graphs.

    Raises:
        DomainError: Fewer than two classes.
    """
    D = check_distance_matrix(dm)
    labels = np.asarray(dm.labels)
    classes = np.unique(labels)
    if classes.size < 2:
        raise DomainError("class separation needs at least 2 classes")

    result = {}
    for c in classes:
        inside = labels == c
        m = int(inside.sum())
        intra = D[np.ix_(inside, inside)].sum() / (m * (m - 1)) if m > 1 else None
        inter = D[np.ix_(inside, ~inside)].mean()
        result[str(c)] = ClassSeparation(
            intra=None if intra is None else float(intra), inter=float(inter)
        )
    return result


def evaluate(
    dm: DistanceMatrix,
    k: int = 5,
    folds: int = 20,
    test_frac: float = 0.2,
    seed: int = 0,
) -> EvalReport:
    """kNN cross-validation plus silhouette and class separation in one report."""
    report = knn_cv(dm, k=k, folds=folds, test_frac=test_frac, seed=seed)
    return report.model_copy(
        update={
            "silhouette": silhouette(dm),
            "singleton_classes": singleton_classes(dm.labels),
            "class_separation": class_separation(dm),
        }
    )
