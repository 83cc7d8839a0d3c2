"""
Unit Tests for the distance-matrix quality metrics: weighted kNN cross-validation,
silhouette, dendrogram leaf order and class separation.
"""

import numpy as np
import pytest
from scipy.spatial.distance import cdist

from src.evaluation.distance_matrix import DistanceMatrix
from src.evaluation.metrics import (
    check_distance_matrix,
    class_separation,
    evaluate,
    hierarchical_order,
    inverse_distance_weights,
    knn_cv,
    silhouette,
    singleton_classes,
)
from src.utils.exception import DomainError


def _matrix(values, labels):
    values = np.asarray(values, dtype=float)
    return DistanceMatrix(
        values=values,
        labels=list(labels),
        names=[f"g{i}" for i in range(len(labels))],
        method="TEST",
    )


def _points_matrix(n, labels, seed=0):
    points = np.random.default_rng(seed).normal(size=(n, 2))
    return _matrix(cdist(points, points), labels)


# --- validation -------------------------------------------------------------


@pytest.mark.parametrize(
    "values",
    [
        [[0.0, -1.0], [-1.0, 0.0]],
        [[0.0, np.nan], [np.nan, 0.0]],
        [[0.0, 1.0], [2.0, 0.0]],
        [[0.5, 1.0], [1.0, 0.0]],
    ],
    ids=["negative", "nan", "asymmetric", "diagonal"],
)
def test_check_rejects_invalid_matrices(values):
    with pytest.raises(DomainError):
        check_distance_matrix(_matrix(values, ["a", "b"]))


def test_check_symmetrizes_round_off():
    D = check_distance_matrix(_matrix([[1e-12, 1.0], [1.0 + 1e-12, 0.0]], ["a", "b"]))
    assert D[0, 0] == 0.0
    assert D[0, 1] == D[1, 0]


def test_inverse_distance_weights_floor():
    w = inverse_distance_weights(np.array([[0.0, 2.0]]))
    assert w[0, 0] == pytest.approx(1e12)
    assert w[0, 1] == 0.5


# --- kNN --------------------------------------------------------------------


def test_knn_separated_classes_are_perfect(block_matrix):
    report = knn_cv(block_matrix, k=5, folds=10, test_frac=0.2, seed=0)
    assert report.knn_mean == 1.0
    assert report.knn_std == 0.0
    assert len(report.knn_fold_scores) == 10
    assert report.n_graphs == 6
    assert report.method == "TEST"
    assert report.time_ms is None


def test_knn_is_deterministic():
    labels = np.repeat(["a", "b", "c"], 10)
    dm = _points_matrix(30, labels, seed=1)
    first = knn_cv(dm, k=3, folds=5, seed=4)
    second = knn_cv(dm, k=3, folds=5, seed=4)
    assert first.knn_fold_scores == second.knn_fold_scores


def test_knn_random_labels_near_chance():
    labels = np.random.default_rng(2).permutation(np.repeat(["a", "b", "c"], 20))
    report = knn_cv(_points_matrix(60, labels, seed=3), k=5, folds=20, seed=0)
    assert 0.15 < report.knn_mean < 0.55


def test_knn_singleton_class_falls_back_to_shuffled_splits():
    labels = ["A", "A", "A", "A", "B", "B", "B", "B", "C"]
    dm = _points_matrix(9, labels, seed=5)
    report = knn_cv(dm, k=3, folds=4, test_frac=0.25, seed=1)
    assert len(report.knn_fold_scores) == 4
    assert report.regenerated_folds >= 0
    assert 0.0 <= report.knn_mean <= 1.0


def test_knn_parameter_validation(block_matrix):
    with pytest.raises(DomainError):
        knn_cv(block_matrix, k=0)
    with pytest.raises(DomainError):
        knn_cv(block_matrix, folds=1)
    with pytest.raises(DomainError):
        knn_cv(block_matrix, test_frac=1.0)


# --- silhouette -------------------------------------------------------------


def test_silhouette_separated_classes(block_matrix):
    assert silhouette(block_matrix) > 0.9


def test_silhouette_equal_distances_is_zero():
    values = np.ones((6, 6)) - np.eye(6)
    assert silhouette(_matrix(values, ["a"] * 3 + ["b"] * 3)) == pytest.approx(0.0)


def test_silhouette_all_singletons_is_zero():
    assert silhouette(_points_matrix(4, ["a", "b", "c", "d"])) == 0.0


def test_silhouette_singleton_scores_zero():
    labels = np.array(["A", "A", "B", "B", "C"])
    values = np.where(labels[:, None] == labels[None, :], 0.1, 10.0)
    np.fill_diagonal(values, 0.0)
    # Four members score 0.99 each, the singleton 0
    assert silhouette(_matrix(values, labels)) == pytest.approx(4 * 0.99 / 5)


def test_silhouette_needs_two_classes():
    with pytest.raises(DomainError):
        silhouette(_points_matrix(4, ["a"] * 4))


def test_singleton_classes():
    assert singleton_classes(["a", "b", "b", "c"]) == ["a", "c"]
    assert singleton_classes(["a", "a"]) == []


# --- dendrogram order -------------------------------------------------------


def test_order_two_graphs():
    np.testing.assert_array_equal(hierarchical_order(_matrix([[0, 3], [3, 0]], ["a", "b"])), [0, 1])


def test_order_is_a_permutation():
    order = hierarchical_order(_points_matrix(15, ["x"] * 15, seed=6))
    np.testing.assert_array_equal(np.sort(order), np.arange(15))


def test_order_keeps_classes_contiguous():
    labels = np.array(["A", "B", "A", "B", "A", "B"])
    values = np.where(labels[:, None] == labels[None, :], 0.1, 10.0)
    np.fill_diagonal(values, 0.0)
    order = hierarchical_order(_matrix(values, labels))
    ordered = labels[order]
    assert (ordered[:3] == ordered[0]).all()
    assert (ordered[3:] == ordered[3]).all()


def test_order_invariant_to_constant_shift():
    dm = _points_matrix(10, ["x"] * 10, seed=7)
    shifted = dm.values + 5.0 * (1 - np.eye(10))
    np.testing.assert_array_equal(
        hierarchical_order(dm), hierarchical_order(_matrix(shifted, dm.labels))
    )


# --- class separation and full report ---------------------------------------


def test_class_separation(block_matrix):
    sep = class_separation(block_matrix)
    assert set(sep) == {"A", "B"}
    assert sep["A"].intra == pytest.approx(0.1)
    assert sep["A"].inter == pytest.approx(10.0)


def test_class_separation_singleton_has_no_intra():
    labels = ["A", "A", "B"]
    sep = class_separation(_matrix([[0, 1, 4], [1, 0, 6], [4, 6, 0]], labels))
    assert sep["B"].intra is None
    assert sep["B"].inter == pytest.approx(5.0)
    assert sep["A"].intra == pytest.approx(1.0)


def test_class_separation_needs_two_classes():
    with pytest.raises(DomainError):
        class_separation(_points_matrix(3, ["a"] * 3))


def test_evaluate_fills_report(block_matrix):
    report = evaluate(block_matrix, k=3, folds=4, seed=2)
    assert report.knn_mean == 1.0
    assert report.silhouette > 0.9
    assert report.singleton_classes == []
    assert set(report.class_separation) == {"A", "B"}
    assert report.model_dump()["seed"] == 2
