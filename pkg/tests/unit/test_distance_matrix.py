"""
Unit Tests for pairwise distance matrices and their CSV / sidecar artifacts.
"""

import json
from dataclasses import replace

import numpy as np
import pytest

from src.evaluation.distance_matrix import (
    DistanceMatrix,
    load_distance_matrix,
    pairwise_distances,
    save_distance_matrix,
    sidecar_path_for,
)
from src.graph.core import permute
from src.utils.exception import ArtifactError, DomainError, ShapeError


def test_identical_graphs_have_zero_distance(random_graph, fast_embedding):
    dm = pairwise_distances([random_graph, random_graph], "CCB", "full", fast_embedding)
    assert dm.values[0, 1] == pytest.approx(0.0, abs=1e-9)
    np.testing.assert_array_equal(np.diag(dm.values), 0.0)


def test_matrix_is_symmetric_with_one_timing_per_pair(random_graph, cycle6, path3, fast_embedding):
    cfg = replace(fast_embedding, k=2)
    dm = pairwise_distances([random_graph, cycle6, path3], "cnp", "tied", cfg)
    assert dm.method == "CNP"
    assert dm.variant == "tied"
    assert dm.config["method"] == "CNP"
    np.testing.assert_array_equal(dm.values, dm.values.T)
    assert np.all(dm.values[~np.eye(3, dtype=bool)] > 0)
    assert dm.times.pairs == 3
    assert dm.times.mean_pair_ms > 0


def test_baseline_method_has_no_variant(triangle, path3, cycle6):
    dm = pairwise_distances([triangle, path3, cycle6], "degree", labels=["a", "b", "c"])
    assert dm.method == "DEGREE"
    assert dm.variant is None
    assert dm.config == {}
    assert dm.values[0, 1] == pytest.approx(0.9428, abs=1e-4)
    assert dm.labels == ["a", "b", "c"]


def test_ev_distances_ignore_node_order(random_graph):
    perm = np.random.default_rng(0).permutation(random_graph.n)
    dm = pairwise_distances([random_graph, permute(random_graph, perm)], "EV")
    assert dm.values[0, 1] == pytest.approx(0.0, abs=1e-7)


def test_parallel_matches_serial(random_graph, cycle6, path3, fast_embedding):
    graphs = [random_graph, cycle6, path3]
    cfg = replace(fast_embedding, k=2)
    serial = pairwise_distances(graphs, "CCB", "scaled", cfg, n_jobs=1)
    parallel = pairwise_distances(graphs, "CCB", "scaled", cfg, n_jobs=2)
    np.testing.assert_allclose(serial.values, parallel.values)


def test_mixture_cache_leaves_distances_unchanged(
    tmp_path, random_graph, cycle6, path3, fast_embedding
):
    graphs = [random_graph, cycle6, path3]
    cfg = replace(fast_embedding, k=2)
    fresh = pairwise_distances(graphs, "CCB", "full", cfg)
    filled = pairwise_distances(graphs, "CCB", "full", cfg, cache_dir=tmp_path / "cache")
    reused = pairwise_distances(graphs, "CCB", "full", cfg, cache_dir=tmp_path / "cache")
    assert len(list((tmp_path / "cache").iterdir())) == 3
    np.testing.assert_array_equal(filled.values, fresh.values)
    np.testing.assert_array_equal(reused.values, fresh.values)


def test_keep_plans(random_graph, cycle6, fast_embedding):
    dm = pairwise_distances([random_graph, cycle6], "CCB", "tied", fast_embedding, keep_plans=True)
    assert list(dm.plans) == [(0, 1)]
    plan = dm.plans[(0, 1)]
    assert plan.pi.shape == (random_graph.n, cycle6.n)
    assert plan.cost == pytest.approx(dm.values[0, 1])


def test_pairwise_errors(triangle):
    with pytest.raises(DomainError):
        pairwise_distances([triangle, triangle], "WL")
    with pytest.raises(DomainError):
        pairwise_distances([triangle], "DEGREE")


def test_distance_matrix_shape_checks():
    with pytest.raises(ShapeError):
        DistanceMatrix(values=np.zeros((2, 3)), labels=["a", "b"], names=["x", "y"], method="EV")
    with pytest.raises(ShapeError):
        DistanceMatrix(values=np.zeros((2, 2)), labels=["a"], names=["x", "y"], method="EV")


def test_save_and_load(tmp_path, triangle, path3, cycle6):
    dm = pairwise_distances(
        [triangle, path3, cycle6], "EV", labels=["K", "P", "C"], names=["k3", "p3", "c6"]
    )
    csv_path = tmp_path / "d.csv"
    save_distance_matrix(dm, csv_path, sidecar_path_for(csv_path))

    lines = csv_path.read_text().strip().splitlines()
    assert len(lines) == 3
    assert all(len(line.split(",")) == 3 for line in lines)
    sidecar = json.loads((tmp_path / "d.json").read_text())
    assert sidecar["method"] == "EV"
    assert sidecar["times"]["pairs"] == 3

    loaded = load_distance_matrix(csv_path)
    np.testing.assert_array_equal(loaded.values, dm.values)
    assert loaded.labels == ["K", "P", "C"]
    assert loaded.names == ["k3", "p3", "c6"]
    assert loaded.variant is None


def test_load_missing_matrix(tmp_path):
    with pytest.raises(ArtifactError):
        load_distance_matrix(tmp_path / "nothing.csv")


def test_load_non_numeric_matrix(tmp_path):
    path = tmp_path / "bad.csv"
    path.write_text("0,x\n1,0\n")
    with pytest.raises(ArtifactError):
        load_distance_matrix(path)


def test_load_missing_sidecar(tmp_path):
    path = tmp_path / "m.csv"
    path.write_text("0,1\n1,0\n")
    with pytest.raises(ArtifactError):
        load_distance_matrix(path)
