"""
Global Pytest Fixtures.

This module provides shared fixtures for the entire test suite: small
hand-checkable graphs, a fast embedding config, toy distance matrices and a
self-contained config/params pair written into a temporary directory.
"""

import numpy as np
import pytest
import yaml

from src.entity.config_entity import EmbeddingConfig
from src.evaluation.distance_matrix import DistanceMatrix
from src.graph.core import Graph


@pytest.fixture
def triangle():
    """K3: every node has degree 2."""
    return Graph.from_dense(np.ones((3, 3)) - np.eye(3))


@pytest.fixture
def path3():
    """P3: 1 - 2 - 3, degrees (1, 2, 1)."""
    return Graph.from_dense([[0, 1, 0], [1, 0, 1], [0, 1, 0]])


@pytest.fixture
def cycle6():
    A = np.zeros((6, 6))
    for v in range(6):
        A[v, (v + 1) % 6] = A[(v + 1) % 6, v] = 1.0
    return Graph.from_dense(A)


@pytest.fixture
def random_graph():
    """Connected-ish weighted graph on 12 nodes, fixed seed."""
    rng = np.random.default_rng(7)
    upper = np.triu(rng.random((12, 12)) < 0.35, k=1) * rng.uniform(0.5, 2.0, (12, 12))
    return Graph.from_dense(upper + upper.T)


@pytest.fixture
def fast_embedding():
    """Small embedding config that keeps mixture fits fast."""
    return EmbeddingConfig(method="CCB", k=3, d=2, s=64, seed=11, chunk_size=16)


@pytest.fixture
def block_matrix():
    """Two well-separated classes of three graphs each."""
    intra, inter = 0.1, 10.0
    labels = np.array(["A"] * 3 + ["B"] * 3)
    values = np.where(labels[:, None] == labels[None, :], intra, inter)
    np.fill_diagonal(values, 0.0)
    return DistanceMatrix(
        values=values,
        labels=labels.tolist(),
        names=[f"g{i}" for i in range(6)],
        method="TEST",
    )


@pytest.fixture
def config_files(tmp_path):
    """config.yaml / params.yaml whose artifacts live under tmp_path, sized for tests."""
    artifacts = tmp_path / "artifacts"
    config = {
        "artifacts_root": str(artifacts),
        "dataset_generation": {
            "root_dir": str(artifacts / "dataset"),
            "manifest_file": "manifest.json",
        },
        "distance_computation": {
            "root_dir": str(artifacts / "distance"),
            "manifest_path": str(artifacts / "dataset" / "manifest.json"),
            "matrix_file": "distances.csv",
            "plans_dir": "plans",
        },
        "distance_evaluation": {
            "root_dir": str(artifacts / "evaluation"),
            "matrix_path": str(artifacts / "distance" / "distances.csv"),
            "manifest_path": str(artifacts / "dataset" / "manifest.json"),
            "report_file": "report.json",
            "leaf_order_file": "leaf_order.txt",
            "experiment_name": "gmot_tests",
        },
        "plan_export": {
            "root_dir": str(artifacts / "plan_export"),
            "plan_file": "plan.csv",
            "cost_file": "cost.csv",
            "alignment_file": "alignment.json",
        },
    }
    params = {
        "seed": 3,
        "generator": {
            "models": ["ER", "WS", "BA", "CF"],
            "graphs_per_model": 4,
            "n_min": 12,
            "n_max": 20,
            "expected_degree": 4,
            "rewire_prob": 0.1,
        },
        "embedding": {
            "method": "CCB",
            "colors": 3,
            "depth": 2,
            "samples": 40,
            "ridge": 1e-9,
            "chunk_size": 20,
        },
        "distance": {"variant": "tied", "n_jobs": 1, "save_plans": False},
        "evaluation": {"knn_neighbors": 3, "folds": 4, "test_frac": 0.25},
        "tracking": {"enabled": False, "uri": ""},
    }
    config_path = tmp_path / "config.yaml"
    params_path = tmp_path / "params.yaml"
    config_path.write_text(yaml.safe_dump(config))
    params_path.write_text(yaml.safe_dump(params))
    return config_path, params_path


@pytest.fixture(autouse=True)
def _no_env_seed(monkeypatch):
    monkeypatch.delenv("GMOT_SEED", raising=False)
    monkeypatch.delenv("MLFLOW_TRACKING_URI", raising=False)
