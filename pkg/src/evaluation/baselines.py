"""
Baseline graph distances: degree distribution (Degree) and dominant eigenvector (EV).

Both are cheap, permutation invariant, and compare graphs of different sizes.
"""

import numpy as np

from src.constants import POWER_ITERATION_TOL
from src.graph.core import Graph


def degree_histogram(g: Graph, length: int | None = None) -> np.ndarray:
    """Normalized histogram of integer-rounded weighted degrees over bins 0..max."""
    degrees = np.rint(g.degrees()).astype(np.int64)
    counts = np.bincount(degrees, minlength=length or 0)
    return counts / counts.sum()


def baseline_degree(g1: Graph, g2: Graph) -> float:
    """Euclidean distance between normalized degree histograms, zero-padded to one length."""
    length = int(max(np.rint(g1.degrees()).max(), np.rint(g2.degrees()).max())) + 1
    return float(np.linalg.norm(degree_histogram(g1, length) - degree_histogram(g2, length)))


def dominant_eigenvector(g: Graph, max_iter: int | None = None) -> np.ndarray:
    """
    Perron vector of the adjacency by power iteration on A + I.

    The unit shift keeps the iteration from oscillating on bipartite graphs
    without changing eigenvectors. The result has unit norm and its
    largest-magnitude entry positive.
    """
    n = g.n
    x = np.full(n, 1.0 / np.sqrt(n))
    for _ in range(max_iter or max(1000, 100 * n)):
        y = g.adjacency @ x + x
        y /= np.linalg.norm(y)
        converged = np.abs(y - x).max() <= POWER_ITERATION_TOL
        x = y
        if converged:
            break
    if x[np.argmax(np.abs(x))] < 0:
        x = -x
    return x


def baseline_ev(g1: Graph, g2: Graph) -> float:
    """Euclidean distance between descending-sorted dominant eigenvectors, zero-padded."""
    v1 = np.sort(dominant_eigenvector(g1))[::-1]
    v2 = np.sort(dominant_eigenvector(g2))[::-1]
    length = max(v1.size, v2.size)
    v1 = np.pad(v1, (0, length - v1.size))
    v2 = np.pad(v2, (0, length - v2.size))
    return float(np.linalg.norm(v1 - v2))
