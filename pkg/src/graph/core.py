"""
Graph data model and the spectral quantities the embeddings need.

A `Graph` is an undirected, non-negatively weighted adjacency matrix stored as a
`scipy.sparse.csr_array`. Self-loops are allowed. Nodes are 0-based.
"""

from dataclasses import dataclass
from typing import Sequence

import networkx as nx
import numpy as np
import scipy.sparse as sp

from src.constants import POWER_ITERATION_TOL, SYMMETRY_TOL
from src.utils.exception import DomainError, ShapeError


@dataclass(frozen=True, eq=False)
class Graph:
    adjacency: sp.csr_array

    def __post_init__(self):
        A = sp.csr_array(self.adjacency, dtype=np.float64)
        if A.ndim != 2 or A.shape[0] != A.shape[1]:
            raise ShapeError(f"adjacency must be square, got shape {A.shape}")
        A.sum_duplicates()
        A.eliminate_zeros()
        if A.nnz and A.data.min() < 0:
            raise DomainError("edge weights must be non-negative")
        if A.nnz and abs(A - A.T).max() > SYMMETRY_TOL:
            raise DomainError("adjacency must be symmetric (graphs are undirected)")
        object.__setattr__(self, "adjacency", A)

    @classmethod
    def from_dense(cls, matrix) -> "Graph":
        return cls(sp.csr_array(np.asarray(matrix, dtype=np.float64)))

    @classmethod
    def from_networkx(cls, g: nx.Graph) -> "Graph":
        """Builds a Graph from a networkx graph whose nodes are 0..n-1."""
        A = nx.to_scipy_sparse_array(
            g, nodelist=range(g.number_of_nodes()), weight="weight", format="csr"
        )
        return cls(A)

    @property
    def n(self) -> int:
        return self.adjacency.shape[0]

    @property
    def num_edges(self) -> int:
        """Undirected edges, self-loops counted once."""
        upper = sp.triu(self.adjacency, format="csr")
        return int(upper.nnz)

    def degrees(self) -> np.ndarray:
        """Weighted degree of every node (row sums, a self-loop counts once)."""
        return np.asarray(self.adjacency.sum(axis=1)).ravel()

    def to_dense(self) -> np.ndarray:
        return self.adjacency.toarray()

    def __eq__(self, other) -> bool:
        if not isinstance(other, Graph) or other.n != self.n:
            return False
        return (self.adjacency != other.adjacency).nnz == 0

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.num_edges})"


def matrix_norm(g: Graph) -> float:
    """
    Spectral norm of the adjacency by power iteration.

    Iterates x <- A x / ||A x|| from the uniform vector; the estimate ||A x||
    is non-decreasing for symmetric A and stops at relative change 1e-9 or after
    10 n iterations. The all-zero matrix returns 1.0 so it can divide safely.
    """
    A = g.adjacency
    if A.nnz == 0:
        return 1.0

    x = np.full(g.n, 1.0 / np.sqrt(g.n))
    estimate = 0.0
    for _ in range(max(1, 10 * g.n)):
        y = A @ x
        norm_y = float(np.linalg.norm(y))
        if norm_y == 0.0:
            return 1.0
        converged = abs(norm_y - estimate) <= POWER_ITERATION_TOL * norm_y
        estimate = norm_y
        x = y / norm_y
        if converged:
            break
    return estimate


def permute(g: Graph, perm: Sequence[int]) -> Graph:
    """
    Relabels nodes: node v of `g` becomes node perm[v], i.e. returns P A P^T.

    Raises:
        DomainError: If `perm` is not a bijection on 0..n-1.
    """
    perm = np.asarray(perm)
    if perm.shape != (g.n,) or not np.array_equal(np.sort(perm), np.arange(g.n)):
        raise DomainError(f"perm must be a permutation of 0..{g.n - 1}")

    coo = g.adjacency.tocoo()
    permuted = sp.coo_array(
        (coo.data, (perm[coo.row], perm[coo.col])), shape=g.adjacency.shape
    )
    return Graph(permuted.tocsr())
