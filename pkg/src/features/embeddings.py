"""
Randomized node embeddings: Colored Cooper-Barahona (CCB) and Colored
Neighborhood Propagation (CNP).

Both embeddings propagate a random node-to-color indicator matrix H through
normalized adjacency powers, P_0 = H and P_{i+1} = A P_i / ||A||, and read off
node v's rows of P_0..P_d. CCB concatenates them; CNP first sorts the k color
columns of node v's (d+1) x k matrix lexicographically, which removes the color
labels and makes the embedding isomorphism invariant in distribution. Every
embedding vector is scaled to unit Euclidean norm (zero vectors stay zero).

`sample_embeddings` draws s colorings and evaluates them in batches: the s
indicator matrices are stacked side by side so each propagation level is a
single sparse-dense product.
"""

from dataclasses import dataclass

import numpy as np

from src.entity.config_entity import EmbeddingConfig
from src.graph.core import Graph, matrix_norm
from src.utils.exception import DomainError, ShapeError
from src.utils.logger import get_logger

logger = get_logger(__name__)

CCB_BLOCK = "CCB-block"
CNP_UNIFORM = "CNP-uniform"


@dataclass(frozen=True, eq=False)
class ColorMatrix:
    """One color per node, kept as a label vector; `indicator` is the n x k matrix H."""

    colors: np.ndarray
    k: int
    kind: str

    def __post_init__(self):
        colors = np.asarray(self.colors, dtype=np.int64)
        if colors.ndim != 1:
            raise ShapeError("colors must be a vector with one entry per node")
        if colors.size and (colors.min() < 0 or colors.max() >= self.k):
            raise DomainError(f"colors must lie in 0..{self.k - 1}")
        object.__setattr__(self, "colors", colors)

    @property
    def n(self) -> int:
        return self.colors.shape[0]

    @property
    def indicator(self) -> np.ndarray:
        H = np.zeros((self.n, self.k))
        H[np.arange(self.n), self.colors] = 1.0
        return H


@dataclass(frozen=True, eq=False)
class EmbeddingSamples:
    """n x s x D tensor of embedding samples with D = k (d + 1)."""

    data: np.ndarray
    k: int
    d: int
    method: str

    def __post_init__(self):
        if self.data.ndim != 3 or self.data.shape[2] != self.k * (self.d + 1):
            raise ShapeError(
                f"samples must have shape (n, s, {self.k * (self.d + 1)}), got {self.data.shape}"
            )

    @property
    def n(self) -> int:
        return self.data.shape[0]

    @property
    def s(self) -> int:
        return self.data.shape[1]

    @property
    def dimension(self) -> int:
        return self.data.shape[2]


def ccb_partition_from_cuts(n: int, cuts) -> ColorMatrix:
    """
    Block coloring from interior cuts c_2 < ... < c_k in 1..n-1.

    With c_1 = 0 and c_{k+1} = n, 1-based node j gets color i iff
    c_i < j <= c_{i+1}; for 0-based node j that is the number of cuts <= j.
    """
    cuts = np.sort(np.asarray(cuts, dtype=np.int64))
    if cuts.size and (cuts[0] < 1 or cuts[-1] > n - 1 or np.any(np.diff(cuts) == 0)):
        raise DomainError(f"cuts must be distinct values in 1..{n - 1}")
    colors = np.searchsorted(cuts, np.arange(n), side="right")
    return ColorMatrix(colors=colors, k=cuts.size + 1, kind=CCB_BLOCK)


def sample_ccb_partition(n: int, k: int, rng: np.random.Generator) -> ColorMatrix:
    """Contiguous block coloring from k-1 cuts drawn without replacement from 1..n-1."""
    if not 1 <= k <= n:
        raise DomainError(f"CCB needs 1 <= k <= n, got k={k}, n={n}")
    cuts = rng.choice(np.arange(1, n), size=k - 1, replace=False) if k > 1 else []
    return ccb_partition_from_cuts(n, cuts)


def sample_cnp_coloring(n: int, k: int, rng: np.random.Generator) -> ColorMatrix:
    """Every node's color drawn i.i.d. uniformly from k colors."""
    if k < 1:
        raise DomainError(f"CNP needs k >= 1, got {k}")
    return ColorMatrix(colors=rng.integers(0, k, size=n), k=k, kind=CNP_UNIFORM)


def _propagate(g: Graph, H: np.ndarray, d: int, norm: float | None = None) -> np.ndarray:
    """Returns the (n, d+1, m) stack P_0..P_d for an n x m right-hand side H."""
    if H.shape[0] != g.n:
        raise ShapeError(f"color matrix has {H.shape[0]} rows, graph has {g.n} nodes")
    if d < 0:
        raise DomainError(f"depth must be >= 0, got {d}")
    norm = matrix_norm(g) if norm is None else norm

    levels = [H]
    for _ in range(d):
        levels.append((g.adjacency @ levels[-1]) / norm)
    return np.stack(levels, axis=1)


def _lex_sort_columns(M: np.ndarray) -> np.ndarray:
    """
    Sorts the columns of each trailing (d+1) x k matrix lexicographically,
    ascending, comparing the top row first. `np.lexsort` is stable, so equal
    columns keep their original order.
    """
    keys = np.moveaxis(M, -2, 0)[::-1]
    order = np.lexsort(keys, axis=-1)
    order = np.broadcast_to(order[..., None, :], M.shape)
    return np.take_along_axis(M, order, axis=-1)


def _unit_rows(X: np.ndarray) -> np.ndarray:
    norms = np.linalg.norm(X, axis=-1, keepdims=True)
    return np.divide(X, norms, out=np.zeros_like(X), where=norms > 0)


def ccb_embed(g: Graph, H: ColorMatrix, d: int) -> np.ndarray:
    """CCB embedding of every node for one coloring; returns an n x k(d+1) matrix."""
    levels = _propagate(g, H.indicator, d)
    return _unit_rows(levels.reshape(g.n, -1))


def cnp_embed(g: Graph, H: ColorMatrix, d: int) -> np.ndarray:
    """CNP embedding of every node for one coloring; returns an n x k(d+1) matrix."""
    levels = _propagate(g, H.indicator, d)
    return _unit_rows(_lex_sort_columns(levels).reshape(g.n, -1))


_SAMPLERS = {"CCB": sample_ccb_partition, "CNP": sample_cnp_coloring}


def coloring_streams(n: int, cfg: EmbeddingConfig) -> list[np.random.SeedSequence]:
    """
    One seed stream per coloring sample for an n-node graph.

    The streams are the children of `SeedSequence([cfg.seed, n])`: graphs with the
    same node count share them, graphs of different sizes draw independently.
    """
    return np.random.SeedSequence([cfg.seed, n]).spawn(cfg.s)


def sample_embeddings(g: Graph, cfg: EmbeddingConfig) -> EmbeddingSamples:
    """
    Draws cfg.s colorings and embeds every node under each of them.

    Sample i uses the i-th stream of `coloring_streams`, so the result does not
    depend on chunking or evaluation order. Two graphs with the same node count
    and config see the same colorings.
    """
    if cfg.method == "CCB" and cfg.k > g.n:
        raise DomainError(f"CCB cannot cut {g.n} nodes into k={cfg.k} blocks")

    sampler = _SAMPLERS[cfg.method]
    streams = coloring_streams(g.n, cfg)
    norm = matrix_norm(g)
    n, k, D = g.n, cfg.k, cfg.dimension
    data = np.empty((n, cfg.s, D))

    for start in range(0, cfg.s, cfg.chunk_size):
        chunk = streams[start : start + cfg.chunk_size]
        colors = np.stack(
            [sampler(n, k, np.random.default_rng(stream)).colors for stream in chunk],
            axis=1,
        )
        c = len(chunk)
        H = np.zeros((n, c, k))
        H[np.arange(n)[:, None], np.arange(c)[None, :], colors] = 1.0

        levels = _propagate(g, H.reshape(n, c * k), cfg.d, norm=norm)
        levels = levels.reshape(n, cfg.d + 1, c, k).transpose(0, 2, 1, 3)
        if cfg.method == "CNP":
            levels = _lex_sort_columns(levels)
        data[:, start : start + c] = _unit_rows(levels.reshape(n, c, D))

    return EmbeddingSamples(data=data, k=k, d=cfg.d, method=cfg.method)
