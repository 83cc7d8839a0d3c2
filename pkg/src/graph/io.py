"""
Graph file ingestion and export.

Two input formats are supported, both readable from a path or an open stream
(the path `-` reads standard input, as an edge list unless `fmt` says otherwise):
- Edge lists: whitespace-separated "u v" or "u v w", 1-based ids, '#' comments.
  A `# nodes: N` comment declares the node count so isolated trailing nodes survive.
- Dense matrices: a headerless CSV grid of floats (e.g. correlation matrices of
  functional-connectivity networks). Symmetrized, negatives clamped to 0.
"""

import io
import re
import sys
from pathlib import Path
from typing import IO, Union

import numpy as np
import pandas as pd
import scipy.sparse as sp
from pydantic import ValidationError

from src.entity.artifact_schemas import DatasetManifest
from src.graph.core import Graph
from src.utils.common import load_json
from src.utils.exception import ArtifactError, DomainError, GraphParseError, ShapeError
from src.utils.logger import get_logger

logger = get_logger(__name__)

Source = Union[str, Path, IO[str], IO[bytes]]

_NODES_DIRECTIVE = re.compile(r"^#\s*nodes\s*:\s*(\d+)\s*$")

STDIN = "-"


def _read_text(source: Source) -> str:
    if isinstance(source, (str, Path)):
        try:
            return Path(source).read_text(encoding="utf-8")
        except OSError as e:
            raise ArtifactError(f"cannot read graph file: {e.strerror}", source)
        except UnicodeDecodeError as e:
            raise ArtifactError(
                f"graph file is not UTF-8 text ({e.reason} at byte {e.start})", source
            )
    try:
        data = source.read()
        return data.decode("utf-8") if isinstance(data, bytes) else data
    except UnicodeDecodeError as e:
        name = getattr(source, "name", "<stream>")
        raise ArtifactError(
            f"graph input is not UTF-8 text ({e.reason} at byte {e.start})", name
        )


def load_edge_list(source: Source, weighted: bool = True) -> Graph:
    """
    Parses an edge list into a Graph.

    Both (u, v) and (v, u) are written; a repeated edge overwrites the earlier
    weight. With `weighted=False` a third column is validated but ignored.

    Raises:
        GraphParseError: Malformed line (the error carries the line number).
        DomainError: Non-positive weight or node id below 1.
    """
    declared_n = 0
    edges: dict[tuple[int, int], float] = {}

    for line_number, raw in enumerate(_read_text(source).splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            directive = _NODES_DIRECTIVE.match(line)
            if directive:
                declared_n = int(directive.group(1))
            continue

        fields = line.split()
        if len(fields) not in (2, 3):
            raise GraphParseError(
                f"expected 'u v' or 'u v w', got {len(fields)} fields", line_number
            )
        try:
            u, v = int(fields[0]), int(fields[1])
            w = float(fields[2]) if len(fields) == 3 else 1.0
        except ValueError:
            raise GraphParseError(f"non-numeric field in {line!r}", line_number)
        if u < 1 or v < 1:
            raise DomainError(f"line {line_number}: node ids are 1-based, got {u} {v}")
        if not np.isfinite(w) or w <= 0:
            raise DomainError(f"line {line_number}: weight must be positive, got {w}")

        key = (min(u, v) - 1, max(u, v) - 1)
        edges[key] = w if weighted else 1.0

    max_id = max((v + 1 for _, v in edges), default=0)
    n = max(declared_n, max_id)
    if n == 0:
        raise GraphParseError("edge list declares no nodes")

    rows, cols, weights = [], [], []
    for (u, v), w in edges.items():
        rows.append(u)
        cols.append(v)
        weights.append(w)
        if u != v:
            rows.append(v)
            cols.append(u)
            weights.append(w)

    A = sp.coo_array((weights, (rows, cols)), shape=(n, n)).tocsr()
    graph = Graph(A)
    logger.info(f"Loaded edge list: n={graph.n}, edges={graph.num_edges}")
    return graph


def load_dense_matrix(source: Source) -> Graph:
    """
    Reads a square CSV matrix as a complete weighted graph.

    The matrix is symmetrized via (M + M^T) / 2 and negative entries are
    clamped to 0; the diagonal is kept as read.

    Raises:
        GraphParseError: Non-numeric cell or ragged rows.
        ShapeError: Matrix is not square.
    """
    text = _read_text(source)
    try:
        frame = pd.read_csv(io.StringIO(text), header=None, dtype=np.float64)
    except pd.errors.EmptyDataError:
        raise GraphParseError("dense matrix file is empty")
    except (ValueError, pd.errors.ParserError) as e:
        raise GraphParseError(f"dense matrix is not a numeric CSV grid: {e}")

    matrix = frame.to_numpy()
    if np.isnan(matrix).any():
        raise GraphParseError("dense matrix has empty cells")
    if matrix.shape[0] != matrix.shape[1]:
        raise ShapeError(f"dense matrix must be square, got {matrix.shape}")

    symmetric = (matrix + matrix.T) / 2.0
    clamped = int((symmetric < 0).sum())
    if clamped:
        logger.info(f"Clamped {clamped} negative matrix entries to 0")
    graph = Graph.from_dense(np.clip(symmetric, 0.0, None))
    logger.info(f"Loaded dense matrix: n={graph.n}, edges={graph.num_edges}")
    return graph


def load_graph(path: Path, fmt: str = "auto", weighted: bool = True) -> Graph:
    """
    Loads a graph file, picking the format from the suffix when `fmt="auto"`.

    The path `-` reads standard input; "auto" then means an edge list.
    """
    path = Path(path)
    source: Source = path
    if str(path) == STDIN:
        source = getattr(sys.stdin, "buffer", sys.stdin)
    if fmt == "auto":
        fmt = "dense" if path.suffix.lower() == ".csv" else "edgelist"
    if fmt == "dense":
        return load_dense_matrix(source)
    if fmt == "edgelist":
        return load_edge_list(source, weighted=weighted)
    raise DomainError(f"unknown graph format {fmt!r}")


def write_edge_list(g: Graph, path: Path) -> Path:
    """Writes the upper triangle (diagonal included) as 1-based "u v w" lines."""
    upper = sp.triu(g.adjacency).tocoo()
    order = np.lexsort((upper.col, upper.row))
    lines = [f"# nodes: {g.n}"]
    lines += [
        f"{upper.row[i] + 1} {upper.col[i] + 1} {upper.data[i]:.17g}" for i in order
    ]
    try:
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")
    except OSError as e:
        raise ArtifactError(f"cannot write graph file: {e.strerror}", path)
    return Path(path)


def load_manifest(path: Path) -> list[tuple[Path, str]]:
    """
    Reads a dataset manifest (JSON object: graph file -> class label).

    Returns (graph path, label) pairs in manifest order, with graph paths
    resolved against the manifest's directory.
    """
    path = Path(path)
    try:
        manifest = DatasetManifest.model_validate(load_json(path))
    except ValidationError as e:
        raise ArtifactError(f"manifest must map file names to labels: {e}", path)
    if not manifest.root:
        raise ArtifactError("manifest lists no graphs", path)
    return [(path.parent / name, label) for name, label in manifest.root.items()]


def load_graph_named(path: Path, fmt: str = "auto") -> Graph:
    """`load_graph`, re-raising parse errors with the offending file attached."""
    try:
        return load_graph(path, fmt=fmt)
    except (GraphParseError, DomainError) as e:
        raise ArtifactError(f"unreadable graph: {e}", path) from e
