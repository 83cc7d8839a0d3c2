"""
Random graph generators for the synthetic benchmark.

Four models, each parameterized so nodes have a target expected degree:
- ER: G(n, p) with p = expected_degree / (n - 1).
- WS: ring lattice with k = round(expected_degree) neighbours (made even),
  rewired with probability `rewire_prob` (0.1 by default).
- BA: m = round(expected_degree / 2) attachments per new node, grown from a
  complete seed graph on m + 1 nodes so every node ends with degree >= m.
- CF: configuration model on an i.i.d. Poisson(expected_degree) degree sequence,
  parity fixed by incrementing one random node; multi-edges and self-loops are
  collapsed to simple weight-1 edges.

Generation is a pure function of the `GeneratorSpec`.
"""

import networkx as nx
import numpy as np

from src.constants import GENERATOR_MODELS
from src.entity.config_entity import GeneratorSpec
from src.graph.core import Graph
from src.utils.exception import DomainError
from src.utils.logger import get_logger

logger = get_logger(__name__)


def _erdos_renyi(spec: GeneratorSpec) -> nx.Graph:
    p = spec.expected_degree / (spec.n - 1)
    if p > 1:
        raise DomainError(f"ER edge probability {p:.3f} exceeds 1")
    return nx.gnp_random_graph(spec.n, p, seed=spec.seed)


def _watts_strogatz(spec: GeneratorSpec) -> nx.Graph:
    k = int(round(spec.expected_degree))
    k -= k % 2
    if k < 2:
        raise DomainError(
            f"WS needs at least 2 ring neighbours, expected_degree={spec.expected_degree}"
        )
    if k >= spec.n:
        raise DomainError(f"WS ring degree {k} must be below n={spec.n}")
    return nx.watts_strogatz_graph(spec.n, k, spec.rewire_prob, seed=spec.seed)


def _barabasi_albert(spec: GeneratorSpec) -> nx.Graph:
    m = max(1, int(round(spec.expected_degree / 2)))
    if m >= spec.n:
        raise DomainError(f"BA attachment count m={m} must be below n={spec.n}")
    return nx.barabasi_albert_graph(
        spec.n, m, seed=spec.seed, initial_graph=nx.complete_graph(m + 1)
    )


def _configuration(spec: GeneratorSpec) -> nx.Graph:
    rng = np.random.default_rng(spec.seed)
    degrees = rng.poisson(spec.expected_degree, size=spec.n)
    if degrees.sum() % 2:
        degrees[rng.integers(spec.n)] += 1
    multigraph = nx.configuration_model(
        degrees.tolist(), seed=int(rng.integers(2**63 - 1))
    )
    return nx.Graph(multigraph)


_GENERATORS = {
    "ER": _erdos_renyi,
    "WS": _watts_strogatz,
    "BA": _barabasi_albert,
    "CF": _configuration,
}


def generate(spec: GeneratorSpec) -> Graph:
    """
    Samples one graph according to `spec`.

    Raises:
        DomainError: If the parameters imply p > 1, m >= n or an impossible lattice.
    """
    g = _GENERATORS[spec.model](spec)
    nx.set_edge_attributes(g, 1.0, "weight")
    return Graph.from_networkx(g)


def generate_dataset(
    models: tuple = GENERATOR_MODELS,
    graphs_per_model: int = 20,
    n_range: tuple = (10, 200),
    expected_degree: float = 6.0,
    seed: int = 0,
    rewire_prob: float = 0.1,
) -> list[tuple[str, str, Graph]]:
    """
    Samples the synthetic benchmark: `graphs_per_model` graphs per model.

    Every graph draws its node count uniformly from the inclusive integer range
    `n_range` and gets its own child of `SeedSequence(seed)`, in model-major
    order, so the dataset is reproducible from the single run seed.

    Returns:
        list[tuple[str, str, Graph]]: (name, label, graph) triples.
    """
    n_min, n_max = n_range
    if n_min < 2 or n_max < n_min:
        raise DomainError(f"invalid node-count range {n_range}")

    children = np.random.SeedSequence(seed).spawn(len(models) * graphs_per_model)
    dataset = []
    for m_idx, model in enumerate(models):
        for g_idx in range(graphs_per_model):
            child = children[m_idx * graphs_per_model + g_idx]
            rng = np.random.default_rng(child)
            n = int(rng.integers(n_min, n_max + 1))
            spec = GeneratorSpec(
                model=model,
                n=n,
                expected_degree=min(expected_degree, n - 1),
                seed=int(child.generate_state(1, dtype=np.uint64)[0] >> np.uint64(1)),
                rewire_prob=rewire_prob,
            )
            dataset.append((f"{model.lower()}_{g_idx:03d}", model, generate(spec)))

    logger.info(
        f"Generated {len(dataset)} graphs ({graphs_per_model} per model, n in {list(n_range)})"
    )
    return dataset
