"""
Command-line interface of gmot.

    gmot generate    [--out DIR] [--seed N]
    gmot distance    [GRAPH ...] [--manifest FILE] [--method ccb|cnp|degree|ev]
                     [--variant full|scaled|tied] [--samples S] [--colors K]
                     [--depth D] [--threads T] [--save-plans] [--cache-dir DIR]
                     [--format auto|edgelist|dense] [--out DIR] [--seed N]
    gmot eval        [--matrix FILE] [--manifest FILE] [--neighbors K] [--folds F]
                     [--test-frac P] [--out DIR] [--seed N]
    gmot plan-export GRAPH GRAPH [--method ccb|cnp] [--variant ...] [--format ...]
                     [--out DIR] ...

A GRAPH of `-` is read from standard input (an edge list unless --format says
dense); at most one graph per command can come from there.

Unset flags fall back to config/params.yaml; the seed resolves as --seed, then
GMOT_SEED, then params.yaml. Every command writes run_params.yaml next to its
outputs. Exit status is 0 iff every output was written.
"""

import argparse
import sys
from pathlib import Path
from typing import Optional, Sequence

from src.components.dataset_generation import DatasetGeneration
from src.components.distance_computation import DistanceComputation
from src.components.distance_evaluation import DistanceEvaluation
from src.components.plan_export import PlanExport
from src.config.configuration import ConfigurationManager
from src.constants import CONFIG_FILE_PATH, GRAPH_FORMATS, PARAMS_FILE_PATH, VARIANTS
from src.utils.exception import CustomException
from src.utils.logger import get_logger

logger = get_logger(__name__)

OT_METHODS = ("ccb", "cnp")
ALL_METHODS = OT_METHODS + ("degree", "ev")


def _add_common(parser: argparse.ArgumentParser):
    parser.add_argument("--out", type=Path, help="output directory")
    parser.add_argument("--seed", type=int, help="run seed (overrides GMOT_SEED)")


def _add_embedding(parser: argparse.ArgumentParser, methods: Sequence[str]):
    parser.add_argument("--method", choices=methods, type=str.lower)
    parser.add_argument("--variant", choices=VARIANTS, type=str.lower)
    parser.add_argument("--samples", type=int, help="embedding samples s")
    parser.add_argument("--colors", type=int, help="colors k")
    parser.add_argument("--depth", type=int, help="propagation depth d")


def _add_format(parser: argparse.ArgumentParser):
    parser.add_argument(
        "--format",
        dest="graph_format",
        choices=GRAPH_FORMATS,
        type=str.lower,
        help="graph file format (auto: .csv is dense, anything else an edge list)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gmot",
        description="Graph distances from Gaussian mixtures of random node embeddings.",
    )
    parser.add_argument("--config", type=Path, default=CONFIG_FILE_PATH)
    parser.add_argument("--params", type=Path, default=PARAMS_FILE_PATH)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="sample the synthetic graph dataset")
    _add_common(p)

    p = sub.add_parser("distance", help="pairwise distance matrix of a dataset")
    p.add_argument("graphs", nargs="*", type=Path, help="graph files (default: the manifest)")
    p.add_argument("--manifest", type=Path)
    _add_embedding(p, ALL_METHODS)
    p.add_argument("--threads", type=int, help="worker cap (-1: all cores)")
    p.add_argument("--save-plans", action="store_true", default=None)
    p.add_argument("--cache-dir", type=Path, help="reuse fitted mixtures from this directory")
    _add_format(p)
    _add_common(p)

    p = sub.add_parser("eval", help="kNN / silhouette evaluation of a distance matrix")
    p.add_argument("--matrix", type=Path)
    p.add_argument("--manifest", type=Path)
    p.add_argument("--neighbors", type=int)
    p.add_argument("--folds", type=int)
    p.add_argument("--test-frac", type=float)
    _add_common(p)

    p = sub.add_parser("plan-export", help="transport plan between two graphs")
    p.add_argument("graphs", nargs=2, type=Path)
    _add_embedding(p, OT_METHODS)
    _add_format(p)
    _add_common(p)

    return parser


def run(args: argparse.Namespace):
    manager = ConfigurationManager(args.config, args.params)

    if args.command == "generate":
        config = manager.get_dataset_generation_config(out=args.out, seed=args.seed)
        return DatasetGeneration(config).generate()

    if args.command == "distance":
        config = manager.get_distance_config(
            method=args.method,
            variant=args.variant,
            samples=args.samples,
            colors=args.colors,
            depth=args.depth,
            seed=args.seed,
            threads=args.threads,
            out=args.out,
            manifest=args.manifest,
            graph_paths=args.graphs,
            save_plans=args.save_plans,
            graph_format=args.graph_format,
            cache_dir=args.cache_dir,
        )
        return DistanceComputation(config).compute()

    if args.command == "eval":
        config = manager.get_evaluation_config(
            matrix=args.matrix,
            manifest=args.manifest,
            out=args.out,
            knn_neighbors=args.neighbors,
            folds=args.folds,
            test_frac=args.test_frac,
            seed=args.seed,
        )
        return DistanceEvaluation(config).run()

    config = manager.get_plan_export_config(
        graph_paths=args.graphs,
        method=args.method,
        variant=args.variant,
        samples=args.samples,
        colors=args.colors,
        depth=args.depth,
        seed=args.seed,
        out=args.out,
        graph_format=args.graph_format,
    )
    return PlanExport(config).export()


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        logger.info(f"🚀 gmot {args.command} started 🚀")
        run(args)
        logger.info(f"✅ gmot {args.command} completed ✅")
        return 0
    except Exception as e:
        error = e if isinstance(e, CustomException) else CustomException(e, sys)
        logger.error(error)
        return 1


if __name__ == "__main__":
    sys.exit(main())
