"""
Plan Export Component.

For two graph files, writes the mixture transport plan (the probabilistic node
alignment), the component cost matrix and the hard node alignment derived
from the plan.
"""

import sys

from src.entity.config_entity import PlanExportConfig
from src.graph.io import STDIN, load_graph_named
from src.transport.solver import (
    TransportPlan,
    build_cost,
    export_cost_csv,
    export_plan_csv,
    graph_mixture,
    node_alignment,
    solve_discrete_ot,
)
from src.utils.common import OutputTracker, save_json, save_run_params
from src.utils.exception import CustomException, DomainError
from src.utils.logger import get_logger

logger = get_logger(__name__)


class PlanExport:
    """
    Exports the transport plan between two graphs.
    """

    def __init__(self, config: PlanExportConfig):
        self.config = config

    def export(self) -> TransportPlan:
        """
        Raises:
            CustomException: Wrong number of graphs, unreadable graph or write
                failure; files written so far are removed.
        """
        try:
            cfg = self.config
            if len(cfg.graph_paths) != 2:
                raise DomainError(f"plan export needs exactly 2 graphs, got {len(cfg.graph_paths)}")
            if sum(str(p) == STDIN for p in cfg.graph_paths) > 1:
                raise DomainError("standard input can supply only one graph")

            first, second = (load_graph_named(p, cfg.graph_format) for p in cfg.graph_paths)
            cost = build_cost(
                graph_mixture(first, cfg.embedding),
                graph_mixture(second, cfg.embedding),
                cfg.variant,
            )
            plan = solve_discrete_ot(cost)
            alignment = node_alignment(plan)

            with OutputTracker() as outputs:
                export_plan_csv(plan, outputs.add(cfg.root_dir / cfg.plan_file))
                export_cost_csv(cost, outputs.add(cfg.root_dir / cfg.cost_file))
                save_json(
                    path=outputs.add(cfg.root_dir / cfg.alignment_file),
                    data={
                        "graphs": [str(p) for p in cfg.graph_paths],
                        "method": cfg.method,
                        "variant": cfg.variant,
                        "distance": plan.cost,
                        "support_size": plan.support_size,
                        # 1-based node of the second graph for every node of the first
                        "alignment": [int(j) + 1 for j in alignment],
                    },
                )
                save_run_params(outputs.add(cfg.root_dir / "run_params.yaml"), cfg)

            logger.info(
                f"{cfg.method}-{cfg.variant} distance {plan.cost:.6g}, "
                f"plan support {plan.support_size}, written to {cfg.root_dir}"
            )
            return plan

        except Exception as e:
            raise CustomException(e, sys)
