"""
Data contracts for the JSON artifacts gmot reads and writes.

Pydantic models enforce the shape of the dataset manifest, the distance-matrix
sidecar and the evaluation report, so a malformed file is rejected when it is
loaded instead of failing halfway through a stage.
"""

from typing import Optional

from pydantic import BaseModel, Field, RootModel


class DatasetManifest(RootModel[dict[str, str]]):
    """Graph file name (relative to the manifest) -> class label, in dataset order."""

    @property
    def files(self) -> list[str]:
        return list(self.root)

    @property
    def labels(self) -> list[str]:
        return list(self.root.values())


class PairTiming(BaseModel):
    mean_pair_ms: float = Field(..., description="Mean wall-clock time per graph pair")
    total_pair_seconds: float = Field(..., description="Summed per-pair time")
    embedding_seconds: float = Field(
        0.0, description="Time spent sampling embeddings and fitting mixtures"
    )
    pairs: int = Field(..., description="Number of pairs computed")


class DistanceSidecar(BaseModel):
    """Metadata stored next to a distance-matrix CSV."""

    method: str
    variant: Optional[str] = None
    config: dict = Field(default_factory=dict)
    names: list[str]
    labels: list[str]
    times: PairTiming


class ClassSeparation(BaseModel):
    intra: Optional[float] = Field(None, description="Mean distance within the class")
    inter: float = Field(..., description="Mean distance to graphs of other classes")


class EvalReport(BaseModel):
    """Weighted kNN and clustering quality of one distance matrix."""

    knn_mean: float = Field(..., ge=0.0, le=1.0)
    knn_std: float = Field(..., ge=0.0)
    knn_fold_scores: list[float]
    knn_neighbors: int
    folds: int
    test_frac: float
    seed: int
    regenerated_folds: int = 0
    silhouette: Optional[float] = Field(None, ge=-1.0, le=1.0)
    singleton_classes: list[str] = Field(default_factory=list)
    class_separation: dict[str, ClassSeparation] = Field(default_factory=dict)
    time_ms: Optional[float] = None
    method: Optional[str] = None
    variant: Optional[str] = None
    n_graphs: int
