from src.features.embeddings import (
    ColorMatrix,
    EmbeddingSamples,
    ccb_embed,
    ccb_partition_from_cuts,
    cnp_embed,
    coloring_streams,
    sample_ccb_partition,
    sample_cnp_coloring,
    sample_embeddings,
)

__all__ = [
    "ColorMatrix",
    "EmbeddingSamples",
    "ccb_embed",
    "ccb_partition_from_cuts",
    "cnp_embed",
    "coloring_streams",
    "sample_ccb_partition",
    "sample_cnp_coloring",
    "sample_embeddings",
]
