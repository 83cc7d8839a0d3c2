from src.mixture.gmm import (
    GaussianComponent,
    GaussianMixture,
    ScaledMixture,
    fit_gaussian,
    fit_mixture,
    joint_scale_project,
    load_mixture,
    reconstruct_covariances,
    save_mixture,
    scale_project,
)

__all__ = [
    "GaussianComponent",
    "GaussianMixture",
    "ScaledMixture",
    "fit_gaussian",
    "fit_mixture",
    "joint_scale_project",
    "load_mixture",
    "reconstruct_covariances",
    "save_mixture",
    "scale_project",
]
