"""
Constant file paths and fixed defaults shared across gmot.
"""

from pathlib import Path

CONFIG_FILE_PATH = Path("config/config.yaml")
PARAMS_FILE_PATH = Path("config/params.yaml")

# Generator models, in the class order used for labels.
GENERATOR_MODELS = ("ER", "WS", "BA", "CF")

EMBEDDING_METHODS = ("CCB", "CNP")
BASELINE_METHODS = ("DEGREE", "EV")
VARIANTS = ("full", "scaled", "tied")
GRAPH_FORMATS = ("auto", "edgelist", "dense")

MIXTURE_FORMAT_VERSION = 1

# Numerical tolerances.
POWER_ITERATION_TOL = 1e-9
COST_CLAMP_TOL = 1e-9
SYMMETRY_TOL = 1e-9
SCALE_FLOOR = 1e-12
KNN_DISTANCE_FLOOR = 1e-12
