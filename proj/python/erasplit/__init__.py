"""Gradient boosted trees with era-aware split criteria."""

from ._core import (
    ConfigError,
    DataError,
    Dataset,
    GBDTModel,
    TrainConfig,
    __version__,
    compute_metrics,
    fit,
    gen_memorization,
    gen_sine_wave,
    run_degenerate_demo,
    run_grid_search,
)

__all__ = [
    "ConfigError",
    "DataError",
    "Dataset",
    "GBDTModel",
    "TrainConfig",
    "__version__",
    "compute_metrics",
    "fit",
    "gen_memorization",
    "gen_sine_wave",
    "run_degenerate_demo",
    "run_grid_search",
]
