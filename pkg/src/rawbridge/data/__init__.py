from .pfm import PfmError, read_pfm, write_pfm
from .records import (
    Dataset,
    SceneRecord,
    SchemaError,
    deterministic_split,
    load_dataset,
    select_split,
    write_dataset,
)
from .synthetic import SyntheticConfig, fit_ccm, fit_recovery, generate_synthetic

__all__ = [
    "Dataset",
    "PfmError",
    "SceneRecord",
    "SchemaError",
    "SyntheticConfig",
    "deterministic_split",
    "fit_ccm",
    "fit_recovery",
    "generate_synthetic",
    "load_dataset",
    "read_pfm",
    "select_split",
    "write_dataset",
    "write_pfm",
]
