"""Model families, offline training and knowledge-base persistence."""

from .families import (
    FAMILIES,
    CategoricalModel,
    GaussianModel,
    HistogramModel,
    TraceModel,
    likelihood,
    model_from_dict,
)
from .persistence import (
    SCHEMA_VERSION,
    dump_kb,
    load_kb,
    parse_kb,
    read_kb,
    save_kb,
    storage_size,
    write_kb,
)
from .training import fit_pair, train_offline

__all__ = [
    "FAMILIES",
    "SCHEMA_VERSION",
    "CategoricalModel",
    "GaussianModel",
    "HistogramModel",
    "TraceModel",
    "dump_kb",
    "fit_pair",
    "likelihood",
    "load_kb",
    "model_from_dict",
    "parse_kb",
    "read_kb",
    "save_kb",
    "storage_size",
    "train_offline",
    "write_kb",
]
