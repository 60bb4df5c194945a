"""Location of the bundled reference data files.

The package ships its reference tables (sensor timings, model comparison
tables, OCR engine profiles, the class vocabulary, the word list and a demo
scenario) under ``percept_cane/data``. The ``PERCEPT_CANE_DATA`` environment
variable points lookups at a different directory instead, e.g. to swap in
locally re-measured tables without touching the install.
"""

from __future__ import annotations

import os
from pathlib import Path

DATA_ENV_VAR = "PERCEPT_CANE_DATA"


def data_dir() -> Path:
    """Directory holding the bundled data files (env override wins)."""
    override = os.environ.get(DATA_ENV_VAR)
    if override:
        return Path(override)
    return Path(__file__).resolve().parent / "data"


def data_path(name: str) -> Path:
    """Resolve a bundled data file by name.

    Raises FileNotFoundError if the file does not exist in the active data
    directory.
    """
    path = data_dir() / name
    if not path.is_file():
        raise FileNotFoundError(f"bundled data file not found: {path}")
    return path


def resolve_table(path_or_name: str | Path) -> Path:
    """Resolve a user-supplied table argument.

    Filesystem paths are used as given. Anything that does not exist on disk
    is retried against the bundled data directory (with a leading ``data/``
    stripped), so ``data/fig8_models.csv`` works from any working directory.
    """
    p = Path(path_or_name)
    if p.is_file():
        return p
    return data_path(p.name)
