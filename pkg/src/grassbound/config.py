"""Default tolerances and the optional TOML config file.

Every numeric tolerance lives here.  A config file with a ``[tolerances]``
table overrides the defaults; its path comes from ``--config`` or the
``GRASSBOUND_CONFIG`` environment variable.
"""

from __future__ import annotations

import os
from dataclasses import asdict, dataclass, fields, replace

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

CONFIG_ENV = "GRASSBOUND_CONFIG"


@dataclass(frozen=True)
class Tolerances:
    tol_orth: float = 1e-10
    tol_cluster: float = 1e-9
    tol_diag: float = 1e-8
    rank_factor: float = 1e-10

    def as_dict(self) -> dict:
        return asdict(self)


DEFAULT_TOLERANCES = Tolerances()


def load_tolerances(path: str | None = None, **overrides) -> Tolerances:
    """Defaults, then the config file (if any), then non-None overrides."""
    tol = DEFAULT_TOLERANCES
    path = path or os.environ.get(CONFIG_ENV)
    if path:
        with open(path, "rb") as fh:
            data = tomllib.load(fh)
        table = data.get("tolerances", {})
        known = {f.name for f in fields(Tolerances)}
        unknown = set(table) - known
        if unknown:
            raise ValueError(f"unknown tolerance keys in {path}: {sorted(unknown)}")
        tol = replace(tol, **{k: float(v) for k, v in table.items()})
    given = {k: float(v) for k, v in overrides.items() if v is not None}
    return replace(tol, **given) if given else tol
