"""Bounds and seeds.  BPSKALC_MAX_VARS overrides the symmetrization bound."""
import os

DEFAULT_MAX_VARS = 5
DEFAULT_BWB_BOUND = 4
DEFAULT_MAGIC_BOUND = 6
PHI_SEEDS = (20240611, 7, 1009)


def max_vars() -> int:
    raw = os.environ.get("BPSKALC_MAX_VARS")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise ValueError(f"BPSKALC_MAX_VARS must be an integer, got {raw!r}")
    return DEFAULT_MAX_VARS


def bwb_bound() -> int:
    return DEFAULT_BWB_BOUND


def magic_bound() -> int:
    return DEFAULT_MAGIC_BOUND


def check_vars(n: int, what: str = "symmetrization") -> None:
    lim = max_vars()
    if n > lim:
        raise ValueError(f"{what} needs {n} variables, above the bound {lim} (set BPSKALC_MAX_VARS)")
