"""Scale bounds for the exhaustive algorithms.

Both bounds can be raised (or lowered) with the ``CAYLEY_CENSUS_MAX_ORDER``
environment variable; it overrides the two defaults at once.
"""

from __future__ import annotations

import os

from .errors import ScaleError

FORMULA_MAX_ORDER = 48
ORACLE_MAX_ORDER = 24

ENV_VAR = "CAYLEY_CENSUS_MAX_ORDER"


def _override() -> int | None:
    raw = os.environ.get(ENV_VAR)
    if raw is None or raw.strip() == "":
        return None
    try:
        value = int(raw)
    except ValueError:
        raise ScaleError(f"{ENV_VAR} must be an integer, got {raw!r}") from None
    if value < 1:
        raise ScaleError(f"{ENV_VAR} must be positive, got {value}")
    return value


def formula_max_order() -> int:
    override = _override()
    return FORMULA_MAX_ORDER if override is None else override


def oracle_max_order() -> int:
    override = _override()
    return ORACLE_MAX_ORDER if override is None else override


def check_scale(order: int, bound: int, what: str) -> None:
    if order > bound:
        raise ScaleError(
            f"{what}: group order {order} exceeds the scale bound {bound} "
            f"(set {ENV_VAR} to override)"
        )
