"""Groups used by the cross-validation sweeps."""

ROSTER: tuple[str, ...] = (
    *(f"Z{n}" for n in range(3, 17)),
    "Z2xZ2", "Z2xZ4", "Z2xZ2xZ2", "Z3xZ3",
    "D4", "D5", "D6", "D7",
    "Q8", "S3", "A4",
)

MAX_SWEEP_DEGREE = 8


def sweep_degrees(order: int, max_degree: int = MAX_SWEEP_DEGREE) -> range:
    return range(1, min(order - 1, max_degree) + 1)
