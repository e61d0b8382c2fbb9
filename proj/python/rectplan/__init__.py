from rectplan._core import (
    RectplanError,
    boxed_budget,
    grid_lines,
    morph,
    oracle,
    solve,
    verify,
)

__all__ = [
    "RectplanError",
    "boxed_budget",
    "grid_lines",
    "morph",
    "oracle",
    "solve",
    "verify",
]
