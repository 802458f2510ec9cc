"""Exact Macdonald / interpolation polynomial computations over Q(q,t)."""

from symqt._core import (
    dual,
    hall_littlewood,
    interpolation,
    jack_interpolation,
    macdonald,
    nodes,
    verify,
    verify_all,
    whittaker,
)

__all__ = [
    "dual",
    "hall_littlewood",
    "interpolation",
    "jack_interpolation",
    "macdonald",
    "nodes",
    "verify",
    "verify_all",
    "whittaker",
]
