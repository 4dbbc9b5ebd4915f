"""Small shared helpers."""

from __future__ import annotations


def linspace(lo: float, hi: float, n: int) -> list[float]:
    """`n` evenly spaced samples of [lo, hi], endpoints exact."""
    if n < 2:
        raise ValueError("linspace needs at least 2 samples")
    step = (hi - lo) / (n - 1)
    values = [lo + i * step for i in range(n)]
    values[-1] = hi
    return values
