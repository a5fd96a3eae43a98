"""Shared numeric configuration: comparison tolerance and dimension cap."""

# Absolute tolerance for unit-scale comparisons throughout the library.
DEFAULT_TOL = 1e-9

_max_dim = 64


def max_dim() -> int:
    """Largest vector dimension accepted at construction."""
    return _max_dim


def set_max_dim(n: int) -> None:
    global _max_dim
    if int(n) < 2:
        raise ValueError("dimension cap must be at least 2")
    _max_dim = int(n)
