"""Small arithmetic helpers used by several modules."""

import os


def double_factorial(m: int) -> int:
    """Product m * (m-2) * (m-4) * ... ending at 1 or 2; equals 1 for m in {-1, 0}.

    The value for m = -1 is 1 by convention, which is the convention the
    closed-form walk counts rely on.
    """
    if m < -1:
        raise ValueError(f"double factorial undefined for {m}")
    result = 1
    while m > 1:
        result *= m
        m -= 2
    return result


def max_enumeration_size(default: int = 10**7) -> int:
    """Global cap on enumeration output size, from OSCTAB_MAX_ENUM."""
    raw = os.environ.get("OSCTAB_MAX_ENUM")
    if raw is None:
        return default
    try:
        value = int(raw)
    except ValueError as exc:
        raise ValueError(f"OSCTAB_MAX_ENUM must be an integer, got {raw!r}") from exc
    if value <= 0:
        raise ValueError("OSCTAB_MAX_ENUM must be positive")
    return value
