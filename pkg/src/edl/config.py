"""Global size caps for the exhaustive routines."""

import os

GRAPH_MAX_N = 16
EMBED_MAX_H = 12
DEFAULT_MAX_K = 10


class CapExceeded(ValueError):
    """Raised when an exhaustive routine is asked to go beyond its size cap."""


def max_k_cap():
    """CRG vertex cap, overridable through the ``EDL_MAX_K`` environment variable."""
    raw = os.environ.get("EDL_MAX_K")
    if raw is None:
        return DEFAULT_MAX_K
    cap = int(raw)
    if cap < 1:
        raise ValueError(f"EDL_MAX_K must be positive, got {raw!r}")
    return cap


def check_k(k, what="CRG"):
    cap = max_k_cap()
    if k > cap:
        raise CapExceeded(f"{what} has {k} vertices, cap is {cap} (set EDL_MAX_K to raise it)")
