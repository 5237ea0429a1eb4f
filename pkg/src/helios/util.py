"""Small shared helpers."""

from __future__ import annotations

import os


def worker_count(default: int | None = None) -> int:
    """Worker cap for grid sweeps and ensembles.

    HELIOS_THREADS, when set, caps the number of parallel workers; the
    fallback is the CPU count (or `default` if given).
    """
    if default is None:
        default = os.cpu_count() or 1
    env = os.environ.get("HELIOS_THREADS")
    if env is None:
        return max(1, default)
    try:
        cap = int(env)
    except ValueError:
        return max(1, default)
    return max(1, min(default, cap)) if cap > 0 else 1
