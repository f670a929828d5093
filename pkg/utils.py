# utils.py
# Small formatting and parsing helpers shared by the CLI and generators.

from __future__ import annotations

import random
from typing import List


def pretty_duration(seconds: float) -> str:
    """Solver wall time: '850 ms', '3.40 s', or '125 s' past a minute."""
    seconds = max(seconds, 0.0)
    if seconds < 1.0:
        return f"{seconds * 1000:.0f} ms"
    if seconds < 60.0:
        return f"{seconds:.2f} s"
    return f"{seconds:.0f} s"


def make_rng(seed: int) -> random.Random:
    return random.Random(seed)


def parse_vertex_list(text: str) -> List[int]:
    """'0,2, 5' -> [0, 2, 5]; raises ValueError on anything else."""
    items = [part.strip() for part in text.split(",") if part.strip()]
    try:
        return [int(item) for item in items]
    except ValueError:
        raise ValueError(f"expected a comma-separated vertex list, got {text!r}")
