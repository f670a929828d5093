# class_registry.py
"""
Registry of solve targets and the methods available for each.
"""

from typing import Any, Dict

from chordal_cactus import max_spanning_cactus_chordal
from oracle import max_spanning_in_class
from qt_cactus import max_spanning_cactus_qt
from reductions.constellation import min_constellation_deletion

SOLVE_TARGETS: Dict[str, Dict[str, Any]] = {
    "cactus": {
        "label": "Cactus",
        "description": "connected, every edge on at most one cycle",
        "connected": True,
        "methods": {
            "chordal": max_spanning_cactus_chordal,
            "qt": max_spanning_cactus_qt,
            "oracle": max_spanning_in_class,
        },
    },
    "constellation": {
        "label": "Constellation",
        "description": "disjoint union of stars (optimum via minimum dominating set)",
        "connected": False,
        "methods": {
            "domset": min_constellation_deletion,
            "oracle": max_spanning_in_class,
        },
    },
    "caterpillar": {
        "label": "Caterpillar",
        "description": "tree whose non-leaf vertices form a path",
        "connected": True,
        "methods": {"oracle": max_spanning_in_class},
    },
    "linear-forest": {
        "label": "Linear forest",
        "description": "disjoint union of paths",
        "connected": False,
        "methods": {"oracle": max_spanning_in_class},
    },
}

CLASS_DESCRIPTIONS: Dict[str, str] = {
    "bipartite": "two-colourable",
    "chordal": "no induced cycle longer than 3",
    "quasi-threshold": "no induced P4 or C4",
    "cactus": SOLVE_TARGETS["cactus"]["description"],
    "forest-of-cacti": "every component a cactus",
    "tree": "connected and acyclic",
    "forest": "acyclic",
    "caterpillar": SOLVE_TARGETS["caterpillar"]["description"],
    "constellation": "disjoint union of stars",
    "linear-forest": SOLVE_TARGETS["linear-forest"]["description"],
    "claw-free": "no induced K1,3",
    "even-hole-free": "no induced even cycle of length >= 4 (desk scale)",
    "subcubic": "maximum degree at most 3",
    "claw-free-chordal": "chordal and claw-free",
    "proper-interval": "chordal, claw-, net- and tent-free (desk scale)",
    "path-power": "some power of a path (desk scale)",
}

__all__ = ["SOLVE_TARGETS", "CLASS_DESCRIPTIONS"]
