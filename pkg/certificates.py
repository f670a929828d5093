# certificates.py
"""
Certificate records and their structured-text form.

Every recognizer answer is a ClassCertificate {label, verdict, witness}.
The witness is a plain dict whose "kind" selects its schema:

  bipartition   {"sides": [[...], [...]]}
  peo           {"order": [...]}                  perfect elimination ordering
  peel          {"forest": [node, ...]}           node = {"vertices", "peel", "children"}
  cycles        {"cycles": [[...], ...], "edge_cycle_count": [[u, v, c], ...]}
  spine         {"spine": [...]}
  stars         {"centers": [...], "stars": [[center, leaf, ...], ...]}
  paths         {"paths": [[...], ...]}
  max-degree    {"value": d}
  ordering      {"order": [...], "k": k}          power-of-path layout
  none          {}
  obstruction   {"name": ..., "vertices": [...], "induced": bool, ...}

Obstruction names: odd-cycle, hole, even-hole, P4, C4, claw, net, tent,
spider, shared-edge, cycle, disconnected, degree, empty, edge-count,
no-ordering.

All records serialize to JSON with sorted keys, so equal inputs give
byte-identical output.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence


@dataclass(frozen=True)
class ClassCertificate:
    label: str
    verdict: bool
    witness: Dict[str, Any] = field(default_factory=dict, hash=False)

    def __bool__(self) -> bool:
        return self.verdict

    @property
    def kind(self) -> str:
        return str(self.witness.get("kind", "none"))

    def to_dict(self) -> Dict[str, Any]:
        return {"label": self.label, "verdict": "accept" if self.verdict else "reject", "witness": self.witness}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ClassCertificate":
        return cls(str(data["label"]), data["verdict"] == "accept", dict(data.get("witness", {})))


def accept(label: str, kind: str, **payload: Any) -> ClassCertificate:
    return ClassCertificate(label, True, {"kind": kind, **payload})


def reject(label: str, name: str, vertices: Sequence[int], induced: bool = True, **payload: Any) -> ClassCertificate:
    witness = {"kind": "obstruction", "name": name, "vertices": sorted(vertices), "induced": induced}
    witness.update(payload)
    return ClassCertificate(label, False, witness)


def with_label(cert: ClassCertificate, label: str) -> ClassCertificate:
    """Same verdict and witness under another class name."""
    return ClassCertificate(label, cert.verdict, cert.witness)


def canonical_cycle(cycle: Sequence[int]) -> List[int]:
    """Rotate to the smallest vertex and orient toward its smaller neighbour."""
    cyc = list(cycle)
    if not cyc:
        return cyc
    i = cyc.index(min(cyc))
    cyc = cyc[i:] + cyc[:i]
    if len(cyc) > 2 and cyc[-1] < cyc[1]:
        cyc = [cyc[0]] + cyc[:0:-1]
    return cyc


def to_json(payload: Any, indent: Optional[int] = 2) -> str:
    """Deterministic JSON text (sorted keys, trailing newline)."""
    return json.dumps(payload, sort_keys=True, indent=indent) + "\n"
