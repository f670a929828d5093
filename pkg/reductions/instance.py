# reductions/instance.py
"""
ReductionInstance: a gadget graph H with budget k and provenance back to
the source instance, plus its JSON bundle form used by `reduce` and
`translate`.

Provenance roles
  vertices: ("source", v), ("x", None), ("y", None), ("x'", None),
            ("y'", None), ("u_e", edge), ("v_e", edge)
  edges:    ("source", edge), ("x-join", v), ("y-join", v), ("apex", None),
            ("subdivision", edge)
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple

from certificates import to_json
from graph_core import CertificateError, Edge, Graph, GraphParseError, canonical

Role = Tuple[str, Any]

PIP3_TO_CACTUS = "pip3-to-cactus"
HAMPATH_TO_CATERPILLAR = "hampath-to-caterpillar"
DOMSET_TO_CONSTELLATION = "domset-to-constellation"
REDUCTIONS = (PIP3_TO_CACTUS, HAMPATH_TO_CATERPILLAR, DOMSET_TO_CONSTELLATION)


class ReductionError(CertificateError):
    """A certificate handed to a translator does not fit the instance."""
    pass


@dataclass(frozen=True)
class ReductionInstance:
    reduction: str
    source: Graph
    gadget: Graph
    budget: int
    vertex_origin: Dict[int, Role] = field(hash=False)
    edge_origin: Dict[Edge, Role] = field(hash=False)
    source_budget: Optional[int] = None
    trivially_negative: bool = False
    meta: Dict[str, Any] = field(default_factory=dict, hash=False, compare=False)

    def is_total(self) -> bool:
        """Every gadget vertex and edge carries a provenance entry."""
        return set(self.vertex_origin) == set(self.gadget.vertices()) and set(self.edge_origin) == set(self.gadget.edges)

    def vertex_with_role(self, role: str) -> int:
        for v, (r, _) in self.vertex_origin.items():
            if r == role:
                return v
        raise KeyError(f"no gadget vertex has role {role!r}")

    def to_dict(self) -> Dict[str, Any]:
        def ref(value: Any) -> Any:
            return list(value) if isinstance(value, tuple) else value

        return {
            "reduction": self.reduction,
            "source": {"n": self.source.n, "edges": [list(e) for e in self.source.sorted_edges]},
            "gadget": {"n": self.gadget.n, "edges": [list(e) for e in self.gadget.sorted_edges]},
            "budget": self.budget,
            "source_budget": self.source_budget,
            "trivially_negative": self.trivially_negative,
            "vertex_origin": [[v, role, ref(r)] for v, (role, r) in sorted(self.vertex_origin.items())],
            "edge_origin": [[u, v, role, ref(r)] for (u, v), (role, r) in sorted(self.edge_origin.items())],
            "meta": self.meta,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ReductionInstance":
        def ref(value: Any) -> Any:
            return tuple(value) if isinstance(value, list) else value

        try:
            source = Graph.from_edges(data["source"]["n"], data["source"]["edges"])
            gadget = Graph.from_edges(data["gadget"]["n"], data["gadget"]["edges"])
            vertex_origin = {int(v): (str(role), ref(r)) for v, role, r in data["vertex_origin"]}
            edge_origin = {canonical(u, v): (str(role), ref(r)) for u, v, role, r in data["edge_origin"]}
            return cls(
                reduction=str(data["reduction"]),
                source=source,
                gadget=gadget,
                budget=int(data["budget"]),
                vertex_origin=vertex_origin,
                edge_origin=edge_origin,
                source_budget=data.get("source_budget"),
                trivially_negative=bool(data.get("trivially_negative", False)),
                meta=dict(data.get("meta") or {}),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise GraphParseError(f"reduction bundle is malformed: {e}")


def save_bundle(inst: ReductionInstance, path: str) -> None:
    with open(path, "w", encoding="utf-8") as f:
        f.write(to_json(inst.to_dict()))


def load_bundle(path: str) -> ReductionInstance:
    with open(path, "r", encoding="utf-8") as f:
        try:
            data = json.load(f)
        except json.JSONDecodeError as e:
            raise GraphParseError(f"{path}: not a JSON reduction bundle: {e.msg}", e.lineno)
    return ReductionInstance.from_dict(data)
