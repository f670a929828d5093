# graph_core.py
"""
Core graph representation shared by every other module.

A Graph is a simple undirected graph on the dense vertex ids 0..n-1 whose
edges are stored once, as canonical pairs (u, v) with u < v. Values are
immutable after construction, so they can be shared freely.

Two text formats are supported:

edge-list
    First content line is n, every further content line is "u v".
    Anything after '#' is a comment. A file whose first content line
    already holds two tokens is read head-less: its ids may be sparse or
    textual and are remapped to dense ids (see parse_graph_with_labels).

graph6
    McKay's graph6, one graph per line, optional ">>graph6<<" header.
    Encoding and decoding are delegated to networkx.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx

Edge = Tuple[int, int]
TextInput = Union[bytes, str]

EDGE_LIST = "edge-list"
GRAPH6 = "graph6"
FORMATS = (EDGE_LIST, GRAPH6)


# -------------------------
# Errors
# -------------------------
class BaseGraphError(Exception):
    """Generic toolkit error (superclass for every error raised here)."""
    pass


class GraphParseError(BaseGraphError):
    """Malformed input text."""

    def __init__(self, message: str, line: Optional[int] = None, offset: Optional[int] = None):
        self.line = line
        self.offset = offset
        where = []
        if line is not None:
            where.append(f"line {line}")
        if offset is not None:
            where.append(f"byte {offset}")
        super().__init__(f"{message} ({', '.join(where)})" if where else message)


class GraphValidationError(BaseGraphError):
    """Input describes something that is not a simple graph."""
    pass


class SizeLimitError(BaseGraphError):
    """A desk-scale limit was exceeded."""

    def __init__(self, limit_name: str, limit: int, actual: int):
        self.limit_name = limit_name
        self.limit = limit
        self.actual = actual
        super().__init__(f"desk-scale limit exceeded: {limit_name}={limit}, instance has {actual}")


class InfeasibleError(BaseGraphError):
    """No solution exists in the requested mode."""
    pass


class PreconditionError(BaseGraphError):
    """Input lies outside the operation's domain."""
    pass


class CertificateError(BaseGraphError):
    """A witness failed re-verification."""
    pass


def canonical(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


# -------------------------
# Graph / EdgeSet / SpanningSolution
# -------------------------
@dataclass(frozen=True)
class Graph:
    n: int
    edges: FrozenSet[Edge] = frozenset()

    def __post_init__(self) -> None:
        if self.n < 0:
            raise GraphValidationError(f"vertex count must be non-negative, got {self.n}")
        for u, v in self.edges:
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {u}")
            if u > v:
                raise GraphValidationError(f"edge ({u}, {v}) is not in canonical order")
            if u < 0 or v >= self.n:
                raise GraphValidationError(f"edge ({u}, {v}) out of range for n={self.n}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build from arbitrary pairs; rejects self-loops and repeated edges."""
        seen = set()
        for u, v in edges:
            if u == v:
                raise GraphValidationError(f"self-loop at vertex {u}")
            e = canonical(u, v)
            if e in seen:
                raise GraphValidationError(f"duplicate edge {e}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @classmethod
    def from_networkx(cls, G: nx.Graph) -> "Graph":
        """Nodes are relabeled to 0..n-1 in sorted order."""
        nodes = sorted(G.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[u], index[v]) for u, v in G.edges()))

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(range(self.n))
        G.add_edges_from(self.sorted_edges)
        return G

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    @cached_property
    def sorted_edges(self) -> Tuple[Edge, ...]:
        return tuple(sorted(self.edges))

    @cached_property
    def adjacency(self) -> Tuple[FrozenSet[int], ...]:
        adj: List[set] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    @cached_property
    def adj_mask(self) -> Tuple[int, ...]:
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def max_degree(self) -> int:
        return max((len(a) for a in self.adjacency), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and canonical(u, v) in self.edges

    def spanning(self, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Subgraph on all of V with the given edges (each must be an edge here)."""
        chosen = frozenset(canonical(u, v) for u, v in edges)
        missing = chosen - self.edges
        if missing:
            raise GraphValidationError(f"edge {min(missing)} is not an edge of the host graph")
        return Graph(self.n, chosen)

    def induced_subgraph(self, vertices: Iterable[int]) -> Tuple["Graph", List[int]]:
        """Induced subgraph relabeled densely; returns (subgraph, new id -> old id)."""
        order = sorted(set(vertices))
        index = {v: i for i, v in enumerate(order)}
        sub_edges = [(index[u], index[v]) for u, v in self.edges if u in index and v in index]
        return Graph.from_edges(len(order), sub_edges), order


@dataclass(frozen=True)
class EdgeSet:
    host: Graph
    members: FrozenSet[Edge] = frozenset()

    def __post_init__(self) -> None:
        stray = self.members - self.host.edges
        if stray:
            raise GraphValidationError(f"edge {min(stray)} is not an edge of the host graph")

    @classmethod
    def of(cls, host: Graph, edges: Iterable[Tuple[int, int]]) -> "EdgeSet":
        return cls(host, frozenset(canonical(u, v) for u, v in edges))

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[Edge]:
        return iter(sorted(self.members))

    def __contains__(self, edge: object) -> bool:
        if isinstance(edge, tuple) and len(edge) == 2:
            return canonical(*edge) in self.members
        return False

    def as_graph(self) -> Graph:
        return Graph(self.host.n, self.members)


@dataclass(frozen=True)
class SpanningSolution:
    host: Graph
    kept: EdgeSet
    label: str
    meta: Dict[str, Any] = field(default_factory=dict, compare=False, hash=False)

    def __post_init__(self) -> None:
        if self.kept.host != self.host:
            raise GraphValidationError("kept edges belong to a different host graph")

    @classmethod
    def of(cls, host: Graph, edges: Iterable[Tuple[int, int]], label: str, **meta: Any) -> "SpanningSolution":
        return cls(host, EdgeSet.of(host, edges), label, dict(meta))

    @property
    def deletions(self) -> int:
        return self.host.m - len(self.kept)

    def as_graph(self) -> Graph:
        return self.kept.as_graph()

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "label": self.label,
            "n": self.host.n,
            "kept": [list(e) for e in self.kept],
            "kept_count": len(self.kept),
            "deletions": self.deletions,
        }
        if self.meta:
            data["meta"] = self.meta
        return data

    @classmethod
    def from_dict(cls, host: Graph, data: Dict[str, Any]) -> "SpanningSolution":
        try:
            edges = [tuple(e) for e in data["kept"]]
            label = str(data["label"])
        except (KeyError, TypeError) as e:
            raise GraphParseError(f"solution record is missing a field: {e}")
        return cls(host, EdgeSet.of(host, edges), label, dict(data.get("meta", {})))


# -------------------------
# Parsing / serialization
# -------------------------
def _as_bytes(text: TextInput) -> bytes:
    return text.encode("utf-8") if isinstance(text, str) else text


def _content_lines(data: bytes) -> Iterator[Tuple[int, int, List[str]]]:
    """Yield (line number, byte offset, tokens) for every non-blank, non-comment line."""
    offset = 0
    for lineno, raw in enumerate(data.split(b"\n"), start=1):
        start = offset
        offset += len(raw) + 1
        try:
            line = raw.decode("utf-8")
        except UnicodeDecodeError:
            raise GraphParseError("line is not valid UTF-8", lineno, start)
        line = line.split("#", 1)[0].strip()
        if line:
            yield lineno, start, line.split()


def _parse_int(token: str, lineno: int, offset: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"expected an integer, got {token!r}", lineno, offset)


def _parse_edge_list(data: bytes) -> Tuple[Graph, List[str]]:
    lines = list(_content_lines(data))
    if not lines:
        raise GraphParseError("empty edge list: expected a vertex count", 1, 0)

    lineno, offset, tokens = lines[0]
    if len(tokens) == 1:
        n = _parse_int(tokens[0], lineno, offset)
        if n < 0:
            raise GraphParseError(f"vertex count must be non-negative, got {n}", lineno, offset)
        pairs = []
        for lineno, offset, tokens in lines[1:]:
            if len(tokens) != 2:
                raise GraphParseError(f"expected 'u v', got {len(tokens)} tokens", lineno, offset)
            u, v = (_parse_int(t, lineno, offset) for t in tokens)
            if not (0 <= u < n and 0 <= v < n):
                raise GraphValidationError(f"edge ({u}, {v}) out of range for n={n} at line {lineno}")
            pairs.append((u, v))
        return Graph.from_edges(n, pairs), [str(i) for i in range(n)]

    # Head-less: remap external ids densely.
    raw_pairs: List[Tuple[str, str]] = []
    for lineno, offset, tokens in lines:
        if len(tokens) != 2:
            raise GraphParseError(f"expected 'u v', got {len(tokens)} tokens", lineno, offset)
        raw_pairs.append((tokens[0], tokens[1]))
    labels = sorted({t for pair in raw_pairs for t in pair}, key=_label_key)
    index = {label: i for i, label in enumerate(labels)}
    return Graph.from_edges(len(labels), ((index[a], index[b]) for a, b in raw_pairs)), labels


def _label_key(label: str) -> Tuple[int, Any]:
    try:
        return 0, int(label)
    except ValueError:
        return 1, label


def _parse_graph6_line(line: bytes, offset: int) -> Graph:
    if line.startswith(b">>graph6<<"):
        line = line[len(b">>graph6<<"):]
        offset += len(b">>graph6<<")
    if not line:
        raise GraphParseError("empty graph6 string", None, offset)
    for i, byte in enumerate(line):
        if not 63 <= byte <= 126:
            raise GraphParseError(f"byte {byte!r} outside the graph6 alphabet", None, offset + i)
    try:
        G = nx.from_graph6_bytes(line)
    except (nx.NetworkXError, ValueError, IndexError) as e:
        raise GraphParseError(f"bad graph6 data: {e}", None, offset)
    return Graph.from_networkx(G)


def parse_graph_with_labels(text: TextInput, fmt: str = EDGE_LIST) -> Tuple[Graph, List[str]]:
    """Parse one graph and return it with labels[i] = external id of vertex i."""
    data = _as_bytes(text)
    if fmt == EDGE_LIST:
        return _parse_edge_list(data)
    if fmt == GRAPH6:
        graphs = parse_graph_stream(data, GRAPH6)
        if len(graphs) != 1:
            raise GraphParseError(f"expected one graph6 line, found {len(graphs)}")
        return graphs[0], [str(i) for i in range(graphs[0].n)]
    raise GraphParseError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


def parse_graph(text: TextInput, fmt: str = EDGE_LIST) -> Graph:
    return parse_graph_with_labels(text, fmt)[0]


def parse_graph_stream(text: TextInput, fmt: str = GRAPH6) -> List[Graph]:
    """Parse every graph of a multi-graph file (graph6: one per line)."""
    data = _as_bytes(text)
    if fmt == EDGE_LIST:
        return [_parse_edge_list(data)[0]]
    if fmt != GRAPH6:
        raise GraphParseError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")
    graphs = []
    offset = 0
    for raw in data.split(b"\n"):
        line = raw.strip()
        if line:
            graphs.append(_parse_graph6_line(line, offset))
        offset += len(raw) + 1
    return graphs


def serialize_graph(g: Graph, fmt: str = EDGE_LIST) -> bytes:
    if fmt == EDGE_LIST:
        lines = [str(g.n)] + [f"{u} {v}" for u, v in g.sorted_edges]
        return ("\n".join(lines) + "\n").encode("utf-8")
    if fmt == GRAPH6:
        return nx.to_graph6_bytes(g.to_networkx(), nodes=list(range(g.n)), header=False)
    raise GraphParseError(f"unknown format {fmt!r}; expected one of {', '.join(FORMATS)}")


# -------------------------
# Constructions
# -------------------------
def subdivision_vertices(g: Graph) -> Dict[Edge, Tuple[int, int]]:
    """Ids (u_e, v_e) of the two subdivision vertices of each edge e=(u, v), u<v."""
    return {e: (g.n + 2 * i, g.n + 2 * i + 1) for i, e in enumerate(g.sorted_edges)}


def subdivide_twice(g: Graph) -> Tuple[Graph, Dict[Edge, Edge]]:
    """Replace every edge uv by the path u, u_e, v_e, v.

    Returns the new graph and, for each new edge, the original edge it came from.
    """
    origin: Dict[Edge, Edge] = {}
    for (u, v), (ue, ve) in subdivision_vertices(g).items():
        origin[canonical(u, ue)] = (u, v)
        origin[canonical(ue, ve)] = (u, v)
        origin[canonical(ve, v)] = (u, v)
    return Graph(g.n + 2 * g.m, frozenset(origin)), origin


def connected_components(g: Graph) -> List[List[int]]:
    """Components as sorted vertex lists, ordered by smallest vertex."""
    blocks = [sorted(c) for c in nx.connected_components(g.to_networkx())]
    return sorted(blocks, key=lambda block: block[0])


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """g1 on 0..n1-1, g2 shifted to n1..n1+n2-1."""
    shift = g1.n
    edges = set(g1.edges) | {(u + shift, v + shift) for u, v in g2.edges}
    return Graph(g1.n + g2.n, frozenset(edges))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    union = disjoint_union(g1, g2)
    cross = {(u, g1.n + v) for u in range(g1.n) for v in range(g2.n)}
    return Graph(union.n, union.edges | frozenset(cross))


def relabel_path(path: Sequence[int]) -> List[Edge]:
    """Consecutive pairs of a vertex sequence as canonical edges."""
    return [canonical(a, b) for a, b in zip(path, path[1:])]
