"""Immutable finite simple graphs with the chordal-graph toolkit used everywhere else.

Vertices are strings.  Edges are stored as sorted 2-tuples so that a graph has a
single canonical representation and equality / hashing behave structurally.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping

Edge = tuple[str, str]


def normalize_edge(u: str, v: str) -> Edge:
    """Return the canonical (sorted) form of an undirected edge."""
    if u == v:
        raise ValueError(f"self-loop at {u!r}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """A finite simple undirected graph."""

    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]

    @staticmethod
    def build(vertices: Iterable[str], edges: Iterable[tuple[str, str]]) -> "Graph":
        """Validate and canonicalize raw vertex / edge collections."""
        vs = tuple(vertices)
        seen = set()
        for v in vs:
            if not isinstance(v, str):
                raise ValueError(f"vertex {v!r} is not a string")
            if v in seen:
                raise ValueError(f"duplicate vertex {v!r}")
            seen.add(v)
        es = set()
        for u, v in edges:
            if u not in seen or v not in seen:
                raise ValueError(f"edge ({u!r}, {v!r}) has an endpoint outside the vertex set")
            es.add(normalize_edge(u, v))
        return Graph(vertices=vs, edges=tuple(sorted(es)))

    @cached_property
    def _adjacency(self) -> Mapping[str, frozenset[str]]:
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return {v: frozenset(nbrs) for v, nbrs in adj.items()}

    @cached_property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @property
    def n(self) -> int:
        return len(self.vertices)

    def adjacent(self, u: str, v: str) -> bool:
        if u == v:
            return False
        return normalize_edge(u, v) in self._edge_set

    def neighbors(self, v: str) -> frozenset[str]:
        return self._adjacency[v]

    def degree(self, v: str) -> int:
        return len(self._adjacency[v])


@dataclass(frozen=True)
class Clique:
    """A set of pairwise-adjacent vertices of some graph."""

    members: frozenset[str]

    @staticmethod
    def of(graph: Graph, members: Iterable[str]) -> "Clique":
        ms = frozenset(members)
        for m in ms:
            if m not in graph._adjacency:
                raise ValueError(f"clique member {m!r} is not a vertex")
        for u in ms:
            for v in ms:
                if u < v and not graph.adjacent(u, v):
                    raise ValueError(f"clique members {u!r} and {v!r} are not adjacent")
        return Clique(members=ms)

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v: object) -> bool:
        return v in self.members


def components(graph: Graph, *, without: frozenset[str] = frozenset()) -> list[frozenset[str]]:
    """Connected components of the graph with ``without`` deleted, sorted by smallest member."""
    remaining = [v for v in graph.vertices if v not in without]
    seen: set[str] = set()
    comps: list[frozenset[str]] = []
    for start in remaining:
        if start in seen:
            continue
        comp = {start}
        frontier = [start]
        seen.add(start)
        while frontier:
            x = frontier.pop()
            for y in graph.neighbors(x):
                if y not in without and y not in seen:
                    seen.add(y)
                    comp.add(y)
                    frontier.append(y)
        comps.append(frozenset(comp))
    return sorted(comps, key=min)


def perfect_elimination_ordering(graph: Graph) -> list[str] | None:
    """A perfect elimination ordering of ``graph``, or None if there is none.

    Runs maximum-cardinality search; the reverse visit order is a perfect
    elimination ordering exactly when the graph is chordal, which the final
    loop checks directly.
    """
    index = {v: i for i, v in enumerate(graph.vertices)}
    weight = {v: 0 for v in graph.vertices}
    unvisited = set(graph.vertices)
    visit_order: list[str] = []
    while unvisited:
        v = max(unvisited, key=lambda u: (weight[u], -index[u]))
        unvisited.remove(v)
        visit_order.append(v)
        for w in graph.neighbors(v):
            if w in unvisited:
                weight[w] += 1
    ordering = list(reversed(visit_order))
    position = {v: i for i, v in enumerate(ordering)}
    for v in ordering:
        later = [w for w in graph.neighbors(v) if position[w] > position[v]]
        if not later:
            continue
        pivot = min(later, key=lambda w: position[w])
        for w in later:
            if w != pivot and not graph.adjacent(pivot, w):
                return None
    return ordering


def is_chordal(graph: Graph) -> bool:
    return perfect_elimination_ordering(graph) is not None


def maximal_cliques(graph: Graph) -> list[Clique]:
    """All maximal cliques of a chordal graph, sorted by size (desc) then members."""
    ordering = perfect_elimination_ordering(graph)
    if ordering is None:
        raise ValueError("requires chordal graph")
    position = {v: i for i, v in enumerate(ordering)}
    candidates = []
    for v in ordering:
        later = frozenset(w for w in graph.neighbors(v) if position[w] > position[v])
        candidates.append(frozenset({v}) | later)
    candidates.sort(key=lambda c: (-len(c), sorted(c)))
    kept: list[frozenset[str]] = []
    for cand in candidates:
        if any(cand < other or cand == other for other in kept):
            continue
        kept.append(cand)
    return [Clique(members=c) for c in kept]


def is_separator(graph: Graph, cut: Iterable[str]) -> bool:
    """Whether deleting ``cut`` disconnects two vertices that were connected before."""
    cut_set = frozenset(cut)
    for v in cut_set:
        if v not in graph._adjacency:
            raise ValueError(f"cut member {v!r} is not a vertex")
    after = components(graph, without=cut_set)
    comp_id = {}
    for i, comp in enumerate(after):
        for v in comp:
            comp_id[v] = i
    for before in components(graph):
        ids = {comp_id[v] for v in before if v in comp_id}
        if len(ids) >= 2:
            return True
    return False


def is_cluster_graph(graph: Graph) -> bool:
    """Whether every connected component is a complete graph."""
    for comp in components(graph):
        for u in comp:
            for v in comp:
                if u < v and not graph.adjacent(u, v):
                    return False
    return True


def induced_subgraph(graph: Graph, keep: Iterable[str]) -> Graph:
    keep_set = frozenset(keep)
    for v in keep_set:
        if v not in graph._adjacency:
            raise ValueError(f"vertex {v!r} is not in the graph")
    vs = tuple(v for v in graph.vertices if v in keep_set)
    es = tuple(e for e in graph.edges if e[0] in keep_set and e[1] in keep_set)
    return Graph(vertices=vs, edges=es)


def graph_to_json_obj(graph: Graph) -> dict:
    return {
        "vertices": list(graph.vertices),
        "edges": [[u, v] for u, v in graph.edges],
    }


def graph_from_json_obj(obj: dict) -> Graph:
    if not isinstance(obj, dict) or "vertices" not in obj or "edges" not in obj:
        raise ValueError("expected an object with 'vertices' and 'edges'")
    return Graph.build(obj["vertices"], [tuple(e) for e in obj["edges"]])


def graph_to_json(graph: Graph) -> str:
    return json.dumps(graph_to_json_obj(graph), indent=2, sort_keys=True) + "\n"


def graph_from_json(text: str) -> Graph:
    return graph_from_json_obj(json.loads(text))


def graph_to_dot(graph: Graph, *, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for v in graph.vertices:
        lines.append(f'  "{v}";')
    for u, v in graph.edges:
        lines.append(f'  "{u}" -- "{v}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
