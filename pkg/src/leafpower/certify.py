"""Weighted leaf roots and the exact-rational feasibility certificate.

For a fixed host topology (internal nodes of degree >= 3) and a fixed
vertex-to-leaf placement, being a weighted leaf root is a linear condition on
the edge weights: adjacent pairs need path weight at most 1, non-adjacent
pairs need strictly more than 1.  Strictness is realized by maximizing a
margin variable delta and accepting only optima with delta > 0; the same delta
also forces every edge weight to be strictly positive.  A feasible rational
witness scales by its least common denominator to an ordinary integer k-leaf
root, so feasibility here certifies being a leaf power.
"""

from __future__ import annotations

import itertools
import json
import math
from dataclasses import dataclass
from fractions import Fraction

from . import exactlp
from .enumtrees import leaf_orbit_representatives, topology_trees
from .graphs import Edge, Graph, normalize_edge
from .roots import LeafRoot, _fresh_name
from .trees import Tree, tree_from_json_obj, tree_path, tree_to_json_obj


@dataclass(frozen=True)
class WeightedLeafRoot:
    """A host tree with positive rational edge weights and a leaf placement."""

    host: Tree
    weights: dict[Edge, Fraction]
    placement: dict[str, str]
    margin: Fraction | None = None

    @staticmethod
    def build(
        host: Tree,
        weights: dict[Edge, Fraction],
        placement: dict[str, str],
        margin: Fraction | None = None,
    ) -> "WeightedLeafRoot":
        normalized = {normalize_edge(u, v): Fraction(w) for (u, v), w in weights.items()}
        if set(normalized) != set(host.edges):
            raise ValueError("weights must cover exactly the host edges")
        for e, w in normalized.items():
            if w <= 0:
                raise ValueError(f"weight of edge {e} must be positive")
        leaves = set(host.leaves())
        image = list(placement.values())
        if len(set(image)) != len(image) or set(image) != leaves:
            raise ValueError("placement must biject onto the host leaves")
        return WeightedLeafRoot(
            host=host, weights=normalized, placement=dict(placement), margin=margin
        )


def weighted_distance(root: WeightedLeafRoot, x: str, y: str) -> Fraction:
    """Total edge weight along the unique host path from x to y."""
    path = tree_path(root.host, x, y)
    return sum(
        (root.weights[normalize_edge(p, q)] for p, q in zip(path, path[1:])),
        Fraction(0),
    )


def verify_weighted_leafroot(graph: Graph, root: WeightedLeafRoot) -> bool:
    """Adjacent pairs within weighted distance 1, non-adjacent strictly beyond."""
    if set(root.placement) != set(graph.vertices):
        raise ValueError("placement domain must equal the vertex set")
    for i, u in enumerate(graph.vertices):
        for v in graph.vertices[i + 1 :]:
            d = weighted_distance(root, root.placement[u], root.placement[v])
            if graph.adjacent(u, v):
                if d > 1:
                    return False
            elif d <= 1:
                return False
    return True


@dataclass(frozen=True)
class FeasibilitySystem:
    """The linear system for one (graph, host, placement) candidate.

    Variables: one weight per host edge, in edge order, plus the margin delta
    as the final variable.  Rows are (name, coefficients, sense, rhs).
    """

    graph: Graph
    host: Tree
    placement: dict[str, str]
    edge_vars: tuple[Edge, ...]
    rows: tuple[tuple[str, tuple[Fraction, ...], str, Fraction], ...]

    @property
    def variable_names(self) -> tuple[str, ...]:
        return tuple(f"w_{u}_{v}" for u, v in self.edge_vars) + ("delta",)


@dataclass(frozen=True)
class FeasibilityResult:
    feasible: bool
    delta: Fraction | None
    weights: dict[Edge, Fraction] | None


def build_feasibility_system(graph: Graph, host: Tree, placement: dict[str, str]) -> FeasibilitySystem:
    """Rows: per adjacent pair a <=1 row, per non-adjacent pair a >=1+delta row,
    per edge a weight >= delta row, and the cap delta <= 1.

    The cap loses nothing (a margin beyond 1 is never needed to witness
    strictness) and keeps the objective bounded even for edgeless graphs.
    """
    leaves = set(host.leaves())
    if set(placement) != set(graph.vertices):
        raise ValueError("placement domain must equal the vertex set")
    image = list(placement.values())
    if len(set(image)) != len(image) or set(image) != leaves:
        raise ValueError("placement must biject onto the host leaves")
    for node in host.nodes:
        if host.degree(node) == 2:
            raise ValueError("topology not in canonical form")

    edge_vars = tuple(host.edges)
    edge_index = {e: i for i, e in enumerate(edge_vars)}
    num_vars = len(edge_vars) + 1
    delta = num_vars - 1

    rows: list[tuple[str, tuple[Fraction, ...], str, Fraction]] = []
    for i, u in enumerate(graph.vertices):
        for v in graph.vertices[i + 1 :]:
            coeffs = [Fraction(0)] * num_vars
            path = tree_path(host, placement[u], placement[v])
            for p, q in zip(path, path[1:]):
                coeffs[edge_index[normalize_edge(p, q)]] = Fraction(1)
            if graph.adjacent(u, v):
                rows.append((f"adj_{u}_{v}", tuple(coeffs), exactlp.LE, Fraction(1)))
            else:
                coeffs[delta] = Fraction(-1)
                rows.append((f"sep_{u}_{v}", tuple(coeffs), exactlp.GE, Fraction(1)))
    for e in edge_vars:
        coeffs = [Fraction(0)] * num_vars
        coeffs[edge_index[e]] = Fraction(1)
        coeffs[delta] = Fraction(-1)
        rows.append((f"pos_{e[0]}_{e[1]}", tuple(coeffs), exactlp.GE, Fraction(0)))
    cap = [Fraction(0)] * num_vars
    cap[delta] = Fraction(1)
    rows.append(("cap_delta", tuple(cap), exactlp.LE, Fraction(1)))

    return FeasibilitySystem(
        graph=graph,
        host=host,
        placement=dict(placement),
        edge_vars=edge_vars,
        rows=tuple(rows),
    )


def solve_feasibility(system: FeasibilitySystem) -> FeasibilityResult:
    """Maximize delta exactly; feasible means optimal delta is strictly positive."""
    num_vars = len(system.edge_vars) + 1
    objective = [Fraction(0)] * num_vars
    objective[-1] = Fraction(1)
    solution = exactlp.maximize(
        objective, [(coeffs, sense, rhs) for _, coeffs, sense, rhs in system.rows]
    )
    if solution.status == exactlp.INFEASIBLE:
        return FeasibilityResult(feasible=False, delta=None, weights=None)
    if solution.status == exactlp.UNBOUNDED:
        raise RuntimeError("objective unbounded despite the delta cap")
    delta = solution.x[num_vars - 1]
    if delta <= 0:
        return FeasibilityResult(feasible=False, delta=delta, weights=None)
    weights = {e: solution.x[i] for i, e in enumerate(system.edge_vars)}
    return FeasibilityResult(feasible=True, delta=delta, weights=weights)


def witness_satisfies_system(
    system: FeasibilitySystem, weights: dict[Edge, Fraction], delta: Fraction
) -> bool:
    """Exact substitution of a candidate point into every row."""
    x = [Fraction(weights[e]) for e in system.edge_vars] + [Fraction(delta)]
    for _, coeffs, sense, rhs in system.rows:
        value = sum((c * v for c, v in zip(coeffs, x)), Fraction(0))
        if sense == exactlp.LE and value > rhs:
            return False
        if sense == exactlp.GE and value < rhs:
            return False
        if sense == exactlp.EQ and value != rhs:
            return False
    return True


def certify_leaf_power(graph: Graph, max_internal: int) -> WeightedLeafRoot | None:
    """Search topologies and placements for a feasible weighted leaf root.

    Every topology with |V| leaves, at most ``max_internal`` internal nodes
    and no degree-2 nodes is tried with every placement (the first vertex only
    on one leaf per symmetry orbit).  Returns the first feasible witness; None
    means no root exists WITHIN THIS BOUND, which is not a proof that the
    graph is no leaf power.
    """
    if max_internal < 1:
        raise ValueError("max_internal must be at least 1")
    vertices = list(graph.vertices)
    if not vertices:
        raise ValueError("graph must have at least one vertex")
    for host in topology_trees(len(vertices), max_internal):
        leaves = list(host.leaves())
        for first in leaf_orbit_representatives(host):
            rest = [x for x in leaves if x != first]
            for perm in itertools.permutations(rest):
                placement = dict(zip(vertices, (first, *perm)))
                system = build_feasibility_system(graph, host, placement)
                result = solve_feasibility(system)
                if result.feasible:
                    return WeightedLeafRoot.build(
                        host, result.weights, placement, margin=result.delta
                    )
    return None


def scale_to_integer_leafroot(root: WeightedLeafRoot) -> LeafRoot:
    """Clear denominators: an exact witness becomes an integer k-leaf root.

    With L the least common denominator, every weight w becomes the integer
    w*L and its edge becomes a path of that many unit edges; k = L.  Adjacent
    pairs then sit at distance <= L; non-adjacent pairs had weighted distance
    at least 1 + margin, so they land at integer distance > L, i.e. >= L+1.
    """
    if root.margin is None or root.margin <= 0:
        raise ValueError("witness not strictly feasible")
    lcd = 1
    for w in root.weights.values():
        lcd = math.lcm(lcd, w.denominator)

    taken = set(root.host.nodes)
    nodes = list(root.host.nodes)
    edges: list[tuple[str, str]] = []
    for u, v in root.host.edges:
        length = int(root.weights[(u, v)] * lcd)
        prev = u
        for j in range(1, length):
            mid = _fresh_name(f"{u}~{v}~{j}", taken)
            taken.add(mid)
            nodes.append(mid)
            edges.append((prev, mid))
            prev = mid
        edges.append((prev, v))
    host = Tree.build(nodes, edges)
    return LeafRoot.build(host, lcd, dict(root.placement))


def system_to_lp_text(system: FeasibilitySystem) -> str:
    """CPLEX-style LP text for external cross-checking (coefficients are +-1)."""
    names = system.variable_names

    def render(coeffs: tuple[Fraction, ...]) -> str:
        terms = []
        for c, name in zip(coeffs, names):
            if c == 0:
                continue
            if c == 1:
                terms.append(("+", name))
            elif c == -1:
                terms.append(("-", name))
            else:
                terms.append(("+" if c > 0 else "-", f"{abs(c)} {name}"))
        if not terms:
            return "0"
        first_sign, first_term = terms[0]
        text = first_term if first_sign == "+" else f"- {first_term}"
        for sign, term in terms[1:]:
            text += f" {sign} {term}"
        return text

    lines = ["Maximize", " obj: delta", "Subject To"]
    for name, coeffs, sense, rhs in system.rows:
        op = {exactlp.LE: "<=", exactlp.GE: ">=", exactlp.EQ: "="}[sense]
        lines.append(f" {name}: {render(coeffs)} {op} {rhs}")
    lines.append("End")
    return "\n".join(lines) + "\n"


def _fraction_to_json(value: Fraction) -> dict:
    return {"num": str(value.numerator), "den": str(value.denominator)}


def _fraction_from_json(obj: dict) -> Fraction:
    return Fraction(int(obj["num"]), int(obj["den"]))


def weighted_leafroot_to_json_obj(root: WeightedLeafRoot) -> dict:
    return {
        "host": tree_to_json_obj(root.host),
        "weights": [
            {"edge": [u, v], **_fraction_to_json(w)}
            for (u, v), w in sorted(root.weights.items())
        ],
        "placement": dict(sorted(root.placement.items())),
        "margin": None if root.margin is None else _fraction_to_json(root.margin),
    }


def weighted_leafroot_from_json_obj(obj: dict) -> WeightedLeafRoot:
    for key in ("host", "weights", "placement"):
        if key not in obj:
            raise ValueError(f"missing {key!r}")
    weights = {
        tuple(entry["edge"]): _fraction_from_json(entry) for entry in obj["weights"]
    }
    margin = obj.get("margin")
    return WeightedLeafRoot.build(
        tree_from_json_obj(obj["host"]),
        weights,
        dict(obj["placement"]),
        margin=None if margin is None else _fraction_from_json(margin),
    )


def weighted_leafroot_to_json(root: WeightedLeafRoot) -> str:
    return json.dumps(weighted_leafroot_to_json_obj(root), indent=2, sort_keys=True) + "\n"


def weighted_leafroot_from_json(text: str) -> WeightedLeafRoot:
    return weighted_leafroot_from_json_obj(json.loads(text))
