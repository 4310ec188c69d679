"""Enumeration of unlabeled trees and symmetry helpers for search pruning.

The heavy lifting (generating one tree per isomorphism class) is delegated to
networkx; this module wraps the results in :class:`~leafpower.trees.Tree`,
filters by leaf count or topology shape, and computes leaf orbits under tree
automorphisms via rooted canonical forms.
"""

from __future__ import annotations

from typing import Iterator

import networkx as nx

from .trees import Tree


def nonisomorphic_trees(order: int) -> Iterator[Tree]:
    """One tree per isomorphism class with ``order`` nodes, named n0..n{order-1}."""
    if order < 1:
        raise ValueError("order must be at least 1")
    if order == 1:
        yield Tree.build(["n0"], [])
        return
    if order == 2:
        yield Tree.build(["n0", "n1"], [("n0", "n1")])
        return
    for g in nx.nonisomorphic_trees(order):
        nodes = sorted(g.nodes())
        rename = {x: f"n{i}" for i, x in enumerate(nodes)}
        yield Tree.build(
            [rename[x] for x in nodes],
            [(rename[x], rename[y]) for x, y in g.edges()],
        )


def trees_with_leaf_count(num_leaves: int, max_nodes: int) -> Iterator[Tree]:
    """All tree classes with exactly ``num_leaves`` leaves and at most ``max_nodes`` nodes.

    Yielded in order of increasing node count, so a consumer looking for the
    smallest workable host can stop early.
    """
    if num_leaves < 1:
        raise ValueError("need at least one leaf")
    for order in range(1, max_nodes + 1):
        if order == 1:
            feasible = num_leaves == 1
        elif order == 2:
            feasible = num_leaves == 2
        else:
            feasible = 2 <= num_leaves <= order - 1
        if not feasible:
            continue
        for t in nonisomorphic_trees(order):
            if len(t.leaves()) == num_leaves:
                yield t


def topology_trees(num_leaves: int, max_internal: int) -> Iterator[Tree]:
    """Tree classes with ``num_leaves`` leaves and no degree-2 nodes.

    Every internal node has degree at least three, so these are exactly the
    shapes that remain after suppressing subdivision nodes.  ``max_internal``
    bounds the number of internal nodes.
    """
    if num_leaves < 1:
        raise ValueError("need at least one leaf")
    if max_internal < 0:
        raise ValueError("max_internal must be nonnegative")
    if num_leaves == 1:
        yield Tree.build(["n0"], [])
        return
    if num_leaves == 2:
        yield Tree.build(["n0", "n1"], [("n0", "n1")])
        return
    for internal in range(1, max_internal + 1):
        for t in nonisomorphic_trees(num_leaves + internal):
            if len(t.leaves()) != num_leaves:
                continue
            if all(t.degree(v) >= 3 for v in t.nodes if t.degree(v) > 1):
                yield t


def rooted_canonical_form(tree: Tree, root: str) -> tuple:
    """A nested-tuple canonical form of the tree rooted at ``root``.

    Two rootings yield equal forms exactly when some automorphism of the tree
    maps one root to the other.
    """
    if root not in set(tree.nodes):
        raise ValueError(f"root {root!r} is not in the tree")

    def canon(v: str, parent: str | None) -> tuple:
        return tuple(sorted(canon(w, v) for w in tree.neighbors(v) if w != parent))

    return canon(root, None)


def leaf_orbits(tree: Tree) -> list[tuple[str, ...]]:
    """Leaves grouped into automorphism orbits, each orbit sorted, orbits sorted."""
    groups: dict[tuple, list[str]] = {}
    for leaf in tree.leaves():
        groups.setdefault(rooted_canonical_form(tree, leaf), []).append(leaf)
    return sorted(tuple(sorted(g)) for g in groups.values())


def leaf_orbit_representatives(tree: Tree) -> list[str]:
    """The smallest-named leaf of each automorphism orbit."""
    return sorted(orbit[0] for orbit in leaf_orbits(tree))
