"""LF-covers of trees by repeatedly stripping extremal branch points.

The loop works on a shrinking forest. Each iteration does one of:

* ``path``: some component is a path; all its edges join F.
* ``case2``: the least extremal branch point b has at least two leaves;
  F gains b-l1 and b-l2 for its two least leaves, b joins S, and b with all
  of its leaves is deleted.
* ``case2-leg``: b has fewer than two leaves; the two partners are its
  leaves first, then its least non-branch neighbours (an extremal branch
  point always has two). Otherwise identical to ``case2``.

Every S-vertex receives exactly two F-edges and is deleted at once, and
every surviving partner has degree <= 1 afterwards, so it ends a path of
the remaining cover. Each step adds two edges while LF drops by at most
two, so F stays maximum.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator, Optional

from .cover import LFCover
from .errors import InputError
from .forests import LinearForest
from .graphs import Graph, component_masks


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and len(g.edges) == g.n - 1 and len(component_masks(g.adj, g.full_mask)) == 1


def _require_tree(g: Graph):
    if not is_tree(g):
        raise InputError(f"not a tree: n = {g.n}, |E| = {len(g.edges)}")


def _adjacency(g: Graph) -> dict[int, set]:
    adj = {v: set() for v in g.vertices}
    for i, j in g.edges:
        adj[i].add(j)
        adj[j].add(i)
    return adj


def _extremal(adj: dict[int, set]) -> list[int]:
    branch = {v for v, nb in adj.items() if len(nb) >= 3}
    return sorted(b for b in branch if len(adj[b] & branch) <= 1)


def extremal_branch_points(t: Graph) -> list[int]:
    """Branch points (degree >= 3) adjacent to at most one other branch point."""
    _require_tree(t)
    return _extremal(_adjacency(t))


@dataclass(frozen=True)
class TreeStep:
    case: str  # "path", "case2" or "case2-leg"
    branch_point: Optional[int]
    leaves_used: tuple[int, ...]
    added_edges: tuple[tuple[int, int], ...]
    removed_vertices: tuple[int, ...]

    def describe(self) -> str:
        edges = ",".join(f"{i}-{j}" for i, j in self.added_edges) or "-"
        removed = ",".join(map(str, self.removed_vertices))
        if self.case == "path":
            return f"path      F+={edges} removed={removed}"
        used = ",".join(map(str, self.leaves_used))
        return f"{self.case:<9} b={self.branch_point} partners={used} F+={edges} S+={self.branch_point} removed={removed}"


@dataclass(frozen=True)
class TreeCoverTrace:
    steps: tuple[TreeStep, ...]
    result: LFCover = field(compare=False)

    def log(self) -> str:
        return "\n".join(f"step {k}: {s.describe()}" for k, s in enumerate(self.steps, 1))


def _edge(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


def tree_lf_cover(t: Graph) -> TreeCoverTrace:
    """Run the stripping loop on tree ``t`` and return the trace and cover."""
    _require_tree(t)
    adj = _adjacency(t)
    forest: set = set()
    s: set = set()
    steps = []

    def delete(v):
        for u in adj.pop(v):
            adj[u].discard(v)

    while adj:
        for v in [v for v, nb in adj.items() if not nb]:
            del adj[v]
        if not adj:
            break
        path = _first_path_component(adj)
        if path is not None:
            added = tuple(sorted({_edge(v, u) for v in path for u in adj[v]}))
            forest.update(added)
            for v in path:
                delete(v)
            steps.append(TreeStep("path", None, (), added, tuple(sorted(path))))
            continue
        b = _extremal(adj)[0]
        branch = {v for v, nb in adj.items() if len(nb) >= 3}
        leaves = sorted(u for u in adj[b] if len(adj[u]) == 1)
        if len(leaves) >= 2:
            case, partners = "case2", leaves[:2]
        else:
            others = sorted(u for u in adj[b] if u not in branch and u not in leaves)
            case, partners = "case2-leg", (leaves + others)[:2]
        added = tuple(sorted(_edge(b, u) for u in partners))
        forest.update(added)
        s.add(b)
        removed = tuple(sorted([b] + leaves))
        for v in removed:
            delete(v)
        steps.append(TreeStep(case, b, tuple(partners), added, removed))

    cover = LFCover(LinearForest(t, frozenset(forest)), frozenset(s))
    return TreeCoverTrace(tuple(steps), cover)


def _first_path_component(adj: dict[int, set]) -> Optional[list[int]]:
    seen = set()
    for v in sorted(adj):
        if v in seen:
            continue
        comp = [v]
        seen.add(v)
        k = 0
        while k < len(comp):
            for u in adj[comp[k]]:
                if u not in seen:
                    seen.add(u)
                    comp.append(u)
            k += 1
        if all(len(adj[x]) <= 2 for x in comp):
            return comp
    return None


# -- tree enumeration ----------------------------------------------------------


def prufer_to_tree(seq, n: Optional[int] = None) -> Graph:
    """Decode a Prüfer sequence over 1..n (n = len(seq) + 2 by default)."""
    seq = list(seq)
    if n is None:
        n = len(seq) + 2
    if n < 2 or len(seq) != n - 2:
        raise InputError(f"Prüfer sequence of length {len(seq)} does not describe a tree on {n} vertices")
    if any(not 1 <= x <= n for x in seq):
        raise InputError("Prüfer entries must lie in 1..n")
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(v for v in range(1, n + 1) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, w = [v for v in range(1, n + 1) if degree[v] == 1]
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def random_tree(n: int, rng: random.Random) -> Graph:
    if n == 1:
        return Graph(1)
    return prufer_to_tree([rng.randint(1, n) for _ in range(n - 2)], n)


def all_labelled_trees(n: int) -> Iterator[Graph]:
    """All n^(n-2) labelled trees via Prüfer sequences (small n only)."""
    if n == 1:
        yield Graph(1)
        return
    for seq in product(range(1, n + 1), repeat=n - 2):
        yield prufer_to_tree(seq, n)


def _ahu(adj, root, parent) -> str:
    return "(" + "".join(sorted(_ahu(adj, c, root) for c in adj[root] if c != parent)) + ")"


def _centres(adj) -> list[int]:
    deg = {v: len(nb) for v, nb in adj.items()}
    layer = [v for v in adj if deg[v] <= 1]
    left = len(adj)
    while left > 2:
        left -= len(layer)
        nxt = []
        for v in layer:
            for u in adj[v]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
        layer = nxt
    return layer


def tree_code(t: Graph) -> str:
    """Isomorphism code of a tree: least AHU string over its centres."""
    adj = _adjacency(t)
    return min(_ahu(adj, c, None) for c in _centres(adj))


def nonisomorphic_trees(n: int) -> list[Graph]:
    """One tree per isomorphism class, grown by leaf addition, ordered by code."""
    if n < 1:
        raise InputError("trees need n >= 1")
    level = {tree_code(Graph(1)): Graph(1)}
    for k in range(2, n + 1):
        nxt = {}
        for g in level.values():
            for v in g.vertices:
                h = Graph(k, g.edges | {(v, k)})
                code = tree_code(h)
                if code not in nxt:
                    nxt[code] = h
        level = nxt
    return [level[c] for c in sorted(level)]


WORKED_TREE_EDGES = [(1, 2), (2, 3), (3, 4), (3, 5), (4, 6), (4, 7), (5, 8), (7, 9), (7, 10), (7, 11)]


def worked_tree() -> Graph:
    """The 11-vertex tree used to illustrate the stripping algorithm."""
    return Graph.from_edges(11, WORKED_TREE_EDGES)
