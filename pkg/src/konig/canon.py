"""Canonical forms and isomorphism-free enumeration of small graphs.

The canonical form is the lexicographically greatest column code over all
vertex orderings, where column ``k`` records adjacency of the ``k``-th
vertex to the earlier ones. Because a column depends only on the prefix of
the ordering, the optimum can be found level by level keeping only tied
prefixes. Interchangeable twins (equal neighbourhoods up to each other) are
collapsed, which keeps empty/complete/star-like graphs cheap.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterator

from .errors import InputError, SizeError
from .graphs import Graph, component_masks, to_graph6

MAX_CANON_N = 10
MAX_ENUM_N = 7


def _twin_blockers(adj, n: int) -> list[int]:
    """For each vertex, mask of lower-index twins that must be chosen first."""
    out = [0] * n
    for v in range(n):
        for u in range(v):
            if (adj[u] & ~(1 << v)) == (adj[v] & ~(1 << u)):
                out[v] |= 1 << u
    return out


def _best_ordering(adj, n: int) -> tuple[tuple[int, ...], list[int]]:
    blockers = _twin_blockers(adj, n)
    states = [((), 0)]  # (ordering as 0-based indices, chosen mask)
    code = []
    for _ in range(n):
        best = -1
        nxt = []
        for order, chosen in states:
            for v in range(n):
                bit = 1 << v
                if chosen & bit or (blockers[v] & ~chosen):
                    continue
                col = 0
                for u in order:
                    col = (col << 1) | ((adj[v] >> u) & 1)
                if col > best:
                    best = col
                    nxt = [(order + (v,), chosen | bit)]
                elif col == best:
                    nxt.append((order + (v,), chosen | bit))
        code.append(best)
        states = nxt
    return states[0][0], code


def canonical_labeling(g: Graph, max_n: int = MAX_CANON_N) -> list[int]:
    """Return ``perm`` with ``perm[v-1]`` the canonical label of vertex ``v``."""
    if g.n > max_n:
        raise SizeError(f"canonical form needs n <= {max_n}, got n = {g.n}")
    order, _ = _best_ordering(g.adj, g.n)
    perm = [0] * g.n
    for pos, v in enumerate(order):
        perm[v] = pos + 1
    return perm


def canonical_graph(g: Graph, max_n: int = MAX_CANON_N) -> Graph:
    if g.n == 0:
        return g
    return g.relabel(canonical_labeling(g, max_n))


def canonical_form(g: Graph, max_n: int = MAX_CANON_N) -> str:
    """graph6 string of the canonically relabeled graph; equal iff isomorphic."""
    return to_graph6(canonical_graph(g, max_n))


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    return canonical_form(g) == canonical_form(h)


# -- enumeration -------------------------------------------------------------


def _augment(level: list[Graph], keep: Callable[[Graph], bool] | None) -> list[Graph]:
    seen = {}
    for g in level:
        n = g.n + 1
        base_adj = list(g.adj)
        for nbhd in range(1 << g.n):
            adj = [m | (((nbhd >> i) & 1) << g.n) for i, m in enumerate(base_adj)]
            adj.append(nbhd)
            h = Graph.from_adjacency(adj)
            if keep is not None and not keep(h):
                continue
            c = canonical_graph(h, max_n=n)
            key = to_graph6(c)
            if key not in seen:
                seen[key] = c
    return [seen[k] for k in sorted(seen, key=lambda k: (len(seen[k].edges), k))]


@lru_cache(maxsize=None)
def _class_levels(n: int, keep: Callable[[Graph], bool] | None) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph(0),)
    return tuple(_augment(list(_class_levels(n - 1, keep)), keep))


def enumerate_class(
    n: int,
    keep: Callable[[Graph], bool] | None = None,
    connected_only: bool = False,
    max_n: int = MAX_CANON_N,
) -> list[Graph]:
    """One canonical representative per isomorphism class on ``n`` vertices.

    ``keep`` must be hereditary (closed under deleting vertices); the class is
    grown one vertex at a time from its own members. Order: edge count, then
    canonical graph6 string.
    """
    if n < 0:
        raise InputError("n must be >= 0")
    if n > max_n:
        raise SizeError(f"enumeration capped at n <= {max_n}, got {n}")
    graphs = list(_class_levels(n, keep))
    if connected_only:
        graphs = [g for g in graphs if len(component_masks(g.adj, g.full_mask)) <= 1]
    return graphs


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """All graphs on ``n`` vertices up to isomorphism, deterministic order."""
    if n > MAX_ENUM_N:
        raise SizeError(f"enumerate_graphs supports n <= {MAX_ENUM_N}; ingest graph6 for larger n")
    yield from enumerate_class(n, None, connected_only)


def brute_force_classes(n: int) -> set[str]:
    """Canonical forms of all 2^(n choose 2) labelled graphs (test oracle, n <= 5)."""
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    out = set()
    for bits in range(1 << len(pairs)):
        edges = frozenset(p for k, p in enumerate(pairs) if bits >> k & 1)
        out.add(canonical_form(Graph(n, edges)))
    return out
