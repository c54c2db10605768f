"""Maximum linear forests: LF(G), a deterministic witness, and all optima.

A linear forest is an edge subset with every vertex of degree <= 2 and no
cycle, i.e. a disjoint union of paths. "Maximal" here means maximum edge
count, following the definition used throughout the package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .errors import InputError, SizeError
from .graphs import Graph, component_masks

DEFAULT_NODE_BUDGET = 5_000_000
MAX_ALL_FORESTS_N = 8


@dataclass(frozen=True)
class LinearForest:
    host: Graph
    edges: frozenset

    def __post_init__(self):
        norm = frozenset((min(e), max(e)) for e in self.edges)
        object.__setattr__(self, "edges", norm)
        missing = [e for e in norm if e not in self.host.edges]
        if missing:
            raise InputError(f"forest edges {sorted(missing)} are not edges of the host graph")

    @cached_property
    def graph(self) -> Graph:
        return Graph(self.host.n, self.edges)

    @cached_property
    def degree(self) -> dict[int, int]:
        d = {v: 0 for v in self.host.vertices}
        for i, j in self.edges:
            d[i] += 1
            d[j] += 1
        return d

    @property
    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def leaves(self) -> list[int]:
        return [v for v, d in self.degree.items() if d == 1]

    def internal_vertices(self) -> list[int]:
        return [v for v, d in self.degree.items() if d == 2]

    def is_linear(self) -> bool:
        return is_linear_forest(self.host.n, self.edges)

    def __len__(self) -> int:
        return len(self.edges)


def is_linear_forest(n: int, edges) -> bool:
    """Degree <= 2 everywhere and acyclic (union-find)."""
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    deg = [0] * (n + 1)
    for i, j in edges:
        deg[i] += 1
        deg[j] += 1
        if deg[i] > 2 or deg[j] > 2:
            return False
        ri, rj = find(i), find(j)
        if ri == rj:
            return False
        parent[ri] = rj
    return True


class _Search:
    """Depth-first include/exclude search over a fixed edge order.

    Partial forests are tracked by vertex degree and, for path endpoints,
    the opposite endpoint of their path; an edge closes a cycle exactly when
    it joins the two ends of one path.
    """

    def __init__(self, g: Graph, order: list[tuple[int, int]], budget: int):
        self.n = g.n
        self.edges = [(i - 1, j - 1) for i, j in order]
        self.m = len(self.edges)
        self.budget = budget
        self.nodes = 0
        # suffix[k][v]: number of edges at index >= k touching v
        suffix = [[0] * self.n for _ in range(self.m + 1)]
        for k in range(self.m - 1, -1, -1):
            row = suffix[k + 1][:]
            u, v = self.edges[k]
            row[u] += 1
            row[v] += 1
            suffix[k] = row
        self.suffix = suffix
        self.deg = [0] * self.n
        self.end = list(range(self.n))
        self.chosen: list[int] = []
        self.global_cap = g.n - len(component_masks(g.adj, g.full_mask)) if g.n else 0

    def bound(self, k: int) -> int:
        row = self.suffix[k]
        slack = 0
        for v in range(self.n):
            r = row[v]
            if r:
                s = 2 - self.deg[v]
                slack += r if r < s else s
        extra = slack // 2
        rem = self.m - k
        if rem < extra:
            extra = rem
        total = len(self.chosen) + extra
        return total if total < self.global_cap else self.global_cap

    def tick(self):
        self.nodes += 1
        if self.nodes > self.budget:
            raise SizeError(
                f"linear-forest search exceeded {self.budget} nodes (|E| = {self.m}); raise the budget"
            )

    def run(self, k: int, target: int, visit) -> bool:
        """Explore from edge index ``k``. ``visit`` returns True to stop."""
        self.tick()
        if len(self.chosen) >= target:
            return visit(self.chosen)
        if k == self.m or self.bound(k) < target:
            return False
        u, v = self.edges[k]
        deg, end = self.deg, self.end
        if deg[u] < 2 and deg[v] < 2 and end[u] != v:
            a, b = end[u], end[v]
            old_a, old_b = end[a], end[b]
            end[a], end[b] = b, a
            deg[u] += 1
            deg[v] += 1
            self.chosen.append(k)
            stop = self.run(k + 1, target, visit)
            self.chosen.pop()
            deg[u] -= 1
            deg[v] -= 1
            end[a], end[b] = old_a, old_b
            if stop:
                return True
        return self.run(k + 1, target, visit)


def _degree_sum_order(g: Graph) -> list[tuple[int, int]]:
    deg = g.degrees()
    return sorted(g.edges, key=lambda e: (deg[e[0] - 1] + deg[e[1] - 1], e))


def lf_number(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> int:
    """Edge count of a maximum linear forest of ``g``."""
    if not g.edges:
        return 0
    search = _Search(g, _degree_sum_order(g), budget)
    best = 0
    # raise the target until infeasible; each successful probe stops at the first hit
    cap = search.global_cap
    while best < cap:
        if search.run(0, best + 1, lambda chosen: True):
            best += 1
        else:
            break
    return best


def max_linear_forest(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> LinearForest:
    """Lexicographically least (sorted edge list) maximum linear forest."""
    lf = lf_number(g, budget)
    if lf == 0:
        return LinearForest(g, frozenset())
    order = list(g.sorted_edges)
    search = _Search(g, order, budget)
    found = []

    def visit(chosen):
        found.append(frozenset(order[k] for k in chosen))
        return True

    search.run(0, lf, visit)
    return LinearForest(g, found[0])


def all_max_linear_forests(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> list[LinearForest]:
    """Every maximum linear forest, in lexicographic order of sorted edge lists."""
    if g.n > MAX_ALL_FORESTS_N:
        raise SizeError(f"all_max_linear_forests needs n <= {MAX_ALL_FORESTS_N}, got {g.n}")
    lf = lf_number(g, budget)
    if lf == 0:
        return [LinearForest(g, frozenset())]
    order = list(g.sorted_edges)
    search = _Search(g, order, budget)
    found = []

    def visit(chosen):
        found.append(LinearForest(g, frozenset(order[k] for k in chosen)))
        return False

    search.run(0, lf, visit)
    return found


def brute_force_lf(g: Graph) -> int:
    """Exhaustive LF over all edge subsets (test oracle, |E| <= 16)."""
    edges = g.sorted_edges
    best = 0
    for bits in range(1 << len(edges)):
        size = bits.bit_count()
        if size <= best:
            continue
        subset = [e for k, e in enumerate(edges) if bits >> k & 1]
        if is_linear_forest(g.n, subset):
            best = size
    return best
