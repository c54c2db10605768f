"""Graph classes: builders, recognisers, enumerators and constructive LF-covers."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Optional

from .canon import canonical_form, canonical_graph, enumerate_class
from .cover import LFCover, verify_lf_cover
from .errors import InputError, SizeError, TheoremViolation
from .forests import LinearForest
from .graphs import (
    Graph,
    complete_bipartite_graph,
    component_masks,
    disjoint_union,
    join_vertex,
    mask_to_vertices,
)
from .trees import is_tree, nonisomorphic_trees

MAX_HAMILTON_N = 20
MAX_INDUCED_SCAN_N = 10

KINDS = (
    "traceable",
    "hamiltonian",
    "complete_bipartite",
    "trivially_perfect",
    "cograph",
    "permutation",
    "interval",
    "tree",
    "bipartite",
)


@dataclass(frozen=True)
class ClassSpec:
    """A class member described by kind-specific data.

    * permutation: ``params`` is the word (sigma_1, ..., sigma_m)
    * interval: ``params`` is a tuple of (lo, hi) pairs
    * complete_bipartite: ``params`` is (a, b)
    * trivially_perfect: ``params`` is a construction expression, see ``build_tp``
    * traceable / hamiltonian / cograph / tree / bipartite: ``params`` is a Graph
    """

    kind: str
    params: object

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InputError(f"unknown class kind {self.kind!r}")


# -- Hamiltonian paths and cycles (bitmask DP) ---------------------------------


def _check_hamilton_size(g: Graph):
    if g.n > MAX_HAMILTON_N:
        raise SizeError(f"Hamiltonian search needs n <= {MAX_HAMILTON_N}, got {g.n}")


def _path_dp(g: Graph, start: Optional[int]) -> list[int]:
    """reach[mask] = bitmask of end vertices of paths visiting exactly ``mask``.

    With ``start`` set, only paths beginning at that 0-based vertex count.
    """
    n = g.n
    adj = g.adj
    reach = [0] * (1 << n)
    starts = range(n) if start is None else (start,)
    for v in starts:
        reach[1 << v] |= 1 << v
    for mask in range(1, 1 << n):
        ends = reach[mask]
        while ends:
            bit = ends & -ends
            ends ^= bit
            v = bit.bit_length() - 1
            nxt = adj[v] & ~mask
            while nxt:
                nb = nxt & -nxt
                nxt ^= nb
                reach[mask | nb] |= nb
    return reach


def _walk_back(g: Graph, reach: list[int], mask: int, end: int) -> list[int]:
    order = [end]
    while mask != 1 << end:
        prev_mask = mask & ~(1 << end)
        cands = reach[prev_mask] & g.adj[end]
        end = (cands & -cands).bit_length() - 1
        mask = prev_mask
        order.append(end)
    return [v + 1 for v in reversed(order)]


def hamiltonian_path(g: Graph) -> Optional[list[int]]:
    _check_hamilton_size(g)
    if g.n == 0:
        return []
    reach = _path_dp(g, None)
    ends = reach[g.full_mask]
    if not ends:
        return None
    return _walk_back(g, reach, g.full_mask, (ends & -ends).bit_length() - 1)


def hamiltonian_cycle(g: Graph) -> Optional[list[int]]:
    """Vertex order of a Hamiltonian cycle starting at 1, or None (n >= 3 only)."""
    _check_hamilton_size(g)
    if g.n < 3:
        return None
    reach = _path_dp(g, 0)
    ends = reach[g.full_mask] & g.adj[0]
    if not ends:
        return None
    return _walk_back(g, reach, g.full_mask, (ends & -ends).bit_length() - 1)


def is_traceable(g: Graph) -> bool:
    return hamiltonian_path(g) is not None


def is_hamiltonian(g: Graph) -> bool:
    return hamiltonian_cycle(g) is not None


# -- builders ------------------------------------------------------------------


def permutation_graph(word) -> Graph:
    """Vertices 1..m; v < w adjacent iff w appears before v in ``word``."""
    word = list(word)
    m = len(word)
    if sorted(word) != list(range(1, m + 1)):
        raise InputError(f"{word} is not a permutation of 1..{m}")
    pos = {x: k for k, x in enumerate(word)}
    return Graph(m, frozenset((v, w) for v in range(1, m + 1) for w in range(v + 1, m + 1) if pos[w] < pos[v]))


def interval_graph(intervals) -> Graph:
    """Vertex k is the closed interval ``intervals[k-1]``; edges join overlapping intervals."""
    ivs = [tuple(iv) for iv in intervals]
    for k, iv in enumerate(ivs, 1):
        if len(iv) != 2 or iv[0] > iv[1]:
            raise InputError(f"interval {k} = {iv} must be a pair with lo <= hi")
    return Graph(
        len(ivs),
        frozenset(
            (a + 1, b + 1)
            for a, b in combinations(range(len(ivs)), 2)
            if ivs[a][0] <= ivs[b][1] and ivs[b][0] <= ivs[a][1]
        ),
    )


def build_tp(expr) -> Graph:
    """Build a trivially perfect graph from a construction expression.

    ``"K1"`` is a single vertex, ``("union", e1, e2, ...)`` a disjoint union,
    and ``("join", e)`` adds one vertex adjacent to everything in ``e``.
    """
    return _tp_cover(expr)[0]


def build(spec: ClassSpec) -> Graph:
    if spec.kind == "permutation":
        return permutation_graph(spec.params)
    if spec.kind == "interval":
        return interval_graph(spec.params)
    if spec.kind == "complete_bipartite":
        a, b = spec.params
        if a < 1 or b < 1:
            raise InputError("complete_bipartite needs a, b >= 1")
        return complete_bipartite_graph(a, b)
    if spec.kind == "trivially_perfect":
        return build_tp(spec.params)
    if isinstance(spec.params, Graph):
        g = spec.params
        if not recognize(g, spec.kind):
            raise InputError(f"graph is not {spec.kind}")
        return g
    raise InputError(f"cannot build {spec.kind} from {spec.params!r}")


# -- recognisers ---------------------------------------------------------------


def _induced_degrees(g: Graph, quad) -> list[int]:
    qmask = 0
    for v in quad:
        qmask |= 1 << (v - 1)
    return sorted((g.adj[v - 1] & qmask).bit_count() for v in quad)


def has_induced_p4(g: Graph) -> bool:
    return any(_induced_degrees(g, q) == [1, 1, 2, 2] for q in combinations(g.vertices, 4))


def has_induced_c4(g: Graph) -> bool:
    return any(_induced_degrees(g, q) == [2, 2, 2, 2] for q in combinations(g.vertices, 4))


def is_cograph(g: Graph) -> bool:
    return not has_induced_p4(g)


def is_cograph_by_decomposition(g: Graph) -> bool:
    """Cotree test: every induced piece on >= 2 vertices splits or co-splits."""

    def rec(mask: int, adj, coadj) -> bool:
        if mask & (mask - 1) == 0:
            return True
        parts = component_masks(adj, mask)
        if len(parts) == 1:
            parts = component_masks(coadj, mask)
            if len(parts) == 1:
                return False
        return all(rec(p, adj, coadj) for p in parts)

    full = g.full_mask
    coadj = tuple(full & ~m & ~(1 << k) for k, m in enumerate(g.adj))
    return rec(full, g.adj, coadj)


def is_trivially_perfect(g: Graph) -> bool:
    return not has_induced_p4(g) and not has_induced_c4(g)


def is_bipartite(g: Graph) -> bool:
    colour = {}
    for root in g.vertices:
        if root in colour:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in g.neighbors(v):
                if u not in colour:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return False
    return True


def is_chordal(g: Graph) -> bool:
    """Maximum cardinality search, then check the elimination order is perfect."""
    n = g.n
    weight = [0] * (n + 1)
    order = []
    numbered = set()
    for _ in range(n):
        v = max((u for u in g.vertices if u not in numbered), key=lambda u: (weight[u], -u))
        order.append(v)
        numbered.add(v)
        for u in g.neighbors(v):
            if u not in numbered:
                weight[u] += 1
    position = {v: k for k, v in enumerate(order)}
    for v in order:
        earlier = [u for u in g.neighbors(v) if position[u] < position[v]]
        if not earlier:
            continue
        parent = max(earlier, key=lambda u: position[u])
        others = set(earlier) - {parent}
        if not others <= set(g.neighbors(parent)):
            return False
    return True


def has_asteroidal_triple(g: Graph) -> bool:
    closed = [g.adj[k] | (1 << k) for k in range(g.n)]
    full = g.full_mask
    comp_cache = {}

    def comp_of(avoid: int) -> dict[int, int]:
        if avoid not in comp_cache:
            label = {}
            for c in component_masks(g.adj, full & ~closed[avoid]):
                rest = c
                while rest:
                    bit = rest & -rest
                    rest ^= bit
                    label[bit.bit_length() - 1] = c
            comp_cache[avoid] = label
        return comp_cache[avoid]

    for a, b, c in combinations(range(g.n), 3):
        ok = True
        for x, y, z in ((a, b, c), (a, c, b), (b, c, a)):
            lab = comp_of(z)
            if x not in lab or y not in lab or lab[x] != lab[y]:
                ok = False
                break
        if ok:
            return True
    return False


def is_interval(g: Graph) -> bool:
    """Chordal and free of asteroidal triples (Lekkerkerker-Boland)."""
    if g.n > MAX_INDUCED_SCAN_N:
        raise SizeError(f"interval recognition needs n <= {MAX_INDUCED_SCAN_N}")
    return is_chordal(g) and not has_asteroidal_triple(g)


def is_complete_bipartite(g: Graph) -> bool:
    """K_{a,b} with a, b >= 1: the complement is two disjoint cliques."""
    if g.n < 2 or not is_bipartite(g):
        return False
    side = {1: 0}
    stack = [1]
    while stack:
        v = stack.pop()
        for w in g.neighbors(v):
            if w not in side:
                side[w] = 1 - side[v]
                stack.append(w)
    if len(side) != g.n:
        return False
    a = sum(1 for v in side if side[v] == 0)
    return len(g.edges) == a * (g.n - a)


def recognize(g: Graph, kind: str) -> bool:
    if kind in ("cograph", "trivially_perfect", "interval") and g.n > MAX_INDUCED_SCAN_N:
        raise SizeError(f"{kind} recognition needs n <= {MAX_INDUCED_SCAN_N}, got {g.n}")
    checks = {
        "cograph": is_cograph,
        "trivially_perfect": is_trivially_perfect,
        "bipartite": is_bipartite,
        "complete_bipartite": is_complete_bipartite,
        "interval": is_interval,
        "chordal": is_chordal,
        "tree": is_tree,
        "traceable": is_traceable,
        "hamiltonian": is_hamiltonian,
    }
    if kind not in checks:
        raise InputError(f"no recogniser for {kind!r}")
    return checks[kind](g)


# -- constructive covers -------------------------------------------------------


def traceable_cover(g: Graph) -> LFCover:
    path = hamiltonian_path(g)
    if path is None:
        raise InputError("graph is not traceable")
    edges = frozenset((min(a, b), max(a, b)) for a, b in zip(path, path[1:]))
    return LFCover(LinearForest(g, edges), frozenset())


def complete_bipartite_cover(a: int, b: int) -> LFCover:
    """Alternating path through K_{a,b} (parts 1..a and a+1..a+b).

    Equal parts: a Hamiltonian path with S empty. Otherwise the path
    v_1 w_1 v_2 ... v_b w_b v_{b+1} over the larger part v, with S the
    smaller part w.
    """
    g = complete_bipartite_graph(a, b)
    first = list(range(1, a + 1))
    second = list(range(a + 1, a + b + 1))
    big, small = (first, second) if a >= b else (second, first)
    if a == b:
        walk = [x for pair in zip(big, small) for x in pair]
        s = frozenset()
    else:
        walk = [x for pair in zip(big, small) for x in pair] + [big[len(small)]]
        s = frozenset(small)
    edges = frozenset((min(p, q), max(p, q)) for p, q in zip(walk, walk[1:]))
    return LFCover(LinearForest(g, edges), s)


def _forest_paths(n: int, edges) -> list[list[int]]:
    """Components of a linear forest on 1..n as vertex lists, by least vertex."""
    g = Graph(n, frozenset(edges))
    return [mask_to_vertices(c) for c in component_masks(g.adj, g.full_mask)]


def _tp_cover(expr) -> tuple[Graph, frozenset, frozenset]:
    if expr == "K1" or expr == ("K1",):
        return Graph(1), frozenset(), frozenset()
    if not isinstance(expr, tuple) or not expr:
        raise InputError(f"bad trivially perfect expression {expr!r}")
    op = expr[0]
    if op == "union":
        if len(expr) < 3:
            raise InputError("union needs at least two operands")
        g, f, s = _tp_cover(expr[1])
        for sub in expr[2:]:
            h, fh, sh = _tp_cover(sub)
            shift = g.n
            g = disjoint_union(g, h)
            f = f | frozenset((i + shift, j + shift) for i, j in fh)
            s = s | frozenset(v + shift for v in sh)
        return g, f, s
    if op == "join":
        if len(expr) != 2:
            raise InputError("join takes exactly one operand")
        g, f, s = _tp_cover(expr[1])
        v = g.n + 1
        joined = join_vertex(g)
        paths = _forest_paths(g.n, f)
        deg = {x: 0 for x in g.vertices}
        for i, j in f:
            deg[i] += 1
            deg[j] += 1
        ends = [[x for x in p if deg[x] <= 1] for p in paths]
        if len(paths) == 1:
            # F' spans G' as one path: G' * K1 is traceable
            return joined, f | {(ends[0][0], v)}, frozenset()
        l1, l2 = ends[0][0], ends[1][0]
        if len(paths) == 2:
            # the two paths meet at v in one spanning path: traceable again
            return joined, f | {(l1, v), (l2, v)}, frozenset()
        return joined, f | {(l1, v), (l2, v)}, s | {v}
    raise InputError(f"unknown trivially perfect operation {op!r}")


def trivially_perfect_cover(expr) -> LFCover:
    g, f, s = _tp_cover(expr)
    return LFCover(LinearForest(g, frozenset(f)), frozenset(s))


def constructive_cover(spec: ClassSpec) -> LFCover:
    """Cover built by the class's explicit construction, then re-validated."""
    if spec.kind in ("traceable", "hamiltonian"):
        cover = traceable_cover(spec.params)
    elif spec.kind == "complete_bipartite":
        cover = complete_bipartite_cover(*spec.params)
    elif spec.kind == "trivially_perfect":
        cover = trivially_perfect_cover(spec.params)
    else:
        raise InputError(f"no constructive cover for {spec.kind!r}")
    g = cover.forest.host
    check = verify_lf_cover(g, cover.forest, cover.s)
    if not check.ok:
        raise TheoremViolation(f"{spec.kind} construction failed validation: {check.message}")
    return cover


# -- class enumerators (one representative per isomorphism class) --------------


def cographs(n: int) -> list[Graph]:
    return enumerate_class(n, is_cograph)


def bipartite_graphs(n: int) -> list[Graph]:
    return enumerate_class(n, is_bipartite)


def trivially_perfect_graphs(n: int) -> list[Graph]:
    return enumerate_class(n, is_trivially_perfect)


def _dedup(graphs) -> list[Graph]:
    seen = {}
    for g in graphs:
        c = canonical_graph(g)
        key = canonical_form(c)
        seen.setdefault(key, c)
    return [seen[k] for k in sorted(seen, key=lambda k: (seen[k].n, len(seen[k].edges), k))]


def permutation_graphs(m: int) -> list[Graph]:
    """All permutation graphs from words of length exactly ``m``, deduplicated."""
    if m > 8:
        raise SizeError("permutation sweep capped at words of length <= 8")
    return _dedup(permutation_graph(w) for w in permutations(range(1, m + 1)))


def _endpoint_arrangements(m: int):
    """Perfect matchings of 2m ordered points into (start, end) pairs.

    Intervals are labelled by start order, so each arrangement of m
    unlabelled intervals with distinct endpoints appears once.
    """

    def rec(slots: list[int], placed: list[tuple[int, int]]):
        if not slots:
            yield list(placed)
            return
        start = slots[0]
        for k in range(1, len(slots)):
            placed.append((start, slots[k]))
            yield from rec(slots[1:k] + slots[k + 1:], placed)
            placed.pop()

    yield from rec(list(range(2 * m)), [])


def interval_graphs(m: int) -> list[Graph]:
    """All interval graphs realisable by exactly ``m`` intervals, deduplicated."""
    if m > 7:
        raise SizeError("interval sweep capped at m <= 7 intervals")
    if m == 0:
        return [Graph(0)]
    return _dedup(interval_graph(ivs) for ivs in _endpoint_arrangements(m))


@lru_cache(maxsize=None)
def _tp_expressions(n: int) -> tuple:
    """Construction expressions for every trivially perfect graph on n vertices.

    Connected ones are joins of (n-1)-vertex ones; disconnected ones are
    unions of a connected piece containing the first vertex with the rest.
    Duplicates up to isomorphism are removed.
    """
    if n == 1:
        return ("K1",)
    exprs = []
    connected = [("join", e) for e in _tp_expressions(n - 1)]
    exprs.extend(connected)
    for k in range(1, n):
        for left in _tp_connected(k):
            for right in _tp_expressions(n - k):
                exprs.append(("union", left, right))
    seen = {}
    for e in exprs:
        key = canonical_form(build_tp(e))
        seen.setdefault(key, e)
    return tuple(seen[k] for k in sorted(seen))


def _tp_connected(n: int) -> list:
    if n == 1:
        return ["K1"]
    return [("join", e) for e in _tp_expressions(n - 1)]


def trivially_perfect_expressions(n: int) -> list:
    if n > 9:
        raise SizeError("trivially perfect generation capped at n <= 9")
    return list(_tp_expressions(n))


def trees(n: int) -> list[Graph]:
    return nonisomorphic_trees(n)
