"""Simple undirected graphs on vertices 1..n.

Vertices are 1-based everywhere in the public API. Internally adjacency is
kept as a tuple of bitmasks where vertex ``v`` owns bit ``v - 1``; most
hot loops in the package work on those masks directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator

from .errors import InputError


def _norm_edge(i: int, j: int) -> tuple[int, int]:
    return (i, j) if i < j else (j, i)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph. ``n == 0`` is the null graph K_0."""

    n: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 0:
            raise InputError(f"vertex count must be >= 0, got {self.n}")
        normed = set()
        for e in self.edges:
            i, j = e
            if i == j:
                raise InputError(f"self-loop at vertex {i}")
            if not (1 <= i <= self.n and 1 <= j <= self.n):
                raise InputError(f"edge {{{i},{j}}} has an endpoint outside 1..{self.n}")
            normed.add(_norm_edge(i, j))
        object.__setattr__(self, "edges", frozenset(normed))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable) -> "Graph":
        edges = list(edges)
        seen = set()
        for i, j in edges:
            e = _norm_edge(i, j)
            if e in seen:
                raise InputError(f"duplicate edge {{{e[0]},{e[1]}}}")
            seen.add(e)
        return cls(n, frozenset(seen))

    @classmethod
    def from_adjacency(cls, adj: Iterable[int]) -> "Graph":
        adj = list(adj)
        edges = set()
        for i, m in enumerate(adj):
            rest = m >> (i + 1)
            j = i + 1
            while rest:
                if rest & 1:
                    edges.add((i + 1, j + 1))
                rest >>= 1
                j += 1
        return cls(len(adj), frozenset(edges))

    # -- basic structure ---------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @cached_property
    def adj(self) -> tuple[int, ...]:
        masks = [0] * self.n
        for i, j in self.edges:
            masks[i - 1] |= 1 << (j - 1)
            masks[j - 1] |= 1 << (i - 1)
        return tuple(masks)

    @cached_property
    def sorted_edges(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.edges))

    def num_edges(self) -> int:
        return len(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return _norm_edge(i, j) in self.edges

    def neighbors(self, v: int) -> list[int]:
        return mask_to_vertices(self.adj[v - 1])

    def degree(self, v: int) -> int:
        return self.adj[v - 1].bit_count()

    def degrees(self) -> list[int]:
        return [popcount(m) for m in self.adj]

    # -- derived graphs ----------------------------------------------------

    def relabel(self, perm) -> "Graph":
        """Apply ``perm`` (mapping old vertex -> new vertex, 1-based)."""
        if isinstance(perm, (list, tuple)):
            mapping = {v: perm[v - 1] for v in self.vertices}
        else:
            mapping = dict(perm)
        if sorted(mapping.values()) != list(self.vertices):
            raise InputError("relabeling is not a permutation of the vertex set")
        return Graph(self.n, frozenset(_norm_edge(mapping[i], mapping[j]) for i, j in self.edges))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabeled to 1..k preserving vertex order."""
        keep = sorted(set(vertices))
        index = {v: k + 1 for k, v in enumerate(keep)}
        return Graph(
            len(keep),
            frozenset((index[i], index[j]) for i, j in self.edges if i in index and j in index),
        )

    def complement(self) -> "Graph":
        return Graph(
            self.n,
            frozenset(
                (i, j) for i in self.vertices for j in range(i + 1, self.n + 1) if (i, j) not in self.edges
            ),
        )

    def is_connected(self) -> bool:
        return self.n == 0 or len(connected_components(self)) == 1

    def __str__(self) -> str:
        body = " ".join(f"{i}-{j}" for i, j in self.sorted_edges)
        return f"Graph(n={self.n}; {body})"


def popcount(x: int) -> int:
    return x.bit_count()


def mask_to_vertices(mask: int) -> list[int]:
    out = []
    v = 1
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


def vertices_to_mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << (v - 1)
    return m


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """``g`` on 1..n_g followed by ``h`` shifted to n_g+1..n_g+n_h."""
    shift = g.n
    return Graph(g.n + h.n, g.edges | frozenset((i + shift, j + shift) for i, j in h.edges))


def join_vertex(g: Graph) -> Graph:
    """Add a new vertex n+1 adjacent to every vertex of ``g``."""
    v = g.n + 1
    return Graph(v, g.edges | frozenset((i, v) for i in g.vertices))


# -- components ------------------------------------------------------------


def component_masks(adj, mask: int) -> list[int]:
    """Connected components of the subgraph induced on ``mask``, as bitmasks."""
    comps = []
    remaining = mask
    while remaining:
        low = remaining & -remaining
        comp = low
        frontier = low
        while frontier:
            bit = frontier & -frontier
            frontier ^= bit
            nbrs = adj[bit.bit_length() - 1] & remaining & ~comp
            comp |= nbrs
            frontier |= nbrs
        comps.append(comp)
        remaining &= ~comp
    return comps


def count_components(adj, mask: int) -> int:
    return len(component_masks(adj, mask))


def connected_components(g: Graph, removed: Iterable[int] = ()) -> list[frozenset]:
    """Components of ``g`` with ``removed`` deleted, ordered by least vertex."""
    removed = set(removed)
    bad = [v for v in removed if not 1 <= v <= g.n]
    if bad:
        raise InputError(f"removed vertices {bad} not in 1..{g.n}")
    mask = g.full_mask & ~vertices_to_mask(removed)
    return [frozenset(mask_to_vertices(c)) for c in component_masks(g.adj, mask)]


# -- text formats ----------------------------------------------------------


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: ``n <count>`` then ``e <i> <j>`` lines.

    ``#`` starts a comment. Errors carry the 1-based line number.
    """
    n = None
    edges = []
    seen = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "n" or len(parts) != 2:
                raise InputError("expected header 'n <count>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise InputError(f"bad vertex count {parts[1]!r}", lineno) from None
            if n < 0:
                raise InputError("vertex count must be >= 0", lineno)
            continue
        if parts[0] != "e" or len(parts) != 3:
            raise InputError(f"expected 'e <i> <j>', got {line!r}", lineno)
        try:
            i, j = int(parts[1]), int(parts[2])
        except ValueError:
            raise InputError(f"non-integer endpoint in {line!r}", lineno) from None
        if i == j:
            raise InputError(f"self-loop at vertex {i}", lineno)
        if not (1 <= i <= n and 1 <= j <= n):
            raise InputError(f"endpoint out of range 1..{n}", lineno)
        e = _norm_edge(i, j)
        if e in seen:
            raise InputError(f"duplicate edge {{{e[0]},{e[1]}}}", lineno)
        seen.add(e)
        edges.append(e)
    if n is None:
        raise InputError("missing 'n <count>' header")
    return Graph(n, frozenset(edges))


def format_graph(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines += [f"e {i} {j}" for i, j in g.sorted_edges]
    return "\n".join(lines) + "\n"


def to_graph6(g: Graph) -> str:
    import networkx as nx

    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from((i - 1, j - 1) for i, j in g.edges)
    return nx.to_graph6_bytes(h, header=False).decode("ascii").strip()


def from_graph6(line) -> Graph:
    import networkx as nx

    if isinstance(line, str):
        line = line.encode("ascii")
    line = line.strip()
    if line.startswith(b">>graph6<<"):
        line = line[len(b">>graph6<<"):]
    if not line or any(not 63 <= c <= 126 for c in line):
        raise InputError(f"bad graph6 string {line!r}: characters must lie in '?'..'~'")
    try:
        h = nx.from_graph6_bytes(line)
    except Exception as exc:  # networkx raises NetworkXError / ValueError
        raise InputError(f"bad graph6 string {line!r}: {exc}") from None
    return Graph(h.number_of_nodes(), frozenset(_norm_edge(i + 1, j + 1) for i, j in h.edges()))


def read_graph6_lines(lines: Iterable) -> Iterator[tuple[int, Graph]]:
    """Yield (line number, graph) for every non-blank line of a graph6 stream."""
    for lineno, raw in enumerate(lines, start=1):
        s = raw.strip() if isinstance(raw, (str, bytes)) else raw
        if not s:
            continue
        try:
            yield lineno, from_graph6(s)
        except InputError as exc:
            raise InputError(str(exc), lineno) from None


# -- named graphs ----------------------------------------------------------


def path_graph(m: int) -> Graph:
    return Graph(m, frozenset((i, i + 1) for i in range(1, m)))


def cycle_graph(m: int) -> Graph:
    if m < 3:
        raise InputError("cycle needs m >= 3")
    return Graph(m, path_graph(m).edges | {(1, m)})


def complete_graph(m: int) -> Graph:
    return Graph(m, frozenset((i, j) for i in range(1, m + 1) for j in range(i + 1, m + 1)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    """Parts are 1..a and a+1..a+b."""
    return Graph(a + b, frozenset((i, a + j) for i in range(1, a + 1) for j in range(1, b + 1)))


def star_graph(k: int) -> Graph:
    """K_{1,k} with centre 1."""
    return Graph(k + 1, frozenset((1, j) for j in range(2, k + 2)))


NET_EDGES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 5), (3, 6)]


def net_graph() -> Graph:
    return Graph.from_edges(6, NET_EDGES)


def standard_graph(kind: str, *params: int) -> Graph:
    """Named graph with the conventional labelling (path edges {i, i+1}, cycle adds {1, m})."""
    builders = {
        "path": (path_graph, 1),
        "cycle": (cycle_graph, 1),
        "complete": (complete_graph, 1),
        "complete_bipartite": (complete_bipartite_graph, 2),
        "star": (star_graph, 1),
        "net": (lambda: net_graph(), 0),
    }
    if kind not in builders:
        raise InputError(f"unknown graph kind {kind!r}; choose from {sorted(builders)}")
    fn, arity = builders[kind]
    if len(params) != arity:
        raise InputError(f"{kind} takes {arity} parameter(s), got {len(params)}")
    if any((not isinstance(p, int)) or p < 1 for p in params):
        raise InputError(f"{kind} parameters must be positive integers, got {params}")
    return fn(*params)
