"""LF-covers: verification, search, and the König-type verdict.

(F, S) is an LF-cover of G when F is a maximum linear forest of G and

1. no vertex of S is an end of a path of F,
2. no two vertices of S are adjacent in F,
3. every edge of G has an endpoint in S or lies inside one component of F - S.

Isolated vertices of F count as path ends for criterion 1; with that reading
criteria 1 and 2 say exactly that S is a cut set of F.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .cutsets import cut_sets
from .errors import InputError, SizeError, TheoremViolation
from .forests import DEFAULT_NODE_BUDGET, LinearForest, is_linear_forest, lf_number, max_linear_forest
from .graphs import Graph

MAX_COVER_SETS_N = 10


@dataclass(frozen=True)
class LFCover:
    forest: LinearForest
    s: frozenset

    @property
    def sorted_s(self) -> list[int]:
        return sorted(self.s)


@dataclass(frozen=True)
class CoverCheck:
    ok: bool
    criterion: Optional[str] = None  # "forest", "maximal", "1", "2", "3"
    witness: object = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _forest_components(n: int, forest_edges, s: frozenset) -> list[int]:
    """Component label per vertex of F - S (0 for vertices in S)."""
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for i, j in forest_edges:
        if i in s or j in s:
            continue
        parent[find(i)] = find(j)
    return [0 if v in s else find(v) for v in range(n + 1)]


def edge_criterion_holds(n: int, forest_edges, s: frozenset, edge: tuple[int, int]) -> bool:
    """Criterion 3 for a single edge (combinatorial form of delta_ij in P_S(F))."""
    i, j = edge
    if i in s or j in s:
        return True
    comp = _forest_components(n, forest_edges, s)
    return comp[i] == comp[j]


def check_criteria(g: Graph, f: LinearForest, s: frozenset) -> CoverCheck:
    """Criteria 1-3 only; maximality of ``f`` is assumed."""
    deg = f.degree
    for v in sorted(s):
        if deg[v] < 2:
            kind = "leaf" if deg[v] == 1 else "isolated vertex"
            return CoverCheck(False, "1", v, f"vertex {v} in S is a {kind} of F")
    for i, j in f.sorted_edges:
        if i in s and j in s:
            return CoverCheck(False, "2", (i, j), f"vertices {i} and {j} of S are adjacent in F")
    comp = _forest_components(g.n, f.edges, s)
    for i, j in g.sorted_edges:
        if i in s or j in s:
            continue
        if comp[i] != comp[j]:
            return CoverCheck(
                False, "3", (i, j), f"edge {{{i},{j}}} is neither covered by S nor inside a component of F - S"
            )
    return CoverCheck(True)


def verify_lf_cover(
    g: Graph, f: LinearForest, s: Iterable[int], lf: Optional[int] = None
) -> CoverCheck:
    """Full check: F is a maximum linear forest of ``g`` and (F, S) meets criteria 1-3.

    On failure the result names the first failing criterion and its witness.
    """
    s = frozenset(s)
    if f.host != g:
        f = LinearForest(g, f.edges)
    bad = [v for v in s if not 1 <= v <= g.n]
    if bad:
        raise InputError(f"S contains vertices {sorted(bad)} outside 1..{g.n}")
    if not is_linear_forest(g.n, f.edges):
        return CoverCheck(False, "forest", None, "F is not a linear forest")
    if lf is None:
        lf = lf_number(g)
    if len(f.edges) != lf:
        return CoverCheck(False, "maximal", len(f.edges), f"F has {len(f.edges)} edges but LF(G) = {lf}")
    return check_criteria(g, f, s)


def _candidate_sets(f: LinearForest):
    """Subsets of internal forest vertices, independent in F, by size then lex."""
    internal = f.internal_vertices()
    adjacent = {frozenset(e) for e in f.edges}
    for k in range(len(internal) + 1):
        for combo in combinations(internal, k):
            if any(frozenset((a, b)) in adjacent for a, b in combinations(combo, 2)):
                continue
            yield frozenset(combo)


def all_covering_sets(g: Graph, f: LinearForest) -> list[frozenset]:
    """Every S making (F, S) an LF-cover, ordered by size then lexicographically.

    ``f`` is assumed maximum; the result is empty when it is not.
    """
    if g.n > MAX_COVER_SETS_N:
        raise SizeError(f"all_covering_sets needs n <= {MAX_COVER_SETS_N}, got {g.n}")
    if len(f.edges) != lf_number(g):
        return []
    return [s for s in _candidate_sets(f) if check_criteria(g, f, s)]


def find_lf_cover(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> Optional[LFCover]:
    """An LF-cover on the witness forest, with S of minimum size then lex-least.

    Only one maximum forest is searched: whether a cover exists does not
    depend on the choice of forest (checked separately in the test suite).
    """
    f = max_linear_forest(g, budget)
    for s in _candidate_sets(f):
        if check_criteria(g, f, s):
            return LFCover(f, s)
    return None


@dataclass(frozen=True)
class KonigVerdict:
    grade: int
    lf: int
    konig: bool
    cover: Optional[LFCover]


def is_konig(g: Graph, budget: int = DEFAULT_NODE_BUDGET) -> KonigVerdict:
    """grade(J(G)) == LF(G), cross-checked against LF-cover existence."""
    gr = cut_sets(g).grade
    lf = lf_number(g, budget)
    cover = find_lf_cover(g, budget)
    konig = gr == lf
    if konig != (cover is not None):
        raise TheoremViolation(
            f"grade = {gr}, LF = {lf} but an LF-cover {'was' if cover else 'was not'} found for {g}"
        )
    return KonigVerdict(gr, lf, konig, cover)


def forest_independence(g: Graph, forests: Optional[list[LinearForest]] = None) -> tuple[bool, list]:
    """Compare the covering-set collections of every maximum linear forest.

    Returns (all equal, list of (forest, sets)).
    """
    from .forests import all_max_linear_forests

    if forests is None:
        forests = all_max_linear_forests(g)
    rows = [(f, all_covering_sets(g, f)) for f in forests]
    first = set(rows[0][1]) if rows else set()
    return all(set(sets) == first for _, sets in rows), rows
