"""Cut sets C(G), prime heights, and grade/dimension of J(G).

A vertex set S is a cut set when S is empty or adding back any single
vertex of S strictly lowers the number of components of G minus S. The
height of P_S(G) is |S| + n - c(S), and grade(J(G)) is the minimum over C(G).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import InputError, SizeError
from .graphs import Graph, component_masks, mask_to_vertices, vertices_to_mask

MAX_CUTSET_N = 24


@dataclass(frozen=True)
class CutSetReport:
    n: int
    sets: tuple[frozenset, ...]
    heights: tuple[int, ...]
    grade: int
    dim: int

    def height_of(self, s: Iterable[int]) -> int:
        return self.heights[self.sets.index(frozenset(s))]


def _check_subset(g: Graph, s) -> int:
    mask = vertices_to_mask(s)
    if mask & ~g.full_mask:
        raise InputError(f"vertex set {sorted(s)} not contained in 1..{g.n}")
    return mask


def is_cut_set(g: Graph, s: Iterable[int]) -> bool:
    s = set(s)
    mask = _check_subset(g, s)
    if not mask:
        return True
    full = g.full_mask
    c = len(component_masks(g.adj, full & ~mask))
    for v in s:
        if len(component_masks(g.adj, full & ~(mask & ~(1 << (v - 1))))) >= c:
            return False
    return True


def component_count_table(g: Graph) -> list[int]:
    """``table[mask]`` = number of components of G minus the vertices in ``mask``."""
    full = g.full_mask
    adj = g.adj
    return [len(component_masks(adj, full & ~m)) for m in range(1 << g.n)]


def cut_set_masks(g: Graph, table: list[int] | None = None) -> list[int]:
    if table is None:
        table = component_count_table(g)
    out = []
    for mask in range(1 << g.n):
        c = table[mask]
        rest = mask
        ok = True
        while rest:
            bit = rest & -rest
            rest ^= bit
            if table[mask ^ bit] >= c:
                ok = False
                break
        if ok:
            out.append(mask)
    return out


def cut_sets(g: Graph) -> CutSetReport:
    """Enumerate C(G) by a full subset scan, with heights, grade and dimension.

    Sets are listed by size, then lexicographically.
    """
    if g.n > MAX_CUTSET_N:
        raise SizeError(f"cut-set scan needs n <= {MAX_CUTSET_N}, got {g.n}")
    table = component_count_table(g)
    masks = cut_set_masks(g, table)
    rows = []
    for m in masks:
        verts = mask_to_vertices(m)
        rows.append((len(verts), verts, m.bit_count() + g.n - table[m]))
    rows.sort()
    sets = tuple(frozenset(v) for _, v, _ in rows)
    heights = tuple(h for *_, h in rows)
    grade = min(heights)
    return CutSetReport(g.n, sets, heights, grade, 2 * g.n - grade)


def grade(g: Graph) -> int:
    return cut_sets(g).grade


def prime_height(g: Graph, s: Iterable[int]) -> int:
    """|S| + n - c(S); the height of P_S(G) when S is a cut set."""
    s = set(s)
    mask = _check_subset(g, s)
    return len(s) + g.n - len(component_masks(g.adj, g.full_mask & ~mask))
