"""Binomial edge ideals, the primes P_S(G), and checks of their ideal-theoretic identities.

Notation: a = J(P_n) for the path 1-2-...-n, g = J(G) for a Hamiltonian G whose
cycle reads 1, 2, ..., n, and b = a + (z_0, ..., z_{n-2}) with
z_l = x_2...x_{n-1-l} * y_{n-l}...y_{n-1}.
"""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from itertools import product
from typing import Iterable, Optional

from .canon import enumerate_graphs
from .classes import hamiltonian_cycle
from .cover import all_covering_sets, edge_criterion_holds
from .cutsets import cut_sets
from .errors import InputError
from .forests import LinearForest
from .graphs import Graph, complete_graph, connected_components, cycle_graph, path_graph
from .groebner import Ideal, colon, intersect_all
from .poly import Poly, Ring

MAX_IDEAL_N = 7


@dataclass
class CheckReport:
    """Outcome of one ideal-theoretic check; ``witness`` explains a failure."""

    name: str
    inputs: dict
    passed: bool
    witness: Optional[str] = None
    details: dict = field(default_factory=dict)

    def line(self) -> str:
        args = " ".join(f"{k}={v}" for k, v in self.inputs.items())
        tail = f" ({self.witness})" if self.witness else ""
        return f"{'PASS' if self.passed else 'FAIL'} {self.name} {args}{tail}"

    def to_dict(self) -> dict:
        return asdict(self)


def reports_to_json(reports: Iterable[CheckReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=1, sort_keys=True) + "\n"


def ring_for(n: int, p: int = 2) -> Ring:
    if n < 2:
        raise InputError(f"ideal computations need n >= 2, got {n}")
    if n > MAX_IDEAL_N:
        raise InputError(f"ideal computations capped at n <= {MAX_IDEAL_N}")
    return Ring(n, p)


def bei(g: Graph, p: int = 2, ring: Optional[Ring] = None) -> Ideal:
    """J(G) = (x_i y_j - x_j y_i : {i, j} in E(G))."""
    ring = ring or ring_for(g.n, p)
    return Ideal(ring, [ring.delta(i, j) for i, j in g.sorted_edges])


def complete_on(ring: Ring, vertices) -> list[Poly]:
    vs = sorted(vertices)
    return [ring.delta(i, j) for k, i in enumerate(vs) for j in vs[k + 1:]]


def ps_ideal(g: Graph, s: Iterable[int], p: int = 2, ring: Optional[Ring] = None) -> Ideal:
    """(x_i, y_i : i in S) plus J of the completion of each component of G - S."""
    ring = ring or ring_for(g.n, p)
    s = frozenset(s)
    if any(not 1 <= v <= g.n for v in s):
        raise InputError(f"S = {sorted(s)} is not a subset of 1..{g.n}")
    gens = []
    for v in sorted(s):
        gens += [ring.x(v), ring.y(v)]
    for comp in connected_components(g, s):
        gens += complete_on(ring, comp)
    return Ideal(ring, gens)


def decomposition_intersection(g: Graph, ring: Ring) -> Ideal:
    return intersect_all([ps_ideal(g, s, ring=ring) for s in cut_sets(g).sets])


def check_primary_decomposition(g: Graph, p: int = 2) -> CheckReport:
    ring = ring_for(g.n, p)
    j = bei(g, ring=ring)
    meet = decomposition_intersection(g, ring)
    ok = j == meet
    witness = None
    if not ok:
        extra = [str(h) for h in meet.gb() if not j.contains(h)]
        witness = f"in the intersection but not in J(G): {extra[0]}" if extra else "J(G) not contained in intersection"
    return CheckReport(
        "primary-decomposition",
        {"edges": g.sorted_edges, "n": g.n, "p": p},
        ok,
        witness,
        {"cut_sets": [sorted(s) for s in cut_sets(g).sets]},
    )


def regular_sequence_check(edges: list[tuple[int, int]], n: int, p: int = 2) -> tuple[bool, Optional[int]]:
    """Whether the deltas of ``edges`` form a regular sequence, and the first failing index (1-based).

    The k-th element is regular when (prefix : delta_k) equals the prefix ideal.
    """
    if not edges:
        raise InputError("empty sequence")
    ring = ring_for(n, p)
    prefix = Ideal(ring, [])
    for k, (i, j) in enumerate(edges, 1):
        d = ring.delta(i, j)
        if prefix.gens:
            if prefix.contains(d) or colon(prefix, d) != prefix:
                return False, k
        prefix = prefix + [d]
    return True, None


def z_value(l: int, n: int, i: Optional[int] = None, j: Optional[int] = None, ring: Optional[Ring] = None) -> Poly:
    """z_l^{i,j} = x_{i+1}...x_{j-1-l} * y_{j-l}...y_{j-1}; plain z_l uses i = 1, j = n."""
    ring = ring or ring_for(n, 2)
    if i is None and j is None:
        i, j = 1, n
        if not 0 <= l <= n - 2:
            raise InputError(f"z_l needs 0 <= l <= n - 2, got l = {l}")
    elif i is None or j is None:
        raise InputError("give both truncation bounds or neither")
    if not 1 <= i < j <= n:
        raise InputError(f"need 1 <= i < j <= n, got i = {i}, j = {j}")
    if not 0 <= l <= j - i - 1:
        raise InputError(f"need 0 <= l <= j - i - 1, got l = {l}")
    out = ring.one()
    for k in range(i + 1, j - l):
        out = out * ring.x(k)
    for k in range(j - l, j):
        out = out * ring.y(k)
    return out


def path_ideal(n: int, p: int = 2, ring: Optional[Ring] = None) -> Ideal:
    """a = J(P_n)."""
    ring = ring or ring_for(n, p)
    return Ideal(ring, [ring.delta(k, k + 1) for k in range(1, n)])


def root_candidate(n: int, p: int = 2, ring: Optional[Ring] = None) -> Ideal:
    """b = J(P_n) + (z_0, ..., z_{n-2})."""
    if n < 3:
        raise InputError(f"needs n >= 3, got {n}")
    ring = ring or ring_for(n, p)
    return path_ideal(n, ring=ring) + [z_value(l, n, ring=ring) for l in range(n - 1)]


def hamiltonian_relabel(g: Graph) -> tuple[Graph, list[int]]:
    """Relabel so a Hamiltonian cycle reads 1, 2, ..., n; returns (graph, cycle in old labels)."""
    if g.n < 3:
        raise InputError("Hamiltonian graphs need n >= 3")
    cycle = hamiltonian_cycle(g)
    if cycle is None:
        raise InputError("graph is not Hamiltonian")
    perm = [0] * g.n
    for new, old in enumerate(cycle, 1):
        perm[old - 1] = new
    return g.relabel(perm), cycle


def verify_colon_theorem(g: Graph, p: int = 2) -> list[CheckReport]:
    """(a : g) = b and (a : g) = (a : delta_{1,n}) for Hamiltonian ``g``."""
    h, cycle = hamiltonian_relabel(g)
    n = h.n
    ring = ring_for(n, p)
    a = path_ideal(n, ring=ring)
    gi = bei(h, ring=ring)
    b = root_candidate(n, ring=ring)
    inputs = {"edges": g.sorted_edges, "n": n, "p": p}
    details = {"cycle": cycle}

    missing = None
    for l in range(n - 1):
        z = z_value(l, n, ring=ring)
        for i, j in h.sorted_edges:
            if not a.contains(z * ring.delta(i, j)):
                missing = f"z_{l} * delta_{i},{j} not in a"
                break
        if missing:
            break
    reports = [CheckReport("b-in-colon", inputs, missing is None, missing, details)]

    ag = colon(a, gi)
    ok = ag == b
    witness = None
    if not ok:
        diff = [str(f) for f in ag.gb() if not b.contains(f)] or [str(f) for f in b.gb() if not ag.contains(f)]
        witness = f"bases differ, e.g. {diff[0]}" if diff else "bases differ"
    reports.append(
        CheckReport("colon-equals-b", inputs, ok, witness, {"colon_basis": [str(f) for f in ag.gb()], **details})
    )

    ad = colon(a, ring.delta(1, n))
    ok = ad == ag
    reports.append(CheckReport("colon-by-delta-1n", inputs, ok, None if ok else "(a : delta_1n) differs", details))
    return reports


def zprop_check(n: int, p: int = 2) -> CheckReport:
    """z_l^{i,j} * delta_{i,j} lies in J(P_n) for all 1 <= i < j <= n and 0 <= l <= j - i - 1."""
    ring = ring_for(n, p)
    a = path_ideal(n, ring=ring)
    count = 0
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            d = ring.delta(i, j)
            for l in range(j - i):
                count += 1
                if not a.contains(z_value(l, n, i, j, ring=ring) * d):
                    return CheckReport("zprop", {"n": n, "p": p}, False, f"fails at i={i}, j={j}, l={l}")
    return CheckReport("zprop", {"n": n, "p": p}, True, details={"memberships": count})


def grading_prop_check(n: int, p: int = 2) -> CheckReport:
    """Every product of one of x_i, y_i for each 2 <= i <= n-1 lies in b."""
    ring = ring_for(n, p)
    b = root_candidate(n, ring=ring)
    count = 0
    for choice in product((0, 1), repeat=n - 2):
        m = ring.one()
        for k, c in zip(range(2, n), choice):
            m = m * (ring.y(k) if c else ring.x(k))
        count += 1
        if not b.contains(m):
            return CheckReport("grading", {"n": n, "p": p}, False, f"{m} not in b")
    return CheckReport("grading", {"n": n, "p": p}, True, details={"memberships": count})


def z_nonzero_check(n: int, p: int = 2) -> CheckReport:
    """Some z_l lies outside J(P_n), so b/a is nonzero."""
    ring = ring_for(n, p)
    a = path_ideal(n, ring=ring)
    outside = [l for l in range(n - 1) if not a.contains(z_value(l, n, ring=ring))]
    return CheckReport("z-nonzero", {"n": n, "p": p}, bool(outside), None if outside else "all z_l in a",
                       {"outside": outside})


def verify_root_ass(n: int, p: int = 2) -> list[CheckReport]:
    """b equals the meet of P_S(P_n) over nonempty cut sets S, and P_empty(P_n) = J(K_n)."""
    ring = ring_for(n, p)
    if n < 3:
        raise InputError("needs n >= 3")
    pn = path_graph(n)
    b = root_candidate(n, ring=ring)
    nonempty = [s for s in cut_sets(pn).sets if s]
    meet = intersect_all([ps_ideal(pn, s, ring=ring) for s in nonempty])
    inputs = {"n": n, "p": p}
    reports = [
        CheckReport(
            "b-equals-meet",
            inputs,
            b == meet,
            None if b == meet else "b differs from the intersection",
            {"cut_sets": [sorted(s) for s in nonempty]},
        )
    ]
    ok = ps_ideal(pn, (), ring=ring) == bei(complete_graph(n), ring=ring)
    reports.append(CheckReport("p-empty-is-complete", inputs, ok, None if ok else "P_empty(P_n) != J(K_n)"))
    kn = complete_graph(n)
    forest = LinearForest(kn, pn.edges)
    sets = all_covering_sets(kn, forest)
    ok = sets == [frozenset()]
    reports.append(
        CheckReport("covering-sets-of-path-in-complete", inputs, ok, None if ok else f"got {sets}",
                    {"sets": [sorted(s) for s in sets]})
    )
    return reports


def delta_in_ps_matches_criterion(g: Graph, forest_edges, s, p: int = 2) -> bool:
    """delta_ij in P_S(F) exactly when the combinatorial edge test passes, for every edge of G."""
    ring = ring_for(g.n, p)
    f = Graph(g.n, frozenset(forest_edges))
    prime = ps_ideal(f, s, ring=ring)
    s = frozenset(s)
    return all(prime.contains(ring.delta(i, j)) == edge_criterion_holds(g.n, f.edges, s, (i, j))
               for i, j in g.sorted_edges)


def regseq_suite(n: int, p: int) -> list[CheckReport]:
    """Path deltas are regular; the triangle and claw sequences fail at their third element."""
    out = []
    ok, idx = regular_sequence_check([(k, k + 1) for k in range(1, n)], n, p)
    out.append(CheckReport("regseq-path", {"n": n, "p": p}, ok, None if ok else f"fails at {idx}"))
    if n >= 3:
        ok, idx = regular_sequence_check([(1, 2), (2, 3), (1, 3)], n, p)
        out.append(CheckReport("regseq-triangle-fails", {"n": n, "p": p}, idx == 3, f"failing index {idx}"))
    if n >= 4:
        ok, idx = regular_sequence_check([(1, 2), (1, 3), (1, 4)], n, p)
        out.append(CheckReport("regseq-claw-fails", {"n": n, "p": p}, idx == 3, f"failing index {idx}"))
        ring = ring_for(n, p)
        prefix = Ideal(ring, [ring.delta(1, 2), ring.delta(1, 3)])
        k3 = Ideal(ring, complete_on(ring, (1, 2, 3)))
        ok = colon(prefix, ring.delta(1, 4)) == k3
        out.append(
            CheckReport("claw-colon-is-triangle", {"n": n, "p": p}, ok, None if ok else "colon differs from J(K_3)")
        )
    return out


SUITES = ("pd", "colon", "zprop", "grading", "root-ass", "regseq")
SUITES_NEEDING_3 = ("colon", "zprop", "grading", "root-ass")


def suite_reports(suite: str, n: int, p: int) -> list[CheckReport]:
    """All reports of one named suite at size n over GF(p)."""
    if suite not in SUITES:
        raise InputError(f"unknown suite {suite!r}")
    if n < 2 or (suite in SUITES_NEEDING_3 and n < 3):
        raise InputError(f"suite {suite} needs n >= {3 if suite in SUITES_NEEDING_3 else 2}")
    if suite == "pd":
        return [check_primary_decomposition(g, p) for g in enumerate_graphs(n, connected_only=True)]
    if suite == "colon":
        return verify_colon_theorem(complete_graph(n), p) + verify_colon_theorem(cycle_graph(n), p)
    if suite == "zprop":
        return [zprop_check(n, p), z_nonzero_check(n, p)]
    if suite == "grading":
        return [grading_prop_check(n, p)]
    if suite == "root-ass":
        return verify_root_ass(n, p)
    return regseq_suite(n, p)
