"""Class sweeps: one row per graph with grade, LF, König verdict and a witness cover.

Rows never abort a sweep; size errors and theorem violations are recorded
in the row and summarised. Work is spread over processes with input-ordered
merging, so output is identical for any ``jobs``.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field
from multiprocessing import Pool
from typing import Iterable, Optional

from .canon import MAX_CANON_N, canonical_graph, enumerate_graphs
from .classes import (
    bipartite_graphs,
    cographs,
    interval_graphs,
    permutation_graphs,
    trees,
    trivially_perfect_graphs,
)
from .cover import find_lf_cover, verify_lf_cover
from .cutsets import grade
from .errors import InputError, KonigError
from .forests import DEFAULT_NODE_BUDGET, lf_number
from .graphs import Graph, from_graph6, to_graph6
from .trees import is_tree, tree_lf_cover

CSV_FIELDS = ("graph6", "n", "edges", "grade", "lf", "konig", "cover_s")
CHECKS = ("lf_coverable", "konig_equivalence", "tree-algorithm")
SWEEP_CLASSES = ("all", "cograph", "bipartite", "permutation", "interval", "trivially_perfect", "tree")
# classes where a non-coverable member would refute a stated claim or conjecture
CONJECTURE_CLASSES = frozenset(SWEEP_CLASSES) - {"all"}


@dataclass(frozen=True)
class SweepConfig:
    graph_class: Optional[str] = None
    max_n: int = 6
    graph6_lines: Optional[tuple] = None
    check: str = "lf_coverable"
    jobs: int = 1
    budget: int = DEFAULT_NODE_BUDGET

    def __post_init__(self):
        if (self.graph_class is None) == (self.graph6_lines is None):
            raise InputError("give exactly one of a graph class or a graph6 stream")
        if self.graph_class is not None and self.graph_class not in SWEEP_CLASSES:
            raise InputError(f"unknown class {self.graph_class!r}; choose from {', '.join(SWEEP_CLASSES)}")
        if self.check not in CHECKS:
            raise InputError(f"unknown check {self.check!r}; choose from {', '.join(CHECKS)}")
        if self.check == "tree-algorithm" and self.graph_class not in (None, "tree"):
            raise InputError("tree-algorithm check needs --class tree or a graph6 stream of trees")
        if self.jobs < 1:
            raise InputError("--jobs must be >= 1")


@dataclass
class SweepRecord:
    graph6: str
    n: int
    edges: int
    grade: Optional[int] = None
    lf: Optional[int] = None
    konig: Optional[bool] = None
    cover_s: Optional[list] = None  # None means no cover
    connected: bool = True
    flagged: bool = False  # counterexample / violation for the active check
    error: Optional[str] = None

    def csv_row(self) -> list[str]:
        return [
            self.graph6,
            str(self.n),
            str(self.edges),
            "" if self.grade is None else str(self.grade),
            "" if self.lf is None else str(self.lf),
            "" if self.konig is None else str(self.konig).lower(),
            _format_cover(self),
        ]

    def json_row(self) -> dict:
        d = {k: getattr(self, k) for k in CSV_FIELDS}
        d["cover_s"] = _format_cover(self) if self.error or self.cover_s is None else self.cover_s
        return d


def _format_cover(rec: SweepRecord) -> str:
    if rec.error:
        return f"ERROR: {rec.error}"
    if rec.cover_s is None:
        return "NONE"
    return ";".join(map(str, rec.cover_s))


def class_members(graph_class: str, max_n: int) -> list[Graph]:
    """Members of a class with 1..max_n vertices, one per isomorphism class."""
    out = []
    for n in range(1, max_n + 1):
        if graph_class == "all":
            out.extend(enumerate_graphs(n))
        elif graph_class == "cograph":
            out.extend(cographs(n))
        elif graph_class == "bipartite":
            out.extend(bipartite_graphs(n))
        elif graph_class == "trivially_perfect":
            out.extend(trivially_perfect_graphs(n))
        elif graph_class == "tree":
            out.extend(trees(n))
        elif graph_class == "permutation":
            out.extend(permutation_graphs(n))
        elif graph_class == "interval":
            out.extend(interval_graphs(n))
        else:
            raise InputError(f"unknown class {graph_class!r}")
    return out


def _is_connected(g: Graph) -> bool:
    return g.n <= 1 or g.is_connected()


def sweep_one(args) -> SweepRecord:
    """Compute the row for one graph6 string (worker entry point)."""
    text, check, budget = args
    g = from_graph6(text)
    if g.n <= MAX_CANON_N:
        g = canonical_graph(g)
        text = to_graph6(g)
    rec = SweepRecord(text, g.n, len(g.edges), connected=_is_connected(g))
    try:
        rec.grade = grade(g)
        rec.lf = lf_number(g, budget)
        rec.konig = rec.grade == rec.lf
        if check == "tree-algorithm":
            if not is_tree(g):
                rec.error = "not a tree"
                rec.flagged = True
                return rec
            cover = tree_lf_cover(g).result
            ok = verify_lf_cover(g, cover.forest, cover.s, rec.lf).ok and len(cover.forest.edges) == rec.grade
            rec.cover_s = cover.sorted_s
            rec.flagged = not ok
            return rec
        cover = find_lf_cover(g, budget)
        rec.cover_s = None if cover is None else cover.sorted_s
        if check == "konig_equivalence":
            rec.flagged = rec.konig != (cover is not None)
        else:
            rec.flagged = cover is None
    except KonigError as exc:
        rec.error = str(exc)
    return rec


@dataclass
class SweepResult:
    config: SweepConfig
    records: list[SweepRecord] = field(default_factory=list)

    @property
    def flagged(self) -> list[SweepRecord]:
        return [r for r in self.records if r.flagged]

    @property
    def errors(self) -> list[SweepRecord]:
        return [r for r in self.records if r.error and not r.flagged]

    @property
    def counterexamples(self) -> list[SweepRecord]:
        """Rows that refute the claim being checked."""
        cfg = self.config
        if cfg.check == "lf_coverable" and cfg.graph_class not in CONJECTURE_CLASSES:
            return []
        return self.flagged

    def summary(self) -> str:
        cfg = self.config
        source = f"class {cfg.graph_class}, n <= {cfg.max_n}" if cfg.graph_class else "graph6 stream"
        lines = [f"sweep: {source}, check {cfg.check}, {len(self.records)} graphs"]
        for label, conn in (("connected", True), ("disconnected", False)):
            rows = [r for r in self.records if r.connected == conn]
            bad = sum(r.flagged for r in rows)
            lines.append(f"  {label}: {len(rows)} graphs, {bad} flagged")
        what = {
            "lf_coverable": "non-coverable",
            "konig_equivalence": "equivalence violations",
            "tree-algorithm": "tree-algorithm failures",
        }[cfg.check]
        lines.append(f"  {what}: {len(self.flagged)}")
        for r in self.flagged:
            lines.append(f"    {r.graph6} n={r.n} grade={r.grade} lf={r.lf}")
        lines.append(f"  errors: {len(self.errors)}")
        lines.append(f"  counterexamples: {len(self.counterexamples)}")
        return "\n".join(lines)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_FIELDS)
        for r in self.records:
            w.writerow(r.csv_row())
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps([r.json_row() for r in self.records], indent=1) + "\n"


def sweep_inputs(cfg: SweepConfig) -> list[str]:
    if cfg.graph_class is not None:
        return [to_graph6(g) for g in class_members(cfg.graph_class, cfg.max_n)]
    out = []
    for k, line in enumerate(cfg.graph6_lines, 1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            from_graph6(line)
        except Exception as exc:
            raise InputError(str(exc), line=k) from exc
        out.append(line)
    return out


def run_sweep(cfg: SweepConfig) -> SweepResult:
    items = [(text, cfg.check, cfg.budget) for text in sweep_inputs(cfg)]
    if cfg.jobs == 1 or len(items) < 2:
        records = [sweep_one(it) for it in items]
    else:
        with Pool(cfg.jobs) as pool:
            records = list(pool.imap(sweep_one, items, chunksize=8))
    return SweepResult(cfg, records)


def sweep(graphs: Iterable[Graph], check: str = "lf_coverable", jobs: int = 1) -> SweepResult:
    """Convenience wrapper over explicit graphs."""
    lines = tuple(to_graph6(g) for g in graphs)
    return run_sweep(SweepConfig(graph6_lines=lines, check=check, jobs=jobs))


def record_dict(rec: SweepRecord) -> dict:
    return asdict(rec)
