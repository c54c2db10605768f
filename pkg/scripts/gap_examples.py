"""Print grade, LF and cover status for the standard examples, plus the tree trace."""

from dataclasses import dataclass

from konig.cover import find_lf_cover
from konig.cutsets import grade
from konig.forests import lf_number
from konig.graphs import Graph, net_graph
from konig.trees import tree_lf_cover, worked_tree


@dataclass(frozen=True)
class Example:
    name: str
    n: int
    edges: tuple


EXAMPLES = (
    Example("bipartite A", 10, ((1, 6), (1, 7), (1, 9), (2, 7), (3, 7), (3, 8), (3, 10), (4, 8), (4, 9),
                                (5, 9), (5, 10))),
    Example("bipartite B", 10, ((1, 6), (1, 7), (1, 9), (2, 7), (3, 7), (3, 8), (3, 10), (4, 8), (4, 9),
                                (5, 9), (5, 10), (3, 9))),
    Example("11 vertices", 11, ((1, 2), (1, 3), (2, 4), (2, 5), (3, 6), (3, 7), (4, 5), (4, 8), (5, 9),
                                (6, 7), (6, 10), (7, 11))),
    Example("10 vertices", 10, ((1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (2, 3), (2, 4), (2, 5), (2, 7),
                                (3, 4), (3, 5), (3, 8), (4, 5), (4, 9), (5, 10))),
)


def describe(name: str, g: Graph):
    cover = find_lf_cover(g)
    s = "NONE" if cover is None else "{" + ", ".join(map(str, sorted(cover.s))) + "}"
    print(f"{name:<14} n={g.n:<3} grade={grade(g):<3} LF={lf_number(g):<3} S={s}")


def main():
    describe("net", net_graph())
    for ex in EXAMPLES:
        describe(ex.name, Graph.from_edges(ex.n, ex.edges))
    print()
    trace = tree_lf_cover(worked_tree())
    print(trace.log())
    f = trace.result.forest
    print("F:", " ".join(f"{i}-{j}" for i, j in sorted(f.edges)), " S:", sorted(trace.result.s))


if __name__ == "__main__":
    main()
