"""Binomial edge ideals, linear forests and LF-covers of small graphs."""

from .errors import InputError, KonigError, SizeError, TheoremViolation
from .graphs import Graph, from_graph6, parse_graph, to_graph6
from .cutsets import cut_sets, grade
from .forests import LinearForest, lf_number, max_linear_forest
from .cover import LFCover, find_lf_cover, is_konig, verify_lf_cover
from .trees import tree_lf_cover

__version__ = "0.1.0"
