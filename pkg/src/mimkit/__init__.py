"""Mim-width toolkit: graphs, exact widths, width-aware transforms, certified
decompositions, witness generators and a bounded/unbounded classifier."""

from .catalog import graph
from .classifier import Classification, classify_kr, classify_pair, classify_rp1
from .decomposition import BranchDecomposition, cutmim, exact_mimw, mimw_of_decomposition, solve_mimw
from .errors import MimkitError
from .graph import Graph
from .iso import contains_induced, enumerate_graphs

__version__ = "0.1.0"

__all__ = [
    "BranchDecomposition",
    "Classification",
    "Graph",
    "MimkitError",
    "classify_kr",
    "classify_pair",
    "classify_rp1",
    "contains_induced",
    "cutmim",
    "enumerate_graphs",
    "exact_mimw",
    "graph",
    "mimw_of_decomposition",
    "solve_mimw",
]
