"""Bounded-delay enumeration of minimal dominating sets in P7- and
P8-free chordal graphs, with brute-force oracles, class recognizers,
instance generators and a satisfiability reduction gadget."""

__version__ = "0.1.0"

from .graph import (
    Graph,
    closed_neighborhood,
    connected_components,
    dominates,
    parse_graph,
    serialize_dimacs,
    serialize_plain,
)
from .recognition import (
    TreePoset,
    build_tree_poset,
    find_hole,
    find_induced_path,
    is_chordal,
    is_pk_free,
)
from .redundancy import Classification, RedBluePartition, classify, private_neighbors, red_blue
from .rnenum import (
    EnumerationContext,
    ExtensionInstance,
    P7Engine,
    component_instance,
    enumerate_rn,
    is_in_drn,
    p7_try_candidate,
    solve_iep,
    solve_mgp,
)
from .irext import IcepQuery, dir_p7, enumerate_dir, enumerate_dir_component, solve_icep
from .domenum import enumerate_dom, is_minimal_dominating
from .oracle import (
    brute_dir,
    brute_dir_component,
    brute_dom,
    brute_drn,
    brute_drn_member,
    brute_icep,
    brute_iep,
    find_irredundant_extension,
)
from .generators import SplitMix64, exhaustive_corpus, gen_chordal, gen_pk_free_chordal, split_stream
from .satreduction import Cnf3, GadgetMap, build_reduction, decide_and_extract, parse_dimacs_cnf

__all__ = [
    "Graph",
    "classify",
    "enumerate_rn",
    "enumerate_dir",
    "enumerate_dom",
    "is_minimal_dominating",
    "build_tree_poset",
    "is_chordal",
    "is_pk_free",
    "solve_iep",
    "solve_icep",
    "is_in_drn",
    "solve_mgp",
    "build_reduction",
    "decide_and_extract",
]
