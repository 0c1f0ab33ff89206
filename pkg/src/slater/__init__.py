"""Degree-sequence lower bounds on domination parameters, exact domination
numbers, and desk-scale verification of the bounds that relate them."""

from .domination import (
    DominationResult,
    Variant,
    brute_force_domination,
    domination_number,
    tree_connected_domination,
    verify_dominating,
)
from .formats import from_edge_list, from_graph6, read_graph, to_edge_list, to_graph6
from .graph import Graph, InputError, degree_sequence, induced_subgraph
from .greedy import DecisionOutcome, Outcome, check_nw_inequality, decide_slater_gap, greedy_order
from .hereditary import hereditary_equality_bruteforce, is_forbidden_free
from .slater import SlaterReport, connected_order_sum, slater_number, slater_report, total_slater_number
from .sparse import (
    MembershipVerdict,
    OuterplanarEmbedding,
    RationalPair,
    certify_outerplanar,
    is_member,
    max_edge_excess,
    parse_rational,
)

__version__ = "0.1.0"

__all__ = [
    "DecisionOutcome",
    "DominationResult",
    "Graph",
    "InputError",
    "MembershipVerdict",
    "Outcome",
    "OuterplanarEmbedding",
    "RationalPair",
    "SlaterReport",
    "Variant",
    "brute_force_domination",
    "certify_outerplanar",
    "check_nw_inequality",
    "connected_order_sum",
    "decide_slater_gap",
    "degree_sequence",
    "domination_number",
    "from_edge_list",
    "from_graph6",
    "greedy_order",
    "hereditary_equality_bruteforce",
    "induced_subgraph",
    "is_forbidden_free",
    "is_member",
    "max_edge_excess",
    "parse_rational",
    "read_graph",
    "slater_number",
    "slater_report",
    "to_edge_list",
    "to_graph6",
    "total_slater_number",
    "tree_connected_domination",
    "verify_dominating",
]
