"""Dominating closed and open neighborhood sequences on small graphs.

The main entry points are re-exported here::

    >>> from nbseq import Graph, profile, recognize_uniform_structural
    >>> g = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    >>> profile(g).gamma_t
    3
    >>> recognize_uniform_structural(Graph(3)).outcome()
    ('uniform', 3)
"""
from .generators import (
    Complete,
    GenSpec,
    TwoUniform,
    all_labeled_graphs,
    gen_complete,
    gen_complete_bipartite,
    gen_complete_multipartite,
    gen_cycle,
    gen_empty,
    gen_friendship_complement,
    gen_k_uniform,
    gen_path,
    gen_two_uniform,
    random_genspec,
)
from .graph import (
    Graph,
    GraphError,
    add_true_twin,
    closed_neighborhood,
    complement,
    connected_components,
    delete_closed_neighborhood,
    delete_vertices,
    disjoint_union,
    induced_subgraph,
    join,
    open_neighborhood,
    true_twin_classes,
)
from .io import ParseError, decode_edgelist, decode_graph6, encode_edgelist, encode_graph6, parse_graph, write_graph
from .sequences import (
    CnsSolution,
    DominationProfile,
    OnsSolution,
    SolverCapError,
    cns_length_set,
    domination_number,
    extend_to_dominating_cns,
    grundy_domination_number,
    is_cns,
    is_dominating,
    is_ons,
    is_total_dominating,
    ons_length_sets,
    profile,
)
from .uniformity import (
    UniformityReport,
    classify_open_uniform,
    classify_total_uniform,
    is_2_uniform_structural,
    is_complete,
    is_complete_bipartite,
    is_complete_multipartite,
    is_k_uniform_bruteforce,
    recognize_uniform_structural,
    reduce_true_twins,
    report_from_json,
    residual_uniformity_check,
    verify_report,
)

__version__ = "0.1.0"
