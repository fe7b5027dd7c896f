"""cross5: 5-coloring of graphs with few crossings, exact crossing numbers
of small graphs, and machine-checkable drawing/coloring/immersion
certificates."""

from .coloring import (ColorOutcome, ColorPolicy, Coloring, Obstruction,
                       extend_coloring, find_coloring_exhaustive, five_color,
                       kempe_components, kempe_swap, verify_coloring)
from .drawings import (Drawing, InvalidDrawingError, Planarization,
                       ValidationResult, canonical_key, canonicalize,
                       crossed_edges_at, crossing_count, drawing_from_json,
                       drawing_to_json, drawings_equal, eliminate_trivial,
                       induced_drawing, is_good, is_realizable, planarize,
                       trivial_crossings, validate_drawing)
from .graphs import (Graph, GraphFormatError, are_isomorphic, clique_number,
                     complete_bipartite, complete_graph, complete_multipartite,
                     construct_named, cycle_graph, from_edge_list_text,
                     from_graph6, graph_join, min_degree_vertex, parse_graph,
                     serialize_graph, to_edge_list_text, to_graph6,
                     vertex_connectivity_at_least)
from .immersions import (ImmersionCertificate, explain_immersion,
                         identity_immersion, immersion_from_json_dict,
                         immersion_image_subgraph, immersion_to_json_dict,
                         verify_immersion)
from .planarity import (KuratowskiWitness, euler_lower_bound, find_kuratowski,
                        is_planar, verify_kuratowski)
from .solver import (DEFAULT_BUDGET, BudgetExceededError, DecideOutcome,
                     SolverResult, crossing_number, crossing_number_exhaustive,
                     decide_crossing_number, enumerate_good_drawings)

__version__ = "0.1.0"
