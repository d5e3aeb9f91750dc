"""Exact solvers for zero forcing numbers, Grundy domination numbers, and
their exact-rank linear-algebra bounds on small simple graphs."""

from .graphs import (CapExceeded, Graph, MAX_N, ParseError, add_isolated,
                     bipartition, build_BL, encode_graph6, family,
                     graph_from_edges, graph_to_json_dict, parse_edge_list,
                     parse_graph6, parse_graph6_lines, random_bipartite_graph,
                     random_graph)
from .forcing import (ColorState, CrossCheckError, ForceRecord, Rule,
                      applicable_forces, closure, closure_random_order,
                      game_from_sequence, is_forcing_set, zero_forcing_number)
from .grundy import (GrundySequence, KIND_FOR_RULE, RULE_FOR_KIND, SeqKind,
                     grundy_number, grundy_total_restricted, is_valid_sequence,
                     sequence_from_game)
from .matrices import (IntMatrix, PatternKind, clique_cover_matrix,
                       embed_L_block, format_matrix, hstack, matrix_to_json_dict,
                       parse_matrix, pattern_member, rank_exact,
                       sample_pattern_matrix, sample_rank_bound, witness_matrix)
from .bounds import (BoundsReport, combinatorial_bounds, dominating_set,
                     edge_clique_cover, maximal_cliques, maximum_independent_set)
from .reports import (InvariantOutcome, ParameterReport, compute_all,
                      report_from_json_dict, report_to_json_dict, sweep,
                      validate_report, verify_invariants)

__version__ = "0.1.0"
