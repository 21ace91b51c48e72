"""Exact toolkit for acyclic and complete-acyclic colorings of digraphs.

Computes dichromatic and diachromatic numbers with verified witness
colorings, generates circulant and tournament families with known values,
grows digraphs by path attachment, and emits certified digraphs realizing
prescribed (dichromatic, diachromatic) pairs.
"""

from .core import (ASYMMETRIC, MIXED, SYMMETRIC, Digraph, TournamentCheck,
                   arcs_between, build, classify_symmetry, delete_vertex,
                   digraph_from_json, digraph_to_json, format_edge_list,
                   has_directed_cycle, parse_edge_list, tournament_predicates)
from .coloring import (Coloring, class_of, coloring_from_json,
                       coloring_to_json, is_acyclic_coloring,
                       is_complete_coloring)
from .families import (CirculantSpec, CriticalTournamentParams,
                       asymmetric_threshold, circulant, complete_symmetric,
                       critical_tournament, critical_tournament_dac,
                       full_circulant_tournament, transitive_tournament)
from .construct import attach_path, mimicry_violations, path_vertex
from .solvers import (Budget, BudgetExhausted, InterpolationGap, SolveResult,
                      SolveStats, dac_upper_bound, diachromatic_number,
                      dichromatic_number, exists_acyclic_k_coloring,
                      exists_complete_acyclic_k_coloring,
                      interpolation_spectrum, is_vertex_critical,
                      singleton_optimal_coloring)
from .realize import (Certificate, CertificateCheck, ProbeReport,
                      certificate_from_json, certificate_to_json, certify,
                      conjecture_probe, realize_asymmetric,
                      realize_nonsymmetric, verify_certificate)

__version__ = "0.1.0"
