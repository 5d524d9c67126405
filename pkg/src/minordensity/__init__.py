"""Exact critical densities of minor-closed graph classes."""

from .canon import are_isomorphic, canonical_form, canonical_graph, canonical_labeling
from .catalog import (CatalogEntry, MembershipResult, enumerate_B, gap, iter_B, least_B3_values,
                      lower_bound_t_connected, max_edges_path_forest, membership, min_Bt_bounds,
                      next_above, slice_B2_upto2, slice_Bprime_1_2, witness)
from .errors import BudgetExceeded, CapacityError, DomainError, Graph6Error
from .families import (ClosedForm, FamilySpec, build_bowtie_star, build_clique_star, build_fan_cliques,
                       build_fkm, build_gkm, build_k_plus_2a, build_path, build_star_of_plants,
                       build_witness_25_11, closed_form, extend, k_sum, overlap_copies)
from .graph6 import emit_graph6, parse_graph6
from .graph_core import (Graph, blocks, clique_number, connectivity, density, format_rational,
                         parse_rational, t_density)
from .minor_engine import (BalanceReport, MinorCertificate, MinorOp, Mode, apply_minor_op, balance_check,
                           densest_minor, in_ex_class, is_minor, validate_certificate)
from .plants import PlantCertificate, edge_plant_cover, edges_all_covered, plant_classify, plant_edge_bound
from .searchlab import CrosscheckReport, ScanReport, crosscheck, enumerate_graphs, scan_balanced

__version__ = "0.1.0"

__all__ = [
    "are_isomorphic",
    "canonical_form",
    "canonical_graph",
    "canonical_labeling",
    "CatalogEntry",
    "MembershipResult",
    "enumerate_B",
    "gap",
    "iter_B",
    "least_B3_values",
    "lower_bound_t_connected",
    "max_edges_path_forest",
    "membership",
    "min_Bt_bounds",
    "next_above",
    "slice_B2_upto2",
    "slice_Bprime_1_2",
    "witness",
    "BudgetExceeded",
    "CapacityError",
    "DomainError",
    "Graph6Error",
    "ClosedForm",
    "FamilySpec",
    "build_bowtie_star",
    "build_clique_star",
    "build_fan_cliques",
    "build_fkm",
    "build_gkm",
    "build_k_plus_2a",
    "build_path",
    "build_star_of_plants",
    "build_witness_25_11",
    "closed_form",
    "extend",
    "k_sum",
    "overlap_copies",
    "emit_graph6",
    "parse_graph6",
    "Graph",
    "blocks",
    "clique_number",
    "connectivity",
    "density",
    "format_rational",
    "parse_rational",
    "t_density",
    "BalanceReport",
    "MinorCertificate",
    "MinorOp",
    "Mode",
    "apply_minor_op",
    "balance_check",
    "densest_minor",
    "in_ex_class",
    "is_minor",
    "validate_certificate",
    "PlantCertificate",
    "edge_plant_cover",
    "edges_all_covered",
    "plant_classify",
    "plant_edge_bound",
    "CrosscheckReport",
    "ScanReport",
    "crosscheck",
    "enumerate_graphs",
    "scan_balanced",
]
