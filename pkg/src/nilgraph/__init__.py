"""Finite rings, skew PBW extensions, and their nilpotent graphs."""

from .errors import (CapExceeded, ConfigError, DegreeCapExceeded, PolyParseError,
                     PreconditionUnverified)
from .graphs import (GraphMetrics, NilGraph, SamplerParams, build_nilpotent_graph,
                     build_zero_divisor_graph, distance, export_graph, graph_metrics,
                     sample_spbw_graph)
from .harness import (CorpusEntry, Expected, SuiteConfig, VerificationReport,
                      builtin_corpus, run_suite, verify_base_ring_theorems,
                      verify_extension_theorems, verify_nilpotency_criterion)
from .maps import (CompatReport, DerivationMap, RingMap, compatibility_report,
                   frobenius_map, identity_map, swap_map, validate_derivation,
                   validate_endo, zero_derivation)
from .polytext import format_poly, parse_poly
from .rings import (ElementSets, FiniteRing, PropertyReport, RadicalReport,
                    element_sets, enumerate_ideals, find_isomorphism,
                    make_matrix_ring, make_product, make_quotient_poly, make_zmod,
                    minimal_primes, radicals, ring_properties)
from .skew import (LeadingData, NilpotencyProbe, SkewPoly, SPBWSpec, is_nilpotent_coeff,
                   is_nilpotent_direct, leading_data, monomial_times_scalar, multiply,
                   nil_adjacent, power, validate_spec)

__version__ = "0.1.0"

__all__ = [
    "CapExceeded", "CompatReport", "ConfigError", "CorpusEntry", "DegreeCapExceeded",
    "DerivationMap", "ElementSets", "Expected", "FiniteRing", "GraphMetrics",
    "LeadingData", "NilGraph", "NilpotencyProbe", "PolyParseError", "PreconditionUnverified",
    "PropertyReport", "RadicalReport", "RingMap", "SamplerParams", "SkewPoly", "SPBWSpec",
    "SuiteConfig", "VerificationReport", "build_nilpotent_graph", "build_zero_divisor_graph",
    "builtin_corpus", "compatibility_report", "distance", "element_sets", "enumerate_ideals",
    "export_graph", "find_isomorphism", "format_poly", "frobenius_map", "graph_metrics",
    "identity_map", "is_nilpotent_coeff", "is_nilpotent_direct", "leading_data",
    "make_matrix_ring", "make_product", "make_quotient_poly", "make_zmod", "minimal_primes",
    "monomial_times_scalar", "multiply", "nil_adjacent", "parse_poly", "power", "radicals",
    "ring_properties", "run_suite", "sample_spbw_graph", "swap_map", "validate_derivation",
    "validate_endo", "validate_spec", "verify_base_ring_theorems",
    "verify_extension_theorems", "verify_nilpotency_criterion", "zero_derivation",
]
