"""Exact computations on Kneser hypergraphs: chromatic invariants, colorability
defect, alternation numbers, rainbow complete multipartite witnesses, and
exhaustive checks of equivariant labelings."""
from __future__ import annotations

__version__ = "0.1.0"

from .bounds import (AltResult, BoundReport, DefectResult, SignedVector, alt_number, alt_pi,
                     bound_report, cd, max_alt_fixed_perm)
from .coloring import (UNBOUNDED, ChromaticResult, LocalResult, chromatic_number,
                       enumerate_proper_colorings, is_t_colorable, local_chromatic_number,
                       local_value)
from .errors import KneserLabError, ParseError, ResourceLimitError
from .fan import (AlternatingChain, Labeling, check_labeling, exhaustive_fan_check,
                  find_alternating_chain, is_comparable, sd_vertices)
from .hardness import independence_number, join_construction, verify_reduction
from .hypercore import (Coloring, Hypergraph, induced, is_proper, neighborhood_closure,
                        parse_hypergraph)
from .kneser import KneserStructure, build_kneser, complete_ksubsets, is_kneser_edge
from .rainbow import PartiteWitness, find_rainbow_witness, part_sizes, sweep_verify

__all__ = [
    "AltResult", "AlternatingChain", "BoundReport", "ChromaticResult", "Coloring",
    "DefectResult", "Hypergraph", "KneserLabError", "KneserStructure", "Labeling",
    "LocalResult", "ParseError", "PartiteWitness", "ResourceLimitError", "SignedVector",
    "UNBOUNDED", "alt_number", "alt_pi", "bound_report", "build_kneser", "cd",
    "check_labeling", "chromatic_number", "complete_ksubsets", "enumerate_proper_colorings",
    "exhaustive_fan_check", "find_alternating_chain", "find_rainbow_witness",
    "independence_number", "induced", "is_comparable", "is_kneser_edge", "is_proper",
    "is_t_colorable", "join_construction", "local_chromatic_number", "local_value",
    "max_alt_fixed_perm", "neighborhood_closure", "parse_hypergraph", "part_sizes",
    "sd_vertices", "sweep_verify", "verify_reduction",
]
