"""Cycle spectra of bipartite graphs with an ordered bipartition.

The X side plays the role of hypergraph vertices and the Y side the role of
hyperedges; a cycle "based on" an X-subset A visits exactly A on the X side.
The library decides based-cycle existence, the super-cyclicity hierarchy and
its necessary neighborhood condition, classifies would-be minimal
counterexamples, and reruns the supporting theorems exhaustively at desk
scale.
"""

from .bigraph import (Bigraph, Hypergraph, InducedSubgraph, VertexSet,
                      hypergraph_of, incidence_graph,
                      induced_with_superneighborhood, is_two_connected,
                      reduce_to_superneighborhood, super_neighborhood)
from .classify import (find_critical_core, is_critical, is_saturated,
                       is_y_minimal)
from .condition import (ConditionReport, DegreeThresholds, check_condition,
                        degree_hypothesis, min_deficiency)
from .cycles import (BaseCycle, find_based_cycle, is_k_cyclic,
                     is_super_cyclic, is_super_pancyclic,
                     longest_cycle_length)
from .errors import (CapacityError, FormatError, InputError,
                     PreconditionError, SupercyclicError)
from .formats import (iter_records, parse_bigraph, parse_graph,
                      parse_hypergraph, serialize, write_stream)
from .generators import (complete_bipartite, construct_g3,
                         enumerate_bigraphs, random_bigraph)
from .reports import CheckReport
from .structure import (CrossingReport, Fan, SuccessorMaps,
                        crossing_bound_holds, crossings, max_fan,
                        successor_maps)
from .verifier import (HuntConfig, VerificationReport, Violation,
                       audit_critical_properties, hunt_counterexample,
                       verify_degree_theorem, verify_k_cyclic)
from .verifier_checkpoint import CheckpointConfig

__version__ = "0.1.0"

__all__ = [
    "BaseCycle", "Bigraph", "CapacityError", "CheckReport",
    "CheckpointConfig", "ConditionReport", "CrossingReport",
    "DegreeThresholds", "Fan", "FormatError", "HuntConfig", "Hypergraph",
    "InducedSubgraph", "InputError", "PreconditionError", "SuccessorMaps",
    "SupercyclicError", "VerificationReport", "VertexSet", "Violation",
    "audit_critical_properties", "check_condition", "complete_bipartite",
    "construct_g3", "crossing_bound_holds", "crossings", "degree_hypothesis",
    "enumerate_bigraphs", "find_based_cycle", "find_critical_core",
    "hunt_counterexample", "hypergraph_of", "incidence_graph",
    "induced_with_superneighborhood", "is_critical", "is_k_cyclic",
    "is_saturated", "is_super_cyclic", "is_super_pancyclic",
    "is_two_connected", "is_y_minimal", "iter_records",
    "longest_cycle_length", "max_fan", "min_deficiency", "parse_bigraph",
    "parse_graph", "parse_hypergraph", "random_bigraph",
    "reduce_to_superneighborhood", "serialize", "successor_maps",
    "super_neighborhood", "verify_degree_theorem", "verify_k_cyclic",
    "write_stream",
]
