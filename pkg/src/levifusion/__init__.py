"""levifusion: fusion of labeled Dynkin diagrams onto Levi conjugacy classes.

A pair of disjoint simple-root subsets (J1, J2) of a Dynkin diagram
determines one unipotent conjugacy class, and that class consists of
regular elements of a Levi subgroup L_J; this package computes the
Weyl-conjugacy class of J by four independent routes (the weight algorithm,
the classical partition pipeline, folding, type-E pattern rewriting) and
cross-validates them with exact-arithmetic oracles.
"""
from .diagram import (Chunk, DynkinDiagram, LabeledDiagram, apply_automorphism,
                      build_diagram, chunks, flip_labels, labeled_components,
                      labeled_diagram, levi_type, list_automorphisms,
                      parse_json, to_json)
from .errors import (CapabilityError, DetectionGapError, InputError,
                     InternalConsistencyError, LeviFusionError, StabilityError,
                     UnsupportedFamilyError)
from .fuse import METHODS, FusionResult, fuse
from .weight import (Selection, chunk_weight, max_selections, refine_selection,
                     weight_fuse, weight_fuse_outcomes)
from .partition import (PathDigraph, build_digraph, partition_fuse,
                        partition_to_J, peel_partition,
                        peel_partition_outcomes, very_even_reduce)
from .epattern import PatternMatch, apply_pattern, epattern_fuse, find_pattern
from .folding import Folding, fold_back, fold_fuse, foldings_for, unfold
from .conjugacy import (canonicalize, class_representatives, elementary_move,
                        is_conjugate, orbit_is_conjugate)
from .oracle import (ad_matrix, ad_rank_signature, classical_matrix,
                     jordan_partition, signature_fuse, signature_table)
from .rootsystem import RootSystem, build_root_system, structure_constants

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
