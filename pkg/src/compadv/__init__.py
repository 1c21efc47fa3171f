"""Competitive optimality of Huffman and other prefix codes."""

from .coding import (HuffmanTree, TieBreak, all_optimal_profiles, expected_length,
                     huffman, huffman_profiles, huffman_trees, is_complete,
                     is_monotone, is_strongly_monotone, shannon_fano,
                     strong_monotonicity_witness)
from .competition import (CompetitionResult, Dominance, advantage, compete,
                          dominates)
from .core import (EXACT, FLOAT, BadTotal, CompAdvError, InvalidProfile,
                   NonPositiveProbability, NumericMode, SizeMismatch, Source,
                   TooLarge, entropy, is_dyadic, kraft_sum, make_source,
                   probability, source_from_json, source_to_json)
from .families import (BadEpsilon, FamilyInstance, N4Class, NotSorted, WrongSize,
                       classify_n4, classify_small, family_one_third,
                       family_sf_gap, fixture_four_codes, fixture_two_huffman,
                       n4_nonoptimal_fraction)
from .kraft import (BadSubset, KraftOrderViolated, KraftPartition, LeafScope,
                    NotOptimalProfile, PreconditionViolated,
                    construct_dominating_profile, exists_competitively_optimal_code,
                    huffman_kraft_partition, is_competitively_optimal,
                    kraft_completion, leaf_condition, leaf_triple_to_pair,
                    max_subset_advantage, subset_certificate)
from .oracle import (brute_force_is_optimal, complete_length_multisets,
                     enumerate_complete_profiles, max_advantage_over)
from .simulate import (ExperimentConfig, SimulationReport, read_report,
                       run_experiment, sample_dirichlet, sample_stream,
                       write_report)
from .verdict import (DominatingProfile, LeafTriple, Method, OptimalityVerdict,
                      Status, SubsetPair)

__version__ = "0.1.0"

__all__ = [
    "HuffmanTree", "TieBreak", "all_optimal_profiles", "expected_length",
    "huffman", "huffman_profiles", "huffman_trees", "is_complete",
    "is_monotone", "is_strongly_monotone", "shannon_fano",
    "strong_monotonicity_witness", "CompetitionResult", "Dominance",
    "advantage", "compete", "dominates", "EXACT", "FLOAT", "BadTotal",
    "CompAdvError", "InvalidProfile", "NonPositiveProbability",
    "NumericMode", "SizeMismatch", "Source", "TooLarge", "entropy",
    "is_dyadic", "kraft_sum", "make_source", "probability",
    "source_from_json", "source_to_json", "BadEpsilon", "FamilyInstance",
    "N4Class", "NotSorted", "WrongSize", "classify_n4", "classify_small",
    "family_one_third", "family_sf_gap", "fixture_four_codes",
    "fixture_two_huffman", "n4_nonoptimal_fraction", "BadSubset",
    "KraftOrderViolated", "KraftPartition", "LeafScope",
    "NotOptimalProfile", "PreconditionViolated",
    "construct_dominating_profile", "exists_competitively_optimal_code",
    "huffman_kraft_partition", "is_competitively_optimal",
    "kraft_completion", "leaf_condition", "leaf_triple_to_pair",
    "max_subset_advantage", "subset_certificate", "brute_force_is_optimal",
    "complete_length_multisets", "enumerate_complete_profiles",
    "max_advantage_over", "ExperimentConfig", "SimulationReport",
    "read_report", "run_experiment", "sample_dirichlet", "sample_stream",
    "write_report", "DominatingProfile", "LeafTriple", "Method",
    "OptimalityVerdict", "Status", "SubsetPair",
]
