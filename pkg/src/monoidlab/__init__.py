"""Primitive sets of words and the submonoids they generate."""

from .automata import Dfa, GeneratorResult, intersect, minimal_generating_set, star_automaton
from .binroot import binary_roots, small_binary_root
from .errors import (AlphabetMismatch, DegeneratePair, EmptyWord, InvalidPair, IsRankOne, MonoidLabError,
                     NotASubmonoid, NotPrimitive, NotRankTwo, TooLarge)
from .factorization import (WordSet, code_witness, dependency_graph, factorizations, is_bifix_code, is_code,
                            is_member, is_prefix_code, is_suffix_code)
from .hull import combinatorial_rank, free_hull, graph_lemma_check
from .maximal import (cube_occurrence_check, intersect_primitive_pairs, is_k_maximal, is_primitive_pair,
                      primitive_root_rank2)
from .theta import (Involution, apply_theta, check_bridge_props, is_theta_invariant, is_theta_power,
                    is_theta_primitive, theta_root)
from .words import Alphabet, commutes, factors, is_primitive, primitive_word_root

__version__ = "0.1.0"
