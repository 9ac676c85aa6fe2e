"""Exact linear algebra for braid groups acting on euclidean simplices through edge norms."""

from .disc import Edge, EdgePairClass, classify_pair, edge_rank, edges, num_edges, rank_edge
from .errors import BraidSimplexError, InternalAssertion
from .garside import DualPositiveWord, dual_length, is_normal_pair, max_q_degree, normal_form, qdegree_experiment
from .laurent import LaurentQT, ONE, Q, T, ZERO
from .matrix import EdgeMatrix
from .noncrossing import (
    NCPartition,
    Permutation,
    catalan,
    complement,
    enumerate_nc,
    five_permutations,
    from_permutation,
    is_noncrossing,
    is_noncrossing_permutation,
    left_complement,
    nc_join,
    nc_leq,
    nc_meet,
    right_complement,
    to_permutation,
)
from .rep import (
    LKB,
    PERMUTATION,
    SIMPLICIAL,
    BraidWord,
    DualGen,
    DualSimple,
    RepMode,
    Token,
    act_on_norms,
    act_word_on_norms,
    dual_simple_by_generators,
    dual_simple_left_form,
    dual_simple_matrix,
    evaluate_word,
    generator_matrix,
    lkb_generator_matrix,
    permutation_matrix,
    random_word,
    simplicial_generator_matrix,
)
from .rescale import R, RescalingSpec, TreeEdge, build_tree, random_tree, rescale_points, rescaling_matrix
from .simplex import EdgeNormVector, PointConfig, embed, gram_from_norms, is_nondegenerate, norms_from_points
from .verify import Report, verify_relations, verify_theorem_a, verify_theorem_b

__version__ = "0.1.0"
