"""Exact major-index combinatorics on standard Young tableaux.

Generating functions via cancelled cyclotomic products, fake degrees for
wreath products and all groups G(m,d,n), deformed Gaussian multinomials,
maj-raising tableau mutations with their two ranked posets, and closed-form
nonzero-coefficient classifiers backed by brute-force oracles.
"""

from .shapes import (
    BlockShape,
    Partition,
    SkewShape,
    b_composition,
    b_statistic,
    block_coordinates,
    corners_and_notches,
    hook_lengths,
    hook_multiset,
    parse_blocks,
    parse_partition,
    partitions,
)
from .qpolys import (
    CycloProduct,
    NegativeExponent,
    NonzeroRemainder,
    QPoly,
    cyclotomic_polynomial,
    divide_exact,
    divide_exact_int,
    expand,
    q_binomial,
    q_factorial,
    q_int,
    q_multinomial,
    shape_predicates,
    substitute_power,
)
from .tableaux import (
    BoundExceeded,
    DNotDividingM,
    OrbitRep,
    ShapeNotOneRowBlocks,
    Tableau,
    canonical_orbit_tableaux,
    count_tableaux,
    descent_set,
    enumerate_tableaux,
    exceptional_set,
    from_rows,
    maxmaj_tableau,
    minmaj_tableau,
    parse_tableau,
    to_word,
    word_descent_set,
    word_inv,
)
from .genfun import (
    HProfile,
    block_maj_gf,
    coefficient_via_H,
    count_T,
    generalized_binomial,
    gmdn_fake_degree,
    mahonian_count,
    stanley,
    syt_count,
    wreath_fake_degree,
)
from .deformed import (
    CyclicComposition,
    composition_degree,
    deformed_binomial,
    deformed_multinomial,
    deformed_multinomial_rational,
    partial_sum_multinomial,
    partial_sum_multinomial_by_sum,
    q_mult_recurrence_check,
    rotate_right,
    rotation_class,
)
from .mutations import (
    ExceptionalTableau,
    Move,
    PhiBranchError,
    SytPoset,
    block_rule,
    block_rule_all,
    build_poset,
    inverse_block_rule,
    inverse_transpose_block_covers,
    inverse_transpose_block_moves,
    negative_rotations,
    phi,
    phi_move,
    positive_rotations,
    poset_ground,
    strong_cover_moves,
    strong_covers,
    verify_ranked,
    weak_covers,
)
from .zeros import (
    SupportPrediction,
    SupportReport,
    check_parity_unimodal,
    support_des,
    support_gmdn,
    support_type_A,
    support_wreath,
    verify_support,
)

__all__ = [name for name in dir() if not name.startswith("_")]
