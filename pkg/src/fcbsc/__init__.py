"""Function-correcting codes over b-symbol read channels: requirement
matrices, exact minimal irregular-distance codes, exact-rational Plotkin-like
redundancy bounds for linear functions, and brute-force oracles."""
from .bounds import (
    BoundReport,
    ecc_bound,
    plotkin_b1,
    plotkin_bound_linear,
    plotkin_fcspc,
    plotkin_symbol_pair,
    sandwich_report,
)
from .bsymbol import ChannelParams, ReadVector, b_distance, b_weight, pi_b, total_b_weight
from .codesearch import Codebook, SearchResult, greedy_upper_bound, is_Bb_code, min_length_search, uniform_demand_matrix
from .gf import FieldSpec, Word, field_make, inv, mul, word_sub
from .linfunc import CosetPartition, LinearFunction, coset_partition, evaluate, kernel_weight_sum, linfunc_make
from .oracle import (
    Ambiguous,
    EncoderMap,
    OracleResult,
    decode_function,
    exact_optimal_redundancy,
    exhaustive_decode_check,
    is_valid_fcbsc,
)
from .reqmatrix import (
    RequirementMatrix,
    build_B1,
    build_B2,
    column_zero_count,
    columns_are_permutations,
    entry_sum,
    plus_clip,
)

__version__ = "0.1.0"
