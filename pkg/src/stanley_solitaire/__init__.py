"""Exact play counting and exploration for Stanley solitaire."""

from .counting import (
    CacheStats,
    MemoCache,
    Play,
    PlayLimitExceeded,
    cache_stats,
    clear_cache,
    count_plays,
    enumerate_plays,
    sample_play,
)
from .formulas import (
    Partition,
    arrange,
    catalan,
    count_syt_bruteforce,
    fact_three_piles,
    is_231_avoiding,
    iter_all_partitions,
    iter_partitions,
    parse_partition,
    yfm,
)
from .guess import FittedForm, Template, evaluate_fitted, fit_template
from .positions import (
    IllegalMoveError,
    Move,
    ParseError,
    Position,
    apply_move,
    format_position,
    legal_moves,
    normalize,
    parse_position,
    total_candies,
)
from .reduced_words import (
    Permutation,
    count_reduced_words,
    count_reduced_words_bruteforce,
    longest_permutation,
    parse_permutation,
    stanley_witness,
)
from .verify import VerificationReport

__version__ = "0.1.0"
