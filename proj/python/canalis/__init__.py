"""Exact counts, probabilities and sampling for canalizing Boolean functions.

Counts are Python ints, probabilities are fractions.Fraction. Biases may be
given as "a/b" or decimal strings, ints, or Fractions. Truth tables are hex
strings, most significant digit first, where bit e holds f at the input whose
variable i equals bit i of e.
"""

from ._canalis import (
    RangeError,
    RejectionLimitExceeded,
    UsageError,
    census,
    classify,
    count_both_ways,
    count_canalizing,
    count_exact_k,
    deep_count_n5,
    generate,
    is_canalizing,
    prob_both_ways,
    prob_breakdown,
    prob_canalizing,
    prob_canalizing_on_block,
    prob_exactly_k,
    verify,
)

__all__ = [
    "RangeError",
    "RejectionLimitExceeded",
    "UsageError",
    "census",
    "classify",
    "count_both_ways",
    "count_canalizing",
    "count_exact_k",
    "deep_count_n5",
    "generate",
    "is_canalizing",
    "prob_both_ways",
    "prob_breakdown",
    "prob_canalizing",
    "prob_canalizing_on_block",
    "prob_exactly_k",
    "verify",
]
