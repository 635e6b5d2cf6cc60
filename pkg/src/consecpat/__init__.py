"""Counting and bounding permutations that avoid a consecutive pattern."""

from .bounds import (bound_report, block_upper, gap_corollary, lll_lower, mk_upper,
                     suen_finite, suen_parameters, suen_upper)
from .enumeration import (CapacityError, CountTable, count_bruteforce, count_dp,
                          mc_avoidance, rho_estimates, scan_patterns)
from .kernels import BACKEND
from .overlap import (classify, enumerate_overlap_sets, forced_suffix, joint_count,
                      overlap_profile, verify_monotone_lemma)
from .perm import (Pattern, Permutation, complement, occurrences, parse_pattern,
                   random_pattern, reverse, standardize)
from .series import SeriesSpec, eval_series, monotone_lb_quadratic, smallest_root
from .stats import mk_census, sample_overlap_distribution

__version__ = "0.1.0"
