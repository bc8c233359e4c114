"""Infinite binary words, their permutations, and the letter-doubling map."""

from .complexity import (NDecomposition, PermSetReport, decompose, rho, rho_tm_formula, tau,
                         tau_doubled_sturmian_formula, tau_doubled_tm_formula, tau_tm_formula)
from .doubling import (Collision, DeltaResult, GammaProfile, collision_census, delta, delta_L,
                       delta_M, delta_R, delta_image, delta_images, gamma_profile,
                       order_doubled_shifts, partition_even_odd, threshold_for)
from .enumeration import PermEnumerator, enumerator
from .errors import (CapExceededError, CensusViolation, CrossCheckError, DegenerateWordError,
                     DeltaDomainError, DisjointnessError, UnresolvedComparisonError,
                     WordPermError, WordSpecError)
from .kernels import BACKEND
from .parsing import parse_spec
from .perms import (SubPermutation, compare_shifts, complement_perm, complementary_pair_type,
                    decompose_type, extract_subperm, form_of, is_complementary_pair,
                    iterate_left, parse_perm, perm, restrict_left, restrict_middle,
                    restrict_right, shift_order)
from .specs import render
from .suites import SUITES, SuiteReport, verify_suite
from .words import (ClassTable, FactorSet, Word, build_word, class_table, factor_set,
                    recurrence_window, run_parameters, sturmian_run_parameter)

__version__ = "0.1.0"
