"""Combinatorics of the set A of naturals whose binary support leaves a hole in every block B_k.

The set is a J-set of (Z, +) that is not piecewise syndetic.  This package
builds explicit witnesses for both facts, checks largeness notions on finite
windows, computes the density of A exactly, and carries the p-adic valuation
identities used for the additive groups of Q_p and its valuation ring.
"""

from .bignat import BigNatural, BlockIndex, block, count_A, from_support, full_block_witness, is_member_A, support
from .constructive import (
    BlockerCertificate,
    PigeonholeCertificate,
    construct_blocker,
    jwitness_for_A,
    jwitness_for_A_adaptive,
    pigeonhole_select,
    refute_piecewise_syndetic,
    shift_into_A,
)
from .density import ConvergenceRow, convergence_report, partial_product, tail_bound
from .errors import BudgetExceeded, PrefixTooShort, WindowError
from .jset import INTEGERS, Group, JWitness, SearchBounds, SequencePrefix, brute_witness_search, chi, shift_witness, verify_witness
from .largeness import LargenessVerdict, WindowSet, cover_with_translates, pws_check, syndetic_bound, thick_check
from .padic import PAdicRational, ball_difference_valuation, low_valuation_of_pair, ultrametric_check, val

__version__ = "0.1.0"
