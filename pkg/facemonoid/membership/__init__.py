from .certificates import separating_homs_cc, separating_homs_cc_prime
from .deciders import CheckResult, MembershipVerdict, check_cc, check_cc_prime, in_qv_L, in_qv_ZL, l_related_pairs
from .zigzag import COMPLEX, DOWN, REAL, UP, ZigZagWitness, s_ab, s_ab_prime, witness_problems
