from .congruence import CongruenceCheck, congruence_closure, is_congruence, kernel, quotient
from .core import (
    ElementPair,
    FiniteSemigroup,
    Partition,
    associativity_violations,
    direct_power,
    direct_product,
    from_function,
    validate,
)
from .errors import (
    BudgetExceededError,
    ConstructionError,
    FaceMonoidError,
    InvalidSemigroupError,
    NotACongruenceError,
    NotALeftRegularBandError,
    NotAMemberError,
    NotClosedError,
    QISyntaxError,
    SignVectorError,
    TableFormatError,
)
from .free import free_lrb
from .green import (
    LRBViolation,
    comparability_graph,
    connected_components,
    green_L_classes,
    is_left_regular_band,
    is_left_zero,
    is_semilattice,
    least_left_zero_quotient,
    lrb_L_related,
    r_order,
    r_order_matrix,
    require_lrb,
)
from .isomorphism import is_isomorphic
from .subsemigroups import (
    all_subsemigroups,
    is_closed,
    maximal_subsemigroups,
    minimal_generating_set,
    restrict,
    subsemigroup_closure,
)
from .table_io import read_table, write_table
