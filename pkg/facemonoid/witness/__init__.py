from .family import (
    SweepResult,
    WitnessReport,
    b_n,
    expected_hasse_path,
    f_n_prime,
    family_index,
    hasse_is_path,
    proper_subsemigroup_sweep,
    quotient_iso_check,
    witness_report,
)
from .hasse import hasse_diagram, hasse_dot
