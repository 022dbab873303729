from .lines import LineArrangement2D, line_arrangement_faces
from .monoids import (
    FaceMonoid,
    complex_coordinate_monoid,
    coordinate_arrangement_monoid,
    cyclic_group,
    gen_L,
    gen_R,
    gen_Z,
    gen_ZL,
    left_zero,
    semilattice_chain,
    z_to_zl_separation,
)
from .signs import COMPLEX, REAL, RationalComplex, SignVector, entry_product, face_product, sign_psi, sign_s
