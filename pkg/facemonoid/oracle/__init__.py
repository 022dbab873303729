from .homs import HomomorphismMap, assignment_order, enumerate_homs, is_homomorphism, naive_homs
from .separation import (
    PowerEmbedding,
    SeparationResult,
    embed_in_power,
    greedy_separating_subfamily,
    in_qv_oracle,
    separating_family,
)
