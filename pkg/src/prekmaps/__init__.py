"""Elementary-symmetric-polynomial maps on integer partitions."""

from .census import CensusRecord, divisor_witnesses, pre2_exact, pre2_lower_bound, pre2_sweep
from .collisions import (
    CollisionClass,
    InjectivityReport,
    SweepCache,
    cross_length_check,
    duality_check,
    find_collisions,
    group_by_image,
    image_key,
    sweep,
)
from .families import (
    CounterexamplePair,
    PQFamilyParams,
    gen_alpha_beta,
    gen_coprime_triple,
    gen_pq_family,
    gen_scaled_triple,
    validate_pair,
)
from .partitions import (
    Partition,
    divisor_pairs,
    enumerate_partitions,
    enumerate_partitions_with_length,
    make_partition,
    tau,
)
from .prek import PrekResult, complement_image, e2_sum, pre_k, product_of_parts
from .verdict import Verdict

__version__ = "0.1.0"
