"""Partition of n-variable Boolean functions into equal classes with one affine member each."""

from .analysis import (
    OpTable,
    SubclassReport,
    cvt_offset_check,
    op_table,
    subclass_report,
    subclass_sizes,
    xor_invariance_check,
)
from .classifier import (
    ClassPartition,
    FixedPositions,
    Signature,
    affine_representative,
    base_point,
    changed_positions,
    class_members,
    classify,
    classify_brute,
    complement_partner,
    equivalent,
    fixed_partition,
    fixed_positions,
    generator_pattern,
    partitions_equal,
    recursive_partition,
    signature,
)
from .config import CapExceeded, RunConfig, ValidationError
from .truthtable import (
    AffineSpec,
    AnfPolynomial,
    TruthTable,
    affine_truth_table,
    complement,
    concat_high_low,
    concat_self,
    concat_with_complement,
    cvt,
    from_bits,
    from_hex,
    from_rule,
    hamming_distance,
    is_affine,
    is_linear,
    moebius,
    xor,
)

__version__ = "0.1.0"
