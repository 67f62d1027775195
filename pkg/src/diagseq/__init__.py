"""Diagonal sequences of integer partitions.

The diagonal sequence of a partition counts the cells on each anti-diagonal
of its Young diagram.  This package computes it, describes the partitions
sharing one (their majorization extremes, their exact number, the members
themselves) and checks all of that against brute force.
"""

from .counting import (
    BVector,
    VnMultiset,
    b_vector,
    class_of_size,
    count_class,
    count_distinct_classes,
    count_stratum,
    kvn_count,
    stratum_counts,
    vn_count,
)
from .enumeration import (
    ClassTable,
    classes_oracle,
    enumerate_class,
    enumerate_diagonals,
    enumerate_kvn,
    enumerate_partitions,
    enumerate_stratum,
    enumerate_vn,
)
from .errors import (
    BadShape,
    BoundExceeded,
    CapExceeded,
    DiagseqError,
    EmptyStratum,
    InvalidPeel,
    NonPositivePart,
    NotSorted,
    NotStrict,
    WeightMismatch,
)
from .extremal import (
    A1Set,
    a1_set,
    alpha_bar,
    alpha_under,
    majorizes,
    peel_first_row,
    s_from_strict,
    stratum_max,
    stratum_min,
)
from .partition import (
    DiagonalSequence,
    Partition,
    SProfile,
    conjugate,
    diagonal_moment,
    diagonal_sequence,
    from_s_profile,
    make_partition,
    sum_squares_pair,
    to_s_profile,
    v_sequence,
    validate_diagonal,
    weight,
)

__version__ = "0.1.0"
