"""Partition counts p(n), nu(n) (no part 1) and gamma(n) (largest part repeated), with verification tools."""
from nupart.enumeration import (
    ContradictionError,
    GroundStateDecomposition,
    Partition,
    classify_ground_states,
    conjugate,
    enumerate_partitions,
    epsilon_series,
    guy_counts,
    is_ground_state,
    is_non_unitary,
)
from nupart.reports import VerificationReport, Witness
from nupart.seqcore import (
    SeqTable,
    TableError,
    compute_p_table,
    derive_gamma,
    derive_nu,
    finite_difference,
    mod_floor,
    sigma0,
)

__version__ = "0.1.0"
