"""Multispecies TASEP on a ring, multi-line queues, and sorted-word formulas."""

__version__ = "0.1.0"

from .words import (
    canonical_rotation,
    collapse_nontrailing,
    cyclic_shifts,
    enumerate_suffixes,
    merge_top,
    reverse_complement,
    sorted_word,
    type_of,
    words_of_type,
)
from .mlq import MLQ, LabelledMLQ, bracket, count_all, enumerate_mlqs, label, partition_function
from .chain import ChainSpec, Convention, StationaryTable, simulate, stationary_exact, stationary_mlq, transitions
from .formulas import (
    binomial_identity_sides,
    inhom_partition_value,
    inhom_sorted_probability,
    inhom_sorted_value,
    scaled_bracket_prediction,
    sorted_bracket_formula,
)
from .errors import BudgetExceeded, MtasepError, SolverError, StateCapExceeded
