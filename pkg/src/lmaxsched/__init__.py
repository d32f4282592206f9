"""Exact minimisation of maximum lateness on parallel machines.

The solver is pseudopolynomial. A layered dynamic program decides whether
every deadline can be met, and a bisection over deadline shifts turns that
decision into the optimal Lmax.
"""

from .binpack import BinPackInstance, Packing, brute_force_min_bins, min_bins, pack, to_scheduling_instance
from .errors import (
    InvariantError,
    ParseError,
    PreconditionError,
    RangeError,
    ResourceLimitError,
    SchedulingError,
)
from .feasibility import (
    DEFAULT_MEMORY_CAP_BITS,
    DpLayer,
    FeasibilityResult,
    dp_layers,
    feasible_general,
    feasible_two_machines,
    reconstruct_assignment,
)
from .instance import (
    Assignment,
    Instance,
    Job,
    LatenessReport,
    MachinePark,
    edd_order,
    evaluate_schedule,
    generate_random,
    shift_deadlines,
)
from .oracle import brute_force_all_orders_feasible, brute_force_feasible, brute_force_min_lmax
from .solver import OptimalResult, SearchBounds, min_lmax, probe, search_bounds
from .textio import format_binpack, format_instance, parse_binpack, parse_instance

__all__ = [
    "Assignment", "BinPackInstance", "DEFAULT_MEMORY_CAP_BITS", "DpLayer", "FeasibilityResult",
    "Instance", "InvariantError", "Job", "LatenessReport", "MachinePark", "OptimalResult",
    "Packing", "ParseError", "PreconditionError", "RangeError", "ResourceLimitError",
    "SchedulingError", "SearchBounds", "brute_force_all_orders_feasible", "brute_force_feasible",
    "brute_force_min_bins", "brute_force_min_lmax", "dp_layers", "edd_order", "evaluate_schedule",
    "feasible_general", "feasible_two_machines", "format_binpack", "format_instance",
    "generate_random", "min_bins", "min_lmax", "pack", "parse_binpack", "parse_instance", "probe",
    "reconstruct_assignment", "search_bounds", "shift_deadlines", "to_scheduling_instance",
]
