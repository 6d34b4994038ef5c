"""Bouncing Tower toolkit: rules, recursive solvers, exhaustive oracle, Disk Pile."""

from .kernels import BACKEND
from .rules import (
    BOUNCING,
    HANOI,
    Configuration,
    EmptyPegError,
    IllegalMoveError,
    InsertionError,
    Move,
    ParityContext,
    RuleSet,
    apply_move,
    fixed_disk_parity,
    insertion_depth,
    inverse_move,
    legal_moves,
    removal_order,
    removal_rank,
)
from .solver import (
    CountFunction,
    SolverVariant,
    count_closed_form,
    count_recurrence,
    move_xyz,
    solve,
    solve_alternative_010,
    solve_hanoi,
)

__version__ = "0.1.0"
