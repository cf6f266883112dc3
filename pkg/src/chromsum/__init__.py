"""Exact toolkit for the chromatic sum (minimum sum coloring) of graphs."""

from .bounds import (
    BoundOptions,
    BoundsReport,
    bounds_report,
    greedy_sum_coloring,
    kneser_star_peel,
    kneser_upper_formula,
    mis_peeling,
)
from .budget import Budget, BudgetExhausted
from .coloring import Coloring
from .dimacs import DimacsParseError, read_dimacs, write_dimacs
from .exact import (
    SumResult,
    chromatic_number,
    chromatic_sum_exact,
    clique_number,
    independence_number,
    max_independent_set,
    strength,
)
from .fractional import ChiFResult, fractional_chromatic_number, maximal_independent_sets, theorem2_check
from .graph import (
    Graph,
    circular_complete,
    complement,
    complete,
    cycle,
    empty,
    induced_delete,
    kneser,
    path,
    petersen,
    random_gnp,
)
from .homomorphism import (
    HomMap,
    ObstructionVerdict,
    Outcome,
    automorphism_orbits,
    find_homomorphism,
    is_vertex_transitive,
    obstruction_test,
)
from .kneser_lab import ConjectureRow, Verdict, conjecture_check, explore
from .lp import LinearProgram, lp_solve_exact

__version__ = "0.1.0"
