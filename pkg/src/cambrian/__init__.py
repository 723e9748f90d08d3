"""Coxeter groups, Cambrian semilattices and a finite-lattice analyzer for
checking that closed Cambrian intervals are trim."""

from .arith import ArithmeticPrecisionError
from .coxeter import (
    CoxeterMatrixError,
    CoxeterSystem,
    Element,
    build_system,
    canonicalize,
    identity,
    inverse,
    is_left_descent,
    multiply,
    parabolic_subsystem,
)
from .lattice import FiniteLattice, LatticeError, PropertyReport, Verdict, analyze
from .sortable import (
    CambrianInterval,
    CoxeterElement,
    NotSortableError,
    cambrian_interval,
    coxeter_element,
    is_sortable,
    sorting_word,
)
from .weak import NoJoinWithinCap, order_ideal, weak_join, weak_le, weak_meet

__version__ = "0.1.0"
