"""WRP invariant of alternating knots and links.

Typical use::

    >>> from wrpinv import wrp_of_pd
    >>> print(wrp_of_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)"))
    {w^6, 2w^3 + 3w^2}
"""

from .cycles import CycleBudgetExceeded, cycle_sum, oracle_cycle_sum, simple_directed_cycles
from .diagram import (
    Color,
    Diagram,
    DiagramError,
    SplitDiagramError,
    build_diagram,
    checkerboard,
    faces,
    is_alternating,
    mirror,
    validate_reduced,
)
from .flype import apply_flype, check_flype_invariance, find_flype_sites, isomorphic
from .invariant import WRPPair, make_pair, mirror_wrp, parse_wrp, wrp_equal, wrp_of_diagram, wrp_of_pd
from .pdcode import (
    KnotName,
    PDCode,
    PDError,
    TableError,
    load_table,
    load_table_rows,
    mirror_pd,
    parse_pd,
    pd_torus2,
    pd_twist,
    relabel_pd,
    serialize_pd,
)
from .poly import Poly2, monomial, parse_poly, render, swap_vars
from .table import collision_report, compute_table, format_table
from .tait import build_tait, consolidate, double

__version__ = "0.1.0"
