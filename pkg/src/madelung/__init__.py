"""Madelung constants of the N-dimensional simple cubic lattice.

M_N(s) = sum' (-1)^(i_1+...+i_N) / (i_1^2 + ... + i_N^2)^s over Z^N without
the origin, evaluated through rapidly converging Bessel-function series and
continued analytically to all real s.
"""

from .closed_forms import (
    benson_mackenzie_m3,
    closed_form,
    critical_value,
    hautot_m3,
    neighbor_limit,
    tyagi_m3,
    zucker,
)
from .core import (
    ConvergenceTrace,
    MadelungQuery,
    MadelungValue,
    coefficient_direct,
    coefficient_half_integral,
    coefficient_recursive,
    convergence_trace,
    heuristic_m_max,
    madelung,
    madelung_direct,
    madelung_ladder,
    madelung_recursive,
)
from .cusp import QSeries, cusp_coefficients, e12, m12_cusp
from .errors import BoundsError, ConvergenceError, DomainError, MadelungError, PoleError
from .special import bessel_k, beta, eta, gamma, reciprocal_gamma, zeta
from .squares import r_even_squares, r_odd_squares, r_squares

__version__ = "0.1.0"
