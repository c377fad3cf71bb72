"""Faithful 2x2 matrix representations, used as a brute-force cross-check.

Every closed-form identity in the package can be checked by exponentiating
literal 2x2 matrices and multiplying them out.  The code here is deliberately
independent of the composition formulas it verifies: it shares no numeric
kernels with them, only the value types.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .algebra import AlgebraKind, ExponentParams, GroupElement
from .errors import NonFiniteInput

__all__ = [
    "Mat2",
    "GeneratorSet",
    "generators_for",
    "mat_exp",
    "element_matrix",
    "exponent_matrix",
]

# 2x2 complex ndarray; kept as a plain alias rather than a wrapper class.
Mat2 = np.ndarray

_SERIES_S_THRESHOLD = 1e-4


@dataclass(frozen=True, eq=False)
class GeneratorSet:
    """Matrix carriers of the raising, Cartan and lowering generators."""

    m_plus: Mat2
    m_c: Mat2
    m_minus: Mat2


def generators_for(algebra: AlgebraKind) -> GeneratorSet:
    """Traceless 2x2 generator triple for the given algebra.

    The commutation relations are re-checked on every build; a failure here
    is a defect in the tables below, not a runtime condition.
    """
    raising = np.array([[0, 1], [0, 0]], dtype=complex)
    lowering = np.array([[0, 0], [1, 0]], dtype=complex)
    cartan = np.array([[0.5, 0], [0, -0.5]], dtype=complex)
    if algebra is AlgebraKind.SU2:
        gens = GeneratorSet(raising, cartan, lowering)
    elif algebra is AlgebraKind.SU11:
        gens = GeneratorSet(raising, cartan, -lowering)
    else:
        # so(2,1) is the su(1,1) triple rescaled by (a, b) with a*a = i*b/2
        # and b = i, hence a = i/sqrt(2).
        a = 1j / math.sqrt(2.0)
        gens = GeneratorSet(a * raising, 1j * cartan, a * (-lowering))
    _assert_commutators(algebra, gens)
    return gens


def _assert_commutators(algebra: AlgebraKind, gens: GeneratorSet) -> None:
    def comm(x: Mat2, y: Mat2) -> Mat2:
        return x @ y - y @ x

    eps, delta = algebra.epsilon, algebra.delta
    assert np.allclose(comm(gens.m_minus, gens.m_plus), 2 * eps * gens.m_c, atol=1e-15)
    assert np.allclose(comm(gens.m_c, gens.m_plus), delta * gens.m_plus, atol=1e-15)
    assert np.allclose(comm(gens.m_c, gens.m_minus), -delta * gens.m_minus, atol=1e-15)
    for m in (gens.m_plus, gens.m_c, gens.m_minus):
        assert abs(np.trace(m)) <= 1e-15


def mat_exp(m: Mat2) -> Mat2:
    """Exponential of a 2x2 complex matrix in closed form.

    Splits off the trace and uses the Cayley-Hamilton identity for the
    traceless part m0: m0 @ m0 = s^2 I with s^2 = -det(m0), so
    exp(m0) = cosh(s) I + (sinh(s)/s) m0.  Both coefficients are even in s,
    which makes the branch of the square root irrelevant; a short even series
    covers the region where sinh(s)/s would lose digits.
    """
    m = np.asarray(m, dtype=complex)
    if not np.isfinite(m).all():
        raise NonFiniteInput("matrix entries must be finite")
    half_trace = 0.5 * (m[0, 0] + m[1, 1])
    m0 = m - half_trace * np.eye(2)
    s_sq = complex(-np.linalg.det(m0))
    s = cmath.sqrt(s_sq)
    if abs(s) < _SERIES_S_THRESHOLD:
        cosh_s = sum(s_sq**k / math.factorial(2 * k) for k in range(6))
        sinhc_s = sum(s_sq**k / math.factorial(2 * k + 1) for k in range(6))
    else:
        cosh_s = cmath.cosh(s)
        sinhc_s = cmath.sinh(s) / s
    return cmath.exp(half_trace) * (cosh_s * np.eye(2) + sinhc_s * m0)


def element_matrix(g: GroupElement) -> Mat2:
    """Matrix of a normal-ordered element, scalar prefactor included."""
    gens = generators_for(g.algebra)
    ordered = (
        mat_exp(g.big_plus * gens.m_plus)
        @ mat_exp(g.log_c * gens.m_c)
        @ mat_exp(g.big_minus * gens.m_minus)
    )
    return cmath.exp(g.phase) * ordered


def exponent_matrix(algebra: AlgebraKind, lam: ExponentParams) -> Mat2:
    """Matrix of the single exponential with the given coordinates."""
    gens = generators_for(algebra)
    combined = (
        lam.lambda_plus * gens.m_plus
        + lam.lambda_c * gens.m_c
        + lam.lambda_minus * gens.m_minus
    )
    return mat_exp(combined)
