"""Disentangling and composition in normal-ordered coordinates.

Two routes to the same numbers live here.  A single exponential with
coordinates (lambda_plus, lambda_c, lambda_minus) is rewritten as the ordered
product exp(L+ T+) exp(lc Tc) exp(L- T-) by :func:`disentangle`; ordered
products are multiplied by :func:`compose_pair` and folded over sequences by
:func:`compose_many`.  The final raising coordinate of a long product also has
a generalized continued fraction form, :func:`alpha_continued_fraction`, kept
as an independent cross-check of the fold.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Sequence

from .algebra import AlgebraKind, ExponentParams, GroupElement
from .errors import (
    AlgebraMismatch,
    EmptySequence,
    NonFiniteInput,
    SingularDecomposition,
)

__all__ = [
    "TOL_SINGULAR",
    "DisentangleResult",
    "disentangle",
    "compose_pair",
    "compose_many",
    "alpha_continued_fraction",
]

# Singular-denominator guard, relative to max(1, input magnitudes).  Wide
# enough to absorb roundoff, narrow enough that genuine chart breakdown is
# never mistaken for it.
TOL_SINGULAR = 1e-12

# Below this |nu| the ratio sinh(nu)/nu is evaluated by series; 6 even terms
# leave a truncation error around 1e-24, far below double-precision noise.
_SERIES_NU_THRESHOLD = 1e-4


def _cosh_sinhc(nu: complex) -> tuple[complex, complex]:
    """cosh(nu) and sinh(nu)/nu as a pair; both even in nu, finite at nu = 0."""
    if abs(nu) < _SERIES_NU_THRESHOLD:
        nu_sq = nu * nu
        cosh_nu = sum(nu_sq**k / math.factorial(2 * k) for k in range(6))
        sinhc_nu = sum(nu_sq**k / math.factorial(2 * k + 1) for k in range(6))
        return cosh_nu, sinhc_nu
    return cmath.cosh(nu), cmath.sinh(nu) / nu


@dataclass(frozen=True)
class DisentangleResult:
    """Normal-ordered element plus the auxiliary frequency that produced it."""

    element: GroupElement
    nu: complex


def disentangle(algebra: AlgebraKind, lam: ExponentParams) -> DisentangleResult:
    """Rewrite exp(l+ T+ + lc Tc + l- T-) in normal-ordered coordinates.

    With nu the principal square root of (delta*lc/2)^2 - delta*eps*l+*l-,
    the shared denominator is w = cosh(nu) - (delta*lc/2)*sinh(nu)/nu; then
    L+- = l+- * (sinh(nu)/nu) / w and lc_out = -(2/delta)*Log(w), principal
    branch.  Every ingredient is even in nu, so the root branch is irrelevant.
    """
    if not lam.is_finite():
        raise NonFiniteInput("exponent coordinates must be finite")
    eps, delta = algebra.epsilon, algebra.delta
    half_c = 0.5 * delta * lam.lambda_c
    nu = cmath.sqrt(half_c * half_c - delta * eps * lam.lambda_plus * lam.lambda_minus)
    cosh_nu, sinhc_nu = _cosh_sinhc(nu)
    w = cosh_nu - half_c * sinhc_nu
    scale = max(1.0, abs(lam.lambda_plus), abs(lam.lambda_c), abs(lam.lambda_minus))
    if abs(w) <= TOL_SINGULAR * scale:
        raise SingularDecomposition(
            "no normal-ordered form: disentangling denominator "
            f"|w| = {abs(w):.3e} is singular",
            denominator_abs=abs(w),
        )
    ratio = sinhc_nu / w
    element = GroupElement(
        algebra,
        big_plus=lam.lambda_plus * ratio,
        log_c=-(2.0 / delta) * cmath.log(w),
        big_minus=lam.lambda_minus * ratio,
    )
    return DisentangleResult(element, nu)


def compose_pair(g2: GroupElement, g1: GroupElement) -> GroupElement:
    """Normal-ordered coordinates of the product g2 g1 (g1 acts first).

    The only reordering needed is of the inner pair exp(L1+ T+) exp(L2- T-),
    governed by the denominator d = 1 - eps*delta*L1+*L2-.  Fractional powers
    of the Cartan coordinates are taken as exp(delta*log_c) so each factor's
    stored branch is honoured; the principal log of d is appended to log_c.
    """
    if g1.algebra is not g2.algebra:
        raise AlgebraMismatch(
            f"cannot compose {g2.algebra.value} with {g1.algebra.value}"
        )
    if not (g1.is_finite() and g2.is_finite()):
        raise NonFiniteInput("group element coordinates must be finite")
    eps, delta = g1.algebra.epsilon, g1.algebra.delta
    d = 1.0 - eps * delta * g1.big_plus * g2.big_minus
    scale = max(1.0, abs(g1.big_plus), abs(g2.big_minus))
    if abs(d) <= TOL_SINGULAR * scale:
        raise SingularDecomposition(
            f"no normal-ordered form: composition denominator |d| = {abs(d):.3e} "
            "is singular",
            denominator_abs=abs(d),
        )
    pow_c1 = cmath.exp(delta * g1.log_c)
    pow_c2 = cmath.exp(delta * g2.log_c)
    return GroupElement(
        g1.algebra,
        big_plus=g2.big_plus + g1.big_plus * pow_c2 / d,
        log_c=g1.log_c + g2.log_c - (2.0 / delta) * cmath.log(d),
        big_minus=g1.big_minus + g2.big_minus * pow_c1 / d,
        phase=g1.phase + g2.phase,
    )


def compose_many(elements: Sequence[GroupElement]) -> GroupElement:
    """Fold a time-ordered sequence (earliest first) into a single element.

    Equivalent to repeated compose_pair with each new element acting after
    the accumulated product; this left fold is the recurrence that seeds on
    the first element's coordinates.
    """
    if len(elements) == 0:
        raise EmptySequence("need at least one element to compose")
    acc = elements[0]
    for index, g in enumerate(elements[1:], start=2):
        try:
            acc = compose_pair(g, acc)
        except SingularDecomposition as exc:
            raise SingularDecomposition(
                f"composition is singular at element {index} of {len(elements)}",
                denominator_abs=exc.denominator_abs,
                step=index,
            ) from exc
    return acc


def alpha_continued_fraction(elements: Sequence[GroupElement]) -> complex:
    """Final raising coordinate of a product via its continued fraction.

    Evaluated bottom-up from the innermost term (the first element's raising
    coordinate).  Independent of the fold in compose_many, which is the point:
    agreement between the two is a nontrivial consistency check.

    A zero running value is a removable case (its reciprocal only appears in
    a denominator that then blows up, killing the whole fraction term), so it
    is taken in the limit; an exactly zero partial denominator is not
    removable and raises.
    """
    if len(elements) == 0:
        raise EmptySequence("need at least one element")
    algebra = elements[0].algebra
    for g in elements[1:]:
        if g.algebra is not algebra:
            raise AlgebraMismatch("all elements must share one algebra")
    eps, delta = algebra.epsilon, algebra.delta
    value = elements[0].big_plus
    for g in elements[1:]:
        if value == 0:
            value = g.big_plus
            continue
        partial = eps * delta * g.big_minus - 1.0 / value
        if partial == 0:
            raise SingularDecomposition(
                "continued fraction hit a zero partial denominator",
                denominator_abs=0.0,
            )
        value = g.big_plus - cmath.exp(delta * g.log_c) / partial
    return value
