"""Core value types: the three algebras and their coordinate systems.

Each algebra is identified by the structure-constant pair (epsilon, delta)
entering the commutators

    [T_minus, T_plus] = 2*epsilon*T_c,    [T_c, T_plusminus] = +/- delta*T_plusminus.

A group element is kept in normal-ordered (Gauss) coordinates: the factors of
exp(big_plus*T_plus) * exp(log_c*T_c) * exp(big_minus*T_minus), together with an
accumulated scalar phase exponent.  The Cartan coordinate is stored as its
logarithm so that the branch of every fractional power taken during composition
stays explicit.
"""

from __future__ import annotations

import cmath
import enum
from dataclasses import dataclass

__all__ = [
    "AlgebraKind",
    "ExponentParams",
    "GroupElement",
    "make_algebra",
    "identity_element",
]


class AlgebraKind(enum.Enum):
    """One of su(1,1), su(2), so(2,1), carrying its (epsilon, delta) pair."""

    SU11 = "su11"
    SU2 = "su2"
    SO21 = "so21"

    @property
    def epsilon(self) -> complex:
        return _STRUCTURE[self][0]

    @property
    def delta(self) -> complex:
        return _STRUCTURE[self][1]


# The only admissible structure-constant pairs; nothing else is constructible.
_STRUCTURE = {
    AlgebraKind.SU11: (1 + 0j, 1 + 0j),
    AlgebraKind.SU2: (-1 + 0j, 1 + 0j),
    AlgebraKind.SO21: (0.5j, 1j),
}


def make_algebra(kind: str | AlgebraKind) -> AlgebraKind:
    """Resolve a name like ``"su11"`` (case-insensitive) to its AlgebraKind."""
    if isinstance(kind, AlgebraKind):
        return kind
    try:
        return AlgebraKind(str(kind).lower())
    except ValueError:
        names = ", ".join(a.value for a in AlgebraKind)
        raise ValueError(f"unknown algebra {kind!r}; expected one of {names}") from None


@dataclass(frozen=True)
class ExponentParams:
    """Coordinates of a single-exponential group element (all complex, finite)."""

    lambda_plus: complex
    lambda_c: complex
    lambda_minus: complex

    def is_finite(self) -> bool:
        return all(
            cmath.isfinite(v)
            for v in (self.lambda_plus, self.lambda_c, self.lambda_minus)
        )


@dataclass(frozen=True)
class GroupElement:
    """Normal-ordered coordinates of a group element.

    ``log_c`` holds ln of the Cartan coordinate; the coordinate itself is
    recovered via :meth:`big_c` and is never stored directly.  ``phase`` is a
    scalar prefactor exponent (the element represents exp(phase) times the
    ordered product); it stays 0 except for rotation operators.
    """

    algebra: AlgebraKind
    big_plus: complex
    log_c: complex
    big_minus: complex
    phase: complex = 0j

    def big_c(self) -> complex:
        return cmath.exp(self.log_c)

    def is_finite(self) -> bool:
        return all(
            cmath.isfinite(v)
            for v in (self.big_plus, self.log_c, self.big_minus, self.phase)
        )


def identity_element(algebra: AlgebraKind) -> GroupElement:
    """The group identity: all coordinates and the phase exponent zero."""
    return GroupElement(algebra, 0j, 0j, 0j, 0j)
