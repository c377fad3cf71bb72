import cmath
import math

import numpy as np
import pytest

from bchkit import (
    AlgebraKind,
    ExponentParams,
    GroupElement,
    compose_pair,
    disentangle,
    identity_element,
    make_algebra,
)


def test_structure_constants():
    assert AlgebraKind.SU11.epsilon == 1 and AlgebraKind.SU11.delta == 1
    assert AlgebraKind.SU2.epsilon == -1 and AlgebraKind.SU2.delta == 1
    assert AlgebraKind.SO21.epsilon == 0.5j and AlgebraKind.SO21.delta == 1j


def test_make_algebra_resolves_names():
    assert make_algebra("su11") is AlgebraKind.SU11
    assert make_algebra("SU2") is AlgebraKind.SU2
    assert make_algebra("So21") is AlgebraKind.SO21
    assert make_algebra(AlgebraKind.SU11) is AlgebraKind.SU11
    with pytest.raises(ValueError, match="unknown algebra"):
        make_algebra("su3")


def test_identity_element_coordinates():
    for kind in AlgebraKind:
        ident = identity_element(kind)
        assert ident.big_plus == 0 and ident.log_c == 0 and ident.big_minus == 0
        assert ident.phase == 0
        assert ident.big_c() == 1


def test_identity_is_neutral_on_both_sides():
    rng = np.random.default_rng(11)
    for kind in AlgebraKind:
        ident = identity_element(kind)
        for _ in range(20):
            parts = rng.uniform(-0.5, 0.5, 6)
            lam = ExponentParams(
                complex(parts[0], parts[1]),
                complex(parts[2], parts[3]),
                complex(parts[4], parts[5]),
            )
            g = disentangle(kind, lam).element
            for product in (compose_pair(ident, g), compose_pair(g, ident)):
                assert abs(product.big_plus - g.big_plus) <= 1e-14
                assert abs(product.big_c() - g.big_c()) <= 1e-14
                assert abs(product.big_minus - g.big_minus) <= 1e-14
                assert product.phase == g.phase


def test_big_c_is_exp_of_log_c():
    g = GroupElement(AlgebraKind.SO21, 0.1j, 0.3 - 0.2j, -0.4)
    assert g.big_c() == cmath.exp(0.3 - 0.2j)


def test_finiteness_helpers():
    assert ExponentParams(0.1, 0.2j, -0.3).is_finite()
    assert not ExponentParams(math.nan, 0, 0).is_finite()
    assert not ExponentParams(0, complex(0, math.inf), 0).is_finite()
    g = GroupElement(AlgebraKind.SU11, 0j, 0j, 0j, phase=complex(math.nan, 0))
    assert not g.is_finite()
