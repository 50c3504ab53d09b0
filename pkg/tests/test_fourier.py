import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from conftest import FINITE, duality, el, pairing
from hopfdual.algebra import tensor
from hopfdual.fourier import FourierPack, fourier_suite


def pack(name):
    return FourierPack(pairing(name), duality(name))


def test_fourier_of_group_element():
    F = pack("group:z2")
    # ψ(S(h)g) = [h = g]
    assert F.fourier(el(F.A, "g")) == el(F.B, "ê_g")
    assert F.fourier(el(F.A, "e")) == el(F.B, "ê_e")


@pytest.mark.parametrize("name", ["h4", "taft:3"])
def test_roundtrips(name):
    F = pack(name)
    for x in F.A.alg.basis_elements():
        assert F.fourier_inv(F.fourier(x)) == x
        assert F.fourier_alt_inv(F.fourier_alt(x)) == x


coeffs = st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=6), min_size=4, max_size=4)


@settings(max_examples=30, deadline=None)
@given(coeffs, st.fractions(min_value=-4, max_value=4, max_denominator=6))
def test_fourier_is_linear(vec, lam):
    F = pack("h4")
    x = F.A.alg.from_vector([F.A.field.coerce(c) for c in vec])
    assert F.fourier(x.scale(lam)) == F.fourier(x).scale(lam)
    assert F.fourier_inv(F.fourier(x)) == x


def test_convolution_with_unit():
    F = pack("group:s3")
    one = F.A.alg.one()
    for x in F.A.alg.basis_elements():
        assert F.P.act_right_A(F.fourier(x), F.A.Sinv(one)) == F.fourier(x)


def test_multiplication_becomes_convolution_on_s3():
    F = pack("group:s3")
    es = F.A.alg.basis_elements()
    for a, x in itertools.product(es, repeat=2):
        assert F.fourier(a * x) == F.P.act_right_A(F.fourier(x), F.A.Sinv(a))


def test_dual_action_becomes_multiplication_on_h4():
    F = pack("h4")
    for b, x in itertools.product(F.B.alg.basis_elements(), F.A.alg.basis_elements()):
        assert F.fourier(F.P.act_left_B(b, x)) == b * F.fourier(x)


def test_transformed_canonical_map_z2():
    F = pack("group:z2")
    for x, y in itertools.product(F.A.alg.basis_elements(), repeat=2):
        t = tensor(x, y)
        assert F.transformed_canonical(t) == F.w_inv(F.fourier2(t))


def test_transformed_canonical_map_is_bilinear():
    F = pack("h4")
    lam = Fraction(-3, 2)
    x, y = el(F.A, "x"), el(F.A, "gx")
    t, t2 = tensor(x, y), tensor(x, y.scale(lam))
    assert F.transformed_canonical(t2) == F.transformed_canonical(t).scale(lam)
    assert F.w_inv(F.fourier2(t2)) == F.w_inv(F.fourier2(t)).scale(lam)


def test_w_maps_are_inverse_on_h4_dual():
    F = pack("h4")
    for y, y2 in itertools.product(F.B.alg.basis_elements(), repeat=2):
        t = tensor(y, y2)
        assert F.w_inv(F.w_map(t)) == t
        assert F.w_map(F.w_inv(t)) == t


@pytest.mark.parametrize("name", FINITE)
def test_fourier_suite(name):
    rep = fourier_suite(pack(name))
    assert rep.ok, rep.render()
