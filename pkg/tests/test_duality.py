import itertools

import pytest

from conftest import FINITE, duality, el, hopf, pairing
from hopfdual.algebra import slice_leg, tensor
from hopfdual.catalog import build
from hopfdual.duality import duality_suite, pentagon_check, pentagon_check_t, v_inverse


def dual_basis_sum(name, invert=False):
    P = pairing(name)
    A, B = P.A.alg, P.B.alg
    acc = tensor(B.one(), A.one()).alg.zero()
    for g in A.basis:
        a = A.basis_element(g)
        acc = acc + tensor(el(B, "ê_" + A.label(g)), P.A.S(a) if invert else a)
    return acc


@pytest.mark.parametrize("name", ["group:z2", "group:s3"])
def test_v_is_dual_basis_sum_for_groups(name):
    V = duality(name)
    assert V.element == dual_basis_sum(name)
    # V⁻¹ = Σ ê_g⊗g⁻¹
    assert v_inverse(V) == dual_basis_sum(name, invert=True)


def test_v_reproduces_pairing():
    V = duality("h4")
    P = V.P
    for a, b in itertools.product(P.A.alg.basis_elements(), P.B.alg.basis_elements()):
        assert V.pair_with(a, b) == P.pair(a, b)


def test_counit_slices_of_v():
    V = duality("h4")
    v = V.element
    assert slice_leg(v, 0, V.B.counit_f) == V.A.alg.one()
    assert slice_leg(v, 1, V.A.counit_f) == V.B.alg.one()


def test_inverse_of_v():
    V = duality("h4")
    v = V.element
    assert V.inverse_S1() == V.inverse_S2()
    assert v * V.inverse_S1() == V.BA.one()
    assert V.inverse_S1() * v == V.BA.one()


def test_left_slice_in_z2():
    # ê_g = φ(g·) and Δ(g) = g⊗g, so V(ê_g⊗a) = ê_g⊗S(g)a with S(g) = g
    V = duality("group:z2")
    A, B = V.A.alg, V.B.alg
    g = el(A, "g")
    for a in A.basis_elements():
        assert V.left_slice(el(B, "ê_g"), a) == tensor(el(B, "ê_g"), g * a)


def test_v_acts_as_canonical_map():
    V = duality("group:z2")
    g, e = el(V.A, "g"), el(V.A, "e")
    assert V.act_as_t(tensor(g, g)) == tensor(g, e)
    V4 = duality("h4")
    H = V4.A
    for x, y in itertools.product(H.alg.basis_elements(), repeat=2):
        t = tensor(x, y)
        assert V4.act_as_t(t) == H.delta_right(x, y)
        assert V4.t_inverse(V4.act_as_t(t)) == t


@pytest.mark.parametrize("name", FINITE)
def test_duality_suite(name):
    rep = duality_suite(duality(name))
    assert rep.ok, rep.render()


@pytest.mark.parametrize("name", ["group:z2", "group:s3", "h4"])
def test_element_pentagon(name):
    rep = pentagon_check(duality(name))
    assert rep.ok, rep.render()


@pytest.mark.parametrize("name", FINITE)
def test_operator_pentagon(name):
    assert pentagon_check_t(hopf(name)).ok


def test_operator_pentagon_on_kz_window():
    K = build("kz").A
    span = [K.alg.basis_element(i) for i in range(-3, 4)]
    rep = pentagon_check_t(K, span)
    assert rep.ok
    assert rep.checks[0].cases == 7 ** 3
