import itertools

import pytest

from conftest import FINITE, el, hopf
from hopfdual.algebra import LinearMap, legs, tensor
from hopfdual.catalog import build
from hopfdual.hopf import check_hopf_axioms, with_antipode


def test_group_like_slice():
    H = hopf("group:z2")
    g = el(H, "g")
    # Δ(g)(1⊗g) = g⊗g² = g⊗e
    assert H.delta_right(g, g) == tensor(g, el(H, "e"))


def test_function_algebra_slice():
    H = hopf("function:z2")
    # Δ(δ_e)(x, y) = δ_e(xy); with y = g forced, x = g
    assert H.delta_right(el(H, "δ_e"), el(H, "δ_g")) == tensor(el(H, "δ_g"), el(H, "δ_g"))


def test_h4_structure_maps():
    H = hopf("h4")
    one, g, x = el(H, "1"), el(H, "g"), el(H, "x")
    assert H.counit(x) == 0
    assert H.S(g) == g
    assert H.delta(x) == tensor(x, one) + tensor(g, x)
    assert H.delta(g) == tensor(g, g)


def test_slices_agree_with_full_coproduct():
    H = hopf("h4")
    one = H.alg.one()
    for a, b in itertools.product(H.alg.basis_elements(), repeat=2):
        d = H.delta(a)
        assert H.delta_right(a, b) == d * tensor(one, b)
        assert H.delta_left(b, a) == tensor(b, one) * d
        assert H.delta_right1(a, b) == d * tensor(b, one)
        assert H.delta_left2(b, a) == tensor(one, b) * d


def test_delta2_group_like():
    H = hopf("group:z2")
    g, e = el(H, "g"), el(H, "e")
    assert H.delta2_slices(g, e, e) == tensor(g, g, g)


def test_delta2_function_algebra():
    H = hopf("function:z2")
    de, dg = el(H, "δ_e"), el(H, "δ_g")
    # Δ⁽²⁾(δ_e)(x, y, z) = δ_e(xyz); y = z = g forces x = e
    assert H.delta2_slices(de, dg, dg) == tensor(de, dg, dg)


def test_delta2_both_orders_on_h4():
    H = hopf("h4")
    for a, b, c in itertools.product(H.alg.basis_elements(), repeat=3):
        t = H.delta2_slices(a, b, c)  # raises if the two association orders differ
        assert t == tensor_map_3(H, a, b, c)


def tensor_map_3(H, a, b, c):
    one = H.alg.one()
    d = H.delta(a)
    full = tensor(one, one, one).alg.zero()
    for w, (p, q) in legs(d):
        full = full + tensor(H.delta(p), q).scale(w)
    return full * tensor(one, b, c)


@pytest.mark.parametrize("name", FINITE)
def test_axioms_pass(name):
    rep = check_hopf_axioms(hopf(name))
    assert rep.ok, rep.render()


def test_axioms_pass_on_kz_window():
    c = build("kz")
    for H in (c.A, c.B):
        win = [H.alg.basis_element(i) for i in range(-5, 6)]
        rep = check_hopf_axioms(H, win)
        assert rep.ok, rep.render()


def test_identity_antipode_fails_with_witness():
    H = hopf("h4")
    ident = LinearMap.identity(H.alg)
    rep = check_hopf_axioms(with_antipode(H, ident, ident))
    assert not rep.ok
    bad = {c.name for c in rep.failed()}
    assert "antipode.left" in bad
    assert rep["antipode.left"].witness == "(a=x, b=1)"


def test_canonical_map_and_inverse():
    H = hopf("group:z2")
    g, e = el(H, "g"), el(H, "e")
    assert H.t_map(tensor(g, g)) == tensor(g, e)
    H4 = hopf("h4")
    for a, b in itertools.product(H4.alg.basis_elements(), repeat=2):
        t = tensor(a, b)
        assert H4.t_inverse(H4.t_map(t)) == t
        assert H4.t_map(H4.t_inverse(t)) == t


def test_kz_slices_have_finite_support():
    K = build("kz").A
    d2, d3 = K.alg.basis_element(2), K.alg.basis_element(3)
    # Δ(δ_2)(x, y) = δ_2(x + y); y = 3 forces x = -1
    assert K.delta_right(d2, d3) == tensor(K.alg.basis_element(-1), d3)
    assert K.t_map(tensor(d2, d3)) == K.delta_right(d2, d3)
    assert K.t_inverse(K.t_map(tensor(d2, d3))) == tensor(d2, d3)


def test_kz_has_no_full_coproduct():
    K = build("kz").A
    assert not K.has_full_coproduct
