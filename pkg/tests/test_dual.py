import itertools

import pytest

from conftest import FINITE, el, hopf, pairing
from hopfdual.algebra import Multiplier, tensor
from hopfdual.dual import (ExtensionNotPossible, biduality_check, cross_relations_suite, dual_suite,
                           negative_delta_hat, pairing_suite)
from hopfdual.hopf import check_hopf_axioms


def assert_isomorphic(B, C, bij):
    """``bij`` maps labels of B to labels of C; compare every structure map on basis elements."""
    to_c = {b: el(C, bij[B.alg.label(b)]) for b in B.alg.basis}

    def img(x):
        acc = C.alg.zero()
        for k, v in x.coeffs.items():
            acc = acc + to_c[k].scale(v)
        return acc

    def img2(t):
        acc = tensor(C.alg.one(), C.alg.one()).alg.zero()
        for (p, q), v in t.coeffs.items():
            acc = acc + tensor(to_c[p], to_c[q]).scale(v)
        return acc

    es = B.alg.basis_elements()
    for x, y in itertools.product(es, repeat=2):
        assert img(x * y) == img(x) * img(y)
    for x in es:
        assert img2(B.delta(x)) == C.delta(img(x))
        assert B.counit(x) == C.counit(img(x))
        assert img(B.S(x)) == C.S(img(x))
    assert img(B.alg.one()) == C.alg.one()


def test_dual_of_group_algebra_is_function_algebra():
    P = pairing("group:z2")
    assert_isomorphic(P.B, hopf("function:z2"), {"ê_e": "δ_e", "ê_g": "δ_g"})
    A = P.A
    for a in ("e", "g"):
        for b in ("e", "g"):
            assert P.pair(el(A, a), el(P.B, "ê_" + b)) == (1 if a == b else 0)


def test_dual_of_function_algebra_is_group_algebra():
    P = pairing("function:s3")
    G = hopf("group:s3")
    bij = {"ê_δ_" + G.alg.label(g): G.alg.label(g) for g in G.alg.basis}
    assert_isomorphic(P.B, G, bij)


@pytest.mark.parametrize("name", ["h4", "taft:3"])
def test_dual_passes_axioms(name):
    B = pairing(name).B
    assert B.alg.dim == hopf(name).alg.dim
    assert check_hopf_axioms(B).ok


def test_left_action_of_dual_on_group_algebra():
    P = pairing("group:z2")
    g = el(P.A, "g")
    # Δ(g) = g⊗g and ⟨g, δ_g⟩ = 1
    assert P.act_left_B(el(P.B, "ê_g"), g) == g
    assert P.act_left_B(el(P.B, "ê_e"), g).is_zero()


@pytest.mark.parametrize("name", ["h4", "group:s3"])
def test_unit_acts_trivially(name):
    P = pairing(name)
    for a in P.A.alg.basis_elements():
        assert P.act_left_B(P.B.alg.one(), a) == a
        assert P.act_right_B(a, P.B.alg.one()) == a
    for b in P.B.alg.basis_elements():
        assert P.act_left_A(P.A.alg.one(), b) == b


def test_closed_forms_match_adjoint_definitions():
    P = pairing("h4")
    for a, b in itertools.product(P.A.alg.basis_elements(), P.B.alg.basis_elements()):
        assert P.act_left_A(a, b) == P.act_left_A_closed(a, b)
        assert P.act_right_A(b, a) == P.act_right_A_closed(b, a)
        assert P.act_left_B(b, a) == P.act_left_B_closed(b, a)
        assert P.act_right_B(a, b) == P.act_right_B_closed(a, b)


def test_pairing_extension():
    P = pairing("h4")
    one = Multiplier.identity(P.A.alg)
    delta = Multiplier.from_element(P.data_A.modular.delta)
    g = el(P.A, "g")
    for b in P.B.alg.basis_elements():
        assert P.extend_pairing_left(one, b, 3, seed=1) == P.B.counit(b)
        assert P.extend_pairing_left(delta, b, 3, seed=2) == P.pair(g, b)
    dh = Multiplier.from_element(P.data_B.modular.delta)
    sig_inv = P.data_A.modular.sigma_inv
    for a in P.A.alg.basis_elements():
        assert P.extend_pairing_right(a, dh, 2) == P.A.counit(sig_inv(a))
    with pytest.raises(ExtensionNotPossible):
        P.extend_pairing_both(one, Multiplier.identity(P.B.alg))


def test_dual_integrals_of_z2():
    P = pairing("group:z2")
    # ê_e = φ(·e) so ψ̂(ê_e) = ε(e)
    assert P.data_B.psi(el(P.B, "ê_e")) == 1
    # ê_g = ψ(S(·)g) so φ̂(ê_g) = ε(g); φ̂(1) = |G|
    assert P.data_B.phi(P.B.alg.one()) == 2


def test_dual_integral_of_s3_unit_is_group_order():
    P = pairing("group:s3")
    assert P.data_B.phi(P.B.alg.one()) == 6


def test_psi_hat_is_phi_hat_after_antipode():
    P = pairing("h4")
    for b in P.B.alg.basis_elements():
        assert P.data_B.psi(b) == P.data_B.phi(P.B.S(b))


@pytest.mark.parametrize("name", FINITE)
def test_pairing_and_dual_suites(name):
    P = pairing(name)
    for rep in (pairing_suite(P), dual_suite(P)):
        assert rep.ok, rep.render()


def test_plancherel_two_paths_on_h4():
    P = pairing("h4")
    for b, b2 in itertools.product(P.B.alg.basis_elements(), repeat=2):
        direct, closed = P.plancherel_product(b, b2)
        assert direct == closed


@pytest.mark.parametrize("name", ["h4", "taft:3"])
def test_radford(name):
    P = pairing(name)
    S = P.A.S
    for a in P.A.alg.basis_elements():
        assert S(S(S(S(a)))) == P.radford_rhs(a)


def test_trivial_delta_hat_breaks_cross_relations():
    rep = cross_relations_suite(negative_delta_hat(pairing("h4")))
    bad = {c.name for c in rep.failed()}
    assert "cross.delta_hat_sigma_inv" in bad
    assert rep["cross.delta_hat_sigma_inv"].witness


@pytest.mark.parametrize("name", ["group:z2", "function:s3", "h4"])
def test_biduality(name):
    assert biduality_check(pairing(name)).ok
