import pytest

from conftest import FINITE, data, el, hopf
from hopfdual.algebra import Functional
from hopfdual.integrals import (NotFaithfulError, check_faithful, derive, identity_map, identity_suite_one,
                                integral_space, integrals_suite, is_left_invariant, perturbed,
                                scaling_constant, solve_left_integral, solve_sigma)


def vec(f, functional):
    return [f.to_json(x) for x in functional.vector()]


def test_group_algebra_integral_is_coefficient_of_unit():
    H = hopf("group:z2")
    assert vec(H.field, solve_left_integral(H)) == ["1", "0"]
    assert vec(H.field, data("group:z2").psi) == ["1", "0"]


def test_function_algebra_integral_is_haar_sum():
    H = hopf("function:z2")
    assert vec(H.field, solve_left_integral(H)) == ["1", "1"]


def test_h4_integral():
    # Δ(x) = x⊗1 + g⊗x forces φ(1) = φ(x) = 0 and Δ(gx) = gx⊗g + 1⊗gx forces φ(g) = 0
    H = hopf("h4")
    assert len(integral_space(H, "left")) == 1
    assert vec(H.field, solve_left_integral(H)) == ["0", "0", "0", "1"]


@pytest.mark.parametrize("name", FINITE)
def test_integral_spaces_are_lines(name):
    H = hopf(name)
    assert len(integral_space(H, "left")) == 1
    assert len(integral_space(H, "right")) == 1


@pytest.mark.parametrize("name, dim", [("group:s3", 6), ("h4", 4), ("taft:3", 9)])
def test_gram_rank(name, dim):
    rep = check_faithful(data(name).phi)
    assert rep.ok and rep.derived["gram_rank"] == dim


def test_zero_functional_is_not_faithful():
    H = hopf("h4")
    zero = Functional(H.alg, {b: 0 for b in H.alg.basis})
    rep = check_faithful(zero)
    assert not rep.ok and rep.derived["gram_rank"] == 0
    with pytest.raises(NotFaithfulError):
        solve_sigma(zero)


@pytest.mark.parametrize("name", ["group:z2", "function:s3", "group:s3"])
def test_unimodular_examples(name):
    md = data(name).modular
    H = hopf(name)
    # φ is a trace in each case, so σ = σ′ = id
    assert md.sigma.equals_on(identity_map(H), H.alg.basis) is None
    assert md.sigma_p.equals_on(identity_map(H), H.alg.basis) is None
    assert md.delta == H.alg.one()
    assert md.tau == H.field.one


def test_h4_modular_element_is_g():
    H = hopf("h4")
    md = data("h4").modular
    assert md.delta == el(H, "g")
    phi = data("h4").phi
    for a in H.alg.basis_elements():
        assert phi(H.S(a)) == phi(a * md.delta)


def test_h4_scaling_constant():
    # S(g) = g, S(x) = -gx, so S(gx) = S(x)S(g) = -gxg = x and S²(gx) = -gx
    H = hopf("h4")
    assert data("h4").modular.tau == H.field.coerce(-1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_taft_scaling_constant(n):
    # S²(gⁱxʲ) = ζʲ gⁱxʲ and φ lives on x^(n-1), so τ = ζ^(n-1)
    from hopfdual.catalog import taft
    H = taft(n)
    phi = solve_left_integral(H)
    assert scaling_constant(phi, H) == H.field.zeta(n - 1)


@pytest.mark.parametrize("name", FINITE)
def test_identity_suite_passes(name):
    rep = identity_suite_one(data(name))
    assert rep.ok, rep.render()


def test_identity_sigma_fails_on_h4():
    d = data("h4")
    ident = identity_map(d.H)
    rep = identity_suite_one(perturbed(d, sigma=ident, sigma_inv=ident))
    bad = {c.name for c in rep.failed()}
    assert "sigma_relations.sigma_S" in bad
    assert "sigma.kms" in bad
    assert rep["sigma.kms"].witness


def test_trivial_delta_fails_on_h4():
    d = data("h4")
    one = d.H.alg.one()
    rep = identity_suite_one(perturbed(d, delta=one, delta_inv=one))
    bad = {c.name for c in rep.failed()}
    assert "phi_antipode.S_is_delta_right" in bad
    assert "modular_element.phi_slice" in bad
    assert all(rep[n].witness for n in bad)


@pytest.mark.parametrize("name", ["group:s3", "h4"])
def test_characterizations_agree(name):
    rep, _ = integrals_suite(hopf(name))
    assert rep["characterization.invariance_implies_antipode_slice"].passed
    assert rep["characterization.antipode_slice_implies_invariance"].passed


def test_supplied_integral_is_used():
    H = hopf("h4")
    phi = solve_left_integral(H).scale(3)
    d = derive(H, phi)
    assert d.phi(el(H, "gx")) == 3
    assert is_left_invariant(H, d.phi) is None
    assert is_left_invariant(H, Functional(H.alg, {0: 1, 1: 0, 2: 0, 3: 0})) is not None
