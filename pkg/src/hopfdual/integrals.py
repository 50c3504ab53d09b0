"""Left and right integrals, faithfulness, modular data (σ, σ′, δ, τ) and the
identity suite relating them to Δ, ε and S.

Everything is solved by exact linear algebra on finite-dimensional inputs and
then verified a posteriori, never assumed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, replace

from . import linalg
from .algebra import Element, Functional, LinearMap, slice_leg, tensor
from .hopf import HopfAlgebra, apply_legs
from .report import Report
from .scalars import inv


class NoIntegralError(ValueError):
    """The invariance system has only the zero solution."""


class NonUniqueIntegralError(ValueError):
    """The invariance system has a solution space of dimension > 1."""


class NotFaithfulError(ValueError):
    pass


class ModularDataError(ArithmeticError):
    pass


def normalize(field, vec: list) -> list:
    """Scale so the coordinate at the least basis index with a nonzero value is 1."""
    for x in vec:
        if not field.is_zero(x):
            s = inv(field, x)
            return [y * s for y in vec]
    return vec


def _solve_functional(H: HopfAlgebra, rows: list[list], what: str) -> list:
    f = H.field
    d = H.alg.dim
    space = linalg.nullspace(f, rows, d)
    if not space:
        raise NoIntegralError(f"{H.name} has no nonzero {what}")
    if len(space) > 1:
        raise NonUniqueIntegralError(f"{what} space of {H.name} has dimension {len(space)}")
    return normalize(f, space[0])


def left_invariance_rows(H: HopfAlgebra) -> list[list]:
    """Linear equations in φ for (ι⊗φ)((b⊗1)Δ(a)) = φ(a)b over basis pairs."""
    alg = H.alg
    basis = alg.basis
    d = len(basis)
    f = H.field
    rows = []
    for ia, a in enumerate(alg.basis_elements()):
        for jb, b in enumerate(alg.basis_elements()):
            t = H.delta_left(b, a)
            # row for output coordinate k: Σ_q t[(k,q)] φ_q - [k = b] φ_a
            per_k: dict = {}
            for (k, q), v in t.coeffs.items():
                per_k.setdefault(k, [f.zero] * d)[alg.index(q)] += v
            per_k.setdefault(basis[jb], [f.zero] * d)[ia] -= f.one
            rows.extend(per_k.values())
    return rows


def right_invariance_rows(H: HopfAlgebra) -> list[list]:
    """Linear equations in ψ for (ψ⊗ι)(Δ(a)(1⊗b)) = ψ(a)b."""
    alg = H.alg
    basis = alg.basis
    d = len(basis)
    f = H.field
    rows = []
    for ia, a in enumerate(alg.basis_elements()):
        for jb, b in enumerate(alg.basis_elements()):
            t = H.delta_right(a, b)
            per_k: dict = {}
            for (p, k), v in t.coeffs.items():
                per_k.setdefault(k, [f.zero] * d)[alg.index(p)] += v
            per_k.setdefault(basis[jb], [f.zero] * d)[ia] -= f.one
            rows.extend(per_k.values())
    return rows


def antipode_slice_rows(H: HopfAlgebra) -> list[list]:
    """Linear equations in φ for S((ι⊗φ)(Δ(a)(1⊗b))) = (ι⊗φ)((1⊗a)Δ(b))."""
    alg = H.alg
    d = alg.dim
    f = H.field
    rows = []
    for a in alg.basis_elements():
        for b in alg.basis_elements():
            per_k: dict = {}
            for (p, q), v in H.delta_right(a, b).coeffs.items():
                for k, w in H.S.on_basis(p).coeffs.items():
                    per_k.setdefault(k, [f.zero] * d)[alg.index(q)] += v * w
            for (p, q), v in H.delta_left2(a, b).coeffs.items():
                per_k.setdefault(p, [f.zero] * d)[alg.index(q)] -= v
            rows.extend(per_k.values())
    return rows


def integral_space(H: HopfAlgebra, side: str = "left") -> list[list]:
    rows = left_invariance_rows(H) if side == "left" else right_invariance_rows(H)
    return linalg.nullspace(H.field, rows, H.alg.dim)


def solve_left_integral(H: HopfAlgebra) -> Functional:
    H.alg.require_finite()
    vec = _solve_functional(H, left_invariance_rows(H), "left integral")
    return Functional(H.alg, dict(zip(H.alg.basis, vec)), "φ")


def solve_right_integral(H: HopfAlgebra) -> Functional:
    H.alg.require_finite()
    vec = _solve_functional(H, right_invariance_rows(H), "right integral")
    return Functional(H.alg, dict(zip(H.alg.basis, vec)), "ψ")


def is_left_invariant(H: HopfAlgebra, phi: Functional, span=None) -> tuple | None:
    """First (a, b) violating (ι⊗φ)((b⊗1)Δ(a)) = φ(a)b, or None."""
    span = span if span is not None else H.spanning()
    for a, b in itertools.product(span, span):
        if slice_leg(H.delta_left(b, a), 1, phi) != b.scale(phi(a)):
            return a, b
    return None


def is_right_invariant(H: HopfAlgebra, psi: Functional, span=None) -> tuple | None:
    span = span if span is not None else H.spanning()
    for a, b in itertools.product(span, span):
        if slice_leg(H.delta_right(a, b), 0, psi) != b.scale(psi(a)):
            return a, b
    return None


def right_from_left(phi: Functional, H: HopfAlgebra) -> Functional:
    """ψ = φ∘S, verified right invariant."""
    psi = phi.compose(H.S, "ψ")
    if H.finite_dim:
        psi = Functional(H.alg, dict(zip(H.alg.basis, psi.vector())), "ψ")
    bad = is_right_invariant(H, psi)
    if bad is not None:
        raise NoIntegralError(f"φ∘S is not right invariant at a={bad[0]}, b={bad[1]}")
    return psi


def gram(phi: Functional) -> list[list]:
    alg = phi.alg
    es = alg.basis_elements()
    return [[phi(ei * ej) for ej in es] for ei in es]


def check_faithful(phi: Functional) -> Report:
    alg = phi.alg
    rep = Report("faithful", alg.name)
    G = gram(phi)
    r = linalg.rank(alg.field, G)
    rep.derived["gram_rank"] = r
    rep.add("gram_full_rank", r == alg.dim, f"rank {r} < {alg.dim}", cases=alg.dim)
    return rep


def solve_modular_automorphism(phi: Functional, name: str = "σ") -> LinearMap:
    """The unique linear σ with φ(ab) = φ(bσ(a)), via Σ = G⁻¹Gᵀ."""
    alg = phi.alg
    f = alg.field
    G = gram(phi)
    try:
        Ginv = linalg.inverse(f, G)
    except linalg.SingularMatrixError as exc:
        raise NotFaithfulError(f"{phi.name} is not faithful on {alg.name}") from exc
    sig = LinearMap.from_matrix(alg, alg, linalg.matmul(f, Ginv, linalg.transpose(G)), name)
    es = alg.basis_elements()
    for a, b in itertools.product(es, es):
        if sig(a * b) != sig(a) * sig(b):
            raise ModularDataError(f"{name} is not multiplicative at ({a}, {b})")
    return sig


def solve_sigma(phi: Functional) -> LinearMap:
    return solve_modular_automorphism(phi, "σ")


def solve_sigma_prime(psi: Functional) -> LinearMap:
    return solve_modular_automorphism(psi, "σ′")


def modular_element(phi: Functional, H: HopfAlgebra) -> Element:
    """δ from (φ⊗ι)Δ(a) = φ(a)δ, checked for every basis a."""
    return _group_like_from(H, phi, leg=0, what="δ")


def modular_element_inverse(psi: Functional, H: HopfAlgebra) -> Element:
    """δ⁻¹ from (ι⊗ψ)Δ(a) = ψ(a)δ⁻¹."""
    return _group_like_from(H, psi, leg=1, what="δ⁻¹")


def _group_like_from(H: HopfAlgebra, omega: Functional, leg: int, what: str) -> Element:
    f = H.field
    one = H.alg.one()
    out = None
    for a in H.alg.basis_elements():
        val = omega(a)
        if f.is_zero(val):
            continue
        out = slice_leg(H.delta_right(a, one), leg, omega).scale(inv(f, val))
        break
    if out is None:
        raise NoIntegralError(f"{omega.name} vanishes identically")
    for a in H.alg.basis_elements():
        if slice_leg(H.delta_right(a, one), leg, omega) != out.scale(omega(a)):
            raise ModularDataError(f"{what} depends on the choice of a (fails at {a})")
    return out


def scaling_constant(phi: Functional, H: HopfAlgebra) -> object:
    """τ with φ∘S² = τφ, read at the first basis element with φ ≠ 0."""
    f = H.field
    S2 = lambda a: H.S(H.S(a))  # noqa: E731
    tau = None
    for a in H.spanning():
        v = phi(a)
        if not f.is_zero(v):
            tau = phi(S2(a)) * inv(f, v)
            break
    if tau is None:
        raise NoIntegralError("φ vanishes on every basis element")
    for a in H.spanning():
        if not f.eq(phi(S2(a)), tau * phi(a)):
            raise ModularDataError(f"φ∘S² is not a multiple of φ (fails at {a})")
    return tau


@dataclass(frozen=True)
class ModularData:
    sigma: LinearMap
    sigma_inv: LinearMap
    sigma_p: LinearMap
    sigma_p_inv: LinearMap
    delta: Element
    delta_inv: Element
    tau: object


@dataclass(frozen=True)
class IntegralData:
    H: HopfAlgebra
    phi: Functional
    psi: Functional
    modular: ModularData


def derive(H: HopfAlgebra, phi: Functional | None = None) -> IntegralData:
    """Solve (or take) φ, then ψ = φ∘S, σ, σ′, δ, δ⁻¹ and τ."""
    H.alg.require_finite()
    phi = phi or solve_left_integral(H)
    psi = right_from_left(phi, H)
    sigma = solve_sigma(phi)
    sigma_p = solve_sigma_prime(psi)
    md = ModularData(sigma, sigma.inverse("σ⁻¹"), sigma_p, sigma_p.inverse("σ′⁻¹"),
                     modular_element(phi, H), modular_element_inverse(psi, H),
                     scaling_constant(phi, H))
    return IntegralData(H, phi, psi, md)


def perturbed(data: IntegralData, **changes) -> IntegralData:
    """Replace pieces of the modular data (negative controls)."""
    return replace(data, modular=replace(data.modular, **changes))


def identity_map(H: HopfAlgebra) -> LinearMap:
    return LinearMap.identity(H.alg)


def derived_dump(data: IntegralData) -> dict:
    f = data.H.field
    md = data.modular

    def vec(xs):
        return [f.to_json(x) for x in xs]

    return {
        "phi": vec(data.phi.vector()),
        "psi": vec(data.psi.vector()),
        "sigma": [vec(r) for r in md.sigma.matrix()],
        "sigma_prime": [vec(r) for r in md.sigma_p.matrix()],
        "delta": str(md.delta),
        "delta_inv": str(md.delta_inv),
        "tau": f.to_json(md.tau),
    }


# --- identity suite ---------------------------------------------------------

def identity_suite_one(data: IntegralData) -> Report:
    H, phi, psi, md = data.H, data.phi, data.psi, data.modular
    alg, f = H.alg, H.field
    es = alg.basis_elements()
    pairs = list(itertools.product(es, es))
    S, Sinv = H.S, H.Sinv
    sig, sig_i, sp, sp_i = md.sigma, md.sigma_inv, md.sigma_p, md.sigma_p_inv
    d, d_inv, tau = md.delta, md.delta_inv, md.tau
    S2 = lambda a: S(S(a))  # noqa: E731
    Sm2 = lambda a: Sinv(Sinv(a))  # noqa: E731
    eps = H.counit
    one = alg.one()
    rep = Report("identities1", H.name)

    def w(*xs):
        return lambda: ", ".join(str(x) for x in xs)

    # antipode slice form of invariance
    rep.verify("antipode_slice.left_integral",
               ((S(slice_leg(H.delta_right(a, b), 1, phi)) == slice_leg(H.delta_left2(a, b), 1, phi),
                 w(a, b)) for a, b in pairs))
    rep.verify("antipode_slice.right_integral",
               ((S(slice_leg(H.delta_left(a, b), 0, psi)) == slice_leg(H.delta_right1(a, b), 0, psi),
                 w(a, b)) for a, b in pairs))
    # invariance
    rep.add("invariance.left", is_left_invariant(H, phi) is None, "φ not left invariant",
            cases=len(pairs))
    rep.add("invariance.right", is_right_invariant(H, psi) is None, "ψ not right invariant",
            cases=len(pairs))
    # scaling constant
    rep.add("tau.nonzero", not f.is_zero(tau), "τ = 0")
    rep.verify("tau.phi_S2", ((f.eq(phi(S2(a)), tau * phi(a)), w(a)) for a in es))
    rep.verify("tau.psi_S2", ((f.eq(psi(S2(a)), tau * psi(a)), w(a)) for a in es))
    # φ∘S against δ
    rep.verify("phi_antipode.S_is_delta_right", ((f.eq(phi(S(a)), phi(a * d)), w(a)) for a in es))
    rep.verify("phi_antipode.Sinv_is_delta_left", ((f.eq(phi(Sinv(a)), phi(d * a)), w(a)) for a in es))
    # modular element and its group-like properties
    rep.verify("modular_element.phi_slice", ((slice_leg(H.delta_right(a, one), 0, phi) == d.scale(phi(a)), w(a))
                                   for a in es))
    rep.verify("modular_element.psi_slice_inverse",
               ((slice_leg(H.delta_right(a, one), 1, psi) == d_inv.scale(psi(a)), w(a)) for a in es))
    rep.add("delta.invertible", d * d_inv == one and d_inv * d == one, f"δδ⁻¹ = {d * d_inv}")
    rep.add("delta.group_like", H.delta(d) == tensor(d, d), f"Δ(δ) = {H.delta(d)}")
    rep.add("delta.counit", f.eq(eps(d), f.one), f"ε(δ) = {eps(d)}")
    rep.add("delta.antipode", S(d) == d_inv, f"S(δ) = {S(d)}")
    # ψ∘S
    rep.verify("psi_antipode.tau_delta_inv", ((f.eq(psi(S(a)), tau * psi(a * d_inv)), w(a)) for a in es))
    # modular automorphisms
    rep.verify("sigma.kms", ((f.eq(phi(a * b), phi(b * sig(a))), w(a, b)) for a, b in pairs))
    rep.verify("sigma_prime.kms", ((f.eq(psi(a * b), psi(b * sp(a))), w(a, b)) for a, b in pairs))
    rep.verify("sigma.multiplicative", ((sig(a * b) == sig(a) * sig(b), w(a, b)) for a, b in pairs))
    rep.verify("sigma_prime.multiplicative", ((sp(a * b) == sp(a) * sp(b), w(a, b)) for a, b in pairs))
    rep.verify("sigma.invertible", ((sig(sig_i(a)) == a and sig_i(sig(a)) == a, w(a)) for a in es))
    rep.verify("sigma_prime.invertible", ((sp(sp_i(a)) == a and sp_i(sp(a)) == a, w(a)) for a in es))
    rep.verify("sigma.preserves_phi", ((f.eq(phi(sig(a)), phi(a)), w(a)) for a in es))
    rep.verify("sigma_prime.preserves_psi", ((f.eq(psi(sp(a)), psi(a)), w(a)) for a in es))
    # σ against S and δ
    rep.verify("sigma_relations.sigma_S", ((sig(S(a)) == S(sp_i(a)), w(a)) for a in es))
    rep.verify("sigma_relations.sigma_Sinv", ((sig(Sinv(a)) == Sinv(sp_i(a)), w(a)) for a in es))
    rep.verify("sigma_relations.sigma_prime_conjugate", ((sp(a) == d * sig(a) * d_inv, w(a)) for a in es))
    tinv = inv(f, tau)
    rep.add("sigma_relations.sigma_delta", sig(d) == d.scale(tinv), f"σ(δ) = {sig(d)}")
    rep.add("sigma_relations.sigma_prime_delta", sp(d) == d.scale(tinv), f"σ′(δ) = {sp(d)}")
    # S², σ, σ′ commute
    for nm, u, v in (("S2_sigma", S2, sig), ("S2_sigma_prime", S2, sp), ("sigma_sigma_prime", sig, sp)):
        rep.verify(f"commuting.{nm}", ((u(v(a)) == v(u(a)), w(a)) for a in es))
    # ε∘σ = ε∘σ′
    rep.verify("counit_modular.sigma", ((f.eq(eps(sig(a)), eps(sp(a))), w(a)) for a in es))
    rep.verify("counit_modular.sigma_inv", ((f.eq(eps(sig_i(a)), eps(sp_i(a))), w(a)) for a in es))
    # Δ intertwines the modular maps with S², sliced against 1⊗b
    S2m = S.power(2)
    Sm2m = Sinv.power(2)
    rep.verify("coproduct_modular.sigma",
               ((H.delta_right(sig(a), b) == apply_legs(H.delta_right(a, sig_i(b)), [S2m, sig]), w(a, b))
                for a, b in pairs))
    rep.verify("coproduct_modular.sigma_prime",
               ((H.delta_right(sp(a), b) == apply_legs(H.delta_right(a, S2(b)), [sp, Sm2m]), w(a, b))
                for a, b in pairs))
    rep.verify("coproduct_modular.S2",
               ((H.delta_right(S2(a), b) == apply_legs(H.delta_right(a, sp(b)), [sig, sp_i]), w(a, b))
                for a, b in pairs))
    # ε∘σ slices of Δ
    eps_sig = H.counit_f.compose(sig, "ε∘σ")
    eps_sp = H.counit_f.compose(sp, "ε∘σ′")
    rep.verify("counit_modular_slice.right_leg",
               ((slice_leg(H.delta_right(a, one), 1, eps_sig) == Sm2(sig(a)), w(a)) for a in es))
    rep.verify("counit_modular_slice.left_leg",
               ((slice_leg(H.delta_right(a, one), 0, eps_sp) == S2(sp(a)), w(a)) for a in es))
    rep.derived.update(derived_dump(data))
    return rep


def integrals_suite(H: HopfAlgebra) -> tuple[Report, IntegralData]:
    """Existence, uniqueness, faithfulness, and equivalence of the two characterizations."""
    f = H.field
    rep = Report("integrals", H.name)
    d = H.alg.dim
    left = integral_space(H, "left")
    right = integral_space(H, "right")
    rep.add("left_integral.unique", len(left) == 1, f"solution space dimension {len(left)}")
    rep.add("right_integral.unique", len(right) == 1, f"solution space dimension {len(right)}")
    data = derive(H)
    rep.extend(check_faithful(data.phi), "phi")
    rep.extend(check_faithful(data.psi), "psi")
    # invariance and the antipode slice identity characterize the same functionals
    e12 = linalg.nullspace(f, antipode_slice_rows(H), d)
    both = linalg.rank(f, left + e12) if left or e12 else 0
    rep.add("characterization.invariance_implies_antipode_slice", both == len(e12), "left integral violates the antipode slice identity")
    ok = all(is_left_invariant(H, Functional(H.alg, dict(zip(H.alg.basis, v)))) is None for v in e12)
    rep.add("characterization.antipode_slice_implies_invariance", ok and len(e12) >= 1, "antipode slice solution not left invariant",
            cases=len(e12))
    rep.verify("psi_is_phi_S", ((f.eq(data.psi(a), data.phi(H.S(a))), str(a)) for a in H.alg.basis_elements()))
    rep.derived.update(derived_dump(data))
    rep.derived["left_integral_space_dim"] = len(left)
    return rep, data
