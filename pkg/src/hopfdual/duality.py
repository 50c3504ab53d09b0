"""The duality element V ∈ M(B⊗A) with ⟨V, a⊗b⟩ = ⟨a, b⟩, its slice forms, its
inverse, the comultiplication and intertwiner relations, its action as the
canonical map T on A⊗A, and the pentagon equation.

For finite-dimensional pairs V is an honest element of B⊗A.  Products whose
middle leg mixes A and B are realized through the faithful action of the
Heisenberg algebra on A, i.e. inside End(A).
"""

from __future__ import annotations

import itertools

from . import linalg
from .algebra import (Element, MatrixAlgebra, TensorAlgebra, leg_embed, legs, slice_leg, tensor,
                      tensor_map)
from .dual import Pairing
from .heisenberg import HeisenbergAlgebra
from .hopf import HopfAlgebra
from .report import Report


class NotAnElementError(TypeError):
    """V of an infinite-dimensional pair exists only as a multiplier / operator."""


class DualityV:
    def __init__(self, P):
        self.P = P
        self.A, self.B = P.A, P.B
        self.field = self.A.field
        self.BA = TensorAlgebra([self.B.alg, self.A.alg])
        self._element = None
        self._heis = None

    # --- element form --------------------------------------------------------------
    @property
    def element(self) -> Element:
        if not (self.A.finite_dim and self.B.finite_dim):
            raise NotAnElementError("V is not an element of B⊗A for an infinite-dimensional pair")
        if self._element is None:
            A, B = self.A.alg, self.B.alg
            f = self.field
            # V = Σ X[j][i] f_j⊗e_i with X the inverse of the pairing matrix ⟨e_i, f_j⟩
            M = [[self.P.pair(a, b) for b in B.basis_elements()] for a in A.basis_elements()]
            X = linalg.inverse(f, M)
            coeffs = {}
            for i, ai in enumerate(A.basis):
                for j, bj in enumerate(B.basis):
                    if not f.is_zero(X[j][i]):
                        coeffs[(bj, ai)] = X[j][i]
            self._element = self.BA.element(coeffs)
        return self._element

    def inverse_S1(self) -> Element:
        """(S⊗ι)V."""
        return tensor_map([self.B.S, None], self.element)

    def inverse_S2(self) -> Element:
        """(ι⊗S)V."""
        return tensor_map([None, self.A.S], self.element)

    def pair_with(self, a: Element, b: Element):
        """⟨V, a⊗b⟩ with the flipped pairing on the first leg."""
        f = self.field
        acc = f.zero
        for c, (vb, va) in legs(self.element):
            acc = acc + c * self.P.pair(a, vb) * self.P.pair(va, b)
        return acc

    # --- slice (multiplier) forms ------------------------------------------------------
    def left_slice(self, b: Element, a: Element) -> Element:
        """V(b⊗a) = Σ φ(c₍₂₎·)⊗S(c₍₁₎)a for b = φ(c·)."""
        P = self.P
        c = P.c_of_phi_left(b)
        acc = self.BA.zero()
        for w, (p, q) in legs(self.A.delta(c)):
            acc = acc + tensor(P.phi_left(q), self.A.S(p) * a).scale(w)
        return acc

    def right_slice(self, b: Element, a: Element) -> Element:
        """(b⊗a)V = Σ ψ(·c₍₁₎)⊗aS(c₍₂₎) for b = ψ(·c)."""
        P = self.P
        c = P.c_of_psi_right(b)
        acc = self.BA.zero()
        for w, (p, q) in legs(self.A.delta(c)):
            acc = acc + tensor(P.psi_right(p), a * self.A.S(q)).scale(w)
        return acc

    # --- realization in End(A) ----------------------------------------------------------
    @property
    def heis(self) -> HeisenbergAlgebra:
        if self._heis is None:
            self._heis = HeisenbergAlgebra(self.P)
        return self._heis

    @property
    def End(self) -> MatrixAlgebra:
        return _end_algebra(self.A)

    def pi_A(self, a: Element) -> Element:
        return self.End.from_matrix(self.heis.operator(self.heis.j_A(a)))

    def pi_B(self, b: Element) -> Element:
        return self.End.from_matrix(self.heis.operator(self.heis.j_B(b)))

    # --- action on A⊗A ---------------------------------------------------------------
    def act(self, u: Element, t: Element) -> Element:
        """(b⊗a)▷(x⊗x′) = (b▷x)⊗ax′, extended linearly in u ∈ B⊗A."""
        acc = self.A.AA.zero()
        for c, (b, a) in legs(u):
            for w, (x, x2) in legs(t):
                acc = acc + tensor(self.P.act_left_B(b, x), a * x2).scale(c * w)
        return acc

    def act_as_t(self, t: Element) -> Element:
        return self.act(self.element, t)

    def t_inverse(self, t: Element) -> Element:
        return self.act(self.inverse_S1(), t)


_END_CACHE: dict = {}


def _end_algebra(H: HopfAlgebra) -> MatrixAlgebra:
    key = id(H.alg)
    m = _END_CACHE.get(key)
    if m is None or m.n != H.alg.dim:
        m = MatrixAlgebra(H.alg.dim, H.field, f"End({H.name})")
        _END_CACHE[key] = m
    return m


def build_v(P: Pairing) -> DualityV:
    V = DualityV(P)
    V.element  # noqa: B018  (raises on a degenerate pairing)
    return V


def v_inverse(V: DualityV) -> Element:
    s1, s2 = V.inverse_S1(), V.inverse_S2()
    if s1 != s2:
        raise ArithmeticError("(S⊗ι)V and (ι⊗S)V differ")
    return s1


# --- suites ------------------------------------------------------------------------

def duality_suite(V: DualityV) -> Report:
    P, A, B = V.P, V.A.alg, V.B.alg
    f = V.field
    ea, eb = A.basis_elements(), B.basis_elements()
    rep = Report("duality-v", V.A.name)
    v = V.element

    def w(*xs):
        return lambda: ", ".join(str(x) for x in xs)

    rep.verify("definition.pairing", ((f.eq(V.pair_with(a, b), P.pair(a, b)), w(a, b)) for a in ea for b in eb))
    rep.add("counit.left_leg", slice_leg(v, 0, V.B.counit_f) == A.one(), "(ε⊗ι)V != 1")
    rep.add("counit.right_leg", slice_leg(v, 1, V.A.counit_f) == B.one(), "(ι⊗ε)V != 1")
    # slice forms agree with the element and with each other
    rep.verify("slice.left", ((V.left_slice(b, a) == v * tensor(b, a), w(b, a)) for b in eb for a in ea))
    rep.verify("slice.right", ((V.right_slice(b, a) == tensor(b, a) * v, w(b, a)) for b in eb for a in ea))
    rep.verify("slice.two_sided_consistency",
               ((V.right_slice(b1, a1) * tensor(b2, a2) == tensor(b1, a1) * V.left_slice(b2, a2), w(b1, a1, b2, a2))
                for b1, a1, b2, a2 in itertools.product(eb[:3], ea[:3], eb[:3], ea[:3])))
    # coproduct on either leg
    BAA = [B, A, A]
    BBA = [B, B, A]
    lhs1 = tensor_map([None, _delta_map(V.A)], v)
    rhs1 = leg_embed(v, (1, 2), 3, BAA) * leg_embed(v, (1, 3), 3, BAA)
    rep.add("coproduct_leg.id_delta", lhs1 == rhs1, f"(ι⊗Δ)V - V12 V13 = {lhs1 - rhs1}")
    lhs2 = tensor_map([_delta_map(V.B), None], v)
    rhs2 = leg_embed(v, (1, 3), 3, BBA) * leg_embed(v, (2, 3), 3, BBA)
    rep.add("coproduct_leg.delta_id", lhs2 == rhs2, f"(Δ⊗ι)V - V13 V23 = {lhs2 - rhs2}")
    # inverse
    s1, s2 = V.inverse_S1(), V.inverse_S2()
    rep.add("inverse.S_legs_agree", s1 == s2, f"(S⊗ι)V = {s1}, (ι⊗S)V = {s2}")
    one = V.BA.one()
    rep.add("inverse.right", v * s1 == one, f"V V⁻¹ = {v * s1}")
    rep.add("inverse.left", s1 * v == one, f"V⁻¹ V = {s1 * v}")
    # intertwiners realized in End(A)⊗A and B⊗End(A)
    E = V.End
    EA = TensorAlgebra([E, A])
    BE = TensorAlgebra([B, E])
    v_EA = _realize_leg(v, 0, V.pi_B, EA)
    vinv_EA = _realize_leg(s1, 0, V.pi_B, EA)
    v_BE = _realize_leg(v, 1, V.pi_A, BE)

    def inter_a():
        for a in ea:
            da = _realize_tensor(V.A.delta(a), [V.pi_A, None], EA)
            rhs = v_EA * tensor(V.pi_A(a), A.one())
            yield da * v_EA == rhs, w(a)
    rep.verify("intertwiner.delta_a", inter_a())

    def inter_b():
        for b in eb:
            db = _realize_tensor(V.B.delta(b), [None, V.pi_B], BE)
            yield v_BE * db == tensor(B.one(), V.pi_B(b)) * v_BE, w(b)
    rep.verify("intertwiner.delta_b", inter_b())
    rep.verify("conjugation.delta_a",
               ((_realize_tensor(V.A.delta(a), [V.pi_A, None], EA)
                 == v_EA * tensor(V.pi_A(a), A.one()) * vinv_EA, w(a)) for a in ea))
    # V acts as T
    AA = [tensor(x, y) for x in ea for y in ea]
    rep.verify("t_map.action_equals_delta_right",
               ((V.act_as_t(t) == V.A.t_map(t), w(t)) for t in AA))
    rep.verify("t_map.inverse_roundtrip",
               ((V.t_inverse(V.act_as_t(t)) == t and V.act_as_t(V.t_inverse(t)) == t, w(t)) for t in AA))
    rep.verify("t_map.inverse_matches_slices", ((V.t_inverse(t) == V.A.t_inverse(t), w(t)) for t in AA))
    return rep


def _delta_map(H: HopfAlgebra):
    from .algebra import LinearMap
    return LinearMap(H.alg, H.AA, lambda i: H.delta(H.alg.basis_element(i)), "Δ")


def _realize_leg(t: Element, leg: int, pi, target: TensorAlgebra) -> Element:
    maps = [None, None]
    maps[leg] = pi
    return _realize_tensor(t, maps, target)


def _realize_tensor(t: Element, maps, target: TensorAlgebra) -> Element:
    acc = target.zero()
    for c, xs in legs(t):
        parts = [m(x) if m is not None else x for m, x in zip(maps, xs)]
        acc = acc + tensor(*parts).scale(c)
    return acc


def pentagon_check(V: DualityV) -> Report:
    """V12 V13 V23 = V23 V12 inside B⊗End(A)⊗A."""
    A, B = V.A.alg, V.B.alg
    E = V.End
    rep = Report("pentagon", V.A.name)
    v = V.element
    amb = TensorAlgebra([B, E, A])
    v12 = amb.zero()
    v13 = amb.zero()
    v23 = amb.zero()
    for c, (b, a) in legs(v):
        v12 = v12 + tensor(b, V.pi_A(a), A.one()).scale(c)
        v13 = v13 + tensor(b, E.one(), a).scale(c)
        v23 = v23 + tensor(B.one(), V.pi_B(b), a).scale(c)
    lhs = v12 * v13 * v23
    rhs = v23 * v12
    rep.add("pentagon.element_level", lhs == rhs, f"difference {lhs - rhs}", cases=len(amb.basis))
    rep.derived["realized_ambient_dimension"] = len(amb.basis)
    return rep


def t12(H: HopfAlgebra, t: Element) -> Element:
    acc = None
    for c, (x, y, z) in legs(t):
        term = tensor(H.delta_right(x, y), z).scale(c)
        acc = term if acc is None else acc + term
    return acc if acc is not None else t


def t23(H: HopfAlgebra, t: Element) -> Element:
    acc = None
    for c, (x, y, z) in legs(t):
        term = tensor(x, H.delta_right(y, z)).scale(c)
        acc = term if acc is None else acc + term
    return acc if acc is not None else t


def t13(H: HopfAlgebra, t: Element) -> Element:
    acc = None
    for c, (x, y, z) in legs(t):
        for w, (p, q) in legs(H.delta_right(x, z)):
            term = tensor(p, y, q).scale(c * w)
            acc = term if acc is None else acc + term
    return acc if acc is not None else t.alg.zero()


def pentagon_check_t(H: HopfAlgebra, span=None) -> Report:
    """T23 T12 = T12 T13 T23 on basis triples (or a window)."""
    span = list(span) if span is not None else H.spanning()
    rep = Report("pentagon", H.name)

    def cases():
        for x, y, z in itertools.product(span, span, span):
            t = tensor(x, y, z)
            lhs = t23(H, t12(H, t))
            rhs = t12(H, t13(H, t23(H, t)))
            yield lhs == rhs, lambda x=x, y=y, z=z: f"({x}, {y}, {z})"
    rep.verify("pentagon.operator_level", cases())
    return rep
