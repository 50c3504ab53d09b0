"""Fourier transform A → B, x ↦ ψ(S(·)x), its inverse b ↦ φ̂(·b), the
alternative pair a ↦ φ(·a) / b ↦ ψ̂(S(·)b), convolution theorems and the
transformed canonical map.
"""

from __future__ import annotations

import itertools

from .algebra import Element, TensorAlgebra, legs, tensor, tensor_map
from .dual import Pairing
from .duality import DualityV
from .hopf import mul_legs
from .report import Report


class FourierPack:
    def __init__(self, P: Pairing, V: DualityV | None = None):
        self.P = P
        self.A, self.B = P.A, P.B
        self.V = V or DualityV(P)
        self.BB = TensorAlgebra([self.B.alg, self.B.alg])

    def fourier(self, x: Element) -> Element:
        psi, S = self.P.data_A.psi, self.A.S
        return self.P.functional_to_B(lambda e: psi(S(e) * x))

    def fourier_inv(self, b: Element) -> Element:
        phi_hat = self.P.data_B.phi
        Bal, A = self.B.alg, self.A.alg
        return A.element({i: phi_hat(Bal.basis_element(i) * b) for i in Bal.basis})

    def fourier_alt(self, a: Element) -> Element:
        phi = self.P.data_A.phi
        return self.P.functional_to_B(lambda e: phi(e * a))

    def fourier_alt_inv(self, b: Element) -> Element:
        psi_hat = self.P.data_B.psi
        Bal, A = self.B.alg, self.A.alg
        return A.element({i: psi_hat(self.B.S(Bal.basis_element(i)) * b) for i in Bal.basis})

    def fourier2(self, t: Element) -> Element:
        """(ℱ⊗ℱ) on A⊗A."""
        acc = self.BB.zero()
        for c, (x, y) in legs(t):
            acc = acc + tensor(self.fourier(x), self.fourier(y)).scale(c)
        return acc

    def w_map(self, t: Element) -> Element:
        """y⊗y′ ↦ Δ(y′)(y⊗1)."""
        acc = self.BB.zero()
        for c, (y, y2) in legs(t):
            acc = acc + self.B.delta_right1(y2, y).scale(c)
        return acc

    def w_inv(self, t: Element) -> Element:
        """y⊗y′ ↦ ((S⁻¹⊗ι)Δ(y′))(y⊗1)."""
        acc = self.BB.zero()
        for c, (y, y2) in legs(t):
            d = tensor_map([self.B.Sinv, None], self.B.delta(y2))
            acc = acc + mul_legs(d, [None, None], [y, None]).scale(c)
        return acc

    def transformed_canonical(self, t: Element) -> Element:
        """(ℱ⊗ℱ)(T(x⊗x′)) with T realized as the action of V."""
        return self.fourier2(self.V.act_as_t(t))


def fourier_suite(F: FourierPack) -> Report:
    P, A, B = F.P, F.A.alg, F.B.alg
    f = A.field
    ea, eb = A.basis_elements(), B.basis_elements()
    rep = Report("fourier", F.A.name)

    def w(*xs):
        return lambda: ", ".join(str(x) for x in xs)

    rep.verify("roundtrip.inverse_after_fourier", ((F.fourier_inv(F.fourier(x)) == x, w(x)) for x in ea))
    rep.verify("roundtrip.fourier_after_inverse", ((F.fourier(F.fourier_inv(b)) == b, w(b)) for b in eb))
    rep.verify("roundtrip.alt_inverse_after_alt", ((F.fourier_alt_inv(F.fourier_alt(a)) == a, w(a)) for a in ea))
    rep.verify("roundtrip.alt_after_alt_inverse", ((F.fourier_alt(F.fourier_alt_inv(b)) == b, w(b)) for b in eb))
    Sinv = F.A.Sinv
    rep.verify("convolution.multiplication",
               ((F.fourier(a * x) == P.act_right_A(F.fourier(x), Sinv(a)), w(a, x)) for a in ea for x in ea))
    rep.verify("convolution.action",
               ((F.fourier(P.act_left_B(b, x)) == b * F.fourier(x), w(b, x)) for b in eb for x in ea))
    pairs = [tensor(x, y) for x in ea for y in ea]
    rep.verify("canonical.transformed",
               ((F.transformed_canonical(t) == F.w_inv(F.fourier2(t)), w(t)) for t in pairs))
    bpairs = [tensor(y, y2) for y in eb for y2 in eb]
    rep.verify("w.map_after_inverse", ((F.w_map(F.w_inv(t)) == t, w(t)) for t in bpairs))
    rep.verify("w.inverse_after_map", ((F.w_inv(F.w_map(t)) == t, w(t)) for t in bpairs))
    psi_hat, phi = P.data_B.psi, P.data_A.phi
    rep.verify("plancherel.alt",
               ((f.eq(psi_hat(F.fourier_alt(a) * F.fourier_alt(a2)), phi(Sinv(a2) * a)), w(a, a2))
                for a, a2 in itertools.product(ea, ea)))
    return rep
