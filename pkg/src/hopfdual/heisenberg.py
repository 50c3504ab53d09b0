"""The Heisenberg algebra of a pairing: the space A⊗B with the product

    (a⊗b)(a′⊗b′) = Σ ⟨a′₍₂₎, b₍₁₎⟩ aa′₍₁₎ ⊗ b₍₂₎b′,

its action on A by (a⊗b)▷x = a(b▷x), the flip R and its inverse, and the
realization by rank-one operators on A.

A pairing here is anything with ``A``, ``B`` (HopfAlgebra), ``pair(a, b)`` and
``act_left_B(b, a)``; B must supply its full coproduct.
"""

from __future__ import annotations

import itertools
import random

from . import linalg
from .algebra import Algebra, Element, MatrixAlgebra, TensorAlgebra, legs, tensor
from .report import Report


class HeisenbergAlgebra:
    def __init__(self, pairing):
        self.P = pairing
        self.A = pairing.A
        self.B = pairing.B
        self.field = self.A.field
        self.AB = TensorAlgebra([self.A.alg, self.B.alg])
        basis = self.AB.basis            # None for infinite pairs
        unit = None
        if self.A.alg.unital and self.B.alg.unital:
            unit = tensor(self.A.alg.one(), self.B.alg.one()).coeffs
        self.alg = Algebra(f"H({self.A.name})", self.field, self._mult_basis, basis, unit)
        self.alg._labels = _PairLabels(self.AB)
        self._ops: dict = {}

    # --- flip R and its inverse ------------------------------------------------
    def r_map(self, t: Element) -> Element:
        """R(a⊗b) = Σ ⟨a₍₂₎, b₍₁₎⟩ a₍₁₎⊗b₍₂₎ = Σ (b₍₁₎▷a)⊗b₍₂₎."""
        acc = self.AB.zero()
        for c, (a, b) in legs(t):
            for w, (u, v) in legs(self.B.delta(b)):
                acc = acc + tensor(self.P.act_left_B(u, a), v).scale(c * w)
        return acc

    def r_inv(self, t: Element) -> Element:
        """R⁻¹(a⊗b) = Σ ⟨S⁻¹(a₍₂₎), b₍₁₎⟩ a₍₁₎⊗b₍₂₎ = Σ (S⁻¹(b₍₁₎)▷a)⊗b₍₂₎."""
        acc = self.AB.zero()
        for c, (a, b) in legs(t):
            for w, (u, v) in legs(self.B.delta(b)):
                acc = acc + tensor(self.P.act_left_B(self.B.Sinv(u), a), v).scale(c * w)
        return acc

    # --- product ----------------------------------------------------------------
    def _mult_basis(self, k1, k2) -> dict:
        A, B = self.A.alg, self.B.alg
        a, b = A.basis_element(k1[0]), B.basis_element(k1[1])
        a2, b2 = A.basis_element(k2[0]), B.basis_element(k2[1])
        acc = self.AB.zero()
        for c, (p, q) in legs(self.r_map(tensor(a2, b))):
            acc = acc + tensor(a * p, q * b2).scale(c)
        return acc.coeffs

    def element(self, t: Element) -> Element:
        """View an A⊗B tensor as a Heisenberg element."""
        return Element(self.alg, dict(t.coeffs))

    def heis_mul(self, u: Element, v: Element) -> Element:
        """Product of A⊗B tensors under the Heisenberg rule, returned as an A⊗B tensor."""
        prod = self.element(u) * self.element(v)
        return Element(self.AB, prod.coeffs)

    def j_A(self, a: Element) -> Element:
        return self.element(tensor(a, self.B.alg.one()))

    def j_B(self, b: Element) -> Element:
        return self.element(tensor(self.A.alg.one(), b))

    # --- action on A -----------------------------------------------------------------
    def heis_act(self, u: Element, x: Element) -> Element:
        """(a⊗b)▷x = a(b▷x)."""
        acc = self.A.alg.zero()
        for c, (a, b) in legs(Element(self.AB, u.coeffs)):
            acc = acc + (a * self.P.act_left_B(b, x)).scale(c)
        return acc

    def operator(self, u: Element) -> list[list]:
        """Matrix of x ↦ u▷x in A's basis (column j is u▷e_j)."""
        A = self.A.alg
        key = tuple(sorted(u.coeffs.items(), key=lambda kv: kv[0]))
        m = self._ops.get(key)
        if m is None:
            cols = [self.heis_act(u, e).vector() for e in A.basis_elements()]
            m = linalg.transpose(cols)
            self._ops[key] = m
        return m

    def to_rank_one(self, t: Element) -> Element:
        """Σ aS(c₍₁₎)⊗φ(c₍₂₎·) in A⋄B, for a⊗b with b = φ(c·)."""
        out = self.AB.zero()
        P = self.P
        for w, (a, b) in legs(Element(self.AB, t.coeffs)):
            c = P.c_of_phi_left(b)
            for w2, (p, q) in legs(self.A.delta(c)):
                out = out + tensor(a * self.A.S(p), P.phi_left(q)).scale(w * w2)
        return out

    def rank_one_operator(self, t: Element) -> list[list]:
        """Matrix of x ↦ Σ aᵢ⟨x, bᵢ⟩ for t = Σ aᵢ⊗bᵢ."""
        A = self.A.alg
        f = self.field
        d = A.dim
        m = [[f.zero] * d for _ in range(d)]
        for c, (a, b) in legs(t):
            for j, x in enumerate(A.basis_elements()):
                s = self.P.pair(x, b)
                if f.is_zero(s):
                    continue
                for i, v in enumerate(a.vector()):
                    if not f.is_zero(v):
                        m[i][j] = m[i][j] + c * s * v
        return m

    def diamond(self, u: Element, v: Element) -> Element:
        """(a₁⊗b₁)⋄(a₂⊗b₂) = ⟨a₂, b₁⟩ a₁⊗b₂."""
        acc = self.AB.zero()
        for c1, (a1, b1) in legs(u):
            for c2, (a2, b2) in legs(v):
                acc = acc + tensor(a1, b2).scale(c1 * c2 * self.P.pair(a2, b1))
        return acc

    def realize(self, u: Element) -> Element:
        """π(u) as an element of End(A) (matrix units)."""
        M = MatrixAlgebra(self.A.alg.dim, self.field, f"End({self.A.name})")
        return M.from_matrix(self.operator(u))


class _PairLabels(dict):
    def __init__(self, AB):
        super().__init__()
        self.AB = AB

    def get(self, k, default=None):
        return self.AB.label(k)


def _random_element(alg: Algebra, rng: random.Random, terms: int = 3) -> Element:
    ks = rng.sample(list(alg.basis), min(terms, len(alg.basis)))
    return alg.element({k: rng.randint(-3, 3) or 1 for k in ks})


def heisenberg_suite(P, samples: int = 100, seed: int = 0, exhaustive_max_dim: int = 4) -> Report:
    """Associativity, module law, faithfulness, R round trips and the rank-one picture."""
    Hs = HeisenbergAlgebra(P)
    A, B = P.A.alg, P.B.alg
    f = Hs.field
    d = A.dim
    rep = Report("heisenberg", P.A.name)
    rng = random.Random(seed)
    hb = Hs.alg.basis_elements()
    ea, eb = A.basis_elements(), B.basis_elements()

    def w(*xs):
        return lambda: ", ".join(str(x) for x in xs)

    trip = [tuple(_random_element(Hs.alg, rng) for _ in range(3)) for _ in range(samples)]
    rep.verify("product.associative_sampled", (((u * v) * z == u * (v * z), w(u, v, z)) for u, v, z in trip))
    if d <= exhaustive_max_dim:
        rep.verify("product.associative_basis",
                   (((u * v) * z == u * (v * z), w(u, v, z)) for u, v, z in itertools.product(hb, hb, hb)))
    one = Hs.alg.one()
    rep.verify("product.unit", ((one * u == u and u * one == u, w(u)) for u in hb))
    # embeddings
    rep.verify("embedding.factorization",
               ((Hs.j_A(a) * Hs.j_B(b) == Hs.element(tensor(a, b)), w(a, b)) for a in ea for b in eb))
    rep.verify("embedding.j_A_homomorphism",
               ((Hs.j_A(a) * Hs.j_A(a2) == Hs.j_A(a * a2), w(a, a2)) for a in ea for a2 in ea))
    rep.verify("embedding.j_B_homomorphism",
               ((Hs.j_B(b) * Hs.j_B(b2) == Hs.j_B(b * b2), w(b, b2)) for b in eb for b2 in eb))
    # commutation rule j_B(b) j_A(a) = R(a⊗b)
    rep.verify("commutation.abstract",
               ((Hs.j_B(b) * Hs.j_A(a) == Hs.element(Hs.r_map(tensor(a, b))), w(a, b))
                for a in ea for b in eb))
    # R round trips
    ab = [tensor(a, b) for a in ea for b in eb]
    rep.verify("r_map.inverse_left", ((Hs.r_inv(Hs.r_map(t)) == t, w(t)) for t in ab))
    rep.verify("r_map.inverse_right", ((Hs.r_map(Hs.r_inv(t)) == t, w(t)) for t in ab))
    # module action and faithfulness
    rep.verify("action.module_law",
               ((linalg.mat_equal(f, Hs.operator(u * v), linalg.matmul(f, Hs.operator(u), Hs.operator(v))), w(u, v))
                for u in hb for v in hb))
    rep.add("action.unit", linalg.mat_equal(f, Hs.operator(one), linalg.identity(f, d)), "1 does not act as identity")
    flat = [sum(Hs.operator(u), []) for u in hb]
    r = linalg.rank(f, flat)
    rep.add("action.faithful", r == len(hb), f"representation kernel has dimension {len(hb) - r}")
    rep.derived["realized_dimension"] = r
    rep.add("realized.full_matrix_algebra", r == d * d, f"realized dimension {r} != {d * d}")
    rep.verify("commutation.realized",
               ((linalg.mat_equal(f, linalg.matmul(f, Hs.operator(Hs.j_B(b)), Hs.operator(Hs.j_A(a))),
                                   Hs.operator(Hs.element(Hs.r_map(tensor(a, b))))), w(a, b)) for a in ea for b in eb))
    # rank-one picture
    ro = {k: Hs.to_rank_one(Element(Hs.AB, u.coeffs)) for k, u in zip(Hs.alg.basis, hb)}
    rep.verify("rank_one.matches_action",
               ((linalg.mat_equal(f, Hs.rank_one_operator(ro[k]), Hs.operator(u)), w(u)) for k, u in zip(Hs.alg.basis, hb)))
    rep.verify("rank_one.multiplicative",
               ((Hs.to_rank_one(Element(Hs.AB, (u * v).coeffs)) == Hs.diamond(ro[k], ro[l]), w(u, v))
                for (k, u), (l, v) in itertools.product(zip(Hs.alg.basis, hb), repeat=2)))
    rep.verify("diamond.realizes_composition",
               ((linalg.mat_equal(f, Hs.rank_one_operator(Hs.diamond(ro[k], ro[l])),
                                   linalg.matmul(f, Hs.rank_one_operator(ro[k]), Hs.rank_one_operator(ro[l]))), w(k, l))
                for k, l in itertools.product(list(ro)[:min(len(ro), 16)], repeat=2)))
    return rep


def heisenberg_window_suite(couple, radius: int = 2) -> Report:
    """Module-action law with finite supports for an infinite paired couple."""
    Hs = HeisenbergAlgebra(couple)
    A, B = couple.A.alg, couple.B.alg
    rep = Report("heisenberg", couple.A.name)
    us = [tensor(A.basis_element(k), B.basis_element(n))
          for k in range(-radius, radius + 1) for n in range(-radius, radius + 1)]
    xs = [A.basis_element(k) for k in range(-radius - 1, radius + 2)]

    def cases():
        for u in us:
            for v in us:
                uv = Hs.heis_mul(u, v)
                for x in xs:
                    lhs = Hs.heis_act(uv, x)
                    yield lhs == Hs.heis_act(u, Hs.heis_act(v, x)), lambda u=u, v=v, x=x: f"{u}, {v}, {x}"
    rep.verify("action.module_law_window", cases())
    rep.verify("r_map.inverse_window",
               ((Hs.r_inv(Hs.r_map(u)) == u and Hs.r_map(Hs.r_inv(u)) == u, str(u)) for u in us))
    rep.verify("action.finite_support", ((len(Hs.heis_act(u, x).coeffs) <= 1, str(u)) for u in us for x in xs))
    return rep
