"""Coproduct in sliced form, counit, antipode and the axiom checker.

The coproduct of a multiplier Hopf algebra need not be an element of A⊗A, so
the primitive data are slice maps on basis labels:

    "R":  Δ(a)(1⊗b)      "L":  (b⊗1)Δ(a)
    "R1": Δ(a)(b⊗1)      "L2": (1⊗b)Δ(a)

A finite-dimensional builder may instead supply the full coproduct Δ(e_i),
from which all four slices follow.
"""

from __future__ import annotations

import itertools
from typing import Callable, Mapping, Sequence

from . import linalg
from .algebra import (Algebra, AlgebraMismatch, Element, Functional, LinearMap, TensorAlgebra,
                      check_nondegenerate, legs, local_unit, tensor, tensor_algebra)
from .report import Report


class NotCoveredError(ValueError):
    """Δ(a) was used without any covering factor and no full coproduct exists."""


class CoassociativityError(ArithmeticError):
    pass


SliceRule = Callable[[object, object], Mapping]


class HopfAlgebra:
    def __init__(self, alg: Algebra, counit: Functional, antipode: LinearMap,
                 antipode_inv: LinearMap | None = None,
                 coproduct: Callable[[object], Mapping] | None = None,
                 slices: Mapping[str, SliceRule] | None = None,
                 name: str | None = None, window: Sequence[Element] | None = None):
        if coproduct is None and not slices:
            raise ValueError("need a coproduct or slice maps")
        self.alg = alg
        self.name = name or alg.name
        self.field = alg.field
        self.counit_f = counit
        self.S = antipode
        if antipode_inv is None:
            antipode_inv = antipode.inverse("S^-1")
        self.Sinv = antipode_inv
        self._coproduct = coproduct
        self._slices = dict(slices or {})
        self._window = list(window) if window is not None else None
        self.AA = TensorAlgebra([alg, alg])
        self._cache: dict = {}
        # filled in by examples for paired couples and by dual construction
        self.meta: dict = {}

    def __repr__(self):
        return f"<HopfAlgebra {self.name}>"

    # --- basic maps ----------------------------------------------------------
    @property
    def finite_dim(self) -> bool:
        return self.alg.finite_dim

    @property
    def has_full_coproduct(self) -> bool:
        return self._coproduct is not None

    def counit(self, a: Element):
        return self.counit_f(a)

    def antipode(self, a: Element) -> Element:
        return self.S(a)

    def antipode_inv(self, a: Element) -> Element:
        return self.Sinv(a)

    def spanning(self) -> list[Element]:
        """Basis for finite algebras, the configured window otherwise."""
        if self._window is not None:
            return list(self._window)
        return self.alg.basis_elements()

    def with_window(self, window: Sequence[Element]) -> "HopfAlgebra":
        h = HopfAlgebra(self.alg, self.counit_f, self.S, self.Sinv, self._coproduct,
                        self._slices, self.name, window)
        h.meta = dict(self.meta)
        return h

    def _delta_basis(self, i) -> Element:
        key = ("Δ", i)
        r = self._cache.get(key)
        if r is None:
            r = self.AA.element(self._coproduct(i))
            self._cache[key] = r
        return r

    def delta(self, a: Element) -> Element:
        """Full Δ(a) ∈ A⊗A (only when the builder supplies it)."""
        self._own(a)
        if self._coproduct is None:
            raise NotCoveredError(f"Δ(a) is not an element of {self.AA.name}; use a slice")
        acc = self.AA.zero()
        for k, v in a.coeffs.items():
            acc = acc + self._delta_basis(k).scale(v)
        return acc

    def _own(self, *xs: Element) -> None:
        for x in xs:
            if x.alg is not self.alg:
                raise AlgebraMismatch(f"{x.alg.name} element given to {self.name}")

    def _slice(self, kind: str, a: Element, b: Element) -> Element:
        rule = self._slices[kind]
        acc: dict = {}
        for i, x in a.coeffs.items():
            for j, y in b.coeffs.items():
                key = (kind, i, j)
                r = self._cache.get(key)
                if r is None:
                    r = self.AA.element(rule(i, j))
                    self._cache[key] = r
                xy = x * y
                for k, v in r.coeffs.items():
                    acc[k] = acc[k] + xy * v if k in acc else xy * v
        return self.AA.element(acc)

    # --- sliced coproduct -------------------------------------------------------
    def delta_cover(self, a: Element, left: tuple = (None, None),
                    right: tuple = (None, None)) -> Element:
        """(x1⊗x2) Δ(a) (y1⊗y2); ``None`` entries stand for 1.

        At least one factor must cover the expression unless the builder gave a
        full coproduct.
        """
        self._own(a, *[z for z in left + right if z is not None])
        x1, x2 = left
        y1, y2 = right
        if self._coproduct is not None:
            t = self.delta(a)
            return mul_legs(t, [x1, x2], [y1, y2])
        if y2 is not None and "R" in self._slices:
            t = self._slice("R", a, y2)
            return mul_legs(t, [x1, x2], [y1, None])
        if x1 is not None and "L" in self._slices:
            t = self._slice("L", a, x1)
            return mul_legs(t, [None, x2], [y1, y2])
        if y1 is not None and "R1" in self._slices:
            t = self._slice("R1", a, y1)
            return mul_legs(t, [x1, x2], [None, y2])
        if x2 is not None and "L2" in self._slices:
            t = self._slice("L2", a, x2)
            return mul_legs(t, [x1, None], [y1, y2])
        raise NotCoveredError("Δ(a) needs a covering factor")

    def delta_right(self, a: Element, b: Element) -> Element:
        """Δ(a)(1⊗b)."""
        return self.delta_cover(a, right=(None, b))

    def delta_left(self, b: Element, a: Element) -> Element:
        """(b⊗1)Δ(a)."""
        return self.delta_cover(a, left=(b, None))

    def delta_right1(self, a: Element, b: Element) -> Element:
        """Δ(a)(b⊗1)."""
        return self.delta_cover(a, right=(b, None))

    def delta_left2(self, b: Element, a: Element) -> Element:
        """(1⊗b)Δ(a)."""
        return self.delta_cover(a, left=(None, b))

    def t_map(self, t: Element) -> Element:
        """Canonical map T(x⊗x′) = Δ(x)(1⊗x′), extended linearly."""
        acc = self.AA.zero()
        for c, (x, y) in legs(t):
            acc = acc + self.delta_right(x, y).scale(c)
        return acc

    def t_inverse(self, t: Element) -> Element:
        """T⁻¹(x⊗y) = Σ x₍₁₎⊗S(x₍₂₎)y = (ι⊗S)((1⊗S⁻¹y)Δ(x))."""
        acc = self.AA.zero()
        for c, (x, y) in legs(t):
            u = self.delta_left2(self.antipode_inv(y), x)
            acc = acc + apply_legs(u, [None, self.S]).scale(c)
        return acc

    def delta2_slices(self, a: Element, b: Element, c: Element) -> Element:
        """Δ⁽²⁾(a)(1⊗b⊗c) through both association orders; they must agree."""
        A3 = tensor_algebra(self.alg, self.alg, self.alg)
        # (Δ⊗ι)(Δ(a)(1⊗c)) (1⊗b⊗1)
        first = A3.zero()
        for w, (p, q) in legs(self.delta_right(a, c)):
            first = first + tensor(self.delta_right(p, b), q).scale(w)
        # (ι⊗Δ)Δ(a) (1⊗b⊗c)
        second = A3.zero()
        if self._coproduct is not None:
            for w, (r, s) in legs(self.delta(a)):
                second = second + tensor(r, self.delta_cover(s, right=(b, c))).scale(w)
        else:
            # 1⊗b⊗c = Σ 1⊗Δ(u)(1⊗v) with u⊗v = T⁻¹(b⊗c)
            for w, (u, v) in legs(self.t_inverse(tensor(b, c))):
                for w2, (r, s) in legs(self.delta_right(a, u)):
                    second = second + tensor(r, self.delta_right(s, v)).scale(w * w2)
        if first != second:
            raise CoassociativityError(f"Δ⁽²⁾({a})(1⊗{b}⊗{c}): {first} != {second}")
        return first

    def sweedler(self, t: Element) -> list[tuple[Element, Element]]:
        return sweedler(t)

    def local_unit(self, elems: Sequence[Element]) -> Element:
        return local_unit(elems)


def mul_legs(t: Element, left: Sequence, right: Sequence) -> Element:
    """(x1⊗x2⊗...) t (y1⊗y2⊗...) with ``None`` meaning no factor on that leg."""
    factors = t.alg.factors
    acc: dict = {}
    for k, v in t.coeffs.items():
        partial: dict = {(): v}
        for p, x in enumerate(k):
            e = factors[p].basis_element(x)
            if left[p] is not None:
                e = left[p] * e
            if right[p] is not None:
                e = e * right[p]
            partial = {kk + (q,): c * w for kk, c in partial.items() for q, w in e.coeffs.items()}
            if not partial:
                break
        for kk, c in partial.items():
            acc[kk] = acc[kk] + c if kk in acc else c
    return t.alg.element(acc)


def apply_legs(t: Element, maps: Sequence[LinearMap | None]) -> Element:
    from .algebra import tensor_map
    return tensor_map(maps, t)


def sweedler(t: Element) -> list[tuple[Element, Element]]:
    """Σ pᵢ⊗qᵢ grouped by the first-leg basis label of the sparse support."""
    A, B = t.alg.factors
    groups: dict = {}
    for (i, j), v in t.coeffs.items():
        groups.setdefault(i, {})[j] = v
    return [(A.basis_element(i), B.element(groups[i])) for i in sorted(groups)]


def reassemble(pairs: Sequence[tuple[Element, Element]], alg: TensorAlgebra) -> Element:
    acc = alg.zero()
    for p, q in pairs:
        acc = acc + tensor(p, q)
    return acc


def slice_pair(t: Element, leg: int, omega) -> Element:
    from .algebra import slice_leg
    return slice_leg(t, leg, omega)


def multiply_pair(t: Element, left_map=None, right_map=None) -> Element:
    """Σ f(pᵢ) g(qᵢ) for t = Σ pᵢ⊗qᵢ."""
    acc = None
    for c, (p, q) in legs(t):
        pp = left_map(p) if left_map else p
        qq = right_map(q) if right_map else q
        term = (pp * qq).scale(c)
        acc = term if acc is None else acc + term
    if acc is None:
        return t.alg.factors[0].zero()
    return acc


# --- axiom checker -------------------------------------------------------------

def _pairs(span):
    return itertools.product(span, span)


def check_hopf_axioms(H: HopfAlgebra, window: Sequence[Element] | None = None) -> Report:
    """Sliced multiplier Hopf algebra axioms over all basis pairs (or a window)."""
    span = list(window) if window is not None else H.spanning()
    alg = H.alg
    eps = H.counit
    S, Sinv = H.S, H.Sinv
    rep = Report("axioms", H.name)

    rep.verify("algebra.associativity",
               (((a * b) * c == a * (b * c), lambda a=a, b=b, c=c: f"({a}, {b}, {c})")
                for a, b, c in itertools.product(span, span, span)))
    if alg.finite_dim and window is None:
        rep.extend(check_nondegenerate(alg), "algebra")

    def local_units():
        for a in span:
            try:
                e = H.local_unit([a])
                yield e * a == a and a * e == a, str(a)
            except Exception as exc:  # solver failure is a violated precondition
                yield False, f"{a}: {exc}"
    rep.verify("algebra.local_units", local_units())

    # Δ(ab)(1⊗c) = Δ(a)Δ(b)(1⊗c)
    def homomorphism():
        for a, b in _pairs(span):
            for c in span:
                lhs = H.delta_right(a * b, c)
                rhs = H.AA.zero()
                for w, (p, q) in legs(H.delta_right(b, c)):
                    rhs = rhs + H.delta_cover(a, right=(p, q)).scale(w)
                yield lhs == rhs, lambda a=a, b=b, c=c: f"a={a}, b={b}, c={c}"
    rep.verify("coproduct.homomorphism", homomorphism())

    def coassoc():
        for a, b, c in itertools.product(span, span, span):
            try:
                H.delta2_slices(a, b, c)
                yield True, ""
            except CoassociativityError as exc:
                yield False, str(exc)
    rep.verify("coproduct.coassociativity", coassoc())

    from .algebra import slice_leg
    eps_f = H.counit_f

    def counit_law(kind):
        for a, b in _pairs(span):
            if kind == "left":      # (ε⊗ι)(Δ(a)(1⊗b)) = ab
                lhs, rhs = slice_leg(H.delta_right(a, b), 0, eps_f), a * b
            elif kind == "right":   # (ι⊗ε)((b⊗1)Δ(a)) = ba
                lhs, rhs = slice_leg(H.delta_left(b, a), 1, eps_f), b * a
            elif kind == "left1":   # (ι⊗ε)(Δ(a)(b⊗1)) = ab
                lhs, rhs = slice_leg(H.delta_right1(a, b), 1, eps_f), a * b
            else:                   # (ε⊗ι)((1⊗b)Δ(a)) = ba
                lhs, rhs = slice_leg(H.delta_left2(b, a), 0, eps_f), b * a
            yield lhs == rhs, lambda a=a, b=b, lhs=lhs, rhs=rhs: f"a={a}, b={b}: {lhs} != {rhs}"
    rep.verify("counit.left", counit_law("left"))
    rep.verify("counit.right", counit_law("right"))
    rep.verify("counit.left_mirror", counit_law("left1"))
    rep.verify("counit.right_mirror", counit_law("right1"))
    rep.verify("counit.multiplicative",
               ((H.field.eq(eps(a * b), eps(a) * eps(b)), lambda a=a, b=b: f"a={a}, b={b}")
                for a, b in _pairs(span)))

    def antipode_law(kind):
        for a, b in _pairs(span):
            if kind == "left":   # m(S⊗ι)(Δ(a)(1⊗b)) = ε(a)b
                lhs = multiply_pair(H.delta_right(a, b), left_map=S)
            else:                # m(ι⊗S)((b⊗1)Δ(a)) = ε(a)b
                lhs = multiply_pair(H.delta_left(b, a), right_map=S)
            rhs = b.scale(eps(a))
            yield lhs == rhs, lambda a=a, b=b: f"(a={a}, b={b})"
    rep.verify("antipode.left", antipode_law("left"))
    rep.verify("antipode.right", antipode_law("right"))
    rep.verify("antipode.anti_multiplicative",
               ((S(a * b) == S(b) * S(a), lambda a=a, b=b: f"a={a}, b={b}")
                for a, b in _pairs(span)))
    rep.verify("antipode.bijective",
               ((S(Sinv(a)) == a and Sinv(S(a)) == a, lambda a=a: str(a)) for a in span))

    # surjectivity of the canonical maps
    if alg.finite_dim and window is None:
        d = alg.dim
        for nm, fn in (("right", H.delta_right), ("left", lambda a, b: H.delta_left(b, a))):
            rows = [fn(a, b).vector() for a, b in _pairs(span)]
            r = linalg.rank(H.field, rows)
            rep.add(f"coproduct.surjective_{nm}", r == d * d, f"rank {r} < {d * d}", cases=len(rows))
    else:
        def t_roundtrip():
            for a, b in _pairs(span):
                t = tensor(a, b)
                ok = H.t_map(H.t_inverse(t)) == t and H.t_inverse(H.t_map(t)) == t
                yield ok, lambda a=a, b=b: f"{a}⊗{b}"
        rep.verify("coproduct.surjective_roundtrip", t_roundtrip())
    return rep


def with_antipode(H: HopfAlgebra, S: LinearMap, Sinv: LinearMap | None = None) -> HopfAlgebra:
    """Copy of H with a replaced antipode (for negative controls)."""
    h = HopfAlgebra(H.alg, H.counit_f, S, Sinv if Sinv is not None else S, H._coproduct,
                    H._slices, H.name + "[S replaced]", H._window)
    h.meta = dict(H.meta)
    return h
