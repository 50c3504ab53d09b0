"""Non-degenerate algebras given by structure maps, sparse elements, tensor
products, leg numbering and multipliers.

An :class:`Algebra` is described by a product on basis labels
``mult(i, j) -> {k: coeff}``.  Finite-dimensional algebras carry a basis list;
infinite ones (such as finitely supported functions on Z) carry none, and every
operation that would need to enumerate the basis refuses to run on them.
"""

from __future__ import annotations

import itertools
from typing import Any, Callable, Hashable, Iterable, Mapping, Sequence

from . import linalg
from .report import Report
from .scalars import Field

BasisId = Hashable


class AlgebraMismatch(ValueError):
    pass


class NotUnitalError(ValueError):
    """An operation needed the unit of a non-unital algebra."""


class InfiniteDimensionalError(ValueError):
    """An operation needed to enumerate the basis of an infinite algebra."""


class MultiplierError(ValueError):
    pass


class LocalUnitError(ArithmeticError):
    pass


class Algebra:
    def __init__(self, name: str, field: Field, mult: Callable[[BasisId, BasisId], Mapping],
                 basis: Sequence[BasisId] | None = None, unit: Mapping | None = None,
                 labels: Mapping[BasisId, str] | None = None,
                 local_unit_rule: Callable[[list["Element"]], "Element"] | None = None):
        self.name = name
        self.field = field
        self._mult = mult
        self.basis = list(basis) if basis is not None else None
        self._labels = dict(labels) if labels else {}
        self._unit = None if unit is None else self._canon(unit)
        self.local_unit_rule = local_unit_rule
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"<Algebra {self.name}>"

    # --- structure ---------------------------------------------------------
    @property
    def finite_dim(self) -> bool:
        return self.basis is not None

    @property
    def unital(self) -> bool:
        return self._unit is not None

    @property
    def dim(self) -> int:
        self.require_finite()
        return len(self.basis)

    def require_finite(self) -> None:
        if self.basis is None:
            raise InfiniteDimensionalError(f"{self.name} has no finite basis")

    def label(self, i: BasisId) -> str:
        return self._labels.get(i, str(i))

    def index(self, i: BasisId) -> int:
        if "index" not in self._cache:
            self._cache["index"] = {b: n for n, b in enumerate(self.basis)}
        return self._cache["index"][i]

    def mult_basis(self, i: BasisId, j: BasisId) -> dict:
        key = (i, j)
        c = self._cache.get(key)
        if c is None:
            c = self._canon(self._mult(i, j))
            self._cache[key] = c
        return c

    def _canon(self, coeffs: Mapping) -> dict:
        f = self.field
        out = {}
        for k, v in coeffs.items():
            v = f.coerce(v)
            if not f.is_zero(v):
                out[k] = v
        return out

    # --- elements -------------------------------------------------------------
    def element(self, coeffs: Mapping | None = None) -> "Element":
        return Element(self, self._canon(coeffs or {}))

    def basis_element(self, i: BasisId) -> "Element":
        return Element(self, {i: self.field.one})

    def basis_elements(self) -> list["Element"]:
        self.require_finite()
        return [self.basis_element(i) for i in self.basis]

    def zero(self) -> "Element":
        return Element(self, {})

    def one(self) -> "Element":
        if self._unit is None:
            raise NotUnitalError(f"{self.name} is not unital")
        return Element(self, dict(self._unit))

    def from_vector(self, vec: Sequence) -> "Element":
        self.require_finite()
        return self.element(dict(zip(self.basis, vec)))

    def multiply(self, a: "Element", b: "Element") -> "Element":
        if a.alg is not self or b.alg is not self:
            raise AlgebraMismatch(f"cannot multiply {a.alg.name} by {b.alg.name} in {self.name}")
        f = self.field
        acc: dict = {}
        for i, x in a.coeffs.items():
            for j, y in b.coeffs.items():
                xy = x * y
                for k, z in self.mult_basis(i, j).items():
                    acc[k] = acc[k] + xy * z if k in acc else xy * z
        return Element(self, {k: v for k, v in acc.items() if not f.is_zero(v)})

    def structure_matrix_left(self, a: "Element") -> list[list]:
        """Matrix of x -> a x in the basis (column j is a*e_j)."""
        cols = [(a * self.basis_element(j)).vector() for j in self.basis]
        return linalg.transpose(cols)


class TensorAlgebra(Algebra):
    """Tensor product of algebras; basis labels are tuples, one entry per leg."""

    _instances: dict = {}

    def __new__(cls, factors: Sequence[Algebra]):
        key = tuple(id(f) for f in factors)
        inst = cls._instances.get(key)
        if inst is not None and inst.factors == tuple(factors):
            return inst
        inst = super().__new__(cls)
        inst._init(tuple(factors))
        cls._instances[key] = inst
        return inst

    def __init__(self, factors):  # state set up in __new__
        pass

    def _init(self, factors: tuple[Algebra, ...]) -> None:
        if len(factors) < 2:
            raise ValueError("tensor product needs at least two factors")
        field = factors[0].field
        if any(f.field is not field and f.field != field for f in factors):
            raise AlgebraMismatch("tensor factors over different fields")
        self.factors = factors
        basis = None
        if all(f.finite_dim for f in factors):
            basis = list(itertools.product(*(f.basis for f in factors)))
        unit = None
        if all(f.unital for f in factors):
            unit = _tensor_coeffs([f.one().coeffs for f in factors])
        Algebra.__init__(self, "⊗".join(f.name for f in factors), field, self._tmult, basis, unit)

    def _tmult(self, k1: tuple, k2: tuple) -> dict:
        return _tensor_coeffs([f.mult_basis(x, y) for f, x, y in zip(self.factors, k1, k2)])

    @property
    def arity(self) -> int:
        return len(self.factors)

    def label(self, k: tuple) -> str:
        return "⊗".join(f.label(x) for f, x in zip(self.factors, k))


def _tensor_coeffs(parts: list[Mapping]) -> dict:
    acc: dict = {(): 1}
    for part in parts:
        nxt = {}
        for k, v in acc.items():
            for j, w in part.items():
                nxt[k + (j,)] = w * v
        acc = nxt
    return acc


class MatrixAlgebra(Algebra):
    """Full matrix algebra End(V) with matrix units E_ij as basis."""

    def __init__(self, n: int, field: Field, name: str | None = None):
        basis = [(i, j) for i in range(n) for j in range(n)]
        unit = {(i, i): 1 for i in range(n)}
        super().__init__(name or f"M{n}", field, self._mm, basis, unit,
                         labels={(i, j): f"E{i}{j}" for i, j in basis})
        self.n = n

    @staticmethod
    def _mm(a, b):
        return {(a[0], b[1]): 1} if a[1] == b[0] else {}

    def from_matrix(self, m: Sequence[Sequence]) -> "Element":
        return self.element({(i, j): m[i][j] for i in range(self.n) for j in range(self.n)
                             if not self.field.is_zero(self.field.coerce(m[i][j]))})

    def to_matrix(self, a: "Element") -> list[list]:
        f = self.field
        m = [[f.zero] * self.n for _ in range(self.n)]
        for (i, j), v in a.coeffs.items():
            m[i][j] = v
        return m


class Element:
    """Finite-support linear combination of basis labels, owned by an algebra."""

    __slots__ = ("alg", "coeffs")

    def __init__(self, alg: Algebra, coeffs: dict):
        self.alg = alg
        self.coeffs = coeffs

    @property
    def field(self) -> Field:
        return self.alg.field

    def coeff(self, k: BasisId):
        return self.coeffs.get(k, self.alg.field.zero)

    def support(self) -> list:
        return sorted(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    def vector(self) -> list:
        f = self.alg.field
        return [self.coeffs.get(i, f.zero) for i in self.alg.basis]

    def _check(self, o: "Element") -> None:
        if o.alg is not self.alg:
            raise AlgebraMismatch(f"{self.alg.name} vs {o.alg.name}")

    def __add__(self, o):
        if not isinstance(o, Element):
            return NotImplemented
        self._check(o)
        f = self.alg.field
        acc = dict(self.coeffs)
        for k, v in o.coeffs.items():
            if k in acc:
                s = acc[k] + v
                if f.is_zero(s):
                    del acc[k]
                else:
                    acc[k] = s
            else:
                acc[k] = v
        return Element(self.alg, acc)

    def __neg__(self):
        return Element(self.alg, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, o):
        if not isinstance(o, Element):
            return NotImplemented
        return self + (-o)

    def scale(self, c) -> "Element":
        f = self.alg.field
        c = f.coerce(c)
        if f.is_zero(c):
            return Element(self.alg, {})
        if f.exact and c == 1:
            return self
        out = {}
        for k, v in self.coeffs.items():
            vc = v * c
            if not f.is_zero(vc):
                out[k] = vc
        return Element(self.alg, out)

    def __mul__(self, o):
        if isinstance(o, Element):
            return self.alg.multiply(self, o)
        return self.scale(o)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, o):
        if not isinstance(o, Element):
            return NotImplemented
        if o.alg is not self.alg:
            return False
        if self.alg.field.exact:
            return self.coeffs == o.coeffs
        return (self - o).is_zero()

    __hash__ = None

    def __repr__(self):
        return f"Element({self.alg.name}: {self})"

    def __str__(self):
        return format_coeffs(self.alg, self.coeffs)

    def to_json(self) -> list:
        f = self.alg.field
        return [[_key_json(k), f.to_json(v)] for k, v in sorted(self.coeffs.items(), key=_sort_key)]


def _sort_key(item):
    return item[0]


def _key_json(k):
    return list(k) if isinstance(k, tuple) else k


def format_coeffs(alg: Algebra, coeffs: Mapping) -> str:
    from .scalars import fmt
    if not coeffs:
        return "0"
    parts = []
    for k in sorted(coeffs, key=lambda x: (str(type(x)), x)):
        v = coeffs[k]
        s = fmt(v)
        lbl = alg.label(k)
        if s == "1":
            parts.append(lbl)
        elif s == "-1":
            parts.append("-" + lbl)
        elif any(ch in s for ch in " +") or (s.count("-") > 1) or ("-" in s[1:]):
            parts.append(f"({s})*{lbl}")
        else:
            parts.append(f"{s}*{lbl}")
    return " + ".join(parts).replace("+ -", "- ")


# --- tensors and legs ----------------------------------------------------------

def tensor_algebra(*factors: Algebra) -> TensorAlgebra:
    flat: list[Algebra] = []
    for f in factors:
        flat.extend(f.factors if isinstance(f, TensorAlgebra) else (f,))
    return TensorAlgebra(flat)


def tensor(*elems: Element) -> Element:
    """a ⊗ b ⊗ ...; tensor factors are flattened."""
    alg = tensor_algebra(*(e.alg for e in elems))
    parts = []
    for e in elems:
        if isinstance(e.alg, TensorAlgebra):
            parts.append(e.coeffs)
        else:
            parts.append({(k,): v for k, v in e.coeffs.items()})
    acc: dict = {(): alg.field.one}
    for part in parts:
        nxt = {}
        for k, v in acc.items():
            for j, w in part.items():
                nxt[k + j] = v * w
        acc = nxt
    return alg.element(acc)


def tensor_sum(alg: TensorAlgebra, terms: Iterable[tuple[Any, Sequence[Element]]]) -> Element:
    """Σ c · x1⊗x2⊗... for (c, [x1, x2, ...]) in terms."""
    acc: dict = {}
    f = alg.field
    for c, xs in terms:
        c = f.coerce(c)
        if f.is_zero(c):
            continue
        partial: dict = {(): c}
        for x in xs:
            partial = {k + (j,): v * w for k, v in partial.items() for j, w in x.coeffs.items()}
        for k, v in partial.items():
            acc[k] = acc[k] + v if k in acc else v
    return alg.element(acc)


def legs(t: Element) -> Iterable[tuple[Any, tuple[Element, ...]]]:
    """Iterate a tensor as (coeff, (basis element per leg)) terms."""
    factors = t.alg.factors
    for k, v in t.coeffs.items():
        yield v, tuple(f.basis_element(x) for f, x in zip(factors, k))


def flip(t: Element) -> Element:
    if not isinstance(t.alg, TensorAlgebra) or t.alg.arity != 2:
        raise ValueError("flip needs a 2-leg tensor")
    alg = TensorAlgebra(t.alg.factors[::-1])
    return Element(alg, {(k[1], k[0]): v for k, v in t.coeffs.items()})


def permute_legs(t: Element, order: Sequence[int]) -> Element:
    """Reorder legs: leg p of the result is leg order[p] of ``t`` (0-based)."""
    alg = TensorAlgebra([t.alg.factors[i] for i in order])
    return Element(alg, {tuple(k[i] for i in order): v for k, v in t.coeffs.items()})


def leg_embed(t: Element, legs_: tuple[int, int], arity: int,
              ambient: Sequence[Algebra] | None = None) -> Element:
    """E_ij in the leg-numbering notation (1-based legs).

    ``ambient`` gives the algebra at every leg; by default legs carrying ``t``
    use its factors and the other legs repeat the first factor.  Unused legs get
    the unit, so their algebras must be unital.
    """
    if not isinstance(t.alg, TensorAlgebra) or t.alg.arity != 2:
        raise ValueError("leg_embed needs a 2-leg tensor")
    i, j = legs_
    if not (1 <= i <= arity and 1 <= j <= arity and i != j):
        raise ValueError(f"bad legs {legs_} for arity {arity}")
    if ambient is None:
        ambient = [t.alg.factors[0]] * arity
        ambient = list(ambient)
        ambient[i - 1] = t.alg.factors[0]
        ambient[j - 1] = t.alg.factors[1]
    ambient = list(ambient)
    if ambient[i - 1] is not t.alg.factors[0] or ambient[j - 1] is not t.alg.factors[1]:
        raise AlgebraMismatch("ambient legs do not match tensor factors")
    units = {}
    for p in range(arity):
        if p not in (i - 1, j - 1):
            if not ambient[p].unital:
                raise NotUnitalError(f"leg {p + 1} ({ambient[p].name}) has no unit; "
                                     "use the sliced form instead")
            units[p] = ambient[p].one().coeffs
    alg = TensorAlgebra(ambient)
    acc: dict = {}
    for (x, y), v in t.coeffs.items():
        partial: dict = {(): v}
        for p in range(arity):
            if p == i - 1:
                part = {x: 1}
            elif p == j - 1:
                part = {y: 1}
            else:
                part = units[p]
            partial = {k + (q,): c * w for k, c in partial.items() for q, w in part.items()}
        for k, c in partial.items():
            acc[k] = acc[k] + c if k in acc else c
    return alg.element(acc)


# --- linear maps and functionals ------------------------------------------

class LinearMap:
    """Linear map between algebras, given on basis labels."""

    def __init__(self, src: Algebra, dst: Algebra, on_basis: Callable[[BasisId], Element],
                 name: str = "f"):
        self.src = src
        self.dst = dst
        self._on_basis = on_basis
        self.name = name
        self._cache: dict = {}

    def on_basis(self, i: BasisId) -> Element:
        r = self._cache.get(i)
        if r is None:
            r = self._on_basis(i)
            if not isinstance(r, Element):
                r = self.dst.element(r)
            self._cache[i] = r
        return r

    def __call__(self, a: Element) -> Element:
        if a.alg is not self.src:
            raise AlgebraMismatch(f"{self.name} expects {self.src.name}, got {a.alg.name}")
        acc = self.dst.zero()
        for k, v in a.coeffs.items():
            acc = acc + self.on_basis(k).scale(v)
        return acc

    def __repr__(self):
        return f"<LinearMap {self.name}: {self.src.name} -> {self.dst.name}>"

    @classmethod
    def from_matrix(cls, src: Algebra, dst: Algebra, m: list[list], name: str = "f") -> "LinearMap":
        cols = {i: dst.from_vector([row[c] for row in m]) for c, i in enumerate(src.basis)}
        return cls(src, dst, cols.__getitem__, name)

    @classmethod
    def identity(cls, alg: Algebra) -> "LinearMap":
        return cls(alg, alg, alg.basis_element, "id")

    def matrix(self) -> list[list]:
        cols = [self.on_basis(i).vector() for i in self.src.basis]
        return linalg.transpose(cols)

    def inverse(self, name: str | None = None) -> "LinearMap":
        self.src.require_finite()
        m = linalg.inverse(self.src.field, self.matrix())
        return LinearMap.from_matrix(self.dst, self.src, m, name or f"{self.name}^-1")

    def __matmul__(self, other: "LinearMap") -> "LinearMap":
        if other.dst is not self.src:
            raise AlgebraMismatch("composition of incompatible maps")
        return LinearMap(other.src, self.dst, lambda i: self(other.on_basis(i)),
                         f"{self.name}∘{other.name}")

    def power(self, n: int) -> "LinearMap":
        if n < 0:
            return self.inverse().power(-n)
        out = LinearMap.identity(self.src)
        for _ in range(n):
            out = self @ out
        out.name = f"{self.name}^{n}"
        return out

    def equals_on(self, other: "LinearMap", ids: Iterable[BasisId]) -> BasisId | None:
        """First basis label where the maps differ, or None."""
        for i in ids:
            if self.on_basis(i) != other.on_basis(i):
                return i
        return None


def tensor_map(maps: Sequence[LinearMap | None], t: Element) -> Element:
    """(f1 ⊗ f2 ⊗ ...)(t); ``None`` stands for the identity on that leg."""
    factors = t.alg.factors
    dsts = [m.dst if m is not None else a for m, a in zip(maps, factors)]
    alg = tensor_algebra(*dsts)
    nested = [isinstance(d, TensorAlgebra) for d in dsts]
    acc: dict = {}
    for k, v in t.coeffs.items():
        partial: dict = {(): v}
        for m, x, nest in zip(maps, k, nested):
            part = {x: 1} if m is None else m.on_basis(x).coeffs
            partial = {kk + (q if nest else (q,)): c * w
                       for kk, c in partial.items() for q, w in part.items()}
        for kk, c in partial.items():
            acc[kk] = acc[kk] + c if kk in acc else c
    return alg.element(acc)


class Functional:
    """Linear functional given by its values on basis labels."""

    def __init__(self, alg: Algebra, values: Mapping | Callable[[BasisId], Any], name: str = "ω"):
        self.alg = alg
        self.name = name
        if callable(values):
            self._rule = values
            self._values = None
        else:
            self._values = {k: alg.field.coerce(v) for k, v in values.items()}
            self._rule = None

    def on_basis(self, i: BasisId):
        if self._values is not None:
            return self._values.get(i, self.alg.field.zero)
        return self.alg.field.coerce(self._rule(i))

    def __call__(self, a: Element):
        if a.alg is not self.alg:
            raise AlgebraMismatch(f"{self.name} lives on {self.alg.name}, got {a.alg.name}")
        f = self.alg.field
        acc = f.zero
        for k, v in a.coeffs.items():
            w = self.on_basis(k)
            if not f.is_zero(w):
                acc = acc + v * w
        return acc

    def vector(self) -> list:
        return [self.on_basis(i) for i in self.alg.basis]

    def scale(self, c) -> "Functional":
        c = self.alg.field.coerce(c)
        return Functional(self.alg, lambda i: self.on_basis(i) * c, self.name)

    def compose(self, m: LinearMap, name: str | None = None) -> "Functional":
        """ω∘m."""
        return Functional(m.src, lambda i: self(m.on_basis(i)), name or f"{self.name}∘{m.name}")

    def left_mult(self, c: Element, name: str | None = None) -> "Functional":
        """x -> ω(c x)."""
        return Functional(self.alg, lambda i: self(c * self.alg.basis_element(i)),
                          name or f"{self.name}({c}·)")

    def right_mult(self, c: Element, name: str | None = None) -> "Functional":
        """x -> ω(x c)."""
        return Functional(self.alg, lambda i: self(self.alg.basis_element(i) * c),
                          name or f"{self.name}(·{c})")

    def equals_on(self, other: "Functional", ids: Iterable[BasisId]) -> BasisId | None:
        f = self.alg.field
        for i in ids:
            if not f.eq(self.on_basis(i), other.on_basis(i)):
                return i
        return None

    def __repr__(self):
        return f"<Functional {self.name} on {self.alg.name}>"


def slice_leg(t: Element, leg: int, omega: Functional) -> Element:
    """Contract leg ``leg`` (0-based) of a tensor with ``omega``."""
    factors = t.alg.factors
    rest = [a for p, a in enumerate(factors) if p != leg]
    alg = rest[0] if len(rest) == 1 else TensorAlgebra(rest)
    acc: dict = {}
    f = alg.field
    for k, v in t.coeffs.items():
        w = omega.on_basis(k[leg])
        if f.is_zero(w):
            continue
        kk = tuple(x for p, x in enumerate(k) if p != leg)
        if len(rest) == 1:
            kk = kk[0]
        acc[kk] = acc[kk] + v * w if kk in acc else v * w
    return alg.element(acc)


def multiply_legs(t: Element) -> Element:
    """m: A⊗A -> A."""
    a = t.alg.factors[0]
    if any(f is not a for f in t.alg.factors):
        raise AlgebraMismatch("multiplication map needs equal legs")
    acc = a.zero()
    for k, v in t.coeffs.items():
        prod = a.basis_element(k[0])
        for x in k[1:]:
            prod = prod * a.basis_element(x)
        acc = acc + prod.scale(v)
    return acc


# --- multipliers ------------------------------------------------------------

class Multiplier:
    """Element of M(A): a compatible pair of maps a -> m·a and a -> a·m."""

    def __init__(self, alg: Algebra, left: Callable[[Element], Element],
                 right: Callable[[Element], Element], element: Element | None = None,
                 name: str = "m"):
        self.alg = alg
        self.left = left
        self.right = right
        self.element = element
        self.name = name

    @classmethod
    def from_element(cls, a: Element, name: str | None = None) -> "Multiplier":
        return cls(a.alg, lambda x: a * x, lambda x: x * a, a, name or str(a))

    @classmethod
    def identity(cls, alg: Algebra) -> "Multiplier":
        return cls(alg, lambda x: x, lambda x: x, alg.one() if alg.unital else None, "1")

    def lmul(self, a: Element) -> Element:
        return self.left(a)

    def rmul(self, a: Element) -> Element:
        return self.right(a)

    def __mul__(self, other: "Multiplier") -> "Multiplier":
        el = None
        if self.element is not None and other.element is not None:
            el = self.element * other.element
        return Multiplier(self.alg, lambda x: self.left(other.left(x)),
                          lambda x: other.right(self.right(x)), el,
                          f"{self.name}·{other.name}")

    def __repr__(self):
        return f"<Multiplier {self.name} of {self.alg.name}>"


def multiplier_from_pair(alg: Algebra, left, right, spanning: Iterable[Element] | None = None,
                         name: str = "m") -> Multiplier:
    """Build a multiplier after checking (a·m)b = a(m·b) on a spanning set."""
    span = list(spanning) if spanning is not None else alg.basis_elements()
    for a in span:
        for b in span:
            if right(a) * b != a * left(b):
                raise MultiplierError(f"(a m) b != a (m b) for a={a}, b={b}")
    el = None
    if alg.unital:
        one = alg.one()
        el = left(one)
        if right(one) != el:
            raise MultiplierError("left and right actions disagree on the unit")
    return Multiplier(alg, left, right, el, name)


def multiplier_apply(m: Multiplier, a: Element, side: str = "left") -> Element:
    if side == "left":
        return m.lmul(a)
    if side == "right":
        return m.rmul(a)
    raise ValueError("side must be 'left' or 'right'")


def multiplier_equal(m: Multiplier, n: Multiplier, spanning: Iterable[Element]) -> Element | None:
    """First spanning element on which the two multipliers differ (either side)."""
    for a in spanning:
        if m.lmul(a) != n.lmul(a) or m.rmul(a) != n.rmul(a):
            return a
    return None


# --- local units and non-degeneracy ------------------------------------------

def local_unit(elems: Sequence[Element]) -> Element:
    """An element e with e·a = a·e = a for every a in ``elems``."""
    if not elems:
        raise ValueError("need at least one element")
    alg = elems[0].alg
    for a in elems:
        if a.alg is not alg:
            raise AlgebraMismatch("local_unit over mixed algebras")
    if alg.local_unit_rule is not None:
        e = alg.local_unit_rule(list(elems))
    elif alg.unital:
        e = alg.one()
    else:
        alg.require_finite()
        f = alg.field
        rows, rhs = [], []
        basis = alg.basis
        for a in elems:
            # e·a and a·e as linear functions of e's coordinates
            left_cols = [(alg.basis_element(i) * a).vector() for i in basis]
            right_cols = [(a * alg.basis_element(i)).vector() for i in basis]
            av = a.vector()
            for cols in (left_cols, right_cols):
                for r in range(len(basis)):
                    rows.append([cols[i][r] for i in range(len(basis))])
                    rhs.append(av[r])
        try:
            e = alg.from_vector(linalg.solve(f, rows, rhs))
        except linalg.SingularMatrixError as exc:
            raise LocalUnitError(f"no local unit for {[str(a) for a in elems]} in {alg.name}") from exc
    for a in elems:
        if e * a != a or a * e != a:
            raise LocalUnitError(f"local unit {e} does not fix {a}")
    return e


def check_nondegenerate(alg: Algebra) -> Report:
    """Trivial kernels of a -> (x -> a x) and a -> (x -> x a)."""
    alg.require_finite()
    f = alg.field
    rep = Report("nondegenerate", alg.name)
    n = len(alg.basis)
    for side in ("left", "right"):
        rows = []
        for j in alg.basis:
            ej = alg.basis_element(j)
            cols = [((alg.basis_element(i) * ej) if side == "left" else (ej * alg.basis_element(i))).vector()
                    for i in alg.basis]
            for r in range(n):
                rows.append([cols[i][r] for i in range(n)])
        kern = linalg.nullspace(f, rows, n)
        witness = str(alg.from_vector(kern[0])) if kern else None
        rep.add(f"{side}_kernel_trivial", not kern, witness, cases=n)
    return rep
