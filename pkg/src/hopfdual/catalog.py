"""Builders for the shipped examples.

Group algebras and function algebras come from explicit Cayley tables, Taft
algebras (with Sweedler's H4 = Taft(2)) from their presentation compiled to
structure constants, and K(Z) together with C[Z] as an explicitly paired couple.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field as dc_field
from typing import Callable

from .algebra import Algebra, Element, Functional, LinearMap, TensorAlgebra
from .hopf import HopfAlgebra
from .scalars import CyclotomicField, Field


class UnknownExampleError(ValueError):
    pass


@dataclass(frozen=True)
class Group:
    name: str
    labels: tuple[str, ...]
    table: tuple[tuple[int, ...], ...]
    identity: int = 0

    @property
    def order(self) -> int:
        return len(self.labels)

    def mul(self, i: int, j: int) -> int:
        return self.table[i][j]

    def inv(self, i: int) -> int:
        return next(j for j in range(self.order) if self.table[i][j] == self.identity)

    def check(self) -> None:
        n = self.order
        for a, b, c in itertools.product(range(n), repeat=3):
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                raise ValueError(f"Cayley table of {self.name} is not associative")
        for a in range(n):
            if self.mul(self.identity, a) != a or self.mul(a, self.identity) != a:
                raise ValueError(f"{self.labels[self.identity]} is not an identity")
            if sorted(self.table[a]) != list(range(n)):
                raise ValueError(f"row {a} of {self.name} is not a permutation")


def cyclic_group(n: int) -> Group:
    if n < 1:
        raise ValueError("cyclic group order must be >= 1")
    labels = tuple("e" if k == 0 else ("g" if k == 1 else f"g^{k}") for k in range(n))
    table = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    return Group(f"Z{n}", labels, table)


def _cycle_label(p: tuple[int, ...]) -> str:
    seen, cycles = set(), []
    for s in range(len(p)):
        if s in seen or p[s] == s:
            seen.add(s)
            continue
        cyc, x = [], s
        while x not in seen:
            seen.add(x)
            cyc.append(str(x + 1))
            x = p[x]
        cycles.append("(" + "".join(cyc) + ")")
    return "".join(cycles) or "e"


def symmetric_group(n: int = 3) -> Group:
    perms = sorted(itertools.permutations(range(n)))
    index = {p: k for k, p in enumerate(perms)}
    # (στ)(i) = σ(τ(i))
    table = tuple(tuple(index[tuple(s[t[i]] for i in range(n))] for t in perms) for s in perms)
    return Group(f"S{n}", tuple(_cycle_label(p) for p in perms), table)


def group_algebra(G: Group, field: Field | None = None) -> HopfAlgebra:
    f = field or CyclotomicField(1)
    n = G.order
    alg = Algebra(f"C[{G.name}]", f, lambda i, j: {G.mul(i, j): 1}, range(n),
                  {G.identity: 1}, dict(enumerate(G.labels)))
    return HopfAlgebra(
        alg,
        Functional(alg, {i: 1 for i in range(n)}, "ε"),
        LinearMap(alg, alg, lambda i: alg.basis_element(G.inv(i)), "S"),
        LinearMap(alg, alg, lambda i: alg.basis_element(G.inv(i)), "S^-1"),
        coproduct=lambda i: {(i, i): 1},
    )


def function_algebra(G: Group, field: Field | None = None) -> HopfAlgebra:
    f = field or CyclotomicField(1)
    n = G.order
    alg = Algebra(f"F({G.name})", f, lambda i, j: {i: 1} if i == j else {}, range(n),
                  {i: 1 for i in range(n)}, {i: f"δ_{G.labels[i]}" for i in range(n)})

    def cop(k):
        return {(x, y): 1 for x in range(n) for y in range(n) if G.mul(x, y) == k}

    return HopfAlgebra(
        alg,
        Functional(alg, {G.identity: 1}, "ε"),
        LinearMap(alg, alg, lambda i: alg.basis_element(G.inv(i)), "S"),
        LinearMap(alg, alg, lambda i: alg.basis_element(G.inv(i)), "S^-1"),
        coproduct=cop,
    )


def _taft_label(i: int, j: int) -> str:
    g = "" if i == 0 else ("g" if i == 1 else f"g^{i}")
    x = "" if j == 0 else ("x" if j == 1 else f"x^{j}")
    return (g + x) or "1"


def taft(n: int, field: Field | None = None, name: str | None = None) -> HopfAlgebra:
    """Taft algebra: g^n = 1, x^n = 0, xg = ζ gx, Δ(g) = g⊗g, Δ(x) = x⊗1 + g⊗x."""
    if n < 2:
        raise ValueError("taft(n) needs n >= 2")
    f = field or CyclotomicField(n)
    basis = list(range(n * n))        # g^i x^j  <->  i + n*j

    def mult(a, b):
        i, j = a % n, a // n
        k, l = b % n, b // n
        if j + l >= n:
            return {}
        return {(i + k) % n + n * (j + l): f.zeta(j * k)}

    labels = {i + n * j: _taft_label(i, j) for i in range(n) for j in range(n)}
    alg = Algebra(name or f"Taft({n})", f, mult, basis, {0: 1}, labels)
    AA = TensorAlgebra([alg, alg])
    x = alg.basis_element(n)
    one = alg.one()
    dg = AA.element({(1, 1): 1})
    dx = AA.element({(n, 0): 1, (1, n): 1})
    ginv = alg.basis_element(n - 1)
    Sg, Sx = ginv, -(ginv * x)

    cop_cache: dict = {}

    def cop(b):
        if b not in cop_cache:
            i, j = b % n, b // n
            t = AA.one()
            for _ in range(i):
                t = t * dg
            for _ in range(j):
                t = t * dx
            cop_cache[b] = t.coeffs
        return cop_cache[b]

    def antipode(b):
        i, j = b % n, b // n
        r = one
        for _ in range(j):
            r = r * Sx
        for _ in range(i):
            r = r * Sg
        return r

    S = LinearMap(alg, alg, antipode, "S")
    return HopfAlgebra(alg, Functional(alg, lambda b: 1 if b < n else 0, "ε"), S,
                       coproduct=cop)


def sweedler_h4(field: Field | None = None) -> HopfAlgebra:
    return taft(2, field, "H4")


# --- K(Z) paired with C[Z] ---------------------------------------------------------

@dataclass
class PairedCouple:
    """Two multiplier Hopf algebras with a closed-form pairing and integrals."""

    A: HopfAlgebra
    B: HopfAlgebra
    pair_basis: Callable[[int, int], object]
    act_B_on_A: Callable[[int, int], Element]      # b ▷ a on basis labels
    phi_A: Functional
    phi_B: Functional
    extras: dict = dc_field(default_factory=dict)

    def pair(self, a: Element, b: Element):
        acc = self.A.field.zero
        for i, x in a.coeffs.items():
            for j, y in b.coeffs.items():
                acc = acc + x * y * self.A.field.coerce(self.pair_basis(i, j))
        return acc

    def act_left_B(self, b: Element, a: Element) -> Element:
        acc = self.A.alg.zero()
        for j, y in b.coeffs.items():
            for i, x in a.coeffs.items():
                acc = acc + self.act_B_on_A(j, i).scale(x * y)
        return acc


def kz_pair(field: Field | None = None, window: int = 5) -> PairedCouple:
    """Finitely supported functions K(Z), non-unital, paired with C[Z]."""
    f = field or CyclotomicField(1)

    def support_unit(elems):
        sup = sorted({k for e in elems for k in e.coeffs})
        return K.element({k: 1 for k in sup})

    K = Algebra("K(Z)", f, lambda i, j: {i: 1} if i == j else {}, None, None,
                local_unit_rule=support_unit)
    K._labels = _LazyLabels("δ_")
    win = [K.basis_element(k) for k in range(-window, window + 1)]
    KH = HopfAlgebra(
        K,
        Functional(K, lambda k: 1 if k == 0 else 0, "ε"),
        LinearMap(K, K, lambda k: K.basis_element(-k), "S"),
        LinearMap(K, K, lambda k: K.basis_element(-k), "S^-1"),
        slices={
            "R": lambda k, j: {(k - j, j): 1},     # Δ(δ_k)(1⊗δ_j)
            "L": lambda k, j: {(j, k - j): 1},     # (δ_j⊗1)Δ(δ_k)
            "R1": lambda k, j: {(j, k - j): 1},    # Δ(δ_k)(δ_j⊗1)
            "L2": lambda k, j: {(k - j, j): 1},    # (1⊗δ_j)Δ(δ_k)
        },
        window=win,
    )
    CZ = Algebra("C[Z]", f, lambda m, n: {m + n: 1}, None, {0: 1})
    CZ._labels = _LazyLabels("λ_")
    CH = HopfAlgebra(
        CZ,
        Functional(CZ, lambda n: 1, "ε"),
        LinearMap(CZ, CZ, lambda n: CZ.basis_element(-n), "S"),
        LinearMap(CZ, CZ, lambda n: CZ.basis_element(-n), "S^-1"),
        coproduct=lambda n: {(n, n): 1},
        window=[CZ.basis_element(k) for k in range(-window, window + 1)],
    )
    return PairedCouple(
        KH, CH,
        pair_basis=lambda k, n: 1 if k == n else 0,
        act_B_on_A=lambda n, k: K.basis_element(k - n),
        phi_A=Functional(K, lambda k: 1, "φ"),
        phi_B=Functional(CZ, lambda n: 1 if n == 0 else 0, "φ"),
    )


class _LazyLabels(dict):
    def __init__(self, prefix):
        super().__init__()
        self.prefix = prefix

    def get(self, k, default=None):
        return f"{self.prefix}{k}"


# --- registry -----------------------------------------------------------------

BUILTINS = ("group:z<n>", "group:s3", "function:z<n>", "function:s3", "h4", "taft:<n>", "kz")


def build(name: str, field: Field | None = None, window: int = 5):
    """Build a named example: a HopfAlgebra, or a PairedCouple for ``kz``."""
    m = re.fullmatch(r"(group|function):(z(\d+)|s3)", name)
    if m:
        kind, grp, n = m.groups()
        G = cyclic_group(int(n)) if n else symmetric_group(3)
        G.check()
        H = group_algebra(G, field) if kind == "group" else function_algebra(G, field)
        H.meta["group"] = G
        H.meta["kind"] = kind
        return H
    if name == "h4":
        return sweedler_h4(field)
    m = re.fullmatch(r"taft:(\d+)", name)
    if m:
        return taft(int(m.group(1)), field)
    if name == "kz":
        return kz_pair(field, window)
    raise UnknownExampleError(f"unknown builtin {name!r}; known: {', '.join(BUILTINS)}")


def cyclotomic_order(name: str) -> int:
    """Cyclotomic order an example needs (for building the approximate field)."""
    if name == "h4":
        return 2
    m = re.fullmatch(r"taft:(\d+)", name)
    return int(m.group(1)) if m else 1
