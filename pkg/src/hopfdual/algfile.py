"""AlgebraFile: a JSON description of a finite-dimensional Hopf algebra.

    {
      "version": "v1",
      "name": "H4",
      "cyclotomic_order": 2,
      "basis": ["1", "g", "x", "gx"],
      "unital": true,
      "unit": [[0, "1"]],
      "product":   [[i, j, [[k, c], ...]], ...],      # omitted pairs multiply to 0
      "coproduct": [[i, [[j, k, c], ...]], ...],      # Δ(e_i), every i listed
      "counit":    [c_0, c_1, ...],
      "antipode":  [[i, [[k, c], ...]], ...],         # every i listed
      "antipode_inverse": [...],                      # optional, same shape
      "integral":  [c_0, c_1, ...]                    # optional left integral
    }

A coefficient is a rational (integer or "p/q" string) or a list of rationals
giving coordinates over the power basis of Q(zeta_n).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .algebra import Algebra, Functional, LinearMap
from .hopf import HopfAlgebra
from .scalars import CyclotomicField, Field


class AlgebraFileError(ValueError):
    """Malformed or inconsistent algebra file."""


def _coeff(field: Field, raw: Any, where: str):
    try:
        if isinstance(raw, bool):
            raise TypeError("boolean coefficient")
        if isinstance(raw, (int, str)):
            return field.coerce(Fraction(raw) if isinstance(raw, str) else raw)
        if isinstance(raw, list):
            return field.coerce([Fraction(str(c)) for c in raw])
        raise TypeError(f"unsupported coefficient {raw!r}")
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise AlgebraFileError(f"{where}: bad coefficient {raw!r} ({exc})") from None


def _index(raw: Any, d: int, where: str) -> int:
    if not isinstance(raw, int) or isinstance(raw, bool) or not 0 <= raw < d:
        raise AlgebraFileError(f"{where}: index {raw!r} out of range 0..{d - 1}")
    return raw


def _sparse(field, entries, d, where) -> dict:
    if not isinstance(entries, list):
        raise AlgebraFileError(f"{where}: expected a list of [index, coeff]")
    out: dict = {}
    for e in entries:
        if not isinstance(e, list) or len(e) != 2:
            raise AlgebraFileError(f"{where}: entry {e!r} is not [index, coeff]")
        k = _index(e[0], d, where)
        out[k] = out.get(k, field.zero) + _coeff(field, e[1], where)
    return out


def _map_table(field, table, d, where) -> dict:
    if not isinstance(table, list):
        raise AlgebraFileError(f"{where}: expected a list")
    out = {}
    for row in table:
        if not isinstance(row, list) or len(row) != 2:
            raise AlgebraFileError(f"{where}: row {row!r} is not [i, [[k, c], ...]]")
        i = _index(row[0], d, where)
        if i in out:
            raise AlgebraFileError(f"{where}: index {i} listed twice")
        out[i] = _sparse(field, row[1], d, f"{where}[{i}]")
    missing = [i for i in range(d) if i not in out]
    if missing:
        raise AlgebraFileError(f"{where}: no entry for basis indices {missing}")
    return out


def parse(doc: dict, field: Field | None = None) -> tuple[HopfAlgebra, Functional | None]:
    """Build the Hopf algebra (and optional integral) described by ``doc``."""
    if not isinstance(doc, dict):
        raise AlgebraFileError("top level must be a JSON object")
    if doc.get("version") != "v1":
        raise AlgebraFileError(f"unsupported or missing version {doc.get('version')!r}")
    for key in ("cyclotomic_order", "basis", "unital", "product", "coproduct", "counit", "antipode"):
        if key not in doc:
            raise AlgebraFileError(f"missing field {key!r}")
    n = doc["cyclotomic_order"]
    if not isinstance(n, int) or n < 1:
        raise AlgebraFileError(f"bad cyclotomic_order {n!r}")
    f = field or CyclotomicField(n)
    basis = doc["basis"]
    if not isinstance(basis, list) or not basis or not all(isinstance(b, str) for b in basis):
        raise AlgebraFileError("basis must be a non-empty list of labels")
    if len(set(basis)) != len(basis):
        raise AlgebraFileError("basis labels must be distinct")
    d = len(basis)

    prod: dict = {}
    if not isinstance(doc["product"], list):
        raise AlgebraFileError("product: expected a list")
    for row in doc["product"]:
        if not isinstance(row, list) or len(row) != 3:
            raise AlgebraFileError(f"product: row {row!r} is not [i, j, [[k, c], ...]]")
        i, j = _index(row[0], d, "product"), _index(row[1], d, "product")
        if (i, j) in prod:
            raise AlgebraFileError(f"product: pair ({i}, {j}) listed twice")
        prod[(i, j)] = _sparse(f, row[2], d, f"product[{i},{j}]")

    unit = None
    if doc["unital"] is True:
        if "unit" not in doc:
            raise AlgebraFileError("unital algebra without a unit")
        unit = _sparse(f, doc["unit"], d, "unit")
    elif doc["unital"] is not False:
        raise AlgebraFileError("unital must be true or false")

    cop: dict = {}
    if not isinstance(doc["coproduct"], list):
        raise AlgebraFileError("coproduct: expected a list")
    for row in doc["coproduct"]:
        if not isinstance(row, list) or len(row) != 2 or not isinstance(row[1], list):
            raise AlgebraFileError(f"coproduct: row {row!r} is not [i, [[j, k, c], ...]]")
        i = _index(row[0], d, "coproduct")
        if i in cop:
            raise AlgebraFileError(f"coproduct: index {i} listed twice")
        terms: dict = {}
        for e in row[1]:
            if not isinstance(e, list) or len(e) != 3:
                raise AlgebraFileError(f"coproduct[{i}]: entry {e!r} is not [j, k, c]")
            key = (_index(e[0], d, "coproduct"), _index(e[1], d, "coproduct"))
            terms[key] = terms.get(key, f.zero) + _coeff(f, e[2], f"coproduct[{i}]")
        cop[i] = terms
    if len(cop) != d:
        raise AlgebraFileError(f"coproduct: no entry for {[i for i in range(d) if i not in cop]}")

    counit = doc["counit"]
    if not isinstance(counit, list) or len(counit) != d:
        raise AlgebraFileError(f"counit must list {d} coefficients")
    eps = {i: _coeff(f, c, "counit") for i, c in enumerate(counit)}
    S = _map_table(f, doc["antipode"], d, "antipode")
    Sinv = _map_table(f, doc["antipode_inverse"], d, "antipode_inverse") if "antipode_inverse" in doc else None

    name = doc.get("name", "file")
    alg = Algebra(str(name), f, lambda i, j: prod.get((i, j), {}), range(d), unit, dict(enumerate(basis)))
    S_map = LinearMap(alg, alg, lambda i: alg.element(S[i]), "S")
    Sinv_map = LinearMap(alg, alg, lambda i: alg.element(Sinv[i]), "S^-1") if Sinv else None
    try:
        H = HopfAlgebra(alg, Functional(alg, eps, "ε"), S_map, Sinv_map, coproduct=lambda i: cop[i])
    except ArithmeticError as exc:
        raise AlgebraFileError(f"antipode is not invertible: {exc}") from None
    phi = None
    if "integral" in doc:
        vec = doc["integral"]
        if not isinstance(vec, list) or len(vec) != d:
            raise AlgebraFileError(f"integral must list {d} coefficients")
        phi = Functional(alg, {i: _coeff(f, c, "integral") for i, c in enumerate(vec)}, "φ")
    return H, phi


def load(path: str, field: Field | None = None) -> tuple[HopfAlgebra, Functional | None]:
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise AlgebraFileError(f"cannot read {path}: {exc}") from None
    return parse(doc, field)


def file_field_order(path: str) -> int:
    try:
        with open(path, encoding="utf-8") as fh:
            n = json.load(fh).get("cyclotomic_order", 1)
        return n if isinstance(n, int) and n >= 1 else 1
    except (OSError, json.JSONDecodeError, AttributeError):
        return 1


def dump(H: HopfAlgebra, phi: Functional | None = None) -> dict:
    """Serialize a finite-dimensional Hopf algebra with exact scalars."""
    alg = H.alg
    f = H.field
    idx = {b: n for n, b in enumerate(alg.basis)}

    def sp(e):
        return [[idx[k], f.to_json(v)] for k, v in sorted(e.coeffs.items(), key=lambda kv: idx[kv[0]])]

    es = alg.basis_elements()
    doc: dict = {
        "version": "v1",
        "name": H.name,
        "cyclotomic_order": getattr(f, "n", 1),
        "basis": [alg.label(b) for b in alg.basis],
        "unital": alg.unital,
    }
    if alg.unital:
        doc["unit"] = sp(alg.one())
    doc["product"] = [[idx[a], idx[b], sp(ea * eb)] for (a, ea), (b, eb)
                      in ((p, q) for p in zip(alg.basis, es) for q in zip(alg.basis, es))
                      if not (ea * eb).is_zero()]
    doc["coproduct"] = [[idx[a], [[idx[j], idx[k], f.to_json(v)] for (j, k), v
                                  in sorted(H.delta(e).coeffs.items(), key=lambda kv: (idx[kv[0][0]], idx[kv[0][1]]))]]
                        for a, e in zip(alg.basis, es)]
    doc["counit"] = [f.to_json(H.counit(e)) for e in es]
    doc["antipode"] = [[idx[a], sp(H.S(e))] for a, e in zip(alg.basis, es)]
    doc["antipode_inverse"] = [[idx[a], sp(H.Sinv(e))] for a, e in zip(alg.basis, es)]
    if phi is not None:
        doc["integral"] = [f.to_json(v) for v in phi.vector()]
    return doc
