import copy
import itertools
import json

import pytest

from conftest import FINITE, el, hopf
from hopfdual.algebra import tensor
from hopfdual.algfile import AlgebraFileError, dump, load, parse
from hopfdual.catalog import (BUILTINS, PairedCouple, UnknownExampleError, build, cyclic_group,
                              cyclotomic_order, symmetric_group)
from hopfdual.hopf import check_hopf_axioms
from hopfdual.integrals import solve_left_integral


def test_groups():
    for G in (cyclic_group(5), symmetric_group(3)):
        G.check()
    S3 = symmetric_group(3)
    assert S3.order == 6
    assert len({S3.mul(a, b) == S3.mul(b, a) for a in range(6) for b in range(6)}) == 2


def test_group_algebra_s3():
    H = hopf("group:s3")
    assert H.alg.dim == 6
    es = H.alg.basis_elements()
    assert any(a * b != b * a for a, b in itertools.product(es, repeat=2))
    for g in es:
        assert H.delta(g) == tensor(g, g)


def test_h4_presentation():
    H = hopf("h4")
    one, g, x = el(H, "1"), el(H, "g"), el(H, "x")
    assert g * g == one
    assert (x * x).is_zero()
    assert x * g == (g * x).scale(-1)
    assert H.delta(x) == tensor(x, one) + tensor(g, x)


def test_kz_slices_are_finite():
    c = build("kz")
    assert isinstance(c, PairedCouple)
    K = c.A
    d0 = K.alg.basis_element(0)
    for k in range(-4, 5):
        t = K.delta_right(d0, K.alg.basis_element(k))
        assert t == tensor(K.alg.basis_element(-k), K.alg.basis_element(k))
    assert not K.alg.unital and c.B.alg.unital


def test_unknown_builtin():
    with pytest.raises(UnknownExampleError):
        build("group:q8")


def test_cyclotomic_orders():
    assert cyclotomic_order("taft:5") == 5
    assert cyclotomic_order("h4") == 2
    assert cyclotomic_order("group:s3") == 1
    assert set(BUILTINS) >= {"h4", "kz", "group:s3", "function:s3"}


@pytest.mark.parametrize("name", FINITE)
def test_file_roundtrip(name, tmp_path):
    H = hopf(name)
    phi = solve_left_integral(H)
    path = tmp_path / "alg.json"
    path.write_text(json.dumps(dump(H, phi)))
    H2, phi2 = load(str(path))
    assert H2.alg.dim == H.alg.dim
    for a, b in itertools.product(H.alg.basis, repeat=2):
        assert H2.alg.mult_basis(a, b) == H.alg.mult_basis(a, b)
    for a in H.alg.basis:
        assert H2.delta(H2.alg.basis_element(a)).coeffs == H.delta(H.alg.basis_element(a)).coeffs
        assert H2.S(H2.alg.basis_element(a)).coeffs == H.S(H.alg.basis_element(a)).coeffs
    assert phi2.vector() == phi.vector()
    assert check_hopf_axioms(H2).ok


def _h4_doc():
    return dump(hopf("h4"))


@pytest.mark.parametrize("mutate", [
    lambda d: d.pop("version"),
    lambda d: d.update(version="v2"),
    lambda d: d.pop("coproduct"),
    lambda d: d.update(basis=["1", "1", "x", "gx"]),
    lambda d: d["product"].append([0, 9, [[0, 1]]]),
    lambda d: d["product"][0][2].append([0, "1/0"]),
    lambda d: d.update(counit=[1, 1]),
    lambda d: d["antipode"].pop(),
    lambda d: d.update(unital="yes"),
    lambda d: d.update(integral=[1]),
    lambda d: d["coproduct"][0][1].append([0, 0]),
])
def test_malformed_files_rejected(mutate):
    doc = copy.deepcopy(_h4_doc())
    mutate(doc)
    with pytest.raises(AlgebraFileError):
        parse(doc)


def test_unreadable_file(tmp_path):
    p = tmp_path / "broken.json"
    p.write_text("{not json")
    with pytest.raises(AlgebraFileError):
        load(str(p))
