import functools
import sys

import pytest

from hopfdual.catalog import build
from hopfdual.dual import build_dual
from hopfdual.duality import build_v
from hopfdual.integrals import derive

FINITE = ["group:z2", "group:s3", "function:z2", "function:s3", "h4", "taft:3"]


def el(alg, label, coeff=1):
    """Basis element of ``alg`` (an Algebra or anything with ``.alg``) by its label."""
    alg = getattr(alg, "alg", alg)
    for b in alg.basis:
        if alg.label(b) == label:
            return alg.basis_element(b).scale(coeff)
    raise KeyError(label)


@functools.lru_cache(maxsize=None)
def hopf(name):
    return build(name)


@functools.lru_cache(maxsize=None)
def data(name):
    return derive(hopf(name))


@functools.lru_cache(maxsize=None)
def pairing(name):
    return build_dual(hopf(name), data(name))


@functools.lru_cache(maxsize=None)
def duality(name):
    return build_v(pairing(name))


@pytest.fixture(params=FINITE)
def finite_name(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod and mod.LINES:
        terminalreporter.section("acceptance criteria")
        for line in mod.LINES:
            terminalreporter.write_line(line)
