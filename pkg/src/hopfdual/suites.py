"""Named check suites over a subject (finite Hopf algebra or infinite paired couple)."""

from __future__ import annotations

import time
from dataclasses import dataclass, field as dc_field

from .algebra import Functional
from .catalog import PairedCouple
from .dual import Pairing, build_dual, dual_suite, pairing_suite
from .duality import build_v, duality_suite, pentagon_check, pentagon_check_t
from .fourier import FourierPack, fourier_suite
from .heisenberg import heisenberg_suite, heisenberg_window_suite
from .hopf import HopfAlgebra, check_hopf_axioms
from .integrals import (IntegralData, derive, derived_dump, identity_suite_one, integrals_suite,
                        is_left_invariant, is_right_invariant, scaling_constant)
from .report import Report

SUITES = ("axioms", "integrals", "identities1", "dual", "heisenberg", "duality-v", "fourier", "pentagon")


class PreconditionError(ValueError):
    """A suite cannot run on this subject (e.g. no integral, infinite dimension)."""


@dataclass
class Subject:
    name: str
    hopf: HopfAlgebra | None = None
    couple: PairedCouple | None = None
    phi: Functional | None = None
    window: int = 5
    _data: IntegralData | None = None
    _pairing: Pairing | None = None
    cache: dict = dc_field(default_factory=dict)

    @property
    def infinite(self) -> bool:
        return self.couple is not None

    def data(self) -> IntegralData:
        if self._data is None:
            self._data = derive(self.hopf, self.phi)
        return self._data

    def pairing(self) -> Pairing:
        if self._pairing is None:
            self._pairing = build_dual(self.hopf, self.data())
        return self._pairing


def run_suite(subj: Subject, suite: str) -> Report:
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}")
    if subj.infinite:
        return _run_infinite(subj, suite)
    rep = Report(suite, subj.name)
    t0 = time.perf_counter()
    if suite == "axioms":
        rep.extend(check_hopf_axioms(subj.hopf))
    elif suite == "integrals":
        r, data = integrals_suite(subj.hopf)
        if subj.phi is not None:
            bad = is_left_invariant(subj.hopf, subj.phi)
            r.add("file_integral.left_invariant", bad is None,
                  None if bad is None else f"a={bad[0]}, b={bad[1]}")
        rep.extend(r)
    elif suite == "identities1":
        rep.extend(identity_suite_one(subj.data()))
    elif suite == "dual":
        P = subj.pairing()
        rep.extend(pairing_suite(P), "pairing")
        rep.extend(dual_suite(P))
    elif suite == "heisenberg":
        rep.extend(heisenberg_suite(subj.pairing()))
    elif suite == "duality-v":
        rep.extend(duality_suite(_v(subj)))
    elif suite == "fourier":
        rep.extend(fourier_suite(FourierPack(subj.pairing(), _v(subj))))
    elif suite == "pentagon":
        rep.extend(pentagon_check(_v(subj)))
        rep.extend(pentagon_check_t(subj.hopf))
    rep.timings["total"] = time.perf_counter() - t0
    return rep


def _v(subj: Subject):
    if "V" not in subj.cache:
        subj.cache["V"] = build_v(subj.pairing())
    return subj.cache["V"]


def _run_infinite(subj: Subject, suite: str) -> Report:
    c = subj.couple
    A, B = c.A, c.B
    k = subj.window
    win_A = [A.alg.basis_element(i) for i in range(-k, k + 1)]
    win_B = [B.alg.basis_element(i) for i in range(-k, k + 1)]
    rep = Report(suite, subj.name)
    t0 = time.perf_counter()
    if suite == "axioms":
        rep.extend(check_hopf_axioms(A, win_A), "A")
        rep.extend(check_hopf_axioms(B, win_B), "B")
    elif suite == "integrals":
        for lbl, H, phi, win in (("A", A, c.phi_A, win_A), ("B", B, c.phi_B, win_B)):
            bad = is_left_invariant(H, phi, win)
            rep.add(f"{lbl}.left_invariant_window", bad is None, str(bad), cases=len(win) ** 2)
            psi = phi.compose(H.S, "ψ")
            bad = is_right_invariant(H, psi, win)
            rep.add(f"{lbl}.right_invariant_window", bad is None, str(bad), cases=len(win) ** 2)
            tau = scaling_constant(phi, H.with_window(win))
            rep.derived[f"tau_{lbl}"] = H.field.to_json(tau)
        rep.verify("pairing.action_adjoint_window",
                   ((all(A.field.eq(c.pair(c.act_left_B(b, a), b2), c.pair(a, b2 * b)) for b2 in win_B), f"{b}, {a}")
                    for a in win_A for b in win_B))
        rep.verify("pairing.counit_window",
                   ((A.field.eq(c.pair(a, B.alg.one()), A.counit(a)), str(a)) for a in win_A))
        rep.verify("pairing.antipode_window",
                   ((A.field.eq(c.pair(A.S(a), b), c.pair(a, B.S(b))), f"{a}, {b}") for a in win_A for b in win_B))
    elif suite == "heisenberg":
        rep.extend(heisenberg_window_suite(c, radius=min(k, 2)))
    elif suite == "pentagon":
        r = min(k, 3)
        rep.extend(pentagon_check_t(A, [A.alg.basis_element(i) for i in range(-r, r + 1)]))
    else:
        raise PreconditionError(f"suite {suite!r} needs a finite-dimensional algebra")
    rep.timings["total"] = time.perf_counter() - t0
    return rep


INFINITE_SUITES = ("axioms", "integrals", "heisenberg", "pentagon")


def run_all(subj: Subject) -> Report:
    """Every applicable suite; later suites are skipped if the axioms fail."""
    rep = Report("all", subj.name)
    names = INFINITE_SUITES if subj.infinite else SUITES
    skipped = [s for s in SUITES if s not in names]
    for s in names:
        r = run_suite(subj, s)
        rep.extend(r, s)
        if s == "axioms" and not r.ok:
            skipped += [t for t in names if t != "axioms"]
            break
    if skipped:
        rep.derived["skipped_suites"] = skipped
    if not subj.infinite and "integrals" not in skipped:
        rep.derived["modular_data"] = derived_dump(subj.data())
    return rep
