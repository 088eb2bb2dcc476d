"""Verification driver: runs every identity on one algebra and builds a report."""

from __future__ import annotations

import json
import random
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from . import exalg, liealg, lichnerowicz, twisted
from .exalg import Orientation, random_form
from .liealg import MetricLieAlgebra
from .spec_io import AlgebraSpec, format_rational

DEFAULT_S_VALUES = lichnerowicz.VERIFIED_S

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2


@dataclass
class CheckOptions:
    s_values: Sequence[Fraction] = DEFAULT_S_VALUES
    scale: Fraction = Fraction(1)
    timing: bool = True


@dataclass
class Report:
    algebra: str
    dim: int = 0
    kappa: Fraction | None = None
    h_norm_sq: Fraction | None = None
    rho: Fraction | None = None
    cs_bound: Fraction | None = None
    betti_twisted: list[int] | None = None
    betti_ordinary: list[int] | None = None
    harmonic: list[int] | None = None
    checks: dict = field(default_factory=dict)
    verdict: str = ""
    elapsed_ms: dict = field(default_factory=dict)

    def record(self, name: str, ok: bool, detail: str = ""):
        self.checks[name] = {"status": "pass" if ok else "fail", "detail": detail}

    def skip(self, name: str, reason: str):
        self.checks[name] = {"status": "skip", "detail": reason}

    @property
    def passed(self) -> bool:
        return all(c["status"] != "fail" for c in self.checks.values())

    def failures(self) -> list[str]:
        return [k for k, c in self.checks.items() if c["status"] == "fail"]

    def to_dict(self, timing: bool = True) -> dict:
        def q(x):
            return None if x is None else format_rational(x)

        out = {
            "algebra": self.algebra,
            "dim": self.dim,
            "kappa": q(self.kappa),
            "h_norm_sq": q(self.h_norm_sq),
            "rho": q(self.rho),
            "cs_bound": q(self.cs_bound),
            "betti_twisted": self.betti_twisted,
            "betti_ordinary": self.betti_ordinary,
            "harmonic": self.harmonic,
            "checks": self.checks,
            "verdict": self.verdict,
        }
        if timing:
            out["elapsed_ms"] = self.elapsed_ms
        return out

    def to_json(self, timing: bool = True) -> str:
        return json.dumps(self.to_dict(timing), indent=2, sort_keys=True)

    def to_text(self) -> str:
        lines = [f"algebra {self.algebra} (dim {self.dim})"]
        for label, value in (("kappa", self.kappa), ("|H|^2", self.h_norm_sq),
                             ("rho", self.rho), ("cs_bound", self.cs_bound)):
            if value is not None:
                lines.append(f"  {label:<9} {format_rational(value)}")
        if self.betti_twisted is not None:
            lines.append(f"  twisted betti (even, odd): {tuple(self.betti_twisted)}")
        if self.betti_ordinary is not None:
            lines.append(f"  ordinary betti: {self.betti_ordinary}")
        for name, c in self.checks.items():
            detail = f"  {c['detail']}" if c["detail"] else ""
            lines.append(f"  [{c['status'].upper():4}] {name}{detail}")
        if self.verdict:
            lines.append(f"  verdict: {self.verdict}")
        return "\n".join(lines)


def _residual(m) -> str:
    return f"max|residual| = {format_rational(m.max_abs())}"


def run_checks(target: MetricLieAlgebra | AlgebraSpec,
               options: CheckOptions | None = None) -> tuple[Report, int]:
    """Run every check in order; returns the report and the exit code."""
    options = options or CheckOptions()
    if isinstance(target, AlgebraSpec):
        L = target.to_algebra()
    else:
        L = target
    if options.scale != 1:
        L = L.scaled(options.scale)
    rep = Report(algebra=L.name, dim=L.dim)

    @contextmanager
    def phase(name):
        t0 = time.perf_counter()
        yield
        rep.elapsed_ms[name] = round((time.perf_counter() - t0) * 1000, 3)

    with phase("validate"):
        violations = L.validate()
    rep.record("validate", not violations, "; ".join(str(v) for v in violations[:5]))
    if violations:
        return rep, EXIT_INPUT

    with phase("scalars"):
        rep.kappa = liealg.scalar_curvature(L)
        rep.h_norm_sq = liealg.h_norm_squared(L)
        rep.rho, rep.cs_bound = liealg.rho(L)
        oracle = liealg.scalar_curvature_from_tensor(L)
    rep.record("scalar_curvature_oracle", oracle == rep.kappa,
               f"kappa = {format_rational(rep.kappa)}, trace of R = {format_rational(oracle)}")
    H = liealg.cartan_three_form(L)
    rep.record("h_norm_consistency", exalg.inner(H, H) == rep.h_norm_sq,
               f"<H, H> = {format_rational(exalg.inner(H, H))}")

    with phase("flatness"):
        flat_t = {t: liealg.curvature(L, t).is_zero() for t in (0, 1)}
        flat_w = {w: lichnerowicz.twist_is_flat(L, w) for w in (Fraction(-1, 4), Fraction(1, 4))}
        torsion_ok = all(
            T == [(2 * Fraction(t) - 1) * L.c[i][j][k] for k in range(L.dim)]
            for t in (0, Fraction(1, 2), 1) for (i, j), T in liealg.torsion(L, t).items())
    rep.record("flatness", all(flat_t.values()) and all(flat_w.values()),
               f"curvature zero at t=0: {flat_t[0]}, t=1: {flat_t[1]}; "
               f"twist zero at -1/4: {flat_w[Fraction(-1, 4)]}, 1/4: {flat_w[Fraction(1, 4)]}")
    rep.record("torsion", torsion_ok, "T = (2t-1)[X,Y] at t in {0, 1/2, 1}")

    with phase("untwisted_dirac"):
        res = twisted.untwisted_dirac_check(L)
    rep.record("untwisted_dirac", res.is_zero(), _residual(res))

    with phase("clifford_dirac"):
        res = twisted.dirac_from_clifford(L) - twisted.dirac_operator(L)
    rep.record("clifford_dirac_equivalence", res.is_zero(), _residual(res))

    with phase("square_zero"):
        cx = twisted.twisted_differential(L)
        sq = cx.twisted_d @ cx.twisted_d
    rep.record("square_zero", sq.is_zero() and cx.twisted_d.parity == "odd", _residual(sq))

    with phase("star_adjoint"):
        star = twisted.star_adjoint_report(L)
    good = [int(o) for o in Orientation if all(star[int(o)].values())]
    bad_degrees = sorted({p for o in star for p, ok in star[o].items() if not ok})
    rep.record("star_adjoint", bool(good),
               f"orientations reproducing the adjoint: {good}"
               + (f"; mismatched degrees {bad_degrees}" if bad_degrees else ""))

    with phase("betti"):
        betti = twisted.betti_from_differential(cx.twisted_d)
        rep.betti_twisted = list(betti)
        rep.betti_ordinary = twisted.ordinary_betti(L)
    euler = sum((-1) ** p * b for p, b in enumerate(rep.betti_ordinary))
    rep.record("euler_characteristic", betti[0] - betti[1] == euler,
               f"b+ - b- = {betti[0] - betti[1]}, sum (-1)^p b_p = {euler}")

    with phase("harmonic"):
        harm = twisted.harmonic_dimensions(L)
        rep.harmonic = list(harm)
    rep.record("hodge_consistency", harm == betti, f"ker D^2 = {harm}, betti = {betti}")

    with phase("lichnerowicz"):
        for s in options.s_values:
            res = lichnerowicz.lichnerowicz_residual(L, s)
            rep.record(f"lichnerowicz[s={format_rational(s)}]", res.is_zero(), _residual(res))

    with phase("vanishing"):
        verdict = lichnerowicz.vanishing_verdict(L)
    rep.verdict = verdict.verdict
    consistent = (verdict.verdict == "vanishes") == (betti == (0, 0))
    consistent = consistent and verdict.rho == rep.rho and verdict.residual_max_abs == 0
    if not L.is_abelian():
        consistent = consistent and verdict.verdict == "vanishes"
    rep.record("vanishing_verdict", consistent,
               f"kernel of (D^1/12)^2 = {verdict.kernel_dims}, verdict {verdict.verdict}")
    positive = rep.cs_bound > 0
    rep.record("rho_bound", rep.rho >= rep.cs_bound and positive == (not L.is_abelian()),
               f"rho = {format_rational(rep.rho)} >= bound = {format_rational(rep.cs_bound)}")
    return rep, EXIT_OK if rep.passed else EXIT_FAIL


def fuzz_identities(n: int, trials: int, seed: int,
                    forms: Sequence[exalg.Multivector] = ()) -> tuple[Report, int]:
    """Check the two Clifford identities on seeded random rational 3-forms.

    Stops at the first counterexample, which is named in the report.
    """
    if not 2 <= n <= 8:
        raise ValueError(f"fuzz dimension must be in [2, 8], got {n}")
    rng = random.Random(seed)
    rep = Report(algebra=f"fuzz(n={n}, trials={trials}, seed={seed})", dim=n)
    corpus = list(forms) + [random_form(n, 3, rng, density=rng.choice((0.3, 0.7, 1.0)))
                            for _ in range(trials)]
    t0 = time.perf_counter()
    for t, h in enumerate(corpus):
        r3 = exalg.three_h_residual(h)
        r2 = exalg.clifford_identity_residual(h)
        if not (r3.is_zero() and r2.is_zero()):
            rep.record(f"trial[{t}]", False, f"counterexample h = {h!r}; "
                       f"three_h {_residual(r3)}, clifford {_residual(r2)}")
            rep.verdict = "counterexample"
            return rep, EXIT_FAIL
    rep.elapsed_ms["fuzz"] = round((time.perf_counter() - t0) * 1000, 3)
    rep.record("three_h_identity", True, f"forms checked: {len(corpus)}")
    rep.record("clifford_identity", True, f"forms checked: {len(corpus)}")
    rep.verdict = "all identities hold"
    return rep, EXIT_OK
