"""Named verification suites: deterministic random draws over every identity
in the library, emitted as structured records for the CLI reporter.
"""

from __future__ import annotations

import cmath
import csv
import io
import json
import math
import os
import time
import zlib
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from . import __version__ as _tool_version
from .core import Tolerance, VerificationRecord
from .errors import RBetaError
from .gammafns import dilog, gamma, recip_gamma, pochhammer, gaussian_q_integral
from .bilateral import (BilateralSeriesSpec, HKind, closed_form_H, eval_H,
                        series_spec_for, symmetry_transform)
from .qseries import (QKind, QtoOnePath, closed_form_q, eval_psi,
                      lemma_qpoch_log_gap, psi_spec_for, q_binomial_ratio_target,
                      q_gamma, qpoch, qpoch_inf, qpoch_inf_asymptotic,
                      theorem21_limit_probe)
from .integrals import (BetaKind, IntegrandSpec, beta_integral_closed,
                        cauchy_integral_check, double_integral_open_question,
                        fourier_single_factor, integral_repr_H,
                        integrand_spec_for, integrate, m6_reduced_5h5,
                        poisson_sum_rhs, poisson_terms, barnes_closed,
                        barnes_quadrature)
from .qintegrals import (QBetaKind, QIntegrandSpec, abel_poisson_psi,
                         abel_psi_target, h44_integral_value, h_of_q,
                         h_of_q_target, limit_constant, limit_constant_target,
                         q_fourier_closed, q_integrate, qbeta_family,
                         qbeta_gamma_form, qbeta_psi_consistency)

SUITE_NAMES = ("classical-core", "classical-beta", "q-core", "q-beta", "limits")

# default per-suite relative tolerances; oscillation and product truncation
# compound for the higher-order and q cases
TOL_CLASSICAL = Tolerance(rel=1e-8, abs=1e-12)
TOL_HIGH_ORDER = Tolerance(rel=1e-6, abs=1e-12)
TOL_Q = Tolerance(rel=1e-6, abs=1e-12)
TOL_LIMIT = Tolerance(rel=5e-3, abs=1e-6)


@dataclass
class SuiteConfig:
    suite: str
    seed: int = 0
    draws_per_identity: int = 2
    tol_overrides: Dict[str, Tolerance] = field(default_factory=dict)
    output_path: Optional[str] = None
    format: str = "json"

    def __post_init__(self):
        if self.suite not in SUITE_NAMES:
            raise ValueError(f"unknown suite {self.suite!r}; "
                             f"known: {', '.join(SUITE_NAMES)}")
        if self.draws_per_identity < 1:
            raise ValueError("draws_per_identity must be >= 1")
        if self.format not in ("json", "csv"):
            raise ValueError("format must be json or csv")


@dataclass
class SuiteReport:
    records: List[VerificationRecord]
    total: int
    passed: int
    failed: int
    max_rel_gap: float
    tool_version: str
    config: SuiteConfig

    @classmethod
    def build(cls, records: Sequence[VerificationRecord],
              config: SuiteConfig) -> "SuiteReport":
        failed = sum(1 for r in records if not r.passed)
        max_rel = max((r.rel_gap for r in records), default=0.0)
        return cls(list(records), len(records), len(records) - failed, failed,
                   max_rel, _tool_version, config)


def _rng_for(seed: int, identity_id: str, draw: int) -> np.random.Generator:
    tag = zlib.crc32(identity_id.encode("utf-8"))
    return np.random.default_rng([seed, tag, draw])


def _pair_vs(identity_id: str, inputs: Dict, lhs: complex, rhs: complex,
             tol: Tolerance) -> VerificationRecord:
    return VerificationRecord.compare(identity_id, inputs, lhs, rhs, tol)


Job = Tuple[str, Callable[[], VerificationRecord]]


# -- draw helpers ---------------------------------------------------------------

def _udraw(rng, lo, hi):
    return float(rng.uniform(lo, hi))


def _safe_q(rng) -> float:
    # keep clear of q^k collisions with drawn parameters
    return float(rng.choice([0.31, 0.47, 0.59, 0.73]))


# -- suite: classical-core -------------------------------------------------------

def _jobs_classical_core(cfg: SuiteConfig) -> List[Job]:
    jobs: List[Job] = []
    n = cfg.draws_per_identity

    def tol(iid, default):
        return cfg.tol_overrides.get(iid, default)

    for i in range(n):
        def cauchy(i=i):
            rng = _rng_for(cfg.seed, "cauchy-cosine-integral", i)
            g = _udraw(rng, -0.4, 2.0)
            d = complex(_udraw(rng, -1.0, 1.0), _udraw(rng, -0.4, 0.4))
            rec = cauchy_integral_check(g, d, tol("cauchy-cosine-integral",
                                                  Tolerance(rel=1e-9, abs=1e-12)))
            return rec
        jobs.append(("cauchy-cosine-integral", cauchy))

        def fourier1(i=i):
            rng = _rng_for(cfg.seed, "fourier-single-factor", i)
            a = _udraw(rng, 0.1, 1.2)
            b = _udraw(rng, 0.1, 1.2)
            t = _udraw(rng, -0.9 * math.pi, 0.9 * math.pi)
            got = integrate(IntegrandSpec([a], [b], t)).value
            want = fourier_single_factor(a, b, t)
            return _pair_vs("fourier-single-factor", {"a": a, "b": b, "t": t},
                            got, want, tol("fourier-single-factor", TOL_CLASSICAL))
        jobs.append(("fourier-single-factor", fourier1))

        def grid_sum(i=i):
            rng = _rng_for(cfg.seed, "riemann-grid-sum", i)
            m = int(rng.integers(1, 4))
            a = [_udraw(rng, 0.15, 0.9) for _ in range(m)]
            b = [_udraw(rng, 0.15, 0.9) for _ in range(m)]
            t = _udraw(rng, -0.8, 0.8) * m * math.pi
            p = m + int(rng.integers(0, 2))
            spec = IntegrandSpec(a, b, t)
            lhs = integrate(spec).value
            rhs = poisson_sum_rhs(spec, p)
            return _pair_vs("riemann-grid-sum",
                            {"a": a, "b": b, "t": t, "p": p}, lhs, rhs,
                            tol("riemann-grid-sum", TOL_CLASSICAL))
        jobs.append(("riemann-grid-sum", grid_sum))

        def grid_p_invariance(i=i):
            rng = _rng_for(cfg.seed, "grid-sum-p-invariance", i)
            m = int(rng.integers(1, 3))
            a = [_udraw(rng, 0.15, 0.9) for _ in range(m)]
            b = [_udraw(rng, 0.15, 0.9) for _ in range(m)]
            t = _udraw(rng, -0.7, 0.7) * m * math.pi
            spec = IntegrandSpec(a, b, t)
            lhs = poisson_sum_rhs(spec, m)
            rhs = poisson_sum_rhs(spec, m + 2)
            return _pair_vs("grid-sum-p-invariance",
                            {"a": a, "b": b, "t": t}, lhs, rhs,
                            tol("grid-sum-p-invariance", TOL_CLASSICAL))
        jobs.append(("grid-sum-p-invariance", grid_p_invariance))

        def support(i=i):
            rng = _rng_for(cfg.seed, "compact-support", i)
            m = int(rng.integers(1, 4))
            a = [_udraw(rng, 0.2, 0.9) for _ in range(m)]
            b = [_udraw(rng, 0.2, 0.9) for _ in range(m)]
            t = m * math.pi + _udraw(rng, 0.2, 2.0)
            got = integrate(IntegrandSpec(a, b, t)).value
            return _pair_vs("compact-support", {"a": a, "b": b, "t": t},
                            got, 0j, tol("compact-support", Tolerance(abs=1e-8)))
        jobs.append(("compact-support", support))

        def repr_h(i=i):
            rng = _rng_for(cfg.seed, "integral-series-representation", i)
            m = int(rng.integers(1, 4))
            a = [_udraw(rng, 0.2, 0.9) for _ in range(m)]
            b = [_udraw(rng, 0.2, 0.9) for _ in range(m)]
            t = _udraw(rng, -0.9 * math.pi, 0.9 * math.pi)
            return integral_repr_H(a, b, t,
                                   tol=tol("integral-series-representation",
                                           TOL_CLASSICAL))
        jobs.append(("integral-series-representation", repr_h))

        def sum_1h1(i=i):
            rng = _rng_for(cfg.seed, "sum-1h1-exp", i)
            a = _udraw(rng, -0.8, 0.4)
            b = a + _udraw(rng, 1.5, 3.0)
            t = _udraw(rng, -0.85 * math.pi, 0.85 * math.pi)
            params = {"a": a, "b": b, "t": t}
            lhs = eval_H(series_spec_for(HKind.ONE_H1_MINUS_EXP, params)).value
            rhs = closed_form_H(HKind.ONE_H1_MINUS_EXP, params)
            return _pair_vs("sum-1h1-exp", params, lhs, rhs,
                            tol("sum-1h1-exp", TOL_CLASSICAL))
        jobs.append(("sum-1h1-exp", sum_1h1))

        def sum_1h1_plus(i=i):
            rng = _rng_for(cfg.seed, "sum-1h1-exp-plus", i)
            a = _udraw(rng, -0.8, 0.4)
            b = a + _udraw(rng, 1.5, 3.0)
            t = _udraw(rng, 0.2 * math.pi, 1.8 * math.pi)
            params = {"a": a, "b": b, "t": t}
            lhs = eval_H(series_spec_for(HKind.ONE_H1_PLUS_EXP, params)).value
            rhs = closed_form_H(HKind.ONE_H1_PLUS_EXP, params)
            return _pair_vs("sum-1h1-exp-plus", params, lhs, rhs,
                            tol("sum-1h1-exp-plus", TOL_CLASSICAL))
        jobs.append(("sum-1h1-exp-plus", sum_1h1_plus))

        def sum_1h1_unit(i=i):
            rng = _rng_for(cfg.seed, "sum-1h1-unit", i)
            a = _udraw(rng, -0.8, 0.3)
            b = a + _udraw(rng, 1.6, 3.0)
            lhs = eval_H(series_spec_for(HKind.ONE_H1_PLUS1, {"a": a, "b": b})).value
            return _pair_vs("sum-1h1-unit", {"a": a, "b": b}, lhs, 0j,
                            tol("sum-1h1-unit", Tolerance(abs=1e-9)))
        jobs.append(("sum-1h1-unit", sum_1h1_unit))

        for iid, kind in (("sum-2h2-gauss", HKind.GAUSS_2H2),
                          ("sum-3h3-well-poised", HKind.WELL_POISED_3H3),
                          ("sum-4h4-very-well-poised", HKind.VWP_4H4_MINUS1),
                          ("sum-5h5-very-well-poised", HKind.VWP_5H5)):
            def sum_kind(i=i, iid=iid, kind=kind):
                rng = _rng_for(cfg.seed, iid, i)
                params = _draw_summable(rng, kind)
                lhs = eval_H(series_spec_for(kind, params)).value
                rhs = closed_form_H(kind, params)
                return _pair_vs(iid, params, lhs, rhs, tol(iid, TOL_CLASSICAL))
            jobs.append((iid, sum_kind))

        def symmetry(i=i):
            rng = _rng_for(cfg.seed, "symmetry-transform", i)
            c = [_udraw(rng, 0.05, 0.4) for _ in range(2)]
            d = [x + _udraw(rng, 1.3, 2.0) for x in c]
            spec = BilateralSeriesSpec(c, d, cmath.exp(1j * _udraw(rng, 0.3, 6.0)))
            v1 = eval_H(spec)
            v2 = eval_H(symmetry_transform(spec))
            return _pair_vs("symmetry-transform",
                            {"c": c, "d": d, "z": spec.z}, v1.value, v2.value,
                            tol("symmetry-transform", TOL_CLASSICAL))
        jobs.append(("symmetry-transform", symmetry))

        def reflection(i=i):
            rng = _rng_for(cfg.seed, "gamma-reflection", i)
            z = complex(_udraw(rng, -20, 20), _udraw(rng, -20, 20))
            lhs = recip_gamma(z) * recip_gamma(1.0 - z)
            rhs = cmath.sin(math.pi * z) / math.pi
            return _pair_vs("gamma-reflection", {"z": z}, lhs, rhs,
                            tol("gamma-reflection", Tolerance(rel=1e-12, abs=1e-300)))
        jobs.append(("gamma-reflection", reflection))

        def dilog_pair(i=i):
            rng = _rng_for(cfg.seed, "dilog-pair-identity", i)
            t = _udraw(rng, -math.pi, math.pi)
            lhs = dilog(-cmath.exp(-1j * t)) + dilog(-cmath.exp(1j * t))
            rhs = t * t / 2.0 - math.pi ** 2 / 6.0
            return _pair_vs("dilog-pair-identity", {"t": t}, lhs, rhs,
                            tol("dilog-pair-identity", Tolerance(abs=1e-11)))
        jobs.append(("dilog-pair-identity", dilog_pair))

        def duplication(i=i):
            rng = _rng_for(cfg.seed, "gamma-duplication-instance", i)
            y = complex(_udraw(rng, -4, 4), _udraw(rng, -4, 4))
            lhs = 4.0 * cmath.cos(math.pi * y) * recip_gamma(y) * recip_gamma(-y)
            rhs = recip_gamma(2 * y) * recip_gamma(-2 * y)
            return _pair_vs("gamma-duplication-instance", {"y": y}, lhs, rhs,
                            tol("gamma-duplication-instance",
                                Tolerance(rel=1e-11, abs=1e-13)))
        jobs.append(("gamma-duplication-instance", duplication))

    return jobs


def _draw_summable(rng, kind: HKind) -> Dict[str, float]:
    """Parameter draws satisfying each summation theorem's convergence
    constraint with margin >= 0.5."""
    if kind is HKind.GAUSS_2H2:
        while True:
            a = _udraw(rng, -0.5, 0.45)
            b = _udraw(rng, -0.5, 0.45)
            c = _udraw(rng, 0.7, 1.9)
            d = _udraw(rng, 0.7, 1.9)
            if (c + d - a - b - 1).real >= 0.5:
                return {"a": a, "b": b, "c": c, "d": d}
    if kind is HKind.WELL_POISED_3H3:
        while True:
            a = _udraw(rng, 0.1, 0.8)
            b, c, d = (_udraw(rng, -0.6, 0.2) for _ in range(3))
            if (1 + 1.5 * a - b - c - d) >= 0.5 and abs(a - round(a)) > 0.05:
                return {"a": a, "b": b, "c": c, "d": d}
    if kind is HKind.VWP_4H4_MINUS1:
        while True:
            a = _udraw(rng, 0.1, 0.8)
            b, c, d = (_udraw(rng, -0.6, 0.2) for _ in range(3))
            if (1 + 1.5 * a - b - c - d) >= 1.5 and abs(a - round(a)) > 0.05:
                return {"a": a, "b": b, "c": c, "d": d}
    if kind is HKind.VWP_5H5:
        while True:
            a = _udraw(rng, 0.1, 0.8)
            b, c, d, e = (_udraw(rng, -0.5, 0.2) for _ in range(4))
            if (1 + 2 * a - b - c - d - e) >= 0.5 and abs(a - round(a)) > 0.05:
                return {"a": a, "b": b, "c": c, "d": d, "e": e}
    raise ValueError(kind)


# -- suite: classical-beta -------------------------------------------------------

_BETA_DRAWERS = {
    BetaKind.RAMANUJAN_M2: lambda rng: {
        "a1": _udraw(rng, 0.0, 1.2), "a2": _udraw(rng, 0.0, 1.2),
        "b1": _udraw(rng, 0.0, 1.2), "b2": _udraw(rng, 0.0, 1.2)},
    BetaKind.M3_COS: lambda rng: {
        "a": _udraw(rng, 0.05, 0.6), "b1": _udraw(rng, 0.05, 0.8),
        "b2": _udraw(rng, 0.05, 0.8), "b3": _udraw(rng, 0.05, 0.8)},
    BetaKind.M3_PLAIN: lambda rng: {
        "c1": _udraw(rng, 0.05, 0.8), "c2": _udraw(rng, 0.05, 0.8),
        "c3": _udraw(rng, 0.05, 0.8)},
    BetaKind.M4_PLAIN: lambda rng: {
        f"c{j}": _udraw(rng, 0.05, 0.8) for j in range(1, 5)},
    BetaKind.M4_VWP: lambda rng: {
        "a": _udraw(rng, 0.15, 0.6), "b1": _udraw(rng, 0.05, 0.7),
        "b2": _udraw(rng, 0.05, 0.7), "b3": _udraw(rng, 0.05, 0.7)},
    BetaKind.M4_VWP_SHIFTED: lambda rng: {
        "a": _udraw(rng, 0.15, 0.6), "c1": _udraw(rng, 0.05, 0.7),
        "c2": _udraw(rng, 0.05, 0.7), "c3": _udraw(rng, 0.05, 0.7)},
    BetaKind.M5_VWP: lambda rng: {
        "a": _udraw(rng, 0.15, 0.6),
        **{f"b{j}": _udraw(rng, 0.05, 0.6) for j in range(1, 5)}},
    BetaKind.M5_VWP_SHIFTED: lambda rng: {
        "a": _udraw(rng, 0.15, 0.6),
        **{f"c{j}": _udraw(rng, 0.05, 0.6) for j in range(1, 5)}},
    BetaKind.M5_VWP_THIRD: lambda rng: {
        f"c{j}": _udraw(rng, 0.05, 0.6) for j in range(1, 5)},
    BetaKind.M6_RIEMANN: lambda rng: {
        f"a{j}": _udraw(rng, 0.0, 0.7) for j in range(1, 7)},
}


def draw_beta_params(rng, kind: BetaKind) -> Dict[str, float]:
    if kind is BetaKind.RAMANUJAN_M2_COS:
        a1 = _udraw(rng, 0.1, 1.0)
        b1 = _udraw(rng, 0.1, 1.0)
        shift = _udraw(rng, -0.3, 0.6)
        return {"a1": a1, "b1": b1, "a2": a1 + shift, "b2": b1 + shift}
    return _BETA_DRAWERS[kind](rng)


def beta_record(kind: BetaKind, params: Dict[str, float],
                tol: Tolerance) -> VerificationRecord:
    lhs = integrate(integrand_spec_for(kind, params)).value
    rhs = beta_integral_closed(kind, params)
    return _pair_vs(f"beta-{kind.value}", params, lhs, rhs, tol)


def _jobs_classical_beta(cfg: SuiteConfig) -> List[Job]:
    jobs: List[Job] = []
    n = cfg.draws_per_identity

    def tol(iid, default):
        return cfg.tol_overrides.get(iid, default)

    for i in range(n):
        for kind in BetaKind:
            iid = f"beta-{kind.value}"
            deftol = TOL_HIGH_ORDER if kind in (
                BetaKind.M5_VWP, BetaKind.M5_VWP_SHIFTED, BetaKind.M5_VWP_THIRD,
                BetaKind.M6_RIEMANN) else Tolerance(rel=1e-7, abs=1e-12)

            def run(i=i, iid=iid, kind=kind, deftol=deftol):
                rng = _rng_for(cfg.seed, iid, i)
                params = draw_beta_params(rng, kind)
                return beta_record(kind, params, tol(iid, deftol))
            jobs.append((iid, run))

        def m6_identity(i=i):
            rng = _rng_for(cfg.seed, "grid-sum-alternating-identity", i)
            params = draw_beta_params(rng, BetaKind.M6_RIEMANN)
            s = poisson_terms(integrand_spec_for(BetaKind.M6_RIEMANN, params), 6)
            return _pair_vs("grid-sum-alternating-identity", params,
                            2 * s[0] + 4 * s[2], 2 * s[3] + 4 * s[1],
                            tol("grid-sum-alternating-identity", TOL_HIGH_ORDER))
        jobs.append(("grid-sum-alternating-identity", m6_identity))

        def m6_reduction(i=i):
            rng = _rng_for(cfg.seed, "degenerate-series-reduction", i)
            params = {f"a{j}": _udraw(rng, 0.0, 0.6) for j in range(1, 5)}
            spec6, spec5 = m6_reduced_5h5(params)
            v6 = eval_H(spec6).value
            v5 = eval_H(spec5).value
            return _pair_vs("degenerate-series-reduction", params, v6, v5,
                            tol("degenerate-series-reduction", TOL_CLASSICAL))
        jobs.append(("degenerate-series-reduction", m6_reduction))

        def barnes(i=i):
            rng = _rng_for(cfg.seed, "barnes-vertical-line", i)
            vals = [_udraw(rng, 0.3, 1.0) for _ in range(4)]
            lhs = barnes_quadrature(*vals)
            rhs = barnes_closed(*vals)
            return _pair_vs("barnes-vertical-line",
                            dict(zip("abcd", vals)), lhs, rhs,
                            tol("barnes-vertical-line", TOL_CLASSICAL))
        jobs.append(("barnes-vertical-line", barnes))

        def double_int(i=i):
            rng = _rng_for(cfg.seed, "double-cosine-power-question", i)
            bs = [_udraw(rng, 0.2, 0.8) for _ in range(3)]
            lhs, rhs = double_integral_open_question(*bs)
            return _pair_vs("double-cosine-power-question",
                            dict(zip(("b1", "b2", "b3"), bs)), lhs, rhs,
                            tol("double-cosine-power-question",
                                Tolerance(rel=1e-6, abs=1e-9)))
        jobs.append(("double-cosine-power-question", double_int))

    return jobs


# -- suite: q-core ---------------------------------------------------------------

def _draw_q_fourier(rng) -> QIntegrandSpec:
    q = _safe_q(rng)
    b = _udraw(rng, 0.1, 0.5)
    a = _udraw(rng, 1.7, 3.2)
    w = _udraw(rng, 0.8, 1.25)
    return QIntegrandSpec(q, [a], [b], [w], 0.0)


def _jobs_q_core(cfg: SuiteConfig) -> List[Job]:
    jobs: List[Job] = []
    n = cfg.draws_per_identity

    def tol(iid, default):
        return cfg.tol_overrides.get(iid, default)

    for i in range(n):
        def qpoch_dual(i=i):
            rng = _rng_for(cfg.seed, "qpoch-negative-dual", i)
            q = _safe_q(rng)
            a = complex(_udraw(rng, -0.9, 0.9), _udraw(rng, -0.5, 0.5))
            m = int(rng.integers(1, 21))
            lhs = qpoch(a, q, -m)
            rhs = q ** (0.5 * m * (m + 1)) / ((-a) ** m * qpoch(q / a, q, m))
            return _pair_vs("qpoch-negative-dual", {"a": a, "q": q, "n": -m},
                            lhs, rhs, tol("qpoch-negative-dual",
                                          Tolerance(rel=1e-12, abs=1e-300)))
        jobs.append(("qpoch-negative-dual", qpoch_dual))

        def r1psi1(i=i):
            rng = _rng_for(cfg.seed, "sum-1psi1", i)
            q = float(rng.choice([0.3, 0.5, 0.8]))
            a = _udraw(rng, -0.5, 0.5)
            b = a + _udraw(rng, 0.7, 2.0)
            zlo = q ** (b - a)
            z = cmath.exp(1j * _udraw(rng, 0, 2 * math.pi)) * _udraw(
                rng, zlo + 0.07 * (1 - zlo), 0.93)
            params = {"a": a, "b": b, "z": z}
            lhs = eval_psi(psi_spec_for(QKind.RAMANUJAN_1PSI1, params, q)).value
            rhs = closed_form_q(QKind.RAMANUJAN_1PSI1, params, q)
            return _pair_vs("sum-1psi1", {**params, "q": q}, lhs, rhs,
                            tol("sum-1psi1", Tolerance(rel=1e-9, abs=1e-13)))
        jobs.append(("sum-1psi1", r1psi1))

        def b6psi6(i=i):
            rng = _rng_for(cfg.seed, "sum-6psi6", i)
            q = float(rng.choice([0.3, 0.5, 0.8]))
            a = _udraw(rng, 0.2, 0.5)
            rest = [_udraw(rng, 1.2, 1.7) for _ in range(4)]
            params = dict(zip("bcde", rest))
            params["a"] = a
            lhs = eval_psi(psi_spec_for(QKind.BAILEY_6PSI6, params, q)).value
            rhs = closed_form_q(QKind.BAILEY_6PSI6, params, q)
            return _pair_vs("sum-6psi6", {**params, "q": q}, lhs, rhs,
                            tol("sum-6psi6", Tolerance(rel=1e-9, abs=1e-13)))
        jobs.append(("sum-6psi6", b6psi6))

        def triple(i=i):
            rng = _rng_for(cfg.seed, "jacobi-triple-product", i)
            q = _safe_q(rng)
            w = complex(_udraw(rng, 0.3, 1.6), _udraw(rng, -0.6, 0.6))
            lhs = 0j
            for nn in range(-60, 61):
                lhs += q ** (0.5 * nn * (nn - 1)) * w ** nn
            rhs = qpoch_inf(q, q) * qpoch_inf(-w, q) * qpoch_inf(-q / w, q)
            return _pair_vs("jacobi-triple-product", {"q": q, "w": w},
                            lhs, rhs, tol("jacobi-triple-product",
                                          Tolerance(rel=1e-10, abs=1e-13)))
        jobs.append(("jacobi-triple-product", triple))

        def qf_plain(i=i):
            rng = _rng_for(cfg.seed, "q-fourier-plain", i)
            sp = _draw_q_fourier(rng)
            lhs = q_integrate(sp).value
            rhs = q_fourier_closed(sp)
            return _pair_vs("q-fourier-plain",
                            {"q": sp.q, "a": sp.a[0], "b": sp.b[0], "w": sp.w[0]},
                            lhs, rhs, tol("q-fourier-plain", Tolerance(rel=1e-7, abs=1e-13)))
        jobs.append(("q-fourier-plain", qf_plain))

        def qf_shift(i=i):
            rng = _rng_for(cfg.seed, "q-fourier-strip", i)
            base = _draw_q_fourier(rng)
            lo = math.log(abs(base.b[0] / base.w[0]))
            hi = math.log(abs(base.a[0] / base.w[0]))
            ti = _udraw(rng, lo + 0.15 * (hi - lo), hi - 0.15 * (hi - lo))
            t = complex(_udraw(rng, -1.5, 1.5), ti if i % 2 == 0 else 0.0)
            sp = QIntegrandSpec(base.q, base.a, base.b, base.w, t)
            lhs = q_integrate(sp).value
            rhs = q_fourier_closed(sp)
            return _pair_vs("q-fourier-strip",
                            {"q": sp.q, "a": sp.a[0], "b": sp.b[0],
                             "w": sp.w[0], "t": t},
                            lhs, rhs, tol("q-fourier-strip", Tolerance(rel=1e-7, abs=1e-13)))
        jobs.append(("q-fourier-strip", qf_shift))

        def q_gauss(i=i):
            rng = _rng_for(cfg.seed, "q-gaussian-integral", i)
            q = _udraw(rng, 0.35, 0.92)
            w = complex(_udraw(rng, 0.5, 2.0), _udraw(rng, -0.5, 0.5))
            lq = math.log(q)

            def logf(x):
                return 0.5 * x * (x - 1.0) * lq + x * cmath.log(w)
            from .qintegrals import q_quadrature
            got = q_quadrature(lambda x: 0.5 * x * (x - 1.0) * lq
                               + x * cmath.log(w), 0.0, 0.05, 0.05,
                               Tolerance(abs=1e-13, rel=1e-12),
                               freq_hint=abs(cmath.log(w).imag) + 1.0).value
            want = gaussian_q_integral(q, w)
            return _pair_vs("q-gaussian-integral", {"q": q, "w": w}, got, want,
                            tol("q-gaussian-integral", Tolerance(rel=1e-9, abs=1e-13)))
        jobs.append(("q-gaussian-integral", q_gauss))

        def abel(i=i):
            rng = _rng_for(cfg.seed, "abel-poisson-kernel", i)
            q = _safe_q(rng)
            m = int(rng.integers(1, 3))
            a = [_udraw(rng, 1.8, 3.0) for _ in range(m)]
            b = [_udraw(rng, 0.1, 0.45) for _ in range(m)]
            w = [_udraw(rng, 0.8, 1.2) for _ in range(m)]
            t = _udraw(rng, -1.0, 1.0)
            sp = QIntegrandSpec(q, a, b, w, t)
            target = abel_psi_target(sp)
            seq = abel_poisson_psi(sp, [0.9, 0.99, 0.999])
            gaps = [abs(v - target) for _, v in seq]
            floor = 1e-9 * max(1.0, abs(target))
            ok = all(gaps[j + 1] < gaps[j] or gaps[j + 1] < floor
                     for j in range(len(gaps) - 1))
            final = seq[-1][1] if ok else complex(math.inf)
            return _pair_vs("abel-poisson-kernel",
                            {"q": q, "a": a, "b": b, "w": w, "t": t,
                             "gaps": gaps},
                            final, target,
                            tol("abel-poisson-kernel", Tolerance(rel=1e-4, abs=1e-8)))
        jobs.append(("abel-poisson-kernel", abel))

        def lemma21(i=i):
            rng = _rng_for(cfg.seed, "qpoch-exponent-bound", i)
            s = _udraw(rng, 0.2, 2.0)
            tpart = _udraw(rng, -2.0, 2.0)
            alpha = complex(s, tpart)
            q = _udraw(rng, 0.05, 0.95)
            nn = int(rng.integers(1, 51))
            K = abs(gamma(complex(s)) / gamma(complex(s, tpart)))
            lhs = abs(qpoch(q ** alpha if False else _qpower(q, alpha), q, nn))
            rhs = K * abs(qpoch(q ** s, q, nn))
            viol = max(0.0, lhs - rhs * (1 + 1e-12))
            return _pair_vs("qpoch-exponent-bound",
                            {"alpha": alpha, "q": q, "n": nn}, viol, 0j,
                            tol("qpoch-exponent-bound", Tolerance(abs=1e-13)))
        jobs.append(("qpoch-exponent-bound", lemma21))

        def lemma22(i=i):
            rng = _rng_for(cfg.seed, "qpoch-ratio-monotone", i)
            beta = _udraw(rng, 0.1, 1.5)
            alpha = beta + _udraw(rng, 0.0, 1.5)
            q = _udraw(rng, 0.05, 0.95)
            nn = int(rng.integers(1, 51))
            lhs = (qpoch(q ** alpha, q, nn) / qpoch(q ** beta, q, nn)).real
            rhs = (pochhammer(alpha, nn) / pochhammer(beta, nn)).real
            viol = max(0.0, lhs - rhs * (1 + 1e-12))
            return _pair_vs("qpoch-ratio-monotone",
                            {"alpha": alpha, "beta": beta, "q": q, "n": nn},
                            viol, 0j, tol("qpoch-ratio-monotone", Tolerance(abs=1e-13)))
        jobs.append(("qpoch-ratio-monotone", lemma22))

    return jobs


def _qpower(q: float, alpha: complex) -> complex:
    return cmath.exp(complex(alpha) * math.log(q))


# -- suite: q-beta ---------------------------------------------------------------

def _jobs_q_beta(cfg: SuiteConfig) -> List[Job]:
    jobs: List[Job] = []
    n = cfg.draws_per_identity

    def tol(iid, default):
        return cfg.tol_overrides.get(iid, default)

    draws = {
        QBetaKind.I_FULL: lambda rng: {"alpha": _udraw(rng, 0.6, 1.3),
                                       **{k: _udraw(rng, 0.2, 0.5) for k in "abcd"}},
        QBetaKind.I_D0: lambda rng: {"alpha": _udraw(rng, 0.6, 1.3),
                                     **{k: _udraw(rng, 0.2, 0.6) for k in "abc"}},
        QBetaKind.I_C0: lambda rng: {"alpha": _udraw(rng, 0.6, 1.3),
                                     **{k: _udraw(rng, 0.2, 0.7) for k in "ab"}},
        QBetaKind.I_3PSI6: lambda rng: {"alpha": _udraw(rng, 0.6, 1.3),
                                        "a": _udraw(rng, 0.2, 0.8)},
        QBetaKind.I_2PSI6: lambda rng: {"alpha": _udraw(rng, 0.6, 1.3)},
    }
    for i in range(n):
        for kind in (QBetaKind.I_FULL, QBetaKind.I_D0, QBetaKind.I_C0,
                     QBetaKind.I_3PSI6, QBetaKind.I_2PSI6):
            for q in (0.4, 0.7):
                iid = f"qbeta-{kind.value}"

                def run(i=i, kind=kind, q=q, iid=iid):
                    rng = _rng_for(cfg.seed, f"{iid}-{q}", i)
                    params = draws[kind](rng)
                    return qbeta_family(kind, params, q, tol(iid, TOL_Q))
                jobs.append((iid, run))

            def psi_rep(i=i, kind=kind):
                rng = _rng_for(cfg.seed, f"qbeta-{kind.value}-psirep", i)
                params = draws[kind](rng)
                return qbeta_psi_consistency(kind, params, 0.5,
                                             tol(f"qbeta-{kind.value}-psi-representation",
                                                 Tolerance(rel=1e-9, abs=1e-12)))
            jobs.append((f"qbeta-{kind.value}-psi-representation", psi_rep))

        for kind in (QBetaKind.I_FULL, QBetaKind.I_D0):
            def gform(i=i, kind=kind):
                rng = _rng_for(cfg.seed, f"qbeta-{kind.value}-gammaform", i)
                names = "abcd" if kind is QBetaKind.I_FULL else "abc"
                params = {"alpha": _udraw(rng, 0.1, 0.4),
                          **{k: _udraw(rng, 0.1, 0.4) for k in names}}
                return qbeta_gamma_form(kind, params, 0.5,
                                        tol(f"qbeta-{kind.value}-gamma-form", TOL_Q))
            jobs.append((f"qbeta-{kind.value}-gamma-form", gform))

        def h44(i=i):
            rng = _rng_for(cfg.seed, "doubled-argument-beta", i)
            cs = [_udraw(rng, 0.05, 0.5) for _ in range(3)]
            spec = IntegrandSpec([-1.0] + cs, [-1.0] + cs, 0.0,
                                 ((2.0 + 0j, math.pi), (2.0 + 0j, -math.pi)))
            lhs = integrate(spec).value
            rhs = h44_integral_value(*cs)
            return _pair_vs("doubled-argument-beta",
                            dict(zip(("a", "b", "c"), cs)), lhs, rhs,
                            tol("doubled-argument-beta", Tolerance(rel=1e-7, abs=1e-12)))
        jobs.append(("doubled-argument-beta", h44))

        def h44_m4c(i=i):
            rng = _rng_for(cfg.seed, "doubled-argument-vs-shifted", i)
            cs = [_udraw(rng, 0.05, 0.5) for _ in range(3)]
            lhs = math.sqrt(3.0) / 4.0 * h44_integral_value(*cs)
            rhs = beta_integral_closed(
                BetaKind.M4_VWP_SHIFTED,
                {"a": 1.0 / 3.0, "c1": cs[0], "c2": cs[1], "c3": cs[2]})
            return _pair_vs("doubled-argument-vs-shifted",
                            dict(zip(("a", "b", "c"), cs)), lhs, rhs,
                            tol("doubled-argument-vs-shifted",
                                Tolerance(rel=1e-12, abs=1e-15)))
        jobs.append(("doubled-argument-vs-shifted", h44_m4c))

    return jobs


# -- suite: limits ---------------------------------------------------------------

_Q_SEQ = (0.9, 0.99, 0.999)


def _monotone_record(iid: str, inputs: Dict, gaps: Sequence[float],
                     final_tol: float) -> VerificationRecord:
    """Record for a q -> 1 gap sequence: lhs is the final gap; a broken
    monotone decrease is reported as an infinite gap so the pass flag stays
    equivalent to the tolerance comparison."""
    ok = all(gaps[j] > gaps[j + 1] for j in range(len(gaps) - 1))
    final = gaps[-1] if ok else math.inf
    rec = VerificationRecord.compare(iid, {**inputs, "gaps": list(gaps)},
                                     complex(final), 0j,
                                     Tolerance(abs=final_tol))
    return rec


def _jobs_limits(cfg: SuiteConfig) -> List[Job]:
    jobs: List[Job] = []
    n = cfg.draws_per_identity

    def tol(iid, default):
        return cfg.tol_overrides.get(iid, default)

    for i in range(n):
        def thm21(i=i):
            rng = _rng_for(cfg.seed, "basic-to-classical-limit", i)
            m = int(rng.integers(1, 3))
            alpha = [_udraw(rng, 0.05, 0.4) for _ in range(m)]
            beta = [a + _udraw(rng, 1.1, 2.2) / m + (2.0 / m - 1.0) for a in alpha]
            sigma = sum(beta) - sum(alpha)
            path = QtoOnePath(alpha, beta, 0.5 * sigma,
                              cmath.exp(1j * _udraw(rng, 0.4, 5.9)), _Q_SEQ)
            gaps = [g for _, g in theorem21_limit_probe(path)]
            return _monotone_record("basic-to-classical-limit",
                                    {"alpha": alpha, "beta": beta,
                                     "tau": path.tau, "z": path.z},
                                    gaps, 1e-2)
        jobs.append(("basic-to-classical-limit", thm21))

        def qbinom(i=i):
            rng = _rng_for(cfg.seed, "q-binomial-ratio-limit", i)
            alpha = _udraw(rng, 0.0, 0.6)
            beta = alpha + _udraw(rng, 0.2, 1.0)
            z = cmath.exp(1j * _udraw(rng, 0.5, 5.8)) * _udraw(rng, 0.4, 1.0)
            target = q_binomial_ratio_target(alpha, beta, z)
            gaps = [abs(closed_form_q(QKind.Q_BINOMIAL_RATIO_LIMIT,
                                      {"alpha": alpha, "beta": beta, "z": z}, q)
                        - target) for q in _Q_SEQ]
            return _monotone_record("q-binomial-ratio-limit",
                                    {"alpha": alpha, "beta": beta, "z": z},
                                    gaps, 1e-2)
        jobs.append(("q-binomial-ratio-limit", qbinom))

        def lconst(i=i):
            rng = _rng_for(cfg.seed, "qbeta-limit-constant", i)
            alpha = _udraw(rng, 0.05, 0.45)
            target = limit_constant_target(alpha)
            gaps = [abs(limit_constant(q, alpha) - target) / abs(target)
                    for q in _Q_SEQ]
            return _monotone_record("qbeta-limit-constant", {"alpha": alpha},
                                    gaps, 5e-3)
        jobs.append(("qbeta-limit-constant", lconst))

        def hq(i=i):
            rng = _rng_for(cfg.seed, "q-fourier-classical-limit", i)
            alpha = _udraw(rng, 1.1, 1.8)
            beta = _udraw(rng, 2.1, 2.8)
            t = float(rng.choice([0.0, 0.7, math.pi, 1.5 * math.pi]))
            target = h_of_q_target(alpha, beta, t)
            gaps = [abs(h_of_q(q, alpha, beta, t) - target) for q in _Q_SEQ]
            ok = all(gaps[j] >= gaps[j + 1] for j in range(len(gaps) - 1))
            final = gaps[-1] if ok else math.inf
            return VerificationRecord.compare(
                "q-fourier-classical-limit",
                {"alpha": alpha, "beta": beta, "t": t, "gaps": gaps},
                complex(final), 0j,
                tol("q-fourier-classical-limit", Tolerance(abs=2e-2)))
        jobs.append(("q-fourier-classical-limit", hq))

        def qgamma_limit(i=i):
            rng = _rng_for(cfg.seed, "q-gamma-classical-limit", i)
            x = _udraw(rng, 0.4, 4.0)
            target = gamma(complex(x))
            gaps = [abs(q_gamma(x, q) - target) for q in _Q_SEQ]
            return _monotone_record("q-gamma-classical-limit", {"x": x},
                                    gaps, 1e-2)
        jobs.append(("q-gamma-classical-limit", qgamma_limit))

        def asy_bound(i=i):
            rng = _rng_for(cfg.seed, "qpoch-asymptotic-bound", i)
            r = _udraw(rng, 0.1, 0.85)
            th = _udraw(rng, 0.4, 5.9)
            a = r * cmath.exp(1j * th)
            worst = 0.0
            for u in (0.1, 0.05, 0.025):
                mgap = lemma_qpoch_log_gap(a, u)
                bound = qpoch_inf_asymptotic(a, 0.0, u).error_bound
                worst = max(worst, mgap - bound)
            return _pair_vs("qpoch-asymptotic-bound", {"a": a},
                            complex(max(worst, 0.0)), 0j,
                            tol("qpoch-asymptotic-bound", Tolerance(abs=0.0, rel=1.0)))
        jobs.append(("qpoch-asymptotic-bound", asy_bound))

        def asy_alpha(i=i):
            rng = _rng_for(cfg.seed, "qpoch-asymptotic-shifted", i)
            a = complex(_udraw(rng, 0.1, 0.5), _udraw(rng, 0.05, 0.4))
            alpha = _udraw(rng, 0.5, 2.0)
            gaps = []
            for u in (0.1, 0.05, 0.025):
                q = math.exp(-u)
                approx = qpoch_inf_asymptotic(a, alpha, u).value
                exact = qpoch_inf(a * q ** alpha, q)
                gaps.append(abs(approx / exact - 1.0))
            return _monotone_record("qpoch-asymptotic-shifted",
                                    {"a": a, "alpha": alpha}, gaps, 2e-2)
        jobs.append(("qpoch-asymptotic-shifted", asy_alpha))

    return jobs


_SUITE_BUILDERS = {
    "classical-core": _jobs_classical_core,
    "classical-beta": _jobs_classical_beta,
    "q-core": _jobs_q_core,
    "q-beta": _jobs_q_beta,
    "limits": _jobs_limits,
}


def _worker_count() -> int:
    env = os.environ.get("RB_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            pass
    return min(4, os.cpu_count() or 1)


def run_suite(config: SuiteConfig) -> SuiteReport:
    """Run one named suite; deterministic in (suite, seed, draws) apart from
    the runtime_ms fields."""
    jobs = _SUITE_BUILDERS[config.suite](config)

    def run_one(job: Job) -> VerificationRecord:
        iid, fn = job
        t0 = time.perf_counter()
        try:
            rec = fn()
        except RBetaError as exc:
            rec = VerificationRecord(iid, {"error": str(exc)}, 0j, 0j,
                                     math.inf, math.inf,
                                     Tolerance(abs=1e-300), False)
        rec.runtime_ms = (time.perf_counter() - t0) * 1e3
        return rec

    workers = _worker_count()
    if workers == 1:
        records = [run_one(j) for j in jobs]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(run_one, jobs))
    return SuiteReport.build(records, config)


# -- serialization ---------------------------------------------------------------

def _jsonable(v):
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    if isinstance(v, (np.floating, np.integer)):
        return v.item()
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, dict):
        return {k: _jsonable(x) for k, x in v.items()}
    return v


def record_to_dict(rec: VerificationRecord) -> Dict:
    return {
        "identity_id": rec.identity_id,
        "inputs": _jsonable(rec.inputs),
        "lhs": _jsonable(complex(rec.lhs)),
        "rhs": _jsonable(complex(rec.rhs)),
        "abs_gap": rec.abs_gap,
        "rel_gap": rec.rel_gap,
        "tol": {"abs": rec.tol.abs, "rel": rec.tol.rel},
        "pass": bool(rec.passed),
        "runtime_ms": rec.runtime_ms,
    }


def report_to_dict(report: SuiteReport) -> Dict:
    return {
        "schema": 1,
        "tool_version": report.tool_version,
        "config": {
            "suite": report.config.suite,
            "seed": report.config.seed,
            "draws_per_identity": report.config.draws_per_identity,
            "format": report.config.format,
        },
        "summary": {
            "total": report.total,
            "passed": report.passed,
            "failed": report.failed,
            "max_rel_gap": report.max_rel_gap,
        },
        "records": [record_to_dict(r) for r in report.records],
    }


def report_to_json(report: SuiteReport) -> str:
    return json.dumps(report_to_dict(report), indent=2, sort_keys=True)


_CSV_COLUMNS = ["identity_id", "inputs", "lhs_re", "lhs_im", "rhs_re",
                "rhs_im", "abs_gap", "rel_gap", "tol_abs", "tol_rel", "pass",
                "runtime_ms"]


def report_to_csv(report: SuiteReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(_CSV_COLUMNS)
    for r in report.records:
        w.writerow([
            r.identity_id,
            json.dumps(_jsonable(r.inputs), sort_keys=True),
            repr(complex(r.lhs).real), repr(complex(r.lhs).imag),
            repr(complex(r.rhs).real), repr(complex(r.rhs).imag),
            repr(r.abs_gap), repr(r.rel_gap),
            repr(r.tol.abs), repr(r.tol.rel),
            int(r.passed), repr(r.runtime_ms),
        ])
    return buf.getvalue()


def write_report(report: SuiteReport, path: str, fmt: str = "json") -> None:
    """Atomic write (temp file + rename) of the serialized report."""
    text = report_to_json(report) if fmt == "json" else report_to_csv(report)
    tmp = f"{path}.tmp.{os.getpid()}"
    with open(tmp, "w", encoding="utf-8") as fh:
        fh.write(text)
    os.replace(tmp, path)
