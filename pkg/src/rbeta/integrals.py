"""Quadrature of Ramanujan-type integrals

    integral over R of  e^(-i x t) * W(x) / prod_j Gamma(a_j+1+x) Gamma(b_j+1-x)

with trigonometric-polynomial weights W, the grid-sum (Poisson) route to the
same integrals, integral representations of bilateral series, and the
closed-form beta-integral values.

The quadrature is composite Gauss on [-X, X] plus analytically reflected,
Levin-accelerated oscillatory tails: on each side the integrand factors into
a smooth algebraically-decaying part and a trigonometric polynomial, so the
tail is a sum of single-signal interval series that accelerate extremely
well.
"""

from __future__ import annotations

import cmath
import enum
import itertools
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .acceleration import levin_u
from .bilateral import (BilateralSeriesSpec, eval_H,
                        cancel_matching_parameters)
from .core import Tolerance, DEFAULT_TOL, VerificationRecord
from .errors import ConstraintViolation, MarginViolation
from .gammafns import _lanczos_log, gamma, recip_gamma
from .quadrature import gauss_panels, tanh_sinh

__all__ = [
    "IntegrandSpec", "QuadratureResult", "weight_gm", "integrate",
    "cauchy_integral_check", "poisson_terms", "poisson_sum_rhs",
    "support_check", "integral_repr_H", "BetaKind", "beta_integral_closed",
    "integrand_spec_for", "barnes_closed", "barnes_quadrature",
    "double_integral_open_question",
]

WeightTerm = Tuple[complex, float]


def weight_gm(m: int) -> Tuple[WeightTerm, ...]:
    """Exponential-term expansion of the Dirichlet-type weight
    sin(m pi x)/sin(pi x)."""
    if m < 1:
        raise ValueError("m must be positive")
    terms: List[WeightTerm] = []
    if m % 2 == 1:
        terms.append((1.0 + 0j, 0.0))
        for n in range(1, (m - 1) // 2 + 1):
            terms.append((1.0 + 0j, 2 * n * math.pi))
            terms.append((1.0 + 0j, -2 * n * math.pi))
    else:
        for n in range(1, m // 2 + 1):
            terms.append((1.0 + 0j, (2 * n - 1) * math.pi))
            terms.append((1.0 + 0j, -(2 * n - 1) * math.pi))
    return tuple(terms)


def weight_cos(coeff: complex, freq: float) -> Tuple[WeightTerm, WeightTerm]:
    """coeff * 2cos(freq x) as two exponential terms."""
    return ((complex(coeff), float(freq)), (complex(coeff), -float(freq)))


@dataclass(frozen=True)
class IntegrandSpec:
    """m-factor reciprocal-gamma integrand with frequency t and an optional
    trigonometric weight given as complex-exponential terms."""

    a: Tuple[complex, ...]
    b: Tuple[complex, ...]
    t: float
    weight: Tuple[WeightTerm, ...] = ()

    def __init__(self, a: Sequence[complex], b: Sequence[complex], t: float,
                 weight: Sequence[WeightTerm] = ()):
        if len(a) != len(b) or len(a) == 0:
            raise ValueError("a and b must be equal-length nonempty lists")
        object.__setattr__(self, "a", tuple(complex(x) for x in a))
        object.__setattr__(self, "b", tuple(complex(x) for x in b))
        object.__setattr__(self, "t", float(t))
        object.__setattr__(self, "weight",
                           tuple((complex(c), float(f)) for c, f in weight))

    @property
    def m(self) -> int:
        return len(self.a)

    @property
    def decay_exponent(self) -> complex:
        return sum(self.a) + sum(self.b) + self.m

    def margin(self) -> float:
        return self.decay_exponent.real - 1.0

    def weight_terms(self) -> Tuple[WeightTerm, ...]:
        return self.weight if self.weight else ((1.0 + 0j, 0.0),)


@dataclass
class QuadratureResult:
    value: complex
    est_error: float
    panels: int
    truncation_X: float


def _require_margin(spec: IntegrandSpec) -> None:
    if spec.margin() <= 0:
        raise MarginViolation(
            f"integrability margin {spec.margin():.3g} must be positive")


def _f_core(spec: IntegrandSpec, x: np.ndarray) -> np.ndarray:
    # multiply factor pairs (one growing, one decaying) to keep partial
    # products in double range out to |x| ~ 160
    v = np.ones(x.shape, dtype=complex)
    with np.errstate(over="ignore", under="ignore", invalid="ignore"):
        for aj, bj in zip(spec.a, spec.b):
            v = v * (recip_gamma(aj + 1.0 + x) * recip_gamma(bj + 1.0 - x))
    w = np.zeros(x.shape, dtype=complex)
    for cc, nu in spec.weight_terms():
        w += cc * np.exp(1j * nu * x)
    return v * w * np.exp(-1j * spec.t * x)


def _sin_product_harmonics(params: Sequence[complex]) -> Dict[int, complex]:
    """Coefficients gamma_h with prod_j sin(pi(x - p_j)) =
    sum_h gamma_h exp(i pi h x)."""
    m = len(params)
    out: Dict[int, complex] = {}
    for eps in itertools.product((1, -1), repeat=m):
        coeff = 1.0 + 0j
        h = 0
        for e, pj in zip(eps, params):
            coeff *= e * cmath.exp(-1j * math.pi * e * pj)
            h += e
        out[h] = out.get(h, 0j) + coeff / (2j) ** m
    return out


def _tail_one_side(num_params: Sequence[complex], den_params: Sequence[complex],
                   tau_terms: Sequence[WeightTerm], X: float, omega: float,
                   n_intervals: int = 48) -> Tuple[complex, float]:
    """integral from X to infinity of
        R(x) * prod_j sin(pi(x - num_j))/pi^m * sum_k c_k exp(-i tau_k x) dx
    with R(x) = exp(sum_j lgamma(x - num_j) - lgamma(den_j + 1 + x)), summed
    as unit-interval series accelerated per harmonic signal.
    """
    m = len(num_params)
    pn = np.asarray(num_params, dtype=complex)[:, None]
    pd = np.asarray(den_params, dtype=complex)[:, None]
    harmonics = _sin_product_harmonics(num_params)

    # sub-panel layout inside each unit interval, sized for the fastest signal
    sub = max(2, int(math.ceil(2.0 * omega / math.pi)))
    se = np.linspace(0.0, 1.0, sub + 1)
    mids = 0.5 * (se[:-1] + se[1:])
    halfs = 0.5 * (se[1:] - se[:-1])
    from numpy.polynomial.legendre import leggauss
    xg, wg = leggauss(16)
    # nodes: (n_intervals, sub, 16)
    xs = (X + np.arange(n_intervals)[:, None, None] + mids[None, :, None]
          + halfs[None, :, None] * xg[None, None, :])
    flat = xs.ravel()
    with np.errstate(over="ignore", under="ignore"):
        logR = (np.sum(_lanczos_log(flat[None, :] - pn), axis=0)
                - np.sum(_lanczos_log(pd + 1.0 + flat[None, :]), axis=0))
        R = np.exp(logR).reshape(xs.shape)
    value = 0j
    err = 0.0
    for cc, tau in tau_terms:
        if cc == 0:
            continue
        for h, gh in harmonics.items():
            wv = math.pi * h - tau
            phase = np.exp(1j * wv * xs)
            iv = (R * phase * wg[None, None, :]).sum(axis=2) * halfs[None, :]
            seq = iv.sum(axis=1)
            amp = abs(cc * gh)
            if amp * np.abs(seq).sum() < 1e-18:
                continue
            v, e = levin_u(seq)
            value += cc * gh * v
            err += amp * e
    return value / math.pi ** m, err / math.pi ** m


def _choose_X(spec: IntegrandSpec, tol_abs: float) -> float:
    params = [abs(x.real) for x in spec.a + spec.b]
    params += [abs(x.imag) for x in spec.a + spec.b]
    X = max(16.0, 8.0 + 2.0 * max(params))
    # empirical tail fit: |f| ~ C (1+x)^(m-1-s); extend X until the raw
    # algebraic bound falls below a loose target (the accelerated tail
    # integration then removes the rest)
    s = spec.decay_exponent.real
    expo = s - (spec.m - 1)
    target = max(tol_abs, 1e-12) * 1e3
    for _ in range(12):
        probe = float(np.abs(_f_core(spec, np.array([X / 2.0, X]))).max())
        if expo > 1.0:
            bound = probe * (1.0 + X) / (expo - 1.0)
        else:
            bound = probe * (1.0 + X)
        if bound <= target or X >= 96.0:
            break
        X += 10.0
    return min(X, 96.0)


def integrate(spec: IntegrandSpec, tol: Tolerance = DEFAULT_TOL,
              X: Optional[float] = None) -> QuadratureResult:
    """Evaluate the integral by Gauss panels on [-X, X] plus reflected,
    accelerated oscillatory tails on both sides."""
    _require_margin(spec)
    tol_abs = max(tol.abs, 1e-14)
    wmax = max((abs(nu) for _, nu in spec.weight_terms()), default=0.0)
    omega = spec.m * math.pi + abs(spec.t) + wmax
    if X is None:
        X = _choose_X(spec, tol_abs)
    width = min(0.5, math.pi / (2.0 * omega))
    core, core_err, n_panels = gauss_panels(lambda x: _f_core(spec, x),
                                            -X, X, width)
    # right tail: reflect the b-gammas
    right, err_r = _tail_one_side(
        spec.b, spec.a,
        [(cc, spec.t - nu) for cc, nu in spec.weight_terms()], X, omega)
    # left tail via x -> -y: reflect the a-gammas
    left, err_l = _tail_one_side(
        spec.a, spec.b,
        [(cc, -(spec.t - nu)) for cc, nu in spec.weight_terms()], X, omega)
    value = core + right + left
    est = core_err + 8.0 * (err_r + err_l) + 1e-16 * abs(value)
    return QuadratureResult(value, est, n_panels, X)


def fourier_single_factor(a: complex, b: complex, t: float) -> complex:
    """Closed-form Fourier transform of a single reciprocal-gamma factor:
    compactly supported on |t| <= pi."""
    if abs(t) > math.pi:
        return 0j
    a = complex(a)
    b = complex(b)
    return ((2.0 * math.cos(t / 2.0)) ** (a + b) / gamma(a + b + 1.0)
            * cmath.exp(-0.5j * t * (b - a)))


def cauchy_integral_check(gamma_: complex, delta: complex,
                          tol: Tolerance = Tolerance(rel=1e-9, abs=1e-12)
                          ) -> VerificationRecord:
    """Finite cosine-power integral against its gamma-ratio value."""
    gamma_ = complex(gamma_)
    delta = complex(delta)
    if gamma_.real <= -0.9:
        raise MarginViolation("needs Re gamma > -0.9 for stable quadrature")

    def f(tt: np.ndarray) -> np.ndarray:
        return np.cos(tt) ** gamma_ * np.exp(1j * delta * tt)

    lhs, _ = tanh_sinh(f, -math.pi / 2.0, math.pi / 2.0, max_level=11)
    rhs = (math.pi * gamma(gamma_ + 1.0)
           / (2.0 ** gamma_ * gamma(1.0 + 0.5 * (gamma_ + delta))
              * gamma(1.0 + 0.5 * (gamma_ - delta))))
    return VerificationRecord.compare(
        "cauchy-cosine-integral",
        {"gamma": gamma_, "delta": delta}, lhs, rhs, tol)


# -- Poisson/grid-sum route ----------------------------------------------------

def poisson_terms(spec: IntegrandSpec, p: int,
                  tol: Tolerance = DEFAULT_TOL) -> List[complex]:
    """The p grid-sum components S_0..S_{p-1}; their sum equals the integral
    for |t| <= p pi."""
    _require_margin(spec)
    if p < spec.m:
        raise ConstraintViolation(f"p = {p} must be >= m = {spec.m}")
    if abs(spec.t) > p * math.pi + 1e-12:
        raise ConstraintViolation("needs |t| <= p pi")
    if spec.weight:
        raise ConstraintViolation("grid-sum route applies to weight-free integrands")
    out: List[complex] = []
    for k in range(p):
        kp = k / p
        ck = 1.0 + 0j
        for aj, bj in zip(spec.a, spec.b):
            ck *= complex(recip_gamma(aj + 1.0 + kp)) * complex(recip_gamma(bj + 1.0 - kp))
        if ck == 0:
            out.append(0j)
            continue
        hspec = BilateralSeriesSpec(
            [-bj + kp for bj in spec.b],
            [aj + 1.0 + kp for aj in spec.a],
            (-1.0) ** spec.m * cmath.exp(-1j * spec.t))
        hv = eval_H(hspec, tol)
        out.append(ck * cmath.exp(-1j * kp * spec.t) * hv.value / p)
    return out


def poisson_sum_rhs(spec: IntegrandSpec, p: int,
                    tol: Tolerance = DEFAULT_TOL) -> complex:
    return sum(poisson_terms(spec, p, tol))


def grid_sum_direct(spec: IntegrandSpec, k: int, p: int,
                    n_terms: int = 100) -> complex:
    """(1/p) sum over l of f(l + k/p) e^{-i(l + k/p)t}, Levin-accelerated on
    both ends; internal cross-check for the series form of the grid sums."""
    kp = k / p
    l_pos = np.arange(0, n_terms)
    l_neg = np.arange(-1, -n_terms - 1, -1)

    def fvals(ls: np.ndarray) -> np.ndarray:
        x = ls + kp
        base = _f_core(IntegrandSpec(spec.a, spec.b, spec.t), x)
        return base

    tp = fvals(l_pos)
    tn = fvals(l_neg)
    vp, _ = levin_u(tp[: 80])
    vn, _ = levin_u(tn[: 80])
    return (vp + vn) / p


def support_check(spec: IntegrandSpec, t_values: Sequence[float],
                  tol: Tolerance = Tolerance(abs=1e-8)) -> List[VerificationRecord]:
    """Verify vanishing of the transform beyond |t| = m pi."""
    out = []
    for t in t_values:
        if abs(t) < spec.m * math.pi:
            raise ConstraintViolation(f"|t|={abs(t):.4g} below support edge")
        sp = IntegrandSpec(spec.a, spec.b, float(t), spec.weight)
        res = integrate(sp, tol)
        out.append(VerificationRecord.compare(
            "compact-support", {"a": sp.a, "b": sp.b, "t": t},
            res.value, 0j, tol))
    return out


def integral_repr_H(a: Sequence[complex], b: Sequence[complex], t: float,
                    weight_order: Optional[int] = None,
                    tol: Tolerance = Tolerance(rel=1e-8, abs=1e-10)
                    ) -> VerificationRecord:
    """Weighted integral against its bilateral-series representation.

    weight_order m (default): weight sin(m pi x)/sin(pi x), series argument
    -exp(-it), t in [-pi, pi].  weight_order m-1: t must be 0 and the series
    argument is +1.
    """
    a = tuple(complex(x) for x in a)
    b = tuple(complex(x) for x in b)
    m = len(a)
    if weight_order is None:
        weight_order = m
    if weight_order == m:
        if abs(t) > math.pi:
            raise ConstraintViolation("needs |t| <= pi")
        z = -cmath.exp(-1j * t)
    elif weight_order == m - 1:
        if t != 0.0:
            raise ConstraintViolation("reduced-order weight requires t = 0")
        z = 1.0 + 0j
    else:
        raise ConstraintViolation("weight order must be m or m-1")
    spec = IntegrandSpec(a, b, t, weight_gm(weight_order) if weight_order >= 1 else ())
    lhs = integrate(spec, Tolerance(abs=1e-12, rel=1e-12)).value
    c0 = 1.0 + 0j
    for aj, bj in zip(a, b):
        c0 *= complex(recip_gamma(aj + 1.0)) * complex(recip_gamma(bj + 1.0))
    hs = BilateralSeriesSpec([-bj for bj in b], [aj + 1.0 for aj in a], z)
    rhs = c0 * eval_H(hs).value
    return VerificationRecord.compare(
        "integral-series-representation",
        {"a": a, "b": b, "t": t, "weight_order": weight_order}, lhs, rhs, tol)


# -- closed-form beta integrals -------------------------------------------------

class BetaKind(enum.Enum):
    RAMANUJAN_M2 = "RamanujanM2"
    RAMANUJAN_M2_COS = "RamanujanM2Cos"
    M3_COS = "M3Cos"
    M3_PLAIN = "M3Plain"
    M4_PLAIN = "M4Plain"
    M4_VWP = "M4VWP"
    M4_VWP_SHIFTED = "M4VWPShifted"
    M5_VWP = "M5VWP"
    M5_VWP_SHIFTED = "M5VWPShifted"
    M5_VWP_THIRD = "M5VWPThird"
    M6_RIEMANN = "M6Riemann"


def _gamma_prod(vals: Sequence[complex]) -> complex:
    out = 1.0 + 0j
    for v in vals:
        out *= gamma(complex(v))
    return out


def _pairs(vals: Sequence[complex]) -> List[complex]:
    return [vi + vj for vi, vj in itertools.combinations(vals, 2)]


def _margin_check(value: complex, what: str, slack: float = 0.1) -> None:
    if value.real <= slack - 1e-12:
        raise ConstraintViolation(f"needs Re({what}) > {slack}, got {value.real:.4g}")


def beta_integral_closed(kind: BetaKind, params: Dict[str, complex],
                         tol: Tolerance = DEFAULT_TOL) -> complex:
    """The printed closed-form value of each beta integral (gamma ratios, or
    a bilateral-series value where no gamma form exists).  No quadrature."""
    kind = BetaKind(kind)
    p = {k: complex(v) for k, v in params.items()}

    if kind is BetaKind.RAMANUJAN_M2:
        a1, a2, b1, b2 = p["a1"], p["a2"], p["b1"], p["b2"]
        _margin_check(a1 + a2 + b1 + b2 + 1, "sum(a)+sum(b)+1")
        return (gamma(a1 + b1 + a2 + b2 + 1)
                / _gamma_prod([a1 + b1 + 1, a1 + b2 + 1, a2 + b1 + 1, a2 + b2 + 1]))
    if kind is BetaKind.RAMANUJAN_M2_COS:
        a1, a2, b1, b2 = p["a1"], p["a2"], p["b1"], p["b2"]
        if abs((a1 - b1) - (a2 - b2)) > 1e-12:
            raise ConstraintViolation("needs a1 - b1 = a2 - b2")
        _margin_check(a1 + a2 + b1 + b2 + 1, "sum(a)+sum(b)+1")
        return (cmath.cos(0.5 * math.pi * (b1 - a1))
                / _gamma_prod([0.5 * (a1 + b1) + 1, 0.5 * (a2 + b2) + 1,
                               a1 + b2 + 1]))
    if kind is BetaKind.M3_COS:
        a = p["a"]
        bs = [p["b1"], p["b2"], p["b3"]]
        _margin_check(1 + 1.5 * a + sum(bs), "1 + 3a/2 + sum(b)")
        return (cmath.cos(0.5 * math.pi * a) * gamma(1 + 1.5 * a + sum(bs))
                / _gamma_prod([1 + 0.5 * a + bj for bj in bs])
                / _gamma_prod([1 + a + s for s in _pairs(bs)]))
    if kind is BetaKind.M3_PLAIN:
        cs = [p["c1"], p["c2"], p["c3"]]
        _margin_check(1 + sum(cs), "1 + sum(c)")
        C = 1.0 / _gamma_prod([cj + 1.25 for cj in cs]) / _gamma_prod([cj + 0.75 for cj in cs])
        hs = BilateralSeriesSpec([0.25 - cj for cj in cs],
                                 [1.25 + cj for cj in cs], -1.0)
        return C * eval_H(hs, tol).value
    if kind is BetaKind.M4_PLAIN:
        cs = [p["c1"], p["c2"], p["c3"], p["c4"]]
        _margin_check(sum(cs) + 1.5, "sum(c) + 3/2")
        C = 1.0 / _gamma_prod([cj + 1.25 for cj in cs]) / _gamma_prod([cj + 0.75 for cj in cs])
        hs = BilateralSeriesSpec([0.25 - cj for cj in cs],
                                 [1.25 + cj for cj in cs], 1.0)
        return C * eval_H(hs, tol).value
    if kind is BetaKind.M4_VWP:
        a = p["a"]
        bs = [p["b1"], p["b2"], p["b3"]]
        _margin_check(3 * a + 2 * sum(bs) + 1, "3a + 2 sum(b) + 1")
        return 1.0 / _gamma_prod([0.5 * a, -0.5 * a, 1 - a, 1 + a]
                                 + [1 + a + s for s in _pairs(bs)])
    if kind is BetaKind.M4_VWP_SHIFTED:
        a = p["a"]
        cs = [p["c1"], p["c2"], p["c3"]]
        _margin_check(sum(cs) + 0.5, "sum(c) + 1/2")
        return 1.0 / _gamma_prod([0.5 * a, -0.5 * a, 1 - a, 1 + a]
                                 + [1 + s for s in _pairs(cs)])
    if kind is BetaKind.M5_VWP:
        a = p["a"]
        bs = [p["b1"], p["b2"], p["b3"], p["b4"]]
        _margin_check(1 + 2 * a + sum(bs), "1 + 2a + sum(b)")
        return (gamma(1 + 2 * a + sum(bs))
                / _gamma_prod([0.5 * a, -0.5 * a, 1 - a, 1 + a]
                              + [1 + a + s for s in _pairs(bs)]))
    if kind is BetaKind.M5_VWP_SHIFTED:
        a = p["a"]
        cs = [p["c1"], p["c2"], p["c3"], p["c4"]]
        _margin_check(1 + sum(cs), "1 + sum(c)")
        return (gamma(1 + sum(cs))
                / _gamma_prod([0.5 * a, -0.5 * a, 1 - a, 1 + a]
                              + [1 + s for s in _pairs(cs)]))
    if kind is BetaKind.M5_VWP_THIRD:
        cs = [p["c1"], p["c2"], p["c3"], p["c4"]]
        _margin_check(1 + sum(cs), "1 + sum(c)")
        return (-gamma(1 + sum(cs))
                / (8 * math.pi ** 2 * _gamma_prod([1 + s for s in _pairs(cs)])))
    if kind is BetaKind.M6_RIEMANN:
        av = [p[f"a{j}"] for j in range(1, 7)]
        _margin_check(sum(av) + 2.5, "sum(a) + 5/2")
        spec = integrand_spec_for(BetaKind.M6_RIEMANN, params)
        s = poisson_terms(spec, 6, tol)
        return 2 * s[0] + 4 * s[2]
    raise ValueError(f"unknown kind {kind}")


def integrand_spec_for(kind: BetaKind, params: Dict[str, complex]) -> IntegrandSpec:
    """The quadrature-side integrand matched to each closed form."""
    kind = BetaKind(kind)
    p = {k: complex(v) for k, v in params.items()}
    if kind is BetaKind.RAMANUJAN_M2:
        return IntegrandSpec([p["a1"], p["a2"]], [p["b1"], p["b2"]], 0.0)
    if kind is BetaKind.RAMANUJAN_M2_COS:
        return IntegrandSpec([p["a1"], p["a2"]], [p["b1"], p["b2"]], 0.0,
                             weight_cos(1.0, math.pi))
    if kind is BetaKind.M3_COS:
        a = p["a"]
        bs = [p["b1"], p["b2"], p["b3"]]
        return IntegrandSpec([a + bj for bj in bs], bs, 0.0,
                             weight_cos(1.0, math.pi))
    if kind is BetaKind.M3_PLAIN:
        cs = [p["c1"], p["c2"], p["c3"]]
        return IntegrandSpec(cs, cs, 0.0)
    if kind is BetaKind.M4_PLAIN:
        cs = [p["c1"], p["c2"], p["c3"], p["c4"]]
        return IntegrandSpec(cs, cs, 0.0)
    if kind is BetaKind.M4_VWP:
        a = p["a"]
        bs = [p["b1"], p["b2"], p["b3"]]
        return IntegrandSpec([0.5 * a - 1] + [a + bj for bj in bs],
                             [-0.5 * a - 1] + bs, 0.0,
                             weight_cos(1.0, math.pi) + weight_cos(1.0, 3 * math.pi))
    if kind is BetaKind.M4_VWP_SHIFTED:
        a = p["a"]
        cs = [p["c1"], p["c2"], p["c3"]]
        return IntegrandSpec([-1.0] + cs, [-1.0] + cs, 0.0,
                             weight_cos(cmath.cos(0.5 * math.pi * a), math.pi)
                             + weight_cos(cmath.cos(1.5 * math.pi * a), 3 * math.pi))
    if kind is BetaKind.M5_VWP:
        a = p["a"]
        bs = [p["b1"], p["b2"], p["b3"], p["b4"]]
        return IntegrandSpec([0.5 * a - 1] + [a + bj for bj in bs],
                             [-0.5 * a - 1] + bs, 0.0,
                             weight_cos(1.0, math.pi) + weight_cos(1.0, 3 * math.pi))
    if kind is BetaKind.M5_VWP_SHIFTED:
        a = p["a"]
        cs = [p["c1"], p["c2"], p["c3"], p["c4"]]
        return IntegrandSpec([-1.0] + cs, [-1.0] + cs, 0.0,
                             weight_cos(cmath.cos(0.5 * math.pi * a), math.pi)
                             + weight_cos(cmath.cos(1.5 * math.pi * a), 3 * math.pi))
    if kind is BetaKind.M5_VWP_THIRD:
        cs = [p["c1"], p["c2"], p["c3"], p["c4"]]
        return IntegrandSpec([-1.0] + cs, [-1.0] + cs, 0.0,
                             ((0.5 + 0j, math.pi), (0.5 + 0j, -math.pi)))
    if kind is BetaKind.M6_RIEMANN:
        av = [p[f"a{j}"] for j in range(1, 7)]
        return IntegrandSpec(av, av, 0.0)
    raise ValueError(f"unknown kind {kind}")


def m6_reduced_5h5(params: Dict[str, complex]) -> Tuple[BilateralSeriesSpec, BilateralSeriesSpec]:
    """The degenerate-parameter series behind the sixth-order grid-sum value
    (fifth and sixth parameters -1 and -1/2) and its cancellation rewrite."""
    p = {k: complex(v) for k, v in params.items()}
    av = [p[f"a{j}"] for j in range(1, 5)] + [-1.0, -0.5]
    third = 1.0 / 3.0
    spec6 = BilateralSeriesSpec(
        [third - aj for aj in av],
        [aj + 1.0 + third for aj in av], 1.0)
    return spec6, cancel_matching_parameters(spec6)


# -- extra verification targets --------------------------------------------------

def barnes_closed(a: complex, b: complex, c: complex, d: complex) -> complex:
    """Meromorphic-integrand beta integral value (vertical-line cousin of the
    entire-integrand family)."""
    for x in (a, b, c, d):
        if complex(x).real <= 0:
            raise ConstraintViolation("needs positive real parts")
    return (_gamma_prod([a + c, a + d, b + c, b + d])
            / gamma(a + b + c + d))


def barnes_quadrature(a: complex, b: complex, c: complex, d: complex) -> complex:
    """(1/2pi) integral of Gamma(a+ix)Gamma(b+ix)Gamma(c-ix)Gamma(d-ix)."""
    X = 25.0 + 2.0 * max(abs(complex(v)) for v in (a, b, c, d))

    def f(x: np.ndarray) -> np.ndarray:
        return (gamma(a + 1j * x) * gamma(b + 1j * x)
                * gamma(c - 1j * x) * gamma(d - 1j * x))

    v, _, _ = gauss_panels(f, -X, X, 0.25)
    return v / (2.0 * math.pi)


def double_integral_open_question(b1: float, b2: float, b3: float
                                  ) -> Tuple[complex, complex]:
    """2-D quadrature of the proposed cosine-power double integral and the
    conjectured gamma-ratio value (checked numerically, never asserted as a
    theorem)."""
    b1, b2, b3 = float(b1), float(b2), float(b3)

    def inner(s1: float) -> complex:
        def g(s2: np.ndarray) -> np.ndarray:
            return ((2 * np.cos(0.5 * s1)) ** (2 * b1)
                    * (2 * np.cos(0.5 * s2)) ** (2 * b2)
                    * np.abs(2 * np.sin(0.5 * (s1 + s2))) ** (2 * b3))
        v, _ = tanh_sinh(g, -s1, math.pi, max_level=9)
        return v

    def outer(s1s: np.ndarray) -> np.ndarray:
        return np.array([inner(s) for s in s1s])

    lhs, _ = tanh_sinh(outer, -math.pi, math.pi, max_level=8)
    rhs = (2 * math.pi ** 2
           * _gamma_prod([2 * b1 + 1, 2 * b2 + 1, 2 * b3 + 1, b1 + b2 + b3 + 1])
           / _gamma_prod([b1 + 1, b2 + 1, b3 + 1, b1 + b2 + 1, b1 + b3 + 1,
                          b2 + b3 + 1]))
    return lhs, rhs
