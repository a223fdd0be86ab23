"""q-deformed Ramanujan-type integrals: Gaussian-weighted infinite-product
integrands, their product closed forms, the Abel/Poisson-kernel route back
to bilateral basic series, and the q-beta integral family with its q->1
constants.

Integrands are evaluated in log space (the infinite products overflow long
before the integrand itself leaves double range) and integrated with Gauss
panels; truncation comes from the geometric decay ratios of the factors.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Sequence, Tuple

import numpy as np

from .core import Tolerance, DEFAULT_TOL, VerificationRecord
from .errors import (AnnulusViolation, ConstraintViolation, DomainError,
                     StripViolation)
from .gammafns import gamma
from .quadrature import gauss_panels, gauss_panels_graded
from .qseries import (QSeriesSpec, eval_psi, log_qpoch_inf, qpoch_inf,
                      qpoch_inf_multi, q_gamma)

__all__ = [
    "QIntegrandSpec", "q_integrate", "q_fourier_closed", "abel_poisson_psi",
    "abel_psi_target", "QBetaKind", "qbeta_family", "limit_constant",
    "limit_constant_target", "h_of_q", "h_of_q_target", "h_of_q_probe",
]


@dataclass(frozen=True)
class QIntegrandSpec:
    """Product of m Gaussian-type factors
    (b_j q^x; q)_inf (q^(1-x)/a_j; q)_inf q^(x(x-1)/2) w_j^x, with frequency t."""

    q: complex
    a: Tuple[complex, ...]
    b: Tuple[complex, ...]
    w: Tuple[complex, ...]
    t: complex = 0.0

    def __init__(self, q: complex, a: Sequence[complex], b: Sequence[complex],
                 w: Sequence[complex], t: complex = 0.0):
        if not (0 < abs(complex(q)) < 1):
            raise DomainError("base must satisfy 0 < |q| < 1")
        if not (len(a) == len(b) == len(w)) or not a:
            raise ValueError("a, b, w must be equal-length nonempty lists")
        object.__setattr__(self, "q", complex(q))
        object.__setattr__(self, "a", tuple(complex(x) for x in a))
        object.__setattr__(self, "b", tuple(complex(x) for x in b))
        object.__setattr__(self, "w", tuple(complex(x) for x in w))
        object.__setattr__(self, "t", complex(t))

    @property
    def m(self) -> int:
        return len(self.a)

    def check_annulus(self) -> None:
        pb = float(np.prod(np.abs(self.b)))
        pw = float(np.prod(np.abs(self.w)))
        pa = float(np.prod(np.abs(self.a)))
        if not pb < pw < pa:
            raise AnnulusViolation(
                f"needs prod|b| < prod|w| < prod|a| (got {pb:.4g}, {pw:.4g}, {pa:.4g})")

    def check_strip(self) -> None:
        pb = float(np.prod(np.abs(self.b)))
        pw = float(np.prod(np.abs(self.w)))
        pa = float(np.prod(np.abs(self.a)))
        ti = self.t.imag
        if not (math.log(pb / pw) < ti < math.log(pa / pw)):
            raise StripViolation(
                f"Im t = {ti:.4g} outside ({math.log(pb / pw):.4g}, "
                f"{math.log(pa / pw):.4g})")

    def log_f(self, x: np.ndarray) -> np.ndarray:
        q = self.q
        lq = cmath.log(q)
        out = np.zeros(x.shape, dtype=complex)
        for aj, bj, wj in zip(self.a, self.b, self.w):
            out = out + log_qpoch_inf(bj * np.exp(x * lq), q)
            out = out + log_qpoch_inf((1.0 / aj) * np.exp((1.0 - x) * lq), q)
            out = out + cmath.log(wj) * x
        out = out + self.m * 0.5 * x * (x - 1.0) * lq
        return out

    def decay_ratios(self) -> Tuple[float, float]:
        # |f(x+1)/f(x)| limits: prod|w/a| e^{Im t} rightward,
        # prod|b/w| e^{-Im t} leftward
        pa = float(np.prod(np.abs(self.a)))
        pb = float(np.prod(np.abs(self.b)))
        pw = float(np.prod(np.abs(self.w)))
        ti = self.t.imag
        return pw / pa * math.exp(ti), pb / pw * math.exp(-ti)


@dataclass
class QQuadResult:
    value: complex
    est_error: float
    panels: int
    truncation_X: float


def _geometric_truncation(log_mag: Callable[[float], float], ratio: float,
                          tol_abs: float, x0: float = 4.0) -> float:
    """Smallest X >= x0 with boundary magnitude * geometric tail below tol.

    Probes several offset points per candidate X so isolated zeros of the
    integrand cannot fake decay.
    """
    if ratio >= 1.0:
        raise AnnulusViolation("integrand does not decay on this side")
    X = x0
    for _ in range(200):
        lm = max(log_mag(X), log_mag(X - 0.372), log_mag(X - 0.709))
        lm_prev = max(log_mag(X - 1.0), log_mag(X - 1.372), log_mag(X - 1.709))
        # in the transient the local one-step decay can be far slower than
        # the asymptotic ratio; trust the worse of the two
        local = math.exp(min(0.0, max(-700.0, lm - lm_prev)))
        rho = min(max(ratio, local), 0.98)
        mag = math.exp(min(700.0, lm))
        tail = mag * rho / (1.0 - rho)
        if tail < tol_abs:
            return X
        X += max(1.0, math.log(max(tail / tol_abs, 2.0)) / -math.log(rho) * 0.5)
    return X


def q_quadrature(log_f: Callable[[np.ndarray], np.ndarray], t: complex,
                 rho_right: float, rho_left: float,
                 tol: Tolerance = DEFAULT_TOL,
                 freq_hint: float = 0.0) -> QQuadResult:
    """Gauss-panel integral of exp(log_f(x) - i t x) over the line, truncated
    where the geometric envelopes fall below tolerance."""
    tol_abs = max(tol.abs, 1e-15)

    def f(x: np.ndarray) -> np.ndarray:
        with np.errstate(over="ignore", under="ignore"):
            return np.exp(log_f(x) - 1j * complex(t) * x)

    def logmag_at(x: float) -> float:
        lx = np.array([float(x)])
        return float((log_f(lx) - 1j * complex(t) * lx)[0].real)

    Xr = _geometric_truncation(logmag_at, rho_right, tol_abs)
    Xl = _geometric_truncation(lambda x: logmag_at(-x), rho_left, tol_abs)
    omega = abs(complex(t).real) + freq_hint + 1.0
    width = min(0.5, math.pi / (2.0 * omega))
    value, err, n = gauss_panels(f, -Xl, Xr, width)
    # truncation was driven to tol_abs on each side
    return QQuadResult(value, err + 2.0 * tol_abs + 1e-16 * abs(value), n,
                       max(Xr, Xl))


def q_integrate(spec: QIntegrandSpec, tol: Tolerance = DEFAULT_TOL) -> QQuadResult:
    """Integral of the m-factor q-integrand times exp(-i x t); t may be
    complex inside the analyticity strip."""
    spec.check_annulus()
    if spec.t.imag != 0.0:
        spec.check_strip()
    rr, rl = spec.decay_ratios()
    # chirp from complex base: local frequency grows linearly, folded into
    # the panel width through a conservative hint
    chirp = abs(cmath.log(spec.q).imag) * spec.m
    freq = chirp * 40.0 + sum(abs(cmath.log(w).imag) for w in spec.w)
    return q_quadrature(spec.log_f, spec.t, rr, rl, tol, freq_hint=freq)


def q_fourier_closed(spec: QIntegrandSpec) -> complex:
    """Product closed form of the single-factor q-Fourier transform (shift
    w -> w e^{-it} of the t = 0 evaluation)."""
    if spec.m != 1:
        raise ConstraintViolation("closed form applies to single-factor integrands")
    spec.check_annulus()
    if spec.t.imag != 0.0:
        spec.check_strip()
    q, a, b, w, t = spec.q, spec.a[0], spec.b[0], spec.w[0], spec.t
    u = cmath.log(1.0 / q)
    eit = cmath.exp(-1j * t)
    val = qpoch_inf(b / a, q)
    val /= qpoch_inf(-(w / a) * eit, q) * qpoch_inf(-(b / w) / eit, q)
    val *= (cmath.sqrt(2.0 * math.pi * w) * cmath.exp(-0.5j * t)
            * cmath.exp((cmath.log(w) - 1j * t) ** 2 / (2.0 * u)))
    val /= complex(q) ** 0.125 * cmath.sqrt(u)
    return val


# -- Abel/Poisson kernel route to the bilateral basic series -------------------

def abel_psi_target(spec: QIntegrandSpec, tol: Tolerance = DEFAULT_TOL) -> complex:
    """prod_j (b_j;q)_inf (q/a_j;q)_inf times the bilateral basic series at
    z = (-1)^m e^{-it} prod(w_j/a_j)."""
    spec.check_annulus()
    z = (-1.0) ** spec.m * cmath.exp(-1j * spec.t)
    for aj, wj in zip(spec.a, spec.w):
        z *= wj / aj
    pref = 1.0 + 0j
    for aj, bj in zip(spec.a, spec.b):
        pref *= qpoch_inf(bj, spec.q) * qpoch_inf(spec.q / aj, spec.q)
    psi = eval_psi(QSeriesSpec(spec.q, spec.a, spec.b, z), tol)
    return pref * psi.value


def abel_poisson_psi(spec: QIntegrandSpec, r_sequence: Sequence[float],
                     tol: Tolerance = DEFAULT_TOL) -> List[Tuple[float, complex]]:
    """Kernel-regularized integrals for each r < 1; they approach
    abel_psi_target as r -> 1."""
    spec.check_annulus()
    rr, rl = spec.decay_ratios()
    tol_abs = max(tol.abs, 1e-13)

    def logmag_at(x: float) -> float:
        lx = np.array([float(x)])
        return float((spec.log_f(lx) - 1j * spec.t * lx)[0].real)

    out: List[Tuple[float, complex]] = []
    for r in r_sequence:
        r = float(r)
        if not 0.0 <= r < 1.0:
            raise DomainError("kernel parameter r must lie in [0, 1)")

        def f(x: np.ndarray, r=r) -> np.ndarray:
            with np.errstate(over="ignore", under="ignore"):
                base = np.exp(spec.log_f(x) - 1j * spec.t * x)
            if r == 0.0:
                return base
            kern = (1.0 - r * r) / (1.0 - 2.0 * r * np.cos(2.0 * math.pi * x) + r * r)
            return base * kern

        peak = (1.0 + r) / (1.0 - r)
        Xr = _geometric_truncation(logmag_at, rr, tol_abs / peak)
        Xl = _geometric_truncation(lambda x: logmag_at(-x), rl, tol_abs / peak)
        edges = _kernel_graded_edges(-Xl, Xr, r)
        value, err, _ = gauss_panels_graded(f, edges)
        out.append((r, value))
    return out


def _kernel_graded_edges(lo: float, hi: float, r: float) -> np.ndarray:
    """Panel edges graded toward the integers, where the Poisson kernel has
    width ~ (1-r)."""
    if r < 0.5:
        n = max(1, int(math.ceil((hi - lo) / 0.5)))
        return np.linspace(lo, hi, n + 1)
    w = max(1e-7, (1.0 - r) / 4.0)
    offs = [0.0]
    d = w
    while d < 0.5:
        offs.append(d)
        d *= 2.0
    offs.append(0.5)
    edges = set()
    k0 = int(math.floor(lo))
    for k in range(k0, int(math.ceil(hi)) + 1):
        for o in offs:
            for e in (k - o, k + o):
                if lo <= e <= hi:
                    edges.add(e)
    edges.update((lo, hi))
    return np.array(sorted(edges))


# -- q-beta family --------------------------------------------------------------

class QBetaKind(enum.Enum):
    I_FULL = "I_full"
    I_D0 = "I_d0"
    I_C0 = "I_c0"
    I_3PSI6 = "I_3psi6"
    I_2PSI6 = "I_2psi6"
    LIMIT_CONSTANT = "LimitConstant"


def _qbeta_log_f(alpha: complex, ys: Sequence[complex], q: complex):
    """log of (1 + q^(2x) alpha^2) prod_y (-q^(x+1) alpha y, q^(1-x) y / alpha; q)_inf
    * q^(2x^2 - x) alpha^(4x)."""
    la = cmath.log(alpha)
    lq = cmath.log(q)

    def log_f(x: np.ndarray) -> np.ndarray:
        # stable log(1 + e^v): the shifted branch dominates far to the left
        v = 2.0 * x * lq + 2.0 * la
        big = v.real > 30.0
        out = np.empty(x.shape, dtype=complex)
        out[big] = v[big] + np.log1p(np.exp(-v[big]))
        out[~big] = np.log1p(np.exp(v[~big]))
        for y in ys:
            out = out + log_qpoch_inf(-q * y * alpha * np.exp(x * lq), q)
            out = out + log_qpoch_inf((y / alpha) * np.exp((1.0 - x) * lq), q)
        out = out + (2.0 * x * x - x) * lq + 4.0 * x * la
        return out
    return log_f


def _qbeta_prefactor(alpha: complex, q: complex) -> complex:
    u = cmath.log(1.0 / q)
    return (cmath.sqrt(2.0 * math.pi) * alpha
            * cmath.exp(2.0 * cmath.log(alpha) ** 2 / u)
            / (complex(q) ** 0.125 * cmath.sqrt(u)))


def _qbeta_psi_rep(alpha: complex, ys: Sequence[complex], q: complex,
                   tol: Tolerance) -> complex:
    """Very-well-poised bilateral basic series representation shared by the
    whole family; confluent entries appear as zero lower parameters."""
    q14 = complex(q) ** 0.25
    q54 = complex(q) ** 1.25
    uppers = [q54, -q54] + [-1j * q14 / y for y in ys]
    lowers = [q14, -q14] + [1j * q54 * y for y in ys] + [0.0] * (4 - len(ys))
    z = complex(q)
    for y in ys:
        z *= y
    z *= (-1j * q14) ** (4 - len(ys))
    pref = _qbeta_prefactor(alpha, q)
    pref *= qpoch_inf_multi([1j * q54 * y for y in ys]
                            + [1j * complex(q) ** 0.75 * y for y in ys], q)
    pref /= qpoch_inf_multi([q, complex(q) ** 0.5, complex(q) ** 1.5], q)
    psi = eval_psi(QSeriesSpec(q, uppers, lowers, z), tol)
    return pref * psi.value


def qbeta_family(kind: QBetaKind, params: Dict[str, complex], q: float,
                 tol: Tolerance = Tolerance(rel=1e-6, abs=1e-12)
                 ) -> VerificationRecord:
    """Quadrature of a q-beta integral against its printed product form.

    LimitConstant instead compares the q->1 prefactor at the given q with its
    limit value -i e^(2 i pi alpha) / (2 pi).
    """
    kind = QBetaKind(kind)
    p = {k: complex(v) for k, v in params.items()}
    if kind is QBetaKind.LIMIT_CONSTANT:
        alpha = p["alpha"]
        lhs = limit_constant(q, alpha)
        rhs = limit_constant_target(alpha)
        return VerificationRecord.compare(
            "qbeta-limit-constant", {"alpha": alpha, "q": q}, lhs, rhs, tol)

    alpha = p["alpha"]
    ys = {
        QBetaKind.I_FULL: ["a", "b", "c", "d"],
        QBetaKind.I_D0: ["a", "b", "c"],
        QBetaKind.I_C0: ["a", "b"],
        QBetaKind.I_3PSI6: ["a"],
        QBetaKind.I_2PSI6: [],
    }[kind]
    yv = [p[name] for name in ys]
    prod_y = 1.0 + 0j
    for y in yv:
        prod_y *= y
    if kind is QBetaKind.I_FULL and not abs(prod_y) < 1.0 / abs(q):
        raise ConstraintViolation("needs |abcd| < 1/|q|")

    # quadrature side: measure the actual one-step decay ratio a few units
    # out instead of the analytic envelopes (the Gaussian factor dominates
    # whenever fewer than four product pairs remain)
    log_f = _qbeta_log_f(alpha, yv, q)
    probe = 6.0
    lf = log_f(np.array([probe, probe + 1.0, -probe, -probe - 1.0]))
    rr = math.exp(min(50.0, (lf[1] - lf[0]).real))
    rl = math.exp(min(50.0, (lf[3] - lf[2]).real))
    rr = min(max(rr, 1e-6), 0.97)
    rl = min(max(rl, 1e-6), 0.97)
    res = q_quadrature(log_f, 0.0, rr, rl, tol,
                       freq_hint=abs(cmath.log(alpha).imag) * 4.0
                       + sum(abs(cmath.log(complex(y)).imag) for y in yv))
    lhs = res.value

    pref = _qbeta_prefactor(alpha, q)
    if kind is QBetaKind.I_FULL:
        a, b, c, d = yv
        rhs = pref * qpoch_inf_multi(
            [-q * a * b, -q * a * c, -q * a * d, -q * b * c, -q * b * d,
             -q * c * d], q) / qpoch_inf(q * a * b * c * d, q)
    elif kind is QBetaKind.I_D0:
        a, b, c = yv
        rhs = pref * qpoch_inf_multi([-q * a * b, -q * a * c, -q * b * c], q)
    elif kind is QBetaKind.I_C0:
        a, b = yv
        rhs = pref * qpoch_inf(-q * a * b, q)
    else:
        rhs = pref
    return VerificationRecord.compare(
        f"qbeta-{kind.value}", {**{k: v for k, v in params.items()}, "q": q},
        lhs, rhs, tol)


def qbeta_psi_consistency(kind: QBetaKind, params: Dict[str, complex], q: float,
                          tol: Tolerance = Tolerance(rel=1e-9, abs=1e-12)
                          ) -> VerificationRecord:
    """Product form of a q-beta integral against its bilateral basic series
    representation (no quadrature on either side)."""
    kind = QBetaKind(kind)
    p = {k: complex(v) for k, v in params.items()}
    alpha = p["alpha"]
    ys = {QBetaKind.I_FULL: ["a", "b", "c", "d"],
          QBetaKind.I_D0: ["a", "b", "c"],
          QBetaKind.I_C0: ["a", "b"],
          QBetaKind.I_3PSI6: ["a"],
          QBetaKind.I_2PSI6: []}[kind]
    yv = [p[name] for name in ys]
    pref = _qbeta_prefactor(alpha, q)
    if kind is QBetaKind.I_FULL:
        a, b, c, d = yv
        lhs = pref * qpoch_inf_multi(
            [-q * a * b, -q * a * c, -q * a * d, -q * b * c, -q * b * d,
             -q * c * d], q) / qpoch_inf(q * a * b * c * d, q)
    elif kind is QBetaKind.I_D0:
        a, b, c = yv
        lhs = pref * qpoch_inf_multi([-q * a * b, -q * a * c, -q * b * c], q)
    elif kind is QBetaKind.I_C0:
        a, b = yv
        lhs = pref * qpoch_inf(-q * a * b, q)
    else:
        lhs = pref
    rhs = _qbeta_psi_rep(alpha, yv, q, DEFAULT_TOL)
    return VerificationRecord.compare(
        f"qbeta-{kind.value}-psi-representation",
        {**{k: v for k, v in params.items()}, "q": q}, lhs, rhs, tol)


def limit_constant(q: float, alpha: complex) -> complex:
    """The q-dependent prefactor of the q-gamma rewrites of the q-beta
    integrals, computed in log space."""
    if not 0.0 < q < 1.0:
        raise DomainError("q must lie in (0,1)")
    alpha = complex(alpha)
    u = math.log(1.0 / q)
    lg = (0.5 * math.log(2.0 * math.pi) + (alpha - 0.125) * math.log(q)
          + 2.0 * cmath.log(-1j * q ** alpha) ** 2 / u
          - math.log(1.0 - q) - 0.5 * math.log(u)
          - 3.0 * log_qpoch_inf(q, q))
    return -1j * cmath.exp(lg)


def limit_constant_target(alpha: complex) -> complex:
    return -1j * cmath.exp(2j * math.pi * complex(alpha)) / (2.0 * math.pi)


def qbeta_gamma_form_rhs(params: Dict[str, complex], q: float) -> complex:
    """q-gamma-function form of the three-parameter integral's right side:
    limit_constant(q, alpha) / prod Gamma_q of the pair sums."""
    p = {k: complex(v) for k, v in params.items()}
    a, b, c = p["a"], p["b"], p["c"]
    den = (q_gamma(a + b + 1.0, q) * q_gamma(a + c + 1.0, q)
           * q_gamma(b + c + 1.0, q))
    return limit_constant(q, p["alpha"]) / den


def qbeta_gamma_form(kind: QBetaKind, params: Dict[str, complex], q: float,
                     tol: Tolerance = Tolerance(rel=1e-6, abs=1e-12)
                     ) -> VerificationRecord:
    """Quadrature of the q-gamma rewritten integrand against its q-gamma
    right side (the exponent-parameter form of the q-beta integrals)."""
    kind = QBetaKind(kind)
    p = {k: complex(v) for k, v in params.items()}
    alpha = p["alpha"]
    names = {QBetaKind.I_FULL: ["a", "b", "c", "d"],
             QBetaKind.I_D0: ["a", "b", "c"]}[kind]
    ys = [p[n] for n in names]
    lq = math.log(q)
    lqq = log_qpoch_inf(q, q)
    s_y = sum(ys)
    n_y = len(ys)

    def log_g(x: np.ndarray) -> np.ndarray:
        w = x + alpha
        out = np.log1p(-np.exp(2.0 * w * lq) + 0j) - math.log(1.0 - q)
        out = out + (2.0 * x * x - x + 4.0 * alpha * x) * lq - 2j * math.pi * x
        for y in ys:
            out = out + log_qpoch_inf(np.exp((1.0 + y + w) * lq), q)
            out = out + log_qpoch_inf(np.exp((1.0 + y - w) * lq), q)
        out = out + 2.0 * s_y * math.log(1.0 - q) - 2.0 * n_y * lqq
        return out

    lf = log_g(np.array([6.0, 7.0, -6.0, -7.0]))
    rr = min(max(math.exp(min(50.0, (lf[1] - lf[0]).real)), 1e-6), 0.97)
    rl = min(max(math.exp(min(50.0, (lf[3] - lf[2]).real)), 1e-6), 0.97)
    res = q_quadrature(log_g, 0.0, rr, rl, tol,
                       freq_hint=2.0 * math.pi + 2.0)
    pair_gammas = 1.0 + 0j
    for yi, yj in ((i, j) for i in range(n_y) for j in range(i + 1, n_y)):
        pair_gammas *= q_gamma(ys[yi] + ys[yj] + 1.0, q)
    rhs = limit_constant(q, alpha) / pair_gammas
    if kind is QBetaKind.I_FULL:
        rhs *= q_gamma(s_y + 1.0, q)
    return VerificationRecord.compare(
        f"qbeta-{kind.value}-gamma-form",
        {**{k: v for k, v in params.items()}, "q": q}, res.value, rhs, tol)


def h44_integral_value(a: complex, b: complex, c: complex) -> complex:
    """Gamma-ratio value of the doubled-argument beta integral
    integral dx / [Gamma(2x)Gamma(-2x) prod Gamma(1+y+x)Gamma(1+y-x)]."""
    return -1.0 / (2.0 * math.pi ** 2) / (
        gamma(a + b + 1.0) * gamma(a + c + 1.0) * gamma(b + c + 1.0))


# -- the h(q) limit -------------------------------------------------------------

def h_of_q(q: float, alpha: float, beta: float, t: float) -> complex:
    """The q->1 probe combination of the single-factor q-Fourier transform,
    computed in log space exactly as printed."""
    if not 0.0 < q < 1.0:
        raise DomainError("q must lie in (0,1)")
    if not (alpha > 1.0 and beta > 2.0):
        raise DomainError("needs alpha > 1 and beta > 2")
    u = math.log(1.0 / q)
    lg = ((alpha + beta - 2.0) * math.log(1.0 - q)
          - 2.0 * log_qpoch_inf(q, q)
          + log_qpoch_inf(q ** (alpha + beta - 1.0), q)
          - log_qpoch_inf(-q ** (beta - 1.0) * cmath.exp(-1j * t), q)
          - log_qpoch_inf(-q ** alpha * cmath.exp(1j * t), q)
          + 0.5 * math.log(2.0 * math.pi) - 0.5j * t - t * t / (2.0 * u)
          - 0.125 * math.log(q) - 0.5 * math.log(u))
    return cmath.exp(lg)


def h_of_q_target(alpha: float, beta: float, t: float) -> complex:
    """Limit of h_of_q as q -> 1: the compactly supported classical Fourier
    transform value (0 at and beyond the support edge)."""
    if abs(t) >= math.pi:
        return 0j
    s = alpha + beta
    return ((2.0 * math.cos(t / 2.0)) ** (s - 2.0)
            * cmath.exp(-0.5j * t * (beta - alpha)) / gamma(s - 1.0))


def h_of_q_probe(alpha: float, beta: float, t: float,
                 q_sequence: Sequence[float]) -> List[Tuple[float, complex]]:
    return [(float(q), h_of_q(q, alpha, beta, t)) for q in q_sequence]
