"""q-shifted factorials, the q-gamma function, bilateral basic series,
their summation formulas, and q->1 asymptotics.

Series convention: with r = len(a) upper and s = len(b) lower parameters,
the term at index n carries the extra factor ((-1)^n q^(n(n-1)/2))^(s-r),
so zero lower parameters act as confluence placeholders.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .core import Tolerance, DEFAULT_TOL
from .errors import (BranchCutError, ConstraintViolation, DomainError,
                     IllFormedSpec, OutsideAnnulus, PoleError,
                     ToleranceNotReached)
from .bilateral import BilateralSeriesSpec, SeriesValue, eval_H
from .gammafns import dilog

__all__ = [
    "QSeriesSpec", "QtoOnePath", "qpoch", "qpoch_inf", "qpoch_inf_multi",
    "log_qpoch_inf", "q_gamma", "eval_psi", "QKind", "closed_form_q",
    "q_binomial_ratio_target", "psi_spec_for", "qpoch_inf_asymptotic",
    "QPochAsymptotic", "lemma_qpoch_log_gap", "theorem21_limit_probe",
]

# per-factor relative truncation threshold for infinite q-products
_QPROD_EPS = 1e-17
_QPROD_MAX_FACTORS = 2_000_000


def _check_base(q: complex) -> complex:
    q = complex(q)
    if not 0.0 < abs(q) < 1.0:
        raise DomainError(f"base must satisfy 0 < |q| < 1, got {q!r}")
    return q


@dataclass(frozen=True)
class QSeriesSpec:
    """Bilateral basic series parameters: base q, upper a, lower b, argument z."""

    q: complex
    a: Tuple[complex, ...]
    b: Tuple[complex, ...]
    z: complex

    def __init__(self, q: complex, a: Sequence[complex], b: Sequence[complex], z: complex):
        object.__setattr__(self, "q", _check_base(q))
        object.__setattr__(self, "a", tuple(complex(x) for x in a))
        object.__setattr__(self, "b", tuple(complex(x) for x in b))
        object.__setattr__(self, "z", complex(z))

    def _match_power(self, value: complex, lo: int, hi: int) -> Optional[int]:
        # k in [lo, hi] with value == q^k, else None; log-space comparison so
        # huge negative powers cannot overflow
        lq = cmath.log(self.q)
        lv = cmath.log(value)
        k = round(lv.real / lq.real)
        if not lo <= k <= hi:
            return None
        d = lv - k * lq
        di = (d.imag + math.pi) % (2.0 * math.pi) - math.pi
        if abs(complex(d.real, di)) <= 1e-12 * max(1.0, abs(k * lq.real)):
            return int(k)
        return None

    def termination_cuts(self) -> Tuple[Optional[int], Optional[int]]:
        """(right_cut, left_cut): terms vanish for n > right_cut (some
        a_j = q^-k) and for n <= -left_cut (some b_j = q^k, k >= 1)."""
        right = None
        for aj in self.a:
            if aj == 0:
                continue
            k = self._match_power(aj, -400, 0)
            if k is not None:
                right = -k if right is None else min(right, -k)
        left = None
        for bj in self.b:
            if bj == 0:
                continue
            k = self._match_power(bj, 1, 400)
            if k is not None:
                left = k if left is None else min(left, k)
        return right, left

    def validate(self) -> None:
        right, left = self.termination_cuts()
        for bj in self.b:
            if bj == 0:
                continue
            # b_j = q^-j (j >= 0) zeroes a denominator factor at n = j+1;
            # a right cut at or before n = j keeps every surviving term finite
            k = self._match_power(bj, -400, 0)
            if k is not None and (right is None or right > -k):
                raise IllFormedSpec(f"lower parameter {bj} equals q^{k} "
                                    f"without protective termination")
        for aj in self.a:
            if aj == 0:
                continue
            # a_j = q^k (k >= 1) makes numerator factors infinite at n <= -k
            k = self._match_power(aj, 1, 400)
            if k is not None and (left is None or left > k):
                raise IllFormedSpec(f"upper parameter {aj} equals q^{k} "
                                    f"without protective termination")


def qpoch(a: complex, q: complex, n: int) -> complex:
    """q-shifted factorial (a;q)_n for any integer n."""
    a = complex(a)
    q = _check_base(q)
    if n == 0:
        return 1.0 + 0j
    if n > 0:
        out = 1.0 + 0j
        p = a
        for _ in range(n):
            out *= 1.0 - p
            p *= q
        return out
    m = -n
    out = 1.0 + 0j
    p = a
    for _ in range(m):
        p /= q
        f = 1.0 - p
        if f == 0:
            raise PoleError(f"(a;q)_{n} pole: a = q^k for some 1 <= k <= {m}")
        out /= f
    return out


def log_qpoch_inf(c, q: complex):
    """Sum of log(1 - c q^k) over k >= 0 (array-aware in c).

    Any-branch logarithm: exact under exp().  Truncates once every
    |c q^k| < 1e-17.
    """
    q = _check_base(q)
    if np.isscalar(c) or getattr(c, "ndim", 1) == 0:
        # one vectorized sweep over k; bases near 1 need tens of thousands
        # of factors
        c0 = complex(c)
        if c0 == 0:
            return 0j
        lq = cmath.log(q)
        k_need = int((math.log(_QPROD_EPS) - math.log(abs(c0))) / math.log(abs(q))) + 2
        k_need = min(max(k_need, 1), _QPROD_MAX_FACTORS)
        with np.errstate(divide="ignore"):
            vals = c0 * np.exp(np.arange(k_need) * lq)
            return complex(np.log1p(-vals).sum())
    c_arr = np.asarray(c, dtype=complex)
    out = np.zeros(c_arr.shape, dtype=complex)
    cur = c_arr.copy()
    with np.errstate(divide="ignore"):
        for _ in range(_QPROD_MAX_FACTORS):
            np.add(out, np.log1p(-cur), out=out)
            cur = cur * q
            if np.abs(cur).max() < _QPROD_EPS:
                break
    return out


def qpoch_inf(a: complex, q: complex) -> complex:
    """(a;q)_infinity by truncated product."""
    a = complex(a)
    q = _check_base(q)
    if a == 0:
        return 1.0 + 0j
    out = 1.0 + 0j
    cur = a
    for _ in range(_QPROD_MAX_FACTORS):
        out *= 1.0 - cur
        cur *= q
        if abs(cur) < _QPROD_EPS:
            break
    return out


def qpoch_inf_multi(values: Sequence[complex], q: complex) -> complex:
    """(a1, ..., ar; q)_infinity = product of (a_j; q)_infinity."""
    out = 1.0 + 0j
    for a in values:
        out *= qpoch_inf(a, q)
    return out


def q_gamma(x: complex, q: float) -> complex:
    """q-gamma function for real base q in (0,1); principal power of (1-q)."""
    if not (isinstance(q, (int, float)) and 0.0 < q < 1.0):
        raise DomainError(f"q_gamma needs real q in (0,1), got {q!r}")
    x = complex(x)
    k = round(x.real)
    if k <= 0 and abs(x - k) <= 1e-13:
        raise PoleError(f"q_gamma pole at {x}")
    qx = cmath.exp(x * math.log(q))
    # log space: both infinite products underflow as q -> 1 while their
    # ratio stays moderate
    lg = (log_qpoch_inf(q, q) - log_qpoch_inf(qx, q)
          + (1.0 - x) * math.log(1.0 - q))
    return cmath.exp(lg)


def eval_psi(spec: QSeriesSpec, tol: Tolerance = DEFAULT_TOL,
             max_terms: int = 400_000) -> SeriesValue:
    """Bilateral basic series sum over n in Z, both sides geometric.

    Non-terminating sides require the argument inside the absolute-
    convergence annulus prod|b|/prod|a| < |z| < 1; zero lower parameters
    (and surplus lower slots) make the tails super-geometric instead.
    Parameters of the form a_j = q^-k / b_j = q^k terminate the respective
    side and are summed exactly.
    """
    spec.validate()
    right_cut, left_cut = spec.termination_cuts()
    q, z = spec.q, spec.z
    a = np.asarray(spec.a, dtype=complex)
    b = np.asarray(spec.b, dtype=complex)
    d = len(spec.b) - len(spec.a)
    if d < 0:
        raise IllFormedSpec("more upper than lower parameters unsupported")
    if z == 0:
        raise OutsideAnnulus("argument must be nonzero")
    prod_b = float(np.prod(np.abs(b))) if len(b) else 1.0
    prod_a = float(np.prod(np.abs(a))) if len(a) else 1.0
    if d == 0:
        if right_cut is None and not abs(z) < 1.0 + 1e-13:
            raise OutsideAnnulus(f"|z|={abs(z):.6g} not below 1")
        if left_cut is None and prod_b > 0 \
                and not prod_b / prod_a - 1e-13 < abs(z):
            raise OutsideAnnulus(
                f"|z|={abs(z):.6g} below annulus bound {prod_b / prod_a:.6g}")

    tol_abs = max(tol.abs, 1e-16)

    def ratio_up(n: int) -> complex:
        qn = q ** n
        r = z * complex(np.prod(1.0 - a * qn)) / complex(np.prod(1.0 - b * qn))
        if d:
            r *= (-(qn)) ** d
        return r

    def ratio_down(k: int) -> complex:
        # step from index -k to -(k+1)
        qn = q ** (-k - 1)
        r = complex(np.prod(1.0 - b * qn)) / complex(np.prod(1.0 - a * qn)) / z
        if d:
            r *= (-(qn)) ** (-d)
        return r

    total = 1.0 + 0j
    used = 1
    est = 0.0

    def finite_sum(ratio, count: int) -> complex:
        out = 0j
        t = 1.0 + 0j
        for n in range(count):
            t = t * ratio(n)
            out += t
        return out

    for label, ratio, cut in (("up", ratio_up, right_cut),
                              ("down", ratio_down,
                               None if left_cut is None else left_cut - 1)):
        if cut is not None:
            total += finite_sum(ratio, cut)
            used += cut
            continue
        t = 1.0 + 0j
        part = 0j
        n = 0
        rr = 1.0
        small = 0
        while True:
            r = ratio(n)
            t = t * r
            part += t
            n += 1
            rr = abs(r)
            # two consecutive sub-threshold terms guard against accidental
            # near-zeros of single factors
            if rr < 1.0 and abs(t) * rr / (1.0 - rr) < tol_abs:
                small += 1
                if small >= 2 and n >= 6:
                    break
            else:
                small = 0
            if n >= max_terms:
                raise ToleranceNotReached(
                    f"{label} side of psi series did not reach tolerance "
                    f"in {max_terms} terms (|ratio|={rr:.6f})")
        tail = abs(t) * (rr / (1.0 - rr)) if rr < 1.0 else abs(t)
        total += part
        est += tail + 1e-16 * abs(part)
        used += n
    return SeriesValue(total, est, used)


# -- closed forms --------------------------------------------------------------

class QKind(enum.Enum):
    RAMANUJAN_1PSI1 = "Ramanujan1psi1"
    BAILEY_6PSI6 = "Bailey6psi6"
    Q_BINOMIAL_RATIO_LIMIT = "QBinomialRatioLimit"


def closed_form_q(kind: QKind, params: Dict[str, complex], q: float) -> complex:
    """Product-form values of the q-summation theorems."""
    kind = QKind(kind)
    q = _check_base(q)
    p = {k: complex(v) for k, v in params.items()}
    if kind is QKind.RAMANUJAN_1PSI1:
        a, b, z = p["a"], p["b"], p["z"]
        qa = q ** a
        qb = q ** b
        if not (abs(q ** (b - a)) < abs(z) < 1.0):
            raise ConstraintViolation("needs q^Re(b-a) < |z| < 1")
        num = [q, q ** (b - a), qa * z, q ** (1 - a) / z]
        den = [qb, q ** (1 - a), z, q ** (b - a) / z]
        return qpoch_inf_multi(num, q) / qpoch_inf_multi(den, q)
    if kind is QKind.BAILEY_6PSI6:
        a, b, c, d, e = p["a"], p["b"], p["c"], p["d"], p["e"]
        if not abs(q * a * a) < abs(b * c * d * e):
            raise ConstraintViolation("needs |q a^2| < |bcde|")
        num = [q, q * a, q / a, q * a / (b * c), q * a / (b * d),
               q * a / (b * e), q * a / (c * d), q * a / (c * e),
               q * a / (d * e)]
        den = [q / b, q / c, q / d, q / e, q * a / b, q * a / c, q * a / d,
               q * a / e, q * a * a / (b * c * d * e)]
        return qpoch_inf_multi(num, q) / qpoch_inf_multi(den, q)
    if kind is QKind.Q_BINOMIAL_RATIO_LIMIT:
        alpha, beta, z = p["alpha"], p["beta"], p["z"]
        if not 0 < abs(z) <= 1:
            raise ConstraintViolation("needs 0 < |z| <= 1")
        return qpoch_inf(q ** alpha * z, q) / qpoch_inf(q ** beta * z, q)
    raise ValueError(f"unknown kind {kind}")


def q_binomial_ratio_target(alpha: complex, beta: complex, z: complex) -> complex:
    """q->1 limit of (q^alpha z;q)_inf / (q^beta z;q)_inf."""
    return (1.0 - complex(z)) ** (complex(beta) - complex(alpha))


def psi_spec_for(kind: QKind, params: Dict[str, complex], q: float) -> QSeriesSpec:
    """The explicit bilateral basic series summed by closed_form_q(kind)."""
    kind = QKind(kind)
    p = {k: complex(v) for k, v in params.items()}
    if kind is QKind.RAMANUJAN_1PSI1:
        return QSeriesSpec(q, [q ** p["a"]], [q ** p["b"]], p["z"])
    if kind is QKind.BAILEY_6PSI6:
        a, b, c, d, e = p["a"], p["b"], p["c"], p["d"], p["e"]
        sa = cmath.sqrt(a)
        return QSeriesSpec(
            q,
            [q * sa, -q * sa, b, c, d, e],
            [sa, -sa, q * a / b, q * a / c, q * a / d, q * a / e],
            q * a * a / (b * c * d * e))
    raise ValueError(f"no series spec for kind {kind}")


# -- q->1 asymptotics ----------------------------------------------------------

@dataclass
class QPochAsymptotic:
    value: complex
    error_bound: float
    rigorous: bool


def _segment_min_distance_to_one(a: complex) -> float:
    # min over t in [0,1] of |1 - t a|: distance from point 1 to segment [0, a]
    if a == 0:
        return 1.0
    t = (a.real) / (abs(a) ** 2)  # projection of 1 onto direction a
    t = min(1.0, max(0.0, t))
    return abs(1.0 - t * a)


def qpoch_inf_asymptotic(a: complex, alpha: complex, u: float) -> QPochAsymptotic:
    """Leading q->1 behavior of (a q^alpha; q)_inf with q = exp(-u).

    Returns (1-a)^(1/2-alpha) exp(-Li2(a)/u).  For alpha = 0 the bound K u^2
    on the log-scale gap (with the au/(12(1-a)) first-order term included) is
    exact, with K = (sqrt(3)/216) |a| (1+|a|) M^-3 and M = min over t in
    [0,1] of |1-ta|.  For other alpha the bound carries a heuristic
    first-order correction and is flagged non-rigorous.
    """
    a = complex(a)
    alpha = complex(alpha)
    if a.imag == 0 and a.real >= 1.0:
        raise BranchCutError(f"asymptotics need a outside [1, oo), got {a}")
    if u <= 0:
        raise DomainError("u must be positive")
    value = (1.0 - a) ** (0.5 - alpha) * cmath.exp(-dilog(a) / u)
    M = _segment_min_distance_to_one(a)
    K = (math.sqrt(3.0) / 216.0) * abs(a) * (1.0 + abs(a)) / M ** 3
    if alpha == 0:
        return QPochAsymptotic(value, K * u * u, True)
    # shifting a -> a q^alpha moves Li2 by alpha*u*log(1-a) + O(u^2); fold a
    # first-order allowance into the bound and mark it heuristic
    slack = abs(alpha) * (abs(alpha) + 1.0) * abs(cmath.log(1.0 - a)) * u * u
    return QPochAsymptotic(value, K * u * u + slack, False)


def lemma_qpoch_log_gap(a: complex, u: float) -> float:
    """|log (a;q)_inf + Li2(a)/u - log(1-a)/2 + a u/(12(1-a))| at q = exp(-u)."""
    a = complex(a)
    if a.imag == 0 and a.real >= 1.0:
        raise BranchCutError(f"needs a outside [1, oo), got {a}")
    q = math.exp(-u)
    lhs = log_qpoch_inf(a, q)
    gap = lhs + dilog(a) / u - 0.5 * cmath.log(1.0 - a) + a * u / (12.0 * (1.0 - a))
    return abs(gap)


@dataclass(frozen=True)
class QtoOnePath:
    """Path data for the termwise q->1 limit of a bilateral basic series to
    its classical bilateral counterpart."""

    alpha: Tuple[complex, ...]
    beta: Tuple[complex, ...]
    tau: float
    z: complex
    q_sequence: Tuple[float, ...]

    def __init__(self, alpha: Sequence[complex], beta: Sequence[complex],
                 tau: float, z: complex, q_sequence: Sequence[float]):
        object.__setattr__(self, "alpha", tuple(complex(x) for x in alpha))
        object.__setattr__(self, "beta", tuple(complex(x) for x in beta))
        object.__setattr__(self, "tau", float(tau))
        object.__setattr__(self, "z", complex(z))
        object.__setattr__(self, "q_sequence", tuple(float(q) for q in q_sequence))
        sigma = sum(self.beta) - sum(self.alpha)
        if not sigma.real > 1.0:
            raise DomainError(f"needs Re sigma > 1, got {sigma}")
        if not 0.0 < self.tau < sigma.real:
            raise DomainError(f"needs 0 < tau < Re sigma, got tau={self.tau}")
        if abs(abs(self.z) - 1.0) > 1e-12:
            raise DomainError("z must lie on the unit circle")
        if not all(0.0 < q < 1.0 for q in self.q_sequence):
            raise DomainError("q_sequence must lie in (0,1)")
        if list(self.q_sequence) != sorted(self.q_sequence):
            raise DomainError("q_sequence must increase")

    @property
    def sigma(self) -> complex:
        return sum(self.beta) - sum(self.alpha)


def theorem21_limit_probe(path: QtoOnePath,
                          tol: Tolerance = DEFAULT_TOL) -> List[Tuple[float, float]]:
    """For each q on the path, the gap between the deformed basic series at
    argument q^tau z and the classical bilateral series at z."""
    target = eval_H(BilateralSeriesSpec(path.alpha, path.beta, path.z), tol)
    out = []
    for q in path.q_sequence:
        spec = QSeriesSpec(q,
                           [q ** al for al in path.alpha],
                           [q ** be for be in path.beta],
                           (q ** path.tau) * path.z)
        val = eval_psi(spec, tol)
        out.append((q, abs(val.value - target.value)))
    return out
