"""Bilateral hypergeometric series: classification, evaluation, symmetry,
one-sided reduction, and the closed-form summation theorems.

A series here is sum over all integers n of
    prod_j (c_j)_n / prod_j (d_j)_n * z^n,
with (x)_n the shifted factorial extended to negative n.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from .acceleration import sum_one_sided
from .core import Tolerance, DEFAULT_TOL
from .errors import (ConstraintViolation, DivergentError, IllFormedSpec,
                     NotReducible, PoleError, ToleranceNotReached)
from .gammafns import gamma, recip_gamma

__all__ = [
    "BilateralSeriesSpec", "UnilateralSeriesSpec", "ConvergenceKind",
    "ConvergenceClass", "SeriesValue", "classify", "eval_H",
    "symmetry_transform", "reduce_to_unilateral", "eval_F", "HKind",
    "closed_form_H", "series_spec_for", "cancel_matching_parameters",
]

_INT_EPS = 1e-12


def _as_nonpositive_int(x: complex) -> Optional[int]:
    k = round(x.real)
    if k <= 0 and abs(x - k) <= _INT_EPS:
        return int(k)
    return None


def _as_positive_int(x: complex) -> Optional[int]:
    k = round(x.real)
    if k >= 1 and abs(x - k) <= _INT_EPS:
        return int(k)
    return None


@dataclass(frozen=True)
class BilateralSeriesSpec:
    """Parameters (numerators c, denominators d, argument z) of a bilateral
    series with p = len(c), q = len(d)."""

    c: Tuple[complex, ...]
    d: Tuple[complex, ...]
    z: complex

    def __init__(self, c: Sequence[complex], d: Sequence[complex], z: complex):
        object.__setattr__(self, "c", tuple(complex(x) for x in c))
        object.__setattr__(self, "d", tuple(complex(x) for x in d))
        object.__setattr__(self, "z", complex(z))

    @property
    def p(self) -> int:
        return len(self.c)

    @property
    def q(self) -> int:
        return len(self.d)

    @property
    def sigma(self) -> complex:
        return sum(self.c) - sum(self.d)


@dataclass(frozen=True)
class UnilateralSeriesSpec:
    """A one-sided (n >= 0) hypergeometric series with the conventional n!
    in the denominator."""

    a: Tuple[complex, ...]
    b: Tuple[complex, ...]
    z: complex


class ConvergenceKind(enum.Enum):
    TERMINATES_RIGHT = "TerminatesRight"
    TERMINATES_LEFT = "TerminatesLeft"
    TERMINATES_BOTH = "TerminatesBoth"
    ABSOLUTELY_CONVERGENT = "AbsolutelyConvergentOnUnitCircle"
    CONDITIONALLY_CONVERGENT = "ConditionallyConvergentOnUnitCircle"
    DIVERGENT = "DivergentEverywhere"
    NOT_ON_DOMAIN = "NotOnDomain"


@dataclass(frozen=True)
class ConvergenceClass:
    kind: ConvergenceKind
    sigma: complex
    right_cut: Optional[int] = None  # last surviving index M on the right
    left_cut: Optional[int] = None   # first surviving index -N on the left is -(left_cut)

    @property
    def is_summable(self) -> bool:
        return self.kind in (ConvergenceKind.TERMINATES_RIGHT,
                             ConvergenceKind.TERMINATES_LEFT,
                             ConvergenceKind.TERMINATES_BOTH,
                             ConvergenceKind.ABSOLUTELY_CONVERGENT,
                             ConvergenceKind.CONDITIONALLY_CONVERGENT)


@dataclass
class SeriesValue:
    value: complex
    est_error: float
    terms_used: int


def _termination_cuts(spec: BilateralSeriesSpec) -> Tuple[Optional[int], Optional[int]]:
    """Right cut M (terms vanish for n > M) and left cut N (terms vanish for
    n < -N), or None where the series does not terminate on that side."""
    right = None
    for cj in spec.c:
        k = _as_nonpositive_int(cj)
        if k is not None:
            m = -k
            right = m if right is None else min(right, m)
    left = None
    for dj in spec.d:
        k = _as_positive_int(dj)
        if k is not None:
            n = k - 1
            left = n if left is None else min(left, n)
    return right, left


def _check_well_defined(spec: BilateralSeriesSpec, right: Optional[int],
                        left: Optional[int]) -> None:
    for dj in spec.d:
        k = _as_nonpositive_int(dj)
        if k is not None:
            # (d)_n hits a zero denominator at n = 1 - k; allowed only when the
            # series stops before that term
            if right is None or 1 - k <= right:
                raise IllFormedSpec(f"denominator parameter {dj} in -N0 "
                                    f"without protective right termination")
    for cj in spec.c:
        k = _as_positive_int(cj)
        if k is not None:
            # (c)_{-n} is infinite for n >= k; allowed only when the left side
            # stops before reaching it
            if left is None or k <= left:
                raise IllFormedSpec(f"numerator parameter {cj} in N "
                                    f"without protective left termination")


def classify(spec: BilateralSeriesSpec) -> ConvergenceClass:
    """Termination indices and convergence class of the series."""
    right, left = _termination_cuts(spec)
    _check_well_defined(spec, right, left)
    sigma = spec.sigma
    z = spec.z
    if right is not None and left is not None:
        return ConvergenceClass(ConvergenceKind.TERMINATES_BOTH, sigma, right, left)
    if right is not None:
        return ConvergenceClass(ConvergenceKind.TERMINATES_RIGHT, sigma, right, None)
    if left is not None:
        return ConvergenceClass(ConvergenceKind.TERMINATES_LEFT, sigma, None, left)
    if spec.p != spec.q:
        return ConvergenceClass(ConvergenceKind.DIVERGENT, sigma)
    if abs(abs(z) - 1.0) > 1e-13:
        # non-terminating equal-length series live on the unit circle only
        return ConvergenceClass(ConvergenceKind.NOT_ON_DOMAIN, sigma)
    if sigma.real < -1.0:
        return ConvergenceClass(ConvergenceKind.ABSOLUTELY_CONVERGENT, sigma)
    if sigma.real < 0.0:
        if abs(z - 1.0) <= 1e-13:
            return ConvergenceClass(ConvergenceKind.NOT_ON_DOMAIN, sigma)
        return ConvergenceClass(ConvergenceKind.CONDITIONALLY_CONVERGENT, sigma)
    return ConvergenceClass(ConvergenceKind.DIVERGENT, sigma)


def _up_ratio(spec: BilateralSeriesSpec):
    c, d, z = spec.c, spec.d, spec.z

    def ratio(n: int) -> complex:
        num = z
        for cj in c:
            num *= cj + n
        den = 1.0 + 0j
        for dj in d:
            den *= dj + n
        return num / den
    return ratio


def _down_ratio(spec: BilateralSeriesSpec):
    c, d, z = spec.c, spec.d, spec.z

    def ratio(k: int) -> complex:
        # step from index -k to -(k+1)
        n = -k
        num = 1.0 + 0j
        for dj in d:
            num *= dj + n - 1
        den = z
        for cj in c:
            den *= cj + n - 1
        return num / den
    return ratio


def _first_left_term(spec: BilateralSeriesSpec) -> complex:
    t = 1.0 + 0j
    for dj in spec.d:
        t *= dj - 1
    for cj in spec.c:
        t /= cj - 1
    return t / spec.z


def _sum_terminating_right(spec: BilateralSeriesSpec, m_cut: int) -> Tuple[complex, int]:
    # terms n = 0..m_cut upward
    total = 1.0 + 0j
    t = 1.0 + 0j
    ratio = _up_ratio(spec)
    for n in range(m_cut):
        t *= ratio(n)
        total += t
    return total, m_cut + 1


def _sum_terminating_left(spec: BilateralSeriesSpec, n_cut: int) -> Tuple[complex, int]:
    total = 0j
    if n_cut >= 1:
        t = _first_left_term(spec)
        total += t
        ratio = _down_ratio(spec)
        for k in range(1, n_cut):
            t *= ratio(k)
            total += t
    return total, n_cut


def eval_H(spec: BilateralSeriesSpec, tol: Tolerance = DEFAULT_TOL,
           max_terms: int = 400, enforce_tol: bool = False) -> SeriesValue:
    """Evaluate the bilateral series by summing both one-sided subseries.

    Terminating sides are summed exactly; convergent infinite sides are
    summed directly in the geometric regime and Levin-accelerated on the
    unit circle.  ``est_error`` is honest (acceleration residual + tails).
    """
    cls = classify(spec)
    if not cls.is_summable:
        if (cls.kind is ConvergenceKind.NOT_ON_DOMAIN
                and abs(spec.z - 1.0) <= 1e-13 and -1.0 <= cls.sigma.real < 0.0):
            raise DivergentError("conditional convergence excludes z = 1")
        raise DivergentError(f"series classified {cls.kind.value} at z={spec.z}")
    if spec.z == 0 and cls.left_cut != 0:
        raise DivergentError("negative-index terms undefined at z = 0")
    tol_abs = max(tol.abs, tol.rel, 1e-15)
    value = 0j
    est = 0.0
    used = 0

    # right side: n >= 0
    if cls.right_cut is not None:
        v, n = _sum_terminating_right(spec, cls.right_cut)
        value += v
        used += n
    else:
        res = sum_one_sided(_up_ratio(spec), 1.0 + 0j, tol_abs,
                            max_terms=max_terms)
        value += res.value
        est += res.est_error
        used += res.terms_used

    # left side: n <= -1
    if cls.left_cut is not None:
        v, n = _sum_terminating_left(spec, cls.left_cut)
        value += v
        used += n
    else:
        first = _first_left_term(spec)
        down = _down_ratio(spec)
        res = sum_one_sided(lambda k: down(k + 1), first, tol_abs,
                            max_terms=max_terms)
        value += res.value
        est += res.est_error
        used += res.terms_used

    if enforce_tol and est > max(tol.abs, tol.rel * max(1.0, abs(value))):
        raise ToleranceNotReached(f"est_error {est:.2e} above tolerance")
    return SeriesValue(value, est, used)


def symmetry_transform(spec: BilateralSeriesSpec) -> BilateralSeriesSpec:
    """Swap-parameter transform: (c; d; z) -> (1-d; 1-c; eps/z) with
    eps = (-1)^(p-q).  An involution; values agree where both converge."""
    if spec.z == 0:
        raise DivergentError("symmetry transform needs z != 0")
    eps = (-1.0) ** (spec.p - spec.q)
    return BilateralSeriesSpec(
        c=tuple(1.0 - dj for dj in spec.d),
        d=tuple(1.0 - cj for cj in spec.c),
        z=eps / spec.z,
    )


def reduce_to_unilateral(spec: BilateralSeriesSpec) -> UnilateralSeriesSpec:
    """Drop a denominator parameter equal to 1, giving the one-sided series
    with the same sum.  Raises NotReducible when no d_j = 1."""
    for i, dj in enumerate(spec.d):
        if abs(dj - 1.0) <= 1e-14:
            rest = spec.d[:i] + spec.d[i + 1:]
            return UnilateralSeriesSpec(a=spec.c, b=rest, z=spec.z)
    raise NotReducible("no denominator parameter equals 1")


def eval_F(spec: UnilateralSeriesSpec, tol: Tolerance = DEFAULT_TOL,
           max_terms: int = 2000) -> SeriesValue:
    """One-sided series sum_{n>=0} prod(a)_n/prod(b)_n * z^n/n!."""
    a, b, z = spec.a, spec.b, spec.z

    def ratio(n: int) -> complex:
        num = z
        for aj in a:
            num *= aj + n
        den = n + 1.0
        for bj in b:
            den *= bj + n
        return num / den

    res = sum_one_sided(ratio, 1.0 + 0j, max(tol.abs, 1e-15), max_terms=max_terms)
    return SeriesValue(res.value, res.est_error, res.terms_used)


def cancel_matching_parameters(spec: BilateralSeriesSpec,
                               match_tol: float = 1e-13) -> BilateralSeriesSpec:
    """Remove numerator/denominator parameter pairs equal within match_tol.

    Exact-match rewrite used by parameter-degenerate series reductions (a
    canceling pair contributes (x)_n/(x)_n = 1 to every term).
    """
    c = list(spec.c)
    d = list(spec.d)
    out_c = []
    for cj in c:
        hit = None
        for i, dj in enumerate(d):
            if abs(cj - dj) <= match_tol:
                hit = i
                break
        if hit is None:
            out_c.append(cj)
        else:
            d.pop(hit)
    return BilateralSeriesSpec(out_c, d, spec.z)


# -- closed-form summation theorems -------------------------------------------

class HKind(enum.Enum):
    ONE_H1_MINUS_EXP = "OneH1_minus_exp"
    ONE_H1_PLUS_EXP = "OneH1_plus_exp"
    ONE_H1_MINUS1 = "OneH1_minus1"
    ONE_H1_PLUS1 = "OneH1_plus1"
    GAUSS_2H2 = "Gauss2H2"
    TWO_H2_MINUS1 = "TwoH2_minus1_constrained"
    WELL_POISED_3H3 = "WellPoised3H3"
    VWP_4H4_MINUS1 = "VWP4H4_minus1"
    VWP_5H5 = "VWP5H5"


def _gamma_ratio(num: Sequence[complex], den: Sequence[complex]) -> complex:
    """prod Gamma(num) / prod Gamma(den).

    A pole in a numerator factor is an error; a pole in a denominator factor
    makes the whole ratio vanish (the only continuous value).
    """
    for x in num:
        if _as_nonpositive_int(complex(x)) is not None:
            raise PoleError(f"gamma argument {x} is a nonpositive integer")
    out = 1.0 + 0j
    for x in num:
        out *= gamma(complex(x))
    for x in den:
        r = recip_gamma(complex(x))
        if r == 0:
            return 0j
        out *= r
    return out


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ConstraintViolation(msg)


def closed_form_H(kind: HKind, params: Dict[str, complex]) -> complex:
    """Gamma-ratio value of a summable bilateral series, exactly as the
    summation theorems print it.  Raises ConstraintViolation when the
    convergence condition fails and PoleError on gamma poles."""
    kind = HKind(kind)
    p = {k: complex(v) for k, v in params.items()}

    if kind is HKind.ONE_H1_MINUS_EXP:
        a, b, t = p["a"], p["b"], p["t"].real
        _require(-math.pi <= t <= math.pi, "t must lie in [-pi, pi]")
        _require((b - a).real > 0, "needs Re(b - a) > 0")
        return (_gamma_ratio([1 - a, b], [b - a])
                * cmath.exp(0.5j * t * (a + b - 1))
                * (2 * math.cos(t / 2)) ** (b - a - 1))
    if kind is HKind.ONE_H1_PLUS_EXP:
        a, b, t = p["a"], p["b"], p["t"].real
        _require(0 <= t <= 2 * math.pi, "t must lie in [0, 2pi]")
        _require((b - a).real > 0, "needs Re(b - a) > 0")
        return (_gamma_ratio([1 - a, b], [b - a])
                * cmath.exp(0.5j * (math.pi - t) * (a + b - 1))
                * (2 * math.sin(t / 2)) ** (b - a - 1))
    if kind is HKind.ONE_H1_MINUS1:
        a, b = p["a"], p["b"]
        _require((b - a).real > 0, "needs Re(b - a) > 0")
        return 2 ** (b - a - 1) * _gamma_ratio([1 - a, b], [b - a])
    if kind is HKind.ONE_H1_PLUS1:
        _require((p["b"] - p["a"]).real > 1, "needs Re(b - a) > 1")
        return 0j
    if kind is HKind.GAUSS_2H2:
        a, b, c, d = p["a"], p["b"], p["c"], p["d"]
        _require((c + d - a - b - 1).real > 0, "needs Re(c+d-a-b-1) > 0")
        return _gamma_ratio([c, d, 1 - a, 1 - b, c + d - a - b - 1],
                            [c - a, d - a, c - b, d - b])
    if kind is HKind.TWO_H2_MINUS1:
        b1, b2, a1, a2 = p["b1"], p["b2"], p["a1"], p["a2"]
        _require(abs((a1 - b1) - (a2 - b2)) <= 1e-12,
                 "needs a1 - b1 = a2 - b2")
        _require((a1 + a2 + b1 + b2 + 2).real > 0, "needs Re sum > -2")
        return (cmath.cos(0.5 * math.pi * (b1 - a1))
                * _gamma_ratio([a1 + 1, b1 + 1, a2 + 1, b2 + 1],
                               [0.5 * (a1 + b1) + 1, 0.5 * (a2 + b2) + 1,
                                a1 + b2 + 1]))
    if kind is HKind.WELL_POISED_3H3:
        a, b, c, d = p["a"], p["b"], p["c"], p["d"]
        _require((1 + 1.5 * a - b - c - d).real > 0,
                 "needs Re(1 + 3a/2 - b - c - d) > 0")
        return _gamma_ratio(
            [1 - b, 1 - c, 1 - d, 1 + a - b, 1 + a - c, 1 + a - d,
             1 + a / 2, 1 - a / 2, 1 + 1.5 * a - b - c - d],
            [1 + a - c - d, 1 + a - b - d, 1 + a - b - c,
             1 + a / 2 - b, 1 + a / 2 - c, 1 + a / 2 - d, 1 + a, 1 - a])
    if kind is HKind.VWP_4H4_MINUS1:
        a, b, c, d = p["a"], p["b"], p["c"], p["d"]
        # sigma_H = 2(b+c+d) - 3a - 2 must have Re < 0 for convergence at -1
        _require((1 + 1.5 * a - b - c - d).real > 0,
                 "series must converge at z = -1")
        return _gamma_ratio(
            [1 - b, 1 - c, 1 - d, 1 + a - b, 1 + a - c, 1 + a - d],
            [1 - a, 1 + a, 1 + a - b - c, 1 + a - b - d, 1 + a - c - d])
    if kind is HKind.VWP_5H5:
        a, b, c, d, e = p["a"], p["b"], p["c"], p["d"], p["e"]
        _require((1 + 2 * a - b - c - d - e).real > 0,
                 "needs Re(1 + 2a - b - c - d - e) > 0")
        return _gamma_ratio(
            [1 - b, 1 - c, 1 - d, 1 - e, 1 + a - b, 1 + a - c, 1 + a - d,
             1 + a - e, 1 + 2 * a - b - c - d - e],
            [1 + a, 1 - a, 1 + a - b - c, 1 + a - b - d, 1 + a - b - e,
             1 + a - c - d, 1 + a - c - e, 1 + a - d - e])
    raise ValueError(f"unknown kind {kind}")


def series_spec_for(kind: HKind, params: Dict[str, complex]) -> BilateralSeriesSpec:
    """The explicit bilateral series whose sum closed_form_H(kind) gives."""
    kind = HKind(kind)
    p = {k: complex(v) for k, v in params.items()}
    if kind in (HKind.ONE_H1_MINUS_EXP, HKind.ONE_H1_PLUS_EXP):
        t = p["t"].real
        z = -cmath.exp(-1j * t) if kind is HKind.ONE_H1_MINUS_EXP else cmath.exp(1j * t)
        return BilateralSeriesSpec([p["a"]], [p["b"]], z)
    if kind is HKind.ONE_H1_MINUS1:
        return BilateralSeriesSpec([p["a"]], [p["b"]], -1.0)
    if kind is HKind.ONE_H1_PLUS1:
        return BilateralSeriesSpec([p["a"]], [p["b"]], 1.0)
    if kind is HKind.GAUSS_2H2:
        return BilateralSeriesSpec([p["a"], p["b"]], [p["c"], p["d"]], 1.0)
    if kind is HKind.TWO_H2_MINUS1:
        return BilateralSeriesSpec([-p["b1"], -p["b2"]],
                                   [p["a1"] + 1, p["a2"] + 1], -1.0)
    if kind is HKind.WELL_POISED_3H3:
        a = p["a"]
        return BilateralSeriesSpec([p["b"], p["c"], p["d"]],
                                   [1 + a - p["b"], 1 + a - p["c"], 1 + a - p["d"]],
                                   1.0)
    if kind is HKind.VWP_4H4_MINUS1:
        a = p["a"]
        return BilateralSeriesSpec(
            [1 + a / 2, p["b"], p["c"], p["d"]],
            [a / 2, 1 + a - p["b"], 1 + a - p["c"], 1 + a - p["d"]], -1.0)
    if kind is HKind.VWP_5H5:
        a = p["a"]
        return BilateralSeriesSpec(
            [1 + a / 2, p["b"], p["c"], p["d"], p["e"]],
            [a / 2, 1 + a - p["b"], 1 + a - p["c"], 1 + a - p["d"],
             1 + a - p["e"]], 1.0)
    raise ValueError(f"unknown kind {kind}")
