"""Shared small types: tolerances, verification records, complex parsing."""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass
from typing import Any, Dict


@dataclass(frozen=True)
class Tolerance:
    """Absolute/relative tolerance pair; at least one must be positive."""

    abs: float = 0.0
    rel: float = 0.0

    def __post_init__(self):
        if self.abs < 0 or self.rel < 0:
            raise ValueError("tolerances must be nonnegative")
        if self.abs == 0 and self.rel == 0:
            raise ValueError("at least one of abs, rel must be positive")

    def met_by(self, abs_gap: float, scale: float) -> bool:
        return abs_gap <= self.abs or (scale > 0 and abs_gap <= self.rel * scale)


DEFAULT_TOL = Tolerance(abs=1e-12, rel=1e-10)


@dataclass
class VerificationRecord:
    """One identity check: both sides, gaps, tolerance and verdict."""

    identity_id: str
    inputs: Dict[str, Any]
    lhs: complex
    rhs: complex
    abs_gap: float
    rel_gap: float
    tol: Tolerance
    passed: bool
    runtime_ms: float = 0.0

    @classmethod
    def compare(cls, identity_id: str, inputs: Dict[str, Any], lhs: complex,
                rhs: complex, tol: Tolerance, runtime_ms: float = 0.0) -> "VerificationRecord":
        lhs = complex(lhs)
        rhs = complex(rhs)
        if all(math.isfinite(v) for v in (lhs.real, lhs.imag, rhs.real, rhs.imag)):
            abs_gap = abs(lhs - rhs)
            scale = max(abs(lhs), abs(rhs))
            rel_gap = abs_gap / scale if scale > 0 else 0.0
        else:
            abs_gap = rel_gap = math.inf
        passed = abs_gap <= tol.abs or rel_gap <= tol.rel
        return cls(identity_id, inputs, lhs, rhs, abs_gap, rel_gap, tol, passed, runtime_ms)


def require_finite(z: complex, what: str = "value") -> complex:
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ArithmeticError(f"non-finite {what}: {z!r}")
    return z


_COMPLEX_RE = re.compile(
    r"""^\s*
        (?P<re>[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?
        (?P<im>[+-](?:\d+\.?\d*|\.\d+)?(?:[eE][+-]?\d+)?)?
        (?P<i>[ij])?
        \s*$""",
    re.VERBOSE,
)


def parse_complex(text: str) -> complex:
    """Parse 'a', 'a+bi', 'bi', '-i' style complex literals (i or j suffix)."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ValueError("empty complex literal")
    m = _COMPLEX_RE.match(s)
    if not m:
        raise ValueError(f"cannot parse complex number {text!r}")
    re_part, im_part, has_i = m.group("re"), m.group("im"), m.group("i")
    if has_i:
        if im_part is not None:
            imag = float(im_part) if im_part not in ("+", "-") else float(im_part + "1")
            real = float(re_part) if re_part else 0.0
        else:
            # the whole number is imaginary: "1.5i", "i", "-i"
            if re_part in (None, "", "+", "-"):
                imag = float((re_part or "") + "1")
            else:
                imag = float(re_part)
            real = 0.0
        return complex(real, imag)
    if im_part is not None:
        raise ValueError(f"cannot parse complex number {text!r}")
    if re_part is None:
        raise ValueError(f"cannot parse complex number {text!r}")
    return complex(float(re_part), 0.0)


def parse_complex_list(text: str) -> tuple:
    return tuple(parse_complex(p) for p in text.split(",") if p.strip() != "")


def format_complex(z: complex, digits: int = 15) -> str:
    z = complex(z)
    re_s = f"{z.real:.{digits}g}"
    im = z.imag
    if im == 0:
        return re_s
    sign = "+" if im >= 0 else "-"
    return f"{re_s}{sign}{abs(im):.{digits}g}i"


def cis(theta: float) -> complex:
    return cmath.exp(1j * theta)
