"""Times as floats or exact rational multiples of pi.

Grammar (whitespace ignored): <int> | <float> | pi | <int>*pi | pi/<int> |
<int>*pi/<int>. Revival times are rational multiples of pi, and keeping the
(p, q) pair lets phases be evaluated with arguments reduced mod 2*pi at the
last moment.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass

_INT = re.compile(r"^[+-]?\d+$")
_FLOAT = re.compile(r"^[+-]?(\d+\.\d*|\.\d+|\d+)([eE][+-]?\d+)?$")
_PI_FORM = re.compile(r"^(?:(?P<p>[+-]?\d+)\*)?pi(?:/(?P<q>\d+))?$")


@dataclass(frozen=True)
class TimeExpression:
    """A time in radians, with the exact (p, q) of p*pi/q when known."""

    raw: str
    value: float
    exact: tuple[int, int] | None = None

    @classmethod
    def from_float(cls, value: float) -> "TimeExpression":
        return cls(raw=repr(float(value)), value=float(value), exact=None)

    @classmethod
    def from_exact(cls, p: int, q: int) -> "TimeExpression":
        if q < 1:
            raise ValueError("denominator must be >= 1")
        return cls(raw=format_pi_multiple(p, q), value=math.pi * p / q, exact=(p, q))


def format_pi_multiple(p: int, q: int) -> str:
    """Render p*pi/q in the same grammar parse_time accepts."""
    if p == 0:
        return "0"
    if q == 1:
        return "pi" if p == 1 else f"{p}*pi"
    return f"pi/{q}" if p == 1 else f"{p}*pi/{q}"


def parse_time(raw: str) -> TimeExpression:
    """Parse a time expression; raises ValueError on anything else."""
    text = re.sub(r"\s+", "", raw)
    if not text:
        raise ValueError("empty time expression")
    match = _PI_FORM.match(text)
    if match:
        p = int(match.group("p")) if match.group("p") is not None else 1
        q = int(match.group("q")) if match.group("q") is not None else 1
        if q == 0:
            raise ValueError(f"zero denominator in {raw!r}")
        return TimeExpression(raw=raw, value=math.pi * p / q, exact=(p, q))
    if _INT.match(text) or _FLOAT.match(text):
        return TimeExpression(raw=raw, value=float(text), exact=None)
    raise ValueError(f"cannot parse time expression {raw!r}")


def as_time(t: "TimeExpression | float | int") -> TimeExpression:
    """Coerce plain numbers to TimeExpression, passing TimeExpression through."""
    if isinstance(t, TimeExpression):
        return t
    return TimeExpression.from_float(float(t))
