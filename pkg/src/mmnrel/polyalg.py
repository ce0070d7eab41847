"""Exact rational polynomial algebra for reliability polynomials.

Two representations are used: the N-form ``sum c_k p^k (1-p)^(n-k)`` and the
ordinary power basis.  Everything is computed with :class:`fractions.Fraction`
so that derivative and complementarity identities can be checked for exact
equality rather than to a tolerance.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import CoefficientVector, binomial_row

__all__ = [
    "NFormPolynomial",
    "PowerPolynomial",
    "nform_eval",
    "to_power_basis",
    "derivative",
    "compose_one_minus",
    "coeff_function_eval",
    "divided_difference",
    "SignSegment",
    "ConvexityReport",
    "convexity_classify",
    "power_to_json",
    "power_from_json",
]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


@dataclass(frozen=True)
class NFormPolynomial:
    """Polynomial ``sum_k c[k] p^k (1-p)^(n-k)`` with ``n = len(c) - 1``."""

    c: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "c", tuple(_frac(x) for x in self.c))
        if not self.c:
            raise ValueError("N-form polynomial needs at least one coefficient")

    @property
    def n(self) -> int:
        return len(self.c) - 1

    @classmethod
    def from_coefficients(cls, cv: CoefficientVector | Sequence) -> "NFormPolynomial":
        return cls(tuple(cv))

    def __call__(self, p):
        return nform_eval(self, p)


@dataclass(frozen=True)
class PowerPolynomial:
    """Polynomial in the monomial basis; ``a[i]`` multiplies ``p**i``.

    Trailing zeros are trimmed, so the zero polynomial has ``a == ()``.
    """

    a: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = [_frac(x) for x in self.a]
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "a", tuple(coeffs))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.a) - 1

    def is_zero(self) -> bool:
        return not self.a

    def __call__(self, p):
        p = _frac(p) if not isinstance(p, float) else p
        acc = 0
        for coef in reversed(self.a):
            acc = acc * p + coef
        return acc if self.a else Fraction(0)

    def __add__(self, other: "PowerPolynomial") -> "PowerPolynomial":
        m = max(len(self.a), len(other.a))
        xs = self.a + (Fraction(0),) * (m - len(self.a))
        ys = other.a + (Fraction(0),) * (m - len(other.a))
        return PowerPolynomial(tuple(x + y for x, y in zip(xs, ys)))

    def __neg__(self) -> "PowerPolynomial":
        return PowerPolynomial(tuple(-x for x in self.a))

    def __sub__(self, other: "PowerPolynomial") -> "PowerPolynomial":
        return self + (-other)

    def scale(self, factor) -> "PowerPolynomial":
        f = _frac(factor)
        return PowerPolynomial(tuple(f * x for x in self.a))

    def float_coefficients(self) -> list[float]:
        return [float(x) for x in self.a]


def nform_eval(poly: NFormPolynomial, p) -> Fraction:
    p = _frac(p)
    q = 1 - p
    n = poly.n
    # Horner-like accumulation over powers of p and (1-p).
    total = Fraction(0)
    pk = Fraction(1)
    qpow = [Fraction(1)] * (n + 1)
    for i in range(1, n + 1):
        qpow[i] = qpow[i - 1] * q
    for k, c in enumerate(poly.c):
        if c:
            total += c * pk * qpow[n - k]
        pk *= p
    return total


def to_power_basis(poly: NFormPolynomial) -> PowerPolynomial:
    """Expand ``c_k p^k (1-p)^(n-k)`` with the binomial theorem."""
    n = poly.n
    out = [Fraction(0)] * (n + 1)
    for k, c in enumerate(poly.c):
        if not c:
            continue
        row = binomial_row(n - k)
        for j, b in enumerate(row):
            out[k + j] += c * b if j % 2 == 0 else -c * b
    return PowerPolynomial(tuple(out))


def derivative(poly: PowerPolynomial, k: int = 1) -> PowerPolynomial:
    if k < 0:
        raise ValueError("derivative order must be >= 0")
    a = list(poly.a)
    for _ in range(k):
        a = [i * a[i] for i in range(1, len(a))]
    return PowerPolynomial(tuple(a))


def compose_one_minus(poly: PowerPolynomial) -> PowerPolynomial:
    """Coefficients of ``q(p) = poly(1 - p)``."""
    out = [Fraction(0)] * max(len(poly.a), 1)
    for i, c in enumerate(poly.a):
        if not c:
            continue
        for j, b in enumerate(binomial_row(i)):
            out[j] += c * b if j % 2 == 0 else -c * b
    return PowerPolynomial(tuple(out))


def coeff_function_eval(cv: CoefficientVector | Sequence, x) -> Fraction:
    """Piecewise-linear coefficient function F with F(k) = N_k."""
    N = tuple(cv)
    n = len(N) - 1
    x = _frac(x)
    if x < 0 or x > n:
        raise ValueError(f"x={x} outside [0, {n}]")
    if x == 0:
        return Fraction(N[0])
    k = max(1, -((-x.numerator) // x.denominator))  # ceil(x), at least 1
    return (N[k] - N[k - 1]) * x + k * N[k - 1] - (k - 1) * N[k]


def divided_difference(xs: Sequence, values: Sequence) -> Fraction:
    """Divided difference [x_1, ..., x_m; f] by the recursive definition."""
    if len(xs) != len(values):
        raise ValueError("xs and values must have the same length")
    if not xs:
        raise ValueError("need at least one point")
    pts = [_frac(x) for x in xs]
    for a, b in zip(pts, pts[1:]):
        if not a < b:
            raise ValueError("points must be strictly increasing")
    table = [_frac(v) for v in values]
    m = len(pts)
    for order in range(1, m):
        table = [
            (table[i + 1] - table[i]) / (pts[i + order] - pts[i]) for i in range(m - order)
        ]
    return table[0]


# -- convexity classification -------------------------------------------------

_SIGN_NAMES = {1: "convex", 0: "polynomial", -1: "concave"}


@dataclass(frozen=True)
class SignSegment:
    start: Fraction
    end: Fraction
    sign: int

    @property
    def kind(self) -> str:
        return _SIGN_NAMES[self.sign]


@dataclass(frozen=True)
class ConvexityReport:
    """Sign pattern of the (order+1)-th derivative on a rational grid.

    ``segments`` are maximal grid runs of constant sign; ``brackets`` are
    consecutive grid points ``(a, b)`` across which the sign strictly flips
    (an odd-multiplicity root lies in ``(a, b)``, or at ``b`` when the
    derivative vanishes there and the flip happens after it).
    """

    order: int
    segments: tuple[SignSegment, ...]
    brackets: tuple[tuple[Fraction, Fraction, int, int], ...]

    def sign_at(self, x) -> int:
        x = _frac(x)
        for seg in self.segments:
            if seg.start <= x <= seg.end:
                return seg.sign
        raise ValueError(f"{x} outside classified interval")


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def convexity_classify(
    poly: PowerPolynomial, order: int, interval=(0, 1), step=Fraction(1, 128)
) -> ConvexityReport:
    """Classify ``poly`` as order-``order`` convex/concave along a grid.

    The (order+1)-th derivative is evaluated exactly at ``a, a+step, ..., b``.
    """
    a, b = (_frac(v) for v in interval)
    step = _frac(step)
    if not a < b:
        raise ValueError("interval must satisfy a < b")
    if step <= 0:
        raise ValueError("grid step must be positive")
    d = derivative(poly, order + 1)
    xs = []
    x = a
    while x < b:
        xs.append(x)
        x += step
    xs.append(b)
    signs = [_sign(d(x)) for x in xs]
    segments = []
    start = 0
    for i in range(1, len(xs) + 1):
        if i == len(xs) or signs[i] != signs[start]:
            segments.append(SignSegment(xs[start], xs[i - 1], signs[start]))
            start = i
    brackets = []
    last_nonzero = None
    for i, s in enumerate(signs):
        if s == 0:
            continue
        if last_nonzero is not None and signs[last_nonzero] != s:
            brackets.append((xs[last_nonzero], xs[i], signs[last_nonzero], s))
        last_nonzero = i
    return ConvexityReport(order, tuple(segments), tuple(brackets))


# -- serialization ------------------------------------------------------------

def _frac_str(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def power_to_json(poly: PowerPolynomial) -> str:
    return json.dumps([_frac_str(x) for x in poly.a])


def power_from_json(text: str) -> PowerPolynomial:
    return PowerPolynomial(tuple(Fraction(s) for s in json.loads(text)))


def fractions_to_strings(values: Iterable) -> list[str]:
    return [_frac_str(_frac(v)) for v in values]

