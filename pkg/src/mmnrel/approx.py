"""Simultaneous quadratic-spline approximation of two dual networks.

For an (l, w) network the coefficient function is known exactly on
``[0, l-1]`` (zero) and on ``[n-w+1, n]`` (binomials).  The gap is bridged by
a parabola through three interpolation points, the same is done for the
dual, and the residual of the complementarity identity
``N_k + N^perp_{n-k} = C(n, k)`` is split evenly between the two so the
approximations stay exactly complementary.

Two input variants are supported:

``lminus1``
    parabola through ``(l-1, 0)``, ``(s, N_s)``, ``(n-w+1, C(n, w-1))``
    with ``s = n - w`` by default.
``l``
    parabola through ``(l, N_l)``, ``(n-w, N_{n-w})``, ``(n-w+1, C(n, w-1))``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from typing import Sequence

import numpy as np
from scipy.optimize import minimize_scalar

from .exact import CoefficientVector
from .polyalg import NFormPolynomial, fractions_to_strings

__all__ = [
    "VARIANTS",
    "OpCounter",
    "QuadraticPiece",
    "SplineApproximant",
    "ApproxInputs",
    "ApproxResult",
    "ErrorBoundReport",
    "solve_parabola",
    "step2_closed_form",
    "build_spline",
    "spline_eval",
    "default_inputs",
    "inputs_from_first_coefficients",
    "approximate_pair",
    "approx_polynomials",
    "error_bound",
    "chebyshev_error",
    "half_point_error",
    "approx_result_to_dict",
]

VARIANTS = ("lminus1", "l")


class OpCounter:
    """Tally of elementary steps, used to check the linear-time claim."""

    def __init__(self):
        self.count = 0

    def tick(self, k: int = 1) -> None:
        self.count += k


class _NullCounter(OpCounter):
    def tick(self, k: int = 1) -> None:
        pass


def _binomials(n: int, counter: OpCounter) -> list[int]:
    row = [1] * (n + 1)
    for k in range(n):
        row[k + 1] = row[k] * (n - k) // (k + 1)
        counter.tick()
    return row


@dataclass(frozen=True)
class QuadraticPiece:
    A: Fraction
    B: Fraction
    C: Fraction

    def __post_init__(self):
        for name in ("A", "B", "C"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def __call__(self, x):
        x = Fraction(x) if not isinstance(x, float) else x
        return (self.A * x + self.B) * x + self.C

    @property
    def vertex(self) -> Fraction:
        if self.A == 0:
            raise ZeroDivisionError("affine piece has no vertex")
        return -self.B / (2 * self.A)


def _det3(m) -> Fraction:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def solve_parabola(p1, p2, p3) -> QuadraticPiece:
    """Parabola ``A x^2 + B x + C`` through three points, by Cramer's rule."""
    pts = [(Fraction(x), Fraction(y)) for x, y in (p1, p2, p3)]
    xs = [x for x, _ in pts]
    if len(set(xs)) != 3:
        raise ValueError(f"interpolation abscissae must be distinct, got {xs}")
    rows = [[x * x, x, Fraction(1)] for x in xs]
    ys = [y for _, y in pts]
    det = _det3(rows)
    coeffs = []
    for col in range(3):
        m = [r[:] for r in rows]
        for i in range(3):
            m[i][col] = ys[i]
        coeffs.append(_det3(m) / det)
    return QuadraticPiece(*coeffs)


def step2_closed_form(l: int, w: int, s: int, N_s) -> QuadraticPiece:
    """Closed-form parabola through (l-1, 0), (s, N_s), (n-w+1, C(n, w-1)).

    For the dual piece call with ``(w, l, t, N^perp_t)``.
    """
    n = l * w
    if not l - 1 < s < n - w + 1:
        raise ValueError(f"s={s} must lie strictly between {l - 1} and {n - w + 1}")
    c = Fraction(_binomials(n, _NullCounter())[w - 1])
    N_s = Fraction(N_s)
    left = s - l + 1          # length of [l-1, s]
    right = n - w + 1 - s     # length of [s, n-w+1]
    span = n - w - l + 2      # length of [l-1, n-w+1]
    den = left * right * span
    A = (c * left - N_s * span) / den
    B = (N_s * span * (n - w + l) - c * left * (s + l - 1)) / den
    C = (l - 1) * (c * s * left - N_s * (n - w + 1) * span) / den
    return QuadraticPiece(A, B, C)


@dataclass(frozen=True)
class SplineApproximant:
    """Piecewise approximant of the coefficient function of an (l, w) network.

    Zero on ``[0, l-1]``, the parabola on ``(l-1, n-w+1]`` and the chords of
    the binomial sequence beyond.  When the parabola is anchored at
    ``knot > l-1`` (variant ``l``) the stretch ``(l-1, knot)`` is the chord
    from ``(l-1, 0)`` to the parabola's value at ``knot``.
    """

    l: int
    w: int
    piece: QuadraticPiece
    knot: int

    @property
    def n(self) -> int:
        return self.l * self.w

    def __call__(self, x):
        return spline_eval(self, x)


def build_spline(l: int, w: int, piece: QuadraticPiece, knot: int | None = None) -> SplineApproximant:
    return SplineApproximant(l, w, piece, l - 1 if knot is None else knot)


def spline_eval(f: SplineApproximant, x) -> Fraction:
    n, l, w = f.n, f.l, f.w
    x = Fraction(x)
    if x < 0 or x > n:
        raise ValueError(f"x={x} outside [0, {n}]")
    if x <= l - 1:
        return Fraction(0)
    if x <= n - w + 1:
        if x < f.knot:
            return f.piece(f.knot) * (x - (l - 1)) / (f.knot - (l - 1))
        return f.piece(x)
    k = -((-x.numerator) // x.denominator)
    lo, hi = _binomials(n, _NullCounter())[k - 1:k + 1]
    return (hi - lo) * x + k * lo - (k - 1) * hi


@dataclass(frozen=True)
class ApproxInputs:
    """Coefficients fed to the algorithm.

    ``s, N_s`` belong to the (l, w) network and ``t, Nd_t`` to its dual.
    Variant ``l`` additionally uses ``N_l`` and ``Nd_w`` (dual coefficient
    at index w).
    """

    variant: str
    s: int
    N_s: int | Fraction
    t: int
    Nd_t: int | Fraction
    N_l: int | Fraction | None = None
    Nd_w: int | Fraction | None = None

    def __post_init__(self):
        if self.variant not in VARIANTS:
            raise ValueError(f"variant must be one of {VARIANTS}, got {self.variant!r}")
        if self.variant == "l" and (self.N_l is None or self.Nd_w is None):
            raise ValueError("variant 'l' needs N_l and Nd_w")

    def to_dict(self) -> dict:
        d = {"variant": self.variant, "s": self.s, "N_s": str(self.N_s), "t": self.t, "Nd_t": str(self.Nd_t)}
        if self.variant == "l":
            d["N_l"] = str(self.N_l)
            d["Nd_w"] = str(self.Nd_w)
        return d


def default_inputs(l: int, w: int, exact: Sequence[int], exact_dual: Sequence[int], variant: str = "lminus1") -> ApproxInputs:
    """Inputs read off known vectors with the default choice s = n-w, t = n-l."""
    n = l * w
    extra = {}
    if variant == "l":
        extra = {"N_l": exact[l], "Nd_w": exact_dual[w]}
    return ApproxInputs(variant, n - w, exact[n - w], n - l, exact_dual[n - l], **extra)


def inputs_from_first_coefficients(l: int, w: int, N_l: int, Nd_w: int, variant: str = "lminus1") -> ApproxInputs:
    """Inputs from the first non-trivial coefficients N_l and N^perp_w.

    N_{n-w} and N^perp_{n-l} follow from complementarity.
    """
    n = l * w
    row = _binomials(n, _NullCounter())
    N_s = row[n - w] - Nd_w
    Nd_t = row[l] - N_l
    extra = {"N_l": N_l, "Nd_w": Nd_w} if variant == "l" else {}
    return ApproxInputs(variant, n - w, N_s, n - l, Nd_t, **extra)


@dataclass(frozen=True)
class ApproxResult:
    """Adjusted coefficients for one network of the pair (exact rationals)."""

    l: int
    w: int
    N_tilde: tuple[Fraction, ...]
    clamped: tuple[str, ...]
    inputs: ApproxInputs
    spline: SplineApproximant
    hypothesis_violated: bool = False
    role: str = field(default="primary")

    @property
    def n(self) -> int:
        return self.l * self.w

    @property
    def piece(self) -> QuadraticPiece:
        return self.spline.piece

    def floored(self) -> list[int]:
        return [floor(x) for x in self.N_tilde]


def _pieces(l, w, n, row, inputs: ApproxInputs):
    if inputs.variant == "lminus1":
        piece = step2_closed_form(l, w, inputs.s, inputs.N_s)
        dual_piece = step2_closed_form(w, l, inputs.t, inputs.Nd_t)
        return build_spline(l, w, piece), build_spline(w, l, dual_piece)
    piece = solve_parabola((l, inputs.N_l), (inputs.s, inputs.N_s), (n - w + 1, row[w - 1]))
    dual_piece = solve_parabola((w, inputs.Nd_w), (inputs.t, inputs.Nd_t), (n - l + 1, row[l - 1]))
    return build_spline(l, w, piece, knot=l), build_spline(w, l, dual_piece, knot=w)


def _values(f: SplineApproximant, row, counter) -> list[Fraction]:
    n, l, w = f.n, f.l, f.w
    out = []
    for k in range(n + 1):
        counter.tick()
        if k <= l - 1:
            out.append(Fraction(0))
        elif k <= n - w + 1:
            out.append(f(k))
        else:
            out.append(Fraction(row[k]))
    return out


def approximate_pair(l: int, w: int, inputs: ApproxInputs, counter: OpCounter | None = None) -> tuple[ApproxResult, ApproxResult]:
    """Run the approximation for an (l, w) network and its (w, l) dual.

    Returns ``(primary, dual)``.  Entries on the exactly known ranges are kept;
    elsewhere ``N~_k = f(k) + Delta(k)/2`` and ``N~perp_{n-k} = g(n-k) +
    Delta(k)/2`` with ``Delta(k) = C(n,k) - f(k) - g(n-k)``.  A negative entry
    is set to 0 and its partner to ``C(n, k)``.
    """
    counter = counter if counter is not None else _NullCounter()
    n = l * w
    if l < 2 or w < 2:
        raise ValueError(f"interpolation abscissae collide for (l, w) = ({l}, {w})")
    row = _binomials(n, counter)
    f, g = _pieces(l, w, n, row, inputs)
    counter.tick(2)
    fv = _values(f, row, counter)
    gv = _values(g, row, counter)
    primary = list(fv)
    dual = list(gv)
    flags = ["none"] * (n + 1)
    dual_flags = ["none"] * (n + 1)
    for k in range(min(l - 1, w - 1), max(n - l + 1, n - w + 1) + 1):
        counter.tick()
        if k <= l - 1 or k >= n - w + 1:
            continue
        delta = row[k] - fv[k] - gv[n - k]
        a = fv[k] + delta / 2
        b = gv[n - k] + delta / 2
        if a < 0:
            a, b = Fraction(0), Fraction(row[k])
            flags[k], dual_flags[n - k] = "zeroed", "forced-binomial"
        elif b < 0:
            a, b = Fraction(row[k]), Fraction(0)
            flags[k], dual_flags[n - k] = "forced-binomial", "zeroed"
        primary[k], dual[n - k] = a, b
    violated = Fraction(inputs.N_s) <= row[w - 1]
    dual_violated = Fraction(inputs.Nd_t) <= row[l - 1]
    return (
        ApproxResult(l, w, tuple(primary), tuple(flags), inputs, f, violated, "primary"),
        ApproxResult(w, l, tuple(dual), tuple(dual_flags), inputs, g, dual_violated, "dual"),
    )


def approx_polynomials(pair: tuple[ApproxResult, ApproxResult]) -> tuple[NFormPolynomial, NFormPolynomial]:
    primary, dual = pair
    return NFormPolynomial(primary.N_tilde), NFormPolynomial(dual.N_tilde)


# -- error analysis -----------------------------------------------------------

@dataclass(frozen=True)
class ErrorBoundReport:
    M: int
    D: Fraction
    vertex_term: Fraction | None
    bound: Fraction
    measured: float | None = None

    @property
    def holds(self) -> bool | None:
        if self.measured is None:
            return None
        return self.measured <= float(self.bound)

    def to_dict(self) -> dict:
        return {
            "M": str(self.M),
            "D": f"{self.D.numerator}/{self.D.denominator}",
            "vertex_term": None if self.vertex_term is None else str(self.vertex_term),
            "bound": float(self.bound),
            "bound_exact": f"{self.bound.numerator}/{self.bound.denominator}",
            "measured": self.measured,
            "holds": self.holds,
        }


def error_bound(
    l: int,
    w: int,
    exact: Sequence[int],
    exact_dual: Sequence[int],
    piece: QuadraticPiece,
    dual_piece: QuadraticPiece,
    measured: float | None = None,
) -> ErrorBoundReport:
    """A-priori bound on max |Rel - ApRel| over [0, 1].

    ``(n-l-w) / 2^(n+1) * (M + max{C(n,l-1), C(n,w-1), |D / (4(A - A^perp))|})``
    with ``M = max_k |N_k - N^perp_{n-k}|``.  When ``A == A^perp`` the vertex
    term is undefined and only the two binomials enter the max.
    """
    n = l * w
    row = _binomials(n, _NullCounter())
    M = max(abs(exact[k] - exact_dual[n - k]) for k in range(n + 1))
    A, B, C = piece.A, piece.B, piece.C
    Ad, Bd, Cd = dual_piece.A, dual_piece.B, dual_piece.C
    D = (B - Bd - 2 * n * Ad) ** 2 - 4 * (A - Ad) * (C - Cd - Bd * n - Ad * n * n)
    candidates = [Fraction(row[l - 1]), Fraction(row[w - 1])]
    vertex_term = None
    if A != Ad:
        vertex_term = abs(D / (4 * (A - Ad)))
        candidates.append(vertex_term)
    bound = Fraction(n - l - w, 2 ** (n + 1)) * (M + max(candidates))
    return ErrorBoundReport(M, D, vertex_term, bound, measured)


def _difference_evaluator(exact, approx):
    c_exact = exact.c if isinstance(exact, NFormPolynomial) else tuple(exact)
    c_approx = approx.c if isinstance(approx, NFormPolynomial) else tuple(approx)
    if len(c_exact) != len(c_approx):
        raise ValueError("polynomials must have the same degree bound n")
    n = len(c_exact) - 1
    diff = np.array([float(Fraction(a) - Fraction(b)) for a, b in zip(c_exact, c_approx)])
    ks = np.arange(n + 1)

    def evaluate(p):
        p = np.atleast_1d(np.asarray(p, dtype=float))[:, None]
        return (diff * p ** ks * (1 - p) ** (n - ks)).sum(axis=1)

    return evaluate


def chebyshev_error(exact, approx, samples: int = 10_001) -> float:
    """Sup-norm distance on [0, 1]: uniform grid plus local refinement."""
    if samples < 2:
        raise ValueError("need at least two samples")
    evaluate = _difference_evaluator(exact, approx)
    grid = np.linspace(0.0, 1.0, samples)
    values = np.abs(evaluate(grid))
    i = int(np.argmax(values))
    best = float(values[i])
    lo, hi = grid[max(i - 1, 0)], grid[min(i + 1, samples - 1)]
    if hi > lo:
        res = minimize_scalar(lambda p: -abs(evaluate(p)[0]), bounds=(lo, hi), method="bounded")
        best = max(best, float(-res.fun))
    return best


def half_point_error(exact, approx) -> Fraction:
    """``sum_k |N_k - N~_k| / 2^n``.

    This is the coefficient-wise majorant ``sum |N_k - N~_k| p^k (1-p)^(n-k)``
    evaluated at p = 1/2, a coarser figure than :func:`chebyshev_error`.
    """
    c_exact = exact.c if isinstance(exact, NFormPolynomial) else tuple(exact)
    c_approx = approx.c if isinstance(approx, NFormPolynomial) else tuple(approx)
    n = len(c_exact) - 1
    return sum((abs(Fraction(a) - Fraction(b)) for a, b in zip(c_exact, c_approx)), Fraction(0)) / 2 ** n


def approx_result_to_dict(result: ApproxResult, bound: ErrorBoundReport | None = None) -> dict:
    return {
        "l": result.l,
        "w": result.w,
        "role": result.role,
        "variant": result.inputs.variant,
        "inputs": result.inputs.to_dict(),
        "piece": fractions_to_strings((result.piece.A, result.piece.B, result.piece.C)),
        "N_tilde": fractions_to_strings(result.N_tilde),
        "N_tilde_floor": result.floored(),
        "clamped": list(result.clamped),
        "hypothesis_violated": result.hypothesis_violated,
        "error_bound": None if bound is None else float(bound.bound),
        "measured_error": None if bound is None else bound.measured,
    }
