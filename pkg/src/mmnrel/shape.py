"""Shape diagnostics for exact and approximated reliability polynomials.

Each check yields a :class:`Check` carrying a pass flag and a witness; a
:class:`ShapeReport` aggregates them with a plain AND.  Failures are data,
not exceptions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .approx import (
    ApproxResult,
    approx_polynomials,
    approximate_pair,
    chebyshev_error,
    default_inputs,
    error_bound,
    half_point_error,
)
from .exact import (
    DEFAULT_CAP,
    CoefficientVector,
    binomial_row,
    brute_force_coefficients,
    coefficient_bounds,
)
from .network import MatchstickNetwork, dual
from .polyalg import (
    NFormPolynomial,
    PowerPolynomial,
    compose_one_minus,
    convexity_classify,
    derivative,
    divided_difference,
    to_power_basis,
)

__all__ = [
    "ArgmaxReport",
    "VertexReport",
    "Check",
    "ShapeReport",
    "argmax_intervals",
    "compute_E",
    "vertex_analysis",
    "log_concavity_failures",
    "coefficient_concavity_failures",
    "derivative_identity",
    "inflection_pairing",
    "convex_near_origin",
    "verify_all",
]


@dataclass(frozen=True)
class ArgmaxReport:
    argmax: int
    max_value: int
    I1: tuple[Fraction, Fraction]
    I2: tuple[Fraction, Fraction]
    in_I1: bool
    in_I2: bool


def _intervals(l: int, w: int):
    n = l * w
    lo = Fraction(n - w + l, 2)
    return (lo, lo + Fraction(n - w - l + 2, 4)), (lo, n - w + Fraction(1, 2))


def argmax_intervals(cv: Sequence, l: int, w: int) -> ArgmaxReport:
    """Index of the largest coefficient (smallest on ties) and the I1/I2 tests.

    ``I1 = [(n-w+l)/2, (n-w+l)/2 + (n-w-l+2)/4]`` and
    ``I2 = [(n-w+l)/2, n-w+1/2]``, both closed.
    """
    N = list(cv)
    top = max(N)
    k = N.index(top)
    I1, I2 = _intervals(l, w)
    return ArgmaxReport(k, top, I1, I2, I1[0] <= k <= I1[1], I2[0] <= k <= I2[1])


def compute_E(l: int, w: int, s: int, N_s) -> Fraction:
    """``N_s L^2 - C(n, w-1) L_s (3L - 2L_s)`` with L = n-w-l+2, L_s = s-l+1."""
    n = l * w
    if not l - 1 < s <= n - w + 1:
        raise ValueError(f"s={s} must satisfy {l - 1} < s <= {n - w + 1}")
    span = n - w - l + 2
    left = s - l + 1
    return Fraction(N_s) * span ** 2 - binomial_row(n)[w - 1] * left * (3 * span - 2 * left)


@dataclass(frozen=True)
class VertexReport:
    A: Fraction
    x_V: Fraction | None
    lower_bound: Fraction
    upper_I1: Fraction
    upper_special: Fraction
    E: Fraction
    hypothesis_ok: bool
    applicable: bool
    sign_ok: bool | None
    lower_holds: bool | None
    upper_I1_holds: bool | None
    upper_special_holds: bool | None

    @property
    def implications_hold(self) -> bool:
        """Every bound the hypotheses promise is actually met."""
        if not (self.applicable and self.hypothesis_ok):
            return True
        ok = bool(self.sign_ok) and bool(self.lower_holds)
        if self.E >= 0:
            ok = ok and bool(self.upper_I1_holds)
        if self.upper_special_holds is not None:
            ok = ok and self.upper_special_holds
        return ok


def vertex_analysis(l: int, w: int, s: int, N_s, piece) -> VertexReport:
    """Vertex position of the parabola against its lower and upper bounds.

    ``applicable`` records whether l > 2 and w >= 2; the upper bound
    ``n-w+1/2`` is only promised when s = n-w.
    """
    n = l * w
    lower = Fraction(n - w + l, 2)
    upper_I1 = lower + Fraction(n - w - l + 2, 4)
    upper_special = n - w + Fraction(1, 2)
    E = compute_E(l, w, s, N_s)
    hyp = Fraction(N_s) > binomial_row(n)[w - 1]
    applicable = l > 2 and w >= 2
    if piece.A == 0:
        return VertexReport(piece.A, None, lower, upper_I1, upper_special, E, hyp, applicable,
                            None, None, None, None)
    x_V = piece.vertex
    sign_ok = piece.A <= 0 and piece.B >= 0 and piece.C <= 0
    special = (x_V <= upper_special) if s == n - w else None
    return VertexReport(piece.A, x_V, lower, upper_I1, upper_special, E, hyp, applicable,
                        sign_ok, x_V >= lower, x_V <= upper_I1, special)


def log_concavity_failures(cv: Sequence) -> list[int]:
    """Indices k where N_k^2 < N_{k-1} N_{k+1} with both neighbours positive."""
    N = list(cv)
    return [
        k for k in range(1, len(N) - 1)
        if N[k - 1] > 0 and N[k + 1] > 0 and N[k] * N[k] < N[k - 1] * N[k + 1]
    ]


def coefficient_concavity_failures(cv: Sequence, l: int, w: int) -> list[int]:
    """k in [l, n-w] where [k-1, k, k+1; F] > 0."""
    N = list(cv)
    n = len(N) - 1
    return [
        k for k in range(l, n - w + 1)
        if divided_difference([k - 1, k, k + 1], N[k - 1:k + 2]) > 0
    ]


def derivative_identity(rel: PowerPolynomial, rel_dual: PowerPolynomial, k: int) -> PowerPolynomial:
    """``Rel^(k)(p) - (-1)^(k+1) Rel_dual^(k)(1-p)``; zero when the identity holds."""
    lhs = derivative(rel, k)
    rhs = compose_one_minus(derivative(rel_dual, k))
    return lhs - rhs if k % 2 else lhs + rhs


def inflection_pairing(rel: PowerPolynomial, rel_dual: PowerPolynomial, step=Fraction(1, 128)):
    """Match every sign-change bracket of Rel'' with a reflected one of Rel_dual''.

    Returns ``(ok, brackets, unmatched)``.
    """
    mine = convexity_classify(rel, 1, step=step).brackets
    theirs = convexity_classify(rel_dual, 1, step=step).brackets
    unmatched = []
    for a, b, sa, sb in mine:
        hit = any(
            1 - b <= c and d <= 1 - a and sc == -sb and sd == -sa
            for c, d, sc, sd in theirs
        )
        if not hit:
            unmatched.append((a, b))
    return not unmatched and len(mine) == len(theirs), mine, unmatched


def convex_near_origin(rel: PowerPolynomial, step=Fraction(1, 128)) -> Fraction | None:
    """Largest grid point delta with Rel'' > 0 on (0, delta], or None."""
    report = convexity_classify(rel, 1, step=step)
    delta = None
    for seg in report.segments:
        if seg.end == 0:
            continue
        if seg.sign != 1:
            break
        delta = seg.end
    return delta


@dataclass(frozen=True)
class Check:
    name: str
    statement: str
    passed: bool
    witness: object = None

    def to_dict(self) -> dict:
        return {"name": self.name, "statement": self.statement, "pass": bool(self.passed),
                "witness": _jsonable(self.witness)}


@dataclass
class ShapeReport:
    label: str
    checks: list[Check] = field(default_factory=list)
    info: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name, statement, passed, witness=None):
        self.checks.append(Check(name, statement, bool(passed), witness))

    def __getitem__(self, name) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failed(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "network": self.label,
            "pass": self.passed,
            "checks": [c.to_dict() for c in self.checks],
            "info": _jsonable(self.info),
        }


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, bool) or x is None or isinstance(x, (int, float, str)):
        return x
    return str(x)


def verify_all(
    net: MatchstickNetwork,
    variant: str = "lminus1",
    cap: int = DEFAULT_CAP,
    workers: int = 1,
    samples: int = 10_001,
    pair: tuple[ApproxResult, ApproxResult] | None = None,
    max_order: int = 4,
) -> ShapeReport:
    """Run every shape check on a network, its dual and their approximations."""
    l, w, n = net.l, net.w, net.n
    report = ShapeReport(net.label or f"({l},{w})-network")
    N = brute_force_coefficients(net, cap=cap, workers=workers)
    Nd = brute_force_coefficients(dual(net), cap=cap, workers=workers)
    row = binomial_row(n)
    report.info["N"] = list(N.N)
    report.info["N_dual"] = list(Nd.N)

    bad = N.violations() + Nd.violations()
    report.add("boundary_values", "0 <= N_k <= C(n,k); N_k = 0 for k < l; N_k = C(n,k) for k > n-w",
               not bad, bad)
    comp = [k for k in range(n + 1) if N[k] + Nd[n - k] != row[k]]
    report.add("complementarity", "N_k + N^perp_{n-k} = C(n,k)", not comp, comp)

    rel = to_power_basis(NFormPolynomial(N.N))
    rel_d = to_power_basis(NFormPolynomial(Nd.N))
    residual = rel + compose_one_minus(rel_d) - PowerPolynomial((1,))
    report.add("complementarity_polynomial", "Rel(G;p) + Rel(G^perp;1-p) = 1",
               residual.is_zero(), residual.degree)

    outside = [k for k in range(n + 1) if not (coefficient_bounds(l, w, k)[0] <= N[k] <= coefficient_bounds(l, w, k)[1])]
    report.add("sandwich", "PoS coefficient <= N_k <= SoP coefficient", not outside, outside)

    lc = {"primary": log_concavity_failures(N), "dual": log_concavity_failures(Nd)}
    report.add("log_concavity", "N_k^2 >= N_{k-1} N_{k+1}", not any(lc.values()), lc)
    cc = {"primary": coefficient_concavity_failures(N, l, w),
          "dual": coefficient_concavity_failures(Nd, w, l)}
    # Log-concavity does not make the sequence itself concave, so this is
    # recorded rather than enforced.
    report.info["coefficient_function_convex_points"] = cc

    if n >= 3:
        bad_orders = [k for k in range(1, max_order + 1)
                      if not derivative_identity(rel, rel_d, k).is_zero()]
        report.add("derivative_identities",
                   "Rel^(k)(G;p) = (-1)^(k+1) Rel^(k)(G^perp;1-p)", not bad_orders, bad_orders)
        half = Fraction(1, 2)
        mism = []
        for k in range(1, max_order + 1):
            a, b = derivative(rel, k)(half), derivative(rel_d, k)(half)
            if (k % 2 and a != b) or (not k % 2 and a != -b):
                mism.append(k)
        report.add("derivatives_at_half",
                   "odd derivatives agree and even derivatives are opposite at p = 1/2",
                   not mism, mism)
        ok, brackets, unmatched = inflection_pairing(rel, rel_d)
        report.add("inflection_pairing", "p0 inflection of Rel(G) <=> 1-p0 inflection of Rel(G^perp)",
                   ok, {"brackets": [(a, b) for a, b, _, _ in brackets], "unmatched": unmatched})
        report.info["convex_near_origin_delta"] = convex_near_origin(rel)

    am = argmax_intervals(N, l, w)
    am_d = argmax_intervals(Nd, w, l)
    report.add("argmax_in_I2", "argmax N_k in [(n-w+l)/2, n-w+1/2]", am.in_I2 and am_d.in_I2,
               {"primary": (am.argmax, am.I2), "dual": (am_d.argmax, am_d.I2)})
    report.info["argmax_in_I1"] = {"primary": am.in_I1, "dual": am_d.in_I1,
                                   "I1": am.I1, "I1_dual": am_d.I1}
    if all(b == 0 for b in net.flat_bits()):
        lo, hi = Fraction(n, 2), n - w + Fraction(1, 2)
        report.add("pos_argmax", "PoS argmax in [n/2, n-w+1/2]", lo <= am.argmax <= hi,
                   (am.argmax, (lo, hi)))

    if l >= 2 and w >= 2 and n - w > l:
        _check_approximation(report, net, N, Nd, variant, samples, pair, max_order)
    else:
        report.info["approximation"] = "skipped: dimensions leave no room for interpolation"
    return report


def _check_approximation(report, net, N, Nd, variant, samples, pair, max_order):
    l, w, n = net.l, net.w, net.n
    row = binomial_row(n)
    if pair is None:
        pair = approximate_pair(l, w, default_inputs(l, w, N, Nd, variant))
    primary, dual_res = pair
    comp = [k for k in range(n + 1) if primary.N_tilde[k] + dual_res.N_tilde[n - k] != row[k]]
    report.add("approx_complementarity", "N~_k + N~perp_{n-k} = C(n,k)", not comp, comp)
    total = sum(primary.N_tilde[k] + dual_res.N_tilde[n - k] for k in range(n + 1))
    report.add("approx_sum", "sum_k [N~_k + N~perp_{n-k}] = 2^n", total == 2 ** n, total)
    known = [k for k in range(n + 1) if (k <= l - 1 or k >= n - w + 1) and primary.N_tilde[k] != N[k]]
    known += [-k for k in range(n + 1) if (k <= w - 1 or k >= n - l + 1) and dual_res.N_tilde[k] != Nd[k]]
    report.add("approx_known_ranges", "N~_k = N_k wherever N_k is known a priori", not known, known)

    ap, ap_d = (to_power_basis(p) for p in approx_polynomials(pair))
    residual = ap + compose_one_minus(ap_d) - PowerPolynomial((1,))
    report.add("approx_complementarity_polynomial", "ApRel(G;p) + ApRel(G^perp;1-p) = 1",
               residual.is_zero(), residual.degree)
    bad_orders = [k for k in range(1, min(max_order, 3) + 1)
                  if not derivative_identity(ap, ap_d, k).is_zero()]
    report.add("approx_derivative_identities",
               "ApRel^(k)(G;p) = (-1)^(k+1) ApRel^(k)(G^perp;1-p)", not bad_orders, bad_orders)

    am = argmax_intervals(primary.N_tilde, l, w)
    report.info["approx_argmax"] = {"argmax": am.argmax, "in_I1": am.in_I1, "in_I2": am.in_I2}
    report.info["hypothesis_violated"] = {"primary": primary.hypothesis_violated,
                                          "dual": dual_res.hypothesis_violated}

    if primary.inputs.variant == "lminus1":
        inp = primary.inputs
        vr = vertex_analysis(l, w, inp.s, inp.N_s, primary.piece)
        vr_d = vertex_analysis(w, l, inp.t, inp.Nd_t, dual_res.piece)
        report.add("vertex_bounds",
                   "N_s > C(n,w-1) => concave parabola with vertex in the promised interval",
                   vr.implications_hold and vr_d.implications_hold,
                   {"primary": _vertex_summary(vr), "dual": _vertex_summary(vr_d)})
        nonneg = _nonnegative_on_middle(primary) and _nonnegative_on_middle(dual_res)
        if vr.hypothesis_ok and vr.applicable and vr_d.hypothesis_ok and vr_d.applicable:
            report.add("spline_nonnegative", "f >= 0 on [l-1, n-w+1] under the hypothesis", nonneg)

    measured = chebyshev_error(N.N, primary.N_tilde, samples)
    eb = error_bound(l, w, N, Nd, primary.piece, dual_res.piece, measured)
    report.add("error_bound", "max |Rel - ApRel| <= a-priori bound", eb.holds, eb.to_dict())
    report.info["chebyshev_error"] = measured
    report.info["half_point_error"] = float(half_point_error(N.N, primary.N_tilde))


def _vertex_summary(vr: VertexReport) -> dict:
    return {"A": vr.A, "x_V": vr.x_V, "E": vr.E, "hypothesis_ok": vr.hypothesis_ok,
            "lower_holds": vr.lower_holds, "upper_I1_holds": vr.upper_I1_holds,
            "upper_special_holds": vr.upper_special_holds}


def _nonnegative_on_middle(res: ApproxResult, steps: int = 64) -> bool:
    f = res.spline
    a, b = f.l - 1, f.n - f.w + 1
    return all(f(a + Fraction(i * (b - a), steps)) >= 0 for i in range(steps + 1))
