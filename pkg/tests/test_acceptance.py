"""Acceptance suite: one PASS/FAIL line per criterion.

Run ``pytest tests/test_acceptance.py -v`` or ``python tests/test_acceptance.py``.
Tolerances are fixed here and never relaxed to make a line pass.
"""

import sys
import time
from fractions import Fraction
from math import comb
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))
sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))

from conftest import (  # noqa: E402
    E_TABLE,
    H35_ALG_L,
    H35_ALG_LMINUS1,
    H35_DUAL_ALG_L,
    H35_DUAL_ALG_LMINUS1,
    H35_DUAL_EXACT,
    H35_EXACT,
    MAX_TABLE,
)
from mmnrel.approx import (  # noqa: E402
    OpCounter,
    approx_polynomials,
    approximate_pair,
    chebyshev_error,
    default_inputs,
    error_bound,
    inputs_from_first_coefficients,
    step2_closed_form,
)
from mmnrel.exact import brute_force_coefficients, coefficient_bounds, pos_coefficients  # noqa: E402
from mmnrel.network import dual, from_matrix, make_hammock, make_pos  # noqa: E402
from mmnrel.polyalg import NFormPolynomial, PowerPolynomial, compose_one_minus, to_power_basis  # noqa: E402
from mmnrel.shape import (  # noqa: E402
    argmax_intervals,
    compute_E,
    derivative_identity,
    log_concavity_failures,
    vertex_analysis,
)

ROW_TOLERANCE = 1
ERROR_TOLERANCE = 0.01
ERROR_TARGETS = {"lminus1": 0.22, "l": 0.18}
ERROR_5X5_LIMIT = 0.21


def _line(number, passed, detail):
    return f"[{'PASS' if passed else 'FAIL'}] criterion {number}: {detail}"


def criterion_1():
    t0 = time.perf_counter()
    net = make_hammock(3, 5)
    N = brute_force_coefficients(net)
    Nd = brute_force_coefficients(dual(net))
    elapsed = time.perf_counter() - t0
    ok = N.N == H35_EXACT and Nd.N == H35_DUAL_EXACT and elapsed < 5
    return ok, f"3x5 hammock and dual match the exact rows ({elapsed:.3f}s < 5s)"


def criterion_2():
    t0 = time.perf_counter()
    found = {}
    for w, l, _, _ in MAX_TABLE:
        if (w, l) in found:
            continue
        variants = ("H", "Hplus") if l % 2 == 0 and w % 2 == 0 else ("H",)
        found[(w, l)] = sorted(
            (max(cv.N), argmax_intervals(cv, l, w).argmax)
            for cv in (brute_force_coefficients(make_hammock(l, w, v)) for v in variants)
        )
    expected = {}
    for w, l, top, k in MAX_TABLE:
        expected.setdefault((w, l), []).append((top, k))
    bad = [key for key in expected if sorted(expected[key]) != found[key]]
    elapsed = time.perf_counter() - t0
    ok = not bad and elapsed < 600
    return ok, f"{len(MAX_TABLE) - len(bad)}/{len(MAX_TABLE)} max/argmax rows match ({elapsed:.1f}s); mismatches {bad}"


def criterion_3():
    rows = {"lminus1": (H35_ALG_LMINUS1, H35_DUAL_ALG_LMINUS1), "l": (H35_ALG_L, H35_DUAL_ALG_L)}
    worst = {}
    comp_ok = True
    for variant, (row, dual_row) in rows.items():
        primary, dual_res = approximate_pair(3, 5, default_inputs(3, 5, H35_EXACT, H35_DUAL_EXACT, variant))
        worst[variant] = max(
            max(abs(a - b) for a, b in zip(primary.floored(), row)),
            max(abs(a - b) for a, b in zip(dual_res.floored(), dual_row)),
        )
        comp_ok &= all(primary.N_tilde[k] + dual_res.N_tilde[15 - k] == comb(15, k) for k in range(16))
    ok = all(v <= ROW_TOLERANCE for v in worst.values()) and comp_ok
    return ok, f"max floored deviation {worst} (tolerance {ROW_TOLERANCE}); exact complementarity {comp_ok}"


def _errors(l, w, variant):
    net = make_hammock(l, w)
    N = brute_force_coefficients(net)
    Nd = brute_force_coefficients(dual(net))
    primary, dual_res = approximate_pair(l, w, default_inputs(l, w, N, Nd, variant))
    err = chebyshev_error(N.N, primary.N_tilde)
    bound = error_bound(l, w, N.N, Nd.N, primary.piece, dual_res.piece, measured=err)
    return err, bound


def criterion_4():
    parts, ok = [], True
    for variant, target in ERROR_TARGETS.items():
        err, bound = _errors(3, 5, variant)
        hit = abs(err - target) <= ERROR_TOLERANCE and bound.holds
        ok &= hit
        parts.append(f"3x5 {variant}: {err:.4f} vs {target}±{ERROR_TOLERANCE}, bound {float(bound.bound):.4f}")
    for variant in ERROR_TARGETS:
        err, bound = _errors(5, 5, variant)
        hit = err < ERROR_5X5_LIMIT and bound.holds
        ok &= hit
        parts.append(f"5x5 {variant}: {err:.4f} vs < {ERROR_5X5_LIMIT}, bound {float(bound.bound):.4f}")
    return ok, "sup-norm errors " + "; ".join(parts)


def criterion_5():
    bad, total = [], 0
    for (l, w), entries in E_TABLE.items():
        for s, (N_s, E) in entries.items():
            total += 1
            got = compute_E(l, w, s, N_s)
            if got != E:
                bad.append(f"E({l},{w};{s})={got} vs {E}")
    return not bad, f"{total - len(bad)}/{total} E values match; mismatches {bad}"


NEGATIVE_CASES = [
    # (l, w, dual?, s, A, x_V)
    (3, 3, False, 3, Fraction(-1, 4), Fraction(45, 2)),
    (4, 4, False, 4, Fraction(38, 9), Fraction(26, 19)),
    (4, 4, False, 5, Fraction(-41, 9), Fraction(592, 41)),
    (4, 4, True, 4, Fraction(32, 9), Fraction(1, 8)),
    (4, 4, True, 5, Fraction(-76, 9), Fraction(208, 19)),
]


def criterion_6():
    bad = []
    for l, w, is_dual, s, A, x_V in NEGATIVE_CASES:
        net = make_hammock(l, w)
        net = dual(net) if is_dual else net
        N_s = brute_force_coefficients(net)[s]
        vr = vertex_analysis(net.l, net.w, s, N_s, step2_closed_form(net.l, net.w, s, N_s))
        tag = f"({l},{w}){'-dual' if is_dual else ''} s={s}"
        if vr.A != A:
            bad.append(f"{tag} A={vr.A} vs {A}")
        if vr.x_V != x_V:
            bad.append(f"{tag} x_V={vr.x_V} vs {x_V}")
    return not bad, f"{10 - len(bad)}/10 printed rationals reproduced; mismatches {bad}"


def _small_networks():
    for l in range(1, 21):
        for w in range(1, 21 // l + 1):
            if l * w <= 20:
                yield make_hammock(l, w)
                yield make_pos(l, w)
    rng = np.random.default_rng(7)
    for _ in range(100):
        l = int(rng.integers(1, 11))
        w = int(rng.integers(1, 20 // l + 1))
        yield from_matrix(l, w, rng.integers(0, 2, (l - 1) * (w - 1)).tolist())


def criterion_7():
    t0 = time.perf_counter()
    one = PowerPolynomial((1,))
    failures = []
    for net in _small_networks():
        N = brute_force_coefficients(net)
        Nd = brute_force_coefficients(dual(net))
        rel, rel_d = to_power_basis(NFormPolynomial(N.N)), to_power_basis(NFormPolynomial(Nd.N))
        if not (rel + compose_one_minus(rel_d) - one).is_zero():
            failures.append(("dual_polynomial", net))
        if any(not derivative_identity(rel, rel_d, k).is_zero() for k in (1, 2, 3)):
            failures.append(("derivatives", net))
        if log_concavity_failures(N) or log_concavity_failures(Nd):
            failures.append(("log_concavity", net))
        if net.l >= 2 and net.w >= 2 and net.n - net.w > net.l:
            for variant in ("lminus1", "l"):
                pair = approximate_pair(net.l, net.w, default_inputs(net.l, net.w, N, Nd, variant))
                ap, ap_d = (to_power_basis(p) for p in approx_polynomials(pair))
                if not (ap + compose_one_minus(ap_d) - one).is_zero():
                    failures.append(("approx_dual_polynomial", net))
                if any(not derivative_identity(ap, ap_d, k).is_zero() for k in (1, 2, 3)):
                    failures.append(("approx_derivatives", net))
    rng = np.random.default_rng(2024)
    for _ in range(200):
        l = int(rng.integers(1, 9))
        w = int(rng.integers(1, 16 // l + 1))
        net = from_matrix(l, w, rng.integers(0, 2, (l - 1) * (w - 1)).tolist())
        N = brute_force_coefficients(net)
        if any(not coefficient_bounds(l, w, k)[0] <= N[k] <= coefficient_bounds(l, w, k)[1] for k in range(net.n + 1)):
            failures.append(("sandwich", net))
        if log_concavity_failures(N):
            failures.append(("log_concavity", net))
    for l in range(1, 21):
        for w in range(1, 20 // l + 1):
            if pos_coefficients(l, w) != brute_force_coefficients(make_pos(l, w)):
                failures.append(("pos_closed_form", (l, w)))
    elapsed = time.perf_counter() - t0
    ok = not failures and elapsed < 300
    return ok, f"identity suite: {len(failures)} failures ({elapsed:.1f}s < 300s) {failures[:3]}"


def criterion_8():
    per_n = {}
    for side in (4, 8, 16, 32):
        counter = OpCounter()
        approximate_pair(side, side, inputs_from_first_coefficients(side, side, 1, 1), counter)
        per_n[side * side] = counter.count / (side * side)
    ratio = max(per_n.values()) / min(per_n.values())
    return ratio <= 2, f"operations per coefficient {dict((k, round(v, 2)) for k, v in per_n.items())}, spread {ratio:.2f} <= 2"


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("number", range(1, 9))
def test_criterion(number, capsys):
    passed, detail = CRITERIA[number - 1]()
    with capsys.disabled():
        print("\n" + _line(number, passed, detail))
    assert passed, detail


if __name__ == "__main__":
    results = []
    for i, fn in enumerate(CRITERIA, 1):
        passed, detail = fn()
        results.append(passed)
        print(_line(i, passed, detail), flush=True)
    sys.exit(0 if all(results) else 1)
