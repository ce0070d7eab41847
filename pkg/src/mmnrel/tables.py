"""Regenerate the reference tables from first principles.

Every number here is recomputed: coefficient vectors by exhaustive
enumeration, E values and vertices from exact rational formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .approx import approximate_pair, default_inputs, step2_closed_form
from .exact import DEFAULT_CAP, binomial_row, brute_force_coefficients
from .network import dual, make_hammock
from .shape import argmax_intervals, compute_E, vertex_analysis

__all__ = [
    "MaxRow",
    "ETableRow",
    "NegativeExample",
    "hammock_variants",
    "max_coefficient_table",
    "e_table",
    "e_table_cases",
    "negative_examples",
    "approximation_table",
    "marked_row",
]


@dataclass(frozen=True)
class MaxRow:
    w: int
    l: int
    variant: str
    max_N: int
    argmax: int
    I1: tuple[Fraction, Fraction]
    I2: tuple[Fraction, Fraction]
    in_I1: bool
    in_I2: bool


def hammock_variants(l: int, w: int) -> tuple[str, ...]:
    return ("H", "Hplus") if l % 2 == 0 and w % 2 == 0 else ("H",)


def max_coefficient_table(sizes=range(2, 6), cap: int = DEFAULT_CAP, workers: int = 1) -> list[MaxRow]:
    """Largest coefficient and its index for every small hammock, grouped by w."""
    rows = []
    for w in sizes:
        for l in sizes:
            for variant in hammock_variants(l, w):
                N = brute_force_coefficients(make_hammock(l, w, variant), cap=cap, workers=workers)
                am = argmax_intervals(N, l, w)
                rows.append(MaxRow(w, l, variant, max(N.N), am.argmax, am.I1, am.I2, am.in_I1, am.in_I2))
    return rows


@dataclass(frozen=True)
class ETableRow:
    s: int
    N_s: int
    E: Fraction
    above_binomial: bool


# (l, w): the s values broken out individually; the rest are summarised.
e_table_cases = {(4, 5): (5, 6, 7, 15, 16), (5, 4): (5, 6, 7, 16, 17), (5, 5): (6, 7, 8, 20, 21)}


def e_table(l: int, w: int, N=None, cap: int = DEFAULT_CAP, workers: int = 1) -> list[ETableRow]:
    """E(l, w; s) for every admissible s on the hammock H(l, w)."""
    n = l * w
    if N is None:
        N = brute_force_coefficients(make_hammock(l, w), cap=cap, workers=workers)
    threshold = binomial_row(n)[w - 1]
    rows = []
    for s in range(l, n - w + 2):
        N_s = threshold if s == n - w + 1 else N[s]
        rows.append(ETableRow(s, N_s, compute_E(l, w, s, N_s), N_s > threshold))
    return rows


@dataclass(frozen=True)
class NegativeExample:
    l: int
    w: int
    role: str
    s: int
    N_s: int
    A: Fraction
    x_V: Fraction | None
    sign_ok: bool | None
    lower_holds: bool | None
    upper_I1_holds: bool | None


def negative_examples() -> list[NegativeExample]:
    """Parabolas built from N_s below C(n, w-1) on H(3,3) and H(4,4) with its dual."""
    cases = [(make_hammock(3, 3), "primary", 3), (make_hammock(4, 4), "primary", 4),
             (make_hammock(4, 4), "primary", 5)]
    cases += [(dual(make_hammock(4, 4)), "dual", s) for s in (4, 5)]
    out = []
    for net, role, s in cases:
        N = brute_force_coefficients(net)
        piece = step2_closed_form(net.l, net.w, s, N[s])
        vr = vertex_analysis(net.l, net.w, s, N[s], piece)
        out.append(NegativeExample(net.l, net.w, role, s, N[s], vr.A, vr.x_V,
                                   vr.sign_ok, vr.lower_holds, vr.upper_I1_holds))
    return out


def marked_row(values, l: int, w: int, variant: str | None) -> list[str]:
    """Floored entries, ``*`` on cells known exactly or used as input.

    ``variant=None`` marks the exact row with the inputs of both variants.
    """
    n = l * w
    inputs = {l, n - w} if variant in (None, "l") else set()
    cells = []
    for k, v in enumerate(values):
        known = k <= l - 1 or k >= n - w + 1 or k in inputs
        cells.append(f"{int(v // 1)}{'*' if known else ''}")
    return cells


def approximation_table(l: int = 3, w: int = 5, cap: int = DEFAULT_CAP, workers: int = 1) -> dict:
    """Exact and approximated rows for a hammock and its dual, both variants."""
    net = make_hammock(l, w)
    N = brute_force_coefficients(net, cap=cap, workers=workers)
    Nd = brute_force_coefficients(dual(net), cap=cap, workers=workers)
    table = {"primary": [("exact", marked_row(N.N, l, w, None))],
             "dual": [("exact", marked_row(Nd.N, w, l, None))]}
    for variant in ("lminus1", "l"):
        primary, dual_res = approximate_pair(l, w, default_inputs(l, w, N, Nd, variant))
        table["primary"].append((variant, marked_row(primary.N_tilde, l, w, variant)))
        table["dual"].append((variant, marked_row(dual_res.N_tilde, w, l, variant)))
    return table
