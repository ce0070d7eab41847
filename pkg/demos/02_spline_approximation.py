"""Approximating the same pair from a handful of coefficients.

Only N_{n-w}, N^perp_{n-l} (and, for the second variant, N_l and N^perp_w)
are handed to the algorithm.  The rest is filled in by two parabolas whose
complementarity defect is split evenly between the networks.
"""

from mmnrel import (
    approximate_pair,
    brute_force_coefficients,
    chebyshev_error,
    default_inputs,
    dual,
    error_bound,
    make_hammock,
)

l, w = 3, 5
net = make_hammock(l, w)
N = brute_force_coefficients(net)
Nd = brute_force_coefficients(dual(net))
print("exact     ", list(N.N))

for variant in ("lminus1", "l"):
    primary, partner = approximate_pair(l, w, default_inputs(l, w, N, Nd, variant))
    err = chebyshev_error(N.N, primary.N_tilde)
    bound = error_bound(l, w, N.N, Nd.N, primary.piece, partner.piece, measured=err)
    print(f"{variant:<10}", primary.floored())
    print(f"{'':<10} parabola A={primary.piece.A}, vertex at {float(primary.piece.vertex):.3f}")
    print(f"{'':<10} max |Rel - ApRel| = {err:.4f}, a-priori bound {float(bound.bound):.4f}")
