"""Exact reliability of a 3-by-5 hammock and its dual.

Every one of the 2**15 device states is enumerated; the two coefficient
vectors then satisfy N_k + N^perp_{n-k} = C(n, k) term by term.
"""

from fractions import Fraction
from math import comb

from mmnrel import brute_force_coefficients, dual, make_hammock, to_power_basis
from mmnrel.network import format_network
from mmnrel.polyalg import NFormPolynomial

net = make_hammock(3, 5)
print("matchstick matrix of H(3,5):")
print(format_network(net))

N = brute_force_coefficients(net)
Nd = brute_force_coefficients(dual(net))
print("N_k      ", N.N)
print("N^perp_k ", Nd.N)
print("complementary:", all(N[k] + Nd[15 - k] == comb(15, k) for k in range(16)))

rel = to_power_basis(NFormPolynomial(N.N))
for p in (Fraction(1, 4), Fraction(1, 2), Fraction(3, 4)):
    print(f"Rel(G; {p}) = {rel(p)} ~ {float(rel(p)):.6f}")
