"""Prints derived expected values frozen into the C++ unit tests."""
from oracle import Z, q, q1, q2, render, word
import sympy as sp

P, _ = word([2, 1, 0])
c = sp.cancel(P.subs(Z[1], -Z[0]) / ((1 + q1) * (1 + q2) * (1 + q)))
print("corollary [2,1,0]:", render(c))
num = (Z[0] - q * Z[1]) * (Z[1] - q1 * Z[0]) * (Z[1] - q2 * Z[0])
print("omega num:", render(num))
print("omega num at q=1:", render(num.subs({q1: 1, q2: 1})))
print("g2 expanded:", render((1 - q1) * (1 - q2) * (1 - q) * (Z[0] + Z[1])))
