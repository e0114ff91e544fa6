"""q-expansions: SZ multiple q-zeta values, brackets, and depth-one Eisenstein series.

Run: python3 demos/03_q_series.py
"""
from fractions import Fraction

from gfmzv import qseries as qs
from gfmzv.hopf import Rule, quasi_shuffle

N = 12
print("zeta_q(1)   =", qs.qzeta_sz((1,), N))
print("zeta_q(2)   =", qs.qzeta_sz((2,), N))
print("zeta_q(1,0) =", qs.qzeta_sz((1, 0), N), "(tau-partner of zeta_q(2))")

# product of two values against the SZ quasi-shuffle expansion
lhs = qs.qzeta_sz((2,), 30) * qs.qzeta_sz((1,), 30)
rhs = qs.QSeries.zero(30)
for w, c in quasi_shuffle((2,), (1,), Rule.SZ).items():
    rhs = rhs + qs.qzeta_sz(w, 30).scale(c)
print("\nzeta_q(2) zeta_q(1) == sum over (2) * (1):", lhs == rhs)

print("\ng(2) =", qs.bracket_g((2,), N))
print("G(2|0) =", qs.bi_eisenstein_depth1(2, 0, N))
print("G(4|0) =", qs.bi_eisenstein_depth1(4, 0, 6))
for k, m in [(3, 1), (4, 2), (5, 1)]:
    print(f"G({k}|{m}) from q d/dq of G({k - m}|0):", qs.eisenstein_derivative_check(k, m, 40))

# G2, G4, G6 and products: a finite-order rank is only an upper-bound witness
N = 40
G2, G4, G6 = (qs.bi_eisenstein_depth1(k, 0, N) for k in (2, 4, 6))
weight8 = [G2 * G2 * G2 * G2, G2 * G2 * G4, G4 * G4, G2 * G6, qs.bi_eisenstein_depth1(8, 0, N)]
print("\nrank of weight 8 products with G8 at q^40:", qs.span_dimension(weight8))
print("B_2, B_4, B_6 =", ", ".join(str(qs.bernoulli(k)) for k in (2, 4, 6)))
print("beta(2) == -1/24:", qs.beta(2) == Fraction(-1, 24))
