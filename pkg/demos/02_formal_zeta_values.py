"""Formal multiple zeta values, double shuffle relations, and the projection p.

Run: python3 demos/02_formal_zeta_values.py
"""
from fractions import Fraction

from gfmzv import schemes
from gfmzv.zf import format_zf, rel_eds, zeta_f, zeta_sh_f, zeta_st_f, zf_dim, zf_equal, zf_reduce

z = zeta_f

print("zeta^f(2,3) is the symbol", format_zf(z(2, 3)))
print("shuffle-regularized x1.x0.x1:", format_zf(zeta_sh_f("x1.x0.x1")))
print("stuffle-regularized y1.y1:  ", format_zf(zeta_st_f("y1.y1")))

print("\nzeta(3) == zeta(2,1):", zf_equal(z(3), z(2, 1), 3))
print("zeta(4) == 2/5 zeta(2)^2:", zf_equal(z(4), (z(2) ** 2).scale(Fraction(2, 5)), 4))
print("zeta(6) == 8/35 zeta(2)^3:", zf_equal(z(6), (z(2) ** 3).scale(Fraction(8, 35)), 6))

print("\nweight 5 reductions (ambient basis ordered deepest first):")
for ks in [(4, 1), (3, 2), (2, 3), (2, 2, 1)]:
    print(f"  zeta{ks} ->", format_zf(zf_reduce(z(*ks))))

print("\nrelation space dims:", [rel_eds(w).dim for w in range(9)])
print("quotient dims:      ", [zf_dim(w) for w in range(9)])

# p sends f(w) to a sum over splittings w = uv of shuffle times stuffle values
print("\np(b2.b3) =", format_zf(schemes.p_project((2, 3))))
print("p(b1.b1) =", format_zf(schemes.p_project((1, 1))))
print("p(b1.b0) == p(b2):", zf_equal(schemes.p_project((1, 0)), schemes.p_project((2,))))

phi = schemes.phi_zeta(5)
print("\n" + str(schemes.check_dm(phi)))
Phi = schemes.theta_embed(phi)
print(schemes.check_bm(Phi))
print("theta is invertible on the {b0,b1}-part:", schemes.theta_inverse(Phi) == phi)
