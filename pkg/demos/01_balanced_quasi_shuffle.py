"""Walk through the balanced quasi-shuffle algebra on the letters b0, b1, b2, ...

Run: python3 demos/01_balanced_quasi_shuffle.py
"""
from gfmzv import gf, hopf, maps
from gfmzv.hopf import Rule
from gfmzv.regularization import reg_balanced, reg_T_inverse
from gfmzv.words import B, enumerate_words, format_poly, format_word, parse_poly

# b0 never merges, so b1 * b1 picks up b2 but b0 * b0 does not
for u, v in [((1,), (1,)), ((0,), (0,)), ((1,), (0, 1))]:
    print(f"{format_word(u)} * {format_word(v)} =", format_poly(hopf.quasi_shuffle(u, v, Rule.BALANCED)))

print("\nweights 0..8 have", [len(enumerate_words(B, n)) for n in range(9)], "words")

# the dual coproduct splits b3 along the merges b1+b2, b2+b1
print("coproduct(b3):", hopf.delta_dual((3,), Rule.BALANCED))
print("S(b3):", format_poly(hopf.antipode_b((3,))))

# tau reverses the (k, m) blocks of b_k b0^m and swaps their roles
w = (2, 0, 3)
print("\ntau(b2.b0.b3) =", format_word(maps.tau_word(w)), " involution:", maps.tau_word(maps.tau_word(w)) == w)

# words starting with b0 are pushed into polynomials in T, then T is set to 0
print("b0.b1 ->", reg_T_inverse(parse_poly("b0.b1")), "-> reg:", format_poly(reg_balanced(parse_poly("b0.b1"))))

print("\ngraded dimensions of the quotient, weights 0..7:")
print([gf.gf_dim(w) for w in range(8)])

b1, b2 = gf.GfElement.f((1,)), gf.GfElement.f((2,))
print("f(b1) f(b2) = f(" + format_poly((b1 * b2).rep) + ")")
print("  equals f(b1.b2) + 2 f(b2.b1) + f(b2.b0):", gf.gf_equal((b1 * b2).rep, parse_poly("b1.b2 + 2*b2.b1 + b2.b0")))
