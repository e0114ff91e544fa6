"""Acceptance suites: one function per criterion, each returning labelled checks.

Shared by ``gfmzv verify`` and ``tests/test_acceptance.py``.  All weight
bounds, truncation orders and seeds are fixed here.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction

from . import gf, hopf, maps, qseries, regularization, schemes, zf
from .hopf import Rule
from .words import B, X, Poly, Series, enumerate_words, parse_poly, words_up_to


@dataclass
class SuiteResult:
    name: str
    criterion: int
    checks: list = field(default_factory=list)  # (label, passed)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return bool(self.checks) and all(ok for _, ok in self.checks)

    def lines(self) -> list:
        return [f"{label} = {'true' if ok else 'false'}" for label, ok in self.checks]

    def to_dict(self) -> dict:
        return {
            "type": "suite",
            "name": self.name,
            "criterion": self.criterion,
            "passed": self.passed,
            "seconds": round(self.seconds, 3),
            "checks": [{"label": l, "passed": ok} for l, ok in self.checks],
        }


def _product():
    yield "b1 *_b b1 == 2*b1.b1 + b2", hopf.qsh_poly(Poly.word(B, (1,)), Poly.word(B, (1,))) == parse_poly("2*b1.b1 + b2")


def _duality():
    for rule in (Rule.BALANCED, Rule.STUFFLE, Rule.SHUFFLE):
        yield f"(Delta(w) | u (x) v) == (w | u * v), {rule.value}, weight <= 6", hopf.pairing_dual_check(6, rule)


def _hopf():
    words = words_up_to(B, 6)
    yield "coassociativity of Delta_b, weight <= 6", all(not hopf.coassociativity_defect(w, Rule.BALANCED) for w in words)
    yield "conc(S (x) id)Delta_b = unit counit, weight <= 6", all(not hopf.antipode_defect(w) for w in words)
    yield "closed-form S(b_a) == recursive S(b_a), a <= 6", all(
        hopf.antipode_b((a,)) == hopf.antipode_recursive((a,), Rule.BALANCED) for a in range(7)
    )


def _tau_theta():
    bad = 0
    for n in range(9):
        for w in enumerate_words(X, n):
            p = Poly.word(X, w)
            if maps.tau(maps.pi0(maps.theta_X_anti(p))) != maps.theta_Y(maps.piY(p)):
                bad += 1
    yield f"tau Pi_0 theta_X^anti == theta_Y Pi_Y on X-words of length <= 8 (mismatches: {bad})", bad == 0


def _regularization():
    words = words_up_to(B, 5)
    yield "reg_T(reg_T^{-1}(w)) == w, weight <= 5", all(
        regularization.reg_T_forward(regularization.reg_T_inverse(Poly.word(B, w))) == Poly.word(B, w) for w in words
    )
    pairs = [(u, n) for u in words if not u or u[0] != 0 for n in range(6) if sum(u) + sum(1 for a in u if a == 0) + n <= 5]
    yield "reg_T^{-1}(reg_T(u T^n)) == u T^n, weight <= 5", all(
        regularization.reg_T_inverse(regularization.reg_T_forward(regularization.PolyWithT({(u, n): 1})))
        == regularization.PolyWithT({(u, n): 1})
        for u, n in pairs
    )
    ok = True
    for u, v in hopf._pairs_by_weight(B, 5, ordered=False):
        lhs = regularization.reg_balanced(hopf.quasi_shuffle(u, v, Rule.BALANCED))
        rhs = hopf.qsh_poly(regularization.reg_balanced(Poly.word(B, u)), regularization.reg_balanced(Poly.word(B, v)))
        ok = ok and lhs == rhs
    yield "reg_balanced(u *_b v) == reg_balanced(u) *_b reg_balanced(v), weight <= 5", ok
    yield "reg_balanced(b0) == 0", regularization.reg_balanced(Poly.word(B, (0,))) == 0
    yield "reg_balanced(b0.b1) == -b1.b0", regularization.reg_balanced(Poly.word(B, (0, 1))) == parse_poly("-1*b1.b0")


def _gf_quotient():
    for w in range(8):
        yield f"rel_tau0({w}): direct == split", gf.rel_tau0(w, "direct") == gf.rel_tau0(w, "split")
    for w, expected in ((1, 1), (2, 2)):
        brute = len(enumerate_words(B, w)) - gf.rel_tau0(w, "direct").dim
        yield f"gf_dim({w}) == {expected} == brute force ({brute})", gf.gf_dim(w) == expected == brute


def _euler():
    z = zf.zeta_f
    yield "zf_equal(ζ^f(3), ζ^f(2,1))", zf.zf_equal(z(3), z(2, 1), 3)
    yield "ζ^f(4) ≡ 2/5 ζ^f(2)^2", zf.zf_equal(z(4), (z(2) ** 2).scale(Fraction(2, 5)), 4)
    yield "ζ^f(6) ≡ 8/35 ζ^f(2)^3", zf.zf_equal(z(6), (z(2) ** 3).scale(Fraction(8, 35)), 6)


def _double_shuffle():
    for k1 in (2, 3, 4):
        for k2 in (2, 3, 4):
            st, sh = zf.depth2_double_shuffle(k1, k2)
            yield f"ζ^f({k1})ζ^f({k2}): stuffle ≡ shuffle", zf.zf_equal(st, sh)


def _projection():
    ok = True
    for w in range(7):
        for row in gf.rel_tau0(w).basis():
            ok = ok and zf.zf_is_zero(schemes.p_project(Poly(B, row)))
    yield "p vanishes on rel_tau0(w), w <= 6", ok
    ok = True
    for u, v in hopf._pairs_by_weight(B, 5, ordered=False):
        lhs = schemes.p_project(hopf.quasi_shuffle(u, v, Rule.BALANCED))
        ok = ok and zf.zf_equal(lhs, schemes.p_project(u) * schemes.p_project(v))
    yield "p(u *_b v) ≡ p(u) p(v), weight sum <= 5", ok
    yield "p(b2.b3) == ζ^f(2,3)", schemes.p_project((2, 3)) == zf.zeta_f(2, 3)


def _theta_embedding():
    phi = schemes.phi_zeta(5)
    yield "check_dm(phi^f), weight <= 5", schemes.check_dm(phi).passed
    Phi = schemes.theta_embed(phi)
    yield "check_bm(theta(phi^f)), weight <= 5", schemes.check_bm(Phi).passed
    yield "theta_inverse({b0,b1}-part of theta(phi^f)) == phi^f", schemes.theta_inverse(Phi) == phi
    R = schemes.restrict_b01(Phi)
    yield "{b0,b1}-restriction == phi^f on words starting with x0", all(
        R.coeff(w) == phi.coeff(w) for w in words_up_to(X, 5) if w[:1] == (0,)
    )


def _qnumeric():
    idx = [(1,), (2,), (3,), (1, 0), (2, 1)]
    yield "SZ stuffle products, index pairs from {1, 2, 3, (1,0), (2,1)}, q^50", all(
        qseries.sz_stuffle_check(a, b, 50) for i, a in enumerate(idx) for b in idx[i:]
    )
    yield "SZ tau-invariance, stated cases, q^50", all(
        qseries.sz_tau_invariance_check(k, m, 50) for k, m in (((2,), (0,)), ((1,), (1,)), ((2, 1), (1, 0)))
    )
    ws = [w for w in words_up_to(B, 5) if w and w[0] != 0]
    yield "SZ tau-invariance, B^0 words of weight <= 5, q^40", all(
        qseries.qzeta_sz(w, 40) == qseries.qzeta_sz(maps.tau_word(w), 40) for w in ws
    )
    yield "binomial partition identity vs brute-force partitions, q^30", all(
        qseries.sz_binomial_identity_check(k, m, 30)
        for k, m in (((1,), (0,)), ((2,), (1,)), ((1, 1), (0, 0)), ((2, 1), (1, 0)), ((1, 2), (0, 1)))
    )


def _eisenstein():
    g = qseries.bi_eisenstein_depth1(2, 0, 40)
    yield "G(2|0) constant term == -1/24", g[0] == Fraction(-1, 24) == -qseries.bernoulli(2) / 4
    yield "G(2|0) tail == sum sigma_1(n) q^n, q^40", all(g[n] == qseries.divisor_sigma(1, n) for n in range(1, 41))
    for k, m in ((3, 1), (4, 2), (5, 1)):
        yield f"G({k}|{m}) == derivative relation (reading G(k-m)), q^40", qseries.eisenstein_derivative_check(k, m, 40)


def _freeness():
    ranks = gf.freeness_ranks(8)
    yield "f(b2)^a f(b4)^b f(b6)^c independent in G^f, weight <= 8 " + str(
        {w: r for w, (n, r) in ranks.items()}
    ), all(n == r for n, r in ranks.values())


def _ihara():
    rng = random.Random(20240607)
    W = 4
    one = Series.one(X, W)
    ok_unit = ok_assoc = True
    for _ in range(5):
        a, b, c = (schemes.random_grouplike_x(W, rng) for _ in range(3))
        ok_unit = ok_unit and schemes.ihara_mul(one, a) == a and schemes.ihara_mul(a, one) == a
        ok_assoc = ok_assoc and schemes.ihara_mul(schemes.ihara_mul(a, b), c) == schemes.ihara_mul(a, schemes.ihara_mul(b, c))
    yield "Ihara product unital, random grouplikes, weight 4", ok_unit
    yield "Ihara product associative, random grouplikes, weight 4", ok_assoc


SUITES = {
    "product": (1, _product),
    "duality": (2, _duality),
    "hopf": (3, _hopf),
    "tau-theta": (4, _tau_theta),
    "regularization": (5, _regularization),
    "gf-quotient": (6, _gf_quotient),
    "euler": (7, _euler),
    "double-shuffle": (8, _double_shuffle),
    "projection": (9, _projection),
    "theta-embedding": (10, _theta_embedding),
    "qnumeric": (11, _qnumeric),
    "eisenstein": (12, _eisenstein),
    "freeness": (13, _freeness),
    "ihara": (14, _ihara),
}


def run_suite(name: str) -> SuiteResult:
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    crit, fn = SUITES[name]
    t = time.perf_counter()
    res = SuiteResult(name, crit, [(label, bool(ok)) for label, ok in fn()])
    res.seconds = time.perf_counter() - t
    return res


def run_all() -> list:
    return [run_suite(n) for n in SUITES]
