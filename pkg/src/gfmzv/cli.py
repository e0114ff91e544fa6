"""Command-line front end: ``gfmzv <subcommand> ...`` (or ``python -m gfmzv``).

Exit codes: 0 success, 1 failed verification, 2 usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import acceptance, gf, hopf, maps, qseries, regularization, schemes, zf
from .hopf import Rule
from .jsonio import rat, to_json
from .words import B, X, Y, Alphabet, Poly, Series, exp_conc, format_poly, format_word, join_terms, parse_poly, parse_word


class UsageError(Exception):
    pass


def _word(text: str, alphabet: Alphabet | None = None):
    try:
        return parse_word(text, alphabet)
    except ValueError as e:
        raise UsageError(f"bad word {text!r}: {e}") from None


def _poly(text: str, alphabet: Alphabet | None = None) -> Poly:
    try:
        return parse_poly(text, alphabet)
    except (ValueError, ZeroDivisionError) as e:
        raise UsageError(f"bad polynomial {text!r}: {e}") from None


def _ints(text: str) -> list:
    out = []
    for tok in text.replace(" ", ",").split(","):
        if not tok:
            continue
        try:
            out.append(int(tok))
        except ValueError:
            raise UsageError(f"bad index {tok!r} in {text!r}") from None
    return out


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad rational {text!r}") from None


class Out:
    def __init__(self, fmt: str, stream):
        self.fmt, self.stream = fmt, stream

    def emit(self, text: str, data):
        if self.fmt == "json":
            print(json.dumps(data, ensure_ascii=False, indent=None), file=self.stream)
        else:
            print(text, file=self.stream)


# --------------------------------------------------------------- commands

def cmd_product(a, out):
    al, u = _word(a.u)
    _, v = _word(a.v, al)
    rule = hopf.rule_for(al, a.rule)
    p = hopf.quasi_shuffle(u, v, rule)
    out.emit(format_poly(p), to_json(p))


def cmd_coproduct(a, out):
    al, w = _word(a.w)
    rule = hopf.rule_for(al, a.rule)
    t = hopf.delta_dual(w, rule)
    items = sorted(t.terms.items(), key=lambda kv: (len(kv[0][0]), kv[0]))
    text = " + ".join(
        (f"{c}*" if c != 1 else "") + f"{format_word(u, al)} (x) {format_word(v, al)}" for (u, v), c in items
    )
    out.emit(text, {"type": "tensor", "alphabet": al.value,
                    "terms": [[format_word(u, al), format_word(v, al), rat(c)] for (u, v), c in items]})


def cmd_antipode(a, out):
    al, w = _word(a.w)
    if al is not B:
        raise UsageError("antipode acts on B-words")
    p = hopf.antipode_b(w)
    out.emit(format_poly(p), to_json(p))


def cmd_tau(a, out):
    al, w = _word(a.w)
    if al is not B:
        raise UsageError("tau acts on B-words")
    try:
        t = maps.tau_word(w)
    except ValueError as e:
        raise UsageError(str(e)) from None
    out.emit(format_word(t, B), to_json(t, B))


def cmd_reg(a, out):
    p = _poly(a.p)
    if p.alphabet is X:
        r = regularization.reg_shuffle(p)
    elif p.alphabet is Y:
        r = regularization.reg_stuffle(p)
    elif a.with_T:
        r = regularization.reg_T_inverse(p)
        terms = sorted(r.terms.items())
        text = repr(r)
        out.emit(text, {"type": "poly_T", "terms": [[format_word(w, B), n, rat(c)] for (w, n), c in terms]})
        return
    else:
        r = regularization.reg_balanced(p)
    out.emit(format_poly(r), to_json(r))


def cmd_gf_reduce(a, out):
    p = _poly(a.p, B)
    r = gf.gf_reduce_poly(p)
    out.emit(format_poly(r), to_json(r))


def cmd_gf_dim(a, out):
    ws = range(a.weight + 1) if a.table else [a.weight]
    dims = {w: gf.gf_dim(w) for w in ws}
    out.emit("\n".join(f"gf_dim({w}) = {d}" for w, d in dims.items()), {"type": "dims", "dims": dims})


def cmd_rel_space(a, out):
    if a.kind == "gf":
        space = gf.rel_tau0(a.weight, a.method)
        fmt = lambda k: format_word(k, B)
    else:
        space = zf.rel_eds(a.weight)
        fmt = zf.format_zf_word
    rows = space.basis()
    lines = [f"dim {space.dim} of ambient {len(space.ambient)}"]
    for r in rows:
        lines.append("  " + join_terms((c, fmt(k)) for k, c in r.items()))
    out.emit("\n".join(lines), {"type": "relation_space", "kind": a.kind, "weight": a.weight, "dim": space.dim,
                                "ambient": len(space.ambient),
                                "rows": [[[fmt(k), rat(c)] for k, c in r.items()] for r in rows]})


def _zf_of(text: str):
    p = _poly(text)
    if p.alphabet is X:
        return zf.zeta_sh_f(p)
    if p.alphabet is Y:
        return zf.zeta_st_f(p)
    raise UsageError("formal zeta values take X-words (shuffle) or Y-words (stuffle)")


def cmd_zf_reduce(a, out):
    z = zf.zf_reduce(_zf_of(a.p))
    out.emit(zf.format_zf(z), to_json(z))


def cmd_zf_equal(a, out):
    za, zb = _zf_of(a.a), _zf_of(a.b)
    try:
        eq = zf.zf_equal(za, zb, a.weight)
    except ValueError as e:
        raise UsageError(str(e)) from None
    out.emit("true" if eq else "false", {"type": "bool", "value": eq})


def cmd_project_p(a, out):
    p = _poly(a.w, B)
    try:
        z = schemes.p_project(p, a.weight)
    except ValueError as e:
        raise UsageError(str(e)) from None
    if a.reduce:
        z = zf.zf_reduce(z)
    out.emit(zf.format_zf(z), to_json(z))


def _series_x(text: str, W: int) -> Series:
    if text == "zeta":
        return schemes.phi_zeta(W)
    if text == "one":
        return Series.one(X, W)
    return Series.from_poly(_poly(text, X), W)


def _series_b(text: str, W: int) -> Series:
    if text == "theta-zeta":
        return schemes.theta_embed(schemes.phi_zeta(W))
    if text == "one":
        return Series.one(B, W)
    if text.startswith("exp:"):
        return exp_conc(_poly(text[4:], B), W)
    return Series.from_poly(_poly(text, B), W)


def cmd_check_dm(a, out):
    lam = None if a.lam is None else _rational(a.lam)
    rep = schemes.check_dm(_series_x(a.series, a.weight), lam)
    out.emit(str(rep), rep.to_dict())
    return 0 if rep.passed else 1


def cmd_check_bm(a, out):
    lmn = None if a.lmn is None else [_rational(t) for t in a.lmn.split(",")]
    if lmn is not None and len(lmn) != 3:
        raise UsageError("--lmn takes three rationals a,b,c")
    rep = schemes.check_bm(_series_b(a.series, a.weight), lmn)
    out.emit(str(rep), rep.to_dict())
    return 0 if rep.passed else 1


def _series_text(s: Series) -> str:
    parts = []
    for w, c in s.sorted_items():
        cs = zf.format_zf(c) if isinstance(c, zf.ZfElement) else str(c)
        parts.append(f"({cs}) {format_word(w, s.alphabet)}")
    return "\n".join(parts) + f"\n+ O(weight > {s.bound})"


def cmd_theta(a, out):
    s = schemes.theta_embed(_series_x(a.series, a.weight))
    out.emit(_series_text(s), to_json(s))


def cmd_ihara(a, out):
    G = Series.from_poly(_poly(a.g, X), a.weight)
    H = Series.from_poly(_poly(a.h, X), a.weight)
    try:
        r = schemes.ihara_mul(G, H)
    except ValueError as e:
        raise UsageError(str(e)) from None
    out.emit(format_poly(r), to_json(r))


def _basis_out(out, basis, label):
    lines = [f"{label}: dimension {len(basis)}"] + ["  " + format_poly(p) for p in basis]
    out.emit("\n".join(lines), {"type": "basis", "dim": len(basis), "basis": [to_json(p) for p in basis]})


def cmd_lin_dm0(a, out):
    _basis_out(out, schemes.linearized_dm0(a.weight), f"dm0 weight {a.weight}")


def cmd_lin_bm0(a, out):
    _basis_out(out, schemes.linearized_bm0(a.weight), f"bm0 weight {a.weight}")


def _qseries_of(kind: str, args: list, N: int) -> qseries.QSeries:
    try:
        if kind == "sz":
            return qseries.qzeta_sz(_ints(args[0]) if args else [], N)
        if kind == "g":
            return qseries.bracket_g(_ints(args[0]), N)
        if kind == "partition":
            exps = []
            for tok in (args[0].split(",") if args and args[0] else []):
                m, _, l = tok.partition(":")
                exps.append((int(m), int(l)))
            return qseries.gen_partition(exps, N)
        if kind == "eisenstein":
            k, m = _ints(",".join(args))
            return qseries.bi_eisenstein_depth1(k, m, N)
    except (IndexError, ValueError) as e:
        raise UsageError(f"bad arguments for {kind}: {e}") from None
    raise UsageError(f"unknown q-series kind {kind!r} (sz, g, partition, eisenstein)")


def cmd_qseries(a, out):
    s = _qseries_of(a.kind, a.args, a.order)
    out.emit(repr(s), to_json(s))


def cmd_qcheck(a, out):
    N, args = a.order, a.args
    try:
        if a.kind == "tau":
            ok = qseries.sz_tau_invariance_check(_ints(args[0]), _ints(args[1]), N)
        elif a.kind == "binomial":
            ok = qseries.sz_binomial_identity_check(_ints(args[0]), _ints(args[1]), N)
        elif a.kind == "stuffle":
            ok = qseries.sz_stuffle_check(_ints(args[0]), _ints(args[1]), N)
        elif a.kind == "derivative":
            ok = qseries.eisenstein_derivative_check(_ints(args[0])[0], _ints(args[1])[0], N)
        else:
            raise UsageError(f"unknown check {a.kind!r} (tau, binomial, stuffle, derivative)")
    except (IndexError, ValueError) as e:
        raise UsageError(f"bad arguments for {a.kind}: {e}") from None
    out.emit("true" if ok else "false", {"type": "bool", "value": ok})
    return 0 if ok else 1


def cmd_span_dim(a, out):
    series = []
    for item in a.series:
        kind, _, rest = item.partition(":")
        if kind == "one":
            series.append(qseries.QSeries.one(a.order))
        else:
            series.append(_qseries_of(kind, [rest] if rest else [], a.order))
    d = qseries.span_dimension(series, a.order)
    out.emit(str(d), {"type": "int", "value": d})


def cmd_verify(a, out):
    names = list(acceptance.SUITES) if a.all or not a.suite else [a.suite]
    if a.suite and a.suite not in acceptance.SUITES:
        raise UsageError(f"unknown suite {a.suite!r}; choose from {', '.join(acceptance.SUITES)}")
    results = [acceptance.run_suite(n) for n in names]
    lines = []
    for r in results:
        lines.append(f"[{'PASS' if r.passed else 'FAIL'}] {r.criterion}. {r.name} ({r.seconds:.2f}s)")
        lines.extend("    " + l for l in r.lines())
    ok = all(r.passed for r in results)
    if len(results) > 1:
        lines.append(f"{sum(r.passed for r in results)}/{len(results)} suites passed")
    out.emit("\n".join(lines), {"type": "verify", "passed": ok, "suites": [r.to_dict() for r in results]})
    return 0 if ok else 1


# ----------------------------------------------------------------- parser

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json"], default="text")
    common.add_argument("--weight", type=int, default=6, help="weight bound (default 6)")
    common.add_argument("--order", type=int, default=50, help="q-expansion order (default 50)")
    common.add_argument("--rule", choices=[r.value for r in Rule])

    p = _Parser(prog="gfmzv", description="Formal multiple zeta values, the balanced quasi-shuffle algebra and q-analogs.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, fn, help_, *args):
        sp = sub.add_parser(name, parents=[common], help=help_)
        for arg in args:
            if isinstance(arg, tuple):
                sp.add_argument(*arg[0], **arg[1])
            else:
                sp.add_argument(arg)
        sp.set_defaults(func=fn)
        return sp

    add("product", cmd_product, "quasi-shuffle product of two words", "u", "v")
    add("coproduct", cmd_coproduct, "dual coproduct of a word", "w")
    add("antipode", cmd_antipode, "antipode of a B-word", "w")
    add("tau", cmd_tau, "the involution tau on a B^0-word", "w")
    add("reg", cmd_reg, "regularization (shuffle on X, stuffle on Y, balanced on B)", "p",
        (["--with-T"], {"action": "store_true", "help": "on B: show the full expansion in T"}))
    add("gf-reduce", cmd_gf_reduce, "normal form in G^f", "p")
    add("gf-dim", cmd_gf_dim, "graded dimension of G^f", (["--table"], {"action": "store_true"}))
    add("rel-space", cmd_rel_space, "row-reduced relation space",
        (["--kind"], {"choices": ["gf", "eds"], "default": "gf"}),
        (["--method"], {"choices": ["split", "direct"], "default": "split"}))
    add("zf-reduce", cmd_zf_reduce, "normal form of a formal zeta value (X: shuffle, Y: stuffle)", "p")
    add("zf-equal", cmd_zf_equal, "equality modulo double shuffle relations", "a", "b")
    add("project-p", cmd_project_p, "the projection p: G^f -> Z^f", "w",
        (["--reduce"], {"action": "store_true"}))
    add("check-dm", cmd_check_dm, "DM membership (series: zeta | one | polynomial over X)",
        (["--series"], {"default": "zeta"}), (["--lambda"], {"dest": "lam"}))
    add("check-bm", cmd_check_bm, "BM membership (series: theta-zeta | one | exp:POLY | polynomial over B)",
        (["--series"], {"default": "theta-zeta"}), (["--lmn"], {}))
    add("theta", cmd_theta, "the embedding theta (series: zeta | one | polynomial over X)",
        (["--series"], {"default": "zeta"}))
    add("ihara", cmd_ihara, "Ihara product of two series over X", "g", "h")
    add("lin-dm0", cmd_lin_dm0, "basis of the linearized dm_0 in one weight")
    add("lin-bm0", cmd_lin_bm0, "basis of the linearized bm_0 in one weight")
    add("qseries", cmd_qseries, "q-expansion: sz 2,1,0 | g 2,1 | partition 1:0,0:1 | eisenstein k m",
        "kind", (["args"], {"nargs": "*"}))
    add("qcheck", cmd_qcheck, "numeric identity: tau K M | binomial K M | stuffle S1 S2 | derivative k m",
        "kind", (["args"], {"nargs": "*"}))
    add("span-dim", cmd_span_dim, "rank of q-series, e.g. one sz:1 sz:1,0 g:2 eisenstein:2,0",
        (["series"], {"nargs": "*"}))
    add("verify", cmd_verify, "run acceptance suites",
        (["--suite"], {"choices": None}), (["--all"], {"action": "store_true"}))
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("missing subcommand")
        if args.weight < 0 or args.order < 0:
            raise UsageError("--weight and --order must be non-negative")
        code = args.func(args, Out(args.format, stdout))
        return 0 if code is None else code
    except UsageError as e:
        print(f"gfmzv: error: {e}", file=stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
