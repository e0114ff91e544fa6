"""JSON forms of words, polynomials, series, formal zeta elements, q-series
and reports.  Rationals are strings (``"3"``, ``"-1/2"``); every object
carries a ``"type"`` tag so :func:`from_json` can rebuild it.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .qseries import QSeries
from .words import Alphabet, Poly, Series, format_word, parse_word
from .zf import ZfElement, _zf_key, format_zf_word, parse_zf_word


def rat(c) -> str:
    return str(Fraction(c))


def to_json(obj, alphabet: Alphabet | None = None) -> dict:
    if isinstance(obj, tuple):
        if alphabet is None:
            raise ValueError("a bare word needs its alphabet")
        return {"type": "word", "alphabet": alphabet.value, "word": format_word(obj, alphabet)}
    if isinstance(obj, Poly):
        d = {
            "type": "series" if isinstance(obj, Series) else "poly",
            "alphabet": obj.alphabet.value,
            "terms": [[format_word(w, obj.alphabet), _coeff(c)] for w, c in obj.sorted_items()],
        }
        if isinstance(obj, Series):
            d["bound"] = obj.bound
        return d
    if isinstance(obj, ZfElement):
        return {"type": "zf", "terms": [[format_zf_word(v), rat(obj.terms[v])] for v in sorted(obj.terms, key=_zf_key)]}
    if isinstance(obj, QSeries):
        return {"type": "qseries", "order": obj.order, "coefficients": [rat(c) for c in obj.coeffs]}
    if hasattr(obj, "to_dict"):
        d = obj.to_dict()
        d.setdefault("type", "report")
        return d
    raise TypeError(f"no JSON form for {type(obj).__name__}")


def _coeff(c):
    if isinstance(c, ZfElement):
        return to_json(c)
    return rat(c)


def _parse_coeff(c):
    if isinstance(c, dict):
        return from_json(c)
    return Fraction(c)


def from_json(d: dict):
    t = d.get("type")
    if t == "word":
        al = Alphabet(d["alphabet"])
        return parse_word(d["word"], al)[1]
    if t in ("poly", "series"):
        al = Alphabet(d["alphabet"])
        terms = [(parse_word(w, al)[1], _parse_coeff(c)) for w, c in d["terms"]]
        if t == "series":
            return Series(al, terms, d["bound"])
        return Poly(al, terms)
    if t == "zf":
        return ZfElement({parse_zf_word(w): Fraction(c) for w, c in d["terms"]})
    if t == "qseries":
        return QSeries([Fraction(c) for c in d["coefficients"]], d["order"])
    if t in ("report", "suite", "verify"):
        return dict(d)
    raise ValueError(f"unknown JSON object type {t!r}")


def dumps(obj, alphabet: Alphabet | None = None, **kw) -> str:
    return json.dumps(to_json(obj, alphabet), ensure_ascii=False, **kw)


def loads(text: str):
    return from_json(json.loads(text))
