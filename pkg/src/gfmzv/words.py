"""Words over the alphabets X, Y, B and exact noncommutative polynomials.

A word is a plain tuple of letter indices; the alphabet travels with the
polynomial or series that contains it.  ``()`` is the unit word.

    X = {x_0, x_1}        weight = length,      depth = number of x_1
    Y = {y_1, y_2, ...}   weight = sum,         depth = length
    B = {b_0, b_1, ...}   weight = sum + #b_0,  depth = number of nonzero letters
"""
from __future__ import annotations

import enum
import re
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Iterator, Mapping

Word = tuple


class Alphabet(enum.Enum):
    X = "x"
    Y = "y"
    B = "b"

    @property
    def prefix(self) -> str:
        return self.value

    def is_letter(self, i: int) -> bool:
        if self is Alphabet.X:
            return i in (0, 1)
        if self is Alphabet.Y:
            return i >= 1
        return i >= 0

    def letter_weight(self, i: int) -> int:
        if self is Alphabet.X:
            return 1
        if self is Alphabet.Y:
            return i
        return i if i else 1

    def check(self, word: Word) -> Word:
        for i in word:
            if not isinstance(i, int) or not self.is_letter(i):
                raise ValueError(f"letter index {i!r} is not valid for alphabet {self.name}")
        return tuple(word)


X, Y, B = Alphabet.X, Alphabet.Y, Alphabet.B


def weight(w: Word, alphabet: Alphabet = B) -> int:
    if alphabet is X:
        return len(w)
    if alphabet is Y:
        return sum(w)
    return sum(w) + w.count(0)


def depth(w: Word, alphabet: Alphabet = B) -> int:
    if alphabet is X:
        return w.count(1)
    if alphabet is Y:
        return len(w)
    return len(w) - w.count(0)


def word_key(w: Word, alphabet: Alphabet = B):
    """Canonical order: graded by weight, then lexicographic."""
    return (weight(w, alphabet), w)


@lru_cache(maxsize=None)
def _words_of_weight(alphabet: Alphabet, n: int) -> tuple:
    if n == 0:
        return ((),)
    out = []
    if alphabet is X:
        shorter = _words_of_weight(X, n - 1)
        return tuple([(0,) + w for w in shorter] + [(1,) + w for w in shorter])
    # first letters in increasing index order gives lexicographic output
    first = [0, 1] if alphabet is B else [1]
    first += list(range(2, n + 1))
    for a in first:
        rest = n - alphabet.letter_weight(a)
        if rest < 0:
            continue
        out.extend((a,) + w for w in _words_of_weight(alphabet, rest))
    return tuple(out)


def enumerate_words(alphabet: Alphabet, n: int) -> list:
    """All words of exact weight ``n`` in canonical order."""
    if n < 0:
        raise ValueError("weight must be non-negative")
    return list(_words_of_weight(alphabet, n))


def words_up_to(alphabet: Alphabet, n: int) -> list:
    return [w for k in range(n + 1) for w in _words_of_weight(alphabet, k)]


class Poly:
    """Finite linear combination of words with exact coefficients.

    Coefficients are ``Fraction`` by default but any ring element supporting
    ``+``, ``*``, unary ``-`` and truthiness-as-nonzero works (the formal
    zeta layer uses its own element type).  Multiplication of two ``Poly``
    is concatenation.
    """

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms: Mapping | Iterable = (), check: bool = True):
        self.alphabet = alphabet
        items = terms.items() if isinstance(terms, Mapping) else terms
        d = {}
        for w, c in items:
            w = alphabet.check(w) if check else w
            if isinstance(c, int):
                c = Fraction(c)
            if w in d:
                d[w] = d[w] + c
            else:
                d[w] = c
        self.terms = {w: c for w, c in d.items() if c}

    # construction helpers
    def _new(self, terms, alphabet: Alphabet | None = None):
        return Poly(alphabet or self.alphabet, terms, check=False)

    @classmethod
    def word(cls, alphabet: Alphabet, w: Word, coeff=1):
        return cls(alphabet, {tuple(w): coeff})

    @classmethod
    def one(cls, alphabet: Alphabet):
        return cls(alphabet, {(): 1})

    @classmethod
    def zero(cls, alphabet: Alphabet):
        return cls(alphabet)

    # basic access
    def coeff(self, w: Word):
        return self.terms.get(tuple(w), Fraction(0))

    __getitem__ = coeff

    def items(self):
        return self.terms.items()

    def words(self):
        return self.terms.keys()

    def sorted_items(self):
        return sorted(self.terms.items(), key=lambda t: word_key(t[0], self.alphabet))

    def __iter__(self) -> Iterator:
        return iter(self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def _check_same(self, other: "Poly"):
        if other.alphabet is not self.alphabet:
            raise ValueError(f"alphabet mismatch: {self.alphabet.name} vs {other.alphabet.name}")

    # module operations
    def __add__(self, other):
        if not isinstance(other, Poly):
            if other == 0:
                return self
            return NotImplemented
        self._check_same(other)
        d = dict(self.terms)
        for w, c in other.terms.items():
            d[w] = d[w] + c if w in d else c
        return self._new(d)

    __radd__ = __add__

    def __neg__(self):
        return self._new({w: -c for w, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        if isinstance(c, int):
            c = Fraction(c)
        return self._new({w: c * a for w, a in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check_same(other)
            d = {}
            for u, a in self.terms.items():
                for v, b in other.terms.items():
                    w = u + v
                    c = a * b
                    d[w] = d[w] + c if w in d else c
            return self._new(d)
        return self.scale(other)

    def __rmul__(self, c):
        return self.scale(c)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.alphabet is other.alphabet and _eq_terms(self.terms, other.terms)
        if other == 0:
            return not self.terms
        return NotImplemented

    __hash__ = None

    def map_words(self, fn: Callable, alphabet: Alphabet | None = None):
        """Apply a word -> word-or-None map linearly (``None`` means 0)."""
        d = {}
        for w, c in self.terms.items():
            v = fn(w)
            if v is None:
                continue
            d[v] = d[v] + c if v in d else c
        return self._new(d, alphabet)

    def map_linear(self, fn: Callable, alphabet: Alphabet | None = None):
        """Apply a word -> Poly map linearly."""
        d = {}
        for w, c in self.terms.items():
            for v, a in fn(w).terms.items():
                t = c * a
                d[v] = d[v] + t if v in d else t
        return self._new(d, alphabet)

    def homogeneous_components(self) -> dict:
        out: dict = {}
        for w, c in self.terms.items():
            out.setdefault(weight(w, self.alphabet), {})[w] = c
        return {k: self._new(v) for k, v in sorted(out.items())}

    def max_weight(self) -> int:
        return max((weight(w, self.alphabet) for w in self.terms), default=0)

    def constant(self):
        return self.coeff(())

    def __repr__(self):
        return format_poly(self)


def _eq_terms(a: dict, b: dict) -> bool:
    if a.keys() != b.keys():
        return False
    return all(not (a[w] - b[w]) for w in a)


class Series(Poly):
    """Noncommutative power series known on all words of weight <= ``bound``.

    ``==`` compares coefficients up to the smaller of the two bounds;
    ``strict_equal`` additionally requires equal bounds.
    """

    __slots__ = ("bound",)

    def __init__(self, alphabet: Alphabet, terms: Mapping | Iterable = (), bound: int = 0, check: bool = True):
        if bound < 0:
            raise ValueError("weight bound must be non-negative")
        self.bound = bound
        super().__init__(alphabet, terms, check)
        self.terms = {w: c for w, c in self.terms.items() if weight(w, alphabet) <= bound}

    def _new(self, terms, alphabet: Alphabet | None = None):
        return Series(alphabet or self.alphabet, terms, self.bound, check=False)

    @classmethod
    def from_poly(cls, p: Poly, bound: int):
        return cls(p.alphabet, p.terms, bound, check=False)

    @classmethod
    def one(cls, alphabet: Alphabet, bound: int = 0):
        return cls(alphabet, {(): 1}, bound)

    def truncate(self, bound: int):
        return Series(self.alphabet, self.terms, min(bound, self.bound), check=False)

    def to_poly(self) -> Poly:
        return Poly(self.alphabet, self.terms, check=False)

    def __add__(self, other):
        if isinstance(other, Series) and other.bound != self.bound:
            b = min(self.bound, other.bound)
            return self.truncate(b) + other.truncate(b)
        return super().__add__(other)

    __radd__ = __add__

    def __mul__(self, other):
        if isinstance(other, Poly):
            self._check_same(other)
            bound = min(self.bound, other.bound) if isinstance(other, Series) else self.bound
            al = self.alphabet
            rhs = [(v, b, weight(v, al)) for v, b in other.terms.items()]
            d = {}
            for u, a in self.terms.items():
                wu = weight(u, al)
                for v, b, wv in rhs:
                    if wu + wv > bound:
                        continue
                    w = u + v
                    c = a * b
                    d[w] = d[w] + c if w in d else c
            return Series(al, d, bound, check=False)
        return self.scale(other)

    def __eq__(self, other):
        if isinstance(other, Series):
            b = min(self.bound, other.bound)
            return self.alphabet is other.alphabet and _eq_terms(self.truncate(b).terms, other.truncate(b).terms)
        return super().__eq__(other)

    __hash__ = None

    def strict_equal(self, other: "Series") -> bool:
        return self.bound == other.bound and self == other

    def power(self, n: int):
        out = Series.one(self.alphabet, self.bound)
        for _ in range(n):
            out = out * self
        return out

    def inverse(self):
        """Concatenation inverse; requires constant term 1."""
        c0 = self.constant()
        if c0 != 1:
            raise ValueError("series must have constant term 1 to be inverted")
        t = Series.one(self.alphabet, self.bound) - self
        out = Series.one(self.alphabet, self.bound)
        term = Series.one(self.alphabet, self.bound)
        for _ in range(self.bound):
            term = term * t
            if not term:
                break
            out = out + term
        return out

    def __repr__(self):
        return f"{format_poly(self)} + O(wt>{self.bound})"


def exp_conc(p: Poly, bound: int) -> Series:
    """Concatenation exponential of a series without constant term."""
    s = p if isinstance(p, Series) else Series.from_poly(p, bound)
    s = s.truncate(bound)
    if s.constant():
        raise ValueError("exp_conc needs a vanishing constant term")
    out = Series.one(s.alphabet, bound)
    term = Series.one(s.alphabet, bound)
    for n in range(1, bound + 1):
        term = (term * s).scale(Fraction(1, n))
        if not term:
            break
        out = out + term
    return out


def log_conc(s: Series) -> Series:
    """Concatenation logarithm of a series with constant term 1."""
    if s.constant() != 1:
        raise ValueError("log_conc needs constant term 1")
    t = s - Series.one(s.alphabet, s.bound)
    out = Series(s.alphabet, {}, s.bound)
    term = Series.one(s.alphabet, s.bound)
    for n in range(1, s.bound + 1):
        term = term * t
        if not term:
            break
        out = out + term.scale(Fraction((-1) ** (n - 1), n))
    return out


class TensorPoly:
    """Finite combination of ``u (x) v`` with ``u, v`` words of one alphabet."""

    __slots__ = ("alphabet", "terms")

    def __init__(self, alphabet: Alphabet, terms: Mapping | Iterable = ()):
        self.alphabet = alphabet
        items = terms.items() if isinstance(terms, Mapping) else terms
        d = {}
        for k, c in items:
            if isinstance(c, int):
                c = Fraction(c)
            d[k] = d[k] + c if k in d else c
        self.terms = {k: c for k, c in d.items() if c}

    def coeff(self, u: Word, v: Word):
        return self.terms.get((tuple(u), tuple(v)), Fraction(0))

    def __mul__(self, other: "TensorPoly"):
        d = {}
        for (u1, v1), a in self.terms.items():
            for (u2, v2), b in other.terms.items():
                k = (u1 + u2, v1 + v2)
                d[k] = d[k] + a * b if k in d else a * b
        return TensorPoly(self.alphabet, d)

    def __add__(self, other: "TensorPoly"):
        d = dict(self.terms)
        for k, c in other.terms.items():
            d[k] = d[k] + c if k in d else c
        return TensorPoly(self.alphabet, d)

    def __eq__(self, other):
        return isinstance(other, TensorPoly) and _eq_terms(self.terms, other.terms)

    __hash__ = None

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for (u, v), c in sorted(self.terms.items(), key=lambda t: (word_key(t[0][0], self.alphabet), word_key(t[0][1], self.alphabet))):
            parts.append((c, f"{format_word(u, self.alphabet)} (x) {format_word(v, self.alphabet)}"))
        return join_terms(parts)


# ---------------------------------------------------------------- text forms

_LETTER = re.compile(r"^([xyb])(\d+)$")


def parse_word(text: str, alphabet: Alphabet | None = None) -> tuple:
    """Parse ``"b2 b0 b3"``, ``"b2.b0.b3"`` or ``"1"`` (the unit word).

    Returns ``(alphabet, word)``.  The alphabet is inferred from the letter
    prefixes unless given; mixed prefixes are rejected.
    """
    text = text.strip()
    if text in ("1", ""):
        if alphabet is None:
            raise ValueError("cannot infer the alphabet of the unit word")
        return alphabet, ()
    letters = []
    for tok in re.split(r"[\s.]+", text):
        if not tok:
            continue
        m = _LETTER.match(tok)
        if not m:
            raise ValueError(f"malformed letter {tok!r}")
        al = Alphabet(m.group(1))
        if alphabet is None:
            alphabet = al
        elif al is not alphabet:
            raise ValueError(f"letter {tok!r} does not belong to alphabet {alphabet.name}")
        i = int(m.group(2))
        if not al.is_letter(i):
            raise ValueError(f"letter {tok!r} is not valid for alphabet {al.name}")
        letters.append(i)
    return alphabet, tuple(letters)


def format_word(w: Word, alphabet: Alphabet = B, sep: str = ".") -> str:
    if not w:
        return "1"
    return sep.join(f"{alphabet.prefix}{i}" for i in w)


def join_terms(parts) -> str:
    """Render ``(coefficient, body)`` pairs as ``2*u - v + 1/3*w``."""
    out = ""
    for c, body in parts:
        if isinstance(c, Fraction):
            neg = c < 0
            a = -c if neg else c
            cs = "" if a == 1 and body != "1" else str(a)
            if cs and body != "1":
                cs += "*"
            elif body == "1":
                body = ""
                cs = str(a)
        else:
            neg = False
            cs = f"({c})*"
        if not out:
            out = ("-" if neg else "") + cs + body
        else:
            out += (" - " if neg else " + ") + cs + body
    return out or "0"


def format_poly(p: Poly) -> str:
    return join_terms([(c, format_word(w, p.alphabet)) for w, c in p.sorted_items()])


_TERM_SPLIT = re.compile(r"\s+([+-])\s+")


def parse_poly(text: str, alphabet: Alphabet | None = None) -> Poly:
    """Parse ``"2*b1.b1 + b2 - 1/2*b3"``; signs between terms need spaces."""
    text = text.strip()
    if text.startswith("-"):
        text = "0 - " + text[1:].lstrip()
    pieces = _TERM_SPLIT.split(text)
    signs = ["+"] + pieces[1::2]
    raw_terms = pieces[0::2]
    parsed = []
    for sign, t in zip(signs, raw_terms):
        t = t.strip()
        if "*" in t:
            cs, ws = t.split("*", 1)
            coeff = Fraction(cs.strip())
        elif re.fullmatch(r"-?\d+(/\d+)?", t):
            coeff, ws = Fraction(t), "1"
        else:
            coeff, ws = Fraction(1), t
        if sign == "-":
            coeff = -coeff
        if ws.strip() == "1":
            parsed.append((None, (), coeff))
        else:
            al, w = parse_word(ws, alphabet)
            alphabet = alphabet or al
            parsed.append((al, w, coeff))
    if alphabet is None:
        raise ValueError("cannot infer alphabet of a constant polynomial")
    return Poly(alphabet, [(w, c) for _, w, c in parsed])
