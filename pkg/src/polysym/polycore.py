"""Exact sparse polynomials over Q.

Two variable spaces are in use:

* :class:`XSpace` -- the coordinate ring of V^m.  Variables ``x[i][j]``
  (row i = 1..n, column j = 1..m) are stored as one flat exponent tuple of
  length ``n*m`` in row-major order, so ``x11 > x12 > ... > x1m > x21 > ...``.
* :class:`TSpace` -- the presentation algebra with one variable ``t(w)`` per
  monomial ``w`` of positive degree in m symbols.  A t-monomial is a tuple of
  ``(w, e)`` pairs sorted in decreasing variable order.

Coefficients are Python ints or :class:`fractions.Fraction`; nothing is ever
rounded.
"""

from fractions import Fraction
from itertools import combinations_with_replacement
from numbers import Rational
import operator
import re

ALIASES = "xyzw"


class SpaceMismatchError(TypeError):
    """Operands live in different variable spaces."""


class DomainError(ValueError):
    """An argument is outside the domain of an operation."""


class ResourceLimitError(RuntimeError):
    """A computation exceeded its configured size bound."""


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def as_rational(c):
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError("coefficients must be exact rationals, got %r" % (c,))
    return _norm(c)


# ---------------------------------------------------------------------------
# monomials in m symbols (the index words w of t(w))

def word_degree(w):
    return sum(w)


def words_of_degree(m, k):
    """All exponent vectors of length m and total degree k, grlex-descending."""
    out = []
    for combo in combinations_with_replacement(range(m), k):
        e = [0] * m
        for j in combo:
            e[j] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


def words_up_to(m, d):
    """Exponent vectors of degree 1..d, in decreasing grlex order."""
    out = []
    for k in range(d, 0, -1):
        out.extend(words_of_degree(m, k))
    return out


def format_word(w):
    """``(2, 1)`` -> ``"x^2y"`` for m <= 4, ``"x1^2*x2"`` otherwise."""
    if not any(w):
        return "1"
    if len(w) <= len(ALIASES):
        parts = []
        for j, e in enumerate(w):
            if e:
                parts.append(ALIASES[j] + ("^%d" % e if e > 1 else ""))
        return "".join(parts)
    parts = []
    for j, e in enumerate(w):
        if e:
            parts.append("x%d" % (j + 1) + ("^%d" % e if e > 1 else ""))
    return "*".join(parts)


_WORD_TOKEN = re.compile(r"\s*(?:x(\d+)|([xyzw]))(?:\^(\d+))?\s*\*?")


def parse_word(text, m):
    """Parse ``"x^2y"``, ``"xyz"`` or ``"x1^2*x3"`` into an exponent vector."""
    text = text.strip()
    e = [0] * m
    pos = 0
    if not text:
        raise DomainError("empty word")
    while pos < len(text):
        mt = _WORD_TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise DomainError("cannot parse word %r" % text)
        if mt.group(1):
            j = int(mt.group(1)) - 1
        else:
            j = ALIASES.index(mt.group(2))
        if not 0 <= j < m:
            raise DomainError("variable out of range in %r (m=%d)" % (text, m))
        e[j] += int(mt.group(3) or 1)
        pos = mt.end()
    return tuple(e)


# ---------------------------------------------------------------------------
# variable spaces

class XSpace:
    """Exponent tuples for the variables x[i][j], i < n, j < m."""

    __slots__ = ("n", "m")

    def __init__(self, n, m):
        self.n = n
        self.m = m

    def __eq__(self, other):
        return isinstance(other, XSpace) and (self.n, self.m) == (other.n, other.m)

    def __hash__(self):
        return hash(("X", self.n, self.m))

    def __repr__(self):
        return "XSpace(n=%d, m=%d)" % (self.n, self.m)

    def one(self):
        return (0,) * (self.n * self.m)

    def mul(self, a, b):
        return tuple(map(operator.add, a, b))

    def degree(self, key):
        return sum(key)

    def weight(self, key):
        m = self.m
        return tuple(sum(key[j::m]) for j in range(m))

    def order_key(self, key):
        return (sum(key), key)

    def format(self, key):
        parts = []
        m = self.m
        for idx, e in enumerate(key):
            if e:
                i, j = divmod(idx, m)
                parts.append("x[%d][%d]" % (i + 1, j + 1) + ("^%d" % e if e > 1 else ""))
        return "*".join(parts) if parts else "1"

    def variable(self, i, j):
        """Key of x[i][j] (0-based)."""
        key = [0] * (self.n * self.m)
        key[i * self.m + j] = 1
        return tuple(key)

    def row(self, key, i):
        m = self.m
        return key[i * m:(i + 1) * m]


def _tvar_sort(item):
    w = item[0]
    return (-sum(w), tuple(-a for a in w))


class TSpace:
    """Monomials in the variables t(w), w a nonzero exponent vector of length m."""

    __slots__ = ("m",)

    def __init__(self, m):
        self.m = m

    def __eq__(self, other):
        return isinstance(other, TSpace) and self.m == other.m

    def __hash__(self):
        return hash(("T", self.m))

    def __repr__(self):
        return "TSpace(m=%d)" % self.m

    def one(self):
        return ()

    def mul(self, a, b):
        if not a:
            return b
        if not b:
            return a
        d = dict(a)
        for w, e in b:
            d[w] = d.get(w, 0) + e
        return tuple(sorted(d.items(), key=_tvar_sort))

    def degree(self, key):
        return sum(sum(w) * e for w, e in key)

    def weight(self, key):
        out = [0] * self.m
        for w, e in key:
            for j, a in enumerate(w):
                out[j] += a * e
        return tuple(out)

    def order_key(self, key):
        return (self.degree(key), tuple(((sum(w), w), e) for w, e in key))

    def format(self, key):
        if not key:
            return "1"
        parts = []
        for w, e in key:
            parts.append("t(%s)" % format_word(w) + ("^%d" % e if e > 1 else ""))
        return "*".join(parts)

    def variable(self, w):
        w = tuple(w)
        if len(w) != self.m:
            raise DomainError("word %r has wrong length for m=%d" % (w, self.m))
        if any(a < 0 for a in w) or not any(w):
            raise DomainError("t(w) needs a monomial w of degree >= 1, got %r" % (w,))
        return ((w, 1),)

    def embed_key(self, key, m):
        pad = (0,) * (m - self.m)
        return tuple((w + pad, e) for w, e in key)


def tmono_from_words(words):
    """t-monomial key for the product t(w1)*t(w2)*... ."""
    d = {}
    for w in words:
        w = tuple(w)
        if not any(w):
            raise DomainError("t(1) is not a variable")
        d[w] = d.get(w, 0) + 1
    return tuple(sorted(d.items(), key=_tvar_sort))


def tmono_words(key):
    """Inverse of :func:`tmono_from_words` (words with repetition)."""
    out = []
    for w, e in key:
        out.extend([w] * e)
    return out


def tmono_max_word_degree(key):
    return max((sum(w) for w, _ in key), default=0)


# ---------------------------------------------------------------------------

class Poly:
    """Sparse polynomial: a map monomial key -> nonzero rational."""

    __slots__ = ("space", "terms")

    def __init__(self, space, terms=None):
        self.space = space
        if terms is None:
            self.terms = {}
        else:
            self.terms = {k: _norm(c) for k, c in terms.items() if c != 0}

    @classmethod
    def _raw(cls, space, terms):
        p = cls.__new__(cls)
        p.space = space
        p.terms = terms
        return p

    @classmethod
    def monomial(cls, space, key, coeff=1):
        return cls._raw(space, {key: as_rational(coeff)} if coeff else {})

    @classmethod
    def constant(cls, space, c):
        return cls.monomial(space, space.one(), c)

    # -- structure ---------------------------------------------------------

    def _check(self, other):
        if self.space != other.space:
            raise SpaceMismatchError("%r vs %r" % (self.space, other.space))

    def _coerce(self, other):
        if isinstance(other, Poly):
            self._check(other)
            return other
        if isinstance(other, Rational) and not isinstance(other, bool):
            return Poly.constant(self.space, other)
        return NotImplemented

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.space == other.space and self.terms == other.terms
        if isinstance(other, Rational) and not isinstance(other, bool):
            if other == 0:
                return not self.terms
            return self.terms == {self.space.one(): other}
        return NotImplemented

    def __hash__(self):
        return hash((self.space, frozenset(self.terms.items())))

    # -- arithmetic --------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = _norm(v)
            else:
                out.pop(k, None)
        return Poly._raw(self.space, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.space, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        c = as_rational(c)
        if not c:
            return Poly._raw(self.space, {})
        return Poly._raw(self.space, {k: _norm(v * c) for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, Rational) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check(other)
        mul = self.space.mul
        out = {}
        for ka, ca in self.terms.items():
            for kb, cb in other.terms.items():
                k = mul(ka, kb)
                v = out.get(k, 0) + ca * cb
                if v:
                    out[k] = v
                else:
                    del out[k]
        return Poly._raw(self.space, {k: _norm(v) for k, v in out.items()})

    __rmul__ = __mul__

    def __truediv__(self, c):
        return self.scale(Fraction(1) / as_rational(c))

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise DomainError("exponent must be a nonnegative integer")
        result = Poly.constant(self.space, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    # -- gradings ----------------------------------------------------------

    def multidegree(self):
        """Common weight of all terms, or None if inhomogeneous (or zero)."""
        weights = {self.space.weight(k) for k in self.terms}
        if len(weights) != 1:
            return None
        return weights.pop()

    def degree(self):
        return max((self.space.degree(k) for k in self.terms), default=-1)

    def is_homogeneous(self):
        return len({self.space.weight(k) for k in self.terms}) == 1

    # -- order and display -------------------------------------------------

    def sorted_terms(self):
        """Terms in decreasing monomial order."""
        ok = self.space.order_key
        return sorted(self.terms.items(), key=lambda kv: ok(kv[0]), reverse=True)

    def leading_term(self):
        if not self.terms:
            raise DomainError("zero polynomial has no leading term")
        ok = self.space.order_key
        k = max(self.terms, key=ok)
        return k, self.terms[k]

    def coeff(self, key):
        return self.terms.get(key, 0)

    def __str__(self):
        if not self.terms:
            return "0"
        fmt = self.space.format
        one = self.space.one()
        out = []
        for i, (k, c) in enumerate(self.sorted_terms()):
            neg = c < 0
            a = -c if neg else c
            if k == one:
                body = str(a)
            elif a == 1:
                body = fmt(k)
            else:
                body = "%s*%s" % (a, fmt(k))
            if i == 0:
                out.append(("-" if neg else "") + body)
            else:
                out.append((" - " if neg else " + ") + body)
        return "".join(out)

    def __repr__(self):
        return "Poly(%r, %s)" % (self.space, self)

    # -- t-space helpers ---------------------------------------------------

    def embed(self, m):
        """Re-read a t-polynomial in m >= current symbols (pad words with 0)."""
        if not isinstance(self.space, TSpace):
            raise DomainError("embed applies to t-polynomials")
        if m < self.space.m:
            raise DomainError("cannot embed into fewer symbols")
        sp = TSpace(m)
        return Poly._raw(sp, {self.space.embed_key(k, m): c for k, c in self.terms.items()})

    def max_word_degree(self):
        """Largest deg w over the t(w) occurring (t-space only)."""
        return max((tmono_max_word_degree(k) for k in self.terms), default=0)


def poly_mul(a, b):
    return a * b


def multidegree(p):
    return p.multidegree()


def tvar(w):
    """The variable t(w) as a polynomial."""
    w = tuple(w)
    sp = TSpace(len(w))
    return Poly.monomial(sp, sp.variable(w))


def xvar(n, m, i, j):
    """The coordinate function x[i][j] (0-based indices)."""
    sp = XSpace(n, m)
    return Poly.monomial(sp, sp.variable(i, j))
