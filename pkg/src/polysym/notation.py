"""Parser for the bracket notation used in relation tables.

Accepted forms, with words in x, y, z, w (or x1, x2, ...)::

    [x^2y][xz] + [x^2z][xy]
    3[x^2w][y^2z] - 1/3[xy]^2
    6t(x^2y)t(xy) - 4t(xy)^2t(x)

An expression parses to a list of ``(Fraction, [word, ...])`` terms, which
can be read either in F (``[w] -> t(w)``) or in R (``t(w) -> [w]``).
"""

from fractions import Fraction
import re

from .invariant_ring import power_sum_product
from .polycore import DomainError, Poly, TSpace, XSpace, parse_word, tmono_from_words

_TOKEN = re.compile(r"""
    \s*(?:
      (?P<num>\d+(?:/\d+)?)
    | (?P<sign>[+-])
    | t\((?P<tword>[^)]*)\)
    | \[(?P<bword>[^\]]*)\]
    | \^(?P<pow>\d+)
    | (?P<star>\*)
    )""", re.VERBOSE)


def parse_terms(text, m):
    terms = []
    sign = 1
    coef = None
    words = []
    last_words = None
    pos = 0
    text = text.strip()

    def flush():
        if coef is None and not words:
            raise DomainError("empty term in %r" % text)
        terms.append((sign * (coef if coef is not None else Fraction(1)), list(words)))

    started = False
    while pos < len(text):
        mt = _TOKEN.match(text, pos)
        if not mt or mt.end() == pos:
            raise DomainError("cannot parse %r at position %d" % (text, pos))
        pos = mt.end()
        if mt.group("sign"):
            if started:
                flush()
            sign = -1 if mt.group("sign") == "-" else 1
            coef = None
            words = []
            last_words = None
            started = False
        elif mt.group("num"):
            if words or coef is not None:
                raise DomainError("misplaced coefficient in %r" % text)
            coef = Fraction(mt.group("num"))
            started = True
        elif mt.group("tword") is not None or mt.group("bword") is not None:
            raw = mt.group("tword") if mt.group("tword") is not None else mt.group("bword")
            last_words = [parse_word(raw, m)]
            words.extend(last_words)
            started = True
        elif mt.group("pow"):
            if last_words is None:
                raise DomainError("exponent without a factor in %r" % text)
            k = int(mt.group("pow"))
            words.extend(last_words * (k - 1))
            last_words = None
    if started:
        flush()
    return terms


def terms_to_tpoly(terms, m):
    sp = TSpace(m)
    out = Poly(sp)
    for c, words in terms:
        out = out + Poly.monomial(sp, tmono_from_words(words), c)
    return out


def terms_to_invariant(terms, n, m):
    out = Poly(XSpace(n, m))
    for c, words in terms:
        out = out + power_sum_product(words, n, m).scale(c)
    return out


def tpoly(text, m):
    """Parse into an element of F (brackets are read as t-variables)."""
    return terms_to_tpoly(parse_terms(text, m), m)


def invariant(text, n, m):
    """Parse into an element of R_{n,m} (t-variables are read as power sums)."""
    return terms_to_invariant(parse_terms(text, m), n, m)
