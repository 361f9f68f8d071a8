"""Named elements of the kernel of phi.

* ``psi(n, words)`` -- the relation attached to the set partitions of n+1
  letters; it lies in the kernel of phi_{n,m} (unbounded index degree).
* ``gram_relation(n)`` -- the bordered Gram determinant of degree 2n.
* ``j32()``, ``j42()`` -- the two n = 3 relations of weights (3,2), (4,2),
  each built both from psi and from the literal expansion.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Optional

from .notation import tpoly
from .polycore import DomainError, Poly, TSpace, _tvar_sort

SCHEMA = "polysym-relations/1"


def distributions(k):
    """All set partitions of {1, ..., k} as tuples of blocks.

    Generated from restricted growth strings, so each partition appears once;
    blocks are sorted tuples, listed by their smallest element.
    """
    if k < 1:
        raise DomainError("k must be >= 1")
    out = []

    def rec(i, blocks):
        if i > k:
            out.append(tuple(tuple(b) for b in blocks))
            return
        for b in blocks:
            b.append(i)
            rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        rec(i + 1, blocks)
        blocks.pop()

    rec(1, [])
    return out


def psi(n, words):
    """Sum over set partitions pi of prod_B (-1)(|B|-1)! t(prod_{s in B} w_s)."""
    words = [tuple(w) for w in words]
    if len(words) != n + 1:
        raise DomainError("psi_%d takes %d words, got %d" % (n + 1, n + 1, len(words)))
    m = len(words[0])
    if any(len(w) != m for w in words):
        raise DomainError("words of unequal length")
    if any(not any(w) or min(w) < 0 for w in words):
        raise DomainError("every word must be a monomial of degree >= 1")
    terms = {}
    for pi in distributions(n + 1):
        coef = 1
        d = {}
        for block in pi:
            coef *= -factorial(len(block) - 1)
            w = tuple(map(sum, zip(*(words[s - 1] for s in block))))
            d[w] = d.get(w, 0) + 1
        key = tuple(sorted(d.items(), key=_tvar_sort))
        v = terms.get(key, 0) + coef
        if v:
            terms[key] = v
        else:
            del terms[key]
    return Poly(TSpace(m), terms)


@dataclass
class RelationRecord:
    name: str
    element: Poly
    weight: Optional[tuple] = None
    kernel: bool = True
    forms: dict = field(default_factory=dict)

    def embedded(self, m):
        el = self.element.embed(m)
        wt = None if self.weight is None else tuple(self.weight) + (0,) * (m - len(self.weight))
        return RelationRecord(self.name, el, wt, self.kernel,
                              {k: v.embed(m) for k, v in self.forms.items()})

    def to_json(self):
        sp = self.element.space
        return {
            "name": self.name,
            "weight": list(self.weight) if self.weight is not None else None,
            "kernel": self.kernel,
            "terms": [
                {
                    "coeff": str(Fraction(c)),
                    "monomial": [[list(w), e] for w, e in k],
                    "text": sp.format(k),
                }
                for k, c in self.element.sorted_terms()
            ],
        }


def _perm_sign(p):
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j = i
        length = 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def gram_matrix(n, m=None):
    """The (n+1)x(n+1) matrix of t(x_i x_j), bordered by t(x_i) and n."""
    m = n if m is None else m
    if m < n:
        raise DomainError("the Gram relation needs m >= n (m=%d, n=%d)" % (m, n))
    sp = TSpace(m)

    def unit(*idx):
        e = [0] * m
        for i in idx:
            e[i] += 1
        return tuple(e)

    rows = []
    for i in range(n + 1):
        row = []
        for j in range(n + 1):
            if i < n and j < n:
                row.append(Poly.monomial(sp, sp.variable(unit(i, j))))
            elif i < n:
                row.append(Poly.monomial(sp, sp.variable(unit(i))))
            elif j < n:
                row.append(Poly.monomial(sp, sp.variable(unit(j))))
            else:
                row.append(Poly.constant(sp, n))
        rows.append(row)
    return rows


def determinant(mat):
    """Leibniz expansion; fine for the (n+1) <= 6 sizes used here."""
    size = len(mat)
    sp = mat[0][0].space
    total = Poly(sp)
    for p in permutations(range(size)):
        term = Poly.constant(sp, _perm_sign(p))
        for i, j in enumerate(p):
            term = term * mat[i][j]
            if not term:
                break
        total = total + term
    return total


def gram_relation(n, m=None):
    if n < 1:
        raise DomainError("n must be >= 1")
    m = n if m is None else m
    el = determinant(gram_matrix(n, m))
    name = "J_{%s}" % ",".join(["2"] * n)
    return RelationRecord(name, el, (2,) * n + (0,) * (m - n))


X, Y = (1, 0), (0, 1)


def _w(*parts):
    return tuple(map(sum, zip(*parts)))


J32_EXPANDED = (
    "6t(x^2y)t(xy) - 3t(xy^2)t(x^2) - 2t(x^2y)t(x)t(y) + t(xy^2)t(x)^2"
    " - 4t(xy)^2t(x) + 2t(xy)t(x)^2t(y) - 3t(x^3)t(y^2) + 4t(x^2)t(x)t(y^2)"
    " - t(x)^3t(y^2) + t(x^3)t(y)^2 - t(x^2)t(x)t(y)^2"
)

J42_EXPANDED = (
    "6t(x^2y)^2 + t(xy)^2t(x^2) - 3t(xy)^2t(x)^2 - 6t(x^3)t(xy^2)"
    " + 2t(x^2)t(xy^2)t(x) + 4t(x^3)t(xy)t(y)"
    " - 2t(x^2)t(xy)t(x)t(y) + 2t(xy)t(x)^3t(y) - 4t(x^2y)t(x^2)t(y)"
    " - t(x^2)^2t(y^2) + t(x^2)^2t(y)^2 + 4t(x^2)t(x)^2t(y^2)"
    " - t(x^2)t(x)^2t(y)^2 - t(x)^4t(y^2) - 2t(x^3)t(x)t(y^2)"
)


def _t(w):
    sp = TSpace(2)
    return Poly.monomial(sp, sp.variable(w))


def j32_from_psi():
    xy, y2 = _w(X, Y), _w(Y, Y)
    return (
        psi(3, [xy, X, X, Y]) * 3
        - psi(3, [X, X, X, y2]) * 3
        + psi(3, [X, X, X, Y]) * _t(Y)
        - psi(3, [X, X, Y, Y]) * _t(X)
    ) * Fraction(1, 2)


def j42_from_psi():
    xy, y2, x2, xy2 = _w(X, Y), _w(Y, Y), _w(X, X), _w(X, Y, Y)
    return (
        psi(3, [xy, xy, X, X]) * 3
        - psi(3, [X, X, X, xy2]) * 3
        + psi(3, [X, X, X, Y]) * _t(xy) * 2
        - psi(3, [X, X, Y, Y]) * _t(x2)
        - psi(3, [X, X, X, y2]) * _t(X)
    )


def j32():
    a = j32_from_psi()
    b = tpoly(J32_EXPANDED, 2)
    return RelationRecord("J_{3,2}", a, (3, 2), forms={"A": a, "B": b})


def j42():
    a = j42_from_psi()
    b = tpoly(J42_EXPANDED, 2)
    return RelationRecord("J_{4,2}", a, (4, 2), forms={"A": a, "B": b})


def j222():
    return gram_relation(3)


def catalog(m=None):
    """JSON-ready catalog of the named relations (embedded into m symbols)."""
    recs = [j32(), j42(), j222()]
    if m is not None:
        recs = [r.embedded(m) if r.element.space.m < m else r for r in recs]
    return {"schema": SCHEMA, "relations": [r.to_json() for r in recs]}
