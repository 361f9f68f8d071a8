"""The character ring of S_3 and multigraded Hilbert series.

A :class:`CharElem` is c0*chi0 + c1*chi1 + c2*chi2 (trivial, 2-dimensional,
sign) with coefficients in any commutative ring; here either ints or
:class:`TruncatedSeries`.
"""

from itertools import product

from .invariant_ring import dim_invariant_component
from .polycore import DomainError
from .schur import weights_of_degree


class TruncatedSeries:
    """Power series in t_1..t_m with integer coefficients, total degree <= D."""

    __slots__ = ("m", "D", "coeffs")

    def __init__(self, m, D, coeffs=None):
        self.m = m
        self.D = D
        self.coeffs = {}
        for a, c in (coeffs or {}).items():
            a = tuple(a)
            if len(a) != m:
                raise DomainError("exponent %r has length != %d" % (a, m))
            if c and sum(a) <= D:
                self.coeffs[a] = c

    @classmethod
    def one(cls, m, D):
        return cls(m, D, {(0,) * m: 1})

    @classmethod
    def monomial(cls, m, D, alpha, c=1):
        return cls(m, D, {tuple(alpha): c})

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            raise TypeError("expected a TruncatedSeries")
        if (self.m, self.D) != (other.m, other.D):
            raise DomainError("truncation mismatch: (m=%d, D=%d) vs (m=%d, D=%d)"
                              % (self.m, self.D, other.m, other.D))

    def __add__(self, other):
        if isinstance(other, int) and other == 0:
            return self
        self._check(other)
        out = dict(self.coeffs)
        for a, c in other.coeffs.items():
            out[a] = out.get(a, 0) + c
        return TruncatedSeries(self.m, self.D, out)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.m, self.D, {a: -c for a, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(self.m, self.D, {a: c * other for a, c in self.coeffs.items()})
        self._check(other)
        out = {}
        D = self.D
        for a, ca in self.coeffs.items():
            da = sum(a)
            for b, cb in other.coeffs.items():
                if da + sum(b) > D:
                    continue
                k = tuple(x + y for x, y in zip(a, b))
                out[k] = out.get(k, 0) + ca * cb
        return TruncatedSeries(self.m, D, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, TruncatedSeries):
            return (self.m, self.D) == (other.m, other.D) and self.coeffs == other.coeffs
        if isinstance(other, int) and other == 0:
            return not self.coeffs
        return NotImplemented

    def __getitem__(self, alpha):
        return self.coeffs.get(tuple(alpha), 0)

    def by_degree(self):
        out = [0] * (self.D + 1)
        for a, c in self.coeffs.items():
            out[sum(a)] += c
        return out

    def sorted_items(self):
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), tuple(-x for x in kv[0])))

    def __str__(self):
        names = ["t", "u", "v", "s"] if self.m <= 4 else ["t%d" % (j + 1) for j in range(self.m)]
        parts = []
        for a, c in self.sorted_items():
            mono = "".join(
                names[j] + ("^%d" % e if e > 1 else "") for j, e in enumerate(a) if e
            )
            if not mono:
                body = str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = "%d*%s" % (abs(c), mono)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        if not parts:
            return "0"
        out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            out += " %s %s" % (sign, body)
        return out

    def to_json(self):
        return [{"exponent": list(a), "coeff": c} for a, c in self.sorted_items()]


class CharElem:
    """c0*chi0 + c1*chi1 + c2*chi2 in the character ring of S_3."""

    __slots__ = ("c",)

    def __init__(self, c0, c1, c2):
        self.c = (c0, c1, c2)

    def __add__(self, other):
        return CharElem(*(a + b for a, b in zip(self.c, other.c)))

    def __mul__(self, other):
        return char_mul(self, other)

    def __eq__(self, other):
        return isinstance(other, CharElem) and all(a == b for a, b in zip(self.c, other.c))

    def __repr__(self):
        return "CharElem(%r, %r, %r)" % self.c


def _truncations(elem):
    return {(x.m, x.D) for x in elem.c if isinstance(x, TruncatedSeries)}


def char_mul(a, b):
    """chi1^2 = chi0 + chi1 + chi2, chi2^2 = chi0, chi1*chi2 = chi1."""
    ta, tb = _truncations(a), _truncations(b)
    if ta and tb and ta != tb:
        raise DomainError("truncation mismatch %r vs %r" % (ta, tb))
    a0, a1, a2 = a.c
    b0, b1, b2 = b.c
    return CharElem(
        a0 * b0 + a1 * b1 + a2 * b2,
        a0 * b1 + a1 * b0 + a1 * b1 + a1 * b2 + a2 * b1,
        a0 * b2 + a2 * b0 + a1 * b1,
    )


CHI0 = CharElem(1, 0, 0)
CHI1 = CharElem(0, 1, 0)
CHI2 = CharElem(0, 0, 1)


def secondary_hilbert(m, D):
    """chi0-coefficient of prod_j (chi0 + (t_j + t_j^2) chi1 + t_j^3 chi2)."""
    if m < 1 or D < 0:
        raise DomainError("need m >= 1 and D >= 0")

    def mono(j, k):
        e = [0] * m
        e[j] = k
        return TruncatedSeries.monomial(m, D, e)

    zero = TruncatedSeries(m, D)
    acc = CharElem(TruncatedSeries.one(m, D), zero, zero)
    for j in range(m):
        factor = CharElem(TruncatedSeries.one(m, D), mono(j, 1) + mono(j, 2), mono(j, 3))
        acc = char_mul(acc, factor)
    return acc.c[0]


def molien_hilbert_R(n, m, D):
    """Series of dim R^alpha_{n,m} for |alpha| <= D, by orbit counting."""
    coeffs = {}
    for d in range(D + 1):
        for a in weights_of_degree(m, d):
            coeffs[a] = dim_invariant_component(n, m, a)
    return TruncatedSeries(m, D, coeffs)


def primary_denominator_inverse(m, D, degrees=(1, 2, 3)):
    """Truncated expansion of prod_j prod_k 1/(1 - t_j^k)."""
    out = TruncatedSeries.one(m, D)
    for j in range(m):
        for k in degrees:
            geo = {}
            for ell in range(D // k + 1):
                e = [0] * m
                e[j] = k * ell
                geo[tuple(e)] = 1
            out = out * TruncatedSeries(m, D, geo)
    return out


def hironaka_check(m, D):
    """Compare the orbit-count series of R_{3,m} with H(S) / prod(...)."""
    lhs = molien_hilbert_R(3, m, D)
    rhs = secondary_hilbert(m, D) * primary_denominator_inverse(m, D)
    return lhs == rhs, lhs, rhs


# S_3 conjugacy classes: (size, cycle type, (chi0, chi1, chi2))
S3_CLASSES = (
    (1, (1, 1, 1), (1, 2, 1)),
    (3, (2, 1), (1, 0, -1)),
    (2, (3,), (1, -1, 1)),
)


def _fixed_monomials(cycle_type, k):
    ways = [1] + [0] * k
    for ell in cycle_type:
        for s in range(ell, k + 1):
            ways[s] += ways[s - ell]
    return ways[k]


def isotypic_series_one_column(D):
    """[H_chi0, H_chi1, H_chi2] of Q[x1,x2,x3] up to degree D by character averaging."""
    out = [[0] * (D + 1) for _ in range(3)]
    for k in range(D + 1):
        for idx in range(3):
            s = sum(size * chi[idx] * _fixed_monomials(ct, k) for size, ct, chi in S3_CLASSES)
            q, r = divmod(s, 6)
            assert r == 0
            out[idx][k] = q
    return out


def isotypic_series_formula(D):
    """(chi0 + (t+t^2) chi1 + t^3 chi2) / ((1-t)(1-t^2)(1-t^3)) coefficientwise."""
    inv = primary_denominator_inverse(1, D)
    nums = [{0: 1}, {1: 1, 2: 1}, {3: 1}]
    out = []
    for num in nums:
        s = TruncatedSeries(1, D, {(e,): c for e, c in num.items()}) * inv
        out.append([s[(k,)] for k in range(D + 1)])
    return out
