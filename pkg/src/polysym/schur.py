"""Partitions, Weyl dimensions, Kostka numbers and Schur decompositions.

GL_m-module structure is read off weight tables: a polynomial module with
weight multiplicities dims(alpha) decomposes as sum_lambda mult(lambda) V_lambda
where dims(alpha) = sum_lambda mult(lambda) * K_{lambda, alpha}.  Dominant
weights are peeled off in decreasing lexicographic order, which refines the
dominance order, so each step only subtracts already-known modules.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .invariant_ring import dim_invariant_component
from .polycore import DomainError, words_up_to


def partition(parts):
    """Normalise to a tuple of positive parts; checks weak decrease."""
    parts = tuple(int(p) for p in parts if p)
    if any(p < 0 for p in parts) or any(a < b for a, b in zip(parts, parts[1:])):
        raise DomainError("%r is not a partition" % (parts,))
    return parts


def height(lam):
    return len(partition(lam))


def partitions_of(d, max_parts=None, max_part=None):
    """Partitions of d in decreasing lexicographic order."""
    if max_part is None:
        max_part = d
    if d == 0:
        yield ()
        return
    if max_parts == 0:
        return
    for k in range(min(d, max_part), 0, -1):
        for rest in partitions_of(d - k, None if max_parts is None else max_parts - 1, k):
            yield (k,) + rest


def weights_of_degree(m, d):
    """All weights (compositions with zeros) of total degree d, length m."""
    out = []
    for combo in combinations_with_replacement(range(m), d):
        e = [0] * m
        for j in combo:
            e[j] += 1
        out.append(tuple(e))
    out.sort(reverse=True)
    return out


def weyl_dim(lam, m):
    """prod_{i<j} (lam_i - lam_j + j - i) / (j - i)."""
    lam = partition(lam)
    if len(lam) > m:
        raise DomainError("partition %r has more than m=%d parts" % (lam, m))
    full = lam + (0,) * (m - len(lam))
    d = Fraction(1)
    for i in range(m):
        for j in range(i + 1, m):
            d *= Fraction(full[i] - full[j] + j - i, j - i)
    if d.denominator != 1:
        raise ArithmeticError("non-integral Weyl dimension for %r" % (lam,))
    return d.numerator


@lru_cache(maxsize=None)
def _kostka(lam, mu):
    # chains of horizontal strips: remove the largest letter's strip from lam
    if not mu:
        return 1 if not lam else 0
    k = mu[-1]
    rest = mu[:-1]
    total = 0
    for inner in _strips_removed(lam, k):
        total += _kostka(inner, rest)
    return total


def _strips_removed(lam, k):
    # partitions nu inside lam with lam/nu a horizontal strip of size k
    out = []
    lam = list(lam)
    h = len(lam)

    def rec(i, left, nu):
        if i == h:
            if left == 0:
                out.append(tuple(p for p in nu if p))
            return
        lower = lam[i + 1] if i + 1 < h else 0
        for take in range(0, min(left, lam[i] - lower) + 1):
            rec(i + 1, left - take, nu + [lam[i] - take])

    rec(0, k, [])
    return out


def kostka(lam, mu):
    """Number of semistandard tableaux of shape lam and content mu."""
    lam = partition(lam)
    mu = tuple(int(a) for a in mu)
    if any(a < 0 for a in mu):
        raise DomainError("negative content %r" % (mu,))
    if sum(lam) != sum(mu):
        raise DomainError("|lambda| != |mu| for %r, %r" % (lam, mu))
    return _kostka(lam, mu)


# ---------------------------------------------------------------------------
# weight tables

@lru_cache(maxsize=None)
def _count_tmonomials(alpha, words):
    if not any(alpha):
        return 1
    if not words:
        return 0
    w = words[0]
    total = _count_tmonomials(alpha, words[1:])
    rem = alpha
    while True:
        rem = tuple(b - a for a, b in zip(w, rem))
        if min(rem) < 0:
            return total
        total += _count_tmonomials(rem, words[1:])


def dim_F_component(n, m, alpha):
    """Number of monomials in the t(w), 1 <= deg w <= n, of weight alpha."""
    alpha = tuple(alpha)
    if len(alpha) != m:
        raise DomainError("weight %r has length != m=%d" % (alpha, m))
    if any(a < 0 for a in alpha):
        return 0
    words = tuple(w for w in words_up_to(m, n) if all(a <= b for a, b in zip(w, alpha)))
    return _count_tmonomials(alpha, words)


def weight_table(fn, m, degree):
    return {a: fn(a) for a in weights_of_degree(m, degree)}


def F_table(n, m, degree):
    return weight_table(lambda a: dim_F_component(n, m, a), m, degree)


def R_table(n, m, degree):
    return weight_table(lambda a: dim_invariant_component(n, m, a), m, degree)


def K_table(n, m, degree):
    f = F_table(n, m, degree)
    r = R_table(n, m, degree)
    return {a: f[a] - r[a] for a in f}


class NotPolynomialCharacter(ArithmeticError):
    """A weight table is not the character of a polynomial GL_m-module."""


def schur_decompose(dims, m):
    """Multiplicities {partition: mult} with dims(a) = sum mult * K_{lambda, a}.

    ``dims`` must hold every weight of each total degree it touches (missing
    weights count as 0).  Symmetry under permutations is checked, the
    decomposition is verified on every weight, and a negative multiplicity
    raises :class:`NotPolynomialCharacter`.
    """
    dims = {tuple(a): v for a, v in dims.items()}
    for a, v in dims.items():
        if len(a) != m:
            raise DomainError("weight %r has length != m=%d" % (a, m))
        s = tuple(sorted(a, reverse=True))
        if dims.get(s, 0) != v:
            raise NotPolynomialCharacter("weight table not symmetric at %r" % (a,))
    result = {}
    for d in sorted({sum(a) for a in dims}):
        for lam in partitions_of(d, max_parts=m):
            full = lam + (0,) * (m - len(lam))
            val = dims.get(full, 0)
            for mu, c in result.items():
                if sum(mu) == d:
                    val -= c * _kostka(mu, full)
            if val < 0:
                raise NotPolynomialCharacter("negative multiplicity %d for %r" % (val, lam))
            if val:
                result[lam] = val
    for a, v in dims.items():
        expect = sum(c * _kostka(lam, a) for lam, c in result.items() if sum(lam) == sum(a))
        if expect != v:
            raise NotPolynomialCharacter("decomposition fails at weight %r" % (a,))
    return dict(sorted(result.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=False))


def total_dimension(mults, m):
    return sum(c * weyl_dim(lam, m) for lam, c in mults.items())


def decompose_slice(kind, n, m, degree):
    """Schur decomposition of the degree-d slice of F, R or K."""
    table = {"F": F_table, "R": R_table, "kernel": K_table, "K": K_table}[kind]
    return schur_decompose(table(n, m, degree), m)


def kernel_decomposition(n, m, degree):
    return decompose_slice("kernel", n, m, degree)


def height_filter_check(n, m, degree):
    """Every V_lambda in the degree-d slice of F has h(lambda) <= (d+1)/2."""
    mults = decompose_slice("F", n, m, degree)
    return all(2 * len(lam) <= degree + 1 for lam in mults)


def to_json(mults):
    return [{"partition": list(lam), "mult": c}
            for lam, c in sorted(mults.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True)]


def format_mults(mults):
    if not mults:
        return "0"
    parts = []
    for lam, c in sorted(mults.items(), key=lambda kv: (sum(kv[0]), kv[0]), reverse=True):
        v = "V(%s)" % ",".join(map(str, lam))
        parts.append(v if c == 1 else "%d*%s" % (c, v))
    return " + ".join(parts)
