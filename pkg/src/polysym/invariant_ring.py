"""The ring of multisymmetric polynomials R_{n,m} = Q[V^m]^{S_n}.

Invariants are plain :class:`~polysym.polycore.Poly` objects in an
:class:`~polysym.polycore.XSpace`.  A weight component R^alpha has the basis
of S_n-orbit sums of x-monomials with column-degree vector alpha; since each
orbit sum has coefficient 1 on every monomial of its orbit, the coordinate of
an invariant along an orbit sum is simply its coefficient on the orbit
representative.
"""

from fractions import Fraction
from functools import lru_cache
from itertools import permutations, product
from math import factorial

from .polycore import DomainError, Poly, XSpace


def polarized_power_sum(alpha, n):
    """[w] = sum_i x_{i1}^alpha_1 ... x_{im}^alpha_m."""
    alpha = tuple(alpha)
    if any(a < 0 for a in alpha):
        raise DomainError("negative exponent in %r" % (alpha,))
    if not any(alpha):
        raise DomainError("[1] is not a polarized power sum (w must have degree >= 1)")
    m = len(alpha)
    sp = XSpace(n, m)
    zero = (0,) * m
    terms = {}
    for i in range(n):
        terms[zero * i + alpha + zero * (n - 1 - i)] = 1
    return Poly._raw(sp, terms)


def power_sum_product(words, n, m=None):
    """Product [w1][w2]... in R_{n,m}; the empty product is 1."""
    words = [tuple(w) for w in words]
    if m is None:
        if not words:
            raise DomainError("m is required for the empty product")
        m = len(words[0])
    result = Poly.constant(XSpace(n, m), 1)
    for w in words:
        result = result * polarized_power_sum(w, n)
    return result


# ---------------------------------------------------------------------------
# orbit bases

def _rows_in_box(alpha):
    return sorted(product(*[range(a + 1) for a in alpha]), reverse=True)


@lru_cache(maxsize=None)
def orbit_representatives(n, m, alpha):
    """Lex-largest monomial of every S_n-orbit of column-degree alpha.

    Returned as flat exponent keys in decreasing order.
    """
    alpha = tuple(alpha)
    if len(alpha) != m:
        raise DomainError("weight %r has length != m=%d" % (alpha, m))
    if any(a < 0 for a in alpha):
        return ()
    rows = _rows_in_box(alpha)
    out = []

    def rec(start, remaining, left, acc):
        if left == 0:
            if not any(remaining):
                out.append(tuple(x for r in acc for x in r))
            return
        for idx in range(start, len(rows)):
            r = rows[idx]
            if all(a <= b for a, b in zip(r, remaining)):
                rec(idx, tuple(b - a for a, b in zip(r, remaining)), left - 1, acc + [r])

    rec(0, alpha, n, [])
    out.sort(reverse=True)
    return tuple(out)


class OrbitBasis:
    """Orbit-sum basis of the weight-alpha component of R_{n,m}."""

    def __init__(self, n, m, alpha):
        self.n = n
        self.m = m
        self.alpha = tuple(alpha)
        self.space = XSpace(n, m)
        self.representatives = orbit_representatives(n, m, self.alpha)
        self.index = {k: i for i, k in enumerate(self.representatives)}

    def __len__(self):
        return len(self.representatives)

    def orbit_sum(self, i):
        rep = self.representatives[i]
        m = self.m
        rows = [rep[r * m:(r + 1) * m] for r in range(self.n)]
        keys = {tuple(x for r in perm for x in r) for perm in permutations(rows)}
        return Poly._raw(self.space, {k: 1 for k in keys})

    @property
    def basis(self):
        return [self.orbit_sum(i) for i in range(len(self))]

    def coords_sparse(self, p):
        """Sparse coordinate dict (index -> coefficient), without checking."""
        idx = self.index
        return {idx[k]: c for k, c in p.terms.items() if k in idx}


def orbit_basis(n, m, alpha):
    return OrbitBasis(n, m, alpha)


def coordinates(p, basis, check=True):
    """Exact coordinates of an invariant in an orbit basis.

    With ``check`` the reconstruction is verified and a non-invariant (or
    wrong-weight) input raises :class:`DomainError`.
    """
    if p.space != basis.space:
        raise DomainError("polynomial space %r does not match basis" % (p.space,))
    if p and p.multidegree() != basis.alpha:
        raise DomainError("polynomial is not of multidegree %r" % (basis.alpha,))
    vec = [Fraction(p.coeff(k)) for k in basis.representatives]
    if check:
        recon = Poly(basis.space)
        for i, c in enumerate(vec):
            if c:
                recon = recon + basis.orbit_sum(i).scale(c)
        if recon != p:
            raise DomainError("polynomial is not in the span of the orbit basis")
    return vec


# ---------------------------------------------------------------------------
# dimension count by Burnside's lemma

def _partitions(n, max_part=None):
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - k, k):
            yield (k,) + rest


def _class_size(cycle_type):
    n = sum(cycle_type)
    z = 1
    counts = {}
    for c in cycle_type:
        counts[c] = counts.get(c, 0) + 1
    for c, k in counts.items():
        z *= c ** k * factorial(k)
    return factorial(n) // z


def _solutions(lengths, total):
    # number of (a_c) >= 0 with sum lengths[c]*a_c == total
    ways = [1] + [0] * total
    for ell in lengths:
        for s in range(ell, total + 1):
            ways[s] += ways[s - ell]
    return ways[total]


@lru_cache(maxsize=None)
def dim_invariant_component(n, m, alpha):
    """dim R^alpha_{n,m} as the average number of fixed monomials."""
    alpha = tuple(alpha)
    if len(alpha) != m:
        raise DomainError("weight %r has length != m=%d" % (alpha, m))
    if any(a < 0 for a in alpha):
        return 0
    total = 0
    for ct in _partitions(n):
        fixed = 1
        for a in alpha:
            fixed *= _solutions(ct, a)
        total += _class_size(ct) * fixed
    q, r = divmod(total, factorial(n))
    assert r == 0
    return q


# ---------------------------------------------------------------------------
# the S_n action

def permute_rows(p, perm):
    """Apply the row permutation i -> perm[i] to an x-polynomial."""
    sp = p.space
    n, m = sp.n, sp.m
    inv = [0] * n
    for i, j in enumerate(perm):
        inv[j] = i
    out = {}
    for k, c in p.terms.items():
        rows = [k[inv[i] * m:(inv[i] + 1) * m] for i in range(n)]
        out[tuple(x for r in rows for x in r)] = c
    return Poly._raw(sp, out)


def is_sn_invariant(p):
    """Check invariance under the generators (0 1) and (0 1 ... n-1)."""
    n = p.space.n
    if n == 1:
        return True
    swap = [1, 0] + list(range(2, n))
    cycle = list(range(1, n)) + [0]
    return permute_rows(p, swap) == p and permute_rows(p, cycle) == p
