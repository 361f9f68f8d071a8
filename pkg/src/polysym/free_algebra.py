"""The presentation algebra F = Q[t(w)] and the evaluation map phi.

F is graded by weight (the sum of the exponent vectors of the t-factors), and
gl_m acts on it by the derivations e_ij: t(w) -> t(x_i * dw/dx_j).  All
functions here use 0-based symbol indices; ``raising_action(0, 1, f)`` is
e_12 in one-based notation.
"""

from collections import deque
from functools import lru_cache

from .invariant_ring import orbit_representatives, polarized_power_sum
from .linalg import Echelon
from .polycore import (
    DomainError,
    Poly,
    ResourceLimitError,
    TSpace,
    XSpace,
    _tvar_sort,
    words_up_to,
)


# ---------------------------------------------------------------------------
# bases of weight components

@lru_cache(maxsize=None)
def _tmonomials(alpha, words):
    alpha = tuple(alpha)
    words = [w for w in words if all(a <= b for a, b in zip(w, alpha))]
    out = []

    def rec(idx, remaining, acc):
        if not any(remaining):
            out.append(tuple(acc))
            return
        if idx == len(words):
            return
        w = words[idx]
        rec(idx + 1, remaining, acc)
        e = 0
        rem = remaining
        while True:
            rem = tuple(b - a for a, b in zip(w, rem))
            if min(rem) < 0:
                break
            e += 1
            rec(idx + 1, rem, acc + [(w, e)])

    rec(0, alpha, [])
    sp = TSpace(len(alpha))
    out.sort(key=sp.order_key, reverse=True)
    return tuple(out)


def tmonomials_of_weight(alpha, cap, words=None):
    """All t-monomials of weight alpha in the variables t(w), 1 <= deg w <= cap.

    ``words`` restricts the admitted variables further.  Sorted in decreasing
    monomial order; the empty monomial is returned for alpha = 0.
    """
    alpha = tuple(alpha)
    if any(a < 0 for a in alpha):
        return ()
    if words is None:
        words = words_up_to(len(alpha), cap)
    else:
        words = sorted((tuple(w) for w in words if 1 <= sum(w) <= cap),
                       key=lambda w: _tvar_sort((w, 1)))
    return _tmonomials(alpha, tuple(words))


# ---------------------------------------------------------------------------
# phi

@lru_cache(maxsize=1 << 16)
def phi_monomial(key, n, m):
    """phi of one t-monomial, memoised on its prefixes."""
    if not key:
        return Poly.constant(XSpace(n, m), 1)
    w, e = key[-1]
    rest = key[:-1] if e == 1 else key[:-1] + ((w, e - 1),)
    return phi_monomial(rest, n, m) * polarized_power_sum(w, n)


def phi_eval(f, n):
    """Ring homomorphism F -> Q[V^m], t(w) -> [w]."""
    m = f.space.m
    out = Poly(XSpace(n, m))
    for key, c in f.terms.items():
        out = out + phi_monomial(key, n, m).scale(c)
    return out


def phi_coordinates(key, n, m, alpha):
    """Sparse orbit-basis coordinates of phi(t-monomial) in R^alpha."""
    reps = orbit_representatives(n, m, tuple(alpha))
    p = phi_monomial(key, n, m)
    out = {}
    for i, r in enumerate(reps):
        c = p.terms.get(r)
        if c:
            out[i] = c
    return out


# ---------------------------------------------------------------------------
# gl_m derivations

def _shift(w, i, j):
    w = list(w)
    w[i] += 1
    w[j] -= 1
    return tuple(w)


def raising_action(i, j, f):
    """Apply the derivation e_ij (x_j -> x_i, Leibniz rule) to f.

    Works on t-polynomials (acting on the index words) and on x-polynomials
    (as sum_k x_{ki} d/dx_{kj}).  ``i < j`` raises, ``i > j`` lowers.
    """
    sp = f.space
    m = sp.m
    if not (0 <= i < m and 0 <= j < m) or i == j:
        raise DomainError("need 0 <= i, j < %d with i != j, got (%d, %d)" % (m, i, j))
    out = {}
    if isinstance(sp, TSpace):
        for key, c in f.terms.items():
            for pos, (w, e) in enumerate(key):
                if not w[j]:
                    continue
                coef = c * e * w[j]
                d = dict(key)
                if e == 1:
                    del d[w]
                else:
                    d[w] = e - 1
                w2 = _shift(w, i, j)
                d[w2] = d.get(w2, 0) + 1
                nk = tuple(sorted(d.items(), key=_tvar_sort))
                v = out.get(nk, 0) + coef
                if v:
                    out[nk] = v
                else:
                    del out[nk]
    elif isinstance(sp, XSpace):
        for key, c in f.terms.items():
            for k in range(sp.n):
                a = key[k * m + j]
                if not a:
                    continue
                nk = list(key)
                nk[k * m + j] -= 1
                nk[k * m + i] += 1
                nk = tuple(nk)
                v = out.get(nk, 0) + c * a
                if v:
                    out[nk] = v
                else:
                    del out[nk]
    else:
        raise DomainError("unknown space %r" % (sp,))
    return Poly(sp, out)


def is_highest_weight(f):
    """(True, weight) iff f is a weight vector killed by every e_{i,i+1}."""
    if not f:
        raise DomainError("the zero vector is not a highest weight vector")
    wt = f.multidegree()
    if wt is None:
        return False, None
    m = f.space.m
    for i in range(m - 1):
        if raising_action(i, i + 1, f):
            return False, wt
    return True, wt


def gl_orbit_span(f, max_dim=5000):
    """Basis of the gl_m-submodule generated by a weight vector f.

    Breadth-first closure under all e_ij (i != j, lexicographic order of
    (i, j)), keeping one exact echelon per weight.  The returned elements are
    actual polarizations of f (images under words in the e_ij), each a weight
    vector, in discovery order starting with f.
    """
    wt = f.multidegree()
    if wt is None:
        raise DomainError("gl_orbit_span needs a nonzero multihomogeneous element")
    m = f.space.m
    echelons = {}
    colmaps = {}

    def insert(p):
        w = p.multidegree()
        ech = echelons.setdefault(w, Echelon())
        cols = colmaps.setdefault(w, {})
        vec = {}
        for k, c in p.sorted_terms():
            if k not in cols:
                cols[k] = len(cols)
            vec[cols[k]] = c
        return ech.add(vec)

    insert(f)
    basis = [f]
    queue = deque([f])
    ops = [(i, j) for i in range(m) for j in range(m) if i != j]
    while queue:
        v = queue.popleft()
        for i, j in ops:
            u = raising_action(i, j, v)
            if u and insert(u):
                basis.append(u)
                queue.append(u)
                if len(basis) > max_dim:
                    raise ResourceLimitError("orbit span exceeds %d elements" % max_dim)
    return basis
