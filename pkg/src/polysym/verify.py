"""Batch checks on the named relations, shared by the CLI and the tests."""

from itertools import combinations_with_replacement

from .free_algebra import gl_orbit_span, is_highest_weight, phi_eval
from .parallel import pool_map
from .polycore import DomainError, words_up_to
from .relations import gram_relation, j222, j32, j42, psi

NAMED = {"j32": j32, "j42": j42, "j222": j222}


def psi_tuples(n, m, max_degree):
    """Multisets of n+1 monomials in m symbols with total degree <= max_degree."""
    words = words_up_to(m, max_degree - n)
    for combo in combinations_with_replacement(words, n + 1):
        if sum(map(sum, combo)) <= max_degree:
            yield combo


def _psi_job(args):
    n, combo = args
    return bool(phi_eval(psi(n, list(combo)), n))


def verify_psi(n, m, max_degree, jobs=None):
    """phi(psi_{n+1}(w_1..w_{n+1})) == 0 for every multiset in range."""
    if max_degree < n + 1:
        return {"n": n, "m": m, "max_degree": max_degree, "checked": 0, "failures": [], "ok": True}
    tuples = list(psi_tuples(n, m, max_degree))
    bad = pool_map(_psi_job, [(n, c) for c in tuples], jobs, chunksize=256)
    failures = [[list(w) for w in c] for c, b in zip(tuples, bad) if b]
    return {"n": n, "m": m, "max_degree": max_degree, "checked": len(tuples),
            "failures": failures, "ok": not failures}


def verify_gram(n, m=None):
    """phi(J) == 0 and J is a highest weight vector of weight (2,...,2)."""
    rec = gram_relation(n, m)
    killed = not phi_eval(rec.element, n)
    hw, weight = is_highest_weight(rec.element)
    ok = killed and hw and weight == rec.weight
    return {"name": rec.name, "n": n, "m": rec.element.space.m, "terms": len(rec.element.terms),
            "phi_zero": killed, "highest_weight": hw,
            "weight": list(weight) if weight else None, "ok": ok}


def verify_explicit(name, n=3):
    """Form A (via psi) equals form B (literal expansion); phi kills it; weight check."""
    if name not in ("j32", "j42"):
        raise DomainError("explicit forms exist for j32 and j42, not %r" % (name,))
    rec = NAMED[name]()
    a, b = rec.forms["A"], rec.forms["B"]
    same = a == b
    killed = not phi_eval(a, n)
    hw, weight = is_highest_weight(a)
    ok = same and killed and hw and weight == rec.weight
    return {"name": rec.name, "forms_equal": same, "phi_zero": killed,
            "highest_weight": hw, "weight": list(weight) if weight else None,
            "terms": len(a.terms), "ok": ok}


def relation_in(name, m):
    """A named relation embedded into m symbols."""
    if name == "gram":
        return gram_relation(m).element
    if name not in NAMED:
        raise DomainError("unknown relation %r (choose from j32, j42, j222, gram)" % (name,))
    el = NAMED[name]().element
    if el.space.m > m:
        raise DomainError("%s needs m >= %d" % (name, el.space.m))
    return el.embed(m) if el.space.m < m else el


def orbit_span_report(name, m, n=3):
    """Dimension of the gl_m-span of a named relation; every member phi-killed."""
    f = relation_in(name, m)
    span = gl_orbit_span(f)
    bad = [i for i, g in enumerate(span) if phi_eval(g, n)]
    return {"relation": name, "m": m, "dimension": len(span), "phi_zero": not bad,
            "ok": not bad}
