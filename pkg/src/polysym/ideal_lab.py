"""Ideal computations in F and R, one weight component at a time.

Every question here is finite dimensional because all ideals involved are
multihomogeneous: membership, generation and minimality are decided by exact
row reduction inside a single weight component.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import permutations
import time

from .charring import secondary_hilbert
from .free_algebra import gl_orbit_span, phi_coordinates, phi_eval, tmonomials_of_weight
from .invariant_ring import OrbitBasis, dim_invariant_component, polarized_power_sum
from .linalg import Echelon, nullspace, primitive
from .notation import invariant, parse_terms, terms_to_tpoly
from .parallel import pool_map
from .polycore import (
    DomainError,
    Poly,
    ResourceLimitError,
    TSpace,
    XSpace,
    tmono_from_words,
    tmono_words,
    words_up_to,
)
from .relations import j222, j32, j42
from . import tables
from .schur import weights_of_degree

REPORT_SCHEMA = "polysym-report/1"


def generation_degree_bound(n):
    """Degree through which ker(phi) is known to be generated: n^2 - n + 2."""
    return n * n - n + 2


N3_DEGREE_BOUND = generation_degree_bound(3)


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _le(a, b):
    return all(x <= y for x, y in zip(a, b))


def _weights_upto(m, max_degree):
    return [a for d in range(max_degree + 1) for a in weights_of_degree(m, d)]


# ---------------------------------------------------------------------------
# kernel components of phi

@lru_cache(maxsize=None)
def _t_basis(n, m, alpha):
    mons = tmonomials_of_weight(alpha, n)
    return mons, {k: i for i, k in enumerate(mons)}


@lru_cache(maxsize=None)
def _kernel_data(n, m, alpha):
    mons, _ = _t_basis(n, m, alpha)
    cols = [phi_coordinates(k, n, m, alpha) for k in mons]
    rels = nullspace(cols)
    sp = TSpace(m)
    basis = tuple(Poly(sp, {mons[i]: c for i, c in rel.items()}) for rel in rels)
    return basis, len(mons) - len(rels)


def kernel_component_basis(n, m, alpha):
    """Basis of the weight-alpha component of ker(phi) in F^n_{n,m}.

    Computed as the exact nullspace of the orbit-coordinate matrix of phi on
    the t-monomials of weight alpha (variables t(w), deg w <= n).
    """
    alpha = tuple(alpha)
    if len(alpha) != m:
        raise DomainError("weight %r has length != m=%d" % (alpha, m))
    return _kernel_data(n, m, alpha)[0]


def phi_rank(n, m, alpha):
    """Rank of phi on the weight-alpha component of F^n."""
    return _kernel_data(n, m, tuple(alpha))[1]


def kernel_dim(n, m, alpha):
    return len(kernel_component_basis(n, m, alpha))


def _kernel_job(args):
    n, m, alpha = args
    return kernel_component_basis(n, m, alpha)


def prefetch_kernels(n, m, weights, jobs=None):
    """Compute kernel bases for many weights (in parallel) and seed the cache."""
    todo = [tuple(a) for a in weights]
    results = pool_map(_kernel_job, [(n, m, a) for a in todo], jobs)
    return dict(zip(todo, results))


# ---------------------------------------------------------------------------
# the ideal (P) generated by the primary generators [x_j^k], k <= n

def _pure_power(m, j, k):
    w = [0] * m
    w[j] = k
    return tuple(w)


@lru_cache(maxsize=None)
def _orbit_basis(n, m, alpha):
    return OrbitBasis(n, m, alpha)


class PrimaryComponent:
    """The weight-alpha component of (P) inside R_{n,m}, in orbit coordinates.

    Spanned by [x_j^k] * b with b running over the orbit basis of weight
    alpha - k e_j.  Labels are ``(j, k, representative)``.
    """

    def __init__(self, n, m, alpha):
        self.n, self.m, self.alpha = n, m, tuple(alpha)
        self.basis = _orbit_basis(n, m, self.alpha)
        self.echelon = Echelon(track=True)
        self.spanning = 0
        for j in range(m):
            for k in range(1, n + 1):
                beta = list(self.alpha)
                beta[j] -= k
                if beta[j] < 0:
                    continue
                sub = _orbit_basis(n, m, tuple(beta))
                pk = polarized_power_sum(_pure_power(m, j, k), n)
                for i, rep in enumerate(sub.representatives):
                    prod = pk * sub.orbit_sum(i)
                    self.echelon.add(self.basis.coords_sparse(prod), label=(j, k, rep))
                    self.spanning += 1

    @property
    def rank(self):
        return self.echelon.rank

    @property
    def quotient_dim(self):
        return len(self.basis) - self.rank

    def vector(self, p):
        if p.space != self.basis.space:
            raise DomainError("polynomial lives in %r, expected %r" % (p.space, self.basis.space))
        if p and p.multidegree() != self.alpha:
            raise DomainError("polynomial is not of multidegree %r" % (self.alpha,))
        return self.basis.coords_sparse(p)

    def normal_form(self, p):
        return self.echelon.normal_form(self.vector(p))

    def certificate(self, p):
        return self.echelon.express(self.vector(p))


@lru_cache(maxsize=None)
def primary_component(n, m, alpha):
    return PrimaryComponent(n, m, tuple(alpha))


def certificate_value(certificate, n, m):
    """Re-multiply a membership certificate: sum c * [x_j^k] * orbit_sum(rep)."""
    out = Poly(XSpace(n, m))
    for (j, k, rep), c in certificate.items():
        beta = XSpace(n, m).weight(rep)
        sub = _orbit_basis(n, m, beta)
        term = polarized_power_sum(_pure_power(m, j, k), n) * sub.orbit_sum(sub.index[rep])
        out = out + term.scale(c)
    return out


@dataclass
class Membership:
    member: bool
    alpha: tuple
    certificate: dict = None

    def to_json(self):
        cert = None
        if self.certificate is not None:
            cert = [
                {"power": [j + 1, k], "orbit": list(rep), "coeff": str(c)}
                for (j, k, rep), c in sorted(self.certificate.items())
            ]
        return {"member": self.member, "multidegree": list(self.alpha), "certificate": cert}


def reduce_mod_P(p):
    """Decide whether the invariant p lies in the ideal (P) of R_{n,m}.

    p must be multihomogeneous.  A member comes with a certificate
    ``{(j, k, rep): coeff}`` such that
    ``sum coeff * [x_j^k] * orbit_sum(rep) == p``.
    """
    sp = p.space
    if not isinstance(sp, XSpace):
        raise DomainError("reduce_mod_P expects an element of R_{n,m}")
    if not p:
        return Membership(True, None, {})
    alpha = p.multidegree()
    if alpha is None:
        raise DomainError("reduce_mod_P needs a multihomogeneous polynomial")
    comp = primary_component(sp.n, sp.m, alpha)
    cert = comp.certificate(p)
    return Membership(cert is not None, alpha, cert)


# ---------------------------------------------------------------------------
# symbol permutations and translate counts

def permute_symbols(f, perm):
    """Image of a t-polynomial under x_j -> x_{perm[j]}."""
    m = f.space.m
    out = {}
    for key, c in f.terms.items():
        words = []
        for w in tmono_words(key):
            nw = [0] * m
            for j, a in enumerate(w):
                nw[perm[j]] = a
            words.append(tuple(nw))
        k = tmono_from_words(words)
        out[k] = out.get(k, 0) + c
    return Poly(f.space, out)


def _projective_class(f):
    lead, c = f.leading_term()
    return frozenset((k, Fraction(v) / c) for k, v in f.terms.items())


def translate_count(f, m=None):
    """Number of S_m-translates of f counted up to nonzero scalars."""
    if m is not None and m != f.space.m:
        f = f.embed(m)
    m = f.space.m
    seen = {_projective_class(permute_symbols(f, p)) for p in permutations(range(m))}
    return len(seen)


# ---------------------------------------------------------------------------
# reports

@dataclass
class Entry:
    key: str
    multidegree: tuple
    kind: str
    status: str
    detail: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "key": self.key,
            "multidegree": list(self.multidegree),
            "kind": self.kind,
            "status": self.status,
            "detail": self.detail,
        }


@dataclass
class TableReport:
    table: str
    entries: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    @property
    def ok(self):
        return all(e.status != "failed" for e in self.entries)

    def counts(self):
        out = {"verified": 0, "failed": 0, "skipped": 0}
        for e in self.entries:
            out[e.status] = out.get(e.status, 0) + 1
        return out

    def failures(self):
        return [e for e in self.entries if e.status == "failed"]

    def to_json(self):
        return {
            "schema": REPORT_SCHEMA,
            "table": self.table,
            "ok": self.ok,
            "counts": self.counts(),
            "entries": [e.to_json() for e in self.entries],
            "notes": list(self.notes),
        }

    def to_tsv(self):
        lines = ["multidegree\tkind\tkey\tstatus\tdetail"]
        for e in self.entries:
            det = ";".join("%s=%s" % (k, _flat(v)) for k, v in sorted(e.detail.items())
                           if k != "certificate")
            lines.append("(%s)\t%s\t%s\t%s\t%s" % (
                ",".join(map(str, e.multidegree)), e.kind, e.key, e.status, det))
        return "\n".join(lines) + "\n"


def _flat(v):
    if isinstance(v, dict):
        return ",".join("%s:%s" % (k, _flat(x)) for k, x in sorted(v.items()))
    if isinstance(v, (list, tuple)):
        return "[" + ",".join(_flat(x) for x in v) + "]"
    return str(v)


def _cert_json(cert):
    return Membership(True, (), cert).to_json()["certificate"]


# ---------------------------------------------------------------------------
# table verification

def _element(text, n, m):
    return invariant(text, n, m)


def _tweight(text, m):
    terms = parse_terms(text, m)
    weights = set()
    for _, words in terms:
        w = [0] * m
        for word in words:
            for j, a in enumerate(word):
                w[j] += a
        weights.add(tuple(w))
    return weights


def _check_zero(text, n, m, alpha, with_cert):
    p = _element(text, n, m)
    res = reduce_mod_P(p)
    detail = {}
    if res.member:
        if certificate_value(res.certificate, n, m) != p:
            return "failed", {"reason": "certificate does not reproduce the element"}
        if with_cert:
            detail["certificate"] = _cert_json(res.certificate)
        return "verified", detail
    return "failed", {"reason": "not congruent to 0 modulo (P)"}


def verify_congruence_table(table, n=3, with_certificates=False):
    """Certify every congruence of the relation table 2 (m=3) or 4 (m=4)."""
    if table == 2:
        rows = [(a, e, name, {3: s3, 4: s4}) for a, e, name, s3, s4 in tables.CONGRUENCES_M3]
        m = 3
    elif table == 4:
        rows = [(a, e, name, {4: s4}) for a, e, name, s4 in tables.CONGRUENCES_M4]
        m = 4
    else:
        raise DomainError("congruence tables are 2 and 4, got %r" % (table,))
    rep = TableReport("table%d" % table)
    for alpha, expr, name, expected in rows:
        detail = {"expression": expr}
        wts = _tweight(expr, m)
        if wts != {tuple(alpha)}:
            detail["reason"] = "expression has weights %s" % sorted(wts)
            rep.entries.append(Entry(name, alpha, "congruence", "failed", detail))
            continue
        status, extra = _check_zero(expr, n, m, alpha, with_certificates)
        detail.update(extra)
        f = terms_to_tpoly(parse_terms(expr, m), m)
        counts = {}
        for mm, want in sorted(expected.items()):
            got = translate_count(f, mm)
            counts["S%d" % mm] = [got, want]
            if got != want:
                status = "failed"
                detail["reason"] = "S_%d translate count %d != %d" % (mm, got, want)
        detail["translates"] = counts
        rep.entries.append(Entry(name, alpha, "congruence", status, detail))
    return rep


def qp_monomials(n, m, alpha):
    """t-monomials of weight alpha in the t(w) with [w] in Q \\ P.

    Those are the words of degree 2..n that are not pure powers.
    """
    words = [w for w in words_up_to(m, n) if sum(w) >= 2 and sum(1 for a in w if a) >= 2]
    return tmonomials_of_weight(alpha, n, words)


def _bracket_text(key, m):
    names = "xyzw" if m <= 4 else None
    parts = []
    for w, e in key:
        if names:
            body = "".join(names[j] + ("^%d" % a if a > 1 else "") for j, a in enumerate(w) if a)
        else:
            body = "*".join("x%d^%d" % (j + 1, a) for j, a in enumerate(w) if a)
        parts.append("[%s]" % body + ("^%d" % e if e > 1 else ""))
    return "".join(parts) or "1"


def _ratio(u, v):
    """c with u == c*v for sparse vectors, or None."""
    if not v:
        return None
    col = min(v)
    if col not in u:
        return None
    c = Fraction(u[col]) / v[col]
    if set(u) != set(v) or any(Fraction(u[k]) != c * v[k] for k in v):
        return None
    return c


def verify_monomial_table(table, n=3, with_certificates=False):
    """Certify every zero and proportionality claim of table 1 (m=3) or 6 (m=4)."""
    if table == 1:
        data, all_zero, m = tables.MONOMIALS_M3, tables.ALL_ZERO_M3, 3
    elif table == 6:
        data, all_zero, m = tables.MONOMIALS_M4, tables.ALL_ZERO_M4, 4
    else:
        raise DomainError("monomial tables are 1 and 6, got %r" % (table,))
    rep = TableReport("table%d" % table)
    for alpha in data:
        comp = primary_component(n, m, alpha)
        listed = set()
        for kind, monos in data[alpha]:
            for text in monos:
                wts = _tweight(text, m)
                if wts != {alpha}:
                    rep.entries.append(Entry(text, alpha, kind, "failed",
                                             {"reason": "weight %s" % sorted(wts)}))
                    continue
                listed.add(tmono_from_words(parse_terms(text, m)[0][1]))
            if kind == "zero":
                for text in monos:
                    status, detail = _check_zero(text, n, m, alpha, with_certificates)
                    rep.entries.append(Entry(text, alpha, "zero", status, detail))
            elif kind == "chain":
                rep.entries.append(_verify_chain(comp, monos, n, m, alpha, with_certificates))
            else:
                for text in monos:
                    rep.entries.append(Entry(text, alpha, "plain", "skipped",
                                             {"reason": "listed without a claim"}))
        if alpha in all_zero:
            ok = comp.quotient_dim == 0
            rep.entries.append(Entry("all monomials", alpha, "zero-component",
                                     "verified" if ok else "failed",
                                     {"dim_R": len(comp.basis), "rank_P": comp.rank}))
        enumerated = {k for k in qp_monomials(n, m, alpha)}
        missing = sorted(_bracket_text(k, m) for k in enumerated - listed)
        if missing:
            rep.notes.append("multidegree %s: monomials not listed: %s"
                             % (alpha, ", ".join(missing)))
    return rep


def _verify_chain(comp, monos, n, m, alpha, with_cert):
    key = " ~ ".join(monos)
    elems = [_element(t, n, m) for t in monos]
    forms = [comp.normal_form(p) for p in elems]
    if not forms[0]:
        return Entry(key, alpha, "chain", "failed", {"reason": "%s is 0 mod (P)" % monos[0]})
    constants = [Fraction(1)]
    certs = []
    for text, p, nf in zip(monos[1:], elems[1:], forms[1:]):
        c = _ratio(nf, forms[0])
        if c is None or c == 0:
            return Entry(key, alpha, "chain", "failed",
                         {"reason": "%s is not proportional to %s mod (P)" % (text, monos[0])})
        diff = p - elems[0].scale(c)
        cert = comp.certificate(diff) if diff else {}
        if cert is None or certificate_value(cert, n, m) != diff:
            return Entry(key, alpha, "chain", "failed", {"reason": "no certificate for " + text})
        constants.append(c)
        certs.append(cert)
    detail = {"constants": [str(c) for c in constants]}
    if with_cert:
        detail["certificates"] = [_cert_json(c) for c in certs]
    return Entry(key, alpha, "chain", "verified", detail)


# ---------------------------------------------------------------------------
# secondary generators

SECONDARY_REFERENCE = {
    2: [((0, 0), "1"), ((1, 1), "[xy]"), ((2, 1), "[x^2y]"), ((1, 2), "[xy^2]"),
        ((2, 2), "[xy]^2"), ((3, 3), "[x^2y][xy^2]")],
    3: tables.SECONDARY_M3,
    4: tables.SECONDARY_M4,
}


def _descending(alpha):
    return all(a >= b for a, b in zip(alpha, alpha[1:]))


def _reference_scope(m, alpha):
    if m == 2:
        return True
    if not _descending(alpha):
        return False
    return m == 3 or all(alpha)


def build_secondary_generators(m, max_degree=N3_DEGREE_BOUND, n=3, descending_only=False):
    """Greedy secondary generators up to ``max_degree``.

    In each weight the monomials in Q \\ P are scanned in decreasing order and
    kept when independent modulo (P).  Returns ``(chosen, report)`` where
    ``chosen`` maps a weight to bracket strings.  The report compares the
    counts with the secondary Hilbert series, with dim R - dim (P) and with
    the reference list for m = 2, 3, 4.
    """
    if n != 3:
        raise DomainError("the secondary Hilbert series is known for n = 3 only")
    hs = secondary_hilbert(m, max_degree)
    reference = {}
    for alpha, text in SECONDARY_REFERENCE.get(m, []):
        reference.setdefault(tuple(alpha), []).append(text)
    rep = TableReport("secondary-m%d" % m)
    chosen = {}
    for alpha in _weights_upto(m, max_degree):
        if descending_only and not _descending(alpha):
            continue
        comp = primary_component(n, m, alpha)
        ech = Echelon()
        for row in comp.echelon.pivots.values():
            ech.add(row)
        picks = []
        if not any(alpha):
            picks.append("1")
        else:
            for key in qp_monomials(n, m, alpha):
                p = _element(_bracket_text(key, m), n, m)
                if ech.add(comp.basis.coords_sparse(p)):
                    picks.append(_bracket_text(key, m))
                if len(picks) == comp.quotient_dim:
                    break
        chosen[alpha] = picks
        detail = {"chosen": len(picks), "hilbert": hs[alpha], "quotient_dim": comp.quotient_dim}
        ok = len(picks) == hs[alpha] == comp.quotient_dim
        if _reference_scope(m, alpha) and m in SECONDARY_REFERENCE:
            listed = reference.get(alpha, [])
            detail["reference"] = len(listed)
            ok = ok and len(listed) == len(picks)
            if listed:
                ref_ech = Echelon()
                for row in comp.echelon.pivots.values():
                    ref_ech.add(row)
                indep = all(ref_ech.add(comp.vector(_element(t, n, m))) for t in listed)
                detail["reference_independent"] = indep
                ok = ok and indep
        if picks or not ok or hs[alpha]:
            rep.entries.append(Entry(" ".join(picks) or "-", alpha, "secondary",
                                     "verified" if ok else "failed", detail))
    return chosen, rep


# ---------------------------------------------------------------------------
# generator sets

@dataclass
class Generator:
    name: str
    element: Poly
    weight: tuple


@dataclass
class GeneratorSet:
    m: int
    members: list
    provenance: dict

    def __len__(self):
        return len(self.members)

    def by_weight(self):
        out = {}
        for g in self.members:
            out.setdefault(g.weight, []).append(g)
        return out

    def max_degree(self):
        return max((sum(g.weight) for g in self.members), default=0)


def orbit_generators(m, seeds=None):
    """Generator set: gl_m-orbit spans of J_{3,2}, J_{4,2}, J_{2,2,2} in m symbols."""
    if m < 2:
        raise DomainError("need m >= 2")
    if seeds is None:
        seeds = [j32(), j42()] + ([j222()] if m >= 3 else [])
    members = []
    prov = {}
    for rec in seeds:
        f = rec.element.embed(m) if rec.element.space.m < m else rec.element
        span = gl_orbit_span(f)
        prov[rec.name] = len(span)
        for i, g in enumerate(span):
            members.append(Generator("%s#%d" % (rec.name, i), g, g.multidegree()))
    return GeneratorSet(m, members, prov)


@dataclass
class CheckResult:
    ok: bool
    per_degree: dict
    failures: list
    info: dict = field(default_factory=dict)

    def to_json(self):
        return {
            "schema": REPORT_SCHEMA,
            "ok": self.ok,
            "per_degree": {str(d): v for d, v in sorted(self.per_degree.items())},
            "failures": self.failures,
            "info": self.info,
        }


def _vector(poly, index):
    return {index[k]: c for k, c in poly.terms.items()}


def _poly_from_row(row, mons, sp):
    return Poly(sp, {mons[i]: c for i, c in row.items()})


def _products_span(n, m, alpha, lower, extra, target):
    """Echelon of span(extra + {t(w) * b : b in lower[alpha - w]}).

    Stops once the rank reaches ``target``.
    """
    mons, index = _t_basis(n, m, alpha)
    sp = TSpace(m)
    ech = Echelon()
    for g in extra:
        ech.add(_vector(g, index))
    if ech.rank >= target:
        return ech
    for w in words_up_to(m, n):
        if not _le(w, alpha):
            continue
        beta = _sub(alpha, w)
        basis = lower.get(beta)
        if not basis:
            continue
        tw = Poly.monomial(sp, sp.variable(w))
        for b in basis:
            ech.add(_vector(tw * b, index))
            if ech.rank >= target:
                return ech
    return ech


def _generation_job(args):
    n, m, alpha, extra, lower, target = args
    ech = _products_span(n, m, alpha, lower, extra, target)
    mons, _ = _t_basis(n, m, alpha)
    sp = TSpace(m)
    basis = [_poly_from_row(r, mons, sp) for _, r in sorted(ech.pivots.items())]
    return ech.rank, basis


def check_kernel_membership(G, n=3):
    bad = [g.name for g in G.members if phi_eval(g.element, n)]
    return bad


def check_generation(G, n=3, m=None, max_degree=N3_DEGREE_BOUND, jobs=None):
    """Does G generate ker(phi) in every weight of degree <= max_degree?

    The ideal component I^alpha is built from G's members of weight alpha
    and the products t(w) * I^(alpha - w); it is compared with the kernel
    dimension dim F^alpha - rank(phi).
    """
    m = G.m if m is None else m
    bad = check_kernel_membership(G, n)
    if bad:
        return CheckResult(False, {}, [{"reason": "not in the kernel", "members": bad}])
    gens = G.by_weight()
    weights = _weights_upto(m, max_degree)
    kernels = prefetch_kernels(n, m, weights, jobs)
    ideal = {}
    per_degree = {}
    failures = []
    for d in range(max_degree + 1):
        level = [a for a in weights if sum(a) == d]
        args = []
        for a in level:
            need = {}
            for w in words_up_to(m, n):
                if _le(w, a):
                    b = _sub(a, w)
                    if ideal.get(b):
                        need[b] = ideal[b]
            args.append((n, m, a, [g.element for g in gens.get(a, [])], need, len(kernels[a])))
        results = pool_map(_generation_job, args, jobs)
        ok_d = True
        for a, (rk, basis) in zip(level, results):
            ideal[a] = basis
            dim = len(kernels[a])
            if rk != dim:
                ok_d = False
                failures.append({"multidegree": list(a), "rank": rk, "kernel_dim": dim,
                                 "deficit": dim - rk})
        per_degree[d] = ok_d
    info = {"generators": len(G), "max_degree": max_degree,
            "kernel_dims": {d: sum(len(kernels[a]) for a in weights if sum(a) == d)
                            for d in range(max_degree + 1)}}
    return CheckResult(not failures, per_degree, failures, info)


def _minimality_job(args):
    n, m, alpha, lower, members = args
    mons, index = _t_basis(n, m, alpha)
    fk = _products_span(n, m, alpha, lower, [], float("inf"))
    base = fk.rank
    witness = [name for name, g in members if not fk.add(_vector(g, index))]
    return base, witness


def check_minimality(G, n=3, m=None, degrees=None, jobs=None):
    """Are G's members independent modulo F^+ * ker(phi), with the right count?

    For each degree d holding members of G and each weight alpha of degree d,
    the members of weight alpha must be independent modulo
    (F^+ K)^alpha = sum_w t(w) K^(alpha - w), and their number must equal
    dim K^alpha - dim (F^+ K)^alpha.
    """
    m = G.m if m is None else m
    gens = G.by_weight()
    if degrees is None:
        degrees = sorted({sum(a) for a in gens})
    per_degree = {}
    failures = []
    counts = {}
    for d in degrees:
        level = weights_of_degree(m, d)
        lower_weights = sorted({_sub(a, w) for a in level for w in words_up_to(m, n)
                                if _le(w, a)})
        kernels = prefetch_kernels(n, m, lower_weights + list(level), jobs)
        args = []
        for a in level:
            lower = {}
            for w in words_up_to(m, n):
                if _le(w, a):
                    b = _sub(a, w)
                    if kernels[b]:
                        lower[b] = kernels[b]
            members = [(g.name, g.element) for g in gens.get(a, [])]
            args.append((n, m, a, lower, members))
        results = pool_map(_minimality_job, args, jobs)
        ok_d = True
        total = 0
        for a, (base, witness) in zip(level, results):
            k = len(kernels[a])
            have = len(gens.get(a, []))
            total += have
            if witness or have != k - base:
                ok_d = False
                failures.append({"multidegree": list(a), "kernel_dim": k, "FK_dim": base,
                                 "members": have, "dependent": witness})
        per_degree[d] = ok_d
        counts[d] = total
    beta = G.max_degree()
    return CheckResult(not failures, per_degree, failures,
                       {"generators": len(G), "per_degree_count": counts, "beta": beta})


# ---------------------------------------------------------------------------
# lower bound instance

def lowerbound_check(n, time_budget=None, jobs=None):
    """Is the Gram relation J outside F^+ * ker(phi) for m = n?

    Returns a dict with ``status`` in {"pass", "fail", "unsupported"}.
    """
    if n not in (2, 3, 4):
        return {"n": n, "status": "unsupported", "reason": "only n = 2, 3, 4 are attempted"}
    from .relations import gram_relation
    start = time.monotonic()
    m = n
    alpha = (2,) * n
    J = gram_relation(n).element
    try:
        lower_weights = sorted({_sub(alpha, w) for w in words_up_to(m, n) if _le(w, alpha)})
        kernels = {}
        for b in lower_weights:
            if time_budget is not None and time.monotonic() - start > time_budget:
                raise ResourceLimitError("time budget exhausted")
            kernels[b] = kernel_component_basis(n, m, b)
        lower = {b: k for b, k in kernels.items() if k}
        fk = _products_span(n, m, alpha, lower, [], float("inf"))
        if time_budget is not None and time.monotonic() - start > time_budget:
            raise ResourceLimitError("time budget exhausted")
        _, index = _t_basis(n, m, alpha)
        in_kernel = not phi_eval(J, n)
        inside = fk.contains(_vector(J, index))
    except ResourceLimitError as exc:
        return {"n": n, "status": "unsupported", "reason": str(exc)}
    ok = in_kernel and not inside
    return {
        "n": n,
        "status": "pass" if ok else "fail",
        "J_in_kernel": in_kernel,
        "J_in_FK": inside,
        "FK_dim": fk.rank,
        "kernel_dim": kernel_dim(n, m, alpha),
        "F_dim": len(_t_basis(n, m, alpha)[0]),
    }
