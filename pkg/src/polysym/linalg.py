"""Exact sparse row reduction over Q.

Vectors are dicts ``column -> coefficient`` with integer column indices;
column 0 is the most significant (callers index their monomials in
decreasing monomial order).  Rows are stored fraction-free: each pivot row is
a primitive integer vector, and elimination uses ``a*v - b*row`` followed by
removal of the content, so no rational arithmetic happens inside the loop.
"""

from fractions import Fraction
from math import gcd


def _lcm(a, b):
    return a // gcd(a, b) * b


def primitive(vec):
    """Scale a rational vector to a primitive integer vector.

    Returns ``(ivec, factor)`` with ``ivec == factor * vec``.  The sign is
    chosen so that the leading (smallest-column) entry is positive.
    """
    vec = {k: c for k, c in vec.items() if c}
    if not vec:
        return {}, Fraction(1)
    den = 1
    for c in vec.values():
        if isinstance(c, Fraction):
            den = _lcm(den, c.denominator)
    g = 0
    ivec = {}
    for k, c in vec.items():
        v = int(c * den)
        ivec[k] = v
        g = gcd(g, v)
    lead = ivec[min(ivec)]
    if lead < 0:
        g = -g
    if g != 1:
        ivec = {k: v // g for k, v in ivec.items()}
    return ivec, Fraction(den, g)


def _content_divide(vec, combo):
    g = 0
    for v in vec.values():
        g = gcd(g, v)
        if g == 1:
            return vec, combo
    if g > 1:
        vec = {k: v // g for k, v in vec.items()}
        if combo is not None:
            combo = {k: c / g for k, c in combo.items()}
    return vec, combo


class Echelon:
    """Incrementally built row space with pairwise distinct pivot columns.

    With ``track=True`` every stored row remembers its expression as a
    rational combination of the labelled input rows, which makes nullspace
    vectors and membership certificates available.
    """

    def __init__(self, track=False):
        self.track = track
        self.pivots = {}      # pivot column -> integer row (dict)
        self.combos = {}      # pivot column -> {label: Fraction}

    @property
    def rank(self):
        return len(self.pivots)

    def __len__(self):
        return len(self.pivots)

    def _eliminate(self, vec, combo, col):
        row = self.pivots[col]
        a = row[col]
        b = vec[col]
        g = gcd(a, b)
        a //= g
        b //= g
        out = {k: a * v for k, v in vec.items()} if a != 1 else dict(vec)
        for k, v in row.items():
            nv = out.get(k, 0) - b * v
            if nv:
                out[k] = nv
            else:
                out.pop(k, None)
        if combo is not None:
            rc = self.combos.get(col, {})
            nc = {k: a * v for k, v in combo.items()} if a != 1 else dict(combo)
            for k, v in rc.items():
                x = nc.get(k, 0) - b * v
                if x:
                    nc[k] = x
                else:
                    nc.pop(k, None)
            combo = nc
        return _content_divide(out, combo)

    def reduce(self, vec, combo=None, full=False):
        """Reduce ``vec`` (integer dict) by the stored rows.

        Returns ``(remainder, combo)``; the remainder equals ``c * vec - (row
        space element)`` for a nonzero scalar c that is folded into ``combo``.
        With ``full=False`` only leading entries are eliminated, which is
        enough to decide membership; ``full=True`` yields a remainder with no
        pivot columns in its support.
        """
        pivots = self.pivots
        if not full:
            while vec:
                lead = min(vec)
                if lead not in pivots:
                    break
                vec, combo = self._eliminate(vec, combo, lead)
            return vec, combo
        cursor = -1
        while True:
            cand = [k for k in vec if k > cursor and k in pivots]
            if not cand:
                return vec, combo
            col = min(cand)
            vec, combo = self._eliminate(vec, combo, col)
            cursor = col

    def add(self, vec, label=None):
        """Insert a rational vector; returns True iff it raised the rank.

        When tracking, a dependent vector leaves its relation in
        :attr:`last_relation` (a combination of labels equal to zero).
        """
        ivec, factor = primitive(vec)
        combo = {label: factor} if self.track else None
        rem, combo = self.reduce(ivec, combo)
        if not rem:
            self.last_relation = combo
            return False
        if rem[min(rem)] < 0:
            rem = {k: -v for k, v in rem.items()}
            if combo is not None:
                combo = {k: -v for k, v in combo.items()}
        lead = min(rem)
        self.pivots[lead] = rem
        if combo is not None:
            self.combos[lead] = combo
        self.last_relation = None
        return True

    def contains(self, vec):
        ivec, _ = primitive(vec)
        rem, _ = self.reduce(ivec)
        return not rem

    def normal_form(self, vec):
        """Canonical representative of ``vec`` modulo the row space (rational)."""
        ivec, factor = primitive(vec)
        rem, combo = self.reduce(ivec, {None: factor}, full=True)
        scale = combo[None]
        return {k: Fraction(v) / scale for k, v in rem.items()}

    def express(self, vec):
        """Write ``vec`` as a combination of labelled inputs, or None.

        Requires ``track=True``.  Returns ``{label: Fraction}`` with
        ``sum(coef * input[label]) == vec``.
        """
        if not self.track:
            raise RuntimeError("express() needs a tracking echelon")
        ivec, factor = primitive(vec)
        rem, combo = self.reduce(ivec, {None: factor})
        if rem:
            return None
        # combo[None]*vec + sum(combo[l]*input[l]) == 0
        s = combo.pop(None)
        return {k: -c / s for k, c in combo.items() if c}


def rank(rows):
    """Exact rank of a sequence of rational sparse vectors."""
    e = Echelon()
    for r in rows:
        e.add(r)
    return e.rank


def nullspace(columns):
    """Basis of the linear relations among ``columns``.

    ``columns`` is a sequence of sparse vectors ``v_0, v_1, ...``; each
    returned dict ``{i: c_i}`` satisfies ``sum c_i v_i == 0``.  The basis has
    one element per column that is dependent on its predecessors.
    """
    e = Echelon(track=True)
    out = []
    for i, v in enumerate(columns):
        if not e.add(v, label=i):
            rel, _ = primitive(e.last_relation)
            out.append(rel)
    return out


class ComponentMatrix:
    """Rows of one weight component, in coordinates of a fixed basis.

    ``columns`` lists the basis keys in decreasing order; rows are added as
    key -> coefficient maps and translated to column indices.
    """

    def __init__(self, alpha, columns, track=False):
        self.alpha = tuple(alpha)
        self.columns = list(columns)
        self.index = {k: i for i, k in enumerate(self.columns)}
        self.labels = []
        self.echelon = Echelon(track=track)

    def to_vector(self, terms):
        idx = self.index
        try:
            return {idx[k]: c for k, c in terms.items()}
        except KeyError as exc:
            raise ValueError("term %r outside component %r" % (exc.args[0], self.alpha))

    def add_row(self, terms, label=None):
        self.labels.append(label)
        return self.echelon.add(self.to_vector(terms), label=label)

    @property
    def rank(self):
        return self.echelon.rank

    @property
    def ambient_dim(self):
        return len(self.columns)

    def contains(self, terms):
        return self.echelon.contains(self.to_vector(terms))
