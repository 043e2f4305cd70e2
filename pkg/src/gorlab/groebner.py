"""Exact Groebner machinery: reduced bases, membership, colon ideals,
Hilbert data, codimension, regular sequences, minimal generators.

Buchberger with the normal selection strategy and both classical criteria.
Everything is deterministic: for a fixed monomial order the reduced basis is
the unique reduced Groebner basis, sorted by descending leading monomial.
"""

from fractions import Fraction

from . import linalg
from .errors import (
    FieldMismatch,
    GorlabError,
    NotArtinian,
    UnitIdeal,
    ZeroDivisorInput,
    ZeroElement,
)
from .poly import (
    GREVLEX,
    Polynomial,
    m_deg,
    m_div,
    m_divides,
    m_gcd,
    m_lcm,
    m_mul,
)

DEGREE_CAP = 12


def _poly_sort_key(p):
    ring = p.ring
    return tuple(ring.key(m) for m, _ in p.sorted_terms())


def normal_form(p, basis):
    """Fully reduce p modulo a list of nonzero polynomials (tail included)."""
    if not basis:
        return p
    ring = p.ring
    F = ring.field
    key = ring.key
    lead = [(g.leading_monomial(), g.leading_coeff(), g) for g in basis]
    rem = dict(p.terms)
    out = {}
    while rem:
        lm = max(rem, key=key)
        lc = rem.pop(lm)
        hit = None
        for glm, glc, g in lead:
            q = m_div(lm, glm)
            if q is not None:
                hit = (q, glc, g)
                break
        if hit is None:
            out[lm] = lc
            continue
        q, glc, g = hit
        c = F.div(lc, glc)
        for m, gc in g.terms.items():
            mm = m_mul(m, q)
            if mm == lm:
                continue
            s = F.sub(rem.get(mm, F.zero), F.mul(c, gc))
            if F.is_zero(s):
                rem.pop(mm, None)
            else:
                rem[mm] = s
    return Polynomial(ring, out)


def _spoly(f, g):
    ring = f.ring
    F = ring.field
    lf, lg = f.leading_monomial(), g.leading_monomial()
    lcm = m_lcm(lf, lg)
    mf = m_div(lcm, lf)
    mg = m_div(lcm, lg)
    a = f.scale_monomial(mf, F.inv(f.leading_coeff()))
    b = g.scale_monomial(mg, F.inv(g.leading_coeff()))
    return a - b


def buchberger(gens, order=None):
    """Reduced Groebner basis of the given generators.

    Returns a tuple of monic polynomials sorted by descending leading
    monomial; independent of the input order of the generators.
    """
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return ()
    ring = gens[0].ring
    for g in gens:
        if g.ring != ring:
            raise FieldMismatch("generators from different rings")
    if order is not None and order != ring.order:
        ring2 = ring.with_order(order)
        gens = [Polynomial(ring2, dict(g.terms)) for g in gens]
        ring = ring2
    key = ring.key

    G = sorted((g.monic() for g in gens), key=_poly_sort_key, reverse=True)
    # drop duplicates up front
    seen, uniq = set(), []
    for g in G:
        fp = frozenset(g.terms.items())
        if fp not in seen:
            seen.add(fp)
            uniq.append(g)
    G = uniq

    pairs = {}
    done = set()

    def push(i, j):
        if i > j:
            i, j = j, i
        lcm = m_lcm(G[i].leading_monomial(), G[j].leading_monomial())
        pairs[(i, j)] = lcm

    for i in range(len(G)):
        for j in range(i + 1, len(G)):
            push(i, j)

    while pairs:
        (i, j), lcm = min(pairs.items(), key=lambda kv: (key(kv[1]), kv[0]))
        del pairs[(i, j)]
        done.add((i, j))
        li, lj = G[i].leading_monomial(), G[j].leading_monomial()
        if m_mul(li, lj) == lcm:
            continue  # coprime leading terms
        skip = False
        for k in range(len(G)):
            if k in (i, j):
                continue
            if not m_divides(G[k].leading_monomial(), lcm):
                continue
            a = (min(i, k), max(i, k))
            b = (min(j, k), max(j, k))
            if a in done and b in done:
                skip = True
                break
        if skip:
            continue
        r = normal_form(_spoly(G[i], G[j]), G)
        if r.is_zero():
            continue
        G.append(r.monic())
        new = len(G) - 1
        for k in range(new):
            push(k, new)

    # minimalize: drop elements whose lead is divisible by another lead
    G.sort(key=lambda g: key(g.leading_monomial()))
    minimal = []
    for idx, g in enumerate(G):
        lm = g.leading_monomial()
        if any(
            m_divides(h.leading_monomial(), lm)
            for pos, h in enumerate(G)
            if pos != idx and (key(h.leading_monomial()), pos) < (key(lm), idx)
            or (pos != idx and h.leading_monomial() != lm and m_divides(h.leading_monomial(), lm))
        ):
            continue
        if any(
            h.leading_monomial() == lm for h in minimal
        ):
            continue
        minimal.append(g)
    # full tail reduction for the canonical reduced basis
    reduced = []
    for idx, g in enumerate(minimal):
        others = [h for pos, h in enumerate(minimal) if pos != idx]
        r = normal_form(g, others) if others else g
        if not r.is_zero():
            reduced.append(r.monic())
    reduced.sort(key=lambda g: key(g.leading_monomial()), reverse=True)
    return tuple(reduced)


class HilbertSeries:
    """Rational series numerator / (1 - t)^denom_power with integer numerator."""

    __slots__ = ("numerator", "denom_power")

    def __init__(self, numerator, denom_power):
        num = list(numerator)
        while num and num[-1] == 0:
            num.pop()
        self.numerator = tuple(num)
        self.denom_power = denom_power

    def expand(self, upto):
        """Coefficients of the power series through degree `upto` inclusive."""
        out = [0] * (upto + 1)
        for i, c in enumerate(self.numerator):
            if i <= upto:
                out[i] = c
        for _ in range(self.denom_power):  # repeated partial sums = /(1-t)
            total = 0
            for d in range(upto + 1):
                total += out[d]
                out[d] = total
        return out

    def reduced(self):
        """Cancel all (1 - t) factors; returns (numerator tuple, denom_power)."""
        num = list(self.numerator)
        power = self.denom_power
        while power > 0 and num and sum(num) == 0:
            # divide by (1 - t): synthetic division at t = 1
            acc = 0
            quot = []
            for c in num[:-1]:
                acc += c
                quot.append(acc)
            num = quot
            while num and num[-1] == 0:
                num.pop()
            power -= 1
        return tuple(num), power

    def as_artinian_polynomial(self):
        """The numerator after full cancellation, when the series is a polynomial."""
        num, power = self.reduced()
        return num if power == 0 else None

    def __sub__(self, other):
        if self.denom_power != other.denom_power:
            raise GorlabError("series over different denominators")
        n = max(len(self.numerator), len(other.numerator))
        a = list(self.numerator) + [0] * (n - len(self.numerator))
        b = list(other.numerator) + [0] * (n - len(other.numerator))
        return HilbertSeries([x - y for x, y in zip(a, b)], self.denom_power)

    def __eq__(self, other):
        return (
            isinstance(other, HilbertSeries)
            and self.reduced() == other.reduced()
        )

    def __hash__(self):
        return hash(self.reduced())

    def __str__(self):
        num = _int_poly_str(self.numerator)
        if self.denom_power == 0:
            return num
        return f"({num}) / (1-t)^{self.denom_power}"


def _int_poly_str(coeffs):
    if not coeffs:
        return "0"
    parts = []
    for i, c in enumerate(coeffs):
        if c == 0:
            continue
        if i == 0:
            body = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            body = f"{mag}t" if i == 1 else f"{mag}t^{i}"
        parts.append(("-" if c < 0 else "+", body))
    sign, body = parts[0]
    out = body if sign == "+" else f"-{body}"
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# monomial-ideal combinatorics (staircase data feeding Hilbert series)
# ---------------------------------------------------------------------------

def _minimalize_monomials(mons):
    mons = sorted(set(mons), key=lambda m: (m_deg(m), m))
    out = []
    for m in mons:
        if not any(m_divides(p, m) for p in out):
            out.append(m)
    return out


def _kpoly(mons, cache=None):
    """Numerator of the Hilbert series of a monomial quotient, as {degree: coeff}."""
    mons = _minimalize_monomials(mons)
    if cache is None:
        cache = {}
    key = tuple(mons)
    got = cache.get(key)
    if got is not None:
        return got
    if not mons:
        res = {0: 1}
    elif len(mons) == 1:
        res = {0: 1, m_deg(mons[0]): -1}
    else:
        supports = [tuple(i for i, e in enumerate(m) if e) for m in mons]
        if all(len(s) == 1 for s in supports) and len({s[0] for s in supports}) == len(mons):
            # pure powers of distinct variables: product formula
            res = {0: 1}
            for m in mons:
                d = m_deg(m)
                nxt = {}
                for e, c in res.items():
                    nxt[e] = nxt.get(e, 0) + c
                    nxt[e + d] = nxt.get(e + d, 0) - c
                res = {e: c for e, c in nxt.items() if c}
        else:
            # split on a variable occurring in a mixed generator
            pivot = None
            for m, s in zip(mons, supports):
                if len(s) > 1:
                    pivot = s[0]
                    break
            nvars = len(mons[0])
            xv = tuple(1 if i == pivot else 0 for i in range(nvars))
            plus = _kpoly(mons + [xv], cache)
            colon = _kpoly(
                [tuple(e - 1 if i == pivot and e > 0 else e for i, e in enumerate(m)) for m in mons],
                cache,
            )
            res = dict(plus)
            for e, c in colon.items():
                res[e + 1] = res.get(e + 1, 0) + c
            res = {e: c for e, c in res.items() if c}
    cache[key] = res
    return res


def _monomial_dimension(mons, nvars):
    """Krull dimension of the quotient by a monomial ideal."""
    mons = _minimalize_monomials(mons)
    if any(m_deg(m) == 0 for m in mons):
        raise UnitIdeal("unit ideal has no dimension")
    best = 0
    for mask in range(1 << nvars):
        keep = {i for i in range(nvars) if mask >> i & 1}
        if any(all(i in keep for i, e in enumerate(m) if e) for m in mons):
            continue
        best = max(best, len(keep))
    return best


# ---------------------------------------------------------------------------
# ideals
# ---------------------------------------------------------------------------

class Ideal:
    """Homogeneous ideal with cached reduced Groebner bases per order."""

    def __init__(self, ring, gens):
        self.ring = ring
        clean = []
        for g in gens:
            g = ring.coerce(g)
            if not g.is_zero():
                clean.append(g)
        self.gens = tuple(clean)
        self._gb = {}
        self._hilbert = None

    def groebner(self, order=None):
        order = order or self.ring.order
        got = self._gb.get(order)
        if got is None:
            got = buchberger(list(self.gens), order)
            self._gb[order] = got
        return got

    def leading_monomials(self):
        return [g.leading_monomial() for g in self.groebner()]

    def member(self, p):
        p = self.ring.coerce(p)
        return normal_form(p, list(self.groebner())).is_zero()

    def normal_form(self, p):
        return normal_form(self.ring.coerce(p), list(self.groebner()))

    def equals(self, other):
        return self.groebner() == other.groebner()

    def contains_ideal(self, other):
        return all(self.member(g) for g in other.gens)

    def __eq__(self, other):
        return isinstance(other, Ideal) and self.ring == other.ring and self.equals(other)

    def __hash__(self):
        return hash((self.ring, self.groebner()))

    def plus(self, extra):
        return Ideal(self.ring, list(self.gens) + [self.ring.coerce(g) for g in extra])

    def colon(self, f):
        return colon_ideal(self, f)

    def hilbert_series(self):
        if self._hilbert is None:
            self._hilbert = hilbert_series(self)
        return self._hilbert

    def codimension(self):
        return codimension(self)

    def minimal_generators(self):
        return minimal_generators(self)

    def hilbert_function(self, cap=DEGREE_CAP):
        return hilbert_function(self, cap)

    def is_zero(self):
        return not self.gens

    def __repr__(self):
        return f"Ideal({', '.join(str(g) for g in self.gens)})"


def ideal_member(p, ideal):
    return ideal.member(p)


def ideal_equal(a, b):
    return a.equals(b)


def colon_ideal(ideal, f):
    """I : (f) through one auxiliary elimination variable.

    I : (f) = (I intersect (f)) / f, with the intersection computed from
    u*I + (1-u)*(f) by eliminating u.
    """
    f = ideal.ring.coerce(f)
    if f.is_zero():
        raise ZeroDivisorInput("colon by zero")
    ring = ideal.ring
    ext = ring.extended()
    u = ext.var(0)
    lifted = [g.lift_to(ext) for g in ideal.gens]
    fe = f.lift_to(ext)
    gens = [u * g for g in lifted] + [(ext.one - u) * fe]
    basis = buchberger(gens)
    out = []
    for g in basis:
        if all(m[0] == 0 for m in g.terms):
            inter = g.project_from_extension(ring)
            out.append(inter.divide_exact(f))
    return Ideal(ring, out)


def hilbert_series(ideal):
    """Series of ring/ideal from the staircase of the leading-term ideal."""
    nvars = ideal.ring.n
    lead = ideal.leading_monomials()
    kp = _kpoly(lead)
    top = max(kp) if kp else 0
    num = [kp.get(i, 0) for i in range(top + 1)]
    return HilbertSeries(num, nvars)


def hilbert_function(ideal, cap=DEGREE_CAP):
    """(dim of quotient in degree 0, 1, ...) up to the first zero.

    Raises NotArtinian when no zero appears by the cap.
    """
    series = ideal.hilbert_series().expand(cap)
    out = []
    for v in series:
        if v == 0:
            return tuple(out)
        out.append(v)
    raise NotArtinian(f"quotient still has dimension {series[cap]} in degree {cap}")


def codimension(ideal):
    """Height of a homogeneous ideal: nvars minus the staircase dimension."""
    lead = ideal.leading_monomials()
    if any(m_deg(m) == 0 for m in lead):
        raise UnitIdeal("the unit ideal has no codimension")
    return ideal.ring.n - _monomial_dimension(lead, ideal.ring.n)


def is_regular_sequence(elements):
    """Homogeneous criterion: codimension of the generated ideal equals the length."""
    elems = list(elements)
    if not elems:
        return True
    ring = elems[0].ring
    for e in elems:
        if e.is_zero():
            raise ZeroElement("zero entry in a would-be regular sequence")
        if not e.is_homogeneous():
            raise GorlabError("regular-sequence test requires homogeneous elements")
    try:
        return codimension(Ideal(ring, elems)) == len(elems)
    except UnitIdeal:
        return False


# ---------------------------------------------------------------------------
# minimal generators by degreewise linear algebra
# ---------------------------------------------------------------------------

def _poly_to_vector(p, basis_index, field):
    v = [field.zero] * len(basis_index)
    for m, c in p.terms.items():
        v[basis_index[m]] = c
    return v


def minimal_generators(ideal):
    """Minimal homogeneous generators plus a degree histogram.

    Works degree by degree: new generators in degree d are the input
    generators of degree d that are independent from (ring degree 1) * I_{d-1}.
    Returned generators are monic, ordered by (degree, descending lead).
    """
    ring = ideal.ring
    F = ring.field
    gens = list(ideal.gens)
    if not gens:
        return [], {}
    by_degree = {}
    for g in gens:
        d = g.homogeneous_degree()
        if d is None:
            raise GorlabError("minimal generators need homogeneous input")
        by_degree.setdefault(d, []).append(g)
    for d in by_degree:
        by_degree[d].sort(key=_poly_sort_key, reverse=True)

    lo, hi = min(by_degree), max(by_degree)
    chosen = []
    histogram = {}
    prev_basis = []  # basis polynomials of I_{d-1}
    for d in range(lo, hi + 1):
        mons = ring.monomials_of_degree(d)
        index = {m: i for i, m in enumerate(mons)}
        span = linalg.Span(F, len(mons))
        basis_d = []
        for p in prev_basis:
            for i in range(ring.n):
                q = p * ring.var(i)
                if span.add(_poly_to_vector(q, index, F)):
                    basis_d.append(q)
        for g in by_degree.get(d, []):
            if span.add(_poly_to_vector(g, index, F)):
                basis_d.append(g)
                chosen.append(g.monic())
                histogram[d] = histogram.get(d, 0) + 1
        prev_basis = basis_d
    return chosen, histogram


def span_membership_oracle(ideal, p):
    """Ideal membership by brute-force linear algebra, no Groebner involved.

    Spans { m * g : g generator, deg(m * g) = deg p } degree-homogeneously.
    Only meaningful for homogeneous p.
    """
    ring = ideal.ring
    F = ring.field
    p = ring.coerce(p)
    if p.is_zero():
        return True
    d = p.homogeneous_degree()
    if d is None:
        raise GorlabError("oracle expects homogeneous input")
    mons = ring.monomials_of_degree(d)
    index = {m: i for i, m in enumerate(mons)}
    target = _poly_to_vector(p, index, F)
    span = linalg.Span(F, len(mons))
    for g in ideal.gens:
        dg = g.homogeneous_degree()
        if dg is None or dg > d:
            continue
        for m in ring.monomials_of_degree(d - dg):
            span.add(_poly_to_vector(g.scale_monomial(m, F.one), index, F))
            if span.contains(target):
                return True
    return span.contains(target)
