"""Sparse multivariate polynomials with exact coefficients.

The public surface works in Q = k[x, y, z, w]; the machinery is generic in
the number of variables because colon ideals need one auxiliary elimination
variable and some tests want symbolic entry names.

Monomials are exponent tuples.  A polynomial is an immutable mapping
monomial -> nonzero field element, tied to a PolyRing that fixes the field,
the variable names, and the monomial order.
"""

from fractions import Fraction
from math import comb

from . import linalg
from .errors import (
    DivisionByZero,
    FieldMismatch,
    NotSkewSymmetric,
    OddDimension,
    ParseError,
    SingularChange,
)

DEFAULT_VARS = ("x", "y", "z", "w")


# ---------------------------------------------------------------------------
# monomial helpers
# ---------------------------------------------------------------------------

def m_mul(a, b):
    return tuple(i + j for i, j in zip(a, b))

def m_div(a, b):
    """a / b, or None when b does not divide a."""
    out = []
    for i, j in zip(a, b):
        if i < j:
            return None
        out.append(i - j)
    return tuple(out)

def m_divides(b, a):
    return all(i >= j for i, j in zip(a, b))

def m_lcm(a, b):
    return tuple(max(i, j) for i, j in zip(a, b))

def m_gcd(a, b):
    return tuple(min(i, j) for i, j in zip(a, b))

def m_deg(a):
    return sum(a)


# ---------------------------------------------------------------------------
# monomial orders (variable precedence is the tuple order: x > y > z > w)
# ---------------------------------------------------------------------------

class MonomialOrder:
    kind = "abstract"

    def key(self, m):
        raise NotImplementedError

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.kind == other.kind and self._params() == other._params()

    def __hash__(self):
        return hash((self.kind, self._params()))

    def _params(self):
        return ()


def _grevlex_key(m):
    return (sum(m), tuple(-e for e in reversed(m)))


class Grevlex(MonomialOrder):
    kind = "grevlex"

    def key(self, m):
        return _grevlex_key(m)


class Lex(MonomialOrder):
    kind = "lex"

    def key(self, m):
        return m


class Elimination(MonomialOrder):
    """Block order: grevlex on the first `block` variables, then grevlex on the rest."""

    kind = "elimination"

    def __init__(self, block):
        self.block = block

    def key(self, m):
        return (_grevlex_key(m[: self.block]), _grevlex_key(m[self.block:]))

    def _params(self):
        return (self.block,)


GREVLEX = Grevlex()
LEX = Lex()


# ---------------------------------------------------------------------------
# rings and polynomials
# ---------------------------------------------------------------------------

class PolyRing:
    def __init__(self, field, names=DEFAULT_VARS, order=GREVLEX):
        self.field = field
        self.names = tuple(names)
        self.n = len(self.names)
        self.order = order
        self.zero = Polynomial(self, {})
        one = field.one
        self.one = Polynomial(self, {(0,) * self.n: one})
        self._vars = tuple(
            Polynomial(self, {tuple(1 if j == i else 0 for j in range(self.n)): one})
            for i in range(self.n)
        )
        self._monomial_cache = {}

    def var(self, i):
        return self._vars[i]

    def vars(self):
        return self._vars

    def key(self, m):
        return self.order.key(m)

    def monomial(self, exps, coeff=1):
        c = self.field.coerce(coeff)
        if self.field.is_zero(c):
            return self.zero
        return Polynomial(self, {tuple(exps): c})

    def const(self, c):
        c = self.field.coerce(c)
        if self.field.is_zero(c):
            return self.zero
        return Polynomial(self, {(0,) * self.n: c})

    def from_terms(self, terms):
        clean = {tuple(m): c for m, c in terms.items() if not self.field.is_zero(c)}
        return Polynomial(self, clean)

    def coerce(self, x):
        if isinstance(x, Polynomial):
            if x.ring is not self and x.ring != self:
                raise FieldMismatch("polynomial from a different ring")
            return x
        return self.const(x)

    def monomials_of_degree(self, d):
        """All degree-d monomials, descending in this ring's order."""
        cached = self._monomial_cache.get(d)
        if cached is None:
            def gen(prefix, rest, left):
                if rest == 1:
                    yield prefix + (left,)
                    return
                for e in range(left, -1, -1):
                    yield from gen(prefix + (e,), rest - 1, left - e)
            mons = sorted(gen((), self.n, d), key=self.key, reverse=True)
            cached = tuple(mons)
            self._monomial_cache[d] = cached
        return cached

    def with_order(self, order):
        if order == self.order:
            return self
        return PolyRing(self.field, self.names, order)

    def extended(self, name="u0"):
        """Ring with one auxiliary variable prepended, under an elimination order."""
        return PolyRing(self.field, (name,) + self.names, Elimination(1))

    def parse(self, text):
        return _parse_poly(self, text)

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.field == other.field
            and self.names == other.names
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.field, self.names, self.order))

    def __repr__(self):
        return f"PolyRing({self.field.label()}, {'/'.join(self.names)}, {self.order.kind})"


class Polynomial:
    __slots__ = ("ring", "terms", "_hash", "_lm")

    def __init__(self, ring, terms):
        self.ring = ring
        self.terms = terms
        self._hash = None
        self._lm = None

    # -- basic queries ------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(m_deg(m) for m in self.terms)

    def is_homogeneous(self):
        if not self.terms:
            return True
        degs = {m_deg(m) for m in self.terms}
        return len(degs) == 1

    def homogeneous_degree(self):
        """Degree if homogeneous and nonzero, else None (zero counts as homogeneous)."""
        if not self.terms:
            return None
        degs = {m_deg(m) for m in self.terms}
        if len(degs) != 1:
            return None
        return degs.pop()

    def leading_monomial(self):
        if self._lm is None:
            if not self.terms:
                raise DivisionByZero("leading monomial of 0")
            self._lm = max(self.terms, key=self.ring.key)
        return self._lm

    def leading_coeff(self):
        return self.terms[self.leading_monomial()]

    def constant_term(self):
        return self.terms.get((0,) * self.ring.n, self.ring.field.zero)

    def monic(self):
        if not self.terms:
            return self
        F = self.ring.field
        lc = self.leading_coeff()
        if lc == F.one:
            return self
        inv = F.inv(lc)
        return Polynomial(self.ring, {m: F.mul(inv, c) for m, c in self.terms.items()})

    def coefficient(self, mono):
        return self.terms.get(tuple(mono), self.ring.field.zero)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda mc: self.ring.key(mc[0]), reverse=True)

    # -- arithmetic -----------------------------------------------------------
    def _check(self, other):
        other = self.ring.coerce(other)
        return other

    def __add__(self, other):
        other = self._check(other)
        F = self.ring.field
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = F.add(out.get(m, F.zero), c)
            if F.is_zero(s):
                out.pop(m, None)
            else:
                out[m] = s
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        F = self.ring.field
        return Polynomial(self.ring, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            F = self.ring.field
            c = F.coerce(other)
            if F.is_zero(c):
                return self.ring.zero
            return Polynomial(self.ring, {m: F.mul(c, v) for m, v in self.terms.items()})
        other = self._check(other)
        F = self.ring.field
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = m_mul(m1, m2)
                s = F.add(out.get(m, F.zero), F.mul(c1, c2))
                if F.is_zero(s):
                    out.pop(m, None)
                else:
                    out[m] = s
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        r = self.ring.one
        b = self
        while n:
            if n & 1:
                r = r * b
            b = b * b
            n >>= 1
        return r

    def scale_monomial(self, mono, coeff):
        """self * coeff * x^mono without building intermediates."""
        F = self.ring.field
        return Polynomial(
            self.ring, {m_mul(m, mono): F.mul(coeff, c) for m, c in self.terms.items()}
        )

    def divide_by_monomial(self, mono):
        """Exact division by a monomial; every term must be divisible."""
        out = {}
        for m, c in self.terms.items():
            q = m_div(m, mono)
            if q is None:
                raise DivisionByZero(f"{self} is not divisible by the monomial {mono}")
            out[q] = c
        return Polynomial(self.ring, out)

    def divide_exact(self, divisor):
        """Exact division by a polynomial known to divide self."""
        divisor = self._check(divisor)
        if divisor.is_zero():
            raise DivisionByZero("division by the zero polynomial")
        F = self.ring.field
        key = self.ring.key
        dlm = divisor.leading_monomial()
        dlc = divisor.leading_coeff()
        rem = dict(self.terms)
        quot = {}
        while rem:
            lm = max(rem, key=key)
            q = m_div(lm, dlm)
            if q is None:
                raise DivisionByZero("inexact polynomial division")
            c = F.div(rem[lm], dlc)
            quot[q] = c
            for m, dc in divisor.terms.items():
                mm = m_mul(m, q)
                s = F.sub(rem.get(mm, F.zero), F.mul(c, dc))
                if F.is_zero(s):
                    rem.pop(mm, None)
                else:
                    rem[mm] = s
        return Polynomial(self.ring, quot)

    def substitute(self, images):
        """Replace variable i by images[i] (polynomials in any common ring)."""
        if len(images) != self.ring.n:
            raise ValueError("one image per variable required")
        target = images[0].ring
        F = target.field
        power_cache = {}

        def power(i, e):
            got = power_cache.get((i, e))
            if got is None:
                got = images[i] ** e
                power_cache[(i, e)] = got
            return got

        out = target.zero
        for m, c in self.terms.items():
            term = target.const(c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def evaluate(self, point):
        """Evaluate at a tuple of field elements."""
        F = self.ring.field
        total = F.zero
        for m, c in self.terms.items():
            v = c
            for i, e in enumerate(m):
                if e:
                    v = F.mul(v, F.pow(point[i], e))
            total = F.add(total, v)
        return total

    def lift_to(self, ring, offset=1):
        """View in a ring with `offset` extra leading variables."""
        pad = (0,) * offset
        return Polynomial(ring, {pad + m: c for m, c in self.terms.items()})

    def project_from_extension(self, ring, offset=1):
        """Inverse of lift_to; fails if an auxiliary variable occurs."""
        out = {}
        for m, c in self.terms.items():
            if any(m[:offset]):
                raise ValueError("polynomial involves an auxiliary variable")
            out[m[offset:]] = c
        return Polynomial(ring, out)

    # -- comparisons / presentation ------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            if other == 0:
                return self.is_zero()
            other = self.ring.coerce(other)
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __str__(self):
        return poly_str(self)

    def __repr__(self):
        return f"<{poly_str(self)}>"


# ---------------------------------------------------------------------------
# text grammar: parse and print, exact round trip
# ---------------------------------------------------------------------------

def _mono_str(names, m):
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def poly_str(p):
    """Canonical text: descending order, explicit '*', '^' powers.

    Extension scalars are split into their rational and t parts so the output
    stays inside the parenthesis-free term grammar.
    """
    if p.is_zero():
        return "0"
    F = p.ring.field
    chunks = []
    for m, c in p.sorted_terms():
        for q, sym in F.pieces(c):
            if q == 0:
                continue
            mono = _mono_str(p.ring.names, m)
            factors = []
            if abs(q) != 1 or (not sym and not mono):
                factors.append(str(abs(q)))
            if sym:
                factors.append(sym)
            if mono:
                factors.append(mono)
            body = "*".join(factors) if factors else "1"
            chunks.append(("-" if q < 0 else "+", body))
    sign, body = chunks[0]
    out = body if sign == "+" else f"-{body}"
    for sign, body in chunks[1:]:
        out += f" {sign} {body}"
    return out


_TOKEN_CHARS = set("+-*/^()[] \t")


def _tokenize(text, allow_brackets=False):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in "+-*/^[]":
            if ch in "[]" and not allow_brackets:
                raise ParseError(f"unexpected {ch!r}")
            tokens.append(ch)
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(int(text[i:j]))
            i = j
            continue
        if ch.isalpha():
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(text[i:j])
            i = j
            continue
        raise ParseError(f"bad character {ch!r} in {text!r}")
    return tokens


class _TermParser:
    """Shared reader for the polynomial and dual-generator grammars."""

    def __init__(self, tokens, field, names, bracket_power=False):
        self.toks = tokens
        self.pos = 0
        self.field = field
        self.names = {nm: i for i, nm in enumerate(names)}
        self.nvars = len(names)
        self.bracket_power = bracket_power

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def next(self):
        t = self.peek()
        self.pos += 1
        return t

    def parse_sum(self):
        terms = []
        sign = 1
        first = True
        while self.peek() is not None:
            t = self.peek()
            if t == "+":
                self.next()
                sign = 1
            elif t == "-":
                self.next()
                sign = -1
            elif not first:
                raise ParseError(f"expected '+' or '-' before {t!r}")
            coeff, mono = self.parse_term()
            if sign < 0:
                coeff = self.field.neg(coeff)
            terms.append((coeff, mono))
            sign = 1
            first = False
        if first:
            raise ParseError("empty expression")
        return terms

    def parse_term(self):
        coeff = self.field.one
        mono = [0] * self.nvars
        expect_factor = True
        while expect_factor:
            t = self.next()
            if t is None:
                raise ParseError("dangling '*'")
            if isinstance(t, int):
                num = Fraction(t)
                if self.peek() == "/":
                    self.next()
                    den = self.next()
                    if not isinstance(den, int) or den == 0:
                        raise ParseError("bad denominator")
                    num /= den
                coeff = self.field.mul(coeff, self.field.from_fraction(num))
            elif t == "t" and "t" not in self.names:
                e = self.read_power()
                coeff = self.field.mul(coeff, self.field.generator_power(e))
            elif isinstance(t, str) and t in self.names:
                idx = self.names[t]
                e, divided = self.read_power_maybe_bracket()
                if divided:
                    mono[idx] += e
                    coeff = self.apply_divided_marker(coeff)
                else:
                    mono[idx] += e
                    coeff = self.apply_plain_power(coeff, e)
            else:
                raise ParseError(f"unexpected token {t!r}")
            if self.peek() == "*":
                self.next()
                expect_factor = True
            else:
                expect_factor = False
        return coeff, tuple(mono)

    def read_power(self):
        if self.peek() == "^":
            self.next()
            e = self.next()
            if not isinstance(e, int) or e < 0:
                raise ParseError("bad exponent")
            return e
        return 1

    def read_power_maybe_bracket(self):
        if self.bracket_power and self.peek() == "[":
            self.next()
            e = self.next()
            if not isinstance(e, int) or e < 0:
                raise ParseError("bad divided power")
            if self.next() != "]":
                raise ParseError("unclosed '['")
            return e, True
        return self.read_power(), False

    # hooks overridden by the dual-generator parser
    def apply_divided_marker(self, coeff):
        raise ParseError("divided powers not allowed here")

    def apply_plain_power(self, coeff, e):
        return coeff


def _parse_poly(ring, text):
    tokens = _tokenize(text)
    parser = _TermParser(tokens, ring.field, ring.names)
    out = {}
    F = ring.field
    for coeff, mono in parser.parse_sum():
        s = F.add(out.get(mono, F.zero), coeff)
        if F.is_zero(s):
            out.pop(mono, None)
        else:
            out[mono] = s
    return Polynomial(ring, out)


# ---------------------------------------------------------------------------
# linear changes of variables
# ---------------------------------------------------------------------------

class LinearChange:
    """Invertible matrix sending each new variable to a combination of the old.

    Row i lists the coefficients of the image of variable i.
    """

    def __init__(self, ring, matrix):
        self.ring = ring
        F = ring.field
        self.matrix = tuple(tuple(F.coerce(c) for c in row) for row in matrix)
        if len(self.matrix) != ring.n or any(len(r) != ring.n for r in self.matrix):
            raise ValueError("matrix shape must match the ring")
        if F.is_zero(linalg.determinant([list(r) for r in self.matrix], F)):
            raise SingularChange("change of variables is not invertible")

    def images(self):
        out = []
        for row in self.matrix:
            p = self.ring.zero
            for j, c in enumerate(row):
                p = p + self.ring.var(j) * c
            out.append(p)
        return out

    def inverse(self):
        inv = linalg.invert([list(r) for r in self.matrix], self.ring.field)
        if inv is None:
            raise SingularChange("change of variables is not invertible")
        return LinearChange(self.ring, inv)

    def compose(self, other):
        """self after other: matrix product self.matrix @ other.matrix."""
        F = self.ring.field
        n = self.ring.n
        prod = [
            [
                _dot(F, [self.matrix[i][k] for k in range(n)], [other.matrix[k][j] for k in range(n)])
                for j in range(n)
            ]
            for i in range(n)
        ]
        return LinearChange(self.ring, prod)

    @classmethod
    def identity(cls, ring):
        F = ring.field
        return cls(ring, [[F.one if i == j else F.zero for j in range(ring.n)] for i in range(ring.n)])


def _dot(F, u, v):
    s = F.zero
    for a, b in zip(u, v):
        s = F.add(s, F.mul(a, b))
    return s


def apply_linear_change(p, change):
    """Substitute every variable by its image under the change."""
    return p.substitute(change.images())


# ---------------------------------------------------------------------------
# pfaffians
# ---------------------------------------------------------------------------

def _check_skew(T):
    n = len(T)
    for row in T:
        if len(row) != n:
            raise NotSkewSymmetric("matrix is not square")
    for i in range(n):
        if not T[i][i].is_zero():
            raise NotSkewSymmetric("nonzero diagonal entry")
        for j in range(i + 1, n):
            if not (T[i][j] + T[j][i]).is_zero():
                raise NotSkewSymmetric(f"entry ({i},{j}) is not the negative of ({j},{i})")
    return n


def pfaffian(T):
    """Pfaffian of a skew-symmetric matrix of polynomials.

    Expansion along the first row with pf([[0, c], [-c, 0]]) = c.
    """
    n = _check_skew(T)
    if n == 0:
        raise OddDimension("empty matrix has no pfaffian here")
    if n % 2:
        raise OddDimension(f"pfaffian needs even dimension, got {n}")
    ring = T[0][1].ring
    memo = {}

    def pf(idx):
        if not idx:
            return ring.one
        got = memo.get(idx)
        if got is not None:
            return got
        i0 = idx[0]
        total = ring.zero
        for k in range(1, len(idx)):
            entry = T[i0][idx[k]]
            if entry.is_zero():
                continue
            rest = idx[1:k] + idx[k + 1:]
            term = entry * pf(rest)
            total = total + term if k % 2 == 1 else total - term
        memo[idx] = total
        return total

    return pf(tuple(range(n)))


def submaximal_pfaffians(T):
    """The five pfaffians of a skew 5x5 matrix with row/column i deleted."""
    n = _check_skew(T)
    if n != 5:
        raise NotSkewSymmetric(f"expected a 5x5 matrix, got {n}x{n}")
    out = []
    for i in range(5):
        keep = [k for k in range(5) if k != i]
        minor = [[T[r][c] for c in keep] for r in keep]
        out.append(pfaffian(minor))
    return out
