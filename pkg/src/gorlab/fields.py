"""Exact coefficient fields: rationals, prime fields, and quadratic extensions of Q.

Field elements are plain hashable Python values (Fraction, int residue, or a
pair of Fractions in the basis {1, t}); the Field object supplies the
arithmetic.  Every operation returns a canonical representative, so equality
of values is equality of field elements.
"""

from fractions import Fraction
from math import isqrt

from .errors import DivisionByZero, FieldMismatch, ParseError


def _is_prime(p):
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def _is_rational_square(q):
    if q < 0:
        return False
    num, den = q.numerator, q.denominator
    rn, rd = isqrt(num), isqrt(den)
    return rn * rn == num and rd * rd == den


class Field:
    kind = "abstract"

    # -- arithmetic ---------------------------------------------------------
    def add(self, a, b):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def pow(self, a, n):
        if n < 0:
            return self.pow(self.inv(a), -n)
        r = self.one
        while n:
            if n & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            n >>= 1
        return r

    def is_zero(self, a):
        return a == self.zero

    # -- element construction -----------------------------------------------
    def from_int(self, n):
        return self.from_fraction(Fraction(n))

    def from_fraction(self, q):
        raise NotImplementedError

    def coerce(self, x):
        """Accept an int, Fraction, or an element already in this field."""
        if isinstance(x, bool):
            raise TypeError("bool is not a field element")
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, Fraction):
            return self.from_fraction(x)
        if self.contains(x):
            return x
        raise FieldMismatch(f"cannot coerce {x!r} into {self.label()}")

    def contains(self, x):
        raise NotImplementedError

    def factorial(self, n):
        r = self.one
        for k in range(2, n + 1):
            r = self.mul(r, self.from_int(k))
        return r

    def characteristic(self):
        return 0

    # -- presentation ---------------------------------------------------------
    def pieces(self, a):
        """Decompose a into [(Fraction, symbol)] with symbol '' or 't'.

        Used by the polynomial printer so that every coefficient can be
        written inside the plain term grammar (no parentheses needed).
        """
        raise NotImplementedError

    def generator_power(self, k):
        raise ParseError(f"'t' is not a scalar of {self.label()}")

    def label(self):
        raise NotImplementedError

    def descriptor(self):
        raise NotImplementedError

    def __hash__(self):
        return hash((self.kind, self._params()))

    def __eq__(self, other):
        return isinstance(other, Field) and self.kind == other.kind and self._params() == other._params()

    def _params(self):
        return ()

    def __repr__(self):
        return f"<{self.label()}>"


class Rationals(Field):
    kind = "rationals"
    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return 1 / a

    def from_fraction(self, q):
        return q

    def contains(self, x):
        return isinstance(x, Fraction)

    def pieces(self, a):
        return [(a, "")]

    def label(self):
        return "Q"

    def descriptor(self):
        return {"kind": "rationals"}


class PrimeField(Field):
    kind = "prime"

    def __init__(self, p):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        self.p = p
        self.zero = 0
        self.one = 1 % p

    def add(self, a, b):
        return (a + b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a %= self.p
        if a == 0:
            raise DivisionByZero("inverse of 0")
        return pow(a, self.p - 2, self.p)

    def from_fraction(self, q):
        den = q.denominator % self.p
        if den == 0:
            raise DivisionByZero(f"denominator of {q} vanishes mod {self.p}")
        return (q.numerator % self.p) * self.inv(den) % self.p

    def contains(self, x):
        return isinstance(x, int) and not isinstance(x, bool) and 0 <= x < self.p

    def characteristic(self):
        return self.p

    def pieces(self, a):
        return [(Fraction(a), "")]

    def label(self):
        return f"F{self.p}"

    def descriptor(self):
        return {"kind": "prime-field", "p": self.p}

    def _params(self):
        return (self.p,)


class QuadraticExtension(Field):
    """Q(t) with t^2 + c1*t + c0 = 0, the minimal polynomial irreducible over Q.

    Elements are pairs (u, v) of Fractions meaning u + v*t, always reduced.
    """

    kind = "quadratic-extension"

    def __init__(self, c1, c0):
        c1, c0 = Fraction(c1), Fraction(c0)
        if _is_rational_square(c1 * c1 - 4 * c0):
            raise ValueError(f"t^2 + {c1}*t + {c0} is reducible over Q")
        self.c1, self.c0 = c1, c0
        self.zero = (Fraction(0), Fraction(0))
        self.one = (Fraction(1), Fraction(0))
        self.t = (Fraction(0), Fraction(1))

    def add(self, a, b):
        return (a[0] + b[0], a[1] + b[1])

    def mul(self, a, b):
        # (a0 + a1 t)(b0 + b1 t) with t^2 = -c1 t - c0
        cross = a[1] * b[1]
        return (a[0] * b[0] - self.c0 * cross, a[0] * b[1] + a[1] * b[0] - self.c1 * cross)

    def neg(self, a):
        return (-a[0], -a[1])

    def inv(self, a):
        if a == self.zero:
            raise DivisionByZero("inverse of 0")
        norm = a[0] * a[0] - self.c1 * a[0] * a[1] + self.c0 * a[1] * a[1]
        conj = (a[0] - self.c1 * a[1], -a[1])
        return (conj[0] / norm, conj[1] / norm)

    def from_fraction(self, q):
        return (q, Fraction(0))

    def contains(self, x):
        return (
            isinstance(x, tuple)
            and len(x) == 2
            and isinstance(x[0], Fraction)
            and isinstance(x[1], Fraction)
        )

    def generator_power(self, k):
        return self.pow(self.t, k)

    def pieces(self, a):
        return [(a[0], ""), (a[1], "t")]

    def label(self):
        return f"Q(t)/(t^2{_signed(self.c1)}*t{_signed(self.c0)})"

    def descriptor(self):
        return {"kind": "quadratic-extension", "c1": str(self.c1), "c0": str(self.c0)}

    def _params(self):
        return (self.c1, self.c0)


def _signed(q):
    return f"+{q}" if q >= 0 else f"{q}"


QQ = Rationals()
GF2 = PrimeField(2)


def parse_field_spec(spec):
    """Parse a field descriptor string: 'Q', 'Fp:<p>', or 'ext:<c1>,<c0>'."""
    spec = spec.strip()
    if spec == "Q":
        return QQ
    if spec.startswith("Fp:"):
        try:
            p = int(spec[3:])
        except ValueError:
            raise ParseError(f"bad prime in field spec {spec!r}")
        try:
            return PrimeField(p)
        except ValueError as e:
            raise ParseError(str(e))
    if spec.startswith("ext:"):
        body = spec[4:].split(",")
        if len(body) != 2:
            raise ParseError(f"bad extension spec {spec!r}, want ext:<c1>,<c0>")
        try:
            c1, c0 = Fraction(body[0]), Fraction(body[1])
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad coefficients in field spec {spec!r}")
        try:
            return QuadraticExtension(c1, c0)
        except ValueError as e:
            raise ParseError(str(e))
    raise ParseError(f"unknown field spec {spec!r}")
