"""Coefficient fields: the rationals and prime fields F_p.

All arithmetic in the package is exact.  Rational scalars are
`fractions.Fraction` values (always reduced, positive denominator);
F_p scalars are plain ints in the range [0, p).  A single `Field`
descriptor is fixed per computation and every container checks it.
"""

from fractions import Fraction

from .errors import FieldMismatchError, InputError

_PRIME_LIMIT = 2 ** 31


def _is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


class Field:
    """The rationals (p is None) or F_p for a prime p < 2**31."""

    __slots__ = ("p",)

    def __init__(self, p=None):
        if p is not None:
            if not isinstance(p, int) or not _is_prime(p) or p >= _PRIME_LIMIT:
                raise InputError("modulus must be a prime below 2**31, got %r" % (p,))
        object.__setattr__(self, "p", p)

    def __setattr__(self, name, value):
        raise AttributeError("Field is immutable")

    @property
    def is_rational(self):
        return self.p is None

    @property
    def characteristic(self):
        return 0 if self.p is None else self.p

    def __eq__(self, other):
        return isinstance(other, Field) and self.p == other.p

    def __hash__(self):
        return hash(("Field", self.p))

    def __repr__(self):
        return "QQ" if self.p is None else "GF(%d)" % self.p

    # -- scalar arithmetic ------------------------------------------------

    def coerce(self, x):
        """Accept ints, Fractions and 'num/den' strings."""
        if isinstance(x, str):
            x = parse_scalar_string(x)
        if self.p is None:
            if isinstance(x, Fraction):
                return x
            if isinstance(x, int):
                return Fraction(x)
            raise InputError("cannot coerce %r into QQ" % (x,))
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise InputError("denominator of %s vanishes mod %d" % (x, self.p))
            return x.numerator * pow(den, self.p - 2, self.p) % self.p
        if isinstance(x, int):
            return x % self.p
        raise InputError("cannot coerce %r into %r" % (x, self))

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def add(self, a, b):
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a, b):
        return a - b if self.p is None else (a - b) % self.p

    def mul(self, a, b):
        return a * b if self.p is None else (a * b) % self.p

    def neg(self, a):
        return -a if self.p is None else (-a) % self.p

    def inv(self, a):
        if not a:
            raise ZeroDivisionError("inverse of zero")
        return 1 / a if self.p is None else pow(a, self.p - 2, self.p)

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    # -- serialization -----------------------------------------------------

    def scalar_to_json(self, a):
        if self.p is None:
            return "%d/%d" % (a.numerator, a.denominator)
        return int(a)

    def to_json(self):
        return "Q" if self.p is None else {"Fp": self.p}


def parse_scalar_string(s):
    s = s.strip()
    try:
        if "/" in s:
            num, den = s.split("/")
            return Fraction(int(num), int(den))
        return Fraction(int(s))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError("bad scalar %r: %s" % (s, exc)) from exc


def field_from_json(obj):
    if obj == "Q":
        return Field()
    if isinstance(obj, dict) and set(obj) == {"Fp"}:
        return Field(obj["Fp"])
    raise InputError("bad field descriptor %r (want \"Q\" or {\"Fp\": p})" % (obj,))


def check_same_field(*fields):
    first = fields[0]
    for f in fields[1:]:
        if f != first:
            raise FieldMismatchError("field mismatch: %r vs %r" % (first, f))
    return first


QQ = Field()
