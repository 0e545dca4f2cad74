"""Coefficient rings: commutative, unital, with decidable equality.

Ring elements are plain Python values (int, Fraction, int-mod-m); the
ring objects just bundle the operations and a couple of flags.
"""

from fractions import Fraction
from math import gcd

from .errors import RingMismatch


def _is_prime(m):
    if m < 2:
        return False
    d = 2
    while d * d <= m:
        if m % d == 0:
            return False
        d += 1
    return True


class IntegerRing:
    name = "Z"
    is_field = False

    def coerce(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise RingMismatch(f"not an integer: {x!r}")
        return x

    @property
    def zero(self):
        return 0

    @property
    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def eq(self, a, b):
        return a == b

    def divides(self, a, b):
        """Whether b lies in the ideal (a)."""
        if a == 0:
            return b == 0
        return b % a == 0

    def __repr__(self):
        return f"<ring {self.name}>"


class RationalRing(IntegerRing):
    name = "Q"
    is_field = True

    def coerce(self, x):
        if isinstance(x, bool):
            raise RingMismatch(f"not a rational: {x!r}")
        if isinstance(x, (int, Fraction)):
            return Fraction(x)
        raise RingMismatch(f"not a rational: {x!r}")

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def divides(self, a, b):
        return a != 0 or b == 0


class IntegersMod(IntegerRing):
    def __init__(self, m):
        if not isinstance(m, int) or m < 2:
            raise RingMismatch(f"modulus must be an integer >= 2: {m!r}")
        self.m = m
        self.name = f"Z/{m}"
        self.is_field = _is_prime(m)

    def coerce(self, x):
        if isinstance(x, bool) or not isinstance(x, int):
            raise RingMismatch(f"not an integer: {x!r}")
        return x % self.m

    def add(self, a, b):
        return (a + b) % self.m

    def neg(self, a):
        return (-a) % self.m

    def mul(self, a, b):
        return (a * b) % self.m

    def divides(self, a, b):
        g = gcd(a, self.m)
        return b % g == 0 if g else b == 0


def ring_from_name(name):
    """Ring for a CLI tag: Z, Q, or Zmod:<m>."""
    if name == "Z":
        return IntegerRing()
    if name == "Q":
        return RationalRing()
    if name.startswith("Zmod:"):
        try:
            m = int(name.split(":", 1)[1])
        except ValueError:
            raise RingMismatch(f"bad modulus in {name!r}")
        return IntegersMod(m)
    raise RingMismatch(f"unknown ring {name!r}; use Z, Q, or Zmod:<m>")


def same_ring(r1, r2):
    return r1.name == r2.name
