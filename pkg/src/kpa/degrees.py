"""Degree vectors: elements of N^k under the componentwise order.

Degrees are plain tuples of non-negative ints; these helpers keep the
lattice arithmetic in one place.
"""

from itertools import product

from .errors import DegreeError


def zero(k):
    return (0,) * k


def unit(k, color):
    """e_i for a 1-based color index."""
    return tuple(1 if i == color - 1 else 0 for i in range(k))


def validate(n, k):
    if len(n) != k or any(c < 0 or not isinstance(c, int) for c in n):
        raise DegreeError(f"not a degree vector of rank {k}: {n!r}")
    return tuple(n)


def add(m, n):
    return tuple(a + b for a, b in zip(m, n))


def sub(m, n):
    """m - n, defined only when n <= m."""
    if not leq(n, m):
        raise DegreeError(f"{n} is not <= {m}")
    return tuple(a - b for a, b in zip(m, n))


def leq(m, n):
    return all(a <= b for a, b in zip(m, n))


def join(m, n):
    return tuple(max(a, b) for a, b in zip(m, n))


def meet(m, n):
    return tuple(min(a, b) for a, b in zip(m, n))


def pos_part(m, n):
    """Componentwise (m - n)+, the positive part of the difference."""
    return tuple(max(a - b, 0) for a, b in zip(m, n))


def total(n):
    return sum(n)


def below(n):
    """All degree vectors p with p <= n, in lexicographic order."""
    return [tuple(p) for p in product(*(range(c + 1) for c in n))]
