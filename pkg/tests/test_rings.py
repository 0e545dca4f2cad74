from fractions import Fraction

import pytest

from kpa import IntegerRing, IntegersMod, RationalRing, ring_from_name
from kpa.errors import KpaError
from kpa.rings import same_ring


def test_integers():
    r = IntegerRing()
    assert r.name == "Z" and not r.is_field
    assert r.add(r.coerce(2), r.coerce(3)) == 5
    assert r.mul(r.coerce(-2), r.coerce(3)) == -6
    with pytest.raises(Exception):
        r.coerce(True)


def test_rationals():
    r = RationalRing()
    assert r.is_field
    assert r.coerce(1) == Fraction(1)
    assert r.mul(r.coerce(Fraction(1, 2)), r.coerce(2)) == 1


def test_integers_mod():
    r = IntegersMod(5)
    assert r.is_field
    assert r.add(r.coerce(3), r.coerce(4)) == 2
    assert not IntegersMod(4).is_field
    assert not IntegersMod(6).is_field
    assert IntegersMod(2).is_field


def test_ring_from_name():
    assert ring_from_name("Z").name == "Z"
    assert ring_from_name("Q").is_field
    assert ring_from_name("Zmod:7").is_field
    with pytest.raises(KpaError):
        ring_from_name("GF(8)")


def test_same_ring():
    assert same_ring(ring_from_name("Z"), IntegerRing())
    assert not same_ring(IntegersMod(2), IntegersMod(3))
