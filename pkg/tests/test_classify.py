from kpa import (
    IntegerRing,
    IntegersMod,
    RationalRing,
    check_simplicity,
    check_vertex_cycle_witnesses,
    classify,
)
from kpa.classify import (
    FIELD_NOTE,
    INDETERMINATE,
    LOCALLY_MATRICIAL,
    NOT_SIMPLE,
    PURELY_INFINITE_SIMPLE,
)
from kpa.structure import NO, YES

Q = RationalRing()
Z = IntegerRing()


def test_vertex_witnesses_bouquet(l2):
    report = check_vertex_cycle_witnesses(l2)
    assert report["complete"]
    gc, link = report["witnesses"]["v"]
    assert gc.entrance is not None
    assert link.range == "v" and link.source == gc.mu.range


def test_vertex_witnesses_incomplete(single_loop):
    # the lone cycle has no entrance, so no vertex has a witness
    report = check_vertex_cycle_witnesses(single_loop)
    assert not report["complete"]


def test_check_simplicity(l2, single_loop, corpus):
    assert check_simplicity(l2, Q).status == YES
    assert check_simplicity(single_loop, Q).status == NO
    assert check_simplicity(corpus["two_isolated"], Q).status == NO
    note = check_simplicity(l2, Z).certificate["ring_note"]
    assert note == FIELD_NOTE


def test_classify_bouquets(corpus):
    for name in ["L2", "L3"]:
        v = classify(corpus[name], Q)
        assert v.outcome == PURELY_INFINITE_SIMPLE
        assert v.certificates["vertex_witnesses"]


def test_classify_single_loop(single_loop):
    v = classify(single_loop, Q)
    assert v.outcome == NOT_SIMPLE
    w = v.certificates["periodicity"]
    assert (w.m, w.n) == ((0,), (1,))


def test_classify_vw(vw_edge):
    v = classify(vw_edge, Q)
    assert v.outcome == LOCALLY_MATRICIAL
    assert v.certificates["size"] == 2


def test_classify_commuting_loops(commuting_loops):
    v = classify(commuting_loops, Q)
    assert v.outcome == NOT_SIMPLE
    w = v.certificates["periodicity"]
    assert (w.m, w.n) == ((1, 0), (0, 1))


def test_classify_flip_graph(corpus):
    assert classify(corpus["flip_2graph"], Q).outcome == NOT_SIMPLE


def test_classify_double_bouquet(corpus):
    assert classify(corpus["double_bouquet"], Q).outcome == \
        PURELY_INFINITE_SIMPLE


def test_classify_two_isolated(corpus):
    v = classify(corpus["two_isolated"], Q)
    assert v.outcome == NOT_SIMPLE
    assert "lattice_witness" in v.certificates


def test_classify_cycle_with_tail(corpus):
    assert classify(corpus["cycle_with_tail"], Q).outcome == NOT_SIMPLE


def test_classify_acyclic(line3, corpus):
    assert classify(line3, Q).outcome == LOCALLY_MATRICIAL
    assert classify(corpus["omega_2_22"], Q).outcome == LOCALLY_MATRICIAL


def test_ring_sensitivity(l2):
    # structural verdicts are ring-independent, simplicity is not
    over_z = classify(l2, Z)
    assert over_z.outcome == INDETERMINATE
    assert over_z.ring_note == FIELD_NOTE
    assert classify(l2, IntegersMod(4)).outcome == INDETERMINATE
    assert classify(l2, IntegersMod(5)).outcome == PURELY_INFINITE_SIMPLE


def test_not_simple_over_any_ring(single_loop, corpus):
    assert classify(single_loop, Z).outcome == NOT_SIMPLE
    assert classify(corpus["two_isolated"], Z).outcome == NOT_SIMPLE
