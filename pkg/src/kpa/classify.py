"""Classification of the span algebra of a finite k-graph over a ring.

Outcomes: PurelyInfiniteSimple, LocallyMatricial, NotSimple, or
Indeterminate.  Definitive verdicts are emitted only after their
certificates re-verify by direct definition checks; bounded evidence
propagates to Indeterminate instead of being upgraded.
"""

from dataclasses import dataclass, field

from .algebra import matrix_unit_ideal
from .calculus import mce
from .graph import compose
from .structure import (
    NO,
    UNKNOWN,
    YES,
    ThreeValued,
    aperiodicity_analysis,
    connecting_path,
    default_cap,
    find_cycles,
    find_entrance,
    find_generalized_cycles,
    is_cofinal,
    is_generalized_cycle,
    is_hereditary,
    saturated_closure,
)

PURELY_INFINITE_SIMPLE = "PurelyInfiniteSimple"
LOCALLY_MATRICIAL = "LocallyMatricial"
NOT_SIMPLE = "NotSimple"
INDETERMINATE = "Indeterminate"

FIELD_NOTE = "definitive simplicity classification requires a field"


@dataclass(frozen=True)
class Verdict:
    outcome: str
    certificates: dict = field(default_factory=dict)
    bounds_used: tuple = ()
    ring_note: str = ""


# -- certificate re-verification ---------------------------------------

def _reverify_lattice_witness(g, witness, bound):
    if not witness or witness == g.vertices:
        return False
    if not is_hereditary(g, witness):
        return False
    closure, exact = saturated_closure(g, witness, bound)
    return exact and closure == frozenset(witness)


def _reverify_periodicity(g, witness, bound):
    w = witness
    if w.m == w.n:
        return False
    gc = w.cycle
    if gc.mu.range != w.vertex:
        return False
    verdict = is_generalized_cycle(gc.mu, gc.nu)
    if verdict.status != YES:
        return False
    return find_entrance(gc, bound) is None


def _reverify_vertex_witness(g, v, gc, path, bound):
    if path.range != v or path.source != gc.mu.range:
        return False
    verdict = is_generalized_cycle(gc.mu, gc.nu)
    if verdict.status != YES or gc.entrance is None:
        return False
    # the entrance really avoids mu
    return not mce(gc.mu, compose(gc.nu, gc.entrance))


# -- witness searches --------------------------------------------------

def check_vertex_cycle_witnesses(g, caps=None):
    """Per-vertex witnesses: a generalized cycle with an entrance whose
    range reaches the vertex (a path from the cycle into the vertex)."""
    if caps is None:
        caps = default_cap(g)
    cycles = [c for c in find_generalized_cycles(g, caps)
              if c.entrance is not None]
    witnesses = {}
    for v in sorted(g.vertices):
        found = None
        for gc in cycles:
            link = connecting_path(g, v, gc.mu.range)
            if link is not None:
                found = (gc, link)
                break
        witnesses[v] = found
    return {"witnesses": witnesses,
            "complete": all(w is not None for w in witnesses.values()),
            "bounds": caps}


def check_simplicity(g, ring, caps=None):
    """Conjunction of cofinality and aperiodicity; for non-field rings
    the verdict describes the graded ideal structure, not simplicity."""
    if caps is None:
        caps = default_cap(g)
    cof = is_cofinal(g, caps)
    aper = aperiodicity_analysis(g, caps)
    note = "" if ring.is_field else FIELD_NOTE
    cert = {"cofinal": cof, "aperiodic": aper, "ring_note": note}
    if cof.status == NO or aper.status == NO:
        return ThreeValued(NO, cert, caps)
    if cof.status == YES and aper.status == YES:
        return ThreeValued(YES, cert, caps)
    return ThreeValued(UNKNOWN, cert, caps)


def _pis_certificates(g, caps):
    """Per-vertex (generalized cycle with entrance, connecting path)
    witnesses, re-verified; None when some vertex has no witness within
    the caps."""
    report = check_vertex_cycle_witnesses(g, caps)
    if not report["complete"]:
        return None
    out = {}
    for v, (gc, link) in report["witnesses"].items():
        if not _reverify_vertex_witness(g, v, gc, link, default_cap(g)):
            return None
        out[v] = (gc, link)
    return out


def classify(g, ring, caps=None):
    if caps is None:
        caps = default_cap(g)
    cof = is_cofinal(g, caps)
    aper = aperiodicity_analysis(g, caps)
    cycles = find_cycles(g)

    # structural non-simplicity is ring-independent
    if cof.status == NO and _reverify_lattice_witness(g, cof.certificate,
                                                     caps):
        return Verdict(NOT_SIMPLE,
                       {"lattice_witness": cof.certificate},
                       caps,
                       "" if ring.is_field else FIELD_NOTE)
    if aper.status == NO and _reverify_periodicity(g, aper.certificate,
                                                   caps):
        return Verdict(NOT_SIMPLE,
                       {"periodicity": aper.certificate},
                       caps,
                       "" if ring.is_field else FIELD_NOTE)

    if not ring.is_field:
        return Verdict(INDETERMINATE,
                       {"cofinal": cof, "aperiodic": aper},
                       caps, FIELD_NOTE)

    if cof.status == YES and aper.status == YES:
        if cycles:
            certs = _pis_certificates(g, caps)
            if certs is None:
                return Verdict(INDETERMINATE,
                               {"missing": "per-vertex cycle-with-entrance witnesses",
                                "cofinal": cof, "aperiodic": aper},
                               caps)
            return Verdict(PURELY_INFINITE_SIMPLE,
                           {"cofinal": cof, "aperiodic": aper,
                            "cycle": cycles[0],
                            "vertex_witnesses": certs},
                           caps)
        sinks = [v for v in sorted(g.vertices) if not g.out_edges(v)]
        if sinks:
            rep = matrix_unit_ideal(g, sinks[0], ring)
            if rep["ok"]:
                return Verdict(LOCALLY_MATRICIAL,
                               {"sink": sinks[0], "size": rep["size"],
                                "matrix_units": rep},
                               caps)
        return Verdict(INDETERMINATE,
                       {"missing": "sink with verified matrix units"},
                       caps)

    unknowns = {}
    if cof.status != YES:
        unknowns["cofinal"] = cof
    if aper.status != YES:
        unknowns["aperiodic"] = aper
    return Verdict(INDETERMINATE, unknowns, caps)
