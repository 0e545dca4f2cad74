"""Structural analyses: hereditary/saturated vertex sets, cofinality,
cycles, generalized cycles and entrances, initial cycles, and bounded
aperiodicity evidence.

All verdicts that depend on a search bound are three-valued; Yes/No carry
a finitely checkable certificate and Unknown carries the exhausted bound.
"""

from dataclasses import dataclass
from typing import Optional

from . import degrees
from .calculus import (
    EXHAUSTIVE,
    EXHAUSTIVE_UP_TO_BOUND,
    NOT_EXHAUSTIVE,
    boundary_segments,
    ext_set,
    is_exhaustive,
    mce,
)
from .errors import EndpointError, NoCycle, NotSaturatedHereditary, SizeLimit
from .graph import KGraph, Path, compose, subpath

YES = "Yes"
NO = "No"
UNKNOWN = "Unknown"


@dataclass(frozen=True)
class ThreeValued:
    status: str
    certificate: object
    bound_used: tuple


@dataclass(frozen=True)
class GeneralizedCycle:
    mu: Path
    nu: Path
    entrance: Optional[Path]
    verified_bound: tuple


@dataclass(frozen=True)
class PeriodicityWitness:
    vertex: str
    m: tuple
    n: tuple
    cycle: GeneralizedCycle


def default_cap(g):
    return (len(g.vertices) + 1,) * g.rank


# -- hereditary / saturated sets ---------------------------------------

def hereditary_closure(g, members):
    """Smallest H containing `members` with v in H, vLw != 0 => w in H."""
    closed = set(members)
    stack = list(members)
    while stack:
        v = stack.pop()
        for e in g.out_edges(v):
            if e.source not in closed:
                closed.add(e.source)
                stack.append(e.source)
    return frozenset(closed)


def is_hereditary(g, members):
    return hereditary_closure(g, members) == frozenset(members)


def _absorbing_family(g, v, members, cap):
    """All nontrivial paths at v within cap whose source lies in members.

    This is the maximal candidate family: any finite exhaustive set with
    sources in `members` and degrees within cap is a subset of it, and
    supersets of exhaustive sets are exhaustive.
    """
    fam = []
    for n in degrees.below(cap):
        if n == degrees.zero(g.rank):
            continue
        for lam in g.paths_of_degree(n, range_filter=v):
            if lam.source in members:
                fam.append(lam)
    return fam


def saturated_closure(g, members, bound=None):
    """Least saturated hereditary superset reachable within the cap.

    Returns (vertex set, exact flag).  Vertices are only added on a
    bound-free exhaustiveness certificate, so the result is always
    contained in the true closure; the flag drops to False whenever a
    certificate came back bound-limited (a larger cap might add more).
    """
    if bound is None:
        bound = default_cap(g)
    closed = set(hereditary_closure(g, members))
    exact = True
    changed = True
    while changed:
        changed = False
        for v in sorted(g.vertices - closed):
            fam = _absorbing_family(g, v, closed, bound)
            if not fam:
                continue
            verdict = is_exhaustive(fam)
            if verdict.status == EXHAUSTIVE:
                closed.add(v)
                changed = True
            elif verdict.status == EXHAUSTIVE_UP_TO_BOUND:
                exact = False
    return frozenset(closed), exact


def sat_hereditary_lattice(g, bound=None, size_limit=20):
    """All saturated hereditary subsets, as the lattice generated by
    singleton closures under union-then-closure and intersection."""
    if len(g.vertices) > size_limit:
        raise SizeLimit(f"|V| = {len(g.vertices)} exceeds {size_limit}")
    exact = True
    empty_closure, ok = saturated_closure(g, frozenset(), bound)
    exact &= ok
    family = {empty_closure, frozenset(g.vertices)}
    for v in sorted(g.vertices):
        h, ok = saturated_closure(g, {v}, bound)
        exact &= ok
        family.add(h)
    changed = True
    while changed:
        changed = False
        items = sorted(family, key=sorted)
        for a in items:
            for b in items:
                union, ok = saturated_closure(g, a | b, bound)
                exact &= ok
                for c in (union, a & b):
                    if c not in family:
                        family.add(c)
                        changed = True
    return sorted(family, key=lambda s: (len(s), sorted(s))), exact


def is_cofinal(g, bound=None):
    if bound is None:
        bound = default_cap(g)
    lattice, exact = sat_hereditary_lattice(g, bound)
    nontrivial = [h for h in lattice if h and h != g.vertices]
    if nontrivial:
        return ThreeValued(NO, nontrivial[0], bound)
    if exact:
        return ThreeValued(YES, lattice, bound)
    return ThreeValued(UNKNOWN, None, bound)


# -- cycles -------------------------------------------------------------

def _skeleton_sccs(g):
    """Strongly connected components of the 1-skeleton (arcs range->source)."""
    order = []
    seen = set()
    for root in sorted(g.vertices):
        if root in seen:
            continue
        stack = [(root, iter(sorted(e.source for e in g.out_edges(root))))]
        seen.add(root)
        while stack:
            v, it = stack[-1]
            for w in it:
                if w not in seen:
                    seen.add(w)
                    stack.append(
                        (w, iter(sorted(e.source for e in g.out_edges(w)))))
                    break
            else:
                order.append(v)
                stack.pop()
    rev = {}
    for e in g.edges.values():
        rev.setdefault(e.source, set()).add(e.range)
    comps = []
    assigned = set()
    for root in reversed(order):
        if root in assigned:
            continue
        comp = {root}
        stack = [root]
        assigned.add(root)
        while stack:
            v = stack.pop()
            for w in sorted(rev.get(v, ())):
                if w not in assigned:
                    assigned.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(frozenset(comp))
    return comps


def _shortest_closed_walk(g, v, allowed):
    """Shortest edge word from v back to v staying inside `allowed`."""
    queue = [(v, [])]
    visited = {v}
    while queue:
        u, word = queue.pop(0)
        for e in sorted(g.out_edges(u), key=lambda e: e.id):
            if e.source not in allowed:
                continue
            if e.source == v:
                return word + [e]
            if e.source not in visited:
                visited.add(e.source)
                queue.append((e.source, word + [e]))
    return None


def find_cycles(g):
    """One representative cycle per strongly connected component that
    contains an edge; empty iff the skeleton is acyclic."""
    out = []
    for comp in _skeleton_sccs(g):
        has_arc = any(e.range in comp and e.source in comp
                      for e in g.edges.values())
        if not has_arc:
            continue
        v = min(comp)
        word = _shortest_closed_walk(g, v, comp)
        if word:
            out.append(g.path_from_word(word))
    out.sort()
    return out


def connecting_path(g, range_vertex, source_vertex):
    """A path p with r(p) = range_vertex and s(p) = source_vertex, or None."""
    if range_vertex == source_vertex:
        return g.vertex_path(range_vertex)
    queue = [(range_vertex, [])]
    visited = {range_vertex}
    while queue:
        u, word = queue.pop(0)
        for e in sorted(g.out_edges(u), key=lambda e: e.id):
            if e.source == source_vertex:
                return g.path_from_word(word + [e])
            if e.source not in visited:
                visited.add(e.source)
                queue.append((e.source, word + [e]))
    return None


# -- generalized cycles -------------------------------------------------

def is_generalized_cycle(mu, nu, bound=None):
    """Decide Def-style generalized-cycle-hood via Ext exhaustiveness."""
    if mu == nu:
        raise EndpointError("paths must be distinct")
    if mu.source != nu.source or mu.range != nu.range:
        raise EndpointError("paths must share range and source")
    ext = ext_set(mu, [nu])
    source_path = mu.graph.vertex_path(mu.source)
    verdict = is_exhaustive(ext, bound=bound, vertex=source_path)
    if verdict.status == EXHAUSTIVE:
        return ThreeValued(YES, ext, verdict.bound_used)
    if verdict.status == NOT_EXHAUSTIVE:
        return ThreeValued(NO, verdict.witness, verdict.bound_used)
    return ThreeValued(UNKNOWN, None, verdict.bound_used)


def verify_generalized_cycle(mu, nu, bound):
    """Direct bounded check: MCE(mu.tau, nu) nonempty for all small tau."""
    g = mu.graph
    for n in degrees.below(bound):
        for tau in g.paths_of_degree(n, range_filter=mu.source):
            if not mce(compose(mu, tau), nu):
                return False
    return True


def find_entrance(cycle, bound=None):
    """Minimal tau in s(nu)Lambda with MCE(mu, nu.tau) empty, or None."""
    mu, nu = cycle.mu, cycle.nu
    g = mu.graph
    if bound is None:
        bound = default_cap(g)
    candidates = []
    for n in degrees.below(bound):
        for tau in g.paths_of_degree(n, range_filter=nu.source):
            if not mce(mu, compose(nu, tau)):
                candidates.append(tau)
    if not candidates:
        return None
    return min(candidates, key=lambda p: (degrees.total(p.degree), p._key))


def find_generalized_cycles(g, degree_cap=None, entrance_bound=None):
    """All certified generalized cycles with both degrees within the cap."""
    if degree_cap is None:
        degree_cap = default_cap(g)
    by_ends = {}
    for n in degrees.below(degree_cap):
        for p in g.paths_of_degree(n):
            by_ends.setdefault((p.range, p.source), []).append(p)
    out = []
    for group in by_ends.values():
        for mu in group:
            for nu in group:
                if mu == nu:
                    continue
                verdict = is_generalized_cycle(mu, nu)
                if verdict.status == YES:
                    gc = GeneralizedCycle(mu, nu, None, verdict.bound_used)
                    entrance = find_entrance(gc, entrance_bound)
                    out.append(GeneralizedCycle(mu, nu, entrance,
                                                verdict.bound_used))
    out.sort(key=lambda c: (c.mu._key, c.nu._key))
    return out


# -- initial cycles -----------------------------------------------------

def is_initial_cycle(cycle):
    g = cycle.graph
    if not cycle.is_cycle:
        return False
    return all(cycle.degree[i] > 0 or not g.out_edges(cycle.range, i + 1)
               for i in range(g.rank))


def find_initial_cycles(g, cap=None):
    """All initial cycles with degree within the cap."""
    if cap is None:
        cap = default_cap(g)
    out = []
    for n in degrees.below(cap):
        if n == degrees.zero(g.rank):
            continue
        for v in sorted(g.vertices):
            for p in g.paths_of_degree(n, range_filter=v, source_filter=v):
                if is_initial_cycle(p):
                    out.append(p)
    out.sort()
    return out


def initial_cycle_reaching(g, cycle):
    """An initial cycle in the downstream closure of r(cycle), plus a
    connecting path from it back to r(cycle)."""
    if not cycle.is_cycle:
        raise NoCycle(f"{cycle!r} is not a cycle")
    downstream = hereditary_closure(g, {cycle.range})
    limit = len(downstream) + 1
    for scale in range(1, limit + 1):
        cap = (scale,) * g.rank
        for n in sorted(degrees.below(cap), key=degrees.total):
            if n == degrees.zero(g.rank):
                continue
            for v in sorted(downstream):
                for p in g.paths_of_degree(n, range_filter=v,
                                           source_filter=v):
                    if is_initial_cycle(p):
                        link = connecting_path(g, cycle.range, p.range)
                        if link is not None:
                            return p, link
    raise NoCycle("no initial cycle found within the pigeonhole cap")


# -- aperiodicity -------------------------------------------------------

def _refute_or_confirm(g, v, m, n, depth):
    """Compare shifted boundary segments at v for the pair (m, n).

    Returns ("refuted", segment) on a sound divergence certificate, or
    ("agrees", None) when every segment at this depth is consistent with
    sigma^m = sigma^n.
    """
    join = degrees.join(m, n)
    for seg in boundary_segments(g, v, depth):
        d = seg.path.degree
        if not degrees.leq(join, d):
            # depth >= join, so every deficient color hit a no-edge
            # frontier: a genuine boundary path is too short for (m, n)
            return "refuted", seg
        q = degrees.meet(degrees.sub(d, m), degrees.sub(d, n))
        left = subpath(seg.path, m, degrees.add(m, q))
        right = subpath(seg.path, n, degrees.add(n, q))
        if left != right:
            return "refuted", seg
    return "agrees", None


def _periodicity_candidates(g, cap, entrance_bound):
    """(vertex, m, n) candidates derived from entrance-less generalized
    cycles, with both the positive-part and raw degree pairings."""
    seen = set()
    out = []
    for gc in find_generalized_cycles(g, cap, entrance_bound):
        if gc.entrance is not None:
            continue
        dm, dn = gc.mu.degree, gc.nu.degree
        if dm == dn:
            continue
        pairs = [
            (degrees.pos_part(dm, dn), degrees.pos_part(dn, dm)),
            (dm, dn),
        ]
        # orient each unordered pair with the lex-larger shift first
        pairs = [(m, n) if m >= n else (n, m) for m, n in pairs]
        for m, n in pairs:
            key = (gc.mu.range, m, n)
            if m != n and key not in seen:
                seen.add(key)
                out.append((gc.mu.range, m, n, gc))
    # prefer witnesses where both shifts are nonzero, then small ones
    zero_vec = (0,) * g.rank
    out.sort(key=lambda c: (c[1] == zero_vec or c[2] == zero_vec,
                            degrees.total(degrees.add(c[1], c[2])),
                            c[0], c[1], c[2]))
    return out


def _embedded_cycle(g, v, m, n, entrance_bound):
    """An entrance-less generalized cycle at v with the degree shape
    d(mu) = m v n, d(nu) = n - m + (m v n)."""
    join = degrees.join(m, n)
    dnu = tuple(n[i] - m[i] + join[i] for i in range(g.rank))
    for mu in g.paths_of_degree(join, range_filter=v):
        for nu in g.paths_of_degree(dnu, range_filter=v):
            if mu == nu or nu.source != mu.source:
                continue
            verdict = is_generalized_cycle(mu, nu)
            if verdict.status != YES:
                continue
            gc = GeneralizedCycle(mu, nu, None, verdict.bound_used)
            if find_entrance(gc, entrance_bound) is None:
                return gc
    return None


def _no_exit_cycle(g):
    """For 1-graphs: a cycle every vertex of which has out-degree one."""
    for comp in _skeleton_sccs(g):
        has_arc = any(e.range in comp and e.source in comp
                      for e in g.edges.values())
        if not has_arc:
            continue
        if all(len(g.out_edges(v)) == 1 for v in comp):
            word = _shortest_closed_walk(g, min(comp), comp)
            return g.path_from_word(word)
    return None


def aperiodicity_analysis(g, degree_cap=None):
    """Search for local periodicity; three-valued.

    For 1-graphs the answer is exact (a cycle without an exit is the only
    source of periodicity).  For higher rank, periodicity is reported only
    after an entrance-less generalized cycle is corroborated by
    boundary-segment comparison, and aperiodicity only when every shift
    pair up to the cap is refuted by a diverging segment.
    """
    if degree_cap is None:
        degree_cap = default_cap(g)
    entrance_bound = default_cap(g)
    if g.rank == 1:
        cyc = _no_exit_cycle(g)
        if cyc is not None:
            length = cyc.degree
            square = compose(cyc, cyc)
            gc = GeneralizedCycle(cyc, square, None, entrance_bound)
            witness = PeriodicityWitness(cyc.range, degrees.zero(1), length,
                                         gc)
            return ThreeValued(NO, witness, degree_cap)
        exits = {}
        for cyc in find_cycles(g):
            gc = GeneralizedCycle(cyc, g.vertex_path(cyc.range), None,
                                  entrance_bound)
            exits[cyc] = find_entrance(gc, entrance_bound)
        return ThreeValued(YES, exits, degree_cap)

    if not find_cycles(g):
        # finite maximal boundary segments force equal shifts
        return ThreeValued(YES, "acyclic", degree_cap)

    depth = degrees.add(degree_cap, (2,) * g.rank)
    for v, m, n, seed in _periodicity_candidates(g, degree_cap,
                                                 entrance_bound):
        status, _ = _refute_or_confirm(g, v, m, n, depth)
        if status == "agrees":
            cyc = _embedded_cycle(g, v, m, n, entrance_bound)
            if cyc is None:
                cyc = GeneralizedCycle(seed.mu, seed.nu, None,
                                       seed.verified_bound)
            return ThreeValued(NO, PeriodicityWitness(v, m, n, cyc),
                               degree_cap)

    refutations = {}
    for v in sorted(g.vertices):
        for m in degrees.below(degree_cap):
            for n in degrees.below(degree_cap):
                if m == n:
                    continue
                status, seg = _refute_or_confirm(g, v, m, n, depth)
                if status != "refuted":
                    return ThreeValued(UNKNOWN, (v, m, n), degree_cap)
                refutations[(v, m, n)] = seg
    return ThreeValued(YES, refutations, degree_cap)


# -- quotients ----------------------------------------------------------

def quotient_graph(g, members, bound=None):
    """The restricted k-graph on the complement of a certified saturated
    hereditary vertex set."""
    members = frozenset(members)
    if not is_hereditary(g, members):
        raise NotSaturatedHereditary(f"{sorted(members)} is not hereditary")
    closure, exact = saturated_closure(g, members, bound)
    if closure != members or not exact:
        raise NotSaturatedHereditary(
            f"{sorted(members)} is not certified saturated")
    keep_edges = [e for e in g.edges.values() if e.source not in members]
    kept_ids = {e.id for e in keep_edges}
    keep_squares = [sq for sq in g.squares
                    if all(e.id in kept_ids
                           for e in (sq.first_outer, sq.first_inner,
                                     sq.second_outer, sq.second_inner))]
    return KGraph(g.rank, g.vertices - members, keep_edges, keep_squares)
