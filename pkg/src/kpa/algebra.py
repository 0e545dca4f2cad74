"""Exact symbolic arithmetic in the span algebra of a finite k-graph.

Elements are finite R-linear combinations of span terms s_mu s_nu* with
s(mu) = s(nu).  Multiplication uses the minimal-pair rewriting rule, so
products stay in span form.  Canonical coordinates come from the closure
of the support under the minimal-pair property and the associated
matrix-unit elements; a coordinate pair is dropped exactly when its
matrix unit is annihilated by the exhaustiveness relation, and that
detection is certified by the three-valued exhaustiveness checker.
"""

from dataclasses import dataclass

from . import degrees
from .calculus import (
    EXHAUSTIVE,
    NOT_EXHAUSTIVE,
    has_prefix,
    is_exhaustive,
    lambda_min,
    le_paths,
)
from .errors import (
    ClosureDiverged,
    EmptyFamily,
    NoEntrance,
    NotAcyclic,
    NotASink,
    PairError,
    RingMismatch,
    SizeLimit,
)
from .graph import compose, factorize
from .rings import IntegersMod, same_ring
from .structure import find_cycles, quotient_graph

EQUAL = "equal"
DIFFERENT = "different"
EQUAL_MODULO_UNVERIFIED = "equal_modulo_unverified"


@dataclass(frozen=True)
class SpanTerm:
    """s_mu s_nu*; the sources must agree."""

    mu: object
    nu: object

    def __post_init__(self):
        if self.mu.source != self.nu.source:
            raise PairError(
                f"source mismatch: s({self.mu!r}) != s({self.nu!r})")

    @property
    def degree(self):
        return tuple(a - b for a, b in zip(self.mu.degree, self.nu.degree))

    @property
    def star(self):
        return SpanTerm(self.nu, self.mu)

    def sort_key(self):
        return (self.mu._key, self.nu._key)

    def __repr__(self):
        return f"{self.mu!r}{self.nu!r}*"


class AlgebraElement:
    """A finite linear combination of span terms; immutable by convention."""

    def __init__(self, ring, graph, terms=None):
        self.ring = ring
        self.graph = graph
        self.terms = {}
        for t, c in (terms or {}).items():
            c = ring.coerce(c)
            if not ring.eq(c, ring.zero):
                self.terms[t] = c

    def _check(self, other):
        if self.graph is not other.graph or not same_ring(self.ring,
                                                          other.ring):
            raise RingMismatch("operands over different rings or graphs")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = self.ring.add(out.get(t, self.ring.zero), c)
        return AlgebraElement(self.ring, self.graph, out)

    def __neg__(self):
        return AlgebraElement(
            self.ring, self.graph,
            {t: self.ring.neg(c) for t, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, r):
        r = self.ring.coerce(r)
        return AlgebraElement(
            self.ring, self.graph,
            {t: self.ring.mul(r, c) for t, c in self.terms.items()})

    def __mul__(self, other):
        return multiply(self, other)

    def __eq__(self, other):
        """Syntactic term-level equality; use compare() for algebra
        equality."""
        return (isinstance(other, AlgebraElement)
                and self.graph is other.graph
                and same_ring(self.ring, other.ring)
                and self.terms == other.terms)

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    @property
    def is_syntactic_zero(self):
        return not self.terms

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda tc: tc[0].sort_key())

    def __repr__(self):
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*{t!r}" for t, c in self.sorted_terms())


def zero(ring, graph):
    return AlgebraElement(ring, graph, {})


def generator(ring, path, starred=False):
    """s_path, or its star."""
    g = path.graph
    src = g.vertex_path(path.source)
    term = SpanTerm(src, path) if starred else SpanTerm(path, src)
    return AlgebraElement(ring, g, {term: ring.one})


def vertex_idempotent(ring, graph, v):
    return generator(ring, graph.vertex_path(v))


def span_term(ring, mu, nu):
    return AlgebraElement(ring, mu.graph, {SpanTerm(mu, nu): ring.one})


def multiply(a, b):
    """Bilinear extension of
    (s_mu s_nu*)(s_lam s_sig*) = sum over minimal pairs (rho, tau) of
    (nu, lam) of s_{mu rho} s_{(sig tau)*}."""
    a._check(b)
    ring = a.ring
    out = {}
    for t1, c1 in a.terms.items():
        for t2, c2 in b.terms.items():
            c = ring.mul(c1, c2)
            for pair in lambda_min(t1.nu, t2.mu):
                term = SpanTerm(compose(t1.mu, pair.alpha),
                                compose(t2.nu, pair.beta))
                out[term] = ring.add(out.get(term, ring.zero), c)
    return AlgebraElement(ring, a.graph, out)


def star(a):
    return AlgebraElement(a.ring, a.graph,
                          {t.star: c for t, c in a.terms.items()})


def range_projection(ring, path):
    """s_path s_path*."""
    return AlgebraElement(ring, path.graph,
                          {SpanTerm(path, path): ring.one})


# -- closures and matrix units -----------------------------------------

@dataclass(frozen=True)
class PiEClosure:
    base: frozenset
    closed: tuple  # sorted paths

    def contains(self, p):
        return p in self._set

    @property
    def _set(self):
        return frozenset(self.closed)


def pi_closure(paths, max_size=20000):
    """Least superset of `paths` closed under the minimal-pair property:
    whenever lam ~ mu and rho ~ tau (equal degree, equal source) are in
    the set, all lam.alpha and tau.beta over minimal pairs (alpha, beta)
    of (mu, rho) are too."""
    paths = list(paths)
    if not paths:
        raise EmptyFamily("closure of an empty set")
    closed = set(paths)
    changed = True
    while changed:
        changed = False
        groups = {}
        for p in closed:
            groups.setdefault((p.degree, p.source), []).append(p)
        current = list(closed)
        for mu in current:
            for rho in current:
                pairs = lambda_min(mu, rho)
                if not pairs:
                    continue
                cls_mu = groups[(mu.degree, mu.source)]
                cls_rho = groups[(rho.degree, rho.source)]
                for pair in pairs:
                    for lam in cls_mu:
                        p = compose(lam, pair.alpha)
                        if p not in closed:
                            closed.add(p)
                            changed = True
                    for tau in cls_rho:
                        p = compose(tau, pair.beta)
                        if p not in closed:
                            closed.add(p)
                            changed = True
        if len(closed) > max_size:
            raise ClosureDiverged(f"closure exceeded {max_size} paths")
    return PiEClosure(frozenset(paths), tuple(sorted(closed)))


def _theta_factors(closure, lam):
    """The nontrivial extensions nu with lam.nu in the closure."""
    out = []
    for p in closure.closed:
        if p != lam and has_prefix(p, lam):
            out.append(factorize(p, lam.degree)[1])
    return sorted(set(out))


def _theta_verdict(closure, lam):
    """Exhaustiveness verdict for the factor family at s(lam); the matrix
    unit vanishes exactly when the family is exhaustive."""
    factors = _theta_factors(closure, lam)
    root = lam.graph.vertex_path(lam.source)
    return is_exhaustive(factors, vertex=root), factors


def theta(ring, closure, lam, mu):
    """The matrix-unit element
    s_lam (prod over factors (s_{s(lam)} - s_nu s_nu*)) s_mu*,
    fully expanded to span form; the zero element when the factor family
    is certified exhaustive."""
    if lam.source != mu.source:
        raise PairError("matrix-unit pair needs equal sources")
    if not closure.contains(lam):
        raise PairError(f"{lam!r} is not in the closure")
    verdict, factors = _theta_verdict(closure, lam)
    if verdict.status == EXHAUSTIVE:
        return zero(ring, lam.graph)
    acc = generator(ring, lam)
    p_src = vertex_idempotent(ring, lam.graph, lam.source)
    for nu in factors:
        acc = multiply(acc, p_src - range_projection(ring, nu))
    return multiply(acc, generator(ring, mu, starred=True))


@dataclass(frozen=True)
class NormalForm:
    closure: PiEClosure
    coords: tuple  # sorted ((lam, mu), coeff) pairs
    certified: bool

    @property
    def is_zero(self):
        return not self.coords

    def coord_dict(self):
        return dict(self.coords)


def support_paths(a):
    out = set()
    for t in a.terms:
        out.add(t.mu)
        out.add(t.nu)
    return out


def normal_form(a, closure=None):
    """Coordinates of `a` in the matrix-unit spanning set of the closure
    of its support.

    Each term s_mu s_nu* is rewritten through the inversion identity
    s_mu s_nu* = sum over extensions rho with mu.rho in the closure of
    Theta_{mu rho, nu rho}.  Vanishing matrix units are dropped; when a
    vanishing test comes back bound-limited the form is flagged as not
    certified and equality verdicts degrade accordingly.
    """
    if a.is_syntactic_zero:
        return NormalForm(PiEClosure(frozenset(), ()), (), True)
    if closure is None:
        closure = pi_closure(support_paths(a))
    ring = a.ring
    coords = {}
    for t, c in a.terms.items():
        for p in closure.closed:
            if p == t.mu or has_prefix(p, t.mu):
                rho = factorize(p, t.mu.degree)[1]
                pair = (p, compose(t.nu, rho))
                coords[pair] = ring.add(coords.get(pair, ring.zero), c)
    certified = True
    kept = []
    for pair in sorted(coords, key=lambda pr: (pr[0]._key, pr[1]._key)):
        c = coords[pair]
        if ring.eq(c, ring.zero):
            continue
        verdict, _ = _theta_verdict(closure, pair[0])
        if verdict.status == EXHAUSTIVE:
            continue
        if verdict.status != NOT_EXHAUSTIVE:
            certified = False
        kept.append((pair, c))
    return NormalForm(closure, tuple(kept), certified)


def compare(a, b):
    """Three-way algebra-equality verdict via the joint normal form."""
    diff = a - b
    if diff.is_syntactic_zero:
        return EQUAL
    nf = normal_form(diff)
    if nf.is_zero:
        return EQUAL if nf.certified else EQUAL_MODULO_UNVERIFIED
    # any certified-nonzero coordinate already separates the elements
    return DIFFERENT


def equal(a, b):
    return compare(a, b) == EQUAL


def is_zero(a):
    return equal(a, zero(a.ring, a.graph))


def grading_decompose(a):
    """Split by the Z^k degree d(mu) - d(nu) of the span terms."""
    out = {}
    for t, c in a.terms.items():
        out.setdefault(t.degree, {})[t] = c
    return {n: AlgebraElement(a.ring, a.graph, terms)
            for n, terms in sorted(out.items())}


# -- relation verification ---------------------------------------------

def verify_kp_relations(g, ring, cap):
    """Check the defining relations up to the degree cap.

    Any violation is an engine bug, not a property of the graph; the
    report lists them all.
    """
    cap = degrees.validate(cap, g.rank)
    report = {"kp1": [], "kp2": [], "kp3": [], "kp4": [],
              "kp4_unverified": []}

    for u in sorted(g.vertices):
        su = vertex_idempotent(ring, g, u)
        for v in sorted(g.vertices):
            sv = vertex_idempotent(ring, g, v)
            want = su if u == v else zero(ring, g)
            if multiply(su, sv) != want:
                report["kp1"].append((u, v))

    all_paths = []
    for n in degrees.below(cap):
        all_paths.extend(g.paths_of_degree(n))

    for lam in all_paths:
        for mu in all_paths:
            if mu.range != lam.source:
                continue
            if not degrees.leq(degrees.add(lam.degree, mu.degree), cap):
                continue
            left = multiply(generator(ring, lam), generator(ring, mu))
            if left != generator(ring, compose(lam, mu)):
                report["kp2"].append((lam, mu, "forward"))
            starred = multiply(generator(ring, mu, starred=True),
                               generator(ring, lam, starred=True))
            if starred != generator(ring, compose(lam, mu), starred=True):
                report["kp2"].append((lam, mu, "starred"))

    for lam in all_paths:
        for mu in all_paths:
            left = multiply(generator(ring, lam, starred=True),
                            generator(ring, mu))
            right = zero(ring, g)
            for pair in lambda_min(lam, mu):
                right = right + multiply(
                    generator(ring, pair.alpha),
                    generator(ring, pair.beta, starred=True))
            if left != right:
                report["kp3"].append((lam, mu))

    for v in sorted(g.vertices):
        root = g.vertex_path(v)
        for n in degrees.below(cap):
            if n == degrees.zero(g.rank):
                continue
            family = [p for p in le_paths(g, v, n) if not p.is_vertex]
            if not family or root in le_paths(g, v, n):
                continue
            verdict = is_exhaustive(family, vertex=root)
            if verdict.status != EXHAUSTIVE:
                continue
            acc = vertex_idempotent(ring, g, v)
            p_v = vertex_idempotent(ring, g, v)
            for lam in family:
                acc = multiply(acc, p_v - range_projection(ring, lam))
            nf = normal_form(acc)
            if not nf.is_zero:
                report["kp4"].append((v, n))
            elif not nf.certified:
                report["kp4_unverified"].append((v, n))

    report["violations"] = sum(
        len(report[k]) for k in ("kp1", "kp2", "kp3", "kp4"))
    return report


# -- quotients and ideals ----------------------------------------------

class QuotientFamily:
    """The homomorphism induced by killing a saturated hereditary set:
    generators with source in the set map to zero, the rest map to the
    same-named generators of the restricted graph."""

    def __init__(self, g, members, bound=None):
        self.members = frozenset(members)
        self.source_graph = g
        self.graph = quotient_graph(g, self.members, bound)

    def _map_path(self, p):
        if p.is_vertex:
            return self.graph.vertex_path(p.range)
        return self.graph.path_from_word([e.id for e in p.word])

    def __call__(self, a):
        if a.graph is not self.source_graph:
            raise RingMismatch("element is over a different graph")
        out = {}
        ring = a.ring
        for t, c in a.terms.items():
            if t.mu.source in self.members:
                continue
            term = SpanTerm(self._map_path(t.mu), self._map_path(t.nu))
            out[term] = ring.add(out.get(term, ring.zero), c)
        return AlgebraElement(ring, self.graph, out)


def quotient_family(g, members, bound=None):
    return QuotientFamily(g, members, bound)


class IdealMembership:
    """Membership oracle for the ideal generated by the vertex
    idempotents of a hereditary set; one-sided certificates, with
    honest indeterminate outcomes when neither side fires."""

    MEMBER = "member"
    NONMEMBER = "nonmember"
    INDETERMINATE = "indeterminate"

    def __init__(self, g, members, bound=None):
        from .structure import (hereditary_closure, is_hereditary,
                                saturated_closure)
        if not is_hereditary(g, members):
            raise PairError(f"{sorted(members)} is not hereditary")
        self.graph = g
        self.members = frozenset(members)
        self.closure = hereditary_closure(g, members)
        sat, exact = saturated_closure(g, members, bound)
        self.quotient = QuotientFamily(g, sat, bound) if exact else None

    def test(self, a):
        if a.is_syntactic_zero:
            return self.MEMBER
        nf = normal_form(a)
        if all(pair[0].source in self.closure for pair, _ in nf.coords):
            return self.MEMBER
        if self.quotient is not None:
            image = self.quotient(a)
            if compare(image, zero(a.ring, self.quotient.graph)) \
                    == DIFFERENT:
                return self.NONMEMBER
        return self.INDETERMINATE


def ideal_IH_span(g, members, bound=None):
    return IdealMembership(g, members, bound)


def scalar_quotient(a, m):
    """Reduce an integer-coefficient element mod m."""
    if a.ring.name != "Z":
        raise RingMismatch("scalar_quotient needs integer coefficients")
    ring = IntegersMod(m)
    return AlgebraElement(ring, a.graph,
                          {t: c % m for t, c in a.terms.items()})


# -- cycle witnesses ---------------------------------------------------

def generalized_cycle_comparison(c, ring):
    """Check the projection comparison for a generalized cycle: the mu
    projection is dominated by the nu projection, with equality exactly
    in the entrance-free case (up to the verified bound)."""
    qmu = range_projection(ring, c.mu)
    qnu = range_projection(ring, c.nu)
    left = compare(multiply(qmu, qnu), qmu)
    right = compare(multiply(qnu, qmu), qmu)
    report = {
        "le_holds": left == EQUAL and right == EQUAL,
        "left": left,
        "right": right,
    }
    if c.entrance is not None:
        report["strict"] = compare(qmu, qnu) == DIFFERENT
    else:
        report["projections_equal"] = compare(qmu, qnu)
    report["ok"] = report["le_holds"] and report.get("strict", True)
    return report


def entrance_isometries(c, count, ring):
    """The family p_i = x^i s_tau for x = s_nu* s_mu and the entrance
    tau; checks x* x = s_{s(mu)} and p_i* p_j = delta_ij s_{s(tau)},
    certifying infinitely many mutually orthogonal isometries."""
    if c.entrance is None:
        raise NoEntrance(f"cycle ({c.mu!r}, {c.nu!r}) has no entrance")
    if count < 1:
        raise PairError("count must be >= 1")
    g = c.mu.graph
    tau = c.entrance
    x = multiply(generator(ring, c.nu, starred=True), generator(ring, c.mu))
    s_tau = generator(ring, tau)
    src_mu = vertex_idempotent(ring, g, c.mu.source)
    src_tau = vertex_idempotent(ring, g, tau.source)
    report = {
        "isometry": compare(multiply(star(x), x), src_mu) == EQUAL,
        "x_star_tau_zero": compare(multiply(star(x), s_tau),
                                   zero(ring, g)) == EQUAL,
        "tau_star_x_zero": compare(multiply(star(s_tau), x),
                                   zero(ring, g)) == EQUAL,
    }
    powers = [src_mu]
    for _ in range(count):
        powers.append(multiply(powers[-1], x))
    ps = [multiply(powers[i], s_tau) for i in range(1, count + 1)]
    failures = []
    for i in range(count):
        for j in range(count):
            prod = multiply(star(ps[i]), ps[j])
            want = src_tau if i == j else zero(ring, g)
            if compare(prod, want) != EQUAL:
                failures.append((i + 1, j + 1))
    report["products_checked"] = count * count
    report["failures"] = failures
    report["ok"] = (report["isometry"] and report["x_star_tau_zero"]
                    and report["tau_star_x_zero"] and not failures)
    report["isometries"] = ps
    return report


# -- sinks and matrix models -------------------------------------------

def paths_into(g, v):
    """All paths with source v; raises SizeLimit if a cycle reaches v."""
    out = [g.vertex_path(v)]
    frontier = list(out)
    limit = len(g.vertices) * g.rank
    while frontier:
        nxt = []
        for p in frontier:
            for e in g.in_edges(p.range):
                q = compose(g.edge_path(e.id), p)
                if len(q.word) > limit:
                    raise SizeLimit(f"a cycle reaches {v}; infinitely "
                                    "many paths")
                if q not in out:
                    out.append(q)
                    nxt.append(q)
        frontier = nxt
    return sorted(out)


def matrix_unit_ideal(g, v, ring):
    """The corner ideal at a vertex emitting no edges: matrix units
    theta_{mu,nu} = s_mu s_nu* over the paths into v, with the full
    multiplication law verified symbolically."""
    if g.out_edges(v):
        raise NotASink(f"{v} emits edges")
    basis = paths_into(g, v)
    units = {(mu, nu): span_term(ring, mu, nu)
             for mu in basis for nu in basis}
    failures = []
    for (mu, nu), u1 in units.items():
        for (lam, gam), u2 in units.items():
            prod = multiply(u1, u2)
            want = units[(mu, gam)] if nu == lam else zero(ring, g)
            if compare(prod, want) != EQUAL:
                failures.append(((mu, nu), (lam, gam)))
    return {"vertex": v, "size": len(basis), "basis": basis,
            "failures": failures, "ok": not failures}


class BoundaryRepresentation:
    """Matrix model over the finite set of maximal segments of an acyclic
    graph: a segment is a path whose source emits nothing.  Used as an
    independent oracle for normal-form equality."""

    def __init__(self, g, ring):
        if find_cycles(g):
            raise NotAcyclic("graph has a cycle; segments are not finite")
        self.graph = g
        self.ring = ring
        sinks = [v for v in sorted(g.vertices) if not g.out_edges(v)]
        basis = []
        for t in sinks:
            basis.extend(paths_into(g, t))
        self.basis = sorted(basis)
        self.index = {p: i for i, p in enumerate(self.basis)}

    def matrix(self, a):
        """Sparse matrix of `a` acting on the segment module."""
        if a.graph is not self.graph:
            raise RingMismatch("element over a different graph")
        ring = self.ring
        out = {}
        for t, c in a.terms.items():
            for x in self.basis:
                if not has_prefix(x, t.nu):
                    continue
                y = factorize(x, t.nu.degree)[1]
                image = compose(t.mu, y)
                key = (self.index[image], self.index[x])
                val = ring.add(out.get(key, ring.zero), c)
                if ring.eq(val, ring.zero):
                    out.pop(key, None)
                else:
                    out[key] = val
        return out

    def is_zero(self, a):
        return not self.matrix(a)

    def equal(self, a, b):
        return self.matrix(a) == self.matrix(b)


def boundary_representation(g, ring):
    return BoundaryRepresentation(g, ring)
