"""Common-extension calculus: MCE, minimal pairs, Ext, and the
exhaustiveness decision.

Exhaustiveness is decided exactly by an automaton whose states are the
extension sets Ext(tau; family).  Appending an edge transforms the state
through minimal pairs only, and every state consists of paths bounded by
the family join, so the state space is finite.  The family fails exactly
when the empty state is reachable; the reaching path is the witness.
"""

from dataclasses import dataclass

from . import degrees
from .errors import ComposabilityError, EmptyFamily
from .graph import compose, factorize

EXHAUSTIVE = "Exhaustive"
NOT_EXHAUSTIVE = "NotExhaustive"
EXHAUSTIVE_UP_TO_BOUND = "ExhaustiveUpToBound"


@dataclass(frozen=True)
class MinimalPair:
    alpha: object
    beta: object


@dataclass(frozen=True)
class ExhaustivenessVerdict:
    status: str
    witness: object
    bound_used: tuple

    @property
    def certified(self):
        return self.status in (EXHAUSTIVE, NOT_EXHAUSTIVE)


@dataclass(frozen=True)
class BoundarySegment:
    path: object
    depth: tuple
    frontier_note: tuple  # per color: "at_bound" | "no_edges"

    @property
    def complete(self):
        return all(f == "no_edges" for f in self.frontier_note)


def has_prefix(lam, mu):
    """True when mu = lam(0, d(mu))."""
    if not degrees.leq(mu.degree, lam.degree):
        return False
    return factorize(lam, mu.degree)[0] == mu


def mce(mu, nu):
    """All minimal common extensions of mu and nu."""
    if mu.graph is not nu.graph:
        raise ComposabilityError("paths from different graphs")
    g = mu.graph
    key = (mu, nu)
    if key in g._mce_cache:
        return g._mce_cache[key]
    if mu.range != nu.range:
        result = []
    else:
        join = degrees.join(mu.degree, nu.degree)
        result = [lam for lam in g.paths_of_degree(join, range_filter=mu.range)
                  if has_prefix(lam, mu) and has_prefix(lam, nu)]
    g._mce_cache[key] = result
    return result


def lambda_min(mu, nu):
    """The extension pairs (alpha, beta) with mu.alpha = nu.beta in MCE."""
    return [MinimalPair(factorize(lam, mu.degree)[1],
                        factorize(lam, nu.degree)[1])
            for lam in mce(mu, nu)]


def ext_set(mu, family):
    """Ext(mu; family): alpha-components over all members, deduplicated."""
    out = []
    seen = set()
    for nu in family:
        for pair in lambda_min(mu, nu):
            if pair.alpha not in seen:
                seen.add(pair.alpha)
                out.append(pair.alpha)
    out.sort()
    return out


def le_paths(g, v, n):
    """vLambda^{<=n}: paths that cannot grow further inside degree n."""
    n = degrees.validate(n, g.rank)
    out = []
    for p in degrees.below(n):
        for lam in g.paths_of_degree(p, range_filter=v):
            ok = True
            for i in range(g.rank):
                if p[i] < n[i] and g.out_edges(lam.source, i + 1):
                    ok = False
                    break
            if ok:
                out.append(lam)
    return out


def _fails_all(lam, family):
    return all(not lambda_min(mu, lam) for mu in family)


def is_exhaustive(family, bound=None, vertex=None, max_states=50000):
    """Decide exhaustiveness of a finite family at its common range.

    The decision tracks the extension set Ext(tau; family) along the
    extension tree of the root vertex.  That set is a finite collection
    of paths of degree at most the family join, and it transforms under
    appending an edge through minimal pairs only, so the walk lives in a
    finite state space: the family fails exactly when the empty state is
    reachable, and the reaching path is the witness.  Verdicts are
    therefore certificates in both directions; `ExhaustiveUpToBound` only
    appears if the defensive state cap is hit.  Witnesses are minimal in
    (edge count, word) order.
    """
    family = list(family)
    if not family:
        # an empty family never meets the vertex path itself
        if vertex is None:
            raise EmptyFamily("empty family with no vertex context")
        return ExhaustivenessVerdict(
            NOT_EXHAUSTIVE, vertex,
            bound if bound is not None else vertex.degree)
    g = family[0].graph
    v = family[0].range
    if any(mu.range != v for mu in family):
        raise ComposabilityError("family members must share a range")
    big = family[0].degree
    for mu in family[1:]:
        big = degrees.join(big, mu.degree)
    if bound is None:
        bound = degrees.add(big, (1,) * g.rank)
    else:
        bound = degrees.validate(bound, g.rank)

    root = g.vertex_path(v)
    start = frozenset(family)
    queue = [(start, root)]
    seen = {start}
    while queue:
        nxt = []
        for state, tau in sorted(queue, key=lambda st: st[1]._key):
            if not state:
                return ExhaustivenessVerdict(NOT_EXHAUSTIVE, tau, bound)
            for e in g.out_edges(tau.source):
                step = g.edge_path(e.id)
                new = set()
                for sigma in state:
                    for pair in lambda_min(step, sigma):
                        new.add(pair.alpha)
                fs = frozenset(new)
                if fs not in seen:
                    if len(seen) >= max_states:
                        return ExhaustivenessVerdict(
                            EXHAUSTIVE_UP_TO_BOUND, None, bound)
                    seen.add(fs)
                    nxt.append((fs, compose(tau, step)))
        queue = nxt
    return ExhaustivenessVerdict(EXHAUSTIVE, None, bound)


def boundary_segments(g, v, depth):
    """All of vLambda^{<=depth} annotated with per-color frontier notes."""
    depth = degrees.validate(depth, g.rank)
    out = []
    for lam in le_paths(g, v, depth):
        notes = tuple(
            "no_edges" if not g.out_edges(lam.source, i + 1) else "at_bound"
            for i in range(g.rank))
        out.append(BoundarySegment(lam, depth, notes))
    return out


def shift(seg, n):
    """Drop the degree-n prefix of a boundary segment."""
    n = degrees.validate(n, seg.path.graph.rank)
    _, tail = factorize(seg.path, n)
    return BoundarySegment(tail, degrees.sub(seg.depth, n), seg.frontier_note)
