"""Finite k-graphs presented by a colored 1-skeleton plus commuting squares.

A graph is the data (rank, vertices, edges, squares).  Edges are directed
range <- source and a word e_1 ... e_l is composable when
source(e_t) = range(e_{t+1}), so words read range-to-source.  Every
morphism is stored in color-ordered normal form: all color-1 edges first,
then color-2, and so on.  Any composable word reaches that form through a
sequence of square flips, and the factorization property makes the result
unique, so path equality is word equality.
"""

from dataclasses import dataclass

from . import degrees
from .errors import (
    ComposabilityError,
    DegreeError,
    FactorizationError,
)


@dataclass(frozen=True)
class Edge:
    """A degree-e_color morphism from `source` to `range`."""

    id: str
    color: int
    range: str
    source: str


@dataclass(frozen=True)
class Square:
    """Both factorizations of one degree-(e_i + e_j) morphism, i < j.

    first_outer (color i) . first_inner (color j) equals
    second_outer (color j) . second_inner (color i), read range-to-source.
    """

    first_outer: Edge
    first_inner: Edge
    second_outer: Edge
    second_inner: Edge


class KGraph:
    """A validated finite k-graph.

    Immutable after construction; the constructor runs the square bijection
    and (for rank >= 3) cube checks and raises FactorizationError on
    failure.
    """

    def __init__(self, rank, vertices, edges, squares):
        self.rank = rank
        self.vertices = frozenset(vertices)
        self.edges = {e.id: e for e in edges}
        if len(self.edges) != len(edges):
            raise FactorizationError("duplicate edge ids")
        self.squares = tuple(squares)
        self._by_range = {}   # (vertex, color) -> [Edge]
        self._by_source = {}
        for e in sorted(self.edges.values(), key=lambda e: e.id):
            self._by_range.setdefault((e.range, e.color), []).append(e)
            self._by_source.setdefault((e.source, e.color), []).append(e)
        # flip tables: word [a, b] with color(a) < color(b)  <->  [c, d]
        self._lhs = {}
        self._rhs = {}
        self._validate_squares()
        if self.rank >= 3:
            self._validate_cubes()
        self.validated = True
        self._mce_cache = {}
        self._path_cache = {}

    # -- validation -----------------------------------------------------

    def _validate_squares(self):
        for e in self.edges.values():
            if not 1 <= e.color <= self.rank:
                raise FactorizationError(f"edge {e.id} has color {e.color} "
                                         f"outside 1..{self.rank}")
            if e.range not in self.vertices or e.source not in self.vertices:
                raise FactorizationError(f"edge {e.id} has unknown endpoint")
        for sq in self.squares:
            a, b, c, d = (sq.first_outer, sq.first_inner,
                          sq.second_outer, sq.second_inner)
            for e in (a, b, c, d):
                if self.edges.get(e.id) != e:
                    raise FactorizationError(f"square uses unknown edge {e.id}",
                                             offenders=[e.id])
            if not (a.color < b.color and c.color == b.color
                    and d.color == a.color):
                raise FactorizationError(
                    "square colors must satisfy color(first) < color(inner)",
                    offenders=[a.id, b.id, c.id, d.id])
            if a.source != b.range or c.source != d.range:
                raise FactorizationError(
                    "square factors are not composable",
                    offenders=[a.id, b.id, c.id, d.id])
            if a.range != c.range or b.source != d.source:
                raise FactorizationError(
                    "square boundaries do not match",
                    offenders=[a.id, b.id, c.id, d.id])
            if (a.id, b.id) in self._lhs or (c.id, d.id) in self._rhs:
                raise FactorizationError(
                    "duplicate square for an edge pair",
                    offenders=[a.id, b.id])
            self._lhs[(a.id, b.id)] = (c, d)
            self._rhs[(c.id, d.id)] = (a, b)
        # every composable mixed-color pair must be covered, both directions
        for i in range(1, self.rank + 1):
            for j in range(i + 1, self.rank + 1):
                for a in self.edges.values():
                    if a.color != i:
                        continue
                    for b in self._by_range.get((a.source, j), []):
                        if (a.id, b.id) not in self._lhs:
                            raise FactorizationError(
                                f"no square for edge pair ({a.id}, {b.id})",
                                offenders=[a.id, b.id])
                for c in self.edges.values():
                    if c.color != j:
                        continue
                    for d in self._by_range.get((c.source, i), []):
                        if (c.id, d.id) not in self._rhs:
                            raise FactorizationError(
                                f"no square for edge pair ({c.id}, {d.id})",
                                offenders=[c.id, d.id])

    def _validate_cubes(self):
        for x in self.edges.values():
            for y in self._all_by_range(x.source):
                if y.color == x.color:
                    continue
                for z in self._all_by_range(y.source):
                    if z.color in (x.color, y.color):
                        continue
                    left = self._sort_word((x, y, z), leftmost=True)
                    right = self._sort_word((x, y, z), leftmost=False)
                    if left != right:
                        raise FactorizationError(
                            "cube condition fails for edge triple "
                            f"({x.id}, {y.id}, {z.id})",
                            offenders=[x.id, y.id, z.id])

    def _all_by_range(self, v):
        out = []
        for color in range(1, self.rank + 1):
            out.extend(self._by_range.get((v, color), []))
        return out

    # -- square flips ---------------------------------------------------

    def _flip(self, a, b):
        """Rewrite the adjacent pair [a, b] through its square."""
        if a.color < b.color:
            return self._lhs[(a.id, b.id)]
        return self._rhs[(a.id, b.id)]

    def _sort_word(self, word, leftmost=True):
        """Bubble a word into ascending color order via square flips."""
        w = list(word)
        while True:
            positions = range(len(w) - 1)
            if not leftmost:
                positions = reversed(positions)
            for t in positions:
                if w[t].color > w[t + 1].color:
                    w[t], w[t + 1] = self._flip(w[t], w[t + 1])
                    break
            else:
                return tuple(w)

    # -- path construction ---------------------------------------------

    def vertex_path(self, v):
        if v not in self.vertices:
            raise ComposabilityError(f"unknown vertex {v!r}")
        return Path(self, (), v)

    def edge_path(self, edge_id):
        e = self.edges[edge_id]
        return Path(self, (e,), e.range)

    def path_from_word(self, word, range_vertex=None):
        """Build the Path for any composable edge word (normalizing it)."""
        word = tuple(self.edges[e] if isinstance(e, str) else e for e in word)
        if not word:
            if range_vertex is None:
                raise ComposabilityError("empty word needs a vertex")
            return self.vertex_path(range_vertex)
        for t in range(len(word) - 1):
            if word[t].source != word[t + 1].range:
                raise ComposabilityError(
                    f"edges {word[t].id}, {word[t + 1].id} not composable")
        return Path(self, self._sort_word(word), word[0].range)

    def paths_of_degree(self, n, range_filter=None, source_filter=None):
        """All paths of degree exactly n, in stable lexicographic order."""
        n = degrees.validate(n, self.rank)
        key = (n, range_filter, source_filter)
        if key in self._path_cache:
            return self._path_cache[key]
        if range_filter is not None:
            starts = [range_filter]
        else:
            starts = sorted(self.vertices)
        out = []
        for v in starts:
            for word in self._walks(v, n, 1):
                p = Path(self, tuple(word), v)
                if source_filter is None or p.source == source_filter:
                    out.append(p)
        out.sort(key=lambda p: (tuple(e.id for e in p.word), p.range))
        self._path_cache[key] = out
        return out

    def _walks(self, v, n, color):
        """Color-ordered edge words of degree n starting (range side) at v."""
        if color > self.rank:
            yield []
            return
        for seg in self._color_walks(v, color, n[color - 1]):
            end = seg[-1].source if seg else v
            for rest in self._walks(end, n, color + 1):
                yield seg + rest

    def _color_walks(self, v, color, length):
        if length == 0:
            yield []
            return
        for e in self._by_range.get((v, color), []):
            for rest in self._color_walks(e.source, color, length - 1):
                yield [e] + rest

    def out_edges(self, v, color=None):
        """Edges with range v (the extensions of the vertex path at v)."""
        if color is not None:
            return list(self._by_range.get((v, color), []))
        return self._all_by_range(v)

    def in_edges(self, v, color=None):
        if color is not None:
            return list(self._by_source.get((v, color), []))
        out = []
        for c in range(1, self.rank + 1):
            out.extend(self._by_source.get((v, c), []))
        return out

    def __repr__(self):
        return (f"KGraph(rank={self.rank}, |V|={len(self.vertices)}, "
                f"|E|={len(self.edges)}, squares={len(self.squares)})")


class Path:
    """A morphism in color-ordered normal form.

    Do not construct directly with an unnormalized word; use the KGraph
    factories or `compose`.
    """

    __slots__ = ("graph", "word", "range", "source", "degree", "_key")

    def __init__(self, graph, word, range_vertex):
        self.graph = graph
        self.word = word
        self.range = range_vertex
        self.source = word[-1].source if word else range_vertex
        deg = [0] * graph.rank
        for e in word:
            deg[e.color - 1] += 1
        self.degree = tuple(deg)
        self._key = (tuple(e.id for e in word), range_vertex)

    def __eq__(self, other):
        return (isinstance(other, Path) and self.graph is other.graph
                and self._key == other._key)

    def __hash__(self):
        return hash(self._key)

    def __lt__(self, other):
        return (degrees.total(self.degree), self._key) < \
               (degrees.total(other.degree), other._key)

    def __repr__(self):
        if not self.word:
            return f"<{self.range}>"
        return "<" + ".".join(e.id for e in self.word) + ">"

    @property
    def is_vertex(self):
        return not self.word

    @property
    def is_cycle(self):
        return bool(self.word) and self.range == self.source


def compose(lam, mu):
    """The composite lam.mu, renormalized; requires r(mu) = s(lam)."""
    if lam.graph is not mu.graph:
        raise ComposabilityError("paths from different graphs")
    if mu.range != lam.source:
        raise ComposabilityError(
            f"r({mu!r}) = {mu.range} != s({lam!r}) = {lam.source}")
    if not mu.word:
        return lam
    if not lam.word:
        return mu
    g = lam.graph
    return Path(g, g._sort_word(lam.word + mu.word), lam.range)


def factorize(lam, m):
    """The unique (lam(0,m), lam(m,d(lam))) with m <= d(lam)."""
    m = degrees.validate(m, lam.graph.rank)
    if not degrees.leq(m, lam.degree):
        raise DegreeError(f"{m} is not <= d(lam) = {lam.degree}")
    g = lam.graph
    word = list(lam.word)
    prefix = []
    for color in range(1, g.rank + 1):
        for _ in range(m[color - 1]):
            idx = next(t for t, e in enumerate(word) if e.color == color)
            while idx > 0:
                word[idx - 1], word[idx] = g._flip(word[idx - 1], word[idx])
                idx -= 1
            prefix.append(word.pop(0))
    head = Path(g, tuple(prefix), lam.range)
    tail_range = head.source
    tail = Path(g, g._sort_word(tuple(word)) if word else (), tail_range)
    return head, tail


def subpath(lam, p, q):
    """lam(p, q), the unique middle factor for p <= q <= d(lam)."""
    p = degrees.validate(p, lam.graph.rank)
    q = degrees.validate(q, lam.graph.rank)
    if not (degrees.leq(p, q) and degrees.leq(q, lam.degree)):
        raise DegreeError(f"need {p} <= {q} <= {lam.degree}")
    _, rest = factorize(lam, p)
    mid, _ = factorize(rest, degrees.sub(q, p))
    return mid


def vertex_at(lam, p):
    """The vertex lam(p) = r(lam(p, d(lam)))."""
    return subpath(lam, p, p).range


def omega_graph(k, m):
    """The segment graph with vertices {p in N^k : p <= m}.

    One color-i edge from p + e_i to p whenever p + e_i <= m; all squares
    forced and unique.
    """
    if k < 1:
        raise DegreeError("rank must be >= 1")
    m = degrees.validate(m, k)

    def vid(p):
        return "v" + "_".join(map(str, p))

    def eid(i, p):
        # color-i edge with range p (source p + e_i)
        return f"c{i}_" + "_".join(map(str, p))

    points = degrees.below(m)
    vertices = [vid(p) for p in points]
    edges = []
    edge_by = {}
    for p in points:
        for i in range(1, k + 1):
            q = degrees.add(p, degrees.unit(k, i))
            if degrees.leq(q, m):
                e = Edge(eid(i, p), i, vid(p), vid(q))
                edges.append(e)
                edge_by[(i, p)] = e
    squares = []
    for p in points:
        for i in range(1, k + 1):
            for j in range(i + 1, k + 1):
                top = degrees.add(degrees.add(p, degrees.unit(k, i)),
                                  degrees.unit(k, j))
                if degrees.leq(top, m):
                    pi = degrees.add(p, degrees.unit(k, i))
                    pj = degrees.add(p, degrees.unit(k, j))
                    squares.append(Square(
                        first_outer=edge_by[(i, p)],
                        first_inner=edge_by[(j, pi)],
                        second_outer=edge_by[(j, p)],
                        second_inner=edge_by[(i, pj)],
                    ))
    return KGraph(k, vertices, edges, squares)
