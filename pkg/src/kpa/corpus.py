"""Named example graphs and a seeded random generator.

The random generator has two construction styles.  Single-vertex graphs
get independently chosen loops per color and a random bijection for each
color pair's squares; for rank >= 3 the bijections are rejection-sampled
until the cube check passes.  Multi-vertex graphs are cartesian products
of random 1-graphs, where all squares are forced componentwise and the
cube condition holds automatically.
"""

import random
from dataclasses import dataclass

from .errors import FactorizationError, SizeLimit
from .graph import Edge, KGraph, Square


# -- hand-built graphs --------------------------------------------------

def single_vertex(k=1):
    """One vertex, no edges."""
    return KGraph(k, ["v"], [], [])


def single_loop():
    """One vertex with one loop: the graph whose paths are a^n."""
    v = "v"
    a = Edge("a", 1, v, v)
    return KGraph(1, [v], [a], [])


def bouquet(n):
    """One vertex with n loops of color 1 (n >= 2)."""
    if n < 2:
        raise SizeLimit("bouquet needs at least two loops")
    names = "abcdefghij"
    if n > len(names):
        raise SizeLimit("bouquet supports at most ten loops")
    v = "v"
    edges = [Edge(names[t], 1, v, v) for t in range(n)]
    return KGraph(1, [v], edges, [])


def vw_edge():
    """Two vertices and a single edge v <- w."""
    e = Edge("e", 1, "v", "w")
    return KGraph(1, ["v", "w"], [e], [])


def line_graph(length=3):
    """Acyclic chain v0 <- v1 <- ... <- v_length."""
    vertices = [f"v{t}" for t in range(length + 1)]
    edges = [Edge(f"e{t}", 1, f"v{t - 1}", f"v{t}")
             for t in range(1, length + 1)]
    return KGraph(1, vertices, edges, [])


def cycle_with_tail():
    """A loop at w plus an edge from w out to v; v sees the cycle."""
    c = Edge("c", 1, "w", "w")
    e = Edge("e", 1, "v", "w")
    return KGraph(1, ["v", "w"], [c, e], [])


def commuting_loops():
    """One vertex, one loop per color, the unique commuting square."""
    v = "v"
    a = Edge("a", 1, v, v)
    b = Edge("b", 2, v, v)
    sq = Square(first_outer=a, first_inner=b,
                second_outer=b, second_inner=a)
    return KGraph(2, [v], [a, b], [sq])


def flip_2graph():
    """One vertex, color-1 loops a1, a2 and a color-2 loop b, with the
    squares a1.b = b.a2 and a2.b = b.a1 (the flip exchanges the a's)."""
    v = "v"
    a1 = Edge("a1", 1, v, v)
    a2 = Edge("a2", 1, v, v)
    b = Edge("b", 2, v, v)
    squares = [
        Square(first_outer=a1, first_inner=b, second_outer=b,
               second_inner=a2),
        Square(first_outer=a2, first_inner=b, second_outer=b,
               second_inner=a1),
    ]
    return KGraph(2, [v], [a1, a2, b], squares)


def double_bouquet_product():
    """Product of two single-vertex 2-loop digraphs: a single-vertex
    2-graph with two loops per color and componentwise commuting squares.
    Both coordinate shifts branch, so no shift pair can agree."""
    f = _digraph(["p"], [("a", "p", "p"), ("b", "p", "p")])
    g = _digraph(["q"], [("c", "q", "q"), ("d", "q", "q")])
    return product_graph([f, g])


def two_isolated():
    """Two vertices, no edges: the simplest disconnected graph."""
    return KGraph(1, ["u", "v"], [], [])


def _digraph(vertices, arcs):
    """Factor for products: plain digraph as (vertex ids, (id, rng, src))."""
    return {"vertices": list(vertices), "arcs": list(arcs)}


def product_graph(factors):
    """Cartesian product of rank-1 factor digraphs; factor t supplies the
    color-(t+1) edges and all squares are forced componentwise."""
    k = len(factors)
    if k < 1:
        raise SizeLimit("need at least one factor")
    coords = [[]]
    for f in factors:
        coords = [c + [v] for c in coords for v in f["vertices"]]

    def vid(c):
        return "|".join(c)

    vertices = [vid(c) for c in coords]
    edges = []
    edge_at = {}
    for t, f in enumerate(factors):
        color = t + 1
        for eid, rng, src in f["arcs"]:
            for c in coords:
                if c[t] != rng:
                    continue
                rc, sc = list(c), list(c)
                sc[t] = src
                other = tuple(x for u, x in enumerate(c) if u != t)
                e = Edge(f"c{color}:{eid}:" + "|".join(other), color,
                         vid(rc), vid(sc))
                edges.append(e)
                edge_at[(color, eid, other)] = e
    squares = []
    for ti in range(k):
        for tj in range(ti + 1, k):
            rest = [u for u in range(k) if u not in (ti, tj)]
            rest_choices = [[]]
            for u in rest:
                rest_choices = [c + [v] for c in rest_choices
                                for v in factors[u]["vertices"]]
            for ei, ri, si in factors[ti]["arcs"]:
                for ej, rj, sj in factors[tj]["arcs"]:
                    for rc in rest_choices:
                        def coord(vi, vj):
                            c = [None] * k
                            c[ti], c[tj] = vi, vj
                            for u, x in zip(rest, rc):
                                c[u] = x
                            return c

                        def other_for(t, c):
                            return tuple(x for u, x in enumerate(c)
                                         if u != t)

                        fo = edge_at[(ti + 1, ei,
                                      other_for(ti, coord(ri, rj)))]
                        fi = edge_at[(tj + 1, ej,
                                      other_for(tj, coord(si, rj)))]
                        so = edge_at[(tj + 1, ej,
                                      other_for(tj, coord(ri, rj)))]
                        si_e = edge_at[(ti + 1, ei,
                                        other_for(ti, coord(ri, sj)))]
                        squares.append(Square(first_outer=fo, first_inner=fi,
                                              second_outer=so,
                                              second_inner=si_e))
    return KGraph(k, vertices, edges, squares)


# -- random generation --------------------------------------------------

@dataclass(frozen=True)
class GeneratorConfig:
    rank: int = 2
    vertices: int = 1
    max_edges: int = 3
    seed: int = 0


def _random_single_vertex(cfg, rng):
    v = "v"
    edges = []
    per_color = []
    for color in range(1, cfg.rank + 1):
        count = rng.randint(1, cfg.max_edges)
        group = [Edge(f"e{color}_{t}", color, v, v) for t in range(count)]
        per_color.append(group)
        edges.extend(group)
    for attempt in range(200):
        squares = []
        for i in range(cfg.rank):
            for j in range(i + 1, cfg.rank):
                lhs = [(a, b) for a in per_color[i] for b in per_color[j]]
                rhs = [(b, a) for a in per_color[i] for b in per_color[j]]
                rng.shuffle(rhs)
                for (a, b), (c, d) in zip(lhs, rhs):
                    squares.append(Square(first_outer=a, first_inner=b,
                                          second_outer=c, second_inner=d))
        try:
            return KGraph(cfg.rank, [v], edges, squares)
        except FactorizationError:
            if cfg.rank < 3:
                raise
    raise SizeLimit("no cube-consistent bijection found in 200 attempts")


def _random_factor(rng, n_vertices, max_arcs, tag):
    vertices = [f"{tag}{t}" for t in range(n_vertices)]
    count = rng.randint(1, max_arcs)
    arcs = []
    for t in range(count):
        rng_v = rng.choice(vertices)
        src_v = rng.choice(vertices)
        arcs.append((f"{tag}a{t}", rng_v, src_v))
    return _digraph(vertices, arcs)


def random_graph(cfg):
    """A seeded random k-graph; identical configs give identical graphs."""
    rng = random.Random(cfg.seed)
    if cfg.vertices <= 1:
        return _random_single_vertex(cfg, rng)
    sizes = []
    remaining = cfg.vertices
    for t in range(cfg.rank):
        if t == cfg.rank - 1:
            sizes.append(max(1, remaining))
        else:
            s = rng.randint(1, max(1, remaining))
            sizes.append(s)
            remaining = max(1, remaining // s)
    factors = [_random_factor(rng, sizes[t], cfg.max_edges, f"f{t}_")
               for t in range(cfg.rank)]
    return product_graph(factors)


# -- registry -----------------------------------------------------------

def omega(k, m):
    from .graph import omega_graph
    return omega_graph(k, m)


GRAPHS = {
    "single_vertex": single_vertex,
    "single_loop": single_loop,
    "L2": lambda: bouquet(2),
    "L3": lambda: bouquet(3),
    "vw_edge": vw_edge,
    "line3": lambda: line_graph(3),
    "cycle_with_tail": cycle_with_tail,
    "commuting_loops": commuting_loops,
    "flip_2graph": flip_2graph,
    "double_bouquet": double_bouquet_product,
    "two_isolated": two_isolated,
    "omega_1_2": lambda: omega(1, (2,)),
    "omega_2_11": lambda: omega(2, (1, 1)),
    "omega_2_22": lambda: omega(2, (2, 2)),
}


def build(name):
    if name not in GRAPHS:
        raise KeyError(f"unknown corpus graph {name!r}; "
                       f"choices: {', '.join(sorted(GRAPHS))}")
    return GRAPHS[name]()
