import pytest

from kpa import build, compose, span_term, zero
from kpa.corpus import GRAPHS


@pytest.fixture(scope="session")
def corpus():
    return {name: build(name) for name in GRAPHS}


@pytest.fixture(scope="session")
def l2(corpus):
    return corpus["L2"]


@pytest.fixture(scope="session")
def single_loop(corpus):
    return corpus["single_loop"]


@pytest.fixture(scope="session")
def vw_edge(corpus):
    return corpus["vw_edge"]


@pytest.fixture(scope="session")
def line3(corpus):
    return corpus["line3"]


@pytest.fixture(scope="session")
def commuting_loops(corpus):
    return corpus["commuting_loops"]


def random_path(g, rng, max_len=3):
    # random walk growing at the source end
    v = rng.choice(sorted(g.vertices))
    lam = g.vertex_path(v)
    for _ in range(rng.randrange(max_len + 1)):
        outs = sorted(g.out_edges(lam.source), key=lambda e: e.id)
        if not outs:
            break
        lam = compose(lam, g.edge_path(rng.choice(outs).id))
    return lam


def paths_with_source(g, src, max_len):
    # grown at the range end so every result ends at src
    out = [g.vertex_path(src)]
    frontier = list(out)
    for _ in range(max_len):
        nxt = [compose(g.edge_path(e.id), lam)
               for lam in frontier for e in g.in_edges(lam.range)]
        out.extend(nxt)
        frontier = nxt
    return out


def random_element(g, ring, rng, terms=3, max_len=2):
    a = zero(ring, g)
    for _ in range(terms):
        mu = random_path(g, rng, max_len)
        nu = rng.choice(sorted(paths_with_source(g, mu.source, max_len)))
        coeff = ring.coerce(rng.choice([-2, -1, 1, 2, 3]))
        a = a + span_term(ring, mu, nu).scale(coeff)
    return a
