import pytest

from kpa import GeneratorConfig, build, random_graph
from kpa.corpus import GRAPHS, bouquet, omega, product_graph, _digraph
from kpa.errors import SizeLimit


def test_registry_size():
    assert len(GRAPHS) >= 10


def test_build_unknown():
    with pytest.raises(KeyError):
        build("nonesuch")


def test_bouquet_counts():
    g = bouquet(3)
    assert len(g.vertices) == 1 and len(g.edges) == 3
    with pytest.raises(SizeLimit):
        bouquet(99)


def test_omega_matches_registry():
    g = omega(2, (1, 1))
    h = build("omega_2_11")
    assert g.vertices == h.vertices and set(g.edges) == set(h.edges)


def test_product_graph_counts():
    f1 = _digraph(["p"], [("x", "p", "p"), ("y", "p", "p")])
    f2 = _digraph(["q"], [("z", "q", "q")])
    g = product_graph([f1, f2])
    assert g.rank == 2
    assert len(g.vertices) == 1
    assert len(g.edges) == 3
    assert len(g.squares) == 2


def test_random_graph_deterministic():
    cfg = GeneratorConfig(rank=2, vertices=1, max_edges=3, seed=11)
    g = random_graph(cfg)
    h = random_graph(cfg)
    assert set(g.edges) == set(h.edges)
    assert len(g.squares) == len(h.squares)


def test_random_graph_seeds_differ():
    a = random_graph(GeneratorConfig(rank=2, vertices=1, max_edges=3, seed=1))
    b = random_graph(GeneratorConfig(rank=2, vertices=1, max_edges=3, seed=2))
    assert (sorted(a.edges) != sorted(b.edges)
            or {s for s in a.squares} != {s for s in b.squares})


def test_random_graph_multi_vertex_and_rank3():
    g = random_graph(GeneratorConfig(rank=2, vertices=4, max_edges=2, seed=5))
    assert g.rank == 2 and 1 <= len(g.vertices) <= 4
    g = random_graph(GeneratorConfig(rank=3, vertices=1, max_edges=2, seed=5))
    assert g.rank == 3
