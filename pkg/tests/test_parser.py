import pytest

from kpa import build, parse_graph, parse_graph_file, serialize_graph
from kpa.errors import ParseError


def test_roundtrip_all_corpus(corpus):
    for name, g in corpus.items():
        text = serialize_graph(g)
        h = parse_graph(text)
        assert h.rank == g.rank
        assert h.vertices == g.vertices
        assert set(h.edges) == set(g.edges)
        for eid in g.edges:
            assert (h.edges[eid].color, h.edges[eid].range,
                    h.edges[eid].source) == (g.edges[eid].color,
                                             g.edges[eid].range,
                                             g.edges[eid].source)
        assert len(h.squares) == len(g.squares)


def test_serialize_deterministic(l2):
    assert serialize_graph(l2) == serialize_graph(build("L2"))


def test_comments_and_blank_lines():
    g = parse_graph("""
# a loop
rank 1
vertex v

edge a color 1 from v to v  # trailing note
""")
    assert g.rank == 1 and set(g.edges) == {"a"}


def test_parse_file(tmp_path, l2):
    p = tmp_path / "g.kg"
    p.write_text(serialize_graph(l2))
    h = parse_graph_file(str(p))
    assert h.vertices == l2.vertices


def test_error_reports_line_number():
    with pytest.raises(ParseError) as exc:
        parse_graph("rank 1\nvertex v\nedge oops\n")
    assert exc.value.line == 3


def test_unknown_directive():
    with pytest.raises(ParseError):
        parse_graph("rank 1\nfrob v\n")


def test_missing_rank():
    with pytest.raises(ParseError):
        parse_graph("vertex v\n")


def test_semantic_errors_surface():
    # dangling endpoint caught at construction, reported as input error
    with pytest.raises(Exception):
        parse_graph("rank 1\nvertex v\nedge a color 1 from v to w\n")
