"""Line-oriented text format for graph specs.

Grammar (UTF-8, one directive per line, `#` starts a comment):

    rank <k>
    vertex <id>
    edge <id> color <i> from <source-vertex> to <range-vertex>
    square <f> <g> = <g2> <f2>

A square line records f.g = g2.f2 read left-to-right as range-to-source,
with color(f) = color(f2) < color(g) = color(g2).  Unknown directives are
rejected.
"""

from .errors import ParseError
from .graph import Edge, KGraph, Square


def parse_graph(text):
    rank = None
    vertices = []
    edges = {}
    square_specs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        directive = tokens[0]
        if directive == "rank":
            if rank is not None:
                raise ParseError("duplicate rank directive", lineno)
            if len(tokens) != 2 or not tokens[1].isdigit() or int(tokens[1]) < 1:
                raise ParseError("rank needs a positive integer", lineno)
            rank = int(tokens[1])
        elif directive == "vertex":
            if len(tokens) != 2:
                raise ParseError("vertex needs exactly one id", lineno)
            if tokens[1] in vertices:
                raise ParseError(f"duplicate vertex {tokens[1]!r}", lineno)
            vertices.append(tokens[1])
        elif directive == "edge":
            if (len(tokens) != 8 or tokens[2] != "color"
                    or tokens[4] != "from" or tokens[6] != "to"):
                raise ParseError(
                    "expected: edge <id> color <i> from <src> to <rng>",
                    lineno)
            eid = tokens[1]
            if eid in edges or eid in vertices:
                raise ParseError(f"duplicate id {eid!r}", lineno)
            if not tokens[3].isdigit():
                raise ParseError("edge color must be an integer", lineno)
            src, rng = tokens[5], tokens[7]
            if src not in vertices or rng not in vertices:
                raise ParseError("edge endpoint not declared", lineno)
            edges[eid] = Edge(eid, int(tokens[3]), rng, src)
        elif directive == "square":
            if len(tokens) != 6 or tokens[3] != "=":
                raise ParseError("expected: square <f> <g> = <g2> <f2>",
                                 lineno)
            square_specs.append((tokens[1], tokens[2], tokens[4], tokens[5],
                                 lineno))
        else:
            raise ParseError(f"unknown directive {directive!r}", lineno)
    if rank is None:
        raise ParseError("missing rank directive")
    squares = []
    for f, g, g2, f2, lineno in square_specs:
        for eid in (f, g, g2, f2):
            if eid not in edges:
                raise ParseError(f"square uses unknown edge {eid!r}", lineno)
        squares.append(Square(first_outer=edges[f], first_inner=edges[g],
                              second_outer=edges[g2], second_inner=edges[f2]))
    return KGraph(rank, vertices, list(edges.values()), squares)


def parse_graph_file(path):
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def serialize_graph(g):
    lines = [f"rank {g.rank}"]
    for v in sorted(g.vertices):
        lines.append(f"vertex {v}")
    for e in sorted(g.edges.values(), key=lambda e: e.id):
        lines.append(f"edge {e.id} color {e.color} from {e.source} to {e.range}")
    for sq in g.squares:
        lines.append(f"square {sq.first_outer.id} {sq.first_inner.id} = "
                     f"{sq.second_outer.id} {sq.second_inner.id}")
    return "\n".join(lines) + "\n"
