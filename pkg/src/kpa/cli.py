"""Command-line frontend: validate, analyze, classify, eval, generate.

Reports are line-oriented ``key: value`` blocks with a stable schema, so
they are machine-parseable and byte-identical for identical inputs.
Exit codes: 0 definitive, 2 indeterminate, 1 input error.
"""

import argparse
import re
import sys

from . import algebra, corpus
from .classify import INDETERMINATE, classify
from .errors import KpaError, ParseError
from .parser import parse_graph_file, serialize_graph
from .rings import ring_from_name
from .structure import (
    aperiodicity_analysis,
    find_cycles,
    find_generalized_cycles,
    is_cofinal,
    sat_hereditary_lattice,
)

OK, INPUT_ERROR, UNDECIDED = 0, 1, 2


def _fmt_path(p):
    if p.is_vertex:
        return p.range
    return ".".join(e.id for e in p.word)


def _fmt_degree(n):
    return ",".join(str(c) for c in n)


def _fmt(value):
    from .graph import Path
    if isinstance(value, Path):
        return _fmt_path(value)
    if isinstance(value, (frozenset, set)):
        return "{" + ",".join(sorted(value)) + "}"
    if isinstance(value, tuple) and all(isinstance(c, int) for c in value):
        return _fmt_degree(value)
    return str(value)


def _emit(lines, out=None):
    out = out if out is not None else sys.stdout
    for key, value in lines:
        out.write(f"{key}: {_fmt(value)}\n")


def _graph_summary(g):
    per_color = {i: 0 for i in range(1, g.rank + 1)}
    for e in g.edges.values():
        per_color[e.color] += 1
    lines = [("rank", g.rank), ("vertices", len(g.vertices))]
    for i in range(1, g.rank + 1):
        lines.append((f"edges_color_{i}", per_color[i]))
    lines.append(("squares", len(g.squares)))
    return lines


def _parse_bound(text, rank):
    parts = text.split(",")
    if len(parts) != rank or not all(p.strip().isdigit() for p in parts):
        raise ParseError(f"bound must be {rank} comma-separated integers")
    return tuple(int(p) for p in parts)


# -- element literals ---------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<gen>[st])\((?P<word>[^()]*)\)"
                    r"|(?P<op>[+*()-]))")


def _tokenize(text):
    pos = 0
    out = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise ParseError(f"bad element syntax near {text[pos:]!r}")
        if m.group("int") is not None:
            out.append(("int", int(m.group("int"))))
        elif m.group("gen") is not None:
            out.append((m.group("gen"), m.group("word").strip()))
        else:
            out.append((m.group("op"), m.group("op")))
        pos = m.end()
    return out


def _path_from_literal(g, word):
    if not word:
        raise ParseError("empty path word")
    ids = [w.strip() for w in word.split(".")]
    if len(ids) == 1 and ids[0] in g.vertices:
        return g.vertex_path(ids[0])
    for i in ids:
        if i not in g.edges:
            raise ParseError(f"unknown edge {i!r} in element literal")
    return g.path_from_word(ids)


class _ElementParser:
    """Recursive descent over: expr := term (('+'|'-') term)*;
    term := factor ('*' factor)*; factor := INT | s(word) | t(word) |
    '(' expr ')'."""

    def __init__(self, tokens, ring, graph):
        self.tokens = tokens
        self.pos = 0
        self.ring = ring
        self.graph = graph

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self):
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of element literal")
        self.pos += 1
        return tok

    def parse(self):
        value = self.expr()
        if self.peek() is not None:
            raise ParseError(f"trailing tokens in element literal")
        return value

    def expr(self):
        value = self.term()
        while self.peek() and self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            rhs = self.term()
            value = value + (rhs if op == "+" else -rhs)
        return value

    def term(self):
        value = self.factor()
        while self.peek() and self.peek()[0] == "*":
            self.take()
            value = _scalar_aware_multiply(value, self.factor())
        return value

    def factor(self):
        kind, payload = self.take()
        if kind == "int":
            # scalars act through scaling; the algebra has no global unit
            return _Scalar(self.ring, self.graph, payload)
        if kind in ("s", "t"):
            p = _path_from_literal(self.graph, payload)
            return algebra.generator(self.ring, p, starred=(kind == "t"))
        if kind == "(":
            value = self.expr()
            closing = self.take()
            if closing[0] != ")":
                raise ParseError("unbalanced parentheses in element literal")
            return value
        raise ParseError(f"unexpected token {payload!r} in element literal")


class _Scalar:
    """A bare integer literal; it only makes sense multiplied into an
    element (the span algebra has no global identity in general)."""

    def __init__(self, ring, graph, value):
        self.ring = ring
        self.graph = graph
        self.value = value

    def _combine(self, other, negate=False):
        if isinstance(other, _Scalar):
            v = -other.value if negate else other.value
            return _Scalar(self.ring, self.graph, self.value + v)
        raise ParseError("a bare scalar cannot be added to an element; "
                         "multiply it into a generator instead")

    def __add__(self, other):
        return self._combine(other)

    def __sub__(self, other):
        return self._combine(other, negate=True)

    def __neg__(self):
        return _Scalar(self.ring, self.graph, -self.value)


def _scalar_aware_multiply(a, b):
    if isinstance(a, _Scalar) and isinstance(b, _Scalar):
        return _Scalar(a.ring, a.graph, a.value * b.value)
    if isinstance(a, _Scalar):
        return b.scale(a.ring.coerce(a.value))
    if isinstance(b, _Scalar):
        return a.scale(a.ring.coerce(b.value))
    return algebra.multiply(a, b)


def parse_element(text, ring, graph):
    value = _ElementParser(_tokenize(text), ring, graph).parse()
    if isinstance(value, _Scalar):
        raise ParseError("element literal reduced to a bare scalar")
    return value


# -- subcommands --------------------------------------------------------

def cmd_validate(args):
    g = parse_graph_file(args.file)
    _emit([("command", "validate"), ("status", "valid")]
          + _graph_summary(g))
    return OK


def cmd_analyze(args):
    g = parse_graph_file(args.file)
    bound = _parse_bound(args.bound, g.rank) if args.bound else None
    lines = [("command", "analyze")] + _graph_summary(g)
    undecided = False

    lattice, exact = sat_hereditary_lattice(g, bound)
    lines.append(("lattice_size", len(lattice)))
    for i, member in enumerate(lattice):
        lines.append((f"lattice_{i}", frozenset(member)))
    lines.append(("lattice_exact", exact))

    cof = is_cofinal(g, bound)
    lines.append(("cofinal", cof.status))
    undecided |= cof.status == "Unknown"

    cycles = find_cycles(g)
    lines.append(("cycles", len(cycles)))
    for i, c in enumerate(cycles):
        lines.append((f"cycle_{i}", c))

    cap = bound or (2,) * g.rank
    gcs = find_generalized_cycles(g, cap)
    lines.append(("generalized_cycles", len(gcs)))
    for i, c in enumerate(gcs):
        entrance = _fmt_path(c.entrance) if c.entrance else "none"
        lines.append((f"generalized_cycle_{i}",
                      f"({_fmt_path(c.mu)}, {_fmt_path(c.nu)}) "
                      f"entrance={entrance}"))

    aper = aperiodicity_analysis(g, bound)
    lines.append(("aperiodic", aper.status))
    if aper.status == "No":
        w = aper.certificate
        lines.append(("periodicity_vertex", w.vertex))
        lines.append(("periodicity_m", w.m))
        lines.append(("periodicity_n", w.n))
    undecided |= aper.status == "Unknown"

    _emit(lines)
    return UNDECIDED if undecided else OK


def cmd_classify(args):
    g = parse_graph_file(args.file)
    ring = ring_from_name(args.ring)
    bound = _parse_bound(args.bound, g.rank) if args.bound else None
    verdict = classify(g, ring, bound)
    lines = [("command", "classify")] + _graph_summary(g)
    lines.append(("ring", ring.name))
    lines.append(("is_field", ring.is_field))
    lines.append(("outcome", verdict.outcome))
    lines.append(("bounds", verdict.bounds_used))
    if verdict.ring_note:
        lines.append(("ring_note", verdict.ring_note))
    certs = verdict.certificates
    if "lattice_witness" in certs:
        lines.append(("witness_vertices", certs["lattice_witness"]))
    if "periodicity" in certs:
        w = certs["periodicity"]
        lines.append(("periodicity_vertex", w.vertex))
        lines.append(("periodicity_m", w.m))
        lines.append(("periodicity_n", w.n))
    if "sink" in certs:
        lines.append(("sink", certs["sink"]))
        lines.append(("matrix_size", certs["size"]))
    if "vertex_witnesses" in certs:
        for v in sorted(certs["vertex_witnesses"]):
            gc, link = certs["vertex_witnesses"][v]
            lines.append((f"witness_{v}",
                          f"cycle=({_fmt_path(gc.mu)}, {_fmt_path(gc.nu)}) "
                          f"entrance={_fmt_path(gc.entrance)} "
                          f"path={_fmt_path(link)}"))
    _emit(lines)
    return UNDECIDED if verdict.outcome == INDETERMINATE else OK


def cmd_eval(args):
    g = parse_graph_file(args.file)
    ring = ring_from_name(args.ring)
    element = parse_element(args.expression, ring, g)
    nf = algebra.normal_form(element)
    lines = [("command", "eval"), ("ring", ring.name),
             ("expression", args.expression)]
    lines.append(("span_terms", len(element.terms)))
    for i, (t, c) in enumerate(element.sorted_terms()):
        lines.append((f"term_{i}",
                      f"{c} * {_fmt_path(t.mu)} {_fmt_path(t.nu)}*"))
    lines.append(("normal_form_zero", nf.is_zero))
    lines.append(("normal_form_certified", nf.certified))
    for i, ((lam, mu), c) in enumerate(nf.coords):
        lines.append((f"coord_{i}",
                      f"{c} * theta({_fmt_path(lam)}, {_fmt_path(mu)})"))
    grades = algebra.grading_decompose(element)
    lines.append(("degrees", " ".join(_fmt_degree(n) for n in grades)))
    _emit(lines)
    return OK


def cmd_generate(args):
    cfg = corpus.GeneratorConfig(rank=args.rank, vertices=args.vertices,
                                 max_edges=args.max_edges, seed=args.seed)
    g = corpus.random_graph(cfg)
    text = serialize_graph(g)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        _emit([("command", "generate"), ("written", args.output)]
              + _graph_summary(g))
    else:
        sys.stdout.write(text)
    return OK


def build_parser():
    p = argparse.ArgumentParser(
        prog="kpa",
        description="workbench for finite higher-rank graphs and their "
                    "span algebras")
    sub = p.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("validate", help="parse and validate a graph spec")
    v.add_argument("file")
    v.set_defaults(fn=cmd_validate)

    a = sub.add_parser("analyze", help="structural analysis report")
    a.add_argument("file")
    a.add_argument("--bound", help="degree bound, e.g. 2,2")
    a.set_defaults(fn=cmd_analyze)

    c = sub.add_parser("classify", help="classify the span algebra")
    c.add_argument("file")
    c.add_argument("--ring", default="Q", help="Z, Q, or Zmod:<m>")
    c.add_argument("--bound", help="degree bound, e.g. 2,2")
    c.set_defaults(fn=cmd_classify)

    e = sub.add_parser("eval", help="evaluate an element literal")
    e.add_argument("file")
    e.add_argument("expression")
    e.add_argument("--ring", default="Q", help="Z, Q, or Zmod:<m>")
    e.set_defaults(fn=cmd_eval)

    gen = sub.add_parser("generate", help="emit a seeded random graph spec")
    gen.add_argument("--rank", type=int, default=2)
    gen.add_argument("--vertices", type=int, default=1)
    gen.add_argument("--max-edges", type=int, default=3)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("-o", "--output")
    gen.set_defaults(fn=cmd_generate)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except KpaError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return INPUT_ERROR
    except OSError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
