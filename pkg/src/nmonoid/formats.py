"""Line-oriented text formats for tables, codes, generator sets and circuits.

    monoid n=2 k=2          code n=2 k=2        circuit inputs=2
    map 0,0 -> e,e          1,1                 g1 = AND x1 x2
    map 1,e -> 10,1         0,e                 g2 = NOT g1
                                                out g2
A generator set is a ``monoid`` header followed by ``gen NAME`` lines,
each starting a block of ``map`` records.  ``#`` starts a comment.
Printing is canonical (sorted records), so output is deterministic and
``parse(print(x)) == x``.
"""

import re

from .circuits import GATE_ARITY, Circuit, Gate
from .codes import Code
from .errors import NMonoidError, ParseError
from .monoid import GeneratorSet
from .tables import Table
from .words import Context

_WIRE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


class _Line:
    def __init__(self, number, text):
        self.number = number
        self.text = text

    def error(self, message, token=None):
        column = 1
        if token is not None and token in self.text:
            column = self.text.index(token) + 1
        return ParseError(message, self.number, column)


def _lines(text):
    out = []
    for number, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].rstrip()
        if body.strip():
            out.append(_Line(number, body))
    return out


def _fields(line, names):
    """Parse ``key=value`` integer fields, in order."""
    tokens = line.text.split()[1:]
    if len(tokens) != len(names):
        raise line.error(f"expected fields {' '.join(n + '=' for n in names)}")
    values = []
    for tok, name in zip(tokens, names):
        key, sep, val = tok.partition("=")
        if key != name or not sep or not val.isdigit():
            raise line.error(f"expected {name}=<int>", tok)
        values.append(int(val))
    return values


def _header(lines, kind):
    if not lines:
        raise ParseError(f"missing '{kind}' header", 1, 1)
    first = lines[0]
    if first.text.split()[0] != kind:
        raise first.error(f"expected '{kind}' header")
    return first


def _context(line):
    n, k = _fields(line, ("n", "k"))
    try:
        return Context(n, k)
    except (ValueError, NMonoidError) as exc:
        raise line.error(str(exc)) from None


def _coords(ctx, line, token):
    parts = token.split(",")
    if len(parts) != ctx.n:
        raise line.error(f"word {token!r} needs {ctx.n} coordinates", token)
    out = []
    for part in parts:
        if part == "e":
            out.append("")
            continue
        for ch in part:
            if not ch.isdigit() or int(ch) >= ctx.k:
                raise line.error(f"letter {ch!r} is not a digit below {ctx.k}", token)
        if not part:
            raise line.error("empty coordinate; write 'e'", token)
        out.append(part)
    return tuple(out)


def _map_record(ctx, line):
    tokens = line.text.split()
    if len(tokens) != 4 or tokens[0] != "map" or tokens[2] != "->":
        raise line.error("expected 'map W -> W'")
    return _coords(ctx, line, tokens[1]), _coords(ctx, line, tokens[3])


def _build_table(ctx, records, line):
    try:
        return Table(ctx, records)
    except NMonoidError as exc:
        raise line.error(str(exc)) from None


def format_word(coords):
    return ",".join(c if c else "e" for c in coords)


def parse_word(ctx, text):
    """A single word such as ``0,e``."""
    return ctx.word(_coords(ctx, _Line(1, text), text.strip()))


def parse_table(text):
    lines = _lines(text)
    head = _header(lines, "monoid")
    ctx = _context(head)
    records = [_map_record(ctx, line) for line in lines[1:]]
    return _build_table(ctx, records, lines[-1] if records else head)


def format_table(f):
    out = [f"monoid n={f.ctx.n} k={f.ctx.k}"]
    out += [f"map {format_word(p.coords)} -> {format_word(y.coords)}" for p, y in f.items()]
    return "\n".join(out) + "\n"


def parse_code(text):
    lines = _lines(text)
    head = _header(lines, "code")
    ctx = _context(head)
    elements = []
    for line in lines[1:]:
        tokens = line.text.split()
        if len(tokens) != 1:
            raise line.error("expected one word per line")
        elements.append(ctx.word(_coords(ctx, line, tokens[0])))
    return Code(ctx, elements)


def format_code(C):
    out = [f"code n={C.ctx.n} k={C.ctx.k}"]
    out += [format_word(c) for c in sorted(C.coords)]
    return "\n".join(out) + "\n"


def parse_gens(text):
    lines = _lines(text)
    head = _header(lines, "monoid")
    ctx = _context(head)
    blocks = {}
    current = None
    starts = {}
    for line in lines[1:]:
        tokens = line.text.split()
        if tokens[0] == "gen":
            if len(tokens) != 2:
                raise line.error("expected 'gen NAME'")
            current = tokens[1]
            if current in blocks:
                raise line.error(f"generator {current!r} defined twice", current)
            blocks[current] = []
            starts[current] = line
        elif current is None:
            raise line.error("map record before any 'gen' line")
        else:
            blocks[current].append(_map_record(ctx, line))
    tables = {name: _build_table(ctx, recs, starts[name]) for name, recs in blocks.items()}
    try:
        return GeneratorSet(ctx, tables)
    except NMonoidError as exc:
        raise head.error(str(exc)) from None


def format_gens(gens):
    ctx = gens.ctx
    out = [f"monoid n={ctx.n} k={ctx.k}"]
    for name in sorted(gens.names):
        out.append(f"gen {name}")
        out += [
            f"map {format_word(p.coords)} -> {format_word(y.coords)}"
            for p, y in gens[name].items()
        ]
    return "\n".join(out) + "\n"


def parse_circuit(text):
    lines = _lines(text)
    head = _header(lines, "circuit")
    (inputs,) = _fields(head, ("inputs",))
    gates = []
    outputs = None
    for line in lines[1:]:
        tokens = line.text.split()
        if tokens[0] == "out":
            if outputs is not None:
                raise line.error("second 'out' line")
            outputs = tokens[1:]
            continue
        if outputs is not None:
            raise line.error("gate after the 'out' line")
        if len(tokens) < 3 or tokens[1] != "=":
            raise line.error("expected 'NAME = KIND wires'")
        name, kind, operands = tokens[0], tokens[2], tuple(tokens[3:])
        if not _WIRE.match(name):
            raise line.error(f"bad wire name {name!r}", name)
        if kind not in GATE_ARITY:
            raise line.error(f"unknown gate {kind!r}", kind)
        if len(operands) != GATE_ARITY[kind]:
            raise line.error(f"{kind} takes {GATE_ARITY[kind]} wires", kind)
        gates.append(Gate(name, kind, operands))
    if outputs is None:
        raise ParseError("missing 'out' line", lines[-1].number, 1)
    try:
        return Circuit(inputs, gates, outputs)
    except NMonoidError as exc:
        raise lines[-1].error(str(exc)) from None


def format_circuit(c):
    out = [f"circuit inputs={c.inputs}"]
    out += [" ".join((g.name, "=", g.kind, *g.operands)) for g in c.gates]
    out.append(" ".join(("out", *c.outputs)))
    return "\n".join(out) + "\n"
