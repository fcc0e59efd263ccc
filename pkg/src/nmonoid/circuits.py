"""Boolean circuits as words over a fixed set of right-ideal morphisms.

Everything lives in dimension 2 over the letters 0, 1.  Wire values are the
leading bits of coordinate 1, and coordinate 2 serves as a stack.  Gates
act on the first one or two bits.  The shift ``SIGMA`` moves the head of
coordinate 1 onto coordinate 2 and ``SIGMA_INV`` moves it back.  With them,
the swap of the first two bits conjugates to a swap of any adjacent pair.

A circuit is encoded by bringing operands to the front with adjacent swaps,
applying gates there, and finally arranging the outputs at the front.  The
remaining bits are folded into a single trailing 0 with AND gates, so two
circuits with the same truth table give equal morphisms.
"""

import itertools
from dataclasses import dataclass, field

from .errors import (
    ArityMismatch,
    CrossCheckFailed,
    InvalidCircuit,
    UnknownGate,
)
from .monoid import GeneratorSet, eval_word, word_equal
from .tables import Table, apply
from .words import Context

BITS = Context(2, 2)

GATE_ARITY = {"AND": 2, "OR": 2, "NOT": 1, "FORK": 1, "CONST0": 0, "CONST1": 0}


def _bit_table(rule, width):
    """Table acting on the first ``width`` bits of coordinate 1."""
    entries = {}
    for bits in itertools.product("01", repeat=width):
        entries[("".join(bits), "")] = (rule(bits), "")
    return Table(BITS, entries)


def gate_table(kind):
    """Table of a gate or of the swap of the first two bits."""
    if kind == "AND":
        return _bit_table(lambda b: "1" if b == ("1", "1") else "0", 2)
    if kind == "OR":
        return _bit_table(lambda b: "1" if "1" in b else "0", 2)
    if kind == "NOT":
        return _bit_table(lambda b: "1" if b[0] == "0" else "0", 1)
    if kind == "FORK":
        return _bit_table(lambda b: b[0] + b[0], 1)
    if kind == "SWAP":
        return _bit_table(lambda b: b[1] + b[0], 2)
    if kind == "CONST0":
        return Table(BITS, {("", ""): ("0", "")})
    if kind == "CONST1":
        return Table(BITS, {("", ""): ("1", "")})
    raise UnknownGate(f"unknown gate {kind!r}")


def shift_sigma(ctx=BITS):
    """``(a u, v) -> (u, a v)``: move the head of coordinate 1 to coordinate 2."""
    if ctx.n != 2:
        raise ValueError("the shift needs dimension 2")
    return Table(ctx, {(a, ""): ("", a) for a in ctx.letters})


def shift_sigma_inverse(ctx=BITS):
    if ctx.n != 2:
        raise ValueError("the shift needs dimension 2")
    return Table(ctx, {("", a): (a, "") for a in ctx.letters})


_GENERATORS = None


def bridge_generators():
    """The generator set used by all circuit encodings (shared cache)."""
    global _GENERATORS
    if _GENERATORS is None:
        gens = {kind: gate_table(kind) for kind in (*GATE_ARITY, "SWAP")}
        gens["SIGMA"] = shift_sigma()
        gens["SIGMA_INV"] = shift_sigma_inverse()
        _GENERATORS = GeneratorSet(BITS, gens)
    return _GENERATORS


def transposition_word(j):
    """Word swapping bits j and j+1 (1-based): ``SIGMA_INV^(j-1) SWAP SIGMA^(j-1)``."""
    if j < 1:
        raise ValueError("transposition index must be positive")
    return ("SIGMA_INV",) * (j - 1) + ("SWAP",) + ("SIGMA",) * (j - 1)


def direct_transposition(j):
    """Table swapping bits j and j+1 of coordinate 1, on (j+1)-bit keys."""
    entries = {}
    for bits in itertools.product("01", repeat=j + 1):
        b = list(bits)
        b[j - 1], b[j] = b[j], b[j - 1]
        entries[("".join(bits), "")] = ("".join(b), "")
    return Table(BITS, entries)


@dataclass(frozen=True)
class Gate:
    name: str
    kind: str
    operands: tuple = ()


@dataclass(frozen=True)
class Circuit:
    """An acyclic circuit with inputs ``x1..xN``, gates in order, and outputs."""

    inputs: int
    gates: tuple = ()
    outputs: tuple = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))
        object.__setattr__(self, "outputs", tuple(self.outputs))
        if self.inputs < 0:
            raise InvalidCircuit("negative input count")
        known = set(self.input_names)
        for g in self.gates:
            if g.kind not in GATE_ARITY:
                raise InvalidCircuit(f"unknown gate kind {g.kind!r}")
            if len(g.operands) != GATE_ARITY[g.kind]:
                raise InvalidCircuit(f"{g.name}: {g.kind} takes {GATE_ARITY[g.kind]} inputs")
            for w in g.operands:
                if w not in known:
                    raise InvalidCircuit(f"{g.name}: wire {w!r} is not declared before use")
            if g.name in known:
                raise InvalidCircuit(f"wire {g.name!r} declared twice")
            known.add(g.name)
        if not self.outputs:
            raise InvalidCircuit("circuit has no outputs")
        for w in self.outputs:
            if w not in known:
                raise InvalidCircuit(f"output {w!r} is not a declared wire")

    @property
    def input_names(self):
        return [f"x{i}" for i in range(1, self.inputs + 1)]

    def evaluate(self, bits):
        """Output bits for a tuple of input bits (0/1 ints)."""
        if len(bits) != self.inputs:
            raise ArityMismatch(f"expected {self.inputs} input bits")
        val = dict(zip(self.input_names, bits))
        for g in self.gates:
            a = [val[w] for w in g.operands]
            if g.kind == "AND":
                val[g.name] = a[0] & a[1]
            elif g.kind == "OR":
                val[g.name] = a[0] | a[1]
            elif g.kind == "NOT":
                val[g.name] = 1 - a[0]
            elif g.kind == "FORK":
                val[g.name] = a[0]
            else:
                val[g.name] = 1 if g.kind == "CONST1" else 0
        return tuple(val[w] for w in self.outputs)

    def truth_table(self):
        return {
            bits: self.evaluate(bits) for bits in itertools.product((0, 1), repeat=self.inputs)
        }


class _Encoder:
    """Tracks which wire sits at each bit position while emitting generators."""

    def __init__(self, circuit):
        self.layout = list(circuit.input_names)
        self.steps = []  # generators in the order they act
        self.uses = {}
        for g in circuit.gates:
            for w in g.operands:
                self.uses[w] = self.uses.get(w, 0) + 1
        for w in circuit.outputs:
            self.uses[w] = self.uses.get(w, 0) + 1

    def swap(self, j):
        """Swap bit positions j and j+1 (0-based)."""
        self.steps.extend(reversed(transposition_word(j + 1)))
        lay = self.layout
        lay[j], lay[j + 1] = lay[j + 1], lay[j]

    def to_front(self, pos):
        for j in range(pos - 1, -1, -1):
            self.swap(j)

    def fetch(self, wire, reserved):
        """Put a copy of ``wire`` at position 0, ahead of ``reserved`` fixed bits.

        Afterwards the first ``reserved + 1`` positions are the new copy and
        the previously reserved bits; a wire still needed later keeps an
        instance behind them.
        """
        pos = self.layout.index(wire, reserved)
        self.to_front(pos)
        self.uses[wire] -= 1
        if self.uses[wire] > 0:
            self.steps.append("FORK")
            self.layout.insert(0, wire)
            for j in range(1, reserved + 1):
                self.swap(j)

    def gate(self, g):
        if g.kind in ("CONST0", "CONST1"):
            self.steps.append(g.kind)
            self.layout.insert(0, g.name)
        elif g.kind in ("AND", "OR"):
            a, b = g.operands
            self.fetch(b, 0)
            self.fetch(a, 1)
            self.steps.append(g.kind)
            self.layout[:2] = [g.name]
        else:
            self.fetch(g.operands[0], 0)
            if g.kind == "NOT":
                self.steps.append("NOT")
            self.layout[0] = g.name

    def finish(self, outputs):
        m = len(outputs)
        for r, w in enumerate(reversed(outputs)):
            self.fetch(w, r)
        lay = self.layout
        lay[:m] = [f"out{i}" for i in range(m)]
        # Fold everything after the outputs into one 0 bit.
        if len(lay) == m:
            self.steps.append("CONST0")
            lay.insert(0, "zero")
        else:
            self.to_front(m)
            while len(lay) > m + 1:
                self.to_front(m + 1)
                self.steps.append("AND")
                lay[:2] = ["junk"]
            # AND with a constant 0 makes the junk bit 0.
            self.steps.append("CONST0")
            self.steps.append("AND")
            lay[0] = "zero"
        for j in range(m):
            self.swap(j)
        return tuple(reversed(self.steps))


def encode_circuit(circuit):
    """Word over :func:`bridge_generators` computing the circuit.

    For input bits ``b`` the evaluated word sends ``(b, e)`` to
    ``(outputs + "0", e)``.
    """
    enc = _Encoder(circuit)
    for g in circuit.gates:
        enc.gate(g)
    return enc.finish(circuit.outputs)


def encoding_stats(circuit):
    """Circuit size against encoded word length (reported, not asserted)."""
    w = encode_circuit(circuit)
    return {"gates": len(circuit.gates), "inputs": circuit.inputs, "word_length": len(w)}


def run_encoding(circuit, bits):
    """Apply the evaluated encoding to input bits; returns coordinate 1 as a string."""
    table = eval_word(bridge_generators(), encode_circuit(circuit))
    y = apply(table, BITS.word(("".join(map(str, bits)), "")))
    return None if y is None else y.coords[0]


def truth_tables_equal(c1, c2):
    return c1.truth_table() == c2.truth_table()


def circuit_equal(c1, c2, cross_check=True):
    """Do two circuits compute the same function?

    Decided as a word problem on the encodings.  With ``cross_check`` the
    answer is compared against exhaustive truth tables.
    """
    if c1.inputs != c2.inputs or len(c1.outputs) != len(c2.outputs):
        raise ArityMismatch("circuits differ in input or output count")
    answer = word_equal(bridge_generators(), encode_circuit(c1), encode_circuit(c2))
    if cross_check and answer != truth_tables_equal(c1, c2):
        raise CrossCheckFailed("word problem and truth tables disagree")
    return answer


def random_circuit(rng, inputs, gates, outputs=1):
    """A random valid circuit (constants excluded unless nothing else fits)."""
    wires = [f"x{i}" for i in range(1, inputs + 1)]
    body = []
    for i in range(1, gates + 1):
        kinds = ["AND", "OR", "NOT", "FORK"] if wires else ["CONST0", "CONST1"]
        kind = rng.choice(kinds)
        ops = tuple(rng.choice(wires) for _ in range(GATE_ARITY[kind]))
        body.append(Gate(f"g{i}", kind, ops))
        wires.append(f"g{i}")
    outs = tuple(rng.choice(wires[-max(1, gates):]) for _ in range(outputs))
    return Circuit(inputs, tuple(body), outs)
