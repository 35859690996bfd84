"""Line-oriented circuit text format, plus an OpenQASM 2.0 exporter.

The native format is UTF-8 text.  Header lines declare registers in
layout order as ``reg <name> <size> <role>``; gate lines are
``not A[0]``, ``cnot A[0] B[1]`` (control first) and
``ccx A[0] B[0] X[2]`` (two controls, then the target); ``barrier
<label>`` lines mark phase boundaries.  ``#`` starts a comment.
Parsing is strict: unknown tokens are errors, reported with the line
number.
"""

from __future__ import annotations

import re

from .core import (
    Barrier,
    Circuit,
    Gate,
    GateKind,
    Register,
    RegisterLayout,
    Role,
    Wire,
)

__all__ = ["ParseError", "emit_native", "parse_native", "emit_qasm"]


class ParseError(ValueError):
    """A malformed circuit file, with the offending line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


_WIRE_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)\[(\d+)\]$")
_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def emit_native(circuit: Circuit, header_comments: list[str] | None = None) -> str:
    """Serialize a circuit to the native text format."""
    lines = [f"# {c}" for c in header_comments or []]
    for r in circuit.layout.registers:
        lines.append(f"reg {r.name} {r.size} {r.role.value}")
    barriers = list(circuit.barriers)
    bi = 0
    for i, g in enumerate(circuit.gates):
        while bi < len(barriers) and barriers[bi].position == i:
            lines.append(f"barrier {barriers[bi].label}")
            bi += 1
        args = " ".join(str(w) for w in g.wires)
        lines.append(f"{g.kind.value} {args}")
    while bi < len(barriers):
        lines.append(f"barrier {barriers[bi].label}")
        bi += 1
    return "\n".join(lines) + "\n"


_KINDS = {k.value: k for k in GateKind}
_ROLES = {r.value: r for r in Role}


def _parse_wire(token: str, lineno: int) -> Wire:
    m = _WIRE_RE.match(token)
    if not m:
        raise ParseError(lineno, f"malformed wire reference {token!r}")
    return Wire(m.group(1), int(m.group(2)))


def parse_native(text: str) -> Circuit:
    """Parse the native text format back into a circuit.

    Gate phase tags are not part of the format, so parsed gates carry no
    phase; barriers and all counts round-trip exactly.
    """
    registers: list[Register] = []
    gates: list[Gate] = []
    barriers: list[Barrier] = []
    seen_gates = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        op, args = tokens[0], tokens[1:]
        if op == "reg":
            if seen_gates:
                raise ParseError(lineno, "reg line after first gate")
            if len(args) != 3:
                raise ParseError(lineno, "reg needs: name size role")
            name, size_s, role_s = args
            if not _NAME_RE.match(name):
                raise ParseError(lineno, f"bad register name {name!r}")
            if any(r.name == name for r in registers):
                raise ParseError(lineno, f"duplicate register {name!r}")
            if not size_s.isdigit():
                raise ParseError(lineno, f"bad register size {size_s!r}")
            if role_s not in _ROLES:
                raise ParseError(lineno, f"unknown role {role_s!r}")
            registers.append(Register(name, int(size_s), _ROLES[role_s]))
        elif op == "barrier":
            if len(args) != 1:
                raise ParseError(lineno, "barrier needs exactly one label")
            barriers.append(Barrier(len(gates), args[0]))
        elif op in _KINDS:
            kind = _KINDS[op]
            if len(args) != kind.num_controls + 1:
                raise ParseError(
                    lineno,
                    f"{op} needs {kind.num_controls + 1} wires, got {len(args)}")
            wires = [_parse_wire(t, lineno) for t in args]
            sizes = {r.name: r.size for r in registers}
            for w in wires:
                if w.register not in sizes:
                    raise ParseError(lineno, f"undeclared register {w.register!r}")
                if w.index >= sizes[w.register]:
                    raise ParseError(lineno, f"wire {w} out of range")
            if len(set(wires)) != len(wires):
                raise ParseError(lineno, "gate wires must be distinct")
            gates.append(Gate(kind, tuple(wires[:-1]), wires[-1]))
            seen_gates = True
        else:
            raise ParseError(lineno, f"unknown directive {op!r}")
    return Circuit(RegisterLayout(registers), gates, barriers)


def emit_qasm(circuit: Circuit) -> str:
    """Export a circuit as OpenQASM 2.0 (x / cx / ccx over named qregs).

    Register names are lowercased to satisfy QASM identifier rules;
    zero-sized registers are omitted.  Barriers span all registers.
    """
    lines = ['OPENQASM 2.0;', 'include "qelib1.inc";']
    regs = [r for r in circuit.layout.registers if r.size > 0]
    qasm_names = {}
    for r in regs:
        name = r.name.lower()
        if name in qasm_names.values():
            name = f"{name}_{len(qasm_names)}"
        qasm_names[r.name] = name
        lines.append(f"qreg {name}[{r.size}];")
    all_regs = ",".join(qasm_names[r.name] for r in regs)

    def ref(w: Wire) -> str:
        return f"{qasm_names[w.register]}[{w.index}]"

    ops = {GateKind.NOT: "x", GateKind.CNOT: "cx", GateKind.TOFFOLI: "ccx"}
    barriers = list(circuit.barriers)
    bi = 0
    for i, g in enumerate(circuit.gates):
        while bi < len(barriers) and barriers[bi].position == i:
            lines.append(f"barrier {all_regs};")
            bi += 1
        lines.append(f"{ops[g.kind]} {','.join(ref(w) for w in g.wires)};")
    while bi < len(barriers):
        lines.append(f"barrier {all_regs};")
        bi += 1
    return "\n".join(lines) + "\n"
