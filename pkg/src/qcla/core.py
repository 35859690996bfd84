"""Reversible circuit intermediate representation.

Circuits are flat lists of NOT/CNOT/Toffoli gates acting on wires drawn from
named registers.  The module provides:

* ``Wire``, ``Gate``, ``Register``, ``RegisterLayout``, ``Circuit`` -- the IR
* ``schedule_asap`` -- greedy in-order wire-disjoint slicing (depth)
* ``levelize`` -- dependency-level gate ordering for maximal packing
* ``resource_report`` -- gate counts, depth, ancilla tally
* ``invert`` -- reverse a circuit (every gate is self-inverse)
* ``constant_propagate`` -- simplify against compile-time-known wire values
* ``lightcone`` -- backward cone of influence of a single wire
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence


class CircuitError(ValueError):
    """A structurally invalid circuit, gate, or layout."""


class InternalConsistencyError(RuntimeError):
    """An internal invariant was violated (implementation bug guard)."""


class Role(str, Enum):
    """What a register contributes to an arithmetic circuit."""

    INPUT_A = "input-a"
    INPUT_B = "input-b"
    OUTPUT = "output"
    ANCILLA = "ancilla"
    CARRY_IN = "carry-in"


@dataclass(frozen=True, slots=True)
class Wire:
    """A single bit line, addressed as register name + index (0 = LSB)."""

    register: str
    index: int

    def __repr__(self) -> str:
        return f"{self.register}[{self.index}]"


class GateKind(Enum):
    NOT = "not"
    CNOT = "cnot"
    TOFFOLI = "ccx"

    @property
    def num_controls(self) -> int:
        return {"not": 0, "cnot": 1, "ccx": 2}[self.value]


@dataclass(frozen=True, slots=True)
class Gate:
    """One reversible gate: ``target ^= AND(controls)`` (empty AND = 1)."""

    kind: GateKind
    controls: tuple[Wire, ...]
    target: Wire
    phase: str | None = None

    def __post_init__(self) -> None:
        if len(self.controls) != self.kind.num_controls:
            raise CircuitError(
                f"{self.kind.value} expects {self.kind.num_controls} controls, "
                f"got {len(self.controls)}"
            )
        wires = (*self.controls, self.target)
        if len(set(wires)) != len(wires):
            raise CircuitError(f"gate wires must be distinct: {wires}")

    @property
    def wires(self) -> tuple[Wire, ...]:
        return (*self.controls, self.target)

    def __repr__(self) -> str:
        args = " ".join(repr(w) for w in self.wires)
        return f"{self.kind.value} {args}"


def not_(target: Wire, phase: str | None = None) -> Gate:
    return Gate(GateKind.NOT, (), target, phase)


def cnot(control: Wire, target: Wire, phase: str | None = None) -> Gate:
    return Gate(GateKind.CNOT, (control,), target, phase)


def ccx(c1: Wire, c2: Wire, target: Wire, phase: str | None = None) -> Gate:
    return Gate(GateKind.TOFFOLI, (c1, c2), target, phase)


@dataclass(frozen=True, slots=True)
class Register:
    name: str
    size: int
    role: Role


class RegisterLayout:
    """An ordered set of uniquely named registers."""

    def __init__(self, registers: Iterable[Register]):
        regs = tuple(registers)
        names = [r.name for r in regs]
        if len(set(names)) != len(names):
            raise CircuitError(f"duplicate register names in {names}")
        for r in regs:
            if r.size < 0:
                raise CircuitError(f"register {r.name} has negative size")
        carry_ins = [r for r in regs if r.role is Role.CARRY_IN]
        if len(carry_ins) > 1 or any(r.size > 1 for r in carry_ins):
            raise CircuitError("at most one carry-in register of size <= 1")
        self.registers = regs
        self._by_name = {r.name: r for r in regs}
        offsets: dict[str, int] = {}
        total = 0
        for r in regs:
            offsets[r.name] = total
            total += r.size
        self._offsets = offsets
        self.total_size = total

    def __getitem__(self, name: str) -> Register:
        return self._by_name[name]

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def wire(self, name: str, index: int) -> Wire:
        reg = self._by_name.get(name)
        if reg is None:
            raise CircuitError(f"unknown register {name!r}")
        if not 0 <= index < reg.size:
            raise CircuitError(f"index {index} out of range for {name}[{reg.size}]")
        return Wire(name, index)

    def wires(self, name: str) -> list[Wire]:
        return [Wire(name, i) for i in range(self._by_name[name].size)]

    def flat_index(self, wire: Wire) -> int:
        """Position of a wire in the layout's flattened bit order."""
        reg = self._by_name.get(wire.register)
        if reg is None or not 0 <= wire.index < reg.size:
            raise CircuitError(f"wire {wire!r} not in layout")
        return self._offsets[wire.register] + wire.index

    def all_wires(self) -> list[Wire]:
        return [w for r in self.registers for w in self.wires(r.name)]

    def __eq__(self, other: object) -> bool:
        return isinstance(other, RegisterLayout) and self.registers == other.registers

    def __repr__(self) -> str:
        inner = ", ".join(f"{r.name}[{r.size}]:{r.role.value}" for r in self.registers)
        return f"RegisterLayout({inner})"


@dataclass(frozen=True, slots=True)
class Barrier:
    """Marker before gate index ``position``, labelling the phase that follows."""

    position: int
    label: str


class Circuit:
    """An immutable gate list over a register layout, with phase barriers."""

    def __init__(
        self,
        layout: RegisterLayout,
        gates: Iterable[Gate],
        barriers: Iterable[Barrier] = (),
    ):
        self.layout = layout
        self.gates = tuple(gates)
        self.barriers = tuple(barriers)
        for g in self.gates:
            for w in g.wires:
                layout.flat_index(w)  # raises on foreign wires
        last = -1
        for b in self.barriers:
            if not 0 <= b.position <= len(self.gates):
                raise CircuitError(f"barrier position {b.position} out of range")
            if b.position < last:
                raise CircuitError("barriers must be in nondecreasing order")
            last = b.position

    def __len__(self) -> int:
        return len(self.gates)

    def counts(self) -> dict[GateKind, int]:
        out = {k: 0 for k in GateKind}
        for g in self.gates:
            out[g.kind] += 1
        return out

    def phase_gates(self, phase: str) -> list[Gate]:
        return [g for g in self.gates if g.phase == phase]

    def phase_end(self, phase: str) -> int:
        """Index one past the last gate tagged with ``phase``."""
        end = 0
        for i, g in enumerate(self.gates):
            if g.phase == phase:
                end = i + 1
        return end


def invert(circuit: Circuit) -> Circuit:
    """The inverse circuit: the same gates in reverse order."""
    n = len(circuit.gates)
    barriers = tuple(
        Barrier(n - b.position, b.label) for b in reversed(circuit.barriers)
    )
    return Circuit(circuit.layout, tuple(reversed(circuit.gates)), barriers)


def schedule_asap(circuit: Circuit) -> list[list[int]]:
    """Greedy in-order slicing: pack each gate as soon as the list allows.

    Walking the gate list once, a gate joins the newest slice when its wires
    are disjoint from every gate already in it, and otherwise closes that
    slice and opens the next one.  Slices are therefore contiguous runs of
    the gate list, so executing them in order is trivially equivalent to
    executing the original circuit.  Generators order independent gates so
    that this packing realizes the construction's parallelism (see
    :func:`levelize`).  Returns gate indices per slice.
    """
    slices: list[list[int]] = []
    cur: list[int] = []
    cur_wires: set[Wire] = set()
    for i, g in enumerate(circuit.gates):
        wires = set(g.wires)
        if cur_wires & wires:
            slices.append(cur)
            cur = []
            cur_wires = set()
        cur.append(i)
        cur_wires |= wires
    if cur:
        slices.append(cur)
    return slices


def levelize(gates: Sequence[Gate]) -> list[Gate]:
    """Stably sort a run of gates by wire-dependency level.

    A gate's level is one more than the highest level among earlier gates
    sharing a wire with it, so gates of equal level are pairwise
    wire-disjoint and :func:`schedule_asap` packs each level into a single
    slice.  Gates sharing a wire always differ in level and keep their
    relative order, hence the reorder only exchanges commuting
    (wire-disjoint) gates and semantics are unchanged.
    """
    last: dict[Wire, int] = {}
    levels: list[int] = []
    for g in gates:
        lv = 1 + max((last.get(w, 0) for w in g.wires), default=0)
        levels.append(lv)
        for w in g.wires:
            last[w] = lv
    return [g for _, g in sorted(zip(levels, gates), key=lambda lg: lg[0])]


@dataclass(frozen=True, slots=True)
class ResourceReport:
    toffoli: int
    cnot: int
    nots: int
    total_slices: int
    toffoli_slices: int
    ancilla_count: int
    width: int

    def as_dict(self) -> dict[str, int]:
        return {
            "toffoli": self.toffoli,
            "cnot": self.cnot,
            "not": self.nots,
            "total_slices": self.total_slices,
            "toffoli_slices": self.toffoli_slices,
            "ancillae": self.ancilla_count,
            "width": self.width,
        }


def resource_report(circuit: Circuit) -> ResourceReport:
    """Gate counts, slice counts under ASAP scheduling, and ancilla tally.

    ``toffoli_slices`` counts slices containing at least one Toffoli;
    ``ancilla_count`` is the total size of ancilla-role registers.
    """
    counts = circuit.counts()
    slices = schedule_asap(circuit)
    tof = 0
    for sl in slices:
        if any(circuit.gates[i].kind is GateKind.TOFFOLI for i in sl):
            tof += 1
    anc = sum(r.size for r in circuit.layout.registers if r.role is Role.ANCILLA)
    return ResourceReport(
        toffoli=counts[GateKind.TOFFOLI],
        cnot=counts[GateKind.CNOT],
        nots=counts[GateKind.NOT],
        total_slices=len(slices),
        toffoli_slices=tof,
        ancilla_count=anc,
        width=circuit.layout.total_size,
    )


def constant_propagate(circuit: Circuit, constants: Mapping[Wire, int]) -> Circuit:
    """Simplify a circuit against wires with compile-time-known values.

    Rules, applied in one forward pass with constant tracking:

    * a control known to be 0 deletes the gate;
    * a control known to be 1 is dropped (Toffoli -> CNOT -> NOT);
    * a gate whose target value stays compile-time-known updates the tracked
      constant and emits no gate.

    The result is equivalent to the input on all non-constant wires.  Reading
    one of the *declared* constant wires after it has been overwritten with a
    non-constant value raises :class:`InternalConsistencyError`.
    """
    for w, v in constants.items():
        circuit.layout.flat_index(w)
        if v not in (0, 1):
            raise CircuitError(f"constant for {w!r} must be 0 or 1, got {v}")
    known: dict[Wire, int] = dict(constants)
    declared = set(constants)
    clobbered: set[Wire] = set()
    out: list[Gate] = []
    old_to_new: list[int] = []
    for g in circuit.gates:
        old_to_new.append(len(out))
        for c in g.controls:
            if c in clobbered:
                raise InternalConsistencyError(
                    f"declared-constant wire {c!r} read after non-constant write"
                )
        vals = [known.get(c) for c in g.controls]
        if any(v == 0 for v in vals):
            continue
        live = tuple(c for c, v in zip(g.controls, vals) if v is None)
        if g.target in known:
            if not live:
                known[g.target] ^= 1
                continue
            del known[g.target]
            if g.target in declared:
                clobbered.add(g.target)
        kinds = {0: GateKind.NOT, 1: GateKind.CNOT, 2: GateKind.TOFFOLI}
        out.append(Gate(kinds[len(live)], live, g.target, g.phase))
    old_to_new.append(len(out))
    barriers = tuple(
        Barrier(old_to_new[b.position], b.label) for b in circuit.barriers
    )
    return Circuit(circuit.layout, out, barriers)


def lightcone(circuit: Circuit, sink: Wire) -> set[int]:
    """Indices of gates that can influence the final value of ``sink``.

    Walks the gate list backwards, marking gates that write a marked wire and
    then marking their control and target wires.
    """
    circuit.layout.flat_index(sink)
    marked = {sink}
    cone: set[int] = set()
    for i in range(len(circuit.gates) - 1, -1, -1):
        g = circuit.gates[i]
        if g.target in marked:
            cone.add(i)
            marked.update(g.controls)
    return cone
