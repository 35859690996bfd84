"""Log-depth carry computation over a prefix tree of propagate intervals.

Positions are 1-based: the carry array ``G[1..n]`` starts as the per-position
generate bits ``g[j-1, j]`` and ends as the carries ``c_1..c_n``; ``P_0[i]``
(``i >= 1``) is the per-position propagate bit ``a_i XOR b_i``.  Interval
propagate values ``P_t[m] = p[2^t * m, 2^t * (m+1))`` for ``t >= 1`` live in
ancilla slots.

Four round families build and then uncompute the tree:

* P-rounds fuse adjacent propagate intervals,
* G-rounds push generate bits up the tree,
* C-rounds fan carries back down to the remaining positions,
* inverse P-rounds erase the interval-propagate ancillae.

``PaddedRounds`` additionally supports widths padded up to a power of two
with constant propagate-1 / generate-0 positions (never materialized as
wires), and wraparound carries for end-around addition.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .core import (
    Barrier,
    Circuit,
    CircuitError,
    Gate,
    InternalConsistencyError,
    Register,
    RegisterLayout,
    Role,
    Wire,
    ccx,
    invert,
    levelize,
)

WireFn = Callable[[int], Wire]


def floor_log2(n: int) -> int:
    if n < 1:
        raise ValueError(f"floor_log2 needs n >= 1, got {n}")
    return n.bit_length() - 1


def ceil_log2(n: int) -> int:
    if n < 1:
        raise ValueError(f"ceil_log2 needs n >= 1, got {n}")
    return (n - 1).bit_length()


def interval_slot_count(n: int) -> int:
    """Number of interval-propagate ancillae for an unpadded width-n tree."""
    return n - n.bit_count() - floor_log2(n) if n >= 1 else 0


class AncillaMap:
    """Deterministic assignment of interval slots ``(t, m)`` to wires.

    Slots are laid out ``t`` ascending, then ``m`` ascending, matching the
    round structure of an unpadded width-``n`` tree: ``1 <= m < floor(n/2^t)``
    for ``1 <= t <= floor(log2 n) - 1``.
    """

    def __init__(self, n: int, wires: Callable[[int], Wire]):
        if n < 1:
            raise CircuitError(f"width must be >= 1, got {n}")
        self.n = n
        self._slots: dict[tuple[int, int], Wire] = {}
        idx = 0
        for t in range(1, floor_log2(n)):
            for m in range(1, n >> t):
                self._slots[(t, m)] = wires(idx)
                idx += 1
        self.count = idx

    def wire(self, t: int, m: int) -> Wire:
        try:
            return self._slots[(t, m)]
        except KeyError:
            raise CircuitError(f"no interval slot for (t={t}, m={m})") from None

    def __contains__(self, key: tuple[int, int]) -> bool:
        return key in self._slots


def max_fanout_round(n: int) -> int:
    """Largest C-round index ``t`` with a nonempty gate list (0 if none).

    Equals the largest ``t >= 1`` with ``3 * 2^(t-1) <= n``.
    """
    t = 0
    while 3 << t <= n:
        t += 1
    return t


def round_gates(
    kind: str,
    t: int,
    n: int,
    ancilla_map: AncillaMap,
    gw: WireFn | None = None,
    pw: WireFn | None = None,
    phase: str | None = None,
) -> list[Gate]:
    """Gates of one round of the unpadded width-``n`` carry tree.

    ``kind`` is one of ``"P"``, ``"G"``, ``"C"``.  ``gw(j)`` maps carry
    position ``j`` (1-based) to a wire; ``pw(i)`` maps position-propagate
    index ``i`` to a wire.  Defaults address registers ``Z`` and ``B``.
    Out-of-range ``t`` yields an empty list.
    """
    if n < 1:
        raise CircuitError(f"width must be >= 1, got {n}")
    if gw is None:
        gw = lambda j: Wire("Z", j - 1)
    if pw is None:
        pw = lambda i: Wire("B", i)

    def p_at(tt: int, m: int) -> Wire:
        return pw(m) if tt == 0 else ancilla_map.wire(tt, m)

    gates: list[Gate] = []
    if kind == "P":
        if 1 <= t <= floor_log2(n) - 1:
            for m in range(1, n >> t):
                gates.append(
                    ccx(p_at(t - 1, 2 * m), p_at(t - 1, 2 * m + 1),
                        ancilla_map.wire(t, m), phase)
                )
    elif kind == "G":
        if 1 <= t <= floor_log2(n):
            for m in range(n >> t):
                gates.append(
                    ccx(gw((m << t) + (1 << (t - 1))), p_at(t - 1, 2 * m + 1),
                        gw((m << t) + (1 << t)), phase)
                )
    elif kind == "C":
        if 1 <= t <= max_fanout_round(n):
            for m in range(1, ((n - (1 << (t - 1))) >> t) + 1):
                gates.append(
                    ccx(gw(m << t), p_at(t - 1, 2 * m),
                        gw((m << t) + (1 << (t - 1))), phase)
                )
    else:
        raise CircuitError(f"unknown round kind {kind!r}")
    return gates


def network_gates(
    n: int,
    ancilla_map: AncillaMap,
    gw: WireFn | None = None,
    pw: WireFn | None = None,
) -> list[Gate]:
    """The full carry tree: P-rounds, G-rounds, C-rounds, inverse P-rounds.

    Gates come back in dependency-level order (see ``levelize``), which
    overlaps rounds of different families -- e.g. P-round ``t + 1`` runs
    beside G-round ``t`` -- so that in-order slicing reaches the tree's
    true depth of ``floor(log n) + floor(log(n/3)) + 3``.
    """
    p_gates: list[Gate] = []
    for t in range(1, floor_log2(n)):
        p_gates += round_gates("P", t, n, ancilla_map, gw, pw, phase="P")
    g_gates: list[Gate] = []
    for t in range(1, floor_log2(n) + 1):
        g_gates += round_gates("G", t, n, ancilla_map, gw, pw, phase="G")
    c_gates: list[Gate] = []
    for t in range(max_fanout_round(n), 0, -1):
        c_gates += round_gates("C", t, n, ancilla_map, gw, pw, phase="C")
    pinv = [
        Gate(g.kind, g.controls, g.target, "Pinv") for g in reversed(p_gates)
    ]
    return levelize(p_gates + g_gates + c_gates + pinv)


@dataclass(frozen=True)
class CarryNetworkSpec:
    """A standalone carry-computation circuit request.

    ``direction="inverse"`` requests the exact gate reversal, which
    uncomputes the carries back into per-position generate bits.
    """

    n: int
    direction: str = "forward"

    def __post_init__(self) -> None:
        if self.n < 1:
            raise CircuitError(f"carry network needs n >= 1, got {self.n}")
        if self.direction not in ("forward", "inverse"):
            raise CircuitError(f"unknown direction {self.direction!r}")


def build_carry_network(spec: CarryNetworkSpec) -> Circuit:
    """Standalone width-``n`` carry circuit.

    Registers: ``B[n]`` holds the position propagate bits (``B[0]`` unused),
    ``Z[n]`` holds the generate bits on entry and the carries ``c_1..c_n`` on
    exit, ``X`` holds the interval-propagate ancillae (clean in, clean out).
    """
    n = spec.n
    layout = RegisterLayout(
        [
            Register("B", n, Role.INPUT_B),
            Register("Z", n, Role.OUTPUT),
            Register("X", interval_slot_count(n), Role.ANCILLA),
        ]
    )
    amap = AncillaMap(n, lambda i: Wire("X", i))
    gates = network_gates(n, amap)
    # rounds overlap in the emitted order, so each barrier marks where its
    # round family first contributes; phase tags identify the members
    barriers = []
    seen: set[str] = set()
    for i, g in enumerate(gates):
        if g.phase is not None and g.phase not in seen:
            seen.add(g.phase)
            barriers.append(Barrier(i, g.phase))
    circuit = Circuit(layout, gates, barriers)
    if spec.direction == "inverse":
        return invert(circuit)
    return circuit


_CONST1 = object()


class PaddedRounds:
    """Carry-tree rounds over ``n`` real positions padded to ``N = 2^k``.

    Padding positions (``>= n``) carry constant propagate 1 / generate 0 and
    are folded away at generation time: interval values that are entirely
    padding become constants, intervals whose upper half is padding alias the
    wire of their lower half, and only genuinely mixed intervals get an
    ancilla slot and a Toffoli.

    With ``wrap=True`` the tree also maintains the full-prefix propagate
    values ``p[0, 2^t)`` (slots ``(t, 0)``, fed from ``pw(0)``) and the
    C-rounds produce end-around carries: ``c_j = g[0, j) XOR c_0 * p[0, j)``
    where ``c_0`` is whatever the position-``n`` carry wire holds after the
    G-rounds.
    """

    def __init__(self, n: int, gw: WireFn, pw: WireFn,
                 slot_wires: Callable[[int], Wire], wrap: bool = False):
        if n < 2:
            raise CircuitError(f"padded rounds need n >= 2, got {n}")
        self.n = n
        self.k = ceil_log2(n)
        self.N = 1 << self.k
        self.gw = gw
        self.pw = pw
        self.wrap = wrap
        self.slots: dict[tuple[int, int], Wire] = {}
        idx = 0
        for t in range(1, self.k):
            ms = range(0 if wrap else 1, self.N >> t)
            for m in ms:
                if m == 0 or (m << t) + (1 << (t - 1)) < n:
                    self.slots[(t, m)] = slot_wires(idx)
                    idx += 1
        self.slot_count = idx

    def resolve_p(self, t: int, m: int) -> Wire | object:
        """Wire (or constant-1 marker) holding ``p[2^t * m, 2^t * (m+1))``."""
        if t == 0:
            return _CONST1 if m >= self.n else self.pw(m)
        lo = m << t
        if lo >= self.n:
            return _CONST1
        if m != 0 and lo + (1 << (t - 1)) >= self.n:
            return self.resolve_p(t - 1, 2 * m)
        return self.slots[(t, m)]

    def p_gates(self, phase: str = "P") -> list[Gate]:
        gates = []
        for t in range(1, self.k):
            for m in range(0 if self.wrap else 1, self.N >> t):
                if (t, m) not in self.slots:
                    continue
                lo = self.resolve_p(t - 1, 2 * m)
                hi = self.resolve_p(t - 1, 2 * m + 1)
                if lo is _CONST1 or hi is _CONST1:
                    raise InternalConsistencyError(
                        "constant operand for a materialized interval slot")
                gates.append(ccx(lo, hi, self.slots[(t, m)], phase))
        return gates

    def full_prefix_propagate(self) -> tuple[Wire | object, Wire | object]:
        """The two wires whose AND is ``p[0, N)`` (requires ``wrap``)."""
        return self.resolve_p(self.k - 1, 0), self.resolve_p(self.k - 1, 1)

    def g_gates(self, phase: str = "G") -> list[Gate]:
        """All G-round gates; sets ``self.carry0_wire`` to the wire that ends
        up holding ``g[0, N)`` (always the position-``n`` carry wire) and
        ``self.g_round_ends`` to the cumulative gate count after each round
        ``t``."""
        home: dict[int, Wire] = {j: self.gw(j) for j in range(1, self.n + 1)}
        gates = []
        self.g_round_ends: list[int] = []
        for t in range(1, self.k + 1):
            for m in range(self.N >> t):
                j = (m << t) + (1 << t)
                jc = j - (1 << (t - 1))
                pv = self.resolve_p(t - 1, 2 * m + 1)
                if pv is _CONST1:
                    cv = home.get(jc)
                    if cv is None:
                        continue  # control is constant 0
                    if home.get(j) is not None:
                        raise InternalConsistencyError(
                            "padding alias onto a live carry value")
                    home[j] = cv
                else:
                    gates.append(ccx(home[jc], pv, home[j], phase))
            self.g_round_ends.append(len(gates))
        self.carry0_wire = home[self.N]
        if self.carry0_wire != self.gw(self.n):
            raise InternalConsistencyError("top carry not at position n")
        return gates

    def c_gates(self, phase: str = "C") -> list[Gate]:
        """Wraparound C-rounds (requires ``wrap`` and a prior ``g_gates``)."""
        if not self.wrap:
            raise CircuitError("c_gates requires wrap=True")
        c0 = self.carry0_wire
        gates = []
        for t in range(self.k, 0, -1):
            j = 1 << (t - 1)
            if j <= self.n - 1:
                gates.append(ccx(c0, self.resolve_p(t - 1, 0), self.gw(j), phase))
            m = 1
            while (m << t) + (1 << (t - 1)) <= self.n - 1:
                gates.append(
                    ccx(self.gw(m << t), self.resolve_p(t - 1, 2 * m),
                        self.gw((m << t) + (1 << (t - 1))), phase)
                )
                m += 1
        return gates
