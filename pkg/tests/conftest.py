"""Shared helpers for the test suite."""

from __future__ import annotations

from qcla import build_variant
from qcla.core import Wire
from qcla.sim import run_columns, stride_column, zero_columns

# width grid used by the resource checks: dense through 64, then powers of two
GRID = list(range(7, 65)) + [128, 256, 512, 1024]


def gc_boundary_ok(n: int) -> bool:
    """Check the carry values at the G/C boundary of the carry network.

    After the P- and G-round gates, the position-``j`` carry wire must hold
    the interval generate ``g[(j-1) AND j, j)`` for every input, with the
    interval recurrences ``p[i,j] = p[i,k] p[k,j]`` and
    ``g[i,j] = g[k,j] XOR g[i,k] p[k,j]``.  Exhaustive over all ``4^n``
    generate/propagate input strings.
    """
    circuit = build_variant("carry-network", n)
    prefix = [g for g in circuit.gates if g.phase in ("P", "G")]
    nsamples = 1 << (2 * n)
    g_col = [stride_column(t, nsamples) for t in range(n)]
    p_col = [stride_column(n + t, nsamples) for t in range(n)]
    cols = zero_columns(circuit)
    for t in range(n):
        cols[Wire("Z", t)] = g_col[t]
        cols[Wire("B", t)] = p_col[t]
    run_columns(circuit, cols, (1 << nsamples) - 1, prefix)
    for j in range(1, n + 1):
        i = (j - 1) & j
        g_acc, p_acc = g_col[j - 1], p_col[j - 1]
        for t in range(j - 2, i - 1, -1):
            g_acc = g_acc ^ (g_col[t] & p_acc)
            p_acc = p_acc & p_col[t]
        if cols[Wire("Z", j - 1)] != g_acc:
            return False
    return True
