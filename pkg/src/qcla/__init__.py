"""Log-depth carry-lookahead adder circuits over NOT/CNOT/Toffoli.

Circuit generators for out-of-place / in-place addition, addition mod
2^n and mod 2^n - 1, subtraction, and comparison, together with a
classical reversible simulator, ASAP time-slice scheduling, and
closed-form resource verification.
"""

from .adders import (
    VARIANTS,
    AdderRequest,
    build,
    build_variant,
    gen_add_ip,
    gen_add_mersenne,
    gen_add_mod2n,
    gen_add_oop,
    gen_compare,
    gen_sub,
    request_for,
)
from .carry import CarryNetworkSpec, build_carry_network
from .core import (
    Barrier,
    Circuit,
    CircuitError,
    Gate,
    GateKind,
    Register,
    RegisterLayout,
    ResourceReport,
    Role,
    Wire,
    constant_propagate,
    invert,
    lightcone,
    resource_report,
    schedule_asap,
)
from .formulas import formula_eval, popcount_identity_check, verify_family
from .sim import (
    Counterexample,
    exhaustive_check,
    expected_state,
    permutation_check,
    random_check,
    run_operands,
    run_state,
)
from .textfmt import ParseError, emit_native, emit_qasm, parse_native

__version__ = "0.1.0"

__all__ = [
    "AdderRequest",
    "Barrier",
    "CarryNetworkSpec",
    "Circuit",
    "CircuitError",
    "Counterexample",
    "Gate",
    "GateKind",
    "ParseError",
    "Register",
    "RegisterLayout",
    "ResourceReport",
    "Role",
    "VARIANTS",
    "Wire",
    "build",
    "build_carry_network",
    "build_variant",
    "constant_propagate",
    "emit_native",
    "emit_qasm",
    "exhaustive_check",
    "expected_state",
    "formula_eval",
    "gen_add_ip",
    "gen_add_mersenne",
    "gen_add_mod2n",
    "gen_add_oop",
    "gen_compare",
    "gen_sub",
    "invert",
    "lightcone",
    "parse_native",
    "permutation_check",
    "popcount_identity_check",
    "random_check",
    "request_for",
    "resource_report",
    "run_operands",
    "run_state",
    "schedule_asap",
    "verify_family",
]
