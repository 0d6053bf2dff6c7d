"""Relativistic delegation toolkit: nonlocal games for local Hamiltonians."""

import json

from ._core import (
    CapacityError,
    ParseError,
    PauliString,
    ShapeError,
    XZHamiltonian,
    amplification_power,
    causally_reachable,
    classical_magic_square_value,
    commutation_sign,
    ground_energy,
    multiply,
    omega_h,
    operator_norm,
    otp,
    run_json,
)

__all__ = [
    "CapacityError",
    "ParseError",
    "PauliString",
    "ShapeError",
    "XZHamiltonian",
    "amplification_power",
    "causally_reachable",
    "classical_magic_square_value",
    "commutation_sign",
    "ground_energy",
    "multiply",
    "omega_h",
    "operator_norm",
    "otp",
    "run",
    "run_json",
]


def run(descriptor):
    """Run a descriptor dict; returns (record dict, exit status)."""
    text, status = run_json(json.dumps(descriptor))
    return json.loads(text), status
