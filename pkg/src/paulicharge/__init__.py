"""Clifford reduction of Pauli Hamiltonians via conserved charges."""

from .pauli import (
    Hamiltonian,
    PauliTerm,
    format_pauli,
    hamiltonian,
    multiply,
    parse_pauli,
    symplectic_product,
)
from .clifford import CliffordCircuit, Gate, conjugate_circuit, conjugate_gate, gate, invert
from .gf2 import (
    BitMatrix,
    CanonicalCommutation,
    canonicalize,
    commutation_matrix,
    generating_subset,
    rank_gf2,
    theorem_bound,
)
from .reduction import (
    ReducedTerm,
    ReductionResult,
    SectorSpec,
    charges_in_original_basis,
    optimality_check,
    reduce,
    sector_hamiltonian,
    synthesize_to_x,
    synthesize_to_z,
)
from .models import LatticeSpec, hubbard, j1j2_chain, kitaev, z2_lgt
from .oracle import brute_force_charges, circuit_to_dense, to_dense, verify_reduction

__all__ = [
    "Hamiltonian",
    "PauliTerm",
    "format_pauli",
    "hamiltonian",
    "multiply",
    "parse_pauli",
    "symplectic_product",
    "CliffordCircuit",
    "Gate",
    "conjugate_circuit",
    "conjugate_gate",
    "gate",
    "invert",
    "BitMatrix",
    "CanonicalCommutation",
    "canonicalize",
    "commutation_matrix",
    "generating_subset",
    "rank_gf2",
    "theorem_bound",
    "ReducedTerm",
    "ReductionResult",
    "SectorSpec",
    "charges_in_original_basis",
    "optimality_check",
    "reduce",
    "sector_hamiltonian",
    "synthesize_to_x",
    "synthesize_to_z",
    "LatticeSpec",
    "hubbard",
    "j1j2_chain",
    "kitaev",
    "z2_lgt",
    "brute_force_charges",
    "circuit_to_dense",
    "to_dense",
    "verify_reduction",
]

__version__ = "0.1.0"
