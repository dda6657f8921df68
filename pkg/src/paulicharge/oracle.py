"""Brute-force ground truth at desk scale: dense matrices, exhaustive
symmetry counting, and spectral comparison of a reduction.

Qubit 0 is the leftmost tensor factor, i.e. the most significant bit of a
computational-basis index, matching the text form of Pauli strings.
"""

from dataclasses import dataclass

import numpy as np

from .pauli import Hamiltonian, PauliTerm, hamiltonian
from .clifford import CliffordCircuit
from .reduction import ReductionResult, SectorSpec, sector_hamiltonian

DENSE_CAP = 14  # 2^14-dim matrices; memory is the binding constraint
SEARCH_CAP = 6  # 4^6 Pauli strings in the exhaustive commutant search

_SINGLE = {
    (0, 0): np.eye(2, dtype=complex),
    (1, 0): np.array([[0, 1], [1, 0]], dtype=complex),
    (1, 1): np.array([[0, -1j], [1j, 0]], dtype=complex),
    (0, 1): np.array([[1, 0], [0, -1]], dtype=complex),
}


def _check_cap(n: int, cap: int):
    if n > cap:
        raise ValueError(f"n={n} exceeds the dense cap of {cap} qubits")


def term_to_dense(t: PauliTerm) -> np.ndarray:
    _check_cap(t.n, DENSE_CAP)
    m = np.eye(1, dtype=complex)
    for q in range(t.n):
        m = np.kron(m, _SINGLE[((t.x >> q) & 1, (t.z >> q) & 1)])
    return t.weight * m


def to_dense(h: Hamiltonian, cap: int = DENSE_CAP) -> np.ndarray:
    """Dense matrix of the Hamiltonian, offset included on the diagonal."""
    _check_cap(h.n, cap)
    dim = 1 << h.n
    m = np.zeros((dim, dim), dtype=complex)
    for t in h.terms:
        m += term_to_dense(t)
    m += h.offset * np.eye(dim)
    return m


_H = np.array([[1, 1], [1, -1]], dtype=complex) / np.sqrt(2)
_S = np.array([[1, 0], [0, 1j]], dtype=complex)


def circuit_to_dense(c: CliffordCircuit, cap: int = DENSE_CAP) -> np.ndarray:
    """Ordered product of gate matrices (first-listed gate applied first)."""
    _check_cap(c.n, cap)
    n = c.n
    dim = 1 << n
    u = np.eye(dim, dtype=complex)
    pos = lambda q: n - 1 - q  # bit position of qubit q in a basis index
    for g in c.gates:
        if g.kind in ("H", "S", "SDG"):
            single = _H if g.kind == "H" else (_S if g.kind == "S" else _S.conj())
            (k,) = g.qubits
            full = np.kron(
                np.kron(np.eye(1 << k, dtype=complex), single),
                np.eye(1 << (n - 1 - k), dtype=complex),
            )
        else:
            full = np.zeros((dim, dim), dtype=complex)
            if g.kind == "CNOT":
                cq, tq = g.qubits
                for s in range(dim):
                    s2 = s ^ (((s >> pos(cq)) & 1) << pos(tq))
                    full[s2, s] = 1
            else:  # SWAP
                a, b = g.qubits
                for s in range(dim):
                    ba, bb = (s >> pos(a)) & 1, (s >> pos(b)) & 1
                    s2 = s ^ (((ba ^ bb) << pos(a)) | ((ba ^ bb) << pos(b)))
                    full[s2, s] = 1
        u = full @ u
    return u


def brute_force_charges(h: Hamiltonian, cap: int = SEARCH_CAP) -> int:
    """Exhaustively count the independent Pauli symmetries inside the span.

    Enumerates all 4^n Pauli strings, keeps those commuting with every
    term, and returns the GF(2) dimension of the commuting set intersected
    with the span of the terms (the isotropic center).  Equals dim(M) -
    rank(M) of the commutation matrix, and the sweep's charge count c.
    """
    _check_cap(h.n, cap)
    n = h.n
    terms = [(t.x, t.z) for t in h.terms]
    # echelon basis of the terms' span over (x | z << n)
    basis: dict[int, int] = {}
    for x, z in terms:
        v = x | (z << n)
        while v:
            p = v.bit_length() - 1
            if p not in basis:
                basis[p] = v
                break
            v ^= basis[p]

    def in_span(v: int) -> bool:
        while v:
            p = v.bit_length() - 1
            if p not in basis:
                return False
            v ^= basis[p]
        return True

    count = 0
    for x in range(1 << n):
        for z in range(1 << n):
            if any(((x & tz).bit_count() + (z & tx).bit_count()) & 1 for tx, tz in terms):
                continue
            if in_span(x | (z << n)):
                count += 1
    dim = count.bit_length() - 1
    assert 1 << dim == count, "commutant intersection is not a subspace?"
    return dim


def _expm_herm(m: np.ndarray, t: float) -> np.ndarray:
    """exp(-i m t) for Hermitian m via eigendecomposition."""
    w, v = np.linalg.eigh(m)
    return (v * np.exp(-1j * w * t)) @ v.conj().T


def _reassembled(res: ReductionResult) -> Hamiltonian:
    """The conjugated Hamiltonian as explicit n-qubit terms."""
    shift = res.r + res.c
    terms = [
        PauliTerm(res.n, rt.tail.x << shift, (rt.zeta << res.r) | (rt.tail.z << shift),
                  1, rt.coeff)
        for rt in res.reduced_terms
    ]
    return hamiltonian(res.n, terms, res.offset)


def _reduced_register(res: ReductionResult) -> Hamiltonian:
    """Same, with the r identity qubits dropped (c + active qubits)."""
    m = res.c + res.active
    terms = [
        PauliTerm(m, rt.tail.x << res.c, rt.zeta | (rt.tail.z << res.c), 1, rt.coeff)
        for rt in res.reduced_terms
    ]
    return hamiltonian(m, terms, res.offset)


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    deviation: float


@dataclass(frozen=True)
class VerificationReport:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(ch.passed for ch in self.checks)

    def __str__(self) -> str:
        return "\n".join(
            f"{'PASS' if ch.passed else 'FAIL'} {ch.name} (max deviation {ch.deviation:.3e})"
            for ch in self.checks
        )


def verify_reduction(h: Hamiltonian, res: ReductionResult, cap: int = 10,
                     seed: int = 7) -> VerificationReport:
    """Five dense checks of a reduction at small n.

    1. U H U' equals the term-wise conjugated Hamiltonian (1e-12).
    2. U H U' is block diagonal over the first r+c qubits (1e-12).
    3. The union over all 2^c sectors of sector spectra, each with
       multiplicity 2^r, equals the spectrum of H (1e-9).
    4. Every original-basis charge commutes with H (1e-12).
    5. Time evolution factorizes over a random sector state (1e-8).
    """
    _check_cap(h.n, cap)
    checks = []

    hd = to_dense(h, cap)
    u = circuit_to_dense(res.circuit, cap)
    conj = u @ hd @ u.conj().T
    dev = float(np.max(np.abs(conj - to_dense(_reassembled(res), cap))))
    checks.append(Check("conjugated Hamiltonian matches tableau", dev <= 1e-12, dev))

    blocks = 1 << (res.r + res.c)
    bsize = 1 << res.active
    view = conj.reshape(blocks, bsize, blocks, bsize)
    off = view.copy()
    for b in range(blocks):
        off[b, :, b, :] = 0
    dev = float(np.max(np.abs(off)))
    checks.append(Check("block diagonal over first r+c qubits", dev <= 1e-12, dev))

    sector_eigs = []
    for z in range(1 << res.c):
        hs = to_dense(sector_hamiltonian(res, SectorSpec(z, res.c)), cap)
        sector_eigs.append(np.tile(np.linalg.eigvalsh(hs), 1 << res.r))
    union = np.sort(np.concatenate(sector_eigs))
    full = np.sort(np.linalg.eigvalsh(hd))
    dev = float(np.max(np.abs(union - full)))
    checks.append(Check("sector spectra union equals full spectrum", dev <= 1e-9, dev))

    dev = 0.0
    for ch in res.charges_original:
        zd = term_to_dense(ch)
        dev = max(dev, float(np.max(np.abs(zd @ hd - hd @ zd))))
    checks.append(Check("original-basis charges commute with H", dev <= 1e-12, dev))

    rng = np.random.default_rng(seed)
    t = float(rng.uniform(0.0, 1.0))
    z = int(rng.integers(0, 1 << res.c))
    psi = rng.normal(size=1 << res.active) + 1j * rng.normal(size=1 << res.active)
    psi /= np.linalg.norm(psi)
    hr = to_dense(_reduced_register(res), cap)
    zvec = np.zeros(1 << res.c)
    # conditional qubit j is the j-th most significant bit of the block index
    zvec[sum(((z >> j) & 1) << (res.c - 1 - j) for j in range(res.c))] = 1.0
    state = np.kron(zvec, psi)
    lhs = _expm_herm(hr, t) @ state
    hz = to_dense(sector_hamiltonian(res, SectorSpec(z, res.c)), cap)
    rhs = np.kron(zvec, _expm_herm(hz, t) @ psi)
    dev = float(np.max(np.abs(lhs - rhs)))
    checks.append(Check("time evolution factorizes over sectors", dev <= 1e-8, dev))

    return VerificationReport(tuple(checks))
