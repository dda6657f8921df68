"""Binary linear algebra on int bitsets: ranks, generating subsets,
commutation matrices, and the symmetric elimination behind the qubit bound.

Matrices are stored row-major with each row packed into a Python int
(bit j of row i is entry (i, j)), so row operations are single XORs.
"""

from dataclasses import dataclass

from .pauli import Hamiltonian, PauliTerm, symplectic_product


@dataclass(frozen=True)
class BitMatrix:
    rows: int
    cols: int
    data: tuple[int, ...]  # row-major packed bits

    def __post_init__(self):
        if len(self.data) != self.rows:
            raise ValueError("row count does not match data")
        mask = (1 << self.cols) - 1
        if any(r & ~mask for r in self.data):
            raise ValueError("row data extends past the column count")

    def at(self, i: int, j: int) -> int:
        return (self.data[i] >> j) & 1

    def is_symmetric_zero_diagonal(self) -> bool:
        if self.rows != self.cols:
            return False
        return all(
            self.at(i, i) == 0 and all(self.at(i, j) == self.at(j, i) for j in range(i))
            for i in range(self.rows)
        )

    def __str__(self) -> str:
        return "\n".join(
            "".join(str(self.at(i, j)) for j in range(self.cols)) for i in range(self.rows)
        )


def bitmatrix(rows_of_bits: list[list[int]]) -> BitMatrix:
    """Build from a dense 0/1 row list."""
    nr = len(rows_of_bits)
    nc = len(rows_of_bits[0]) if nr else 0
    data = []
    for row in rows_of_bits:
        if len(row) != nc:
            raise ValueError("ragged rows")
        data.append(sum((b & 1) << j for j, b in enumerate(row)))
    return BitMatrix(nr, nc, tuple(data))


def identity(n: int) -> BitMatrix:
    return BitMatrix(n, n, tuple(1 << i for i in range(n)))


def rank_gf2(m: BitMatrix) -> int:
    """GF(2) row rank by Gaussian elimination; the input is not modified."""
    work = list(m.data)
    rank = 0
    for col in range(m.cols):
        pivot = None
        for i in range(rank, len(work)):
            if (work[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for i in range(len(work)):
            if i != rank and ((work[i] >> col) & 1):
                work[i] ^= work[rank]
        rank += 1
        if rank == len(work):
            break
    return rank


def multiply_gf2(a: BitMatrix, b: BitMatrix) -> BitMatrix:
    if a.cols != b.rows:
        raise ValueError("shape mismatch")
    # row i of a*b = XOR of b-rows selected by bits of a-row i
    data = []
    for arow in a.data:
        acc = 0
        rest = arow
        while rest:
            j = (rest & -rest).bit_length() - 1
            acc ^= b.data[j]
            rest &= rest - 1
        data.append(acc)
    return BitMatrix(a.rows, b.cols, tuple(data))


def transpose(m: BitMatrix) -> BitMatrix:
    data = [0] * m.cols
    for i, row in enumerate(m.data):
        rest = row
        while rest:
            j = (rest & -rest).bit_length() - 1
            data[j] |= 1 << i
            rest &= rest - 1
    return BitMatrix(m.cols, m.rows, tuple(data))


def invert_gf2(m: BitMatrix) -> BitMatrix:
    """Inverse over GF(2) via Gauss-Jordan; raises if singular."""
    if m.rows != m.cols:
        raise ValueError("only square matrices invert")
    n = m.rows
    work = list(m.data)
    inv = [1 << i for i in range(n)]
    for col in range(n):
        pivot = None
        for i in range(col, n):
            if (work[i] >> col) & 1:
                pivot = i
                break
        if pivot is None:
            raise ValueError("matrix is singular over GF(2)")
        work[col], work[pivot] = work[pivot], work[col]
        inv[col], inv[pivot] = inv[pivot], inv[col]
        for i in range(n):
            if i != col and ((work[i] >> col) & 1):
                work[i] ^= work[col]
                inv[i] ^= inv[col]
    return BitMatrix(n, n, tuple(inv))


def _symplectic_vector(t: PauliTerm) -> int:
    return t.x | (t.z << t.n)


def generating_subset(h: Hamiltonian) -> tuple[list[PauliTerm], list[frozenset[int]]]:
    """Greedy left-to-right product-wise independent subset of the terms.

    Independence is GF(2) independence of the concatenated (x|z) vectors;
    signs and coefficients are ignored since they do not affect commutation.
    Returns the generators plus, for every input term, the set of generator
    indices whose product reproduces that term's Pauli string.
    """
    gens: list[PauliTerm] = []
    expansions: list[frozenset[int]] = []
    # echelon basis: pivot bit -> (vector, generator index set as bitmask)
    basis: dict[int, tuple[int, int]] = {}
    for t in h.terms:
        v = _symplectic_vector(t)
        combo = 0
        while v:
            p = v.bit_length() - 1
            if p not in basis:
                break
            bv, bc = basis[p]
            v ^= bv
            combo ^= bc
        if v:
            gi = len(gens)
            gens.append(t)
            combo ^= 1 << gi
            basis[v.bit_length() - 1] = (v, combo)
        expansions.append(frozenset(i for i in range(len(gens)) if (combo >> i) & 1))
    return gens, expansions


def commutation_matrix(gens: list[PauliTerm]) -> BitMatrix:
    """Symmetric zero-diagonal matrix of pairwise symplectic products."""
    d = len(gens)
    data = [0] * d
    for i in range(d):
        for j in range(i + 1, d):
            if symplectic_product(gens[i], gens[j]):
                data[i] |= 1 << j
                data[j] |= 1 << i
    return BitMatrix(d, d, tuple(data))


@dataclass(frozen=True)
class CanonicalCommutation:
    """Canonical form of a commutation matrix: M = L . M(D) . L^T over GF(2),
    where M(D) is isotropic_count zero rows followed by rank/2 hyperbolic
    2x2 off-diagonal blocks."""

    dim: int
    rank: int
    L: BitMatrix
    isotropic_count: int

    def canonical_matrix(self) -> BitMatrix:
        data = [0] * self.dim
        for b in range(self.rank // 2):
            i = self.isotropic_count + 2 * b
            data[i] |= 1 << (i + 1)
            data[i + 1] |= 1 << i
        return BitMatrix(self.dim, self.dim, tuple(data))


def canonicalize(m: BitMatrix) -> CanonicalCommutation:
    """Symmetric Gaussian elimination of a symmetric zero-diagonal matrix.

    Pivots are scanned in row-major order: the first remaining row with an
    off-diagonal 1 is paired with the first column holding that 1; rows with
    no remaining 1 are isotropic.  Deterministic by construction.
    """
    if not m.is_symmetric_zero_diagonal():
        raise ValueError("canonicalize needs a symmetric matrix with zero diagonal")
    d = m.rows
    rows = list(m.data)
    trans = [1 << i for i in range(d)]  # running row-operation matrix E
    remaining = list(range(d))
    pairs: list[tuple[int, int]] = []
    isotropic: list[int] = []

    def add_row(dst: int, src: int):
        # symmetric update: row dst += row src, then column dst += column src
        rows[dst] ^= rows[src]
        trans[dst] ^= trans[src]
        col_src = rows[src]  # symmetry: column src equals row src
        # flip bit dst in every row r with col_src bit r set
        rest = col_src
        while rest:
            r = (rest & -rest).bit_length() - 1
            rows[r] ^= 1 << dst
            rest &= rest - 1

    while remaining:
        i = remaining[0]
        live = 0
        for j in remaining[1:]:
            live |= ((rows[i] >> j) & 1) << j
        if not live:
            isotropic.append(i)
            remaining.pop(0)
            continue
        j = (live & -live).bit_length() - 1
        for k in remaining:
            if k in (i, j):
                continue
            if (rows[k] >> j) & 1:
                add_row(k, i)
            if (rows[k] >> i) & 1:
                add_row(k, j)
        pairs.append((i, j))
        remaining.remove(i)
        remaining.remove(j)

    order = isotropic + [q for pair in pairs for q in pair]
    permuted = BitMatrix(d, d, tuple(trans[o] for o in order))
    L = invert_gf2(permuted)
    return CanonicalCommutation(dim=d, rank=2 * len(pairs), L=L, isotropic_count=len(isotropic))


def theorem_bound(h: Hamiltonian):
    """dim(M), rank(M) over a generating subset, and the qubit-count bound.

    The returned callable maps a charge choice c in [0, dim-rank] to the
    number of qubits needed: rank/2 + (dim - rank - c).
    """
    gens, _ = generating_subset(h)
    m = commutation_matrix(gens)
    dim = m.rows
    rank = rank_gf2(m)

    def min_qubits_at_c(c: int) -> int:
        if not 0 <= c <= dim - rank:
            raise ValueError(f"c must lie in [0, {dim - rank}]")
        return rank // 2 + (dim - rank - c)

    return dim, rank, min_qubits_at_c
