"""Deterministic generators for the benchmark lattice Hamiltonians.

Conventions (fixed so output files are byte-stable):

Z2 gauge theory on an R x C torus of plaquettes: qubits on edges, site
(r, c) owns horizontal edge 2*(r*C + c) and vertical edge 2*(r*C + c) + 1.
Plaquette (r, c) is its own horizontal edge, the horizontal edge of
(r+1 mod R, c), and the vertical edges of (r, c) and (r, c+1 mod C).
Plaquette terms (coefficient -1) come first, then one Z per edge
(coefficient xi).

Hubbard on an R x C site grid, open boundary: n = 2*R*C qubits, all
spin-up modes first, Jordan-Wigner ordering along a row-major snake
(direction alternating per row).  Hopping gives -t/2 (XZ..ZX + YZ..ZY) per
lattice edge and spin; the on-site U n_up*n_down expands into an offset
U/4 and terms -U/4 Z_up, -U/4 Z_down, +U/4 Z_up Z_down per site.

Kitaev honeycomb drawn as a brick wall on a torus: R+1 zigzag rows of 2*C
sites each (site (i, j) is qubit i*2C + j).  Horizontal bonds alternate
XX (even j) and YY (odd j) along each row; vertical ZZ bonds sit at
(i + j) even, and the wrap from the last row back to row 0 is shifted one
column when the row count is odd so the verticals stay a perfect matching
(a genuine 3-regular honeycomb for every size).  With the field flag a Z
term is added on every site.

J1-J2 chain, open boundary: J1 XX on neighbours then J2 ZZ on
next-to-neighbours; at n=3 and unit couplings this is XXI + IXX + ZIZ.
"""

from dataclasses import dataclass, field

from .pauli import Hamiltonian, PauliTerm, hamiltonian

KINDS = ("Z2_LGT", "HUBBARD", "KITAEV", "J1J2")


@dataclass(frozen=True)
class LatticeSpec:
    kind: str
    rows: int
    cols: int
    params: dict = field(default_factory=dict)
    with_field: bool = False
    periodic: bool = True

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown lattice kind {self.kind!r}")
        if self.rows < 1 or self.cols < 1:
            raise ValueError("lattice dimensions must be at least 1x1")

    def param(self, name: str, default: float) -> float:
        return float(self.params.get(name, default))


def z2_lgt(spec: LatticeSpec) -> Hamiltonian:
    if spec.kind != "Z2_LGT":
        raise ValueError("spec.kind must be Z2_LGT")
    if not spec.periodic:
        raise ValueError("the Z2 gauge model is defined on a torus")
    R, C = spec.rows, spec.cols
    xi = spec.param("xi", 1.0)
    n = 2 * R * C
    h_edge = lambda r, c: 2 * ((r % R) * C + (c % C))
    v_edge = lambda r, c: 2 * ((r % R) * C + (c % C)) + 1
    terms = []
    for r in range(R):
        for c in range(C):
            x = 0
            for e in (h_edge(r, c), h_edge(r + 1, c), v_edge(r, c), v_edge(r, c + 1)):
                x ^= 1 << e  # XOR: degenerate 1-row/1-column tori reuse edges
            terms.append(PauliTerm(n, x, 0, 1, -1.0))
    for e in range(n):
        terms.append(PauliTerm(n, 0, 1 << e, 1, xi))
    assert len(terms) == 3 * R * C
    return hamiltonian(n, terms)


def _snake(r: int, c: int, cols: int) -> int:
    return r * cols + (c if r % 2 == 0 else cols - 1 - c)


def hubbard(spec: LatticeSpec) -> Hamiltonian:
    if spec.kind != "HUBBARD":
        raise ValueError("spec.kind must be HUBBARD")
    R, C = spec.rows, spec.cols
    U = spec.param("U", 4.0)
    t = spec.param("t", 1.0)
    sites = R * C
    n = 2 * sites
    edges = []
    for r in range(R):
        for c in range(C):
            if c + 1 < C:
                edges.append((_snake(r, c, C), _snake(r, c + 1, C)))
            if r + 1 < R:
                edges.append((_snake(r, c, C), _snake(r + 1, c, C)))
    terms = []
    offset = 0.0
    for spin_offset in (0, sites):
        for a, b in edges:
            i, j = sorted((a + spin_offset, b + spin_offset))
            string = 0
            for k in range(i + 1, j):
                string |= 1 << k
            ends = (1 << i) | (1 << j)
            terms.append(PauliTerm(n, ends, string, 1, -t / 2))  # X Z..Z X
            terms.append(PauliTerm(n, ends, string | ends, 1, -t / 2))  # Y Z..Z Y
    for s in range(sites):
        up, down = 1 << s, 1 << (s + sites)
        offset += U / 4
        terms.append(PauliTerm(n, 0, up, 1, -U / 4))
        terms.append(PauliTerm(n, 0, down, 1, -U / 4))
        terms.append(PauliTerm(n, 0, up | down, 1, U / 4))
    assert len(terms) == 4 * len(edges) + 3 * sites
    return hamiltonian(n, terms, offset)


def kitaev(spec: LatticeSpec) -> Hamiltonian:
    if spec.kind != "KITAEV":
        raise ValueError("spec.kind must be KITAEV")
    if not spec.periodic:
        raise ValueError("the honeycomb model is defined on a torus")
    jx = spec.param("Jx", 1.0)
    jy = spec.param("Jy", 1.0)
    jz = spec.param("Jz", 1.0)
    hz = spec.param("hz", 1.0)
    rows = spec.rows + 1  # zigzag vertex rows
    width = 2 * spec.cols
    n = rows * width
    site = lambda i, j: (i % rows) * width + (j % width)
    terms = []
    for i in range(rows):
        for j in range(width):
            a, b = site(i, j), site(i, j + 1)
            x = (1 << a) | (1 << b)
            if j % 2 == 0:
                terms.append(PauliTerm(n, x, 0, 1, jx))
            else:
                terms.append(PauliTerm(n, x, x, 1, jy))
    seam_shift = 1 if rows % 2 == 1 else 0
    for i in range(rows):
        for j in range(width):
            if (i + j) % 2 == 0:
                jj = j + seam_shift if i == rows - 1 else j
                z = (1 << site(i, j)) | (1 << site(i + 1, jj))
                terms.append(PauliTerm(n, 0, z, 1, jz))
    assert len(terms) == 3 * n // 2
    if spec.with_field:
        for q in range(n):
            terms.append(PauliTerm(n, 0, 1 << q, 1, hz))
    return hamiltonian(n, terms)


def j1j2_chain(n: int, j1: float = 1.0, j2: float = 1.0) -> Hamiltonian:
    if n < 3:
        raise ValueError("the chain needs at least 3 sites")
    terms = []
    for i in range(n - 1):
        terms.append(PauliTerm(n, (1 << i) | (1 << (i + 1)), 0, 1, j1))
    for i in range(n - 2):
        terms.append(PauliTerm(n, 0, (1 << i) | (1 << (i + 2)), 1, j2))
    return hamiltonian(n, terms)


def build(spec: LatticeSpec) -> Hamiltonian:
    """Dispatch on spec.kind."""
    if spec.kind == "Z2_LGT":
        return z2_lgt(spec)
    if spec.kind == "HUBBARD":
        return hubbard(spec)
    if spec.kind == "KITAEV":
        return kitaev(spec)
    return j1j2_chain(max(spec.rows, spec.cols),
                      spec.param("J1", 1.0), spec.param("J2", 1.0))
