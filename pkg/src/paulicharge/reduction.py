"""Qubit-by-qubit Clifford sweep: redundancy removal and charge exposure.

The sweep walks qubits from the last to the first.  At qubit k it either
finds every term acting as identity (k is *redundant*), or synthesizes a
circuit on qubits 0..k sending one pivot term to Z_k; if afterwards every
term is I or Z on k the qubit is *conditional* (it carries a conserved
charge), otherwise a second circuit sends an X/Y pivot to X_k while
stabilizing Z_k and the qubit stays *active*.  Trailing SWAPs then sort the
register into [redundant | conditional | active] blocks, so conjugated
terms look like

    I ... I | I/Z ... I/Z | arbitrary tail

and each conditional position j holds a charge equal to a bare Z.  Sector
Hamiltonians on the active block follow by replacing those Z's with their
eigenvalues (-1)^z_j.

Internally the conjugated term list is stored column-major: one pair of
N-bit integers per qubit plus an N-bit sign mask, so every gate updates all
terms with a constant number of word-parallel integer operations.
"""

from dataclasses import dataclass

from .clifford import CliffordCircuit, Gate, conjugate_circuit, invert
from .pauli import Hamiltonian, PauliTerm, hamiltonian


@dataclass(frozen=True)
class ReducedTerm:
    """One input term after conjugation: coeff * Z^zeta (conditional block)
    tensor tail (active block); conjugation signs are folded into coeff."""

    coeff: float
    zeta: int  # c-bit mask over the conditional block
    tail: PauliTerm  # on the active qubits, sign +1


@dataclass(frozen=True)
class ReductionResult:
    n: int
    circuit: CliffordCircuit
    r: int
    c: int
    active: int
    reduced_terms: tuple[ReducedTerm, ...]
    charges_reduced: tuple[PauliTerm, ...]
    charges_original: tuple[PauliTerm, ...]
    charge_flips: tuple[int, ...]  # 1 where conjugating Z_j back picked up a -1
    offset: float
    permutation: tuple[int, ...]  # permutation[q] = final position of qubit q


@dataclass(frozen=True)
class SectorSpec:
    z: int  # c-bit charge configuration
    c: int

    @classmethod
    def from_string(cls, bits: str) -> "SectorSpec":
        if bits and not set(bits) <= {"0", "1"}:
            raise ValueError(f"sector spec must be a bit string, got {bits!r}")
        return cls(sum(1 << i for i, b in enumerate(bits) if b == "1"), len(bits))

    def __str__(self) -> str:
        return "".join("1" if (self.z >> i) & 1 else "0" for i in range(self.c))


class _Tableau:
    """Column-major bit-packed tableau over the term list."""

    def __init__(self, h: Hamiltonian):
        self.n = h.n
        self.N = len(h.terms)
        self.xcol = [0] * h.n
        self.zcol = [0] * h.n
        self.signs = 0  # bit i set when term i currently carries sign -1
        for i, t in enumerate(h.terms):
            rest = t.x
            while rest:
                q = (rest & -rest).bit_length() - 1
                self.xcol[q] |= 1 << i
                rest &= rest - 1
            rest = t.z
            while rest:
                q = (rest & -rest).bit_length() - 1
                self.zcol[q] |= 1 << i
                rest &= rest - 1
            if t.sign < 0:
                self.signs |= 1 << i
        self.gates: list[Gate] = []

    def apply(self, g: Gate):
        x, z = self.xcol, self.zcol
        if g.kind == "H":
            (k,) = g.qubits
            self.signs ^= x[k] & z[k]
            x[k], z[k] = z[k], x[k]
        elif g.kind == "S":
            (k,) = g.qubits
            self.signs ^= x[k] & z[k]
            z[k] ^= x[k]
        elif g.kind == "SDG":
            (k,) = g.qubits
            self.signs ^= x[k] & ~z[k]
            z[k] ^= x[k]
        elif g.kind == "CNOT":
            c, t = g.qubits
            self.signs ^= x[c] & z[t] & ~(x[t] ^ z[c])
            x[t] ^= x[c]
            z[c] ^= z[t]
        else:  # SWAP
            a, b = g.qubits
            x[a], x[b] = x[b], x[a]
            z[a], z[b] = z[b], z[a]
        self.gates.append(g)

    def term_bits(self, i: int) -> tuple[int, int]:
        bit = 1 << i
        x = z = 0
        for q in range(self.n):
            if self.xcol[q] & bit:
                x |= 1 << q
            if self.zcol[q] & bit:
                z |= 1 << q
        return x, z


def _letter_bits(x: int, z: int, q: int) -> tuple[int, int]:
    return (x >> q) & 1, (z >> q) & 1


def _z_synthesis_gates(x: int, z: int, k: int) -> list[Gate]:
    """Gates on qubits 0..k sending the Pauli with bits (x, z) to Z_k
    (identity below k).  The letters above k are never touched."""
    mask = (1 << (k + 1)) - 1
    x &= mask
    z &= mask
    if x == 0 and z == 0:
        raise ValueError("pivot acts as identity on qubits 0..k")
    if x == 0 and z == 1 << k:
        return []  # already in target form
    gates = []
    support = []
    for j in range(k + 1):
        xb, zb = _letter_bits(x, z, j)
        if not (xb | zb):
            continue
        support.append(j)
        if not xb:  # Z: rotate to X
            gates.append(Gate("H", (j,)))
        elif zb:  # Y: rotate to X
            gates.append(Gate("SDG", (j,)))
    target = support[-1]  # equals k whenever the pivot acts on k
    for j in support:
        if j != target:
            # CNOT(control=target, j) maps X_target X_j -> X_target
            gates.append(Gate("CNOT", (target, j)))
    if target != k:
        gates.append(Gate("SWAP", (target, k)))
    gates.append(Gate("H", (k,)))
    return gates


def _x_synthesis_gates(x: int, z: int, k: int) -> list[Gate]:
    """Gates on qubits 0..k sending the Pauli with bits (x, z) to X_k while
    mapping Z_k to itself (every gate used stabilizes Z_k)."""
    if not (x >> k) & 1:
        raise ValueError("pivot must carry X or Y on qubit k")
    gates = []
    if (z >> k) & 1:  # Y at k: S fixes Z_k and turns Y into -X
        gates.append(Gate("S", (k,)))
    for j in range(k):
        xb, zb = _letter_bits(x, z, j)
        if not (xb | zb):
            continue
        if not xb:  # Z: rotate to X first
            gates.append(Gate("H", (j,)))
        elif zb:  # Y
            gates.append(Gate("SDG", (j,)))
        # CNOT(control=k, j) maps X_k X_j -> X_k and Z_k -> Z_k
        gates.append(Gate("CNOT", (k, j)))
    return gates


def synthesize_to_z(p: PauliTerm, k: int) -> CliffordCircuit:
    """Circuit on qubits 0..k conjugating p to Z at k and I below k.

    Qubits above k are untouched.  The conjugated pivot may come out with a
    minus sign; callers fold it into the coefficient.
    """
    if not 0 <= k < p.n:
        raise ValueError(f"qubit {k} out of range for n={p.n}")
    circ = CliffordCircuit(p.n, tuple(_z_synthesis_gates(p.x, p.z, k)))
    out = conjugate_circuit(circ, p)
    mask = (1 << (k + 1)) - 1
    assert out.x & mask == 0 and out.z & mask == 1 << k, "Z-synthesis postcondition"
    return circ


def synthesize_to_x(q: PauliTerm, k: int) -> CliffordCircuit:
    """Circuit on qubits 0..k conjugating q to X at k and I below k, while
    mapping the already-fixed pivot Z_k back to Z_k exactly."""
    if not 0 <= k < q.n:
        raise ValueError(f"qubit {k} out of range for n={q.n}")
    circ = CliffordCircuit(q.n, tuple(_x_synthesis_gates(q.x, q.z, k)))
    out = conjugate_circuit(circ, q)
    mask = (1 << (k + 1)) - 1
    assert out.x & mask == 1 << k and out.z & mask == 0, "X-synthesis postcondition"
    zk = PauliTerm(q.n, 0, 1 << k)
    back = conjugate_circuit(circ, zk)
    assert back.x == 0 and back.z == 1 << k and back.sign == 1, "Z_k not stabilized"
    return circ


def reduce(h: Hamiltonian) -> ReductionResult:
    """Run the full sweep and package circuit, partition, charges and tails."""
    if not h.terms:
        raise ValueError("cannot reduce a Hamiltonian with no non-identity terms")
    n = h.n
    tab = _Tableau(h)
    q_redundant: list[int] = []
    q_conditional: list[int] = []
    q_active: list[int] = []

    for k in range(n - 1, -1, -1):
        occupied = tab.xcol[k] | tab.zcol[k]
        if not occupied:
            q_redundant.append(k)
            continue
        # phase 1: make the pivot Z_k.  A term already carrying Z at k is
        # preferred (cheapest circuit, and it reproduces the reference
        # worked example); otherwise the lowest-index occupied term is used.
        zonly = tab.zcol[k] & ~tab.xcol[k]
        pick = zonly if zonly else occupied
        p_idx = (pick & -pick).bit_length() - 1
        px, pz = tab.term_bits(p_idx)
        for g in _z_synthesis_gates(px, pz, k):
            tab.apply(g)
        if not tab.xcol[k]:
            q_conditional.append(k)
            continue
        # phase 2: an X/Y term survives at k; send the lowest one to X_k.
        q_idx = (tab.xcol[k] & -tab.xcol[k]).bit_length() - 1
        qx, qz = tab.term_bits(q_idx)
        for g in _x_synthesis_gates(qx, qz, k):
            tab.apply(g)
        q_active.append(k)

    # sort the register into [redundant | conditional | active] with SWAPs
    new_order = sorted(q_redundant) + sorted(q_conditional) + sorted(q_active)
    arrangement = list(range(n))
    for pos in range(n):
        want = new_order[pos]
        cur = arrangement.index(want, pos)
        if cur != pos:
            tab.apply(Gate("SWAP", (pos, cur)))
            arrangement[pos], arrangement[cur] = arrangement[cur], arrangement[pos]
    permutation = [0] * n
    for pos, q in enumerate(new_order):
        permutation[q] = pos

    r, c = len(q_redundant), len(q_conditional)
    a = n - r - c
    circuit = CliffordCircuit(n, tuple(tab.gates))

    cond_mask = ((1 << c) - 1) << r
    low_mask = (1 << (r + c)) - 1
    red_mask = (1 << r) - 1
    reduced = []
    for i, t in enumerate(h.terms):
        x, z = tab.term_bits(i)
        assert x & low_mask == 0 and z & red_mask == 0, (
            "final tableau violates the block shape"
        )
        zeta = (z & cond_mask) >> r
        tail = PauliTerm(a, x >> (r + c), z >> (r + c))
        coeff = -t.coeff if (tab.signs >> i) & 1 else t.coeff
        reduced.append(ReducedTerm(coeff, zeta, tail))

    charges_reduced = tuple(PauliTerm(n, 0, 1 << (r + j)) for j in range(c))
    inv = invert(circuit)
    originals = []
    flips = []
    for ch in charges_reduced:
        back = conjugate_circuit(inv, ch)
        flips.append(1 if back.sign < 0 else 0)
        originals.append(PauliTerm(n, back.x, back.z))

    return ReductionResult(
        n=n,
        circuit=circuit,
        r=r,
        c=c,
        active=a,
        reduced_terms=tuple(reduced),
        charges_reduced=charges_reduced,
        charges_original=tuple(originals),
        charge_flips=tuple(flips),
        offset=h.offset,
        permutation=tuple(permutation),
    )


def sector_hamiltonian(res: ReductionResult, spec: SectorSpec) -> Hamiltonian:
    """Hamiltonian on the active qubits for charge configuration spec.z.

    Term i picks up (-1)^(z . zeta_i); identical tails merge, identity tails
    feed the scalar offset, and exact cancellations are dropped.
    """
    if spec.c != res.c:
        raise ValueError(f"sector spec has {spec.c} bits, expected {res.c}")
    offset = res.offset
    order: list[tuple[int, int]] = []
    acc: dict[tuple[int, int], float] = {}
    for rt in res.reduced_terms:
        coeff = -rt.coeff if (spec.z & rt.zeta).bit_count() & 1 else rt.coeff
        if rt.tail.is_identity():
            offset += coeff
            continue
        key = (rt.tail.x, rt.tail.z)
        if key not in acc:
            acc[key] = 0.0
            order.append(key)
        acc[key] += coeff
    terms = [
        PauliTerm(res.active, x, z, 1, acc[(x, z)])
        for (x, z) in order
        if acc[(x, z)] != 0.0
    ]
    return hamiltonian(res.active, terms, offset)


def charges_in_original_basis(res: ReductionResult) -> list[PauliTerm]:
    """The conserved charges conjugated back through the inverse circuit.

    Every returned Pauli commutes with every input term.  Signs are
    normalized to +1; res.charge_flips marks the charges where the
    conjugation produced -1, meaning the physical charge value in sector z
    is (-1)^(z_j + flip_j) rather than (-1)^(z_j).
    """
    return list(res.charges_original)


@dataclass(frozen=True)
class OptimalityReport:
    dim: int
    rank: int
    expected_r: int
    expected_c: int
    expected_active: int
    r_ok: bool
    c_ok: bool
    active_ok: bool

    @property
    def passed(self) -> bool:
        return self.r_ok and self.c_ok and self.active_ok


def optimality_check(h: Hamiltonian, res: ReductionResult) -> OptimalityReport:
    """Compare the sweep's partition against the commutation-matrix bound.

    Failures are reported, not raised: they would indicate implementation
    bugs, since the sweep is provably optimal.
    """
    from .gf2 import theorem_bound

    dim, rank, _ = theorem_bound(h)
    exp_c = dim - rank
    exp_active = rank // 2
    exp_r = h.n - dim + rank // 2
    return OptimalityReport(
        dim=dim,
        rank=rank,
        expected_r=exp_r,
        expected_c=exp_c,
        expected_active=exp_active,
        r_ok=res.r == exp_r,
        c_ok=res.c == exp_c,
        active_ok=res.active == exp_active,
    )
