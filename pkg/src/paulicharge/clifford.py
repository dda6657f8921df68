"""Gate-level Clifford circuits acting on Pauli terms by conjugation.

Gate set: H, S, SDG, CNOT, SWAP.  Conjugation g.P.g' (g' the adjoint) is
implemented directly on the (x, z) bits with the sign updates

    H(k)      : x_k <-> z_k,            sign flips when x_k z_k = 1   (Y -> -Y)
    S(k)      : z_k ^= x_k,             sign flips when x_k z_k = 1   (Y -> -X)
    SDG(k)    : z_k ^= x_k,             sign flips when x_k (1-z_k)   (X -> -Y)
    CNOT(c,t) : x_t ^= x_c, z_c ^= z_t, sign flips when x_c z_t (x_t + z_c + 1)
    SWAP(a,b) : exchange bits a and b in x and z

which reproduce the usual tables S X S' = Y, S Y S' = -X, H X H = Z,
CNOT: X_c -> X_c X_t, Z_t -> Z_c Z_t.  Gates listed first act first on
states, so conjugating by a circuit folds its gates left to right.
"""

from dataclasses import dataclass

from .pauli import PauliTerm

GATE_KINDS = ("H", "S", "SDG", "CNOT", "SWAP")
_ARITY = {"H": 1, "S": 1, "SDG": 1, "CNOT": 2, "SWAP": 2}


@dataclass(frozen=True)
class Gate:
    kind: str
    qubits: tuple[int, ...]

    def __post_init__(self):
        if self.kind not in GATE_KINDS:
            raise ValueError(f"unknown gate kind {self.kind!r}")
        if len(self.qubits) != _ARITY[self.kind]:
            raise ValueError(f"{self.kind} takes {_ARITY[self.kind]} qubit(s)")
        if len(set(self.qubits)) != len(self.qubits):
            raise ValueError(f"{self.kind} qubits must be distinct")
        if any(q < 0 for q in self.qubits):
            raise ValueError("qubit indices must be non-negative")

    def __str__(self) -> str:
        return " ".join([self.kind] + [str(q) for q in self.qubits])


def gate(kind: str, *qubits: int) -> Gate:
    return Gate(kind, tuple(qubits))


@dataclass(frozen=True)
class CliffordCircuit:
    n: int
    gates: tuple[Gate, ...] = ()

    def __post_init__(self):
        for g in self.gates:
            if any(q >= self.n for q in g.qubits):
                raise ValueError(f"gate {g} out of range for n={self.n}")

    def __len__(self) -> int:
        return len(self.gates)


def conjugate_gate(g: Gate, p: PauliTerm) -> PauliTerm:
    """g . p . g^dagger with exact sign; coefficient untouched."""
    if any(q >= p.n for q in g.qubits):
        raise ValueError(f"gate {g} out of range for n={p.n}")
    x, z, sign = p.x, p.z, p.sign
    if g.kind == "H":
        (k,) = g.qubits
        xb, zb = (x >> k) & 1, (z >> k) & 1
        if xb & zb:
            sign = -sign
        x ^= (xb ^ zb) << k
        z ^= (xb ^ zb) << k
    elif g.kind == "S":
        (k,) = g.qubits
        xb, zb = (x >> k) & 1, (z >> k) & 1
        if xb & zb:
            sign = -sign
        z ^= xb << k
    elif g.kind == "SDG":
        (k,) = g.qubits
        xb, zb = (x >> k) & 1, (z >> k) & 1
        if xb & (zb ^ 1):
            sign = -sign
        z ^= xb << k
    elif g.kind == "CNOT":
        c, t = g.qubits
        xc, zc = (x >> c) & 1, (z >> c) & 1
        xt, zt = (x >> t) & 1, (z >> t) & 1
        if xc & zt & (xt ^ zc ^ 1):
            sign = -sign
        x ^= xc << t
        z ^= zt << c
    else:  # SWAP
        a, b = g.qubits
        xa, xb_ = (x >> a) & 1, (x >> b) & 1
        za, zb_ = (z >> a) & 1, (z >> b) & 1
        x ^= ((xa ^ xb_) << a) | ((xa ^ xb_) << b)
        z ^= ((za ^ zb_) << a) | ((za ^ zb_) << b)
    return PauliTerm(p.n, x, z, sign, p.coeff)


def conjugate_circuit(c: CliffordCircuit, p: PauliTerm) -> PauliTerm:
    """Fold conjugate_gate over the circuit, first-listed gate first."""
    if c.n != p.n:
        raise ValueError(f"qubit count mismatch: circuit {c.n}, term {p.n}")
    for g in c.gates:
        p = conjugate_gate(g, p)
    return p


_INVERSE = {"H": "H", "S": "SDG", "SDG": "S", "CNOT": "CNOT", "SWAP": "SWAP"}


def invert(c: CliffordCircuit) -> CliffordCircuit:
    """Reversed gate order with each gate inverted (S <-> SDG)."""
    return CliffordCircuit(
        c.n, tuple(Gate(_INVERSE[g.kind], g.qubits) for g in reversed(c.gates))
    )


def circuit_to_text(c: CliffordCircuit) -> str:
    """One gate per line, 0-based indices; CNOT is written control target."""
    lines = [f"# qubits {c.n}"]
    lines += [str(g) for g in c.gates]
    return "\n".join(lines) + "\n"


def circuit_from_text(text: str, n: int | None = None) -> CliffordCircuit:
    """Parse the text format; '#' starts a comment.  A '# qubits N' comment
    fixes the register size, otherwise n must be given or is inferred."""
    gates = []
    maxq = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)
        if len(line) > 1 and n is None:
            tail = line[1].split()
            if tail[:1] == ["qubits"] and len(tail) == 2 and tail[1].isdigit():
                n = int(tail[1])
        body = line[0].strip()
        if not body:
            continue
        parts = body.split()
        kind = parts[0].upper()
        if kind not in GATE_KINDS:
            raise ValueError(f"line {lineno}: unknown gate {parts[0]!r}")
        try:
            qubits = tuple(int(s) for s in parts[1:])
        except ValueError:
            raise ValueError(f"line {lineno}: bad qubit index in {body!r}") from None
        g = Gate(kind, qubits)
        maxq = max(maxq, *g.qubits)
        gates.append(g)
    if n is None:
        n = maxq + 1
    return CliffordCircuit(n, tuple(gates))
