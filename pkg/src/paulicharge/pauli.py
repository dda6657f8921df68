"""Sign-tracked Pauli strings in the symplectic binary representation.

An n-qubit Pauli string is encoded by two n-bit integers ``x`` and ``z``
(bit q corresponds to qubit q, and qubit 0 is the leftmost character of the
text form).  The operator represented by a term is

    sign * i^(popcount(x & z) mod 4) * X^x * Z^z

so the single-qubit letters decode as (x,z) = (0,0) -> I, (1,0) -> X,
(1,1) -> Y, (0,1) -> Z, and every term is Hermitian with ``sign`` in {+1,-1}.
Clifford conjugation never leaves this set, which is why no complex phase is
stored anywhere.
"""

from dataclasses import dataclass, field

_LETTER_TO_BITS = {"I": (0, 0), "X": (1, 0), "Y": (1, 1), "Z": (0, 1)}
_BITS_TO_LETTER = {v: k for k, v in _LETTER_TO_BITS.items()}


@dataclass(frozen=True)
class PauliTerm:
    """One weighted Pauli string: ``coeff * sign * i^(x.z) X^x Z^z``."""

    n: int
    x: int
    z: int
    sign: int = 1
    coeff: float = 1.0

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("qubit count must be non-negative")
        mask = (1 << self.n) - 1
        if self.x & ~mask or self.z & ~mask:
            raise ValueError("bit vector extends past the qubit count")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")

    @property
    def weight(self) -> float:
        """Effective real coefficient, sign folded in."""
        return self.sign * self.coeff

    def is_identity(self) -> bool:
        return self.x == 0 and self.z == 0

    def letter(self, q: int) -> str:
        """Single-qubit letter at qubit q."""
        if not 0 <= q < self.n:
            raise ValueError(f"qubit {q} out of range for n={self.n}")
        return _BITS_TO_LETTER[((self.x >> q) & 1, (self.z >> q) & 1)]

    def __str__(self) -> str:
        return format_pauli(self)


def parse_pauli(text: str, n: int, coeff: float = 1.0) -> PauliTerm:
    """Parse a Pauli string like "XXI" or "-ZIZ" into a PauliTerm.

    The string must be exactly n characters from {I,X,Y,Z}, optionally
    prefixed with '+' or '-'.  Round-trips with format_pauli.
    """
    sign = 1
    body = text
    if body[:1] in ("+", "-"):
        sign = -1 if body[0] == "-" else 1
        body = body[1:]
    if len(body) != n:
        raise ValueError(f"expected {n} Pauli letters, got {len(body)!r} in {text!r}")
    x = z = 0
    for q, ch in enumerate(body):
        try:
            xb, zb = _LETTER_TO_BITS[ch]
        except KeyError:
            raise ValueError(f"invalid Pauli letter {ch!r} in {text!r}") from None
        x |= xb << q
        z |= zb << q
    return PauliTerm(n, x, z, sign, coeff)


def format_pauli(p: PauliTerm) -> str:
    """Text form of a term; a '-' prefix marks sign -1, the coefficient is not shown."""
    body = "".join(_BITS_TO_LETTER[((p.x >> q) & 1, (p.z >> q) & 1)] for q in range(p.n))
    return ("-" if p.sign < 0 else "") + body


def symplectic_product(p: PauliTerm, q: PauliTerm) -> int:
    """(x_p.z_q + z_p.x_q) mod 2; zero exactly when the operators commute."""
    if p.n != q.n:
        raise ValueError(f"qubit count mismatch: {p.n} != {q.n}")
    return ((p.x & q.z).bit_count() + (p.z & q.x).bit_count()) & 1


def multiply(p: PauliTerm, q: PauliTerm) -> PauliTerm:
    """Product of two commuting Hermitian Paulis, with exact sign.

    The product of anticommuting Hermitian Paulis is anti-Hermitian (carries
    a factor of i), which this representation deliberately cannot store, so
    that case raises.  Coefficients multiply.
    """
    if p.n != q.n:
        raise ValueError(f"qubit count mismatch: {p.n} != {q.n}")
    if symplectic_product(p, q):
        raise ValueError("product of anticommuting Paulis is not Hermitian")
    x = p.x ^ q.x
    z = p.z ^ q.z
    # i^yp * i^yq * (-1)^(z_p.x_q) = sign' * i^yr  with all exponents mod 4
    phase = ((p.x & p.z).bit_count() + (q.x & q.z).bit_count()
             + 2 * (p.z & q.x).bit_count() - (x & z).bit_count()) % 4
    if phase == 0:
        extra = 1
    elif phase == 2:
        extra = -1
    else:  # cannot happen for commuting inputs
        raise AssertionError("non-real phase from commuting product")
    return PauliTerm(p.n, x, z, p.sign * q.sign * extra, p.coeff * q.coeff)


@dataclass(frozen=True)
class Hamiltonian:
    """Weighted sum of Pauli terms on a fixed qubit count.

    Identity strings are not kept as terms: their total weight is moved into
    the scalar ``offset`` at construction, so every stored term acts on at
    least one qubit.  Term order is preserved because downstream output is
    required to be deterministic.
    """

    n: int
    terms: tuple[PauliTerm, ...]
    offset: float = 0.0

    def __post_init__(self):
        for t in self.terms:
            if t.n != self.n:
                raise ValueError(f"term on {t.n} qubits in {self.n}-qubit Hamiltonian")
            if t.is_identity():
                raise ValueError("identity term must be folded into the offset")

    @property
    def num_terms(self) -> int:
        return len(self.terms)


def hamiltonian(n: int, terms, offset: float = 0.0) -> Hamiltonian:
    """Build a Hamiltonian, folding any identity terms into the offset."""
    kept = []
    total = offset
    for t in terms:
        if t.n != n:
            raise ValueError(f"term on {t.n} qubits in {n}-qubit Hamiltonian")
        if t.is_identity():
            total += t.weight
        else:
            kept.append(t)
    return Hamiltonian(n, tuple(kept), total)
