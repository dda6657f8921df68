"""Plain-text Hamiltonian files and the JSON reduction report.

Hamiltonian file format, line oriented for diffability:

    # comment
    qubits 3
    1.0 XXI
    1.0 IXX
    1.0 ZIZ
    offset 0.5        (optional, summed into the scalar offset)

Blank lines and '#' comments are ignored.  Pauli strings use {I,X,Y,Z}
with qubit 0 as the leftmost character; an optional '-'/'+' prefix folds
into the term sign.
"""

import json

from .pauli import Hamiltonian, PauliTerm, format_pauli, hamiltonian, parse_pauli
from .reduction import OptimalityReport, ReductionResult


class HamiltonianParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


def hamiltonian_to_text(h: Hamiltonian) -> str:
    lines = [f"qubits {h.n}"]
    for t in h.terms:
        lines.append(f"{t.weight!r} {format_pauli(PauliTerm(t.n, t.x, t.z))}")
    if h.offset != 0.0:
        lines.append(f"offset {h.offset!r}")
    return "\n".join(lines) + "\n"


def hamiltonian_from_text(text: str) -> Hamiltonian:
    n = None
    terms = []
    offset = 0.0
    saw_body = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "qubits":
            if n is not None:
                raise HamiltonianParseError(lineno, "duplicate qubits header")
            if len(parts) != 2 or not parts[1].isdigit():
                raise HamiltonianParseError(lineno, "malformed qubits header")
            n = int(parts[1])
            continue
        if parts[0] == "offset":
            try:
                offset += float(parts[1])
            except (IndexError, ValueError):
                raise HamiltonianParseError(lineno, "malformed offset line") from None
            continue
        if n is None:
            raise HamiltonianParseError(lineno, "term before the qubits header")
        if len(parts) != 2:
            raise HamiltonianParseError(lineno, f"expected '<coeff> <pauli>', got {line!r}")
        try:
            coeff = float(parts[0])
        except ValueError:
            raise HamiltonianParseError(lineno, f"bad coefficient {parts[0]!r}") from None
        if coeff != coeff or coeff in (float("inf"), float("-inf")):
            raise HamiltonianParseError(lineno, "coefficient must be finite")
        try:
            term = parse_pauli(parts[1], n, coeff)
        except ValueError as exc:
            raise HamiltonianParseError(lineno, str(exc)) from None
        terms.append(term)
        saw_body = True
    if n is None:
        raise HamiltonianParseError(0, "missing qubits header")
    if not saw_body:
        raise HamiltonianParseError(0, "no terms in file")
    return hamiltonian(n, terms, offset)


def load_hamiltonian(path: str) -> Hamiltonian:
    with open(path, encoding="utf-8") as f:
        return hamiltonian_from_text(f.read())


def save_hamiltonian(path: str, h: Hamiltonian):
    with open(path, "w", encoding="utf-8") as f:
        f.write(hamiltonian_to_text(h))


def _zeta_string(zeta: int, c: int) -> str:
    return "".join("1" if (zeta >> j) & 1 else "0" for j in range(c))


def report_to_dict(res: ReductionResult, opt: OptimalityReport) -> dict:
    return {
        "n": res.n,
        "r": res.r,
        "c": res.c,
        "active": res.active,
        "offset": res.offset,
        "circuit": [str(g) for g in res.circuit.gates],
        "charges_reduced": [format_pauli(p) for p in res.charges_reduced],
        "charges_original": [format_pauli(p) for p in res.charges_original],
        "charge_sign_flips": list(res.charge_flips),
        "reduced_terms": [
            {
                "coeff": rt.coeff,
                "zeta": _zeta_string(rt.zeta, res.c),
                "tail": format_pauli(rt.tail),
            }
            for rt in res.reduced_terms
        ],
        "optimality": {
            "dimM": opt.dim,
            "rankM": opt.rank,
            "pass": opt.passed,
        },
        "permutation": list(res.permutation),
    }


def report_to_json(res: ReductionResult, opt: OptimalityReport) -> str:
    return json.dumps(report_to_dict(res, opt), indent=2) + "\n"


def sector_inputs_from_report(doc: dict) -> tuple[int, int, float, list]:
    """(c, active, offset, [(coeff, zeta_mask, tail_term), ...]) from a report."""
    c = int(doc["c"])
    active = int(doc["active"])
    offset = float(doc["offset"])
    entries = []
    for item in doc["reduced_terms"]:
        zeta = sum(1 << j for j, b in enumerate(item["zeta"]) if b == "1")
        tail = parse_pauli(item["tail"], active)
        entries.append((float(item["coeff"]), zeta, tail))
    return c, active, offset, entries
