"""Command line interface: generate, reduce, sector, verify, table.

Exit codes: 0 success, 2 malformed input, 3 I/O failure, 4 over a
capability cap (dense verification asked for too many qubits).
"""

import argparse
import json
import sys
import time

from . import hamio, models, oracle
from .pauli import Hamiltonian, PauliTerm, hamiltonian
from .reduction import ReductionResult, SectorSpec, optimality_check, reduce, sector_hamiltonian

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_IO = 3
EXIT_CAP = 4


class _CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _parse_size(text: str) -> tuple[int, int]:
    parts = text.lower().split("x")
    try:
        if len(parts) == 1:
            r = int(parts[0])
            return r, r
        if len(parts) == 2:
            return int(parts[0]), int(parts[1])
    except ValueError:
        pass
    raise _CliError(EXIT_INPUT, f"bad --size {text!r}, expected R or RxC")


def _parse_params(items: list[str]) -> dict:
    params = {}
    for item in items:
        if "=" not in item:
            raise _CliError(EXIT_INPUT, f"bad --params entry {item!r}, expected key=value")
        key, _, val = item.partition("=")
        try:
            params[key] = float(val)
        except ValueError:
            raise _CliError(EXIT_INPUT, f"bad numeric value in {item!r}") from None
    return params


def _load(path: str) -> Hamiltonian:
    try:
        return hamio.load_hamiltonian(path)
    except hamio.HamiltonianParseError as exc:
        raise _CliError(EXIT_INPUT, f"{path}: {exc}") from None
    except OSError as exc:
        raise _CliError(EXIT_IO, str(exc)) from None


def _write(path: str, text: str):
    try:
        with open(path, "w", encoding="utf-8") as f:
            f.write(text)
    except OSError as exc:
        raise _CliError(EXIT_IO, str(exc)) from None


def _build_model(kind: str, args) -> Hamiltonian:
    params = _parse_params(args.params)
    if kind == "j1j2":
        if args.n is None:
            raise _CliError(EXIT_INPUT, "j1j2 needs --n")
        try:
            return models.j1j2_chain(args.n, params.get("J1", 1.0), params.get("J2", 1.0))
        except ValueError as exc:
            raise _CliError(EXIT_INPUT, str(exc)) from None
    if args.size is None:
        raise _CliError(EXIT_INPUT, f"{kind} needs --size")
    rows, cols = _parse_size(args.size)
    spec_kind = {"z2": "Z2_LGT", "hubbard": "HUBBARD", "kitaev": "KITAEV"}[kind]
    try:
        spec = models.LatticeSpec(spec_kind, rows, cols, params, with_field=args.field)
        return models.build(spec)
    except ValueError as exc:
        raise _CliError(EXIT_INPUT, str(exc)) from None


def cmd_generate(args) -> int:
    h = _build_model(args.model, args)
    text = hamio.hamiltonian_to_text(h)
    if args.out:
        _write(args.out, text)
        print(f"wrote {args.out}: n={h.n} terms={h.num_terms}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _circuit_path(out: str) -> str:
    stem = out[:-5] if out.endswith(".json") else out
    return stem + ".circuit"


def cmd_reduce(args) -> int:
    h = _load(args.input)
    res = reduce(h)
    opt = optimality_check(h, res)
    report = hamio.report_to_json(res, opt)
    if args.out:
        _write(args.out, report)
        from .clifford import circuit_to_text

        _write(_circuit_path(args.out), circuit_to_text(res.circuit))
    else:
        sys.stdout.write(report)
    print(f"n={res.n} r={res.r} c={res.c} active={res.active}")
    return EXIT_OK


def cmd_sector(args) -> int:
    try:
        with open(args.report, encoding="utf-8") as f:
            doc = json.load(f)
    except OSError as exc:
        raise _CliError(EXIT_IO, str(exc)) from None
    except json.JSONDecodeError as exc:
        raise _CliError(EXIT_INPUT, f"{args.report}: {exc}") from None
    try:
        c, active, offset, entries = hamio.sector_inputs_from_report(doc)
    except (KeyError, ValueError) as exc:
        raise _CliError(EXIT_INPUT, f"{args.report}: malformed report ({exc})") from None
    if len(args.z) != c:
        raise _CliError(EXIT_INPUT, f"sector string must have {c} bits, got {len(args.z)}")
    try:
        spec = SectorSpec.from_string(args.z)
    except ValueError as exc:
        raise _CliError(EXIT_INPUT, str(exc)) from None
    total = offset
    order: list[tuple[int, int]] = []
    acc: dict[tuple[int, int], float] = {}
    for coeff, zeta, tail in entries:
        signed = -coeff if (spec.z & zeta).bit_count() & 1 else coeff
        if tail.is_identity():
            total += signed
            continue
        key = (tail.x, tail.z)
        if key not in acc:
            acc[key] = 0.0
            order.append(key)
        acc[key] += signed
    terms = [PauliTerm(active, x, z, 1, acc[(x, z)]) for (x, z) in order if acc[(x, z)] != 0.0]
    sector = hamiltonian(active, terms, total)
    text = hamio.hamiltonian_to_text(sector)
    if sector.offset == 0.0:
        text += "offset 0.0\n"  # the sector file always records its offset
    if args.out:
        _write(args.out, text)
        print(f"wrote {args.out}: n={sector.n} terms={sector.num_terms} offset={sector.offset!r}")
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_verify(args) -> int:
    h = _load(args.input)
    if h.n > args.cap_n:
        raise _CliError(EXIT_CAP, f"n={h.n} exceeds the verification cap {args.cap_n}")
    res = reduce(h)
    opt = optimality_check(h, res)
    report = oracle.verify_reduction(h, res, cap=args.cap_n)
    doc = {
        "n": res.n,
        "r": res.r,
        "c": res.c,
        "active": res.active,
        "optimality": {"dimM": opt.dim, "rankM": opt.rank, "pass": opt.passed},
        "checks": [
            {"name": ch.name, "pass": ch.passed, "deviation": ch.deviation}
            for ch in report.checks
        ],
    }
    if h.n <= oracle.SEARCH_CAP:
        brute = oracle.brute_force_charges(h)
        doc["brute_force_charges"] = brute
        doc["checks"].append(
            {"name": "exhaustive charge count equals c", "pass": brute == res.c,
             "deviation": float(abs(brute - res.c))}
        )
    ok = opt.passed and all(item["pass"] for item in doc["checks"])
    doc["pass"] = ok
    out = json.dumps(doc, indent=2) + "\n"
    if args.out:
        _write(args.out, out)
    sys.stdout.write(out)
    return EXIT_OK if ok else 1


# (label, builder, paper row (n, c, active)); chemistry rows carry None
def _table_rows():
    rows = []
    rows.append(("H2 (JW, external)", None, (4, 3, 1)))
    rows.append(("LiH (external)", None, (12, 4, 8)))
    rows.append(("BeH2 (external)", None, (14, 5, 9)))
    for size, n, c, act in ((2, 8, 5, 3), (5, 50, 26, 24), (6, 72, 37, 35),
                            (7, 98, 50, 48), (10, 200, 101, 99), (15, 450, 226, 224)):
        spec = models.LatticeSpec("Z2_LGT", size, size)
        rows.append((f"Z2 LGT {size}x{size}", (lambda s: lambda: models.z2_lgt(s))(spec),
                     (n, c, act)))
    for rows_, cols_ in ((1, 2), (2, 2), (2, 3), (3, 3)):
        sites = rows_ * cols_
        spec = models.LatticeSpec("HUBBARD", rows_, cols_)
        rows.append((f"Hubbard {rows_}x{cols_}", (lambda s: lambda: models.hubbard(s))(spec),
                     (2 * sites, 2, 2 * (sites - 1))))
    for size, n, c, act in ((1, 4, 3, 1), (2, 12, 6, 6), (5, 60, 25, 35),
                            (10, 220, 98, 122), (15, 480, 220, 260)):
        spec = models.LatticeSpec("KITAEV", size, size)
        rows.append((f"Kitaev {size}x{size}", (lambda s: lambda: models.kitaev(s))(spec),
                     (n, c, act)))
    for size, n, c in ((1, 4, 2), (2, 12, 3), (5, 60, 6), (10, 220, 11), (15, 480, 16)):
        spec = models.LatticeSpec("KITAEV", size, size, with_field=True)
        rows.append((f"Kitaev+field {size}x{size}",
                     (lambda s: lambda: models.kitaev(s))(spec), (n, c, n - c)))
    return rows


def cmd_table(args) -> int:
    chem = None
    if args.chem:
        chem = _load(args.chem)
    header = f"{'model':24s} {'n':>5s} {'c':>5s} {'active':>7s}   paper(n,c,active)   status"
    print(header)
    print("-" * len(header))
    all_match = True
    for label, builder, paper in _table_rows():
        if builder is None:
            if label.startswith("H2") and chem is not None:
                h = chem
            else:
                print(f"{label:24s} {'-':>5s} {'-':>5s} {'-':>7s}   {paper!s:18s}   SKIPPED(no input)")
                continue
        else:
            h = builder()
        t0 = time.perf_counter()
        res = reduce(h)
        dt = time.perf_counter() - t0
        got = (res.n, res.c, res.active)
        status = "MATCH" if got == paper else "MISMATCH"
        if status == "MISMATCH":
            all_match = False
        print(f"{label:24s} {res.n:5d} {res.c:5d} {res.active:7d}   {paper!s:18s}   {status} ({dt:.2f}s)")
    return EXIT_OK if all_match else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="paulicharge",
        description="Clifford reduction of Pauli Hamiltonians: remove redundant "
                    "qubits, expose conserved charges, emit sector Hamiltonians.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("generate", help="emit a benchmark model Hamiltonian file")
    g.add_argument("model", choices=["z2", "hubbard", "kitaev", "j1j2"])
    g.add_argument("--size", help="lattice size R or RxC")
    g.add_argument("--n", type=int, help="chain length (j1j2 only)")
    g.add_argument("--field", action="store_true", help="add the on-site Z field (kitaev)")
    g.add_argument("--params", nargs="*", default=[], metavar="K=V")
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    r = sub.add_parser("reduce", help="reduce a Hamiltonian file; write report + circuit")
    r.add_argument("input")
    r.add_argument("--out", help="report JSON path (circuit goes next to it)")
    r.set_defaults(func=cmd_reduce)

    s = sub.add_parser("sector", help="extract one charge sector from a report")
    s.add_argument("report")
    s.add_argument("--z", required=True, help="charge bit string of length c")
    s.add_argument("--out")
    s.set_defaults(func=cmd_sector)

    v = sub.add_parser("verify", help="reduce and run the dense oracle checks")
    v.add_argument("input")
    v.add_argument("--cap-n", type=int, default=10, help="dense verification qubit cap")
    v.add_argument("--out", help="also write the JSON report here")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="reproduce the benchmark reduction table")
    t.add_argument("--chem", help="externally produced Pauli list for the H2 row")
    t.set_defaults(func=cmd_table)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
