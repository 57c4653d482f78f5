"""Command-line interface: ``sixqubit <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 capacity error.
Every command accepts ``--json`` for a machine-readable report carrying
``"schema": 1``. A file argument of ``-`` reads standard input.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from typing import Sequence

import numpy as np

from .clifford import compute_codewords, dumps_circuit
from .cssea import (
    build_ea_code,
    css_generators,
    hamming_7_4,
    loads_classical,
    reduce_to_ebit,
    steane_equivalence_transform,
)
from .errors import CapacityError, QECError, StructureError, UsageError
from .search import SearchSpec, default_jobs, recheck_survivor, search_css
from .stabilizer import (
    BUILTIN_NAMES,
    QuantumCode,
    VerdictKind,
    builtin_code,
    distance,
    dumps_code,
    loads_code,
    pair_products,
    validate_code,
    verify_correction,
)
from .symplectic import CheckMatrix, commutation_matrix, group_equal
from .synthesis import symplectic_gram_schmidt, synthesize_encoder

SCHEMA = 1


class Outcome:
    def __init__(self, code: int = 0, text: str = "", report: dict | None = None):
        self.code = code
        self.text = text
        self.report = report or {}


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _write(path: str, text: str):
    try:
        with open(path, "w") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc.strerror}") from None


def _code(path: str) -> QuantumCode:
    return loads_code(_read(path), name=path)


def _gens(path: str) -> CheckMatrix:
    """Plain generator list, one Pauli per line; a code file also works."""
    text = _read(path)
    if "[stabilizer]" in text:
        return loads_code(text).stabilizer
    rows = [line.split("#", 1)[0].strip() for line in text.splitlines()]
    return CheckMatrix.from_strings([r for r in rows if r])


def _rows_text(title: str, rows) -> list[str]:
    return [f"{title}:"] + [f"  {str(r)}" for r in rows]


# -- commands --------------------------------------------------------------------


def cmd_verify(args) -> Outcome:
    code = _code(args.code)
    diag = validate_code(code)
    if diag is not None:
        rows = [r + 1 for r in diag.rows]
        return Outcome(
            1,
            f"invalid code: {diag.message}",
            {"valid": False, "kind": diag.kind, "rows": rows, "message": diag.message},
        )
    products = pair_products(code.n, code.alice_columns)
    report = verify_correction(code, products)
    fails = report.failures
    bad = set(fails)
    corrected = sum(e not in bad for e in products)
    counts = {k.value: report.count(k) for k in VerdictKind}
    text = [
        f"code {code.params()} valid",
        f"products corrected: {corrected}/{report.checked_pairs} ({len(report.verdicts)} distinct)",
    ]
    for kind in (VerdictKind.IN_STABILIZER, VerdictKind.IN_GAUGE):
        members = [str(e) for e, v in report.verdicts.items() if v.kind is kind]
        if members:
            text.append(f"{kind.value}: {' '.join(members)}")
    if fails:
        text.append("FAIL: " + " ".join(str(e) for e in fails))
    return Outcome(
        1 if fails else 0,
        "\n".join(text),
        {
            "valid": True,
            "params": code.params(),
            "checked_pairs": report.checked_pairs,
            "corrected": corrected,
            "distinct": len(report.verdicts),
            "counts": counts,
            "failures": [str(e) for e in fails],
            "verdicts": {str(e): str(v) for e, v in report.verdicts.items()},
        },
    )


def cmd_distance(args) -> Outcome:
    code = _code(args.code)
    d = distance(code, max_weight=args.max_weight, all_columns=args.global_)
    scope = "all columns" if args.global_ else "sender columns"
    if d is None:
        return Outcome(0, f"no logical operator up to weight {args.max_weight} ({scope})", {"distance": None})
    return Outcome(0, str(d), {"distance": d, "scope": scope})


def _format_amplitudes(v: np.ndarray, n: int) -> str:
    nz = np.flatnonzero(np.abs(v) > 1e-12)
    mags = np.abs(v[nz])
    count = round(1 / mags[0] ** 2) if len(nz) else 0
    if count and np.allclose(mags, 1 / math.sqrt(count), atol=1e-12) and np.allclose(v[nz].imag if np.iscomplexobj(v) else 0, 0):
        terms = " ".join(f"{'+' if v[i].real > 0 else '-'}|{i:0{n}b}>" for i in nz)
        return f"(1/sqrt({count})) ({terms})"
    return " ".join(f"{complex(v[i]):+.12f}|{i:0{n}b}>" for i in nz)


def cmd_codewords(args) -> Outcome:
    code = _code(args.code)
    signs = None
    if args.signs:
        try:
            signs = [int(s) for s in args.signs.split(",")]
        except ValueError:
            raise UsageError("--signs takes comma-separated +1/-1 values") from None
    words = compute_codewords(code, signs=signs)
    n = code.n
    text, report = [], []
    for idx, v in enumerate(words):
        label = format(idx, f"0{code.k}b")
        text.append(f"|{label}_L> = {_format_amplitudes(v, n)}")
        nz = np.flatnonzero(np.abs(v) > 1e-12)
        report.append(
            {
                "logical": label,
                "amplitudes": {format(int(i), f"0{n}b"): [float(np.real(v[i])), float(np.imag(v[i]))] for i in nz},
            }
        )
    return Outcome(0, "\n".join(text), {"codewords": report})


def cmd_synth(args) -> Outcome:
    code = _code(args.code)
    res = synthesize_encoder(code)
    if args.output:
        _write(args.output, dumps_circuit(res.circuit))
    text = [f"ebits: {res.ebits}"]
    text += _rows_text("canonical", res.canonical)
    text += _rows_text("reduction script", res.reduction_script)
    text += _rows_text("encoder", res.circuit.gates)
    return Outcome(0, "\n".join(text), res.to_json())


def cmd_gram_schmidt(args) -> Outcome:
    gens = _gens(args.gens)
    res = symplectic_gram_schmidt(gens)
    text = [f"pairs: {res.c}"]
    text += [f"  {a}  {b}" for a, b in res.pairs]
    text += _rows_text("isotropic", res.isotropic)
    return Outcome(
        0,
        "\n".join(text),
        {
            "ebits": res.c,
            "pairs": [[str(a), str(b)] for a, b in res.pairs],
            "isotropic": res.isotropic.to_strings(),
        },
    )


def cmd_css_build(args) -> Outcome:
    hx = loads_classical(_read(args.hx))
    hz = loads_classical(_read(args.hz))
    gens = css_generators(hx, hz)
    comm = commutation_matrix(gens.rows)
    commuting = not any(any(row) for row in comm)
    text = _rows_text("generators", gens)
    text.append("commuting: " + ("yes" if commuting else "no (use ea-build)"))
    if args.output:
        _write(args.output, "".join(f"{r}\n" for r in gens))
    return Outcome(0, "\n".join(text), {"generators": gens.to_strings(), "commuting": commuting})


def cmd_ea_build(args) -> Outcome:
    code = build_ea_code(_gens(args.gens), name="ea")
    text = dumps_code(code)
    if args.output:
        _write(args.output, text)
    return Outcome(0, text.rstrip(), {"code": text, "ebits": code.c, "params": code.params()})


def cmd_reduce_ebit(args) -> Outcome:
    code = _code(args.code)
    out = reduce_to_ebit(code, args.qubit - 1)
    report = verify_correction(out, pair_products(out.n, out.alice_columns))
    text = dumps_code(out)
    if args.output:
        _write(args.output, text)
    summary = f"# corrects sender-side single errors: {'yes' if report.corrects else 'no'}"
    return Outcome(
        0 if report.corrects else 1,
        text + summary,
        {"code": text, "params": out.params(), "corrects": report.corrects},
    )


def cmd_steane_equiv(args) -> Outcome:
    code = _code(args.code)
    out = steane_equivalence_transform(code)
    h = hamming_7_4()
    target = css_generators(h, h)
    same = group_equal(out.stabilizer, target)
    text = _rows_text("transformed", out.stabilizer)
    text.append("equivalent to CSS(H7, H7): " + ("yes" if same else "no"))
    return Outcome(0 if same else 1, "\n".join(text), {"transformed": out.stabilizer.to_strings(), "equivalent": same})


def _split(text: str) -> tuple[int, int]:
    try:
        dx, dz = (int(v) for v in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("split must look like DX,DZ") from None
    return dx, dz


def cmd_search(args) -> Outcome:
    spec = SearchSpec(args.n, args.k, args.d, args.ebits, tuple(args.split) if args.split else None)
    jobs = args.jobs if args.jobs is not None else default_jobs()
    rep = search_css(spec, jobs=jobs)
    confirmed = all(recheck_survivor(s, spec) for s in rep.survivors)
    doc = rep.to_json()
    doc["survivors_rechecked"] = confirmed
    if args.report:
        _write(args.report, json.dumps({"schema": SCHEMA, **doc}, indent=2) + "\n")
    text = [f"search css n={spec.n} k={spec.k} d={spec.d} ebits={spec.c}"]
    text.append(f"{'dx':>3} {'dz':>3} {'enumerated':>12} {'commuting':>10} {'standard':>9} {'passed':>7}")
    for (dx, dz), c in rep.census.items():
        text.append(
            f"{dx:>3} {dz:>3} {c.enumerated:>12} {c.commuting:>10} {c.standard_form:>9} {c.passed_distance:>7}"
        )
    text.append(f"survivors: {len(rep.survivors)}")
    for s in rep.survivors[: args.show]:
        text.append("  " + " ".join(s.to_strings()))
    text.append(f"wall time: {rep.wall_time:.2f} s")
    return Outcome(0 if confirmed else 1, "\n".join(text), doc)


def cmd_builtin(args) -> Outcome:
    code = builtin_code(args.name)
    text = dumps_code(code)
    if args.output:
        _write(args.output, text)
        return Outcome(0, f"wrote {args.output}", {"code": text, "path": args.output})
    return Outcome(0, text.rstrip(), {"code": text})


# -- parser ------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit a JSON report")

    p = argparse.ArgumentParser(prog="sixqubit", description=__doc__.splitlines()[0], parents=[common])
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    s = sub.add_parser("verify", parents=[common], help="validate a code and check single-error correction")
    s.add_argument("code")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("distance", parents=[common], help="brute-force distance")
    s.add_argument("code")
    s.add_argument("--max-weight", type=int)
    s.add_argument("--global", dest="global_", action="store_true", help="include receiver columns")
    s.set_defaults(func=cmd_distance)

    s = sub.add_parser("codewords", parents=[common], help="logical basis states")
    s.add_argument("code")
    s.add_argument("--signs", help="comma-separated stabilizer eigenvalues, default all +1 (write --signs=-1,1,...)")
    s.set_defaults(func=cmd_codewords)

    s = sub.add_parser("synth", parents=[common], help="synthesize an encoding circuit")
    s.add_argument("code")
    s.add_argument("-o", "--output", help="write the encoder circuit here")
    s.set_defaults(func=cmd_synth)

    s = sub.add_parser("gram-schmidt", parents=[common], help="pair anticommuting generators")
    s.add_argument("gens")
    s.set_defaults(func=cmd_gram_schmidt)

    s = sub.add_parser("css-build", parents=[common], help="CSS generators from two parity-check files")
    s.add_argument("hx")
    s.add_argument("hz")
    s.add_argument("-o", "--output", help="write the generators here, one per line")
    s.set_defaults(func=cmd_css_build)

    s = sub.add_parser("ea-build", parents=[common], help="entanglement-assisted code from generators")
    s.add_argument("gens")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_ea_build)

    s = sub.add_parser("reduce-ebit", parents=[common], help="hand one qubit to the receiver")
    s.add_argument("code")
    s.add_argument("--qubit", type=int, required=True, help="1-based column")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_reduce_ebit)

    s = sub.add_parser("steane-equiv", parents=[common], help="map the [[6,1,3;1]] code onto Steane")
    s.add_argument("code")
    s.set_defaults(func=cmd_steane_equiv)

    s = sub.add_parser("search", parents=[common], help="exhaustive code searches")
    kinds = s.add_subparsers(dest="kind", required=True, metavar="kind")
    c = kinds.add_parser("css", parents=[common], help="CSS codes with at most one ebit")
    c.add_argument("--n", type=int, required=True)
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--ebits", type=int, default=0)
    c.add_argument("--jobs", type=int, help="worker processes (default: $QEC_JOBS or 1)")
    c.add_argument("--split", type=_split, action="append", help="restrict to DX,DZ (repeatable)")
    c.add_argument("--report", help="write the JSON report here")
    c.add_argument("--show", type=int, default=5, help="survivors to print")
    c.set_defaults(func=cmd_search)

    s = sub.add_parser("builtin", parents=[common], help="print a built-in code")
    s.add_argument("name", choices=BUILTIN_NAMES)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_builtin)
    return p


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.func(args)
    except CapacityError as exc:
        out = Outcome(3, f"error: {exc}", {"error": "capacity", "message": str(exc)})
    except StructureError as exc:
        out = Outcome(1, f"error: {exc}", {"error": "structure", "message": str(exc)})
    except (QECError, ValueError) as exc:
        out = Outcome(2, f"error: {exc}", {"error": "usage", "message": str(exc)})
    if args.json:
        print(json.dumps({"schema": SCHEMA, "command": args.command, "exit_code": out.code, **out.report}, indent=2))
    else:
        stream = sys.stdout if out.code in (0, 1) and not out.text.startswith("error:") else sys.stderr
        print(out.text, file=stream)
    return out.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
