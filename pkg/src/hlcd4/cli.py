"""Command-line front end.

Generator matrices travel in a plain text format: optional ``#`` comment
lines, then k rows of n symbols from {0, 1, w, W} (w is the primitive
element, W its square), whitespace between symbols optional.  Files emitted
by subcommands carry a ``#`` provenance header recording the command line,
the seed where applicable, and the SHA-256 of the parent file; thread count
and timing never enter the header, so reruns of a seeded command are
byte-identical regardless of parallelism.

Exit codes: 0 success, 1 domain error (a JSON object describing it goes to
standard error), 2 usage error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path
from typing import Optional

import numpy as np

from . import __version__, linalg
from .code import CodeSummary, LinearCode
from .errors import CodeFileError, Hlcd4Error
from .gf4 import from_symbols, to_symbols
from .search import SearchConfig, Strategy, VerifyStatus, search, verify_bounds
from .tables import BoundsTable
from .transform import (
    axy_construct,
    check_isotropic,
    lcd_column_parity,
    orthonormalize,
    puncture,
    shorten,
)

_SYMBOL_SET = set("01wW")

# Classes above this are not enumerated by `info` unless --exact-d is given;
# covers every k <= 12 fully.
_DEFAULT_CLASS_BUDGET = 10**7


def parse_code_file(text: str) -> LinearCode:
    """Parse the code-file format into a LinearCode.

    Raises:
        CodeFileError: on bad symbols (with line and column), unequal row
            lengths, or an empty body.
        RankDeficientError: when the matrix rows are dependent.
    """
    rows = []
    row_lines = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        symbols = []
        for col, ch in enumerate(line, start=1):
            if ch.isspace():
                continue
            if ch not in _SYMBOL_SET:
                raise CodeFileError(
                    f"invalid symbol {ch!r} at line {lineno}, column {col}",
                    line=lineno,
                    column=col,
                )
            symbols.append(ch)
        rows.append(from_symbols("".join(symbols)))
        row_lines.append(lineno)
    if not rows:
        raise CodeFileError("no matrix rows in input")
    n = len(rows[0])
    for r, lineno in zip(rows, row_lines):
        if len(r) != n:
            raise CodeFileError(
                f"line {lineno} has {len(r)} symbols, expected {n}", line=lineno
            )
    return LinearCode(np.vstack(rows))


def emit_code_file(matrix: np.ndarray, header: Optional[list] = None) -> str:
    """Render a generator matrix in the code-file format."""
    lines = [f"# hlcd4 {__version__}"]
    for h in header or []:
        lines.append(f"# {h}")
    if matrix.shape[0] == 0:
        lines.append("# zero code (k = 0); no rows")
    for row in matrix:
        lines.append(to_symbols(row))
    return "\n".join(lines) + "\n"


def emit_summary(summary: CodeSummary, fmt: str = "text") -> str:
    """Render a summary as 'text' or 'json'."""
    if fmt == "json":
        return json.dumps(summary.to_dict(), sort_keys=True)
    d = str(summary.d) if summary.d_exact else f"<= {summary.d} (budget exceeded)"
    dd = (
        str(summary.d_dual)
        if summary.d_dual_exact
        else f"<= {summary.d_dual} (budget exceeded)"
    )
    return "\n".join(
        [
            f"[{summary.n},{summary.k}] code",
            f"d: {d}",
            f"d_dual: {dd}",
            f"hull_dim: {summary.hull_dim}",
            f"LCD: {'yes' if summary.is_lcd else 'no'}",
            f"even: {'yes' if summary.is_even else 'no'}",
        ]
    )


def _read_code(path: str) -> tuple[LinearCode, str]:
    text = Path(path).read_text(encoding="utf-8")
    return parse_code_file(text), hashlib.sha256(text.encode()).hexdigest()


def _write_output(text: str, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _coords(spec: str) -> list:
    try:
        return [int(tok) for tok in spec.split(",") if tok.strip()]
    except ValueError:
        raise ValueError(f"bad coordinate list {spec!r}; expected i[,j...]") from None


def _cmd_info(args) -> int:
    code, _ = _read_code(args.file)
    budget = None if args.exact_d else (args.budget or _DEFAULT_CLASS_BUDGET)
    print(emit_summary(code.summarize(budget=budget), "json" if args.json else "text"))
    return 0


def _cmd_dual(args) -> int:
    code, digest = _read_code(args.file)
    dual = code.hermitian_dual()
    header = [f"command: dual", f"parent: sha256 {digest}"]
    _write_output(emit_code_file(dual.gen, header), args.output)
    return 0


def _cmd_puncture(args) -> int:
    code, digest = _read_code(args.file)
    out = puncture(code, _coords(args.coords))
    header = [f"command: puncture -t {args.coords}", f"parent: sha256 {digest}"]
    _write_output(emit_code_file(out.gen, header), args.output)
    return 0


def _cmd_shorten(args) -> int:
    code, digest = _read_code(args.file)
    out = shorten(code, _coords(args.coords))
    header = [f"command: shorten -t {args.coords}", f"parent: sha256 {digest}"]
    _write_output(emit_code_file(out.gen, header), args.output)
    return 0


def _cmd_orthonormalize(args) -> int:
    code, digest = _read_code(args.file)
    g = orthonormalize(code)
    header = [f"command: orthonormalize", f"parent: sha256 {digest}"]
    _write_output(emit_code_file(g, header), args.output)
    return 0


def _cmd_parity(args) -> int:
    code, _ = _read_code(args.file)
    reports = lcd_column_parity(code)
    if args.json:
        print(
            json.dumps(
                [
                    {
                        "coordinate": r.coordinate,
                        "column_weight": r.column_weight,
                        "puncture_is_lcd": r.puncture_is_lcd,
                        "shorten_is_lcd": r.shorten_is_lcd,
                    }
                    for r in reports
                ]
            )
        )
    else:
        for r in reports:
            parity = "even" if r.column_weight % 2 == 0 else "odd"
            kept = "puncture" if r.puncture_is_lcd else "shorten"
            print(
                f"coordinate {r.coordinate}: column weight {r.column_weight} "
                f"({parity}) -> {kept} is LCD"
            )
    return 0


def _cmd_axy(args) -> int:
    code, digest = _read_code(args.file)
    x = from_symbols(args.x)
    y = from_symbols(args.y)
    out = axy_construct(code, x, y)
    header = [
        f"command: axy --x {args.x} --y {args.y}",
        f"parent: sha256 {digest}",
    ]
    _write_output(emit_code_file(out.gen, header), args.output)
    return 0


def _cmd_pair_check(args) -> int:
    report = check_isotropic(from_symbols(args.x), from_symbols(args.y))
    print(
        json.dumps(
            {
                "xx": report.xx,
                "yy": report.yy,
                "xy": report.xy,
                "x_is_zero": report.x_is_zero,
                "y_is_zero": report.y_is_zero,
                "isotropic": report.isotropic,
                "valid": report.valid,
            }
        )
    )
    return 0 if report.valid else 1


def _cmd_search(args) -> int:
    base = None
    digest = None
    if args.base:
        base, digest = _read_code(args.base)
    config = SearchConfig(
        n=args.n,
        k=args.k,
        target_d=args.target_d,
        seed=args.seed,
        budget=args.budget,
        strategy=Strategy(args.strategy),
        base=base,
        threads=args.threads,
    )
    result = search(config)
    if result.found is None:
        err = {
            "error": "TargetNotReached",
            "message": f"no [{args.n},{args.k}] code with d >= {args.target_d} "
            f"within {result.candidates_tried} candidates",
            "candidates_tried": result.candidates_tried,
        }
        print(json.dumps(err), file=sys.stderr)
        return 1
    header = [
        "command: search --n {} --k {} --target-d {} --seed {} --budget {} --strategy {}".format(
            args.n, args.k, args.target_d, args.seed, args.budget, args.strategy
        ),
        f"candidates tried: {result.candidates_tried}",
    ]
    if digest is not None:
        header.append(f"parent: sha256 {digest}")
    _write_output(emit_code_file(result.found.gen, header), args.output)
    if args.output is not None:
        print(
            json.dumps(
                {
                    "found": True,
                    "candidates_tried": result.candidates_tried,
                    "summary": result.summary.to_dict(),
                },
                sort_keys=True,
            )
        )
    return 0


def _cmd_verify_table(args) -> int:
    table = BoundsTable.load(args.bounds)
    results_dir = Path(args.results)
    if not results_dir.is_dir():
        raise ValueError(f"not a directory: {args.results}")
    summaries = []
    names = []
    for path in sorted(results_dir.iterdir()):
        if not path.is_file() or path.name.startswith("."):
            continue
        code = parse_code_file(path.read_text(encoding="utf-8"))
        budget = None if args.exact_d else (args.budget or _DEFAULT_CLASS_BUDGET)
        summaries.append(code.summarize(budget=budget))
        names.append(path.name)
    records = verify_bounds(summaries, table)
    ok = True
    for name, rec in zip(names, records):
        print(
            f"{name}: [{rec.n},{rec.k}] d={rec.d} "
            f"bounds {rec.lower}..{rec.upper} -> {rec.status.value}"
        )
        if rec.status in (VerifyStatus.CONTRADICTION, VerifyStatus.NOT_LCD):
            ok = False
    return 0 if ok else 1


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="hlcd4",
        description="Hermitian LCD codes over the four-element field.",
    )
    p.add_argument("--version", action="version", version=f"hlcd4 {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def add_output(sp):
        sp.add_argument("-o", "--output", help="write the code file here instead of stdout")

    sp = sub.add_parser("info", help="summarize a code file")
    sp.add_argument("file")
    sp.add_argument("--json", action="store_true")
    sp.add_argument("--exact-d", action="store_true", help="never truncate the weight scan")
    sp.add_argument("--budget", type=int, help="max enumerated classes for min weight")
    sp.set_defaults(func=_cmd_info)

    sp = sub.add_parser("dual", help="Hermitian dual code")
    sp.add_argument("file")
    add_output(sp)
    sp.set_defaults(func=_cmd_dual)

    sp = sub.add_parser("puncture", help="delete coordinates")
    sp.add_argument("file")
    sp.add_argument("-t", "--coords", required=True, help="1-based, comma separated")
    add_output(sp)
    sp.set_defaults(func=_cmd_puncture)

    sp = sub.add_parser("shorten", help="restrict to zero coordinates, then delete")
    sp.add_argument("file")
    sp.add_argument("-t", "--coords", required=True, help="1-based, comma separated")
    add_output(sp)
    sp.set_defaults(func=_cmd_shorten)

    sp = sub.add_parser("orthonormalize", help="generator with identity Gram matrix")
    sp.add_argument("file")
    add_output(sp)
    sp.set_defaults(func=_cmd_orthonormalize)

    sp = sub.add_parser("parity", help="column-parity LCD report per coordinate")
    sp.add_argument("file")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=_cmd_parity)

    sp = sub.add_parser("axy", help="two-vector update of a standard-form code")
    sp.add_argument("file")
    sp.add_argument("--x", required=True, help="symbols, length n-k")
    sp.add_argument("--y", required=True, help="symbols, length n-k")
    add_output(sp)
    sp.set_defaults(func=_cmd_axy)

    sp = sub.add_parser("pair-check", help="isotropy report for a vector pair")
    sp.add_argument("--x", required=True)
    sp.add_argument("--y", required=True)
    sp.set_defaults(func=_cmd_pair_check)

    sp = sub.add_parser("search", help="seeded search for an LCD code")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--target-d", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True, help="explicit seed; no default")
    sp.add_argument("--budget", type=int, default=100000, help="max candidates")
    sp.add_argument(
        "--strategy",
        choices=[s.value for s in Strategy],
        default=Strategy.RANDOM.value,
    )
    sp.add_argument("--base", help="base code file (axy / puncture-shorten)")
    sp.add_argument("--threads", type=int, default=1)
    add_output(sp)
    sp.set_defaults(func=_cmd_search)

    sp = sub.add_parser("verify-table", help="check result codes against the bounds table")
    sp.add_argument("--results", required=True, help="directory of code files")
    sp.add_argument("--bounds", help="bounds CSV (packaged table by default)")
    sp.add_argument("--exact-d", action="store_true")
    sp.add_argument("--budget", type=int)
    sp.set_defaults(func=_cmd_verify_table)

    return p


def main(argv: Optional[list] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except Hlcd4Error as e:
        err = {"error": type(e).__name__, "message": str(e)}
        for attr in ("line", "column", "xx", "yy", "xy", "upper_bound"):
            v = getattr(e, attr, None)
            if v is not None:
                err[attr] = v
        print(json.dumps(err), file=sys.stderr)
        return 1
    except (ValueError, OSError) as e:
        print(json.dumps({"error": type(e).__name__, "message": str(e)}), file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
