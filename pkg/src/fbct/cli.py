"""Command-line entry point: ``fbct {tables,spectrum,verify,kloosterman}``.

Exit codes: 0 success, 1 verification mismatch, 2 usage error, 3 capacity
refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path

from . import analysis, closedform, kernels
from .errors import CapacityError, UsageError
from .field import MAX_DEGREE, get_field
from .parallel import THREADS_ENV, resolve_threads

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3
TABLE_DUMP_MAX_N = 8


@dataclass
class RunConfig:
    command: str
    n: int
    modulus: int | None
    function: str
    output: str
    threads: int
    table: str = "fbct"
    method: str = "auto"
    backend: str | None = None
    out: str | None = None


def _hex(text: str) -> int:
    try:
        return int(text, 16)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a hexadecimal integer: {text!r}")


def load_table_file(path: str | Path, spec) -> list[int]:
    """One hex element per line; line i holds F(i)."""
    try:
        lines = [ln.strip() for ln in Path(path).read_text().splitlines()]
        values = [int(ln, 16) for ln in lines if ln]
    except (OSError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None
    if len(values) != spec.order:
        raise UsageError(f"{path}: expected {spec.order} entries for n={spec.n}, found {len(values)}")
    return values


def resolve_function(cfg: RunConfig, spec) -> analysis.BoxedFunction:
    f = cfg.function
    if f == "paper":
        return analysis.BoxedFunction.paper(spec)
    if f.startswith("@"):
        return analysis.BoxedFunction.from_table(spec, load_table_file(f[1:], spec))
    try:
        d = int(f, 10)
    except ValueError:
        raise UsageError(f"--function expects 'paper', a decimal exponent or @path, got {f!r}") from None
    return analysis.BoxedFunction.power(spec, d)


def _spec(cfg: RunConfig):
    return get_field(cfg.n, cfg.modulus)


def cmd_spectrum(cfg: RunConfig) -> tuple[int, str]:
    spec = _spec(cfg)
    F = resolve_function(cfg, spec)
    method = cfg.method
    if method == "auto":
        method = "ratio" if F.is_power else "bruteforce"
    if method == "ratio":
        if not F.is_power:
            raise UsageError("the ratio-reduced path only applies to power functions")
        spectrum = analysis.fbct_spectrum_power(F.exponent, spec, cfg.threads, cfg.backend)
    else:
        spectrum = analysis.fbct_spectrum_bruteforce(F, cfg.threads, cfg.backend)
    if cfg.output == "csv":
        return EXIT_OK, spectrum.to_csv()
    return EXIT_OK, spectrum.to_json(spec, F.describe(), path=method) + "\n"


def cmd_tables(cfg: RunConfig) -> tuple[int, str]:
    spec = _spec(cfg)
    if spec.n > TABLE_DUMP_MAX_N:
        raise CapacityError(f"full table dumps are limited to n <= {TABLE_DUMP_MAX_N}")
    F = resolve_function(cfg, spec)
    build = {"ddt": analysis.ddt_table, "bct": analysis.bct_table, "fbct": analysis.fbct_table}[cfg.table]
    rows = build(F, cfg.threads, cfg.backend).tolist()
    if cfg.output == "csv":
        return EXIT_OK, "".join(",".join(map(str, r)) + "\n" for r in rows)
    doc = {"n": spec.n, "modulus": f"{spec.modulus:#x}", "function": F.describe(), "table": cfg.table, "rows": rows}
    return EXIT_OK, json.dumps(doc) + "\n"


def cmd_verify(cfg: RunConfig) -> tuple[int, str]:
    spec = _spec(cfg)
    if spec.n < 3:
        raise UsageError("verify needs n >= 3")
    F = resolve_function(cfg, spec)
    if F.exponent != (1 << (spec.n - 2)) - 1:
        raise UsageError("verify only applies to --function paper (x^(2^(n-2)-1))")
    report = closedform.verify_theorem(spec, cfg.threads, cfg.backend)
    return (EXIT_OK if report.passed else EXIT_MISMATCH), report.to_json() + "\n"


def cmd_kloosterman(cfg: RunConfig) -> tuple[int, str]:
    n = cfg.n
    carlitz = closedform.kloosterman_carlitz(n)
    direct = closedform.kloosterman_direct(_spec(cfg)) if n <= MAX_DEGREE else None
    agree = direct is None or direct == carlitz
    doc = {"n": n, "direct": direct, "carlitz": carlitz, "agree": agree, "mod4": carlitz % 4 == 0}
    if cfg.output == "csv":
        text = "n,direct,carlitz,agree,mod4\n" + ",".join(
            "" if v is None else str(v).lower() if isinstance(v, bool) else str(v) for v in doc.values()
        ) + "\n"
    else:
        text = json.dumps(doc) + "\n"
    return (EXIT_OK if agree and doc["mod4"] else EXIT_MISMATCH), text


COMMANDS = {
    "spectrum": cmd_spectrum,
    "tables": cmd_tables,
    "verify": cmd_verify,
    "kloosterman": cmd_kloosterman,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="field degree")
    common.add_argument("--modulus", type=_hex, default=None, help="irreducible modulus as hex, e.g. 0x11b")
    common.add_argument("--function", default="paper", help="'paper', a decimal exponent d, or @path to a lookup table")
    common.add_argument("--output", choices=("json", "csv"), default="json")
    common.add_argument("--threads", type=int, default=None, help=f"worker count (default: ${THREADS_ENV} or CPU count)")
    common.add_argument("--backend", choices=kernels.NAMES, default=None, help="kernel backend override")
    common.add_argument("--out", default=None, help="write output here instead of stdout")

    parser = argparse.ArgumentParser(prog="fbct", description="DDT/BCT/FBCT tables and spectra over GF(2^n)")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("spectrum", parents=[common], help="Feistel boomerang spectrum")
    p.add_argument("--method", choices=("auto", "bruteforce", "ratio"), default="auto")
    p = sub.add_parser("tables", parents=[common], help="full DDT/BCT/FBCT table")
    p.add_argument("--table", choices=("ddt", "bct", "fbct"), default="fbct")
    sub.add_parser("verify", parents=[common], help="check the closed-form FBCT of x^(2^(n-2)-1)")
    sub.add_parser("kloosterman", parents=[common], help="K_n(1) by direct sum and by Carlitz's formula")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = RunConfig(
            command=args.command,
            n=args.n,
            modulus=args.modulus,
            function=args.function,
            output=args.output,
            threads=resolve_threads(args.threads),
            table=getattr(args, "table", "fbct"),
            method=getattr(args, "method", "auto"),
            backend=args.backend,
            out=args.out,
        )
        if args.command == "kloosterman" and not 2 <= cfg.n <= closedform.CARLITZ_MAX_N:
            raise UsageError(f"kloosterman supports 2 <= n <= {closedform.CARLITZ_MAX_N}")
        if args.command == "kloosterman" and cfg.n > MAX_DEGREE:
            cfg.modulus = None
        code, text = COMMANDS[args.command](cfg)
    except CapacityError as exc:
        print(f"fbct: capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (UsageError, ValueError) as exc:
        print(f"fbct: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.out:
        Path(cfg.out).write_text(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
