"""Command-line front end.

    semicirc power   --ring Z --rcirculant --r -1 --row 5,4,3,2,1 --k 3
    semicirc formal  --ring Z/8 --row 2,4,2,3 --k symbolic
    semicirc verify  --ring Z/12 --row 3,0,5 --k 7
    semicirc bench   --ring Z/101 --n-values 2,4,8 --k-values 8,32

Exit status: 0 on success, 1 on invalid input, 2 when an oracle disagrees.
A row starting with a negative number must be written ``--row=-1,2``.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, TextIO

from .bench import CSV_COLUMNS, run_bench
from .compositions import L_direct
from .formal import build_sequence, evaluate, render
from .rcirculant import (
    RCirculant,
    from_dense,
    naive_rc_power,
    power_via_fold,
    to_dense,
    two_strip_power,
)
from .ring import Ring, parse_ring
from .semicirculant import (
    SemicirculantSpec,
    division_recursion_power,
    leading_zeros,
    naive_power,
    power,
    shifted_power,
)

EXIT_OK, EXIT_INVALID, EXIT_MISMATCH = 0, 1, 2

# L_direct enumerates compositions; past this order the check gets slow
MAX_DIRECT_ORDER = 12


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


@dataclass(frozen=True)
class JobSpec:
    ring: Ring
    ring_text: str
    rcirculant: bool
    row: tuple[int, ...]
    n: int
    r: int
    k: Optional[int]
    command: str
    format: str

    def semicirculant(self) -> SemicirculantSpec:
        return SemicirculantSpec.from_integers(self.ring, self.row, self.n)

    def rc(self) -> RCirculant:
        return RCirculant.from_integers(self.ring, self.row, self.r)


def _int_list(field: str, text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"--{field}: expected comma-separated integers, got {text!r}") from None
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="semicirc", description="Exact powers of semicirculant and r-circulant matrices.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def job_options(p: argparse.ArgumentParser, k_required: bool) -> None:
        p.add_argument("--ring", default="Z", help="'Z' or 'Z/<m>' (default Z)")
        p.add_argument("--row", required=True, help="first row, comma-separated integers")
        p.add_argument("--rcirculant", action="store_true", help="treat the row as circ_{n,r}")
        p.add_argument("--r", default="1", help="r for --rcirculant (default 1)")
        p.add_argument("--n", type=str, default=None, help="order (default: row length)")
        p.add_argument("--k", required=k_required, default="symbolic" if not k_required else None)
        p.add_argument("--format", choices=("text", "json"), default="text")

    job_options(sub.add_parser("power", help="first row / strips of the k-th power"), True)
    job_options(sub.add_parser("formal", help="formal entries of the k-th power"), False)
    job_options(sub.add_parser("verify", help="cross-check against every applicable oracle"), True)

    b = sub.add_parser("bench", help="CSV timing of fold vs dense repeated squaring")
    b.add_argument("--ring", default="Z")
    b.add_argument("--n-values", default="2,3,4,6,8")
    b.add_argument("--k-values", default="4,16,64")
    b.add_argument("--r", default="1")
    b.add_argument("--seed", default="0")
    b.add_argument("--repeat", default="3")
    return parser


def _parse_int(field: str, text: str) -> int:
    try:
        return int(text)
    except (TypeError, ValueError):
        raise UsageError(f"--{field}: expected an integer, got {text!r}") from None


def _parse_ring(text: str) -> Ring:
    try:
        return parse_ring(text)
    except ValueError as exc:
        raise UsageError(f"--ring: {exc}") from None


def parse_job(args: argparse.Namespace) -> JobSpec:
    ring = _parse_ring(args.ring)
    row = _int_list("row", args.row)
    r = _parse_int("r", args.r)
    if args.k is None or args.k == "symbolic":
        if args.command != "formal":
            raise UsageError(f"--k: {args.command} needs a nonnegative integer exponent")
        k = None
    else:
        k = _parse_int("k", args.k)
        if k < 0:
            raise UsageError(f"--k: must be >= 0, got {k}")
    if args.n is None:
        n = len(row)
    else:
        n = _parse_int("n", args.n)
        if args.rcirculant and n != len(row):
            raise UsageError(f"--n: r-circulant order {n} does not match row length {len(row)}")
        if n < len(row):
            raise UsageError(f"--n: order {n} is shorter than the row ({len(row)} entries)")
    return JobSpec(ring, str(ring), args.rcirculant, row, n, r, k, args.command, args.format)


def _fmt_row(R: Ring, row: Sequence) -> str:
    return "[" + ", ".join(R.format(x) for x in row) + "]"


def cmd_power(job: JobSpec, out: TextIO) -> int:
    R = job.ring
    if job.rcirculant:
        result = power_via_fold(job.rc(), job.k)
        payload = {"kind": "rcirculant", "ring": job.ring_text, "n": job.n,
                   "r": R.from_integer(job.r), "k": job.k, "row": list(result.row)}
        text = result.format()
    else:
        result = power(job.semicirculant(), job.k)
        payload = {"kind": "semicirculant", "ring": job.ring_text, "n": job.n,
                   "k": job.k, "row": list(result.row)}
        text = _fmt_row(R, result.row)
    _emit(job, out, text, payload)
    return EXIT_OK


def cmd_formal(job: JobSpec, out: TextIO) -> int:
    R = job.ring
    if job.rcirculant:
        # support of [c_0, ..., c_{n-1}, 0, ...]^k ends at (n-1)k
        last = job.n - 1 if job.k is None else max(job.n - 1, (job.n - 1) * job.k)
        row = tuple(R.from_integer(v) for v in job.row)
    else:
        spec = job.semicirculant()
        last, row = spec.order - 1, spec.row
    seq = build_sequence(R, row[0], row[1:], last)
    lines, entries = [], []
    for m, e in enumerate(seq.entries):
        text = render(R, e, row[0])
        item = {"m": m, "terms": {str(p): e.terms[p] for p in sorted(e.terms, reverse=True)},
                "text": text}
        line = f"a_{m}(k) = {text}"
        if job.k is not None:
            value = evaluate(R, e, row[0], job.k)
            item["value"] = value
            line += f"   [k={job.k}: {R.format(value)}]"
        lines.append(line)
        entries.append(item)
    payload = {"kind": "rcirculant" if job.rcirculant else "semicirculant",
               "ring": job.ring_text, "a0": row[0], "k": job.k, "entries": entries}
    _emit(job, out, "\n".join(lines), payload)
    return EXIT_OK


@dataclass
class Check:
    name: str
    status: str  # "agree", "mismatch", "skipped"
    detail: str = ""


def _first_difference(R: Ring, xs: Sequence, ys: Sequence) -> Optional[int]:
    for i, (x, y) in enumerate(zip(xs, ys)):
        if not R.equals(x, y):
            return i
    if len(xs) != len(ys):
        return min(len(xs), len(ys))
    return None


def _compare(R: Ring, name: str, k: int, compute: Callable[[int], Sequence],
             oracle: Callable[[int], Sequence]) -> Check:
    """Compare at ``k``; on failure report the smallest exponent and index that disagree."""
    if _first_difference(R, compute(k), oracle(k)) is None:
        return Check(name, "agree")
    for j in range(k + 1):
        got, want = compute(j), oracle(j)
        i = _first_difference(R, got, want)
        if i is not None:
            g = R.format(got[i]) if i < len(got) else "<missing>"
            w = R.format(want[i]) if i < len(want) else "<missing>"
            return Check(name, "mismatch", f"k={j} index={i}: computed {g}, oracle {w}")
    raise AssertionError("mismatch at k vanished during minimization")


def _semicirculant_checks(job: JobSpec) -> list[Check]:
    R, spec, k = job.ring, job.semicirculant(), job.k
    checks = [_compare(R, "naive_power", k, lambda j: power(spec, j).row,
                       lambda j: naive_power(spec, j).row)]
    if division_recursion_power(spec, k) is None:
        checks.append(Check("division_recursion", "skipped", "a0 or some index is not a unit"))
    else:
        checks.append(_compare(R, "division_recursion", k, lambda j: power(spec, j).row,
                               lambda j: division_recursion_power(spec, j).row))
    if 0 < leading_zeros(spec):
        checks.append(_compare(R, "shifted_power", k, lambda j: power(spec, j).row,
                               lambda j: shifted_power(spec, j).row))
    else:
        checks.append(Check("shifted_power", "skipped", "row has no leading zero"))
    checks.append(_coefficient_check(R, spec.row, spec.order - 1))
    return checks


def _coefficient_check(R: Ring, row: Sequence, last: int) -> Check:
    if last > MAX_DIRECT_ORDER:
        return Check("multinomial_coefficients", "skipped", f"order above {MAX_DIRECT_ORDER}")
    seq = build_sequence(R, row[0], row[1:], last)
    tail = list(row[1:last + 1]) + [R.zero] * max(0, last - len(row) + 1)
    for m in range(1, last + 1):
        for p in range(1, m + 1):
            got = seq.entries[m].coefficient(p, R)
            want = L_direct(R, tail, m, p)
            if not R.equals(got, want):
                return Check("multinomial_coefficients", "mismatch",
                             f"m={m} p={p}: recursion {R.format(got)}, direct {R.format(want)}")
    return Check("multinomial_coefficients", "agree")


def _rcirculant_checks(job: JobSpec) -> list[Check]:
    R, C, k = job.ring, job.rc(), job.k
    checks = [_compare(R, "naive_rc_power", k,
                       lambda j: [x for row in to_dense(power_via_fold(C, j)) for x in row],
                       lambda j: [x for row in naive_rc_power(C, j) for x in row])]
    try:
        from_dense(R, naive_rc_power(C, k), C.r)
        checks.append(Check("closure", "agree"))
    except ValueError:
        checks.append(Check("closure", "mismatch", f"k={k}: dense power is not r-circulant"))
    nonzero = [i for i, c in enumerate(C.row) if not R.is_zero(c)]
    if len(nonzero) == 2:
        p, q = nonzero
        checks.append(_compare(
            R, "two_strip", k, lambda j: power_via_fold(C, j).row,
            lambda j: two_strip_power(R, C.n, C.r, p, q, C.row[p], C.row[q], j).row))
    else:
        checks.append(Check("two_strip", "skipped", "row does not have exactly two nonzero strips"))
    order = (C.n - 1) * k + 1
    checks.append(_coefficient_check(R, C.row + (R.zero,) * (order - C.n), order - 1))
    return checks


def cmd_verify(job: JobSpec, out: TextIO) -> int:
    checks = _rcirculant_checks(job) if job.rcirculant else _semicirculant_checks(job)
    ok = all(c.status != "mismatch" for c in checks)
    if job.format == "json":
        payload = {"ok": ok, "k": job.k,
                   "checks": [{"name": c.name, "status": c.status, "detail": c.detail} for c in checks]}
        out.write(json.dumps(payload) + "\n")
    else:
        for c in checks:
            out.write(f"{c.name}: {c.status}" + (f" ({c.detail})" if c.detail else "") + "\n")
        out.write("OK\n" if ok else "MISMATCH\n")
    return EXIT_OK if ok else EXIT_MISMATCH


def cmd_bench(args: argparse.Namespace, out: TextIO) -> int:
    ring = _parse_ring(args.ring)
    n_values = _int_list("n-values", args.n_values)
    k_values = _int_list("k-values", args.k_values)
    if any(n < 1 for n in n_values):
        raise UsageError("--n-values: orders must be >= 1")
    if any(k < 0 for k in k_values):
        raise UsageError("--k-values: exponents must be >= 0")
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in run_bench(ring, n_values, k_values, r=_parse_int("r", args.r),
                         seed=_parse_int("seed", args.seed), repeat=_parse_int("repeat", args.repeat)):
        writer.writerow(row.as_tuple())
    return EXIT_OK


def _emit(job: JobSpec, out: TextIO, text: str, payload: dict) -> None:
    if job.format == "json":
        out.write(json.dumps(payload) + "\n")
    else:
        out.write(text + "\n")


COMMANDS = {"power": cmd_power, "formal": cmd_formal, "verify": cmd_verify}


def run(argv: Optional[Sequence[str]] = None, out: TextIO = None, err: TextIO = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    try:
        args = _build_parser().parse_args(argv)
        if args.command == "bench":
            return cmd_bench(args, out)
        return COMMANDS[args.command](parse_job(args), out)
    except UsageError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID
    except ValueError as exc:
        err.write(f"error: {exc}\n")
        return EXIT_INVALID


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
