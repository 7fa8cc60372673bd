"""Command-line driver: scans, single-pattern verification, fiber tables,
witnesses, and the exploratory density probe.

Exit codes: 0 success, 1 usage error, 2 dynamics violation (should never
happen; a genuine bug if it does), 3 I/O failure.

Output discipline: machine-readable streams (JSONL for scans, CSV for
fiber tables) are byte-identical for identical flags regardless of
--jobs.  Anything nondeterministic (wall time) goes to the summary on
the other stream, never into the records.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from math import comb

from . import kernel
from .cycle import ghost_cycle
from .dynamics import DynamicsViolation, iterate_cycle
from .generalized import GeneralizedMap, general_ghost_cycle, general_iterate_cycle
from .patterns import ParityPattern, PatternError, length_cells
from .records import ghost_record, trace_record
from .semilinear import (
    FiberUndefined,
    InconclusivePeriod,
    fiber_period_bruteforce,
    fiber_period_exact,
    nonsemilinearity_witness,
)

COLLATZ_QD = (3, 1)


class _Parser(argparse.ArgumentParser):
    # usage errors exit 1, not argparse's default 2
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--precision", type=int, default=64, help="working 2-adic precision in bits")
    common.add_argument("--format", choices=("json", "csv", "text"), default=None)
    common.add_argument("--out", default=None, help="write records here instead of stdout")
    common.add_argument("--jobs", type=int, default=1, help="scan worker processes")
    common.add_argument("--seed", type=int, default=0, help="seed for verification sampling")
    return common


def _parse_sigma(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise PatternError("sigma syntax", f"sigma must be comma-separated integers, got {text!r}")


def _parse_map(text: str) -> GeneralizedMap:
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"--map expects q,d (got {text!r})")
    return GeneralizedMap(int(parts[0]), int(parts[1]))


def _emit(lines, out_path: str | None) -> None:
    if out_path is None:
        for line in lines:
            sys.stdout.write(line + "\n")
    else:
        with open(out_path, "w", encoding="utf-8") as fh:
            for line in lines:
                fh.write(line + "\n")


# ---------------------------------------------------------------- ghost


def _render_ghost_text(g, t, q: int | None = None, d: int | None = None) -> list[str]:
    p = g.pattern
    rec = ghost_record(g, q, d)
    lines = []
    head = f"pattern x={p.x} y={p.y} sigma={','.join(map(str, p.sigma))} ell={p.ell}"
    if q is not None:
        head += f" map={q}n{d:+d}"
    lines.append(head + (" admissible" if rec["pattern"]["admissible"] else " inadmissible"))
    lines.append(f"C = {g.constant}")
    lines.append(f"modulus = {g.modulus}")
    if rec["verdict"] == "integer-cycle":
        lines.append(f"verdict: integer-cycle n = {rec['integer_value']}")
    else:
        lines.append("verdict: ghost")
    low = p.x + 1
    lines.append(f"n0 mod {1 << low} = {g.n0.residue & ((1 << low) - 1)}")
    lines.append(f"n0 = {g.n0}")
    lines.append(
        f"trace: valuations={','.join(map(str, t.step_valuations))}"
        f" closed={t.closed} final_precision={t.final_precision}"
    )
    return lines


def cmd_ghost(args) -> int:
    p = ParityPattern(args.x, args.y, _parse_sigma(args.sigma))
    qd = getattr(args, "map", None)
    if qd is None:
        g = ghost_cycle(p, args.precision)
        t = iterate_cycle(p, args.precision)
        q = d = None
    else:
        g = general_ghost_cycle(qd, p, args.precision)
        t = general_iterate_cycle(qd, p, args.precision)
        q, d = qd.q, qd.d
    if args.format == "json":
        payload = {"ghost": ghost_record(g, q, d), "trace": trace_record(t)}
        _emit([json.dumps(payload, separators=(",", ":"))], args.out)
    else:
        _emit(_render_ghost_text(g, t, q, d), args.out)
    return 0


# ----------------------------------------------------------------- scan


def _cell_worker(cell):
    x, y, q, d, precision = cell
    return kernel.cell_records(x, y, q, d, precision)


def _scan_record_line(x, y, q, d, precision, admissible, modulus, rec, include_map) -> str:
    sigma, c, n0, quo = rec
    record = {
        "pattern": {"x": x, "y": y, "sigma": list(sigma), "ell": x + y, "admissible": admissible},
        "C": str(c),
        "modulus": str(modulus),
        "n0": {"residue": str(n0), "precision": precision},
        "verdict": "integer-cycle" if quo is not None else "ghost",
    }
    if quo is not None:
        record["integer_value"] = str(quo)
    if include_map:
        record["q"] = q
        record["d"] = d
    return json.dumps(record, separators=(",", ":"))


def cmd_scan(args) -> int:
    qd = getattr(args, "map", None)
    include_map = qd is not None and (qd.q, qd.d) != COLLATZ_QD
    q, d = (qd.q, qd.d) if qd is not None else COLLATZ_QD
    precision = args.precision
    started = time.perf_counter()

    cells = [(x, y, q, d, precision) for _, y, x in length_cells(args.ell_max)]
    total = sum(comb(x - 1, y - 1) for x, y, _q, _d, _p in cells)
    sample_size = min(args.verify_sample, total)
    sampled = set(random.Random(args.seed).sample(range(total), sample_size))

    if args.jobs > 1:
        pool = ProcessPoolExecutor(max_workers=args.jobs)
        results = pool.map(_cell_worker, cells, chunksize=8)
    else:
        pool = None
        results = map(_cell_worker, cells)

    lines: list[str] = []
    integral: list[tuple[int, int, tuple[int, ...], int, bool]] = []
    admissible_count = 0
    index = 0
    gmap = GeneralizedMap(q, d)
    try:
        for (x, y, _q, _d, _p), recs in zip(cells, results):
            admissible = (1 << x) > q**y if d > 0 else (1 << x) < q**y
            cell_modulus = (1 << x) - q**y
            if admissible:
                admissible_count += len(recs)
            for rec in recs:
                lines.append(
                    _scan_record_line(x, y, q, d, precision, admissible, cell_modulus, rec, include_map)
                )
                if rec[3] is not None:
                    integral.append((x, y, rec[0], rec[3], admissible))
                if index in sampled:
                    p = ParityPattern(x, y, rec[0])
                    depth = max(precision, x + 2)
                    if (q, d) == COLLATZ_QD:
                        iterate_cycle(p, depth)  # DynamicsViolation escapes as exit 2
                    else:
                        general_iterate_cycle(gmap, p, depth)
                index += 1
    finally:
        if pool is not None:
            pool.shutdown()

    _emit(lines, args.out)
    elapsed = time.perf_counter() - started

    summary_to = sys.stdout if args.out else sys.stderr
    mapname = f"{q}n{d:+d}"
    print(
        f"scan ell_max={args.ell_max} map={mapname} precision={precision}:"
        f" patterns={total} admissible={admissible_count}"
        f" integer_cycles={len(integral)} ghosts={total - len(integral)}"
        f" verified_sample={sample_size}",
        file=summary_to,
    )
    for x, y, sigma, value, adm in integral:
        note = "" if adm else " (inadmissible)"
        print(
            f"  integral: x={x} y={y} sigma={','.join(map(str, sigma))} -> {value}{note}",
            file=summary_to,
        )
    print(f"wall_time={elapsed:.3f}s", file=summary_to)
    return 0


# ---------------------------------------------------------------- fibers


def cmd_fibers(args) -> int:
    rows = ["y,x,period_exact,period_bruteforce,agree"]
    three_y = 3**args.y
    for x in range(args.x_min, args.x_max + 1):
        if (1 << x) <= three_y:
            continue
        exact = fiber_period_exact(args.y, x).period
        if args.scan_bound is not None:
            try:
                brute = fiber_period_bruteforce(args.y, x, args.scan_bound)
                agree = "true" if brute == exact else "false"
                rows.append(f"{args.y},{x},{exact},{brute},{agree}")
            except InconclusivePeriod:
                rows.append(f"{args.y},{x},{exact},,")
        else:
            rows.append(f"{args.y},{x},{exact},,")
    _emit(rows, args.out)
    return 0


# --------------------------------------------------------------- witness


def cmd_witness(args) -> int:
    rec = nonsemilinearity_witness(args.y, args.bound)
    if args.format == "json":
        payload = {"y": rec.y, "M": str(args.bound), "x": rec.x, "period": str(rec.period)}
        _emit([json.dumps(payload, separators=(",", ":"))], args.out)
    else:
        _emit([f"y={rec.y} M={args.bound} -> x={rec.x} period={rec.period}"], args.out)
    return 0


# --------------------------------------------------------- density probe


def cmd_density_probe(args) -> int:
    if not 1 <= args.target_precision <= 32:
        raise ValueError(f"--target-precision must be in [1, 32], got {args.target_precision}")
    tp = args.target_precision
    mask = (1 << tp) - 1
    target = args.target & mask

    best = None  # (depth, x, y, sigma)
    histogram: dict[int, int] = {}
    for _, y, x in length_cells(args.ell_max):
        if (1 << x) <= 3**y:
            continue
        for sigma, _c, n0, _quo in kernel.cell_records(x, y, 3, 1, tp):
            diff = (n0 ^ target) & mask
            depth = tp if diff == 0 else (diff & -diff).bit_length() - 1
            histogram[depth] = histogram.get(depth, 0) + 1
            if best is None or depth > best[0]:
                best = (depth, x, y, sigma)

    if best is None:
        raise ValueError(f"no admissible patterns with ell <= {args.ell_max}")
    depth, x, y, sigma = best
    hist_items = sorted(histogram.items())
    if args.format == "json":
        payload = {
            "exploratory": True,
            "target": str(target),
            "target_precision": tp,
            "ell_max": args.ell_max,
            "best": {"x": x, "y": y, "sigma": list(sigma), "depth": depth},
            "histogram": {str(k): v for k, v in hist_items},
        }
        _emit([json.dumps(payload, separators=(",", ":"))], args.out)
    else:
        lines = [
            "density probe (exploratory: the statistic is ours, it proves nothing)",
            f"target={target} precision={tp} ell_max={args.ell_max}",
            f"best: x={x} y={y} sigma={','.join(map(str, sigma))} depth={depth}",
            "histogram: " + " ".join(f"{k}:{v}" for k, v in hist_items),
        ]
        _emit(lines, args.out)
    return 0


# -------------------------------------------------------------- general


def cmd_general(args) -> int:
    if args.ell_max is not None:
        return cmd_scan(args)
    if args.x is not None and args.y is not None and args.sigma is not None:
        return cmd_ghost(args)
    raise ValueError("general needs either --ell-max (scan) or --x/--y/--sigma (single pattern)")


# ----------------------------------------------------------------- main


def build_parser() -> _Parser:
    common = _common_flags()
    parser = _Parser(prog="ghostcycles", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p_ghost = sub.add_parser("ghost", parents=[common], help="one pattern: cycle, verdict, trace")
    p_ghost.add_argument("--x", type=int, required=True)
    p_ghost.add_argument("--y", type=int, required=True)
    p_ghost.add_argument("--sigma", required=True, help="comma-separated, starting at 0")
    p_ghost.set_defaults(func=cmd_ghost)

    p_scan = sub.add_parser("scan", parents=[common], help="exhaustive scan up to a length bound")
    p_scan.add_argument("--ell-max", type=int, required=True)
    p_scan.add_argument("--map", type=_parse_map, default=None, help="q,d for a qn+d map")
    p_scan.add_argument("--verify-sample", type=int, default=8,
                        help="dynamics-verify this many randomly chosen patterns")
    p_scan.set_defaults(func=cmd_scan)

    p_fib = sub.add_parser("fibers", parents=[common], help="fiber-period table (CSV)")
    p_fib.add_argument("--y", type=int, required=True)
    p_fib.add_argument("--x-min", type=int, required=True)
    p_fib.add_argument("--x-max", type=int, required=True)
    p_fib.add_argument("--scan-bound", type=int, default=None,
                       help="also run the brute-force oracle up to this bound")
    p_fib.set_defaults(func=cmd_fibers)

    p_wit = sub.add_parser("witness", parents=[common], help="refute a claimed fiber-period bound")
    p_wit.add_argument("--y", type=int, required=True)
    p_wit.add_argument("--bound", "-M", type=int, required=True, dest="bound")
    p_wit.set_defaults(func=cmd_witness)

    p_den = sub.add_parser("density-probe", parents=[common],
                           help="exploratory: closest ghost n0 to a 2-adic target")
    p_den.add_argument("--target", type=int, required=True)
    p_den.add_argument("--target-precision", type=int, default=16)
    p_den.add_argument("--ell-max", type=int, default=12)
    p_den.set_defaults(func=cmd_density_probe)

    p_gen = sub.add_parser("general", parents=[common], help="scan/ghost for a qn+d map")
    p_gen.add_argument("--map", type=_parse_map, required=True)
    p_gen.add_argument("--ell-max", type=int, default=None)
    p_gen.add_argument("--x", type=int, default=None)
    p_gen.add_argument("--y", type=int, default=None)
    p_gen.add_argument("--sigma", default=None)
    p_gen.add_argument("--verify-sample", type=int, default=8)
    p_gen.set_defaults(func=cmd_general)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PatternError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except (FiberUndefined, InconclusivePeriod, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except DynamicsViolation as exc:
        print(f"dynamics violation: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
