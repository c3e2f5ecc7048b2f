"""Command-line interface: compute, verify, sweep, and bench workflows.

Exit codes: 0 success / all checks passed, 1 verification mismatch,
2 parse or usage error, 3 solver capacity exceeded, 4 output I/O error.
Randomized suites use Python's documented Mersenne Twister (random.Random)
seeded with the 64-bit --seed value, which is echoed in report headers, so
identical configurations reproduce identical reports.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from . import closed_forms as cf
from .engine import (
    SOLVER_CAP,
    available_kernels,
    solve_exact,
    solve_naive,
)
from .errors import CapacityError, FormatError, ParameterError
from .formats import ReportRecord, parse_edge_list, parse_graph6, write_records
from .graphs import FamilySpec, Graph, generate, join, random_tree

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_PARSE = 2
EXIT_CAPACITY = 3
EXIT_IO = 4

_RANGED_FAMILIES = ("tree", "path", "cycle", "complete", "star", "wheel")
_DEFAULT_RANGES = {
    "tree": (2, 16),
    "path": (1, 16),
    "cycle": (3, 18),
    "complete": (1, 16),
    "star": (1, 12),
    "wheel": (4, 18),
}


def _build_spec(args) -> FamilySpec:
    family = args.family
    if family == "multipartite":
        if not args.parts:
            raise ParameterError("multipartite needs --parts, e.g. --parts 3,5,2")
        return FamilySpec("multipartite", parts=_parse_parts(args.parts))
    if family == "fan":
        if args.m is None or args.n is None:
            raise ParameterError("fan needs --m and --n")
        return FamilySpec("fan", m=args.m, n=args.n)
    if family == "join":
        raise ParameterError("join graphs are computed from files; see 'verify --family join'")
    if family == "tree":
        raise ParameterError("random trees are ranged; use verify/sweep, or feed a file")
    if args.n is None:
        raise ParameterError(f"{family} needs --n")
    return FamilySpec(family, n=args.n)


def _parse_parts(text: str) -> tuple[int, ...]:
    try:
        parts = tuple(int(tok) for tok in text.split(",") if tok.strip() != "")
    except ValueError:
        raise ParameterError(f"bad --parts value {text!r}") from None
    if not parts:
        raise ParameterError("--parts must list at least one positive integer")
    return parts


def _read_input(args) -> Graph:
    if args.input is None or args.input == "-":
        data = sys.stdin.buffer.read()
    else:
        with open(args.input, "rb") as fh:
            data = fh.read()
    if args.format == "edgelist":
        return parse_edge_list(data.decode("utf-8"))
    return parse_graph6(data.strip())


def _load_graph(args) -> tuple[str, str, Graph]:
    if args.family and args.input:
        raise ParameterError("give either --family or --input, not both")
    if args.family:
        spec = _build_spec(args)
        return spec.family, spec.describe(), generate(spec)
    return "custom", args.input or "stdin", _read_input(args)


def _closed_form_for(spec: FamilySpec):
    """(d1, d2) closed-form values for a family instance, or None."""
    f = spec.family
    if f in ("path", "tree"):
        return cf.closed_form_tree(spec.n)
    if f == "star":
        return cf.closed_form_tree(spec.n + 1)
    if f == "cycle":
        return cf.closed_form_cycle(spec.n)
    if f == "wheel":
        return cf.closed_form_wheel(spec.n)
    if f == "complete":
        return cf.closed_form_complete(spec.n)[:2]
    if f == "multipartite":
        return cf.closed_form_multipartite(spec.parts)[:2]
    if f == "fan":
        return cf.closed_form_fan(spec.m, spec.n)
    return None


def cmd_compute(args) -> int:
    family, params, g = _load_graph(args)
    start = time.perf_counter()
    result = solve_exact(g, threads=args.threads)
    elapsed_ms = int((time.perf_counter() - start) * 1000)
    print(f"family: {family}")
    print(f"params: {params}")
    print(f"n: {g.n}")
    print(f"m: {g.m}")
    print(f"d1: {result.d1}")
    print(f"witness_d1: {result.d1_witness.bitstring}")
    print(f"d2: {result.d2}")
    print(f"witness_d2: {result.d2_witness.bitstring}")
    print(f"cordial: {'true' if result.cordial else 'false'}")
    print(f"elapsed_ms: {elapsed_ms}")
    return EXIT_OK


def _iter_partitions(total: int):
    """Non-increasing positive partitions of `total`, lexicographic."""

    def rec(rest: int, cap: int, prefix: tuple[int, ...]):
        if rest == 0:
            yield prefix
            return
        for first in range(min(rest, cap), 0, -1):
            yield from rec(rest - first, first, prefix + (first,))

    yield from rec(total, total, ())


def _random_graph(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    edges = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p
    ]
    return Graph.from_edges(n, edges)


def _verify_instances(args):
    """Yield (spec_or_pair, kind) rows for the requested verify/sweep family."""
    family = args.family
    if family in ("cycle", "wheel", "complete", "path", "star"):
        lo_default, hi_default = _DEFAULT_RANGES[family]
        lo = args.min if args.min is not None else lo_default
        hi = args.max if args.max is not None else hi_default
        if args.n is not None:
            lo = hi = args.n
        lo = max(lo, lo_default)
        for n in range(lo, hi + 1):
            yield FamilySpec(family, n=n)
    elif family == "tree":
        lo, hi = _DEFAULT_RANGES["tree"]
        lo = args.min if args.min is not None else lo
        hi = args.max if args.max is not None else hi
        samples = args.samples if args.samples is not None else 100
        rng = random.Random(args.seed)
        for i in range(samples):
            n = args.n if args.n is not None else rng.randint(lo, hi)
            yield ("tree", i, n, random_tree(n, rng.getrandbits(63)))
    elif family == "fan":
        m_hi = args.m if args.m is not None else 5
        n_lo = args.min if args.min is not None else 1
        n_hi = args.max if args.max is not None else 8
        for m in range(1, m_hi + 1):
            for n in range(n_lo, n_hi + 1):
                yield FamilySpec("fan", m=m, n=n)
    elif family == "multipartite":
        if args.parts:
            yield FamilySpec("multipartite", parts=_parse_parts(args.parts))
        else:
            total_max = args.total_max if args.total_max is not None else 12
            for total in range(1, total_max + 1):
                for parts in _iter_partitions(total):
                    yield FamilySpec("multipartite", parts=parts)
    else:
        raise ParameterError(f"family {family!r} is not iterable here")


def _verify_family_rows(args):
    """Closed-form vs exact rows: (family, params, closed, exact, verdict)."""
    for item in _verify_instances(args):
        if isinstance(item, FamilySpec):
            spec = item
            family, params, g = spec.family, spec.describe(), generate(spec)
            closed = _closed_form_for(spec)
        else:
            _, i, n, g = item
            family, params = "tree", f"n={n},sample={i}"
            closed = cf.closed_form_tree(n)
        res = solve_exact(g, threads=args.threads)
        c1, c2 = closed
        if c1.is_exact and c1.value == res.d1 and c2.value == res.d2:
            verdict = "EQUAL"
        elif c1.contains(res.d1) and c2.value == res.d2:
            verdict = "IN-INTERVAL"
        else:
            verdict = "MISMATCH"
        yield family, params, g, c1, c2, res, verdict


def _join_pairs(args):
    samples = args.samples if args.samples is not None else 200
    rng = random.Random(args.seed)
    for i in range(samples):
        n1 = rng.randint(1, 8)
        n2 = rng.randint(1, 8)
        yield i, _random_graph(rng, n1), _random_graph(rng, n2)


def cmd_verify(args) -> int:
    mismatches = 0
    rows = 0
    if args.family in ("tree", "join"):
        print(f"# seed: {args.seed}")
    if args.family == "join":
        for i, g1, g2 in _join_pairs(args):
            r1 = solve_exact(g1, threads=args.threads)
            r2 = solve_exact(g2, threads=args.threads)
            bounds = cf.join_upper_bounds(
                r1.d1,
                r2.d1,
                r1.d2,
                r2.d2,
                n1=g1.n,
                n2=g2.n,
                strict=args.strict_join,
            )
            res = solve_exact(join(g1, g2), threads=args.threads)
            held = res.d1 <= bounds.d1_upper and res.d2 <= bounds.d2_upper
            verdict = "BOUND-HELD" if held else "MISMATCH"
            mismatches += 0 if held else 1
            rows += 1
            print(
                f"join  pair={i} n=({g1.n},{g2.n}) "
                f"bound d1<={bounds.d1_upper} d2<={bounds.d2_upper} "
                f"exact d1={res.d1} d2={res.d2}  {verdict}"
            )
    else:
        for family, params, g, c1, c2, res, verdict in _verify_family_rows(args):
            if verdict == "MISMATCH":
                mismatches += 1
            rows += 1
            print(
                f"{family:<12} {params:<22} closed d1={str(c1):<7} d2={c2.value:<3} "
                f"exact d1={res.d1:<3} d2={res.d2:<3} {verdict}"
            )
    print(f"# rows: {rows}, mismatches: {mismatches}")
    return EXIT_OK if mismatches == 0 else EXIT_MISMATCH


def cmd_sweep(args) -> int:
    records = []
    for family, params, g, c1, c2, res, verdict in _verify_family_rows(args):
        records.append(
            ReportRecord(
                family=family,
                params=params,
                n=g.n,
                m=g.m,
                d1=res.d1,
                d2=res.d2,
                d1_lower=c1.lo,
                d1_upper=c1.hi,
                witness_d1=res.d1_witness.bitstring,
                witness_d2=res.d2_witness.bitstring,
                cordial=res.cordial,
                source="both",
                elapsed_ms=0,
            )
        )
    payload = write_records(records, format=args.format)
    if args.out:
        try:
            with open(args.out, "wb") as fh:
                fh.write(payload)
        except OSError as exc:
            print(f"cannot write {args.out}: {exc}", file=sys.stderr)
            return EXIT_IO
    else:
        sys.stdout.buffer.write(payload)
    return EXIT_OK


def cmd_bench(args) -> int:
    family, params, g = _load_graph(args)
    print(f"bench: {family} {params} (n={g.n}, m={g.m}, threads={args.threads})")

    start = time.perf_counter()
    naive = solve_naive(g)
    naive_s = time.perf_counter() - start
    print(
        f"naive     : {naive_s * 1000:9.1f} ms  "
        f"{naive.labellings_visited / max(naive_s, 1e-9):12.0f} labellings/s"
    )

    rates = {}
    for kernel in available_kernels():
        start = time.perf_counter()
        res = solve_exact(g, threads=args.threads, kernel=kernel)
        gray_s = time.perf_counter() - start
        if (res.d1, res.d2, res.d1_witness, res.d2_witness) != (
            naive.d1,
            naive.d2,
            naive.d1_witness,
            naive.d2_witness,
        ):
            print(f"kernel {kernel}: RESULT MISMATCH vs naive oracle", file=sys.stderr)
            return EXIT_MISMATCH
        rates[kernel] = res.labellings_visited / max(gray_s, 1e-9)
        print(
            f"gray[{kernel:<6}]: {gray_s * 1000:9.1f} ms  "
            f"{rates[kernel]:12.0f} labellings/s"
        )
    print(f"results agree: d1={naive.d1} d2={naive.d2}")
    return EXIT_OK


def _add_family_flags(p: argparse.ArgumentParser, families) -> None:
    p.add_argument("--family", choices=families)
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--parts")
    p.add_argument("--min", type=int)
    p.add_argument("--max", type=int)
    p.add_argument("--total-max", dest="total_max", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--threads", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cordiality",
        description="Exact cordiality deficiency measures for simple graphs "
        f"(exhaustive solver cap: {SOLVER_CAP} vertices).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="solve one graph exactly")
    p.add_argument("--input", help="graph file, or '-' for stdin")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    _add_family_flags(p, ("path", "cycle", "complete", "star", "wheel", "fan", "multipartite"))
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check closed forms against the exact solver")
    _add_family_flags(
        p,
        ("tree", "path", "cycle", "complete", "star", "wheel", "fan", "multipartite", "join"),
    )
    p.add_argument("--strict-join", dest="strict_join", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="emit CSV/JSON rows of closed-form and exact values")
    _add_family_flags(
        p, ("tree", "path", "cycle", "complete", "star", "wheel", "fan", "multipartite")
    )
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("bench", help="time the sweep kernels against the naive oracle")
    p.add_argument("--input", help="graph file, or '-' for stdin")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    _add_family_flags(p, ("path", "cycle", "complete", "star", "wheel", "fan", "multipartite"))
    p.set_defaults(func=cmd_bench)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except ParameterError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
