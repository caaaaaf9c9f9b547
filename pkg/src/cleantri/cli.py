"""Command-line front end.

Subcommands: imph, tcount, reduce, equiv, scott, orbits, meanvalue.
Output is human-readable by default; ``--json`` emits one structured record
per invocation and ``--bfile`` (sequence commands) emits OEIS b-file lines
"n a(n)".  Exit codes: 0 success or not-applicable, 2 usage error,
3 invariant violation (oracle mismatch, Scott violation, representation
disagreement).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import arith, counting, lattice, meanvalue

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_VIOLATION = 3


def _parse_range(spec: str, parser: argparse.ArgumentParser) -> tuple[int, int]:
    """Inclusive 'a..b' range; a bare integer is a singleton range."""
    try:
        if ".." in spec:
            lo_s, hi_s = spec.split("..", 1)
            lo, hi = int(lo_s), int(hi_s)
        else:
            lo = hi = int(spec)
    except ValueError:
        parser.error(f"invalid range {spec!r} (expected N or A..B)")
    if lo < 1 or hi < lo:
        parser.error(f"invalid range {spec!r} (need 1 <= a <= b)")
    return lo, hi


def _emit(record: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(record, sort_keys=True))
    else:
        for line in lines:
            print(line)


def _triangle(coords: list[int]) -> lattice.LatticeTriangle:
    return lattice.LatticeTriangle.from_coords(*coords)


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------


def cmd_imph(args, parser) -> int:
    lo, hi = _parse_range(args.spec, parser)
    if hi - lo + 1 > 1 or args.bfile:
        table = arith.imph_sieve(hi)
        values = [(n, int(table[n])) for n in range(lo, hi + 1)]
    else:
        values = [(lo, arith.imph(lo))]
    provenance = "closed-form"
    if args.bruteforce:
        provenance = "closed-form+oracle"
        for n, v in values:
            bf = arith.imph_bruteforce(n)
            if bf != v:
                print(f"MISMATCH at n={n}: closed={v} bruteforce={bf}", file=sys.stderr)
                return EXIT_VIOLATION
    record = {
        "command": "imph",
        "inputs": {"range": [lo, hi], "bruteforce": bool(args.bruteforce)},
        "results": {str(n): v for n, v in values},
        "provenance": provenance,
    }
    if args.bfile:
        _emit(record, args.json, [f"{n} {v}" for n, v in values])
    elif len(values) == 1 and not args.json:
        n, v = values[0]
        extra = " (matches brute force)" if args.bruteforce else ""
        print(f"imph({n}) = {v}{extra}")
    else:
        _emit(record, args.json, [f"imph({n}) = {v}" for n, v in values])
    return EXIT_OK


def cmd_tcount(args, parser) -> int:
    lo, hi = _parse_range(args.spec, parser)
    method = args.method
    if method == "geometric" and hi > counting.GEOMETRIC_N_BOUND:
        parser.error(f"geometric method capped at n = {counting.GEOMETRIC_N_BOUND}")
    rows = []
    for n in range(lo, hi + 1):
        entry: dict[str, int] = {}
        if method in ("closed", "all"):
            entry["closed"] = counting.t_closed(n)
        if method in ("burnside", "all"):
            entry["burnside"] = counting.t_burnside(n)
        if method == "geometric" or (method == "all" and n <= counting.GEOMETRIC_N_BOUND):
            entry["geometric"] = counting.t_geometric(n)
        rows.append((n, entry))
        if len(set(entry.values())) > 1:
            print(f"DISAGREEMENT at n={n}: {entry}", file=sys.stderr)
            return EXIT_VIOLATION
    record = {
        "command": "tcount",
        "inputs": {"range": [lo, hi], "method": method},
        "results": {str(n): entry for n, entry in rows},
        "provenance": method,
    }
    if args.bfile:
        _emit(record, args.json, [f"{n} {next(iter(e.values()))}" for n, e in rows])
    elif len(rows) == 1 and not args.json:
        n, entry = rows[0]
        body = " ".join(f"{k}={v}" for k, v in entry.items())
        print(f"T({n}): {body}")
    else:
        _emit(
            record,
            args.json,
            [f"T({n}): " + " ".join(f"{k}={v}" for k, v in e.items()) for n, e in rows],
        )
    return EXIT_OK


def cmd_reduce(args, parser) -> int:
    try:
        bf, L = lattice.reduce_to_base_form(_triangle(args.coords))
    except lattice.DegenerateTriangleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    pc = lattice.pick_counts(bf.triangle())
    record = {
        "command": "reduce",
        "inputs": {"vertices": args.coords},
        "results": {
            "base_form": {"b": bf.b, "m": bf.m, "h": bf.h},
            "witness": {
                "matrix": [[L.a, L.b], [L.c, L.d]],
                "translation": [L.t.x, L.t.y],
            },
            "pick": {"interior": pc.interior, "boundary": pc.boundary,
                     "twice_area": pc.twice_area},
        },
        "provenance": "reduction",
    }
    _emit(
        record,
        args.json,
        [
            f"base form: b={bf.b} m={bf.m} h={bf.h}",
            f"witness: M=[[{L.a},{L.b}],[{L.c},{L.d}]] t=({L.t.x},{L.t.y})",
            f"pick: I={pc.interior} B={pc.boundary} twice_area={pc.twice_area}",
        ],
    )
    return EXIT_OK


def cmd_equiv(args, parser) -> int:
    t1 = _triangle(args.coords[:6])
    t2 = _triangle(args.coords[6:])
    try:
        eq, witness = lattice.equivalent_clean(t1, t2, with_witness=True)
    except (ValueError, lattice.DegenerateTriangleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    results: dict = {"equivalent": eq}
    lines = [f"equivalent: {'yes' if eq else 'no'}"]
    if witness is not None:
        results["witness"] = {
            "matrix": [[witness.a, witness.b], [witness.c, witness.d]],
            "translation": [witness.t.x, witness.t.y],
        }
        lines.append(
            f"witness: M=[[{witness.a},{witness.b}],[{witness.c},{witness.d}]]"
            f" t=({witness.t.x},{witness.t.y})"
        )
    record = {
        "command": "equiv",
        "inputs": {"vertices": args.coords},
        "results": results,
        "provenance": "orbit+witness",
    }
    _emit(record, args.json, lines)
    return EXIT_OK


def cmd_scott(args, parser) -> int:
    if args.scan is not None:
        report = lattice.scott_exhaustive(args.scan)
        ok_forms = all(bf == (3, 0, 3) for bf in report.equality_base_forms)
        record = {
            "command": "scott",
            "inputs": {"scan": args.scan},
            "results": {
                "checked": report.checked,
                "violations": len(report.violations),
                "equality_cases": len(report.equality_cases),
                "equality_base_forms_all_303": ok_forms,
            },
            "provenance": "exhaustive-scan",
        }
        lines = [
            f"checked {report.checked} triangles with I >= 1 in [0,{args.scan}]^2",
            f"violations: {len(report.violations)}",
            f"equality cases: {len(report.equality_cases)}"
            + (" (all reduce to base form (3,0,3))" if ok_forms and report.equality_cases else ""),
        ]
        for t in report.equality_cases:
            lines.append(f"  equality: {tuple((v.x, v.y) for v in t.vertices)}")
        _emit(record, args.json, lines)
        if report.violations or not ok_forms:
            return EXIT_VIOLATION
        return EXIT_OK
    if args.coords is None or len(args.coords) != 6:
        parser.error("scott needs six vertex coordinates or --scan BOUND")
    try:
        res = lattice.scott_check(_triangle(args.coords))
    except lattice.DegenerateTriangleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    record = {
        "command": "scott",
        "inputs": {"vertices": args.coords},
        "results": {
            "applicable": res.applicable,
            "holds": res.holds,
            "equality": res.equality,
            "interior": res.interior,
            "boundary": res.boundary,
        },
        "provenance": "pick-counts",
    }
    if not res.applicable:
        _emit(record, args.json, [f"not applicable (I={res.interior})"])
        return EXIT_OK
    status = "equality" if res.equality else "strict"
    lines = [f"holds: {'yes' if res.holds else 'NO'} ({status}) I={res.interior} B={res.boundary}"]
    _emit(record, args.json, lines)
    return EXIT_VIOLATION if not res.holds else EXIT_OK


def cmd_orbits(args, parser) -> int:
    if args.n < 1:
        parser.error("n must be positive")
    dec = counting.orbit_decomposition(args.n)
    record = {
        "command": "orbits",
        "inputs": {"n": args.n},
        "results": {"count": dec.count, "orbits": [list(o) for o in dec.orbits]},
        "provenance": "six-map closure",
    }
    lines = [f"IP({args.n}) splits into {dec.count} orbit(s)"]
    lines += ["  {" + ", ".join(map(str, o)) + "}" for o in dec.orbits]
    _emit(record, args.json, lines)
    return EXIT_OK


def cmd_meanvalue(args, parser) -> int:
    if args.x < 1:
        parser.error("--x must be positive")
    report = meanvalue.mean_value_report(args.x, args.primes)
    ft = meanvalue.feller_tornier(args.primes)
    ft_zeta = meanvalue.feller_tornier_zeta(args.primes)
    mo = meanvalue.moebius_sum_odd(min(args.primes, 10**6))
    prod = report.product
    agree = ft.agrees_with(ft_zeta) and prod.agrees_with(mo)
    record = {
        "command": "meanvalue",
        "inputs": {"x": args.x, "primes": args.primes},
        "results": {
            "sum_imph": report.sum_imph,
            "sum_T": report.sum_t,
            "ratio_imph": report.ratio_imph,
            "ratio_T": report.ratio_t,
            "limit_imph": report.limit_imph,
            "limit_T": report.limit_t,
            "euler_product_odd": prod.value,
            "moebius_sum_odd": mo.value,
            "feller_tornier": ft.value,
            "feller_tornier_zeta": ft_zeta.value,
            "representations_agree": agree,
        },
        "provenance": "sieve+truncated-products",
    }
    small = " (small x, far from the limit)" if args.x < 10**4 else ""
    lines = [
        f"sum imph(n), n<=x: {report.sum_imph}  ratio/x^2 = {report.ratio_imph:.7f}"
        f"  limit {report.limit_imph:.7f}{small}",
        f"sum T(n), n<=x:    {report.sum_t}  ratio/x^2 = {report.ratio_t:.7f}"
        f"  limit {report.limit_t:.7f}{small}",
        f"euler product (odd p <= {prod.prime_bound}): {prod.value:.7f}"
        f" +- {prod.tail_bound:.1e}",
        f"moebius sum (odd d <= {mo.prime_bound}): {mo.value:.7f} +- {mo.tail_bound:.1e}",
        f"Feller-Tornier: {ft.value:.7f} (zeta form {ft_zeta.value:.7f})",
    ]
    _emit(record, args.json, lines)
    return EXIT_OK if agree else EXIT_VIOLATION


# --------------------------------------------------------------------------
# parser
# --------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cleantri",
        description="Clean lattice triangles: imph(n), Burnside counts, "
        "base-form reduction, Scott's inequality, mean values.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("imph", help="evaluate imph(n) on a value or range")
    p.add_argument("spec", help="N or A..B (inclusive)")
    p.add_argument("--bruteforce", action="store_true", help="cross-check with the residue scan")
    p.add_argument("--bfile", action="store_true", help="emit OEIS b-file lines")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_imph)

    p = sub.add_parser("tcount", help="count clean-triangle classes T(n)")
    p.add_argument("spec", help="N or A..B (inclusive)")
    p.add_argument(
        "--method",
        choices=["closed", "burnside", "geometric", "all"],
        default="closed",
    )
    p.add_argument("--bfile", action="store_true", help="emit OEIS b-file lines")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_tcount)

    p = sub.add_parser("reduce", help="reduce a triangle to base form")
    p.add_argument("coords", type=int, nargs=6, metavar="C", help="x0 y0 x1 y1 x2 y2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("equiv", help="test two clean triangles for equivalence")
    p.add_argument("coords", type=int, nargs=12, metavar="C", help="two triangles, 12 ints")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("scott", help="check Scott's inequality B <= 2I + 7")
    p.add_argument("coords", type=int, nargs="*", metavar="C", help="x0 y0 x1 y1 x2 y2")
    p.add_argument("--scan", type=int, help="exhaustive scan of [0,BOUND]^2")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scott)

    p = sub.add_parser("orbits", help="orbit decomposition of IP(n)")
    p.add_argument("n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_orbits)

    p = sub.add_parser("meanvalue", help="summatory ratios and limit constants")
    p.add_argument("--x", type=int, required=True, help="summation bound")
    p.add_argument("--primes", type=int, default=10**7, help="prime bound for products")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_meanvalue)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, parser)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
