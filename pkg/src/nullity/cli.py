"""Command-line front end: census records, closed-form evaluation,
formula-vs-census comparison, the published-table reproduction, and the
catalog sweep with threshold classification.

Every probability is printed as an exact rational; decimals are display
sugar only.  Exit status is 0 on success, 1 on bad input, cap overruns, or
an unexpected mismatch, 2 on argument-parse errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import formulas, oracle
from .coeffring import CoeffRing, ring_from_spec
from .errata import (ERRATA_BY_KEY, TABLE1_AS_TYPESET, TABLE1_ERRATA,
                     TABLE1_ROWS, expected_formula_mismatch)
from .groupring import CapExceeded
from .groups import CayleyGroup, group_from_spec, group_from_table_file


def decimal_str(value: Fraction, places: int = 6) -> str:
    """Exact-rounded decimal display, trailing zeros trimmed."""
    value = Fraction(value)
    sign = "-" if value < 0 else ""
    value = abs(value)
    scale = 10**places
    scaled = (value.numerator * scale * 2 + value.denominator) // (2 * value.denominator)
    ip, fp = divmod(scaled, scale)
    frac = f"{fp:0{places}d}".rstrip("0")
    return f"{sign}{ip}.{frac}" if frac else f"{sign}{ip}"


def show(value: Fraction) -> str:
    return f"{value} (~{decimal_str(value)})"


def _parse_group(spec: str) -> CayleyGroup:
    if spec.startswith("@"):
        return group_from_table_file(spec[1:])
    return group_from_spec(spec)


def _add_instance_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--coeff", required=True,
                   help="coefficient ring: F:q, F:p^m, or Z:n")
    p.add_argument("--group", required=True,
                   help="group: C:n, products like C2xC2, S3, Q8, or @table.json")


def _add_cap_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-elements", type=int, default=oracle.DEFAULT_MAX_ELEMENTS,
                   help="largest |K|^n the census will sweep")
    p.add_argument("--max-pairs", type=int, default=oracle.DEFAULT_MAX_PAIRS,
                   help="largest pair count the naive counter will sweep")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1,
                   help="census worker threads (results identical for any count)")


def cmd_oracle(args) -> int:
    K = ring_from_spec(args.coeff)
    G = _parse_group(args.group)
    if K.is_field:
        hist, ms = oracle.timed_histogram(K, G, args.side,
                                          max_elements=args.max_elements,
                                          workers=args.workers)
        record = oracle.histogram_record(hist, None if args.no_timing else ms)
    else:
        import time
        t0 = time.perf_counter()
        prob = oracle.nullity_probability(K, G, args.side,
                                          max_pairs=args.max_pairs)
        ms = int((time.perf_counter() - t0) * 1000)
        record = {"group": G.spec, "coeff": K.spec, "side": args.side,
                  "probability": {"num": prob.numerator, "den": prob.denominator}}
        if not args.no_timing:
            record["elapsed_ms"] = ms
    if args.format == "json":
        print(oracle.record_json(record))
    elif "counts" in record:
        print(oracle.record_text(record))
    else:
        num = record["probability"]["num"]
        den = record["probability"]["den"]
        print(f"rec(group := \"{record['group']}\", coeff := \"{record['coeff']}\", "
              f"p := {num}/{den})")
    return 0


def cmd_formula(args) -> int:
    K = ring_from_spec(args.coeff)
    G = _parse_group(args.group)
    results = formulas.closed_forms(K, G, args.side)
    if args.variant != "both":
        results = [r for r in results if r.variant == args.variant]
        if not results:
            print(f"no {args.variant} variant for this instance", file=sys.stderr)
            return 1
    if args.format == "json":
        print(json.dumps([{"value": {"num": r.value.numerator,
                                     "den": r.value.denominator},
                           "variant": r.variant, "provenance": r.provenance}
                          for r in results]))
    else:
        for r in results:
            print(f"P_{args.side} = {show(r.value)}  [{r.variant}: {r.provenance}]")
    return 0


def cmd_compare(args) -> int:
    K = ring_from_spec(args.coeff)
    G = _parse_group(args.group)
    results = formulas.closed_forms(K, G, args.side)
    ocl = oracle.nullity_probability(K, G, args.side,
                                     max_elements=args.max_elements,
                                     max_pairs=args.max_pairs,
                                     workers=args.workers)
    rows = []
    unexpected = 0
    for r in results:
        match = r.value == ocl
        note = ""
        if not match:
            err = (expected_formula_mismatch(G.structure, K.size, r.variant)
                   if K.is_field else None)
            if err is not None:
                note = f"expected: {err.key} ({err.status})"
            else:
                note = "UNEXPECTED"
                unexpected += 1
        rows.append({"variant": r.variant, "provenance": r.provenance,
                     "formula": r.value, "oracle": ocl, "match": match,
                     "note": note})
    if args.format == "json":
        print(json.dumps([{"variant": w["variant"], "provenance": w["provenance"],
                           "formula": {"num": w["formula"].numerator,
                                       "den": w["formula"].denominator},
                           "oracle": {"num": w["oracle"].numerator,
                                      "den": w["oracle"].denominator},
                           "match": w["match"], "note": w["note"]}
                          for w in rows]))
    else:
        print(f"{K.spec} {G.spec} side={args.side}   oracle = {show(ocl)}")
        for w in rows:
            verdict = "match" if w["match"] else "MISMATCH"
            tail = f"  [{w['note']}]" if w["note"] else ""
            print(f"  {w['variant']:8s} {show(w['formula']):40s} {verdict}{tail}")
    return 1 if unexpected else 0


def cmd_table1(args) -> int:
    rows = []
    unexpected = 0
    for coeff_spec, group_spec, printed, printed_dec in TABLE1_ROWS:
        K = ring_from_spec(coeff_spec)
        G = group_from_spec(group_spec)
        pair = oracle.nullity_probability(K, G, "left",
                                          max_pairs=1 << 21,
                                          workers=args.workers)
        two = (pair if G.is_abelian else
               oracle.nullity_probability(K, G, "twosided",
                                          max_pairs=1 << 21,
                                          workers=args.workers))
        key = TABLE1_ERRATA.get((coeff_spec, group_spec))
        if printed in (pair, two) and key is None:
            status = "match"
        elif key is not None:
            status = ERRATA_BY_KEY[key].status
        else:
            status = "MISMATCH"
            unexpected += 1
        rows.append({"coeff": coeff_spec, "group": group_spec,
                     "printed": printed, "printed_decimal": printed_dec,
                     "pair": pair, "twosided": two, "status": status,
                     "erratum": key})
    if args.format == "json":
        print(json.dumps([{**r,
                           "printed": {"num": r["printed"].numerator,
                                       "den": r["printed"].denominator},
                           "pair": {"num": r["pair"].numerator,
                                    "den": r["pair"].denominator},
                           "twosided": {"num": r["twosided"].numerator,
                                        "den": r["twosided"].denominator}}
                          for r in rows]))
    else:
        print(f"{'#':>2} {'ring':18s} {'printed':16s} {'computed':34s} status")
        for i, r in enumerate(rows, 1):
            inst = f"{r['coeff']} {r['group']}"
            if r["pair"] == r["twosided"]:
                comp = show(r["pair"])
            else:
                comp = f"pair {show(r['pair'])}, twosided {show(r['twosided'])}"
            typeset = TABLE1_AS_TYPESET.get((r["coeff"], r["group"]),
                                            str(r["printed"]))
            printed = f"{typeset} ({r['printed_decimal']})"
            print(f"{i:>2} {inst:18s} {printed:16s} {comp:34s} {r['status']}")
        for key in sorted({r["erratum"] for r in rows if r["erratum"]}):
            e = ERRATA_BY_KEY[key]
            print(f"   [{key}] {e.note}")
    return 1 if unexpected else 0


def cmd_catalog(args) -> int:
    threshold = Fraction(args.threshold)
    instances = formulas.default_sweep_instances(args.bound)
    report = formulas.classify_threshold(instances, threshold,
                                         max_elements=args.max_elements,
                                         max_pairs=args.max_pairs,
                                         workers=args.workers)
    values = sorted({e.p_pair for e in report.entries if e.p_pair is not None},
                    reverse=True)
    swap_inside = formulas.gap_check(values, Fraction(1, 4), Fraction(21, 64))
    supported_inside = formulas.gap_check(values, Fraction(21, 64), Fraction(1, 2))
    if args.format == "json":
        out = {
            "threshold": {"num": threshold.numerator, "den": threshold.denominator},
            "entries": [{
                "coeff": e.coeff, "group": e.group,
                "pair": None if e.p_pair is None else
                    {"num": e.p_pair.numerator, "den": e.p_pair.denominator},
                "twosided": None if e.p_twosided is None else
                    {"num": e.p_twosided.numerator, "den": e.p_twosided.denominator},
                "skipped": e.skipped,
                "selected": e in report.selected,
            } for e in report.entries],
            "gap": {
                "printed_interval_empty": True,
                "swap_counterexamples": [str(v) for v in swap_inside],
                "supported_interval_clear": not supported_inside,
            },
        }
        print(json.dumps(out))
        return 0
    print(f"catalog sweep: {len(report.entries)} instances, "
          f"threshold {threshold} (~{decimal_str(threshold)})")
    for e in report.entries:
        inst = f"{e.coeff} {e.group}"
        if e.skipped is not None:
            print(f"  {inst:14s} SKIPPED: {e.skipped}")
            continue
        mark = "*" if e in report.selected else " "
        if e.p_pair == e.p_twosided:
            print(f" {mark}{inst:14s} P = {show(e.p_pair)}")
        else:
            print(f" {mark}{inst:14s} P = {show(e.p_pair)} pair, "
                  f"{show(e.p_twosided)} twosided")
    sel = [f"{e.coeff} {e.group}" for e in report.selected]
    print(f"selected (pair P >= {threshold}): {', '.join(sel) if sel else 'none'}")
    print("gap check: the printed forbidden interval (21/64, 1/4) is empty as "
          "typeset [corollary-gap]")
    if swap_inside:
        inside = ", ".join(show(v) for v in swap_inside)
        print(f"  endpoint swap (1/4, 21/64) refuted: {inside} inside")
    if not supported_inside:
        print("  supported reading (21/64, 1/2): no catalog value inside")
    else:
        inside = ", ".join(show(v) for v in supported_inside)
        print(f"  supported reading (21/64, 1/2) VIOLATED: {inside} inside")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nullity",
        description="Exact zero-product probabilities for finite group algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("oracle", help="exhaustive annihilator census record")
    _add_instance_flags(p)
    p.add_argument("--side", choices=("left", "right", "twosided"), default="left")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-timing", action="store_true",
                   help="omit elapsed_ms for byte-reproducible output")
    _add_cap_flags(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("formula", help="closed-form value(s) for an instance")
    _add_instance_flags(p)
    p.add_argument("--side", choices=("left", "right", "twosided"), default="left")
    p.add_argument("--variant", choices=("printed", "derived", "both"),
                   default="both")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("compare", help="closed forms vs the census, with verdicts")
    _add_instance_flags(p)
    p.add_argument("--side", choices=("left", "right", "twosided"), default="left")
    p.add_argument("--format", choices=("text", "json"), default="text")
    _add_cap_flags(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("table1", help="reproduce the published >= 0.1 table")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    p.set_defaults(func=cmd_table1)

    p = sub.add_parser("catalog", help="sweep instances, classify by threshold")
    p.add_argument("--threshold", default="1/4",
                   help="classification cutoff, a rational like 1/4")
    p.add_argument("--bound", type=int, default=1024,
                   help="include F:q C:n for every prime power q with q^n <= bound")
    p.add_argument("--format", choices=("text", "json"), default="text")
    _add_cap_flags(p)
    p.set_defaults(func=cmd_catalog)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, CapExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
