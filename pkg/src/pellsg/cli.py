"""Command-line interface.

Three subcommands:

    compute   invariants for one generator set / family instance, levels p
    verify    cross-check closed forms against the engine (and the oracle)
    table     canned comparison tables for the documented worked examples

Records go to stdout (or --output) as JSON Lines or CSV with the fixed header
family,u,i,k,p,quantity,source,value,agrees.  Values are decimal strings so
arbitrarily large integers survive any JSON parser.  Exit codes: 0 success,
1 usage or validity error, 2 a cross-check disagreement was detected (compute
with --source both, or verify finding a mismatch inside a guaranteed range).

The enumeration budget is DEFAULT_BUDGET unless the PELLSG_BUDGET environment
variable or --budget overrides it.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from . import closedform, oracle, semigroup
from .errors import CapExceeded, PellsgError
from .pellseq import Family, FamilyInstance, GeneratorSet, build_family

QUANTITY_KEYS = ("g", "n", "s")
QUANTITY_ATTR = {"g": "frobenius", "n": "genus", "s": "sylvester_sum"}
SOURCE_ORDER = ("closed_form", "closed_form_forced", "engine", "oracle")
CSV_HEADER = ["family", "u", "i", "k", "p", "quantity", "source", "value", "agrees"]


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on bad usage; the contract here wants 1."""

    def error(self, message):  # noqa: D102 - argparse override
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


# ── record plumbing ──────────────────────────────────────────────────────────


def _record(inst, gens, p, quantity, source, value):
    return {
        "family": inst.family.value if inst else None,
        "u": inst.u if inst else None,
        "i": inst.i if inst else None,
        "k": inst.k if inst else None,
        "gens": list(gens),
        "p": p,
        "quantity": quantity,
        "source": source,
        "value": value,
        "agrees": None,
    }


def _mark_agreement(records):
    """Fill the agrees flag for (p, quantity) groups with several sources."""
    groups: dict[tuple, list] = {}
    for rec in records:
        key = (tuple(rec["gens"]), rec["p"], rec["quantity"])
        groups.setdefault(key, []).append(rec)
    any_mismatch = False
    for recs in groups.values():
        if len(recs) < 2:
            continue
        ok = len({r["value"] for r in recs}) == 1
        any_mismatch |= not ok
        for r in recs:
            r["agrees"] = ok
    return any_mismatch


def _emit(records, fmt, path):
    records.sort(
        key=lambda r: (
            tuple(r["gens"]),
            r["p"],
            QUANTITY_KEYS.index(r["quantity"]),
            SOURCE_ORDER.index(r["source"]),
        )
    )
    out = open(path, "w", newline="") if path else sys.stdout
    try:
        if fmt == "csv":
            writer = csv.writer(out)
            writer.writerow(CSV_HEADER)
            for r in records:
                writer.writerow(
                    [
                        r["family"] or "",
                        "" if r["u"] is None else r["u"],
                        "" if r["i"] is None else r["i"],
                        "" if r["k"] is None else r["k"],
                        r["p"],
                        r["quantity"],
                        r["source"],
                        str(r["value"]),
                        "" if r["agrees"] is None else str(r["agrees"]).lower(),
                    ]
                )
        else:
            for r in records:
                r = dict(r, value=str(r["value"]))
                out.write(json.dumps(r) + "\n")
    finally:
        if path:
            out.close()


# ── shared argument handling ─────────────────────────────────────────────────


def _add_instance_args(sub, with_p=True):
    sub.add_argument("--gens", help="comma-separated generators, e.g. 12,70,985")
    sub.add_argument("--family", choices=[f.value for f in Family], help="family name")
    sub.add_argument("--u", type=int, help="Pell parameter u >= 2")
    sub.add_argument("--i", type=int, help="family index i")
    sub.add_argument("--k", type=int, help="family index k")
    if with_p:
        group = sub.add_mutually_exclusive_group()
        group.add_argument("--p", type=int, default=None, help="single level (default 0)")
        group.add_argument("--p-range", help="inclusive level range, e.g. 0..3")
    sub.add_argument("--budget", type=int, default=None, help="tail-tuple enumeration budget")


def _resolve_instance(parser, args):
    """Return (instance or None, GeneratorSet) from --gens or --family args."""
    if args.gens:
        if args.family or args.u is not None or args.i is not None or args.k is not None:
            parser.error("--gens and --family/--u/--i/--k are mutually exclusive")
        try:
            gens = tuple(int(tok) for tok in args.gens.split(","))
        except ValueError:
            parser.error(f"could not parse --gens {args.gens!r}")
        return None, GeneratorSet(gens)
    if not args.family:
        parser.error("need either --gens or --family with --u/--i/--k")
    if args.u is None or args.i is None or args.k is None:
        parser.error("--family needs all of --u, --i, --k")
    inst = build_family(args.family, args.u, args.i, args.k)
    return inst, inst.triple


def _resolve_levels(parser, args):
    if getattr(args, "p_range", None):
        try:
            lo, hi = args.p_range.split("..")
            lo, hi = int(lo), int(hi)
        except ValueError:
            parser.error(f"could not parse --p-range {args.p_range!r} (expected LO..HI)")
        if lo < 0 or hi < lo:
            parser.error(f"bad level range {lo}..{hi}")
        return list(range(lo, hi + 1))
    p = args.p if args.p is not None else 0
    if p < 0:
        parser.error(f"level p must be >= 0, got {p}")
    return [p]


def _resolve_budget(args):
    if args.budget is not None:
        return args.budget
    env = os.environ.get("PELLSG_BUDGET")
    return int(env) if env else semigroup.DEFAULT_BUDGET


# ── compute ──────────────────────────────────────────────────────────────────


def cmd_compute(parser, args):
    inst, A = _resolve_instance(parser, args)
    levels = _resolve_levels(parser, args)
    budget = _resolve_budget(args)
    sources = ("engine",) if args.source == "engine" else (
        ("closed_form",) if args.source == "formula" else ("closed_form", "engine")
    )
    if "closed_form" in sources and inst is None:
        parser.error("--source formula/both needs a --family instance, not raw --gens")

    formula_by_p = {}
    if "closed_form" in sources:
        for p in levels:
            formula_by_p[p] = closedform.formula_stats(inst, p, force=args.force_formula)

    what = args.what.split(",") if args.what else None
    if what:
        for q in what:
            if q not in QUANTITY_KEYS:
                parser.error(f"unknown quantity {q!r} (choose from g,n,s)")
    else:
        what = list(QUANTITY_KEYS)
        if formula_by_p:
            what = [q for q in what if QUANTITY_ATTR[q] in formula_by_p[levels[0]]]

    records = []
    gens = A.generators
    src_name = "closed_form_forced" if args.force_formula else "closed_form"
    for p in levels:
        for q in what:
            attr = QUANTITY_ATTR[q]
            if p in formula_by_p:
                if attr not in formula_by_p[p]:
                    parser.error(
                        f"no closed form for quantity {q!r} in family {inst.family.value!r}"
                    )
                records.append(_record(inst, gens, p, q, src_name, formula_by_p[p][attr]))
    if "engine" in sources:
        stats = semigroup.compute_stats_range(A, max(levels), budget=budget)
        for p in levels:
            for q in what:
                records.append(_record(inst, gens, p, q, "engine", getattr(stats[p], QUANTITY_ATTR[q])))

    mismatch = _mark_agreement(records)
    _emit(records, args.format, args.output)
    return 2 if mismatch else 0


# ── verify ───────────────────────────────────────────────────────────────────

DEFAULT_GRID = [
    ("even", 2, 2, 2, 5),
    ("even", 3, 2, 2, 9),
    ("odd-odd", 2, 3, 3, 17),
    ("odd-even", 2, 3, 4, 29),
    ("odd-odd", 2, 2, 5, 0),  # degenerate
]
DEFAULT_GRID_GENS = [((12, 70, 985), 3), ((5, 13, 55), 4)]
EXTENDED_GRID = DEFAULT_GRID + [
    ("even", 2, 2, 3, 8),
    ("even", 2, 3, 3, 5),
    ("even", 3, 2, 3, 6),
    ("odd-odd", 2, 4, 3, 100),
    ("odd-odd", 2, 5, 3, 6),
    ("odd-odd", 3, 3, 3, 6),
    ("odd-even", 2, 4, 4, 8),
    ("odd-even", 2, 5, 6, 8),
    ("odd-even", 3, 3, 4, 6),
]


def _verify_family_instance(inst: FamilyInstance, p_max: int, budget: int, out) -> bool:
    desc = f"{inst.family.value} u={inst.u} i={inst.i} k={inst.k} {inst.triple}"
    stats = semigroup.compute_stats_range(inst.triple, p_max, budget=budget)

    if inst.degenerate:
        expect = closedform.two_generator_reduction(inst.u, inst.i, inst.k)
        ok = stats[0].frobenius == expect
        out.write(
            f"{desc}: degenerate, two-generator g_0 {'OK' if ok else 'MISMATCH'} "
            f"(closed form {expect}, engine {stats[0].frobenius}); "
            f"no closed form beyond p=0\n"
        )
        return ok

    guaranteed = min(inst.max_p, p_max)
    ok = True
    for p in range(guaranteed + 1):
        want = closedform.formula_stats(inst, p)
        for attr, val in want.items():
            ok &= getattr(stats[p], attr) == val
    first_bad = None
    for p in range(p_max + 1):
        want = closedform.formula_stats(inst, p, force=True)
        if any(getattr(stats[p], attr) != val for attr, val in want.items()):
            first_bad = p
            break
    out.write(
        f"{desc}: guaranteed levels 0..{guaranteed} {'OK' if ok else 'MISMATCH'}; "
        f"guarantee ends at p={inst.max_p}; "
        + (
            f"first formula/engine disagreement at p={first_bad}\n"
            if first_bad is not None
            else f"no formula/engine disagreement up to p={p_max}\n"
        )
    )
    return ok


def _verify_gens(A: GeneratorSet, p_max: int, budget: int, cap: int, out) -> bool:
    stats = semigroup.compute_stats_range(A, p_max, budget=budget)
    try:
        ref = oracle.brute_stats_range(A, p_max, cap=cap)
    except CapExceeded as exc:
        out.write(f"gens {A}: oracle skipped ({exc})\n")
        return True
    ok = all(
        (s.frobenius, s.genus, s.sylvester_sum) == ref[p] for p, s in enumerate(stats)
    )
    out.write(f"gens {A}: engine vs oracle, levels 0..{p_max} {'OK' if ok else 'MISMATCH'}\n")
    return ok


def cmd_verify(parser, args):
    budget = _resolve_budget(args)
    out = sys.stdout
    all_ok = True
    if args.grid:
        grid = DEFAULT_GRID if args.grid == "default" else EXTENDED_GRID
        for family, u, i, k, p_max in grid:
            all_ok &= _verify_family_instance(build_family(family, u, i, k), p_max, budget, out)
        for gens, p_max in DEFAULT_GRID_GENS:
            all_ok &= _verify_gens(GeneratorSet(gens), p_max, budget, args.oracle_cap, out)
    else:
        inst, A = _resolve_instance(parser, args)
        p_max = args.p_max
        if p_max is None:
            p_max = inst.max_p if inst else 0
        if inst is not None:
            all_ok &= _verify_family_instance(inst, p_max, budget, out)
            if args.with_oracle:
                all_ok &= _verify_gens(A, p_max, budget, args.oracle_cap, out)
        else:
            all_ok &= _verify_gens(A, p_max, budget, args.oracle_cap, out)
    out.write("verify: OK\n" if all_ok else "verify: MISMATCH\n")
    return 0 if all_ok else 2


# ── table ────────────────────────────────────────────────────────────────────


def _table_records(preset, budget):
    records = []

    def both(inst, p, quantities, forced_corner=None):
        stats = semigroup.compute_stats(inst.triple, p, budget=budget)
        if forced_corner is None:
            formulas = closedform.formula_stats(inst, p, force=not inst.valid_p(p))
            src = "closed_form" if inst.valid_p(p) else "closed_form_forced"
        else:
            formulas, src = forced_corner, "closed_form_forced"
        for q in quantities:
            attr = QUANTITY_ATTR[q]
            records.append(_record(inst, inst.triple.generators, p, q, src, formulas[attr]))
            records.append(_record(inst, inst.triple.generators, p, q, "engine", getattr(stats, attr)))

    if preset == "paper-3.5":
        inst = build_family("even", 2, 2, 2)
        for p in range(4):
            both(inst, p, ("g", "n", "s"))
    elif preset == "paper-4.2":
        for family, u, i, k in [
            ("odd-odd", 2, 4, 3),
            ("odd-odd", 2, 5, 3),
            ("odd-even", 2, 3, 4),
            ("odd-even", 2, 5, 6),
        ]:
            both(build_family(family, u, i, k), 0, ("g",))
    elif preset == "paper-5.5":
        inst = build_family("odd-odd", 2, 4, 3)
        for p in (98, 100):
            both(inst, p, ("g",))
        inst = build_family("odd-even", 2, 3, 4)
        both(inst, 28, ("g",))
        # the documented breakdown value at p=29 is the second corner candidate
        corner = closedform.theorem4_corner_values(2, 3, 4, 29)[1]
        both(inst, 29, ("g",), forced_corner={"frobenius": corner})
    elif preset == "paper-6.1":
        inst = build_family("odd-odd", 2, 3, 3)
        for p in (16, 17):
            both(inst, p, ("n",))
        inst = build_family("odd-even", 2, 3, 4)
        for p in (28, 29):
            both(inst, p, ("n",))
    else:
        raise PellsgError(f"unknown preset {preset!r}")
    return records


def cmd_table(parser, args):
    records = _table_records(args.preset, _resolve_budget(args))
    _mark_agreement(records)
    _emit(records, args.format, args.output)
    return 0


# ── entry point ──────────────────────────────────────────────────────────────


def build_parser() -> _Parser:
    parser = _Parser(prog="pellsg", description=__doc__.splitlines()[0])
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    pc = subs.add_parser("compute", help="compute invariants for one instance")
    _add_instance_args(pc)
    pc.add_argument("--what", help="comma list of quantities: g,n,s")
    pc.add_argument("--source", choices=["engine", "formula", "both"], default="engine")
    pc.add_argument("--force-formula", action="store_true",
                    help="evaluate closed forms outside their guaranteed range")
    pc.add_argument("--format", choices=["jsonl", "json", "csv"], default="jsonl")
    pc.add_argument("--output", "-o", help="write records to this file instead of stdout")
    pc.set_defaults(func=cmd_compute)

    pv = subs.add_parser("verify", help="cross-check closed forms / engine / oracle")
    _add_instance_args(pv, with_p=False)
    pv.add_argument("--p-max", type=int, default=None, help="check levels 0..p-max")
    pv.add_argument("--with-oracle", action="store_true",
                    help="also compare the engine against the brute-force oracle")
    pv.add_argument("--oracle-cap", type=int, default=oracle.DEFAULT_CAP,
                    help="largest value the oracle may scan")
    pv.add_argument("--grid", choices=["default", "extended"],
                    help="run a built-in instance grid instead of one instance")
    pv.set_defaults(func=cmd_verify)

    pt = subs.add_parser("table", help="emit a canned worked-example table")
    pt.add_argument("--preset", required=True,
                    choices=["paper-3.5", "paper-4.2", "paper-5.5", "paper-6.1"])
    pt.add_argument("--format", choices=["jsonl", "json", "csv"], default="jsonl")
    pt.add_argument("--output", "-o", help="write records to this file instead of stdout")
    pt.add_argument("--budget", type=int, default=None)
    pt.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(parser, args)
    except PellsgError as exc:
        print(f"pellsg: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
