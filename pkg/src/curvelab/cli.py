"""Command-line front end.

Every subcommand supports --json, which wraps the result in a stable,
versioned envelope: {"schema": "curvelab/v1", "result": ..., "stats": ...}.
Exit codes: 0 success, 2 bad input, 3 ceiling or admissibility limit,
4 internal inconsistency.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from .catalog import collection_stats, load_catalog, lookup
from .errors import CurvelabError, InputError
from .fitter import assemble_from_table, fit_nodes, threshold_scan
from .germs import parse_germ
from .jets import DEFAULT_CEILING, germ_report
from .oracles import floor_diagram_oracle, pencil_discriminant_oracle
from .series import ChernPolynomial, assemble_series, format_rational, parse_rational
from .severi import DEFAULT_DEGREE_CEILING, MemoStore, SeveriEngine

SCHEMA = "curvelab/v1"


def _emit(args, result, stats=None, text="") -> int:
    if args.json:
        payload = {"schema": SCHEMA, "result": result, "stats": stats or {}}
        sys.stdout.write(
            json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
        )
    else:
        print(text)
    return 0


def _engine_from_args(args):
    store = MemoStore()
    cache = getattr(args, "cache", None)
    if cache and os.path.exists(cache):
        store.load(cache)
    ceiling = getattr(args, "ceiling", None)
    if ceiling is None:
        ceiling = DEFAULT_DEGREE_CEILING
    return SeveriEngine(store, degree_ceiling=ceiling), store


def _save_cache(args, store):
    if getattr(args, "cache", None):
        store.save(args.cache)


def _parse_parts(text: str) -> tuple:
    parts = tuple(p.strip() for p in text.split(",") if p.strip())
    if not parts:
        raise InputError("empty singularity multiset")
    return parts


def _parse_chern(text: str) -> tuple:
    fields = [f.strip() for f in text.split(",")]
    if len(fields) != 4:
        raise InputError("a Chern vector has exactly four entries")
    return tuple(parse_rational(f) for f in fields)


def _load_a_table(path: str) -> dict:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read a-table file {path!r}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"a-table file {path!r} is not valid JSON") from exc
    try:
        entries = obj["entries"]
        return {
            tuple(key): ChernPolynomial.from_json_obj(poly)
            for key, poly in entries
        }
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed a-table file {path!r}") from exc


def _dump_a_table(table: dict) -> str:
    entries = [
        [list(key), poly.to_json_obj()] for key, poly in sorted(table.items())
    ]
    return json.dumps({"entries": entries}, sort_keys=True, separators=(",", ":")) + "\n"


def _as_json_number(value):
    if isinstance(value, Fraction) and value.denominator != 1:
        return format_rational(value)
    return int(value)


# ---------------------------------------------------------------------------
# subcommand bodies


def _cmd_germ_analyze(args) -> int:
    f = parse_germ(args.expr)
    report = germ_report(f, k=args.k, ceiling=args.ceiling)
    k = report.k_used
    lines = [
        f"germ: {report.expression}",
        f"multiplicity: {report.multiplicity}",
        f"milnor: {report.milnor}",
        f"tjurina: {report.tjurina}",
        "determinacy window: "
        f"({report.determinacy_window[0]}, {report.determinacy_window[1]})",
        f"scheme length N at k={k}: {report.scheme_length_at[k]}",
        f"orbit tangent dim at k={k}: {report.orbit_tangent_dim}",
        f"equisingular stratum dim: {report.dim_s0}",
    ]
    return _emit(args, report.to_dict(), None, "\n".join(lines))


def _cmd_germ_catalog(args) -> int:
    if args.parts:
        stats = collection_stats(_parse_parts(args.parts))
        result = {"N": stats.N, "codim": stats.codim, "l": stats.l, "aut": stats.aut}
        text = (
            f"members: {stats.l}\nN total: {stats.N}\n"
            f"codim total: {stats.codim}\nsymmetry order: {stats.aut}"
        )
        return _emit(args, result, None, text)
    if args.label:
        entry_obj = lookup(args.label)
        d = entry_obj.to_dict()
        text = "\n".join(f"{k}: {d[k]}" for k in d)
        return _emit(args, d, None, text)
    entries = list(load_catalog().values())
    header = f"{'label':<8}{'flavor':<13}{'k':>3}{'mu':>5}{'tau':>5}{'N':>5}{'codim':>7}{'dim_es':>8}  normal form"
    rows = [header]
    for e in entries:
        rows.append(
            f"{e.label:<8}{e.flavor:<13}{e.k_used:>3}{e.mu:>5}{e.tau:>5}"
            f"{e.N:>5}{e.codim:>7}{e.dim_es:>8}  {e.normal_form_text}"
        )
    return _emit(args, [e.to_dict() for e in entries], None, "\n".join(rows))


def _cmd_severi_p2(args) -> int:
    engine, store = _engine_from_args(args)
    value = engine.severi_p2(args.d, args.nodes)
    _save_cache(args, store)
    return _emit(args, value, store.stats(), str(value))


def _cmd_severi_quadric(args) -> int:
    engine, store = _engine_from_args(args)
    value = engine.severi_quadric(args.a, args.b, args.nodes)
    _save_cache(args, store)
    return _emit(args, value, store.stats(), str(value))


def _cmd_severi_oracle(args) -> int:
    if args.method == "floor":
        if args.surface != "p2":
            raise InputError("the floor-diagram oracle only covers the plane")
        if args.d is None or args.nodes is None:
            raise InputError("floor oracle needs -d and --nodes")
        value = floor_diagram_oracle(args.d, args.nodes)
    else:
        if args.surface == "p2":
            if args.d is None:
                raise InputError("plane pencil oracle needs -d")
            value = pencil_discriminant_oracle("p2", args.d, seed=args.seed)
        else:
            if args.a is None or args.b is None:
                raise InputError("quadric pencil oracle needs -a and -b")
            value = pencil_discriminant_oracle(
                "p1xp1", (args.a, args.b), seed=args.seed
            )
    return _emit(args, value, None, str(value))


def _cmd_fit_nodes(args) -> int:
    engine, store = _engine_from_args(args)
    result = fit_nodes(args.max_r, engine=engine)
    _save_cache(args, store)
    if args.a_table_out:
        with open(args.a_table_out, "w") as fh:
            fh.write(_dump_a_table(result.to_a_table()))
    lines = [f"a_{r} = {p.to_string()}" for r, p in sorted(result.a.items())]
    lines += [
        f"T_{r} = {p.to_string()}" for r, p in sorted(result.T.items()) if r > 0
    ]
    lines.append(f"consistent: {'true' if result.residual_consistent else 'false'}")
    return _emit(args, result.to_json_obj(), store.stats(), "\n".join(lines))


def _cmd_fit_scan(args) -> int:
    engine, store = _engine_from_args(args)
    result = fit_nodes(args.r, engine=engine)
    threshold = threshold_scan(result, args.r, engine=engine)
    _save_cache(args, store)
    return _emit(args, threshold, store.stats(), f"threshold: d = {threshold}")


def _cmd_series_eval(args) -> int:
    table = _load_a_table(args.a_table)
    parts = _parse_parts(args.parts)
    chern = _parse_chern(args.chern)
    value = Fraction(assemble_from_table(table, chern, parts))
    return _emit(args, _as_json_number(value), None, format_rational(value))


def _cmd_series_assemble(args) -> int:
    table = {
        tuple(sorted(key)): poly for key, poly in _load_a_table(args.a_table).items()
    }
    weights = {}
    for key in table:
        for label in key:
            if label not in weights:
                weights[label] = lookup(label).codim
    default_cap = max((sum(weights[l] for l in key) for key in table), default=0)
    cap = args.cap if args.cap is not None else default_cap
    series = assemble_series(table, weights, cap)
    keys = sorted((k for k in series.coeffs if k), key=lambda k: (len(k), k))
    text = "\n".join(f"{','.join(k)}: {series.coeffs[k].to_string()}" for k in keys)
    return _emit(args, series.to_json_obj(), None, text)


# ---------------------------------------------------------------------------
# parser wiring


def _add_json(p):
    p.add_argument("--json", action="store_true", help="machine-readable output")


def _add_cache(p):
    p.add_argument("--cache", default=None, metavar="PATH",
                   help="load/save the memo table at PATH")
    p.add_argument("--ceiling", type=int, default=None,
                   help=f"degree ceiling (default {DEFAULT_DEGREE_CEILING})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvelab",
        description="Plane-curve singularity invariants, nodal curve counts, "
        "and universal count polynomials.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    germ = sub.add_parser("germ", help="local singularity analysis")
    gsub = germ.add_subparsers(dest="subcommand", required=True)
    ga = gsub.add_parser("analyze", help="invariants of one germ")
    ga.add_argument("expr", help='germ expression, e.g. "y^2-x^3"')
    ga.add_argument("--k", type=int, default=None,
                    help="jet order for the length/orbit block")
    ga.add_argument("--ceiling", type=int, default=DEFAULT_CEILING,
                    help="jet order scan limit")
    _add_json(ga)
    ga.set_defaults(func=_cmd_germ_analyze)

    gc = gsub.add_parser("catalog", help="built-in singularity type table")
    gc.add_argument("label", nargs="?", default=None,
                    help="show one entry (label or alias)")
    gc.add_argument("--parts", default=None,
                    help="comma-separated labels; print collection totals")
    _add_json(gc)
    gc.set_defaults(func=_cmd_germ_catalog)

    severi = sub.add_parser("severi", help="nodal curve counts")
    ssub = severi.add_subparsers(dest="subcommand", required=True)
    sp = ssub.add_parser("p2", help="plane count by degree and node number")
    sp.add_argument("-d", type=int, required=True)
    sp.add_argument("--nodes", type=int, required=True)
    _add_cache(sp)
    _add_json(sp)
    sp.set_defaults(func=_cmd_severi_p2)

    sq = ssub.add_parser("p1xp1", help="quadric count by bidegree and node number")
    sq.add_argument("-a", type=int, required=True)
    sq.add_argument("-b", type=int, required=True)
    sq.add_argument("--nodes", type=int, required=True)
    _add_cache(sq)
    _add_json(sq)
    sq.set_defaults(func=_cmd_severi_quadric)

    so = ssub.add_parser("oracle", help="independent cross-checks of the counts")
    so.add_argument("--method", choices=["floor", "pencil"], required=True)
    so.add_argument("--surface", choices=["p2", "p1xp1"], default="p2")
    so.add_argument("-d", type=int, default=None)
    so.add_argument("-a", type=int, default=None)
    so.add_argument("-b", type=int, default=None)
    so.add_argument("--nodes", type=int, default=None)
    so.add_argument("--seed", type=int, default=0)
    _add_json(so)
    so.set_defaults(func=_cmd_severi_oracle)

    fit = sub.add_parser("fit", help="universal count polynomials from the data")
    fsub = fit.add_subparsers(dest="subcommand", required=True)
    fn = fsub.add_parser("nodes", help="fit per-order linear log-coefficients")
    fn.add_argument("--max-r", type=int, default=4, dest="max_r")
    fn.add_argument("--a-table-out", default=None, metavar="PATH",
                    dest="a_table_out",
                    help="write the fitted log-coefficient table as JSON")
    _add_cache(fn)
    _add_json(fn)
    fn.set_defaults(func=_cmd_fit_nodes)

    fs = fsub.add_parser("scan", help="first degree where the polynomial counts")
    fs.add_argument("-r", type=int, required=True)
    _add_cache(fs)
    _add_json(fs)
    fs.set_defaults(func=_cmd_fit_scan)

    series = sub.add_parser("series", help="generating-series assembly and evaluation")
    esub = series.add_subparsers(dest="subcommand", required=True)
    ev = esub.add_parser("eval", help="predicted count for a singularity multiset")
    ev.add_argument("--a-table", required=True, dest="a_table", metavar="PATH")
    ev.add_argument("--parts", required=True, help="e.g. A1,A1")
    ev.add_argument("--chern", required=True, help="e.g. 16,-12,9,3")
    _add_json(ev)
    ev.set_defaults(func=_cmd_series_eval)

    asm = esub.add_parser("assemble", help="expand the generating series of a table")
    asm.add_argument("--a-table", required=True, dest="a_table", metavar="PATH")
    asm.add_argument("--cap", type=int, default=None,
                     help="truncation weight (default: heaviest table key)")
    _add_json(asm)
    asm.set_defaults(func=_cmd_series_assemble)

    return parser


def entry(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CurvelabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
