"""Command-line front end.

One binary, subcommands per module, shared cache.  Human-readable tables by
default where a table is the natural answer, JSON everywhere on request;
verification failures exit 1 with a JSON failure report on stdout, usage
errors exit 2 (argparse's convention).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path
from typing import Optional

from . import gradedring as gr
from . import invariants as iv
from . import waldschmidt as wd
from .cache import InvariantStore
from .configs import (CONFIG_NAMES, build_config, collinear_sets,
                      dual_plane_incidence, plane_section_geometry)

SCHEMA = 1


def _env_default(name: str, cast, fallback):
    raw = os.environ.get("ROOTWALD_" + name)
    if raw is None:
        return fallback
    try:
        return cast(raw)
    except ValueError:
        return fallback


def _scalar_str(x) -> str:
    """Rational-looking display for field elements that happen to be rational."""
    a, b, d = x.triple
    if b == 0:
        return str(a) if d == 1 else f"{a}/{d}"
    return x.canonical_str()


def _fail(report: dict) -> int:
    report.setdefault("schema", SCHEMA)
    report["ok"] = False
    print(json.dumps(report, indent=2, default=str))
    return 1


def _emit(payload: dict, fmt: str, table: Optional[list] = None,
          headers: Optional[list] = None) -> None:
    """Print payload as JSON, or the tabular view as markdown/csv."""
    if fmt == "json" or table is None:
        payload.setdefault("schema", SCHEMA)
        print(json.dumps(payload, indent=2, default=str))
        return
    if fmt == "csv":
        if headers:
            print(",".join(str(h) for h in headers))
        for row in table:
            print(",".join(str(c) for c in row))
        return
    # markdown
    if headers:
        print("| " + " | ".join(str(h) for h in headers) + " |")
        print("|" + "|".join("---" for _ in headers) + "|")
    for row in table:
        print("| " + " | ".join(str(c) for c in row) + " |")


# ---------------------------------------------------------------------------
# pipeline pieces shared by subcommands

def _load_chain(store: InvariantStore):
    group = store.group("H4")
    inv = store.fundamentals(group)
    der = store.derived(inv)
    stab = store.stabilizer_invariants(inv, der)
    return group, inv, der, stab


def cmd_group(args) -> int:
    store = InvariantStore(args.cache_dir)
    group = store.group(args.name)
    payload = {
        "name": group.name,
        "order": group.order,
        "generators": len(group.generators),
    }
    if args.name == "H4":
        from .groups import BASE_POINT
        orbit = group.orbit_projective(BASE_POINT)
        payload["projective_orbit"] = len(orbit)
    _emit(payload, args.format, table=[[k, v] for k, v in payload.items()],
          headers=["field", "value"])
    return 0


def cmd_config(args) -> int:
    config = build_config(args.name)
    sets = collinear_sets(config)
    payload = {
        "name": config.name,
        "points": len(config.points),
        "lines": {str(k): len([s for s in sets if len(s) == k])
                  for k in sorted({len(s) for s in sets})},
    }
    if args.name == "F4":
        inc = dual_plane_incidence(config)
        payload["dual_planes_per_point"] = inc.uniform_point_count
    rows = [[p_i + 1, str(pt)] for p_i, pt in enumerate(config.points)]
    _emit(payload, args.format, table=rows, headers=["index", "point"])
    return 0


def cmd_invariants(args) -> int:
    store = InvariantStore(args.cache_dir)
    group, inv, der, stab = _load_chain(store)
    if args.action == "build":
        rows = [[n, p.degree(), iv.vanishing_order(p)]
                for n, p in {**inv.as_dict(), **der.as_dict()}.items()]
        _emit({"invariants": {r[0]: {"degree": r[1], "order": r[2]} for r in rows}},
              args.format, table=rows, headers=["name", "degree", "order at base point"])
        return 0
    if args.action == "verify-table1":
        report = iv.verify_table1(inv, der, stab)
        rows = [[r.name, r.degree, r.order, r.s_expression, _scalar_str(r.scalar), r.ok]
                for r in report.rows]
        if not report.all_ok:
            return _fail({"check": "table1", "failures": report.failures})
        _emit({"rows": {r.name: {"degree": r.degree, "order": r.order,
                                 "s_expression": r.s_expression,
                                 "scalar": _scalar_str(r.scalar)} for r in report.rows},
               "all_ok": True},
              args.format, table=rows,
              headers=["name", "d", "m", "leading form", "scalar", "ok"])
        return 0
    # show
    everything = {**inv.as_dict(), **der.as_dict(), **stab.as_dict()}
    if args.poly not in everything:
        print(f"unknown polynomial {args.poly!r}; have {sorted(everything)}",
              file=sys.stderr)
        return 2
    for line in everything[args.poly].canonical_lines():
        print(line)
    return 0


def cmd_gradedring(args) -> int:
    store = InvariantStore(args.cache_dir)
    group, inv, der, stab = _load_chain(store)
    gens = gr.build_generator_set(inv, der, stab)
    if args.action == "hilbert":
        report = gr.verify_main_theorem(inv, gens, d_max=args.dmax,
                                        m_max=args.mmax, heavy_d_max=args.heavy_dmax)
        payload = {
            "d_max": report.d_max, "m_max": report.m_max,
            "heavy_d_max": report.heavy_d_max,
            "cells_series_vs_generator_algebra": report.cells_series_vs_generator_algebra,
            "cells_series_vs_rank_oracle": report.cells_series_vs_rank_oracle,
            "row_sums_checked": report.row_sums_checked,
            "dim_T_72": report.dim_T_72,
            "ok": report.ok,
        }
        if not report.ok:
            return _fail({"check": "hilbert-series", "mismatch": report.first_mismatch})
        _emit(payload, args.format, table=[[k, v] for k, v in payload.items()],
              headers=["field", "value"])
        return 0
    # table2
    report = gr.table2_report(gens, m_max=args.mmax)
    rows = []
    for r in report.rows:
        cells = [f"{d}*" if flag else str(d)
                 for d, flag in zip(r.degrees, r.generator_flags)]
        rows.append([r.m, " ".join(cells)])
    _emit({"rows": {r.m: r.degrees for r in report.rows},
           "generator_flags": {r.m: r.generator_flags for r in report.rows},
           "cross_checked_cells": report.cross_checked_cells},
          args.format, table=rows, headers=["m", "degrees (generators starred)"])
    return 0


def _alpha_nullity_worker(job):
    name, m, demands, d = job
    config = build_config(name)
    points = [p.coords for p in config.points]
    dem = list(demands) if demands else [m] * len(points)
    return d, wd.interpolation_nullity(points, dem, d)


def cmd_waldschmidt(args) -> int:
    if args.action == "ledger":
        if args.name.lower() != "f4":
            print("only the F4 ledger exists", file=sys.stderr)
            return 2
        ledger = wd.f4_reduction_ledger()
        rows = [[s.name, s.statement, "ok" if s.ok else "FAIL"] for s in ledger.steps]
        if not ledger.ok:
            return _fail({"check": "f4-ledger",
                          "failures": [[s.name, s.detail] for s in ledger.failures()]})
        _emit({"steps": [[s.name, s.ok] for s in ledger.steps],
               "terminal": str(ledger.terminal), "ok": True},
              args.format, table=rows, headers=["step", "statement", "status"])
        return 0

    if args.action == "alpha":
        if args.m is None:
            print("alpha needs --m", file=sys.stderr)
            return 2
        if args.name not in CONFIG_NAMES:
            print(f"unknown configuration {args.name!r}; expected one of {CONFIG_NAMES}",
                  file=sys.stderr)
            return 2
        d_max = args.dmax if args.dmax else 2 * args.m + 2
        if args.workers > 1:
            jobs = [(args.name, args.m, None, d) for d in range(1, d_max + 1)]
            result = None
            with ProcessPoolExecutor(max_workers=args.workers) as pool:
                for d, nl in pool.map(_alpha_nullity_worker, jobs):
                    if nl > 0:
                        result = wd.AlphaResult(args.m, d, nl, d_max)
                        break
            if result is None:
                result = wd.AlphaResult(args.m, None, 0, d_max)
        else:
            result = wd.alpha_symbolic_power(build_config(args.name), args.m, d_max)
        payload = {"config": args.name, "m": result.m,
                   "alpha": result.alpha if result.found else f"none <= {result.d_max}",
                   "kernel_dim": result.kernel_dim, "d_max": result.d_max}
        _emit(payload, args.format, table=[[k, v] for k, v in payload.items()],
              headers=["field", "value"])
        return 0

    # certify
    name = args.name
    if name not in CONFIG_NAMES:
        print(f"unknown configuration {name!r}; expected one of {CONFIG_NAMES}",
              file=sys.stderr)
        return 2
    if name == "H4":
        store = InvariantStore(args.cache_dir)
        group, inv, der, stab = _load_chain(store)
        gens = gr.build_generator_set(inv, der, stab)
        config = build_config("H4")
        orders = {i: iv.vanishing_order(der.f36, config.point(i), hint=11)
                  for i in range(1, len(config.points) + 1)}
        cert = wd.waldschmidt_certificate("H4", gens=gens, orders=orders)
    else:
        cert = wd.waldschmidt_certificate(name, m_check=args.m_check)
    if not cert.ok:
        return _fail({"check": f"certificate-{name}", "report": cert.as_json_dict()})
    print(json.dumps(cert.as_json_dict(), indent=2, default=str))
    return 0


def cmd_verify_all(args) -> int:
    t_start = time.time()
    checks = []
    failures = []

    def check(name, ok, detail=""):
        checks.append({"name": name, "ok": bool(ok), "detail": detail})
        line = f"[{'PASS' if ok else 'FAIL'}] {name}"
        if detail and not ok:
            line += f"  ({detail})"
        print(line, file=sys.stderr)
        if not ok:
            failures.append(name)

    store = InvariantStore(args.cache_dir)
    group = store.group("H4")
    f4 = store.group("F4")
    check("group orders", group.order == 14400 and f4.order == 1152)

    from .groups import BASE_POINT
    stab = group.stabilizer(BASE_POINT)
    orbit = group.orbit_projective(BASE_POINT)
    check("stabilizer and orbit", stab.order == 120 and len(orbit) == 60)

    inv = store.fundamentals(group)
    der = store.derived(inv)
    sinv = store.stabilizer_invariants(inv, der)
    check("fundamental invariants", all(
        group.is_invariant(f) for f in (inv.f2, inv.f12, inv.f20, inv.f30)))

    t1 = iv.verify_table1(inv, der, sinv)
    check("table 1", t1.all_ok)

    gens = gr.build_generator_set(inv, der, sinv)
    main = gr.verify_main_theorem(inv, gens, d_max=args.dmax, m_max=args.mmax,
                                  heavy_d_max=args.heavy_dmax)
    check("hilbert series three-way", main.ok, str(main.first_mismatch))

    table2 = gr.table2_report(gens, m_max=min(args.mmax, 18))
    check("table 2", all(r.target_dim == len(iv.s_monomial_exponents(r.m))
                         for r in table2.rows))

    # the condition count at (72,20) reads rows 0..18 regardless of --mmax
    table2_full = table2 if table2.m_max >= 18 else gr.table2_report(
        gens, m_max=18, cross_check=False)
    oracle = gr.TruncationOracle(inv)
    uniq = gr.verify_unique_72_20(oracle, table2_full)
    check("unique (72,20) class", uniq.ok,
          f"kernel {uniq.kernel_dim}, witness {uniq.witness_matches_square}")

    section = plane_section_geometry()
    f4c = build_config("F4")
    triples = [s for s in collinear_sets(f4c) if len(s) == 3]
    check("F4 geometry", len(triples) == 32
          and dual_plane_incidence(f4c).uniform_point_count == 9)

    ledger = wd.f4_reduction_ledger(section)
    check("F4 reduction ledger", ledger.ok)

    certs = {}
    for name in ("D4", "B4", "F4"):
        certs[name] = wd.waldschmidt_certificate(name, m_check=args.m_check)
    config = build_config("H4")
    orders = {i: iv.vanishing_order(der.f36, config.point(i), hint=11)
              for i in range(1, 61)}
    certs["H4"] = wd.waldschmidt_certificate("H4", gens=gens, orders=orders)
    expected = {"D4": Fraction(2), "B4": Fraction(2),
                "F4": Fraction(8, 3), "H4": Fraction(18, 5)}
    for name, cert in certs.items():
        check(f"certificate {name}", cert.ok and cert.value == expected[name],
              f"value {cert.value}")

    payload = {
        "schema": SCHEMA,
        "checks": checks,
        "elapsed_seconds": round(time.time() - t_start, 2),
        "ok": not failures,
    }
    print(json.dumps(payload, indent=2))
    return 0 if not failures else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootwald",
        description="exact certificates for the root-system point configurations")
    parser.add_argument("--cache-dir", type=Path,
                        default=_env_default("CACHE_DIR", Path, None))
    parser.add_argument("--workers", type=int,
                        default=_env_default("WORKERS", int, 1))
    parser.add_argument("--format", choices=("json", "csv", "markdown"),
                        default=_env_default("FORMAT", str, "markdown"))
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("group", help="build or load a reflection group")
    p.add_argument("name", choices=("H4", "F4"))
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("config", help="point configuration facts")
    p.add_argument("name", choices=CONFIG_NAMES)
    p.set_defaults(func=cmd_config)

    p = sub.add_parser("invariants", help="invariant chain")
    p.add_argument("action", choices=("build", "verify-table1", "show"))
    p.add_argument("poly", nargs="?", help="polynomial name for 'show'")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("gradedring", help="bigraded dimension reports")
    p.add_argument("action", choices=("hilbert", "table2"))
    p.add_argument("--dmax", type=int, default=_env_default("DMAX", int, 66))
    p.add_argument("--mmax", type=int, default=_env_default("MMAX", int, 18))
    p.add_argument("--heavy-dmax", type=int,
                   default=_env_default("HEAVY_DMAX", int, 44))
    p.set_defaults(func=cmd_gradedring)

    p = sub.add_parser("waldschmidt", help="alpha values and certificates")
    p.add_argument("action", choices=("alpha", "certify", "ledger"))
    p.add_argument("name", help="configuration name (or 'f4' for ledger)")
    p.add_argument("--m", type=int, default=None)
    p.add_argument("--dmax", type=int, default=_env_default("DMAX", int, None))
    # SUPPRESS so the subparser only overrides the root-level value when
    # the flag actually trails the subcommand
    p.add_argument("--workers", type=int, default=argparse.SUPPRESS)
    p.add_argument("--m-check", type=int,
                   default=_env_default("M_CHECK", int, None))
    p.set_defaults(func=cmd_waldschmidt)

    p = sub.add_parser("verify-all", help="run every verification")
    p.add_argument("--dmax", type=int, default=_env_default("DMAX", int, 66))
    p.add_argument("--mmax", type=int, default=_env_default("MMAX", int, 18))
    p.add_argument("--heavy-dmax", type=int,
                   default=_env_default("HEAVY_DMAX", int, 44))
    p.add_argument("--m-check", type=int, default=_env_default("M_CHECK", int, 4))
    p.set_defaults(func=cmd_verify_all)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
