"""Batch command-line surface: enumerate, decompose, verify, series, table.

Output on standard output is deterministic: JSON is serialized with sorted
keys and fixed indentation, CSV rows come out in a fixed grid order, and
coefficients are decimal strings so arbitrary precision survives the round
trip.  Wall-clock diagnostics go to standard error only.  Exit codes: 0 on
success, 1 when a requested verification fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
import time

from . import identities, qseries, sip
from .basis_gf import (
    cross_check_tables,
    table_closed_form,
    table_enumerated,
    table_recurrence,
)
from .partitions import (
    Partition,
    PartitionClass,
    enumerate_partitions,
    omega_exponents,
    stats,
)
from .reporting import CheckReport
from .series import FOUR_PARAM, Series

_SCHEMA_VERSION = 1
_DEFAULT_TRUNC = 16

_DECOMPOSABLE = {
    "g1": PartitionClass.G1,
    "g2": PartitionClass.G2,
    "p1": PartitionClass.P1,
    "p2": PartitionClass.P2,
}
_BASES = {
    "g1": PartitionClass.BASIS_G1,
    "g2": PartitionClass.BASIS_G2,
    "p1": PartitionClass.BASIS_P1,
    "p2": PartitionClass.BASIS_P2,
}
_TABLE_METHODS = {
    "enumerated": table_enumerated,
    "recurrence": table_recurrence,
    "closed-form": table_closed_form,
}


def _default_trunc() -> int:
    raw = os.environ.get("SIPQ_TRUNC", "")
    try:
        value = int(raw)
    except ValueError:
        return _DEFAULT_TRUNC
    return value if value >= 0 else _DEFAULT_TRUNC


def _emit_json(command: str, params: dict[str, object], results: object) -> None:
    payload = {
        "schema_version": _SCHEMA_VERSION,
        "command": command,
        "params": params,
        "results": results,
    }
    print(json.dumps(payload, sort_keys=True, indent=2))


def _diag(message: str) -> None:
    print(message, file=sys.stderr)


def _parse_partition(text: str) -> Partition:
    text = text.strip()
    if not text:
        return Partition()
    return Partition(tuple(int(piece.strip()) for piece in text.split(",")))


def _partition_record(lam: Partition) -> dict[str, object]:
    st = stats(lam)
    om = omega_exponents(lam)
    return {
        "partition": list(lam),
        "weight": st.weight,
        "length": st.length,
        "alt_sum": st.alt_sum,
        "odd_parts": st.odd_parts,
        "bg_rank": st.bg_rank,
        "omega": {"a": om.a, "b": om.b, "c": om.c, "d": om.d},
    }


def _cmd_enumerate(args: argparse.Namespace) -> int:
    cls = PartitionClass(args.cls)
    members = enumerate_partitions(cls, args.weight)
    if args.format == "json":
        _emit_json(
            "enumerate",
            {"class": cls.value, "weight": args.weight},
            [_partition_record(lam) for lam in members],
        )
        return 0
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(
        ["partition", "weight", "length", "alt_sum", "odd_parts", "bg_rank", "a", "b", "c", "d"]
    )
    for lam in members:
        st = stats(lam)
        om = omega_exponents(lam)
        writer.writerow(
            [
                ",".join(str(p) for p in lam),
                st.weight,
                st.length,
                st.alt_sum,
                st.odd_parts,
                st.bg_rank,
                om.a,
                om.b,
                om.c,
                om.d,
            ]
        )
    return 0


def _cmd_decompose(args: argparse.Namespace) -> int:
    cls = _DECOMPOSABLE[args.cls]
    try:
        lam = _parse_partition(args.partition)
    except ValueError as exc:
        _diag(f"invalid partition literal: {exc}")
        return 2
    try:
        dec = sip.decompose(cls, lam)
    except sip.NotInClass as exc:
        _diag(str(exc))
        return 2
    _emit_json(
        "decompose",
        {"class": cls.value, "partition": list(lam)},
        {"beta": list(dec.beta), "mu": list(dec.mu), "modulus": dec.modulus},
    )
    return 0


def _full_battery(trunc: int) -> list[CheckReport]:
    """Everything `verify --all` runs, in fixed order."""
    reports = [identities.verify_spec(spec, trunc) for spec in identities.registry()]
    for basis in _BASES.values():
        reports.append(cross_check_tables(basis, 12, 12))
    small = min(trunc, 16)
    for cls in _DECOMPOSABLE.values():
        reports.append(sip.verify_sip_property(cls, cls.basis, 2, small))
        reports.append(sip.sip_gf_single_variable(cls, cls.basis, 2, trunc))
        reports.append(sip.check_sip_gf_four_parameter(cls, small))
    reports.append(qseries.check_qbinomial_recurrences(10))
    reports.append(qseries.check_qbinomial_theorem(6, (1, 2, 1, 1)))
    reports.append(qseries.check_qbinomial_theorem(6, (1, 1, 0, 1)))
    minus_b = Series.monomial(FOUR_PARAM, -1, (0, 1, 0, 0))
    minus_c_inv = Series.monomial(FOUR_PARAM, -1, (0, 0, -1, 0))
    reports.append(qseries.check_q_gauss(qseries.A_INFINITY, minus_b, (1, 1, 0, 0), trunc))
    reports.append(qseries.check_q_gauss(qseries.A_INFINITY, minus_c_inv, (1, 1, 0, 0), trunc))
    reports.append(qseries.check_q_gauss((1, 0, 0, 0), (0, 1, 0, 0), (2, 2, 1, 1), trunc))
    reports.append(identities.verify_partial_sums(PartitionClass.P1, 4, trunc))
    reports.append(identities.verify_partial_sums(PartitionClass.P2, 4, trunc))
    reports.append(identities.verify_substitution_consistency("xzq", small))
    reports.append(identities.verify_substitution_consistency("bg", small))
    return reports


def _cmd_verify(args: argparse.Namespace) -> int:
    trunc = args.trunc
    reports: list[CheckReport] = []
    started = time.perf_counter()
    if args.all:
        reports = _full_battery(trunc)
    else:
        if not args.ids:
            _diag("verify: give identity keys or --all")
            return 2
        try:
            specs = [identities.spec_by_key(key) for key in args.ids]
        except identities.UnknownTheorem as exc:
            _diag(f"unknown identity key: {exc}")
            return 2
        reports = [identities.verify_spec(spec, trunc) for spec in specs]
    _diag(f"verify: {len(reports)} reports in {time.perf_counter() - started:.3f}s")
    _emit_json(
        "verify",
        {"trunc": trunc, "selection": "all" if args.all else list(args.ids)},
        [r.as_dict() for r in reports],
    )
    return 0 if all(r.passed for r in reports) else 1


def _cmd_series(args: argparse.Namespace) -> int:
    try:
        spec = identities.spec_by_key(args.spec)
    except identities.UnknownTheorem as exc:
        _diag(f"unknown identity key: {exc}")
        return 2
    try:
        if args.side == "combinatorial":
            series = identities.combinatorial_side(spec, args.trunc)
        elif args.side == "series":
            series = identities.series_side(spec, args.trunc)
        elif args.side == "product":
            series = identities.product_side(spec, args.trunc)
        else:
            series = identities.product_side(spec, args.trunc, alt=True)
    except ValueError as exc:
        _diag(str(exc))
        return 2
    _emit_json(
        "series",
        {"spec": spec.key, "side": args.side, "trunc": args.trunc},
        {"variables": list(spec.ring.names), "terms": series.to_records()},
    )
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    basis = _BASES[args.basis]
    fn = _TABLE_METHODS[args.method]
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["class", "method", "n", "h", "polynomial"])
    for n in range(args.n_max + 1):
        for h in range(args.h_max + 1):
            writer.writerow([basis.value, args.method, n, h, fn(basis, n, h).to_string()])
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="sipq",
        description=(
            "Exact generating-function toolkit for parity-constrained"
            " partition classes."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_enum = sub.add_parser("enumerate", help="list class members of one weight")
    p_enum.add_argument(
        "--class",
        dest="cls",
        required=True,
        choices=[c.value for c in PartitionClass],
    )
    p_enum.add_argument("--weight", type=int, required=True)
    p_enum.add_argument("--format", choices=["json", "csv"], default="json")
    p_enum.set_defaults(handler=_cmd_enumerate)

    p_dec = sub.add_parser("decompose", help="split a member into skeleton and padding")
    p_dec.add_argument("--class", dest="cls", required=True, choices=sorted(_DECOMPOSABLE))
    p_dec.add_argument("--partition", required=True, help="comma-separated parts, e.g. 11,8,7,4")
    p_dec.set_defaults(handler=_cmd_decompose)

    p_ver = sub.add_parser("verify", help="check identities (and --all for the full battery)")
    p_ver.add_argument("ids", nargs="*", help="identity keys, e.g. g1-four")
    p_ver.add_argument("--all", action="store_true")
    p_ver.add_argument("--trunc", type=int, default=_default_trunc())
    p_ver.set_defaults(handler=_cmd_verify)

    p_ser = sub.add_parser("series", help="expand one side of one identity")
    p_ser.add_argument("--spec", required=True)
    p_ser.add_argument(
        "--side",
        required=True,
        choices=["combinatorial", "series", "product", "product-alt"],
    )
    p_ser.add_argument("--trunc", type=int, default=_default_trunc())
    p_ser.set_defaults(handler=_cmd_series)

    p_tab = sub.add_parser("table", help="export a basis table as CSV")
    p_tab.add_argument("--basis", required=True, choices=sorted(_BASES))
    p_tab.add_argument("--method", required=True, choices=sorted(_TABLE_METHODS))
    p_tab.add_argument("--n-max", type=int, required=True)
    p_tab.add_argument("--h-max", type=int, required=True)
    p_tab.set_defaults(handler=_cmd_table)

    p_chk = sub.add_parser("tables-check", help="three-way basis-table cross-check")
    p_chk.add_argument("--basis", required=True, choices=sorted(_BASES))
    p_chk.add_argument("--n-max", type=int, default=12)
    p_chk.add_argument("--h-max", type=int, default=12)
    p_chk.set_defaults(handler=_cmd_tables_check)

    return parser


def _cmd_tables_check(args: argparse.Namespace) -> int:
    report = cross_check_tables(_BASES[args.basis], args.n_max, args.h_max)
    _emit_json(
        "tables-check",
        {"basis": _BASES[args.basis].value, "n_max": args.n_max, "h_max": args.h_max},
        [report.as_dict()],
    )
    return 0 if report.passed else 1


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "trunc", 0) < 0:
        _diag("trunc must be nonnegative")
        return 2
    if getattr(args, "weight", 0) < 0:
        _diag("weight must be nonnegative")
        return 2
    if getattr(args, "n_max", 0) < 0 or getattr(args, "h_max", 0) < 0:
        _diag("table bounds must be nonnegative")
        return 2
    return args.handler(args)


def entry() -> None:
    raise SystemExit(main())
