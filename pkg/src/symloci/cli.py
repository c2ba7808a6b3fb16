"""Command-line front end.

Subcommands:
  survey     dimension/existence table over a degree range (CSV or JSON)
  construct  build a symmetric map with an exact certificate (JSON)
  check      verify claimed automorphisms of a map file exactly, plus a
             numeric discovery summary
  decomp     map pair -> (divergence, fixed-point) form pair, or back
  aut        numeric automorphism discovery for a map file
  resultant  Sylvester resultant of a map file

Exit codes: 0 success, 1 usage/malformed input, 2 dimension mismatch,
3 not realizable, 4 failed exact verification.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import loci, platonic
from .aut import discover_automorphisms, verify_group_action
from .decomp import FormPair, decompose_map, recompose_map
from .forms import RationalMap
from .moebius import FiniteSubgroup, standard_subgroup

SCHEMA = "symloci/1"
DEFAULT_DEGREE_CAP = 61

_SURVEY_COLUMNS = [
    "d",
    "group",
    "t",
    "exists",
    "dim_moduli",
    "dim_ratd",
    "components",
    "s",
    "dim_linalg",
    "match",
]


class UsageError(ValueError):
    pass


def _parse_degree_range(spec: str) -> tuple[int, int]:
    if ".." in spec:
        lo, hi = spec.split("..", 1)
    else:
        lo = hi = spec
    try:
        lo_i, hi_i = int(lo), int(hi)
    except ValueError as exc:
        raise UsageError(f"bad degree range {spec!r}") from exc
    if lo_i < 2 or lo_i > hi_i:
        raise UsageError("need 2 <= dmin <= dmax")
    return lo_i, hi_i


def _parse_group(spec: str):
    """'tetra' | 'octa' | 'icosa' | 'cyclic:M[:t=T]' | 'dihedral:M[:t=T]'."""
    parts = spec.lower().split(":")
    kind = parts[0]
    if kind in ("tetra", "octa", "icosa"):
        if len(parts) > 1:
            raise UsageError(f"{kind} takes no parameters")
        return kind, None, None
    if kind in ("cyclic", "dihedral"):
        if len(parts) < 2:
            raise UsageError(f"{kind} needs an order, e.g. {kind}:3")
        try:
            m = int(parts[1])
        except ValueError as exc:
            raise UsageError(f"bad order in {spec!r}") from exc
        t = None
        if len(parts) > 2:
            tok = parts[2]
            if not tok.startswith("t="):
                raise UsageError(f"unexpected group token {tok!r}")
            t = int(tok[2:])
            if t not in (-1, 0, 1):
                raise UsageError("type must be -1, 0 or 1")
        return kind, m, t
    raise UsageError(f"unknown group {spec!r}")


def _group_object(kind: str, m: int | None) -> FiniteSubgroup:
    if kind in ("tetra", "octa", "icosa"):
        return platonic.platonic_group(kind)
    return standard_subgroup(kind, m)


def _check_degree_cap(d: int, allow_large: bool):
    if d > DEFAULT_DEGREE_CAP and not allow_large:
        raise UsageError(
            f"degree {d} exceeds the default cap {DEFAULT_DEGREE_CAP}; pass --allow-large"
        )


def _emit(text: str, out_path: str | None):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_map(path: str) -> RationalMap:
    try:
        with open(path) as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read map file {path}: {exc}") from exc
    body = obj.get("map", obj)
    try:
        return RationalMap.from_json(body)
    except Exception as exc:
        raise UsageError(f"malformed map JSON in {path}: {exc}") from exc


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_survey(args) -> int:
    d_min, d_max = _parse_degree_range(args.d)
    _check_degree_cap(d_max, args.allow_large)
    kinds = set()
    if args.groups:
        for tok in args.groups.split(","):
            tok = tok.strip().lower()
            if tok == "platonic":
                kinds.update(("tetra", "octa", "icosa"))
            elif tok == "all":
                kinds.update(("cyclic", "dihedral", "tetra", "octa", "icosa"))
            elif tok in ("cyclic", "dihedral", "tetra", "octa", "icosa"):
                kinds.add(tok)
            else:
                raise UsageError(f"unknown group filter {tok!r}")
    else:
        kinds = {"cyclic", "dihedral", "tetra", "octa", "icosa"}
    rows = []
    for d in range(d_min, d_max + 1):
        family = tuple(k for k in ("cyclic", "dihedral") if k in kinds)
        if family:
            rows.extend(loci.survey_rows(d, family))
        plat = tuple(k for k in ("tetra", "octa", "icosa") if k in kinds)
        if plat:
            rows.extend(platonic.survey_rows(d, plat))
    rows.sort(key=lambda r: (r["d"], r["group"], -(r["t"] if r["t"] != "" else 2)))
    all_match = all(r["match"] for r in rows)
    if args.format == "json":
        payload = {"schema": SCHEMA, "kind": "survey", "rows": rows, "all_match": all_match}
        _emit(json.dumps(payload, indent=2, default=str) + "\n", args.out)
    else:
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=_SURVEY_COLUMNS)
        writer.writeheader()
        for r in rows:
            writer.writerow({k: ("" if r[k] is None else r[k]) for k in _SURVEY_COLUMNS})
        _emit(buf.getvalue(), args.out)
    return 0 if all_match else 2


def cmd_construct(args) -> int:
    kind, m, t = _parse_group(args.group)
    d = int(args.d)
    _check_degree_cap(d, args.allow_large)
    if kind in ("tetra", "octa", "icosa"):
        try:
            phi, report = platonic.construct_symmetric_map(d, kind)
        except platonic.NotRealizable as exc:
            print(f"NotRealizable: {exc}", file=sys.stderr)
            return 3
        group = platonic.platonic_group(kind)
    else:
        if m is None or m < 2:
            raise UsageError("construction needs cyclic:M or dihedral:M with M >= 2")
        try:
            if kind == "cyclic":
                reports = dict(loci.cyclic_existence_and_dim(d, m))
                if t is None:
                    t = next(iter(reports)) if reports else None
                if t is None or t not in reports:
                    print(f"NotRealizable: no type-{t} order-{m} symmetry in degree {d}", file=sys.stderr)
                    return 3
                phi = reports[t].certificate["member"]
            else:
                reports = dict(loci.dihedral_dim(d, m))
                valid = {tt: r for tt, r in reports.items() if r.exists}
                if t is None:
                    t = next(iter(valid)) if valid else None
                if t is None or t not in valid:
                    print(f"NotRealizable: no dihedral:{m} symmetry of type {t} in degree {d}", file=sys.stderr)
                    return 3
                phi = valid[t].certificate["member"]
        except loci.NoMemberFound as exc:
            print(f"NotRealizable: {exc}", file=sys.stderr)
            return 3
        group = _group_object(kind, m)
        report = verify_group_action(phi, group)
        if not report.all_verified:
            return 4
    payload = {
        "schema": SCHEMA,
        "kind": "constructed_map",
        "d": d,
        "group": args.group,
        "group_order": group.order,
        "map": phi.to_json(),
        "certificate": {
            "verified_count": len(report.verified_elements),
            "order_census": {str(k): v for k, v in sorted(report.census.items())},
            "classified": report.classified,
            "verified_automorphisms": [e.to_json() for e in report.verified_elements],
        },
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def cmd_check(args) -> int:
    phi = _load_map(args.mapfile)
    if not phi.is_in_ratd():
        raise UsageError("the map file has vanishing resultant (not a degree-d map)")
    kind, m, _ = _parse_group(args.group)
    group = _group_object(kind, m)
    report = verify_group_action(phi, group)
    lines = [f"degree {phi.degree} map, group {args.group} of order {group.order}"]
    lines.append(
        f"exact verification: {len(report.verified_elements)}/{group.order} elements pass"
    )
    if not report.all_verified:
        lines.append(f"first failing element: {report.failed!r}")
    try:
        disc = discover_automorphisms(phi, tolerance=args.tolerance)
        lines.append(
            f"numeric discovery: order {disc.numeric_order}, census "
            f"{dict(sorted(disc.census.items()))}, classified {disc.classified}"
        )
    except Exception as exc:  # numeric mode must not mask the exact verdict
        lines.append(f"numeric discovery unavailable: {exc}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if report.all_verified else 4


def cmd_decomp(args) -> int:
    if args.inverse:
        try:
            with open(args.mapfile) as fh:
                pair = FormPair.from_json(json.load(fh))
        except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read form-pair file: {exc}") from exc
        phi = recompose_map(pair)
        payload = {"schema": SCHEMA, "kind": "map", "map": phi.to_json()}
    else:
        phi = _load_map(args.mapfile)
        pair = decompose_map(phi)
        payload = {"schema": SCHEMA, "kind": "form_pair", "pair": pair.to_json()}
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def cmd_aut(args) -> int:
    phi = _load_map(args.mapfile)
    report = discover_automorphisms(phi, tolerance=args.tolerance)
    payload = {"schema": SCHEMA, "kind": "aut_report", "report": report.to_json()}
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def cmd_resultant(args) -> int:
    phi = _load_map(args.mapfile)
    res = phi.resultant()
    payload = {
        "schema": SCHEMA,
        "kind": "resultant",
        "degree": phi.degree,
        "resultant": res.to_json(),
        "in_ratd": bool(res),
    }
    _emit(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symloci",
        description="exact symmetry loci of rational maps on the projective line",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("survey", help="existence/dimension table over a degree range")
    p.add_argument("--d", required=True, help="degree or range, e.g. 5 or 2..10")
    p.add_argument("--groups", help="comma list: cyclic,dihedral,tetra,octa,icosa,platonic,all")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_survey)

    p = sub.add_parser("construct", help="build a symmetric map with a certificate")
    p.add_argument("--d", required=True, type=int)
    p.add_argument("--group", required=True, help="tetra|octa|icosa|cyclic:M[:t=T]|dihedral:M[:t=T]")
    p.add_argument("--out", help="write to a file instead of stdout")
    p.add_argument("--allow-large", action="store_true")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", help="exact verification of a claimed symmetry group")
    p.add_argument("mapfile")
    p.add_argument("--group", required=True)
    p.add_argument("--tolerance", type=float, default=1e-8)
    p.add_argument("--out")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decomp", help="map <-> (divergence, fixed-point) form pair")
    p.add_argument("mapfile")
    p.add_argument("--inverse", action="store_true", help="treat input as a form pair")
    p.add_argument("--out")
    p.set_defaults(func=cmd_decomp)

    p = sub.add_parser("aut", help="numeric automorphism discovery")
    p.add_argument("mapfile")
    p.add_argument("--tolerance", type=float, default=1e-8)
    p.add_argument("--out")
    p.set_defaults(func=cmd_aut)

    p = sub.add_parser("resultant", help="Sylvester resultant of a map")
    p.add_argument("mapfile")
    p.add_argument("--out")
    p.set_defaults(func=cmd_resultant)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
