"""Command-line surface.

Commands compute polynomials, reproduce the published tables, run the
brute-force oracles against the closed formulas, and verify the
generating-function identities.  Every run emits a report: results plus a
list of named checks with expected/actual values.  All integers are
serialized as decimal strings so nothing is ever squeezed through a
floating-point JSON number.

Exit codes: 0 all checks passed, 1 some check failed, 2 usage error,
3 feature disabled (full E8 enumeration without --enable-e8).

The environment variable TAUPOLY_THREADS caps the worker threads used
for independent table rows; results are identical at any setting.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from . import formulas, hereditary, lattice, series, tables, weyl
from .dynkin import DynkinDiagram, parse_diagram, parse_union
from .errors import FeatureDisabled, TaupolyError, UsageError
from .formulas import PATH, PREPROJECTIVE, AlgebraSpec
from .polynomials import Polynomial

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_FEATURE_DISABLED = 3


def thread_count() -> int:
    raw = os.environ.get("TAUPOLY_THREADS", "1")
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"TAUPOLY_THREADS must be an integer, got {raw!r}")
    return max(1, min(value, os.cpu_count() or 1))


@dataclass
class Report:
    command: str
    results: dict = field(default_factory=dict)
    checks: list = field(default_factory=list)

    def add_check(self, name: str, expected, actual) -> bool:
        ok = expected == actual
        self.checks.append(
            {
                "name": name,
                "expected": _stringify(expected),
                "actual": _stringify(actual),
                "pass": ok,
            }
        )
        return ok

    def add_pass_fail(self, name: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(
            {
                "name": name,
                "expected": "pass",
                "actual": "pass" if ok else f"fail {detail}".strip(),
                "pass": ok,
            }
        )
        return ok

    @property
    def exit_status(self) -> int:
        return EXIT_OK if all(c["pass"] for c in self.checks) else EXIT_CHECK_FAILED

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "results": _stringify(self.results),
            "checks": self.checks,
            "exit_status": self.exit_status,
        }


def _stringify(value):
    if isinstance(value, bool):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Polynomial):
        return value.to_decimal_strings()
    if isinstance(value, dict):
        return {str(k): _stringify(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_stringify(v) for v in value]
    return value


def _emit(report: Report, fmt: str) -> int:
    if fmt == "json":
        print(json.dumps(report.to_dict(), sort_keys=True, indent=2))
    else:
        _emit_plain(report)
    return report.exit_status


def _emit_plain(report: Report) -> None:
    for key, value in report.results.items():
        print(f"{key}: {_plain(value)}")
    for check in report.checks:
        status = "PASS" if check["pass"] else "FAIL"
        line = f"[{status}] {check['name']}"
        if not check["pass"]:
            line += f" (expected {check['expected']}, got {check['actual']})"
        print(line)


def _plain(value) -> str:
    if isinstance(value, Polynomial):
        return str(value)
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_plain(v)}" for k, v in value.items()) + "}"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_plain(v) for v in value) + "]"
    return str(value)


def _family_arg(value: str) -> str:
    norm = value.lower()
    if norm in ("preprojective", "ppa"):
        return PREPROJECTIVE
    if norm in ("path", "kq"):
        return PATH
    raise UsageError(f"unknown family {value!r}")


# ---------------------------------------------------------------------------
# poly
# ---------------------------------------------------------------------------


def cmd_poly(args) -> Report:
    family = _family_arg(args.family)
    diagram = parse_diagram(args.diagram)
    spec = AlgebraSpec(family, diagram)
    kind = args.kind
    if kind == "d":
        poly = formulas.d_polynomial(spec, enable_e8=args.enable_e8)
    elif kind == "h":
        poly = formulas.h_polynomial(spec, enable_e8=args.enable_e8)
    elif kind == "f":
        poly = formulas.f_polynomial(spec, enable_e8=args.enable_e8)
    else:
        raise UsageError(f"kind must be d, f or h, got {kind!r}")
    report = Report(command=f"poly --family {family} --diagram {diagram} --kind {kind}")
    report.results["polynomial"] = poly
    report.results["coefficients_ascending"] = poly.to_decimal_strings()
    if args.verify:
        _verify_single_poly(report, spec, kind, poly)
    if args.format == "csv":
        print(",".join(poly.to_decimal_strings()))
        report.results = {}
    return report


def _verify_single_poly(report: Report, spec: AlgebraSpec, kind: str, poly: Polynomial) -> None:
    n = spec.diagram.rank
    if kind == "d":
        shifted = poly.shifted(-1)
        report.add_pass_fail("shifted-palindromic", shifted.is_palindromic(n - 1))
        report.add_pass_fail("shifted-unimodal", shifted.is_unimodal())
        table_num = _table_for(spec)
        if table_num is not None and n in tables.TABLES[table_num][2]:
            row = tuple(poly.coefficient(n - 1 - j) for j in range(n))
            report.add_check(f"table-{table_num}-row-{n}", tables.TABLES[table_num][2][n], row)
        expected = formulas.expected_aggregates(spec)
        if expected is not None:
            got = (poly.coefficient(n - 1), poly.coefficient(0))
            report.add_check("aggregates", expected, got)
    else:
        report.add_pass_fail("palindromic", poly.is_palindromic(n))


def _table_for(spec: AlgebraSpec) -> int | None:
    for k, (family, dfam, _) in tables.TABLES.items():
        if family == spec.family and dfam == spec.diagram.family:
            return k
    return None


# ---------------------------------------------------------------------------
# eulerian / narayana / dim-orbit / oracle
# ---------------------------------------------------------------------------


def cmd_eulerian(args) -> Report:
    union = parse_union(args.diagram)
    poly = weyl.eulerian_poly(union, oracle=args.oracle, enable_e8=args.enable_e8)
    report = Report(command=f"eulerian {union}")
    report.results["polynomial"] = poly
    report.results["coefficients_ascending"] = poly.to_decimal_strings()
    return report


def cmd_narayana(args) -> Report:
    union = parse_union(args.diagram)
    poly = weyl.narayana_poly(union, oracle=args.oracle, enable_e8=args.enable_e8)
    report = Report(command=f"narayana {union}")
    report.results["polynomial"] = poly
    report.results["coefficients_ascending"] = poly.to_decimal_strings()
    return report


def cmd_dim_orbit(args) -> Report:
    if _family_arg(args.family) != PREPROJECTIVE:
        raise UsageError("dim-orbit models the doubled-quiver projectives; use --family ppa")
    dfam = args.type.upper()
    n = args.rank
    report = Report(command=f"dim-orbit --type {dfam} --rank {n}")
    if dfam == "A":
        if args.vertex is None:
            values = {ell: lattice.dim_orbit_ppa_A(n, ell) for ell in range(1, n + 1)}
            report.results["totals"] = values
        elif args.oracle:
            total, count = lattice.dim_orbit_ppa_A_oracle(n, args.vertex)
            report.results["total"] = total
            report.results["path_count"] = count
        else:
            report.results["total"] = lattice.dim_orbit_ppa_A(n, args.vertex)
    elif dfam == "D":
        if args.vertex is None:
            raise UsageError("type D needs --vertex (use -1, 1, or 2..n-1)")
        ell = args.vertex
        if args.oracle:
            if ell in (1, -1):
                total, count = lattice.dim_orbit_ppa_D_oracle_pm1(n)
            else:
                total, count = lattice.dim_orbit_ppa_D_oracle_mid(n, ell)
            report.results["total"] = total
            report.results["count"] = count
        else:
            report.results["total"] = lattice.dim_orbit_ppa_D(n, ell)
    else:
        raise UsageError("dim-orbit supports --type A or D")
    return report


def cmd_oracle(args) -> Report:
    if args.oracle_command == "path":
        if args.type.upper() != "A":
            raise UsageError("the complex oracle runs on type A quivers")
        q = hereditary.OrientedQuiver.line(args.rank, args.orientation)
        complex_ = hereditary.tau_rigid_complex(q)
        poly = hereditary.poly_from_complex(complex_, args.kind)
        report = Report(command=f"oracle path A{args.rank} {args.orientation or ''} {args.kind}")
        report.results["polynomial"] = poly
        report.results["coefficients_ascending"] = poly.to_decimal_strings()
        report.results["maximal_faces"] = complex_.maximal_face_count
        return report
    if args.oracle_command == "tau-orbit":
        diagram = parse_diagram(args.type)
        q = hereditary.OrientedQuiver.from_diagram(diagram)
        report = Report(command=f"oracle tau-orbit {diagram}")
        if args.vertex is None:
            report.results["totals"] = {
                v: hereditary.tau_orbit_dim(q, v) for v in diagram.vertices
            }
        else:
            report.results["total"] = hereditary.tau_orbit_dim(q, args.vertex)
        return report
    raise UsageError(f"unknown oracle {args.oracle_command!r}")


# ---------------------------------------------------------------------------
# table / aggregates / genfun
# ---------------------------------------------------------------------------


def cmd_table(args) -> Report:
    k = args.number
    rows = formulas.reproduce_table(k)
    report = Report(command=f"table {k}")
    report.results["rows"] = {n: list(rows[n]) for n in sorted(rows)}
    if args.format == "csv":
        width = max(len(r) for r in rows.values())
        print("n," + ",".join(f"j{j}" for j in range(width)))
        for n in sorted(rows):
            cells = [str(v) for v in rows[n]] + [""] * (width - len(rows[n]))
            print(f"{n}," + ",".join(cells))
        report.results = {}
    return report


def cmd_aggregates(args) -> Report:
    spec = AlgebraSpec(_family_arg(args.family), parse_diagram(args.diagram))
    got = formulas.aggregate_dims(spec, enable_e8=args.enable_e8)
    report = Report(command=f"aggregates {spec}")
    report.results["indecomposable_total"] = got[0]
    report.results["maximal_total"] = got[1]
    expected = formulas.expected_aggregates(spec)
    if expected is not None:
        report.add_check("closed-form-aggregates", expected, got)
    return report


_GENFUN_FAMILIES = {
    "exp-h-ppa-A": (series.eulerian_family, True),
    "exp-d-ppa-A": (series.ppa_dim_family, True),
    "ord-h-path-A": (series.narayana_family, False),
    "ord-d-path-A": (series.path_dim_family, False),
}

_GENFUN_CHECKS = {
    "exp-h-ppa-A": (series.verify_identity_euler_ode, series.verify_euler_closed_form),
    "exp-d-ppa-A": (series.verify_dpoly_genfun_ppa, series.verify_ppa_closed_form_variants),
    "ord-h-path-A": (
        series.verify_identity_narayana_quadratic,
        series.verify_narayana_sqrt_reconstruction,
    ),
    "ord-d-path-A": (series.verify_dpoly_genfun_path,),
}


def cmd_genfun(args) -> Report:
    name = args.name
    if name not in _GENFUN_FAMILIES:
        raise UsageError(f"genfun name must be one of {sorted(_GENFUN_FAMILIES)}")
    if args.order > 14:
        raise UsageError("genfun order capped at 14")
    family_fn, _ = _GENFUN_FAMILIES[name]
    polys = family_fn(args.order + 1)
    report = Report(command=f"genfun {name} --order {args.order}")
    report.results["terms"] = [p.to_decimal_strings() for p in polys]
    if args.verify:
        reports = [check(args.order) for check in _GENFUN_CHECKS[name]]
        report.results["identity_reports"] = [r.to_dict() for r in reports]
        for rep in reports:
            report.add_pass_fail(
                rep.name, rep.passed, f"at z^{rep.mismatch_power}" if not rep.passed else ""
            )
    return report


# ---------------------------------------------------------------------------
# verify suites
# ---------------------------------------------------------------------------


def _suite_tables(report: Report) -> None:
    workers = thread_count()

    def one(k: int):
        return k, formulas.reproduce_table(k)

    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            computed = dict(pool.map(one, range(1, 7)))
    else:
        computed = dict(one(k) for k in range(1, 7))
    for k in range(1, 7):
        report.add_check(f"table-{k}", formulas.golden_table(k), computed[k])


def _suite_examples(report: Report) -> None:
    q = hereditary.OrientedQuiver.line(3)
    complex_ = hereditary.tau_rigid_complex(q)
    report.add_check("example-path-A3-f", Polynomial([14, 21, 9, 1]), complex_.f_polynomial())
    report.add_check("example-path-A3-h", Polynomial([1, 6, 6, 1]), complex_.h_polynomial())
    report.add_check("example-path-A3-d", Polynomial([46, 46, 10]), complex_.d_polynomial())
    spec = AlgebraSpec(PREPROJECTIVE, DynkinDiagram("A", 3))
    report.add_check("example-ppa-A3-f", Polynomial([24, 36, 14, 1]), formulas.f_polynomial(spec))
    report.add_check("example-ppa-A3-h", Polynomial([1, 11, 11, 1]), formulas.h_polynomial(spec))
    report.add_check("example-ppa-A3-d", Polynomial([120, 120, 24]), formulas.d_polynomial(spec))


def _suite_oracles(report: Report, max_rank: int) -> None:
    # every orientation of the type A quivers against the closed engine
    for n in range(1, max_rank + 1):
        for bits in range(1 << (n - 1)):
            orientation = "".join("+" if (bits >> i) & 1 else "-" for i in range(n - 1))
            q = hereditary.OrientedQuiver.line(n, orientation)
            complex_ = hereditary.tau_rigid_complex(q)
            spec = AlgebraSpec(PATH, DynkinDiagram("A", n))
            ok = (
                complex_.d_polynomial() == formulas.d_polynomial(spec)
                and complex_.h_polynomial() == formulas.h_polynomial(spec)
                and complex_.f_polynomial() == formulas.f_polynomial(spec)
            )
            report.add_pass_fail(f"complex-vs-formula-A{n}-{orientation or 'o'}", ok)
    # lattice enumerations against the closed formulas
    rect_ok = all(
        lattice.dim_orbit_ppa_A_oracle(n, ell)
        == (lattice.dim_orbit_ppa_A(n, ell), _binom(n + 1, ell))
        for n in range(1, 13)
        for ell in range(1, n + 1)
    )
    report.add_pass_fail("rectangle-paths-vs-formula-n<=12", rect_ok)
    corner_ok = all(
        lattice.dim_orbit_ppa_D_oracle_pm1(n) == (lattice.dim_orbit_ppa_D(n, 1), 2 ** (n - 1))
        for n in range(4, 13)
    )
    report.add_pass_fail("corner-paths-vs-formula-n<=12", corner_ok)
    sign_ok = all(
        lattice.dim_orbit_ppa_D_oracle_mid(n, ell)
        == (lattice.dim_orbit_ppa_D(n, ell), 2 ** (n - ell) * _binom(n, ell))
        for n in range(4, 13)
        for ell in range(2, n)
    )
    report.add_pass_fail("sign-sequences-vs-formula-n<=12", sign_ok)
    # translate-orbit reproduction of the E-family projective dimensions
    for rank in (6, 7, 8):
        got = tuple(
            hereditary.tau_orbit_dims_all(DynkinDiagram("E", rank)).values()
        )
        report.add_check(f"tau-orbit-E{rank}", tables.E_PPA_PROJECTIVE_DIMS[rank], got)
    # Narayana closed formula vs oracle on small ranks
    for rank in range(1, min(max_rank, 5) + 1):
        report.add_check(
            f"narayana-closed-vs-oracle-A{rank}",
            weyl.narayana_a(rank),
            weyl.narayana_oracle(DynkinDiagram("A", rank)),
        )


def _binom(n: int, k: int) -> int:
    from math import comb

    return comb(n, k)


def _suite_genfun(report: Report, order: int) -> None:
    for rep in series.verify_all_identities(order):
        report.add_pass_fail(f"genfun-{rep.name}-order-{rep.order}", rep.passed)


def _suite_aggregates(report: Report) -> None:
    for family, dfam, lo in (
        (PREPROJECTIVE, "A", 1),
        (PATH, "A", 1),
        (PATH, "D", 4),
        (PREPROJECTIVE, "D", 4),
    ):
        for n in range(lo, 10):
            spec = AlgebraSpec(family, DynkinDiagram(dfam, n))
            report.add_check(
                f"aggregates-{family}-{dfam}{n}",
                formulas.expected_aggregates(spec),
                formulas.aggregate_totals_closed(spec),
            )
            # the polynomial route agrees; skipped for path D9, whose
            # polynomial needs the largest interval enumeration
            if (family, dfam, n) != (PATH, "D", 9):
                report.add_check(
                    f"aggregates-poly-route-{family}-{dfam}{n}",
                    formulas.aggregate_totals_closed(spec),
                    formulas.aggregate_dims(spec),
                )


def _suite_structural(report: Report, max_rank: int) -> None:
    # palindromicity and unimodality of every shifted dimension polynomial
    # (path D9 and E8 sit in the tables suite; they need the two largest
    # interval enumerations)
    specs = [
        AlgebraSpec(family, DynkinDiagram(dfam, n))
        for family, d_ranks, e_ranks in (
            (PREPROJECTIVE, range(4, 10), (6, 7, 8)),
            (PATH, range(4, 9), (6, 7)),
        )
        for dfam, ranks in (("A", range(1, 10)), ("D", d_ranks), ("E", e_ranks))
        for n in ranks
    ]
    ok = True
    for spec in specs:
        n = spec.diagram.rank
        shifted = formulas.d_polynomial(spec).shifted(-1)
        if not (shifted.is_palindromic(n - 1) and shifted.is_unimodal()):
            ok = False
    report.add_pass_fail("all-shifted-d-palindromic-unimodal", ok)
    # descent and Narayana polynomials: palindromic, correct totals.
    # Narayana ranges stop where the enumeration gets expensive; the
    # larger ranks are covered by the tables suite.
    stats_ok = True
    for dfam, eul_ranks, nar_ranks in (
        ("A", range(1, 10), range(1, 10)),
        ("D", range(4, 9), range(4, 8)),
        ("E", (6, 7), (6,)),
    ):
        for n in eul_ranks:
            diagram = DynkinDiagram(dfam, n)
            eul = weyl.eulerian_poly(diagram)
            if not eul.is_palindromic(n) or eul(1) != diagram.group_order():
                stats_ok = False
        for n in nar_ranks:
            diagram = DynkinDiagram(dfam, n)
            nar = weyl.narayana_poly(diagram)
            if not nar.is_palindromic(n) or nar(1) != _catalan_count(diagram):
                stats_ok = False
    report.add_pass_fail("group-statistics-palindromic-with-known-totals", stats_ok)
    # purity and maximal-face counts of the complexes
    purity_ok = True
    for n in range(1, max_rank + 1):
        for bits in range(1 << (n - 1)):
            orientation = "".join("+" if (bits >> i) & 1 else "-" for i in range(n - 1))
            complex_ = hereditary.tau_rigid_complex(
                hereditary.OrientedQuiver.line(n, orientation)
            )
            if complex_.maximal_face_count != _binom(2 * (n + 1), n + 1) // (n + 2):
                purity_ok = False
    report.add_pass_fail("complex-purity-and-maximal-face-counts", purity_ok)
    # product rule and link decomposition on oracle instances
    q1 = hereditary.OrientedQuiver.line(1)
    q2 = hereditary.OrientedQuiver.line(2)
    report.add_pass_fail(
        "disjoint-union-product-rule",
        hereditary.disjoint_union_d_check(q1, q1)
        and hereditary.disjoint_union_d_check(q1, q2)
        and hereditary.disjoint_union_d_check(q2, q2),
    )
    link_ok = True
    for n in range(1, min(max_rank, 5) + 1):
        complex_ = hereditary.tau_rigid_complex(hereditary.OrientedQuiver.line(n))
        total = Polynomial()
        for idx in complex_.module_vertices():
            total = total + complex_.vertices[idx].dim * complex_.link_f_polynomial(idx)
        if total != complex_.d_polynomial():
            link_ok = False
    report.add_pass_fail("link-decomposition-identity", link_ok)


def _catalan_count(d: DynkinDiagram) -> int:
    return formulas.catalan_count(d)


def cmd_verify(args) -> Report:
    report = Report(command=f"verify --suite {args.suite}")
    suite = args.suite
    if suite in ("tables", "all"):
        _suite_tables(report)
    if suite in ("examples", "all"):
        _suite_examples(report)
    if suite in ("oracles", "all"):
        _suite_oracles(report, args.max_rank)
    if suite in ("genfun", "all"):
        _suite_genfun(report, args.order)
    if suite in ("aggregates", "all"):
        _suite_aggregates(report)
    if suite in ("structural", "all"):
        _suite_structural(report, args.max_rank)
    return report


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="taupoly", description=__doc__)
    parser.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    parser.add_argument("--enable-e8", action="store_true", help="allow full E8 enumeration")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="compute a polynomial of an algebra")
    p.add_argument("--family", required=True)
    p.add_argument("--diagram", required=True)
    p.add_argument("--kind", required=True, choices=("d", "f", "h"))
    p.add_argument("--verify", action="store_true")
    p.set_defaults(fn=cmd_poly)

    p = sub.add_parser("eulerian", help="descent-count polynomial of a diagram or union")
    p.add_argument("diagram")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(fn=cmd_eulerian)

    p = sub.add_parser("narayana", help="Narayana polynomial of a diagram or union")
    p.add_argument("diagram")
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(fn=cmd_narayana)

    p = sub.add_parser("dim-orbit", help="per-vertex orbit dimension totals")
    p.add_argument("--family", default="ppa")
    p.add_argument("--type", required=True)
    p.add_argument("--rank", type=int, required=True)
    p.add_argument("--vertex", type=int)
    p.add_argument("--oracle", action="store_true")
    p.set_defaults(fn=cmd_dim_orbit)

    p = sub.add_parser("oracle", help="brute-force oracles")
    orc = p.add_subparsers(dest="oracle_command", required=True)
    po = orc.add_parser("path", help="complex enumeration for a type A quiver")
    po.add_argument("--type", default="A")
    po.add_argument("--rank", type=int, required=True)
    po.add_argument("--orientation")
    po.add_argument("--kind", default="d", choices=("d", "f", "h"))
    po.set_defaults(fn=cmd_oracle)
    pt = orc.add_parser("tau-orbit", help="translate-orbit dimension totals")
    pt.add_argument("--type", required=True)
    pt.add_argument("--vertex", type=int)
    pt.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("table", help="recompute a published table")
    p.add_argument("number", type=int, choices=range(1, 7))
    p.set_defaults(fn=cmd_table)

    p = sub.add_parser("aggregates", help="leading and constant dimension totals")
    p.add_argument("--family", required=True)
    p.add_argument("--diagram", required=True)
    p.set_defaults(fn=cmd_aggregates)

    p = sub.add_parser("genfun", help="generating-function coefficient families")
    p.add_argument("name")
    p.add_argument("--order", type=int, default=series.DEFAULT_ORDER)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(fn=cmd_genfun)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument(
        "--suite",
        default="all",
        choices=("tables", "examples", "oracles", "genfun", "aggregates", "structural", "all"),
    )
    p.add_argument("--order", type=int, default=series.DEFAULT_ORDER)
    p.add_argument("--max-rank", type=int, default=5)
    p.set_defaults(fn=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        report = args.fn(args)
        return _emit(report, args.format)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FeatureDisabled as exc:
        print(f"feature disabled: {exc}", file=sys.stderr)
        return EXIT_FEATURE_DISABLED
    except TaupolyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    raise SystemExit(main())
