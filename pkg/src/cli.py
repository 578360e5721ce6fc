"""
cli.py
------
Command-line front end.

    roots TYPE
    weyl TYPE [SUBSYSTEM]
    char TYPE WEIGHT
    spin TYPE SUBSYSTEM
    index | hd | spectrum TYPE SUBSYSTEM WEIGHT
    lift TYPE K_SIMPLE H_SIMPLE WEIGHT [--sign-q ±1]
    verify CATALOG [--suite ...] [--seed N] [--checks-csv PATH]

Weights are comma-separated rationals in fundamental-weight coordinates
("1,1/2"); subsystems are semicolon-separated simple-root coordinate vectors
("1,0;1,2"); an empty string is the zero weight / the Cartan subalgebra.
Put "--" before arguments that start with "-".

The JSON payload goes to standard output; progress and errors go to
standard error. Exit codes: 0 ok, 1 failed identity, 2 usage, 3 validation,
4 resource cap.
"""

import argparse
import sys
import time
from typing import Any, Callable, Dict, List, Optional

from src.catalog import build_catalog, load_catalog
from src.charring import irreducible_character, weyl_dimension
from src.config import DEFAULT_CAPS, DEFAULT_SEED, Caps
from src.dirac import (
    check_infinitesimal_character,
    dirac_index,
    dsquared_spectrum,
    kernel_types,
    kostant_hd,
    kostant_index,
)
from src.errors import CartanTypeError, ConsistencyError, ResourceCapError, ValidationError
from src.lifting import build_endoscopic_datum, lift_discrete_series, verify_lift_identity
from src.report import RunReport, render_character, render_report_text, write_checks_csv, write_report
from src.rootsys import CartanType, build_root_system, coset_representatives, enumerate_weyl, validate_subsystem
from src.serialize import (
    character_to_json,
    conjugacy_to_json,
    dumps,
    index_report,
    kostant_to_json,
    lift_check_to_json,
    lift_to_json,
    roots_payload,
    spectrum_to_json,
    spin_payload,
    weyl_payload,
)
from src.spinmod import spin_characters, transfer_factor
from src.verify import SUITES, run_verification
from src.weights import format_weight, parse_root_vectors, parse_weight, weight_to_strings


def _cartan_type(text: str) -> CartanType:
    try:
        return CartanType.parse(text)
    except CartanTypeError as e:
        raise argparse.ArgumentTypeError(str(e)) from e


def _sign(text: str) -> int:
    if text not in ("1", "+1", "-1"):
        raise argparse.ArgumentTypeError(f"sign must be +1 or -1, got {text!r}")
    return int(text)


# ----------------------------------------------------------
# PARSER
# ----------------------------------------------------------
def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="JSON payload (default)")
    fmt.add_argument("--text", dest="fmt", action="store_const", const="text", help="human-readable output")
    common.add_argument("--max-rank", type=int, default=None)
    common.add_argument("--max-weyl-order", type=int, default=None)
    common.add_argument("--max-terms", type=int, default=None)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--quiet", action="store_true", help="suppress progress on standard error")
    common.add_argument("--report-file", default=None, help="write the full run report (with wall time) as JSON")

    parser = argparse.ArgumentParser(
        prog="dirac-index",
        description="Dirac index, Kostant cohomology, transfer factors and lifting on root data.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("roots", parents=[common], help="root system data")
    p.add_argument("type", type=_cartan_type)

    p = sub.add_parser("weyl", parents=[common], help="Weyl group, or W^1 for a subsystem")
    p.add_argument("type", type=_cartan_type)
    p.add_argument("subsystem", nargs="?", default=None)

    p = sub.add_parser("char", parents=[common], help="irreducible character")
    p.add_argument("type", type=_cartan_type)
    p.add_argument("weight")

    p = sub.add_parser("spin", parents=[common], help="spin characters and transfer factor")
    p.add_argument("type", type=_cartan_type)
    p.add_argument("subsystem")

    for name, text in [
        ("index", "Dirac index over the subsystem"),
        ("hd", "Kostant Dirac cohomology"),
        ("spectrum", "D^2 eigenvalues on the r-types of V (x) S"),
    ]:
        p = sub.add_parser(name, parents=[common], help=text)
        p.add_argument("type", type=_cartan_type)
        p.add_argument("subsystem")
        p.add_argument("weight")

    p = sub.add_parser("lift", parents=[common], help="lift a discrete-series parameter")
    p.add_argument("type", type=_cartan_type)
    p.add_argument("k_simple")
    p.add_argument("h_simple")
    p.add_argument("weight")
    p.add_argument("--sign-q", type=_sign, default=1)

    p = sub.add_parser("verify", parents=[common], help="run acceptance suites on a catalog")
    p.add_argument("catalog")
    p.add_argument("--suite", choices=SUITES + ("all",), default="all")
    p.add_argument("--checks-csv", default=None, help="write every check record as CSV")

    return parser


def _caps(args) -> Caps:
    return DEFAULT_CAPS.merged(
        max_rank=args.max_rank,
        max_weyl_order=args.max_weyl_order,
        max_terms=args.max_terms,
    )


def _pair(args):
    rs = build_root_system(args.type, _caps(args))
    sub_system = validate_subsystem(rs, parse_root_vectors(args.subsystem, rs.rank))
    return rs, sub_system


# ----------------------------------------------------------
# SUBCOMMANDS
# ----------------------------------------------------------
# each returns (payload, text)

def cmd_roots(args):
    rs = build_root_system(args.type, _caps(args))
    payload = roots_payload(rs)
    text = "\n".join(
        [
            f"{rs.name}: rank {rs.rank}, |W| = {rs.weyl_order}",
            f"Cartan matrix: {payload['cartan_matrix']}",
            f"positive roots ({len(rs.positive_roots)}): "
            + " ".join("(" + ",".join(map(str, rc)) + ")" for rc in rs.positive_root_coords),
            f"rho: {format_weight(rs.rho)}",
        ]
    )
    return payload, text


def cmd_weyl(args):
    rs = build_root_system(args.type, _caps(args))
    if args.subsystem is None:
        elements = enumerate_weyl(rs)
        payload = weyl_payload(rs.name, elements, coset=False)
    else:
        sub_system = validate_subsystem(rs, parse_root_vectors(args.subsystem, rs.rank))
        elements = coset_representatives(rs, sub_system)
        payload = weyl_payload(sub_system.name, elements, coset=True)
    lines = [f"{payload['kind']} of {payload['system']}: {len(elements)} elements"]
    lines += [f"  {w!r}  length {w.length}  det {w.det:+d}" for w in elements]
    return payload, "\n".join(lines)


def cmd_char(args):
    rs = build_root_system(args.type, _caps(args))
    lam = parse_weight(args.weight, rs.rank)
    chi = irreducible_character(rs, lam)
    payload = {
        "type": rs.name,
        "highest_weight": weight_to_strings(lam),
        "dimension": weyl_dimension(rs, lam),
        "mass": chi.mass(),
        "character": character_to_json(chi),
    }
    return payload, f"ch V{format_weight(lam)} (dim {payload['dimension']}) = {render_character(chi)}"


def cmd_spin(args):
    rs, sub_system = _pair(args)
    pair = spin_characters(rs, sub_system)
    tf = transfer_factor(rs, sub_system)
    payload = {"pair": sub_system.name, **spin_payload(pair, tf)}
    text = "\n".join(
        [
            f"rho_n = {format_weight(pair.rho_n)}",
            f"S+ = {render_character(pair.s_plus)}",
            f"S- = {render_character(pair.s_minus)}",
            f"S+ - S- = {render_character(tf)}",
        ]
    )
    return payload, text


def cmd_index(args):
    rs, sub_system = _pair(args)
    lam = parse_weight(args.weight, rs.rank)
    index = dirac_index(rs, sub_system, lam).decomposition
    components = kostant_hd(rs, sub_system, lam)
    kernel = kernel_types(dsquared_spectrum(rs, sub_system, lam))
    agreements = {
        "index_equals_kostant": index.as_multiset() == kostant_index(components),
        "kostant_in_kernel": {c.mu for c in components} <= {e.mu for e in kernel},
    }
    payload = index_report(sub_system.name, lam, index, components, kernel, agreements)
    text = " + ".join(f"({c:+d}) E{format_weight(mu)}" for mu, c in index.components) or "0"
    return payload, f"I(V{format_weight(lam)}) = {text}"


def cmd_hd(args):
    rs, sub_system = _pair(args)
    lam = parse_weight(args.weight, rs.rank)
    components = kostant_hd(rs, sub_system, lam)
    report = check_infinitesimal_character(rs, sub_system, lam, components)
    payload = {
        "pair": sub_system.name,
        "lambda": weight_to_strings(lam),
        "kostant": kostant_to_json(components),
        "infinitesimal_character": conjugacy_to_json(report),
    }
    lines = [f"H_D(V{format_weight(lam)}) over {sub_system.name}:"]
    lines += [f"  E{format_weight(c.mu)}  parity {c.parity:+d}  w = {c.w!r}" for c in components]
    return payload, "\n".join(lines)


def cmd_spectrum(args):
    rs, sub_system = _pair(args)
    lam = parse_weight(args.weight, rs.rank)
    entries = dsquared_spectrum(rs, sub_system, lam)
    payload = {
        "pair": sub_system.name,
        "lambda": weight_to_strings(lam),
        "spectrum": spectrum_to_json(entries),
        "kernel": spectrum_to_json(kernel_types(entries)),
    }
    lines = [f"D^2 on V{format_weight(lam)} (x) S over {sub_system.name}:"]
    lines += [f"  E{format_weight(e.mu)} x{e.mult}: {e.eigenvalue}" for e in entries]
    return payload, "\n".join(lines)


def cmd_lift(args):
    caps = _caps(args)
    rank = args.type.rank
    datum = build_endoscopic_datum(
        args.type,
        parse_root_vectors(args.k_simple, rank),
        parse_root_vectors(args.h_simple, rank),
        args.sign_q,
        caps,
    )
    lam = parse_weight(args.weight, rank)
    terms = lift_discrete_series(datum, lam)
    check = verify_lift_identity(datum, lam)
    payload = {
        "datum": datum.name,
        "parameter": weight_to_strings(lam),
        "sign_q": datum.sign_q,
        "terms": lift_to_json(terms),
        "check": lift_check_to_json(check),
    }
    lines = [f"lift of {format_weight(lam)} to {datum.h.name}:"]
    lines += [f"  {t['sign']:+d} {t['parameter']}" for t in payload["terms"]]
    lines.append(f"identity holds: {check.holds}")
    return payload, "\n".join(lines)


COMPUTE: Dict[str, Callable] = {
    "roots": cmd_roots,
    "weyl": cmd_weyl,
    "char": cmd_char,
    "spin": cmd_spin,
    "index": cmd_index,
    "hd": cmd_hd,
    "spectrum": cmd_spectrum,
    "lift": cmd_lift,
}


def cmd_verify(args, argv: List[str]) -> RunReport:
    verbose = not args.quiet
    overrides = {
        k: v
        for k, v in {
            "max_rank": args.max_rank,
            "max_weyl_order": args.max_weyl_order,
            "max_terms": args.max_terms,
        }.items()
        if v is not None
    }
    raw = load_catalog(args.catalog)
    catalog = build_catalog(raw, cap_overrides=overrides, verbose=verbose)
    seed = catalog.seed if args.seed is None else args.seed
    log = run_verification(catalog, suite=args.suite, seed=seed, verbose=verbose)
    return RunReport(command=argv, seed=seed, checks=log.to_frame(), counters=log.counters)


# ----------------------------------------------------------
# ENTRY POINT
# ----------------------------------------------------------
def _emit(args, payload: Any, text: str):
    if args.fmt == "text":
        print(text)
    else:
        print(dumps(payload))


def main(argv: Optional[List[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    def fail(code: int, message: str) -> int:
        print(f"[cli] error: {message}", file=sys.stderr)
        return code

    started = time.perf_counter()
    try:
        if args.command == "verify":
            report = cmd_verify(args, argv)
            report.wall_time = time.perf_counter() - started
            if args.checks_csv:
                path = write_checks_csv(report, args.checks_csv)
                if not args.quiet:
                    print(f"[cli] Saved check records → {path}", file=sys.stderr)
            code = 0 if report.passed else 1
            _emit(args, report.to_dict(), render_report_text(report))
        else:
            payload, text = COMPUTE[args.command](args)
            report = RunReport(command=argv, seed=args.seed if args.seed is not None else DEFAULT_SEED, payload=payload)
            report.wall_time = time.perf_counter() - started
            code = 0
            _emit(args, payload, text)
    except FileNotFoundError as e:
        return fail(2, str(e))
    except CartanTypeError as e:
        return fail(2, str(e))
    except ValidationError as e:
        return fail(3, str(e))
    except ResourceCapError as e:
        return fail(4, str(e))
    except ConsistencyError as e:
        return fail(1, f"internal identity failed: {e}")
    except ValueError as e:
        # unreadable catalog
        return fail(3, str(e))

    if args.report_file:
        path = write_report(report, args.report_file)
        if not args.quiet:
            print(f"[cli] Saved run report → {path}", file=sys.stderr)
    return code
