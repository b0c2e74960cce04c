"""Command-line interface: ``nilrev <subcommand> ...``.

Exit codes: 0 success, 1 parse/usage error, 2 well-formed input for which
the requested reverser does not exist, a precondition fails, or a
certificate does not check.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .campaign import MODES, run_campaign
from .certdoc import CertificateDocument
from .certificate import GroupTag, Level, Method, check_certificate, make_certificate
from .errors import MalformedCertificate, NilrevError, ParseError
from .expmap import exp, log
from .jordan import jordan_structure
from .nilmat import format_matrix, parse_matrix_file
from .oracle import group_reverser_feasible, nonreal_search, reverser_feasible
from .reverser import ParityInfeasible, diagonal_parity_reverser, reverse_group_star, reverse_star
from .scalar import ScalarRing

EXIT_OK, EXIT_PARSE, EXIT_NEGATIVE = 0, 1, 2

_GROUPS = {"unipotent": GroupTag.UNIPOTENT, "signed": GroupTag.SIGNED_UNIPOTENT}


def _read_text(args):
    if getattr(args, "matrix", None) is not None:
        return args.matrix
    if args.input in (None, "-"):
        return sys.stdin.read()
    with open(args.input, encoding="utf-8") as fh:
        return fh.read()


def _read_matrix(args):
    ring = ScalarRing(args.ring) if args.ring else None
    return parse_matrix_file(_read_text(args), ring)


def _emit(data, args, plain_lines=None):
    if args.plain and plain_lines is not None:
        for line in plain_lines:
            print(line)
    else:
        print(json.dumps(data, indent=2, sort_keys=True))


def _fail(args, status, **info):
    _emit({"status": status, **info}, args, [f"{status}: {info.get('message', '')}".rstrip(": ")])
    return EXIT_NEGATIVE


def _precondition(args, exc):
    return _fail(args, "precondition_failed", error=type(exc).__name__, message=str(exc))


def _certificate_output(args, cert):
    doc = CertificateDocument.emit(cert)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(doc.to_json())
    plain = [
        f"g = {format_matrix(cert.g)}",
        f"involution = {str(cert.involution).lower()}",
        f"verified = {str(doc.verified).lower()}",
    ]
    _emit(doc.to_dict(), args, plain)
    return EXIT_OK if doc.verified else EXIT_NEGATIVE


def cmd_reverse(args):
    X = _read_matrix(args)
    level = Level(args.level)
    group = _GROUPS[args.group]
    try:
        if args.method == "oracle":
            if level is Level.ALGEBRA:
                result = reverser_feasible(X, group, dim_limit=args.dim_limit)
            else:
                result = group_reverser_feasible(X, group, dim_limit=args.dim_limit)
            if not result.feasible:
                return _fail(
                    args,
                    "infeasible",
                    message=f"no reverser in the {group.value} group",
                    patterns_tried=result.patterns_tried,
                )
            cert = make_certificate(X, result.g, level, Method.ORACLE, group)
        elif group is GroupTag.UNIPOTENT:
            return _fail(
                args,
                "unsupported",
                message="induction and parity build signed reversers; use --method oracle",
            )
        elif args.method == "parity":
            if level is Level.GROUP:
                return _fail(args, "unsupported", message="parity works at the algebra level only")
            cert = diagonal_parity_reverser(X)
            if isinstance(cert, ParityInfeasible):
                cycle = [list(e) for e in cert.cycle]
                return _fail(
                    args,
                    "infeasible",
                    message="no diagonal reverser: odd constraint cycle "
                    + " ".join(f"({a},{b})" for a, b in cert.cycle),
                    cycle=cycle,
                )
        elif level is Level.GROUP:
            cert = reverse_group_star(X)
        else:
            cert = reverse_star(X)
    except NilrevError as exc:
        if isinstance(exc, ParseError):
            raise
        return _precondition(args, exc)
    return _certificate_output(args, cert)


def cmd_check(args):
    text = _read_text(args)
    doc = CertificateDocument.from_json(text)
    try:
        ok = check_certificate(doc.certificate)
    except MalformedCertificate as exc:
        raise ParseError(f"malformed certificate: {exc}") from None
    _emit({"valid": ok}, args, ["valid" if ok else "INVALID"])
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_exp(args):
    X = _read_matrix(args)
    try:
        result = exp(X)
    except NilrevError as exc:
        return _precondition(args, exc)
    _emit({"result": format_matrix(result)}, args, [format_matrix(result)])
    return EXIT_OK


def cmd_log(args):
    u = _read_matrix(args)
    try:
        result = log(u)
    except NilrevError as exc:
        return _precondition(args, exc)
    _emit({"result": format_matrix(result)}, args, [format_matrix(result)])
    return EXIT_OK


def cmd_jordan(args):
    X = _read_matrix(args)
    try:
        data = jordan_structure(X)
    except NilrevError as exc:
        return _precondition(args, exc)
    labels = [str(lab) for lab in data.basis_labels]
    _emit(
        {
            "partition": str(data.partition),
            "ordered_basis": labels,
            "J": format_matrix(data.J),
            "beta": format_matrix(data.beta),
        },
        args,
        [str(data.partition), "ordered basis: " + ", ".join(labels)],
    )
    return EXIT_OK


def cmd_oracle(args):
    M = _read_matrix(args)
    group = _GROUPS[args.group]
    normalize = not args.full
    try:
        if args.level == "algebra":
            result = reverser_feasible(M, group, normalize=normalize, dim_limit=args.dim_limit)
        else:
            result = group_reverser_feasible(M, group, normalize=normalize, dim_limit=args.dim_limit)
    except NilrevError as exc:
        return _precondition(args, exc)
    data = {
        "status": result.status,
        "level": result.level.value,
        "group": result.group_tag.value,
        "patterns_tried": result.patterns_tried,
        "g": format_matrix(result.g) if result.g is not None else None,
    }
    plain = [result.status, f"patterns tried: {result.patterns_tried}"]
    if result.g is not None:
        plain.append(f"g = {format_matrix(result.g)}")
    _emit(data, args, plain)
    return EXIT_OK if result.feasible else EXIT_NEGATIVE


def cmd_search(args):
    try:
        report = nonreal_search(args.n, ScalarRing(args.ring), args.budget, args.seed, dim_limit=args.dim_limit)
    except NilrevError as exc:
        return _precondition(args, exc)
    data = report.to_dict()
    plain = [
        f"sampled {data['sampled']}, feasible {data['feasible']}, infeasible {len(data['infeasible'])}"
    ] + [f"candidate: {m}" for m in data["infeasible"]]
    _emit(data, args, plain)
    return EXIT_OK


def cmd_campaign(args):
    try:
        report = run_campaign(args.mode, ScalarRing(args.ring), args.n_max, args.trials, args.seed)
    except NilrevError as exc:
        return _precondition(args, exc)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    plain = [
        f"{report['mode']} {report['ring']}: {report['successes']}/{report['trials']} ok",
    ] + [f"FAIL trial {f['trial']}: {f['matrix']} ({f['detail']})" for f in report["failures"]]
    _emit(report, args, plain)
    return EXIT_OK if report["ok"] else EXIT_NEGATIVE


def _add_input(p):
    p.add_argument("input", nargs="?", default="-", help="matrix file (default: stdin)")
    p.add_argument("-m", "--matrix", help="matrix text given inline instead of a file")
    p.add_argument("--ring", choices=[r.value for r in ScalarRing], help="scalar ring if no header")


def _add_output(p):
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", dest="plain", action="store_false", help="JSON output (default)")
    group.add_argument("--plain", dest="plain", action="store_true", help="human-readable output")
    p.set_defaults(plain=False)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nilrev",
        description="Exact reversers of nilpotent and unipotent upper triangular matrices.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reverse", help="construct a reverser and emit a certificate")
    _add_input(p)
    _add_output(p)
    p.add_argument("--method", choices=["induction", "parity", "oracle"], default="induction")
    p.add_argument("--group", choices=sorted(_GROUPS), default="signed")
    p.add_argument("--level", choices=["algebra", "group"], default="algebra")
    p.add_argument("--dim-limit", type=int, default=None)
    p.add_argument("-o", "--output", help="also write the certificate JSON to this file")
    p.set_defaults(func=cmd_reverse)

    p = sub.add_parser("check", help="re-verify a certificate file")
    p.add_argument("input", nargs="?", default="-", help="certificate JSON (default: stdin)")
    _add_output(p)
    p.set_defaults(func=cmd_check)

    for name, func, text in (
        ("exp", cmd_exp, "exponential of a strictly upper matrix"),
        ("log", cmd_log, "logarithm of a unipotent matrix"),
        ("jordan", cmd_jordan, "Jordan partition and ordered basis"),
    ):
        p = sub.add_parser(name, help=text)
        _add_input(p)
        _add_output(p)
        p.set_defaults(func=func, plain=True)

    p = sub.add_parser("oracle", help="decide reverser existence by linear feasibility")
    _add_input(p)
    _add_output(p)
    p.add_argument("--group", choices=sorted(_GROUPS), default="signed")
    p.add_argument("--level", choices=["algebra", "group"], default="algebra")
    p.add_argument("--full", action="store_true", help="enumerate all 2^n sign patterns")
    p.add_argument("--dim-limit", type=int, default=None)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("search", help="sample signed unipotent matrices looking for non-real ones")
    _add_output(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--ring", choices=[r.value for r in ScalarRing], default="rat")
    p.add_argument("--budget", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--dim-limit", type=int, default=None)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("campaign", help="seeded randomized check of one statement")
    _add_output(p)
    p.add_argument("--mode", choices=MODES, default="thm14")
    p.add_argument("--ring", choices=[r.value for r in ScalarRing], default="rat")
    p.add_argument("--n-max", type=int, default=5)
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_campaign)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
