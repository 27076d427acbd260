"""Command-line entry point.

    braidbench build an|coend|double --n N
    braidbench check hopf|pairing|rmatrix|yd|monad --n N
    braidbench search augmentation|yd --n N [--expect empty]
    braidbench report --n N

Exit status is 0 iff every selected check passes (for searches: iff the
outcome matches ``--expect`` when given).  Usage errors exit with 2.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .report import Report

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _need_an(n: int) -> None:
    if n < 2:
        raise UsageError(f"A_n needs n >= 2 (got {n})")


def _need_positive(n: int) -> None:
    if n < 1:
        raise UsageError(f"n must be positive (got {n})")


def _parse_probes(text: str | None, limit: int) -> list[int] | None:
    if text is None:
        return None
    try:
        out = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"--probes expects a comma-separated list of indices, got {text!r}") from None
    bad = [i for i in out if not 0 <= i < limit]
    if bad or not out:
        raise UsageError(f"--probes indices must lie in [0, {limit})")
    return out


# ---------------------------------------------------------------------------
# builders

def _coend(n):
    from .coendmod import build_coend

    return build_coend(n)


def _double(n, cd=None):
    from .doublemod import build_double
    from .hopfcore import build_An

    cd = cd or _coend(n)
    return build_double(build_An(n), cd)


def cmd_build(args) -> tuple[Report, bool]:
    from .hopfcore import build_An, check_hopf

    n = args.n
    if args.target == "an":
        _need_an(n)
        H = build_An(n)
    elif args.target == "coend":
        _need_positive(n)
        H = _coend(n).hopf
    else:
        _need_an(n)
        H, _rd = _double(n)
    rep = Report({"n": n, "command": "build", "construction": args.target})
    if not args.no_verify:
        check_hopf(H, report=rep)
    rep.extra["structure"] = H.to_json()
    return rep, rep.ok


# ---------------------------------------------------------------------------
# checks

def cmd_check(args) -> tuple[Report, bool]:
    n = args.n
    if args.probes is not None and args.target not in ("rmatrix", "monad"):
        raise UsageError("--probes applies to `check rmatrix` and `check monad` only")
    if args.which is not None and args.target != "monad":
        raise UsageError("--which applies to `check monad` only")
    rep = Report({"n": n, "command": "check", "suite": args.target})
    run = {
        "hopf": _check_hopf,
        "pairing": _check_pairing,
        "rmatrix": _check_rmatrix,
        "yd": _check_yd,
        "monad": _check_monad,
    }[args.target]
    run(args, rep)
    return rep, rep.ok


def _check_hopf(args, rep: Report):
    from .hopfcore import antipode_from_fusion, build_An, check_hopf

    which = args.algebra or "an"
    if which == "coend":
        _need_positive(args.n)
        H = _coend(args.n).hopf
    else:
        _need_an(args.n)
        H = build_An(args.n) if which == "an" else _double(args.n)[0]
    rep.instance["algebra"] = H.name
    check_hopf(H, report=rep)
    if which == "an":
        rep.compare("antipode.from_fusion", antipode_from_fusion(H), H.S)


def _check_pairing(args, rep: Report):
    from .coendmod import check_coend_identities, check_pairing
    from .hopfcore import check_hopf

    _need_positive(args.n)
    cd = _coend(args.n)
    check_hopf(cd.hopf, report=rep, prefix="coend.")
    check_pairing(cd, rep)
    check_coend_identities(cd, rep)


def _check_rmatrix(args, rep: Report):
    from .doublemod import RMatrixData, check_rmatrix

    which = args.algebra or "double"
    if which == "coend":
        _need_positive(args.n)
        cd = _coend(args.n)
        rd = RMatrixData(cd.hopf, cd, cd.rmat)
    else:
        _need_an(args.n)
        _H, rd = _double(args.n)
    rep.instance["algebra"] = rd.algebra.name
    degrees = _parse_probes(args.probes, args.n)
    check_rmatrix(rd, rep, degrees=degrees)


def _check_yd(args, rep: Report):
    from .doublemod import adjoint_yd, trivial_center, yd_braiding_check, yd_center_check, yd_check, yd_unit
    from .hopfcore import build_An, regular_module, trivial_module

    _need_an(args.n)
    cd = _coend(args.n)
    A = build_An(args.n)
    Ac = trivial_center(cd, A.carrier)
    Y = adjoint_yd(cd, A, Ac)
    yd_check(cd, Y, rep, prefix="adjoint.")
    yd_braiding_check(cd, Y, Y, rep, prefix="adjoint.")
    U = yd_unit(cd, A, Ac)
    yd_check(cd, U, rep, prefix="unit.")
    yd_center_check(cd, U, [trivial_module(A), regular_module(A)], rep, prefix="unit.")


def _check_monad(args, rep: Report):
    from .doublemod import RMatrixData
    from .hopfcore import build_An
    from .monadmod import build_dA, center_probes, check_monad_suite, free_monad

    which = args.which or "dA"
    if which == "freeC":
        _need_positive(args.n)
        cd = _coend(args.n)
        T = free_monad(cd.hopf, cd, RMatrixData(cd.hopf, cd, cd.rmat))
    else:
        _need_an(args.n)
        cd = _coend(args.n)
        A = build_An(args.n)
        if which == "freeDA":
            H, rd = _double(args.n, cd)
            T = free_monad(H, cd, rd)
        else:
            T = build_dA(A, cd)
    probes = center_probes(cd)
    idx = _parse_probes(args.probes, len(probes))
    if idx is not None:
        probes = [probes[i] for i in idx]
    rep.instance["monad"] = T.name
    check_monad_suite(T, probes, rep)


# ---------------------------------------------------------------------------
# searches

def cmd_search(args) -> tuple[Report, bool]:
    n = args.n
    rep = Report({"n": n, "command": "search", "search": args.target})
    if args.target == "augmentation":
        from .monadmod import augmentation_search

        if n not in (2, 3):
            raise UsageError("augmentation search supports n in {2, 3}")
        cert = augmentation_search(n)
        rep.extra["certificate"] = cert
        statuses = {"_": cert["status"]}
    else:
        statuses = _search_yd(args, rep)
    expect = args.expect
    if expect is None:
        ok = all(s != "inconclusive" for s in statuses.values())
        rep.record("search.conclusive", ok)
    else:
        ok = all(s == expect for s in statuses.values())
        rep.record(f"search.expect_{expect}", ok, None if ok else {"statuses": statuses})
    return rep, ok


def _search_yd(args, rep: Report) -> dict:
    from .coendmod import character_module
    from .doublemod import trivial_center, yd_search
    from .hopfcore import build_An

    n = args.n
    _need_an(n)
    cd = _coend(n)
    A = build_An(n)
    Ac = trivial_center(cd, A.carrier)
    ch = args.character
    if ch == "nontrivial":
        chars = list(range(1, n))
    elif ch == "trivial":
        chars = [0]
    elif ch == "all":
        chars = list(range(n))
    else:
        try:
            chars = [int(ch) % n]
        except ValueError:
            raise UsageError(f"--character must be trivial, nontrivial, all or an integer, got {ch!r}") from None
    certs = {}
    statuses = {}
    for c in chars:
        cert = yd_search(cd, A, Ac, character_module(cd, 0, c))
        certs[str(c)] = cert
        statuses[str(c)] = cert["status"]
    rep.extra["certificates"] = certs
    return statuses


# ---------------------------------------------------------------------------
# report

def cmd_report(args) -> tuple[Report, bool]:
    from .coendmod import check_coend_identities, check_pairing
    from .doublemod import check_rmatrix
    from .hopfcore import build_An, check_hopf

    n = args.n
    _need_an(n)
    rep = Report({"n": n, "command": "report"})
    A = build_An(n)
    check_hopf(A, report=rep, prefix="an.")
    cd = _coend(n)
    check_hopf(cd.hopf, report=rep, prefix="coend.")
    check_pairing(cd, rep)
    check_coend_identities(cd, rep)
    H, rd = _double(n, cd)
    check_hopf(H, report=rep, prefix="double.")
    if n <= 3:
        check_rmatrix(rd, rep, prefix="double.")
    else:
        from .report import CheckRecord, INCONCLUSIVE

        rep.add(CheckRecord("double.rmatrix", INCONCLUSIVE, detail="skipped for n > 3; run `check rmatrix`"))
    return rep, rep.ok


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, required=True, help="modulus of the grading (B_n)")
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--dsl-dir", help="directory with the diagram transcriptions (*.dsl)")
    common.add_argument("--timings", action="store_true", help="append a timings block to JSON output")

    p = argparse.ArgumentParser(prog="braidbench", description="Exact checks for braided Hopf algebras in B_n.")
    p.add_argument("--version", action="version", version=f"braidbench {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("build", parents=[common], help="build a Hopf algebra and print its structure")
    b.add_argument("target", choices=("an", "coend", "double"))
    b.add_argument("--no-verify", action="store_true", help="skip the Hopf axiom suite")

    c = sub.add_parser("check", parents=[common], help="run an axiom suite")
    c.add_argument("target", choices=("hopf", "pairing", "rmatrix", "yd", "monad"))
    c.add_argument("--algebra", choices=("an", "coend", "double"), help="algebra for hopf/rmatrix")
    c.add_argument("--which", choices=("dA", "freeC", "freeDA"), help="monad for `check monad`")
    c.add_argument("--probes", help="comma-separated probe indices (degrees for rmatrix)")

    s = sub.add_parser("search", parents=[common], help="run a search with a certificate")
    s.add_argument("target", choices=("augmentation", "yd"))
    s.add_argument("--expect", choices=("empty", "found"))
    s.add_argument("--character", default="nontrivial", help="trivial, nontrivial, all or an integer")

    sub.add_parser("report", parents=[common], help="the standard suites at one n")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return int(err.code) if isinstance(err.code, int) else EXIT_USAGE
    handler = {"build": cmd_build, "check": cmd_check, "search": cmd_search, "report": cmd_report}[args.command]
    try:
        if args.dsl_dir is not None:
            from .hopfcore import use_dsl_dir

            use_dsl_dir(args.dsl_dir)
        rep, ok = handler(args)
    except (UsageError, FileNotFoundError) as err:
        print(f"braidbench: error: {err}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        if args.dsl_dir is not None:
            from .hopfcore import use_dsl_dir

            use_dsl_dir(None)
    text = rep.dumps(timings=args.timings) if args.format == "json" else rep.to_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if ok else EXIT_FAIL


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
