"""Command-line frontend: ``agtrellis <command> ...``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from agtrellis import bounds as B
from agtrellis import gonality as gon
from agtrellis.codefile import read_code, read_gonality, write_code
from agtrellis.codes import (
    STRATEGIES,
    absolute_complexity_search,
    enum_cap,
    is_self_orthogonal,
    min_distance,
    permute_coordinates,
    state_profile,
)
from agtrellis.errors import AGTrellisError, GonalityError, ParseError
from agtrellis.hermitian import ag_params_abstract, hermitian_code
from agtrellis.verify import SUITES, jump_grid, run_suites

FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


def _json(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _csv(header: list[str], rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _profile_rows(prof):
    return [(i, prof.p[i], prof.f[i], prof.delta[i], prof.s[i]) for i in range(len(prof.p))]


def _profile_text(prof) -> str:
    lines = [f"{'i':>4} {'p':>4} {'f':>4} {'delta':>6} {'s':>4}"]
    lines += [f"{i:>4} {p:>4} {f:>4} {d:>6} {s:>4}" for i, p, f, d, s in _profile_rows(prof)]
    lines.append(f"s(C) = {prof.s_max}")
    return "\n".join(lines)


def parse_permutation(text: str, n: int) -> list[int]:
    """One-based comma-separated image list to a zero-based list."""
    try:
        perm = [int(t) - 1 for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad permutation {text!r}: expected comma-separated integers") from None
    if sorted(perm) != list(range(n)):
        raise UsageError(f"permutation must list 1..{n} exactly once")
    return perm


def _gonality_source(args) -> gon.GonalitySequence:
    if args.plane_degree is not None:
        return gon.gs_plane_curve(args.plane_degree)
    if args.hyperelliptic_genus is not None:
        return gon.gs_hyperelliptic(args.hyperelliptic_genus)
    if args.sequence is not None:
        return read_gonality(args.sequence)
    raise UsageError("give one of --plane-degree, --hyperelliptic-genus, --sequence")


def _add_gonality_source(p: argparse.ArgumentParser, required: bool) -> None:
    g = p.add_mutually_exclusive_group(required=required)
    g.add_argument("--plane-degree", type=int, metavar="R",
                   help="smooth plane curve of degree R+1, semigroup <R, R+1>")
    g.add_argument("--hyperelliptic-genus", type=int, metavar="G")
    g.add_argument("--sequence", metavar="FILE", help="gonality sequence file (JSON or text)")


# ---------------------------------------------------------------------------
# commands


def cmd_gonality(args) -> str:
    gs = _gonality_source(args)
    T = gon.split_min_table(gs)
    grid = jump_grid(gs, T.jumps, args.width)
    if args.format == "json":
        return _json({
            "genus": gs.g,
            "origin": gs.tag,
            "gammas": list(gs.gammas),
            "gaps": list(gs.gaps),
            "table": T.to_rows(),
            "jumps": list(T.jumps),
            "split_min_top": T.top,
            "grid": grid,
        })
    if args.format == "csv":
        return _csv(["N", "split_min", "a", "b", "jump"],
                    [(r["N"], r["split_min"], r["a"], r["b"], int(r["jump"])) for r in T.to_rows()])
    head = list(gs.gammas[:12])
    lines = [
        f"genus {gs.g}  origin {gs.tag}",
        "gammas " + " ".join(map(str, head)) + (" ..." if len(gs.gammas) > 12 else ""),
        "gaps   " + " ".join(map(str, gs.gaps)),
        "",
        f"{'N':>5} {'split_min':>9} {'a':>5} {'b':>5}",
    ]
    js = set(T.jumps)
    for r in T.to_rows():
        mark = "  jump" if r["N"] in js else ""
        lines.append(f"{r['N']:>5} {r['split_min']:>9} {r['a']:>5} {r['b']:>5}{mark}")
    lines += [
        "",
        f"jumps ({len(T.jumps)}): " + " ".join(map(str, T.jumps)),
        f"split_min(2g-2) = {T.top}",
        "",
    ]
    cw = max(len(c) for row in grid for c in row)
    lines += [" ".join(c.rjust(cw) for c in row) for row in grid]
    return "\n".join(lines)


def _distance(code) -> int:
    return min_distance(code, enum_cap())


def cmd_hermitian(args) -> str:
    h = hermitian_code(args.q, args.m)
    code, ag = h.code, h.ag
    if args.out:
        write_code(code, args.out)
    d = _distance(code) if args.exact_distance else None
    so = is_self_orthogonal(code)
    report = B.bound_report(ag, code, distance=d, formally_self_orthogonal=so,
                            search_budget=args.search_budget, seed=args.seed)
    prof = state_profile(code) if args.profile else None
    if args.format == "json":
        out = {
            "q": args.q, "m": args.m, "n": ag.n, "k": ag.k, "g": ag.g,
            "goppa_floor": h.goppa_floor, "self_orthogonal": so, "distance": d,
            "bounds": report.to_dict(),
        }
        if prof is not None:
            out["profile"] = prof.to_dict()
        return _json(out)
    if args.format == "csv":
        if prof is not None:
            return _csv(["i", "p", "f", "delta", "s"], _profile_rows(prof))
        return _csv(["q", "m", "n", "k", "g", "goppa_floor", "self_orthogonal", "w"],
                    [(args.q, args.m, ag.n, ag.k, ag.g, h.goppa_floor, int(so), report.w)])
    lines = [
        f"Hermitian code q={args.q} m={args.m}: [{ag.n}, {ag.k}] over GF({h.params.field.q}), genus {ag.g}",
        f"Goppa floor d >= {h.goppa_floor}" + (f", exact d = {d}" if d is not None else ""),
        f"self-orthogonal: {'yes' if so else 'no'}",
    ]
    if args.out:
        lines.append(f"code written to {args.out}")
    lines += ["", report.to_text()]
    if prof is not None:
        lines += ["", _profile_text(prof)]
    return "\n".join(lines)


def cmd_profile(args) -> str:
    code = read_code(args.code)
    perm = None
    if args.permutation:
        perm = parse_permutation(args.permutation, code.n)
        code = permute_coordinates(code, perm)
    prof = state_profile(code)
    if args.format == "json":
        out = {"n": code.n, "k": code.k, "profile": prof.to_dict()}
        out["permutation"] = [i + 1 for i in perm] if perm is not None else None
        return _json(out)
    if args.format == "csv":
        return _csv(["i", "p", "f", "delta", "s"], _profile_rows(prof))
    return f"[{code.n}, {code.k}] code over GF({code.field.q})\n" + _profile_text(prof)


def cmd_search(args) -> str:
    code = read_code(args.code)
    res = absolute_complexity_search(code, args.strategy, args.budget, args.seed, args.workers)
    d = res.to_dict()
    if args.format == "json":
        return _json({"n": code.n, "k": code.k, **d})
    if args.format == "csv":
        return _csv(["best_s", "evaluations", "seed", *[f"pi{i + 1}" for i in range(code.n)]],
                    [(res.best_s, res.evaluations, args.seed, *d["best_permutation"])])
    return "\n".join([
        f"[{code.n}, {code.k}] code, strategy {res.strategy}" + (" (exhaustive)" if res.exhaustive else ""),
        f"best_s {res.best_s}",
        "best permutation " + ",".join(map(str, d["best_permutation"])),
        f"evaluations {res.evaluations}",
    ])


def cmd_bounds(args) -> str:
    gs = _gonality_source(args)
    code = read_code(args.code) if args.code else None
    if code is not None:
        if args.n is not None and args.n != code.n:
            raise UsageError(f"--n {args.n} disagrees with code length {code.n}")
        params = ag_params_abstract(code.n, args.m, gs, code.k)
    else:
        if args.n is None:
            raise UsageError("give --code or --n")
        params = ag_params_abstract(args.n, args.m, gs, args.k)
    report = B.bound_report(
        params, code, distance=args.distance, formally_self_orthogonal=args.fso or None,
        search_budget=args.search_budget, seed=args.seed, workers=args.workers,
    )
    if args.format == "json":
        return report.to_json()
    if args.format == "csv":
        names = ["n", "k", "m", "g", "gamma2", "w", "clifford", "goppa_like", "gonality", "gamma2_lb"]
        vals = [getattr(report, x) for x in names]
        return _csv(names, [["" if v is None else v for v in vals]])
    return report.to_text()


def cmd_verify(args) -> tuple[str, int]:
    checks = run_suites(args.suite, seed=args.seed, workers=args.workers)
    failed = sum(not c.ok for c in checks)
    if args.format == "json":
        text = _json([{"suite": c.suite, "name": c.name, "status": c.status, "detail": c.detail} for c in checks])
    else:
        counts = {s: sum(c.status == s for c in checks) for s in ("pass", "fail", "deviation")}
        text = "\n".join([c.line() for c in checks] + [
            f"{counts['pass']} passed, {counts['fail']} failed, {counts['deviation']} expected deviations"
        ])
    return text, 1 if failed else 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="agtrellis", description="Trellis state complexity of AG codes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gonality", help="split_min table, jumps and jump grid for a gonality sequence")
    _add_gonality_source(p, required=True)
    p.add_argument("--width", type=int, help="grid row width (default r for plane curves)")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_gonality)

    p = sub.add_parser("hermitian", help="build a one-point Hermitian code")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out", metavar="FILE")
    p.add_argument("--profile", action="store_true")
    p.add_argument("--exact-distance", action="store_true")
    p.add_argument("--search-budget", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_hermitian)

    p = sub.add_parser("profile", help="state complexity profile of a code file")
    p.add_argument("--code", required=True, metavar="FILE")
    p.add_argument("--permutation", metavar="LIST", help="one-based images, e.g. 3,1,2")
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("search", help="search coordinate orders for low state complexity")
    p.add_argument("--code", required=True, metavar="FILE")
    p.add_argument("--strategy", choices=STRATEGIES, default="random")
    p.add_argument("--budget", type=int, default=1000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("bounds", help="bound report for a code file or abstract parameters")
    _add_gonality_source(p, required=True)
    p.add_argument("--code", metavar="FILE")
    p.add_argument("--n", type=int)
    p.add_argument("--m", type=int, required=True, help="degree of G")
    p.add_argument("--k", type=int, help="dimension, needed when m <= 2g-2")
    p.add_argument("--distance", type=int)
    p.add_argument("--fso", action="store_true", help="code is known formally self-orthogonal")
    p.add_argument("--search-budget", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=FORMATS, default="text")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("verify", help="run the property suites")
    p.add_argument("--suite", action="append", choices=(*SUITES, "all"),
                   help="repeatable; default all")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "verify" and not args.suite:
        args.suite = ["all"]
    try:
        result = args.func(args)
    except GonalityError as exc:
        print(f"error: invalid gonality sequence ({type(exc).__name__}): {exc}", file=sys.stderr)
        return 2
    except (ParseError, UsageError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except AGTrellisError as exc:
        print(f"error ({type(exc).__name__}): {exc}", file=sys.stderr)
        return 2
    code = 0
    if isinstance(result, tuple):
        result, code = result
    print(result)
    return code


if __name__ == "__main__":
    sys.exit(main())
