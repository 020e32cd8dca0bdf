"""Command line entry point: ``fideal <subcommand> ...``.

Exit codes: 0 success, 2 invalid argument (or unsupported input), 3 structurally
impossible, 4 construction failed.  Errors are written to stderr as one JSON line.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import constructors as C
from .complexes import f_ideal_report
from .density import enumerate_exact, format_trend_csv, sample_densities, trend_report, bound_report
from .errors import FIdealError, InvalidArgument
from .monomial import GeneratorSet, enumerate_monomials, minimalize
from .perfect import DegreeSlice, Verdict, is_lower_perfect, is_upper_perfect, pure_f_ideal_verdict


def _emit(obj, out) -> None:
    out.write(json.dumps(obj) + "\n")


def _read(path: str | None) -> dict:
    if path in (None, "-"):
        text = sys.stdin.read()
    else:
        try:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InvalidArgument(f"cannot read {path}: {exc.strerror}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InvalidArgument(f"malformed JSON: {exc}") from None


def _policy(args) -> C.SelectionPolicy:
    if args.choice:
        try:
            return C.SelectionPolicy.explicit(json.loads(args.choice))
        except json.JSONDecodeError as exc:
            raise InvalidArgument(f"--choice is not valid JSON: {exc}") from None
    if args.policy == "rand":
        if args.seed is None:
            raise InvalidArgument("--policy rand needs --seed")
        return C.SelectionPolicy.seeded(args.seed)
    return C.LEX


def _need(args, *names):
    missing = [f"--{x}" for x in names if getattr(args, x) is None]
    if missing:
        raise InvalidArgument(f"--alg {args.alg} needs {', '.join(missing)}")


def cmd_gen(args, out) -> None:
    alg = args.alg
    if alg == "dual":
        g = GeneratorSet.from_json_obj(_read(args.input))
        dual = C.newton_dual(g)
        _emit({**dual.to_json_obj(), "trace": {"algorithm": "dual", "params": {"n": g.n}}}, out)
        return
    policy = _policy(args)
    if alg in ("4.1", "4.4", "4.6"):
        _need(args, "k")
        fn = {"4.1": C.construct_mixed_odd_a, "4.4": C.construct_mixed_odd_b, "4.6": C.construct_mixed_even}[alg]
        res = fn(args.k, policy)
    elif alg in ("4.8", "4.9"):
        _need(args, "k", "l", "m")
        fn = C.construct_block_odd if alg == "4.8" else C.construct_block_even
        res = fn(args.k, args.l, args.m, policy)
    else:
        _need(args, "n")
        res = C.construct_pure(int(alg[-1]), args.n, policy)
    _emit({**res.ideal.to_json_obj(), "trace": res.trace.to_json_obj()}, out)


def _report(args, out) -> None:
    g = GeneratorSet.from_json_obj(_read(args.input))
    rep = f_ideal_report(g)
    if args.format == "human":
        out.write(f"n = {g.n}, {len(g)} generators ({len(minimalize(g))} minimal)\n")
        out.write(f"Stanley-Reisner f-vector: {list(rep.sr.counts)}  without f_-1: {list(rep.sr.tail)}\n")
        out.write(f"facet f-vector:           {list(rep.facet.counts)}  without f_-1: {list(rep.facet.tail)}\n")
        out.write("d   #A   #B   #C   #D\n")
        for r in rep.abcd.rows:
            out.write(f"{r.degree:<3} {r.a:<4} {r.b:<4} {r.c:<4} {r.d}\n")
        out.write(f"f-ideal: {'yes' if rep.f_ideal else 'no'}\n")
        return
    _emit({"n": g.n, "generators": len(g), "minimal": g.minimal, **rep.to_json_obj()}, out)


def cmd_perfect(args, out) -> None:
    obj = _read(args.input)
    mons = obj.get("monomials", obj.get("generators"))
    if mons is None or "n" not in obj:
        raise InvalidArgument("degree slice JSON needs 'n' and 'monomials'")
    d = obj.get("d")
    if d is None:
        degs = {len(m) for m in mons}
        if len(degs) != 1:
            raise InvalidArgument("cannot infer the slice degree; pass 'd'")
        d = degs.pop()
    a = DegreeSlice(obj["n"], d, mons)
    lower = is_lower_perfect(a)
    upper = is_upper_perfect(a)
    verdict = pure_f_ideal_verdict(a) if d >= 2 else Verdict.NO
    _emit({"lower": lower, "upper": upper, "perfect": lower and upper, "pure_f_ideal": verdict.value}, out)


def cmd_dual(args, out) -> None:
    g = GeneratorSet.from_json_obj(_read(args.input))
    _emit(C.newton_dual(g).to_json_obj(), out)


def cmd_enumerate(args, out) -> None:
    _emit([list(m.vars) for m in enumerate_monomials(args.n, args.d)], out)


def _est_obj(e) -> dict:
    return {"kind": e.kind, "fraction": e.fraction, "ci_low": e.ci_low, "ci_high": e.ci_high,
            "trials": e.trials, "seed": e.seed, "hits": e.hits}


def cmd_density(args, out) -> None:
    if args.mode == "exact":
        ex = enumerate_exact(args.n, args.d, args.budget)
        _emit({"n": ex.n, "d": ex.d, "total": ex.total, "lp": ex.lp, "up": ex.up,
               "perfect": ex.perfect, "fideal": ex.fideal}, out)
    elif args.mode == "sample":
        est = sample_densities(args.n, args.d, args.trials, args.seed, args.workers)
        b = bound_report(args.n, args.d)
        _emit({"n": args.n, "d": args.d, "trials": args.trials, "seed": args.seed,
               "estimates": [_est_obj(e) for e in est],
               "lp_bound": b.lp_lower_bound, "up_bound": b.up_upper_bound}, out)
    else:
        try:
            ns = [int(x) for x in args.ns.split(",") if x.strip()]
        except ValueError:
            raise InvalidArgument(f"--ns must be a comma-separated list of integers, got {args.ns!r}") from None
        text = format_trend_csv(trend_report(args.d, ns, args.trials, args.seed, args.budget, args.workers))
        if args.out:
            with open(args.out, "w", encoding="utf-8", newline="") as fh:
                fh.write(text)
        else:
            out.write(text)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fideal", description="Construct, verify and measure f-ideals.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="run a construction and print the generator set")
    g.add_argument("--alg", required=True, choices=["4.1", "4.4", "4.6", "4.8", "4.9", "pure3", "pure4", "pure5", "dual"])
    g.add_argument("--k", type=int)
    g.add_argument("--n", type=int)
    g.add_argument("--l", type=int)
    g.add_argument("--m", type=int)
    g.add_argument("--policy", choices=["lex", "rand"], default="lex")
    g.add_argument("--seed", type=int)
    g.add_argument("--choice", help="JSON list of monomials for the free step")
    g.add_argument("--input", help="generator set JSON for --alg dual (default stdin)")
    g.set_defaults(func=cmd_gen)

    for name, text in (("verify", "f-ideal verdict with both f-vectors and the ABCD table"),
                       ("fvector", "f-vectors of both complexes"),
                       ("abcd", "ABCD partition counts per degree")):
        s = sub.add_parser(name, help=text)
        s.add_argument("input", nargs="?", default="-")
        s.add_argument("--format", choices=["json", "human"], default="json")
        s.set_defaults(func=_report)

    s = sub.add_parser("perfect", help="lower/upper/perfect tests on a degree slice")
    s.add_argument("input", nargs="?", default="-")
    s.set_defaults(func=cmd_perfect)

    s = sub.add_parser("dual", help="complementary dual of a generator set")
    s.add_argument("input", nargs="?", default="-")
    s.set_defaults(func=cmd_dual)

    s = sub.add_parser("enumerate", help="list the squarefree monomials of one degree")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int, required=True)
    s.set_defaults(func=cmd_enumerate)

    dens = sub.add_parser("density", help="density experiments")
    dsub = dens.add_subparsers(dest="mode", required=True)
    e = dsub.add_parser("exact")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--d", type=int, required=True)
    e.add_argument("--budget", type=int, default=10**6)
    smp = dsub.add_parser("sample")
    smp.add_argument("--n", type=int, required=True)
    smp.add_argument("--d", type=int, required=True)
    smp.add_argument("--trials", type=int, required=True)
    smp.add_argument("--seed", type=int, required=True)
    smp.add_argument("--workers", type=int)
    t = dsub.add_parser("trend")
    t.add_argument("--d", type=int, required=True)
    t.add_argument("--ns", required=True)
    t.add_argument("--trials", type=int, required=True)
    t.add_argument("--seed", type=int, required=True)
    t.add_argument("--budget", type=int, default=10**6)
    t.add_argument("--workers", type=int)
    t.add_argument("--out")
    for sp in (e, smp, t):
        sp.set_defaults(func=cmd_density)
    return p


def main(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        args.func(args, out)
    except FIdealError as exc:
        sys.stderr.write(json.dumps({"error": exc.reason, "message": str(exc)}) + "\n")
        return exc.exit_code
    return 0


if __name__ == "__main__":
    sys.exit(main())
