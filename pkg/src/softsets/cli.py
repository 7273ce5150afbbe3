"""Command-line surface for the toolkit.

Commands::

    distance  --measure {e|q|dp|dm}              A.json B.json
    distance2 --measure {Dp|Dm|NDp|NDm}          A.json B.json
    entropy                                      A.json
    similarity --measure {sm|sd:Dp|sd:Dm|sd:NDp|sd:NDm|se}  A.json B.json
    profile                                      A.json B.json
    check --target {e|q|dp|dm|Dp|Dm|NDp|NDm|Em|sm|profile|se|sd:*} [bounds]
    decide --ideal I.json C1.json [C2.json ...]

Global flags: ``--json`` for machine-readable reports, ``--containment``
to pick the image relation used by containment-based checks.

Exit codes: 0 success; 1 validation or usage error; 2 an axiom violation was
found by ``check``; 3 I/O or JSON syntax error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__, lab, measures
from .core import SoftSetError, TypeOneSoftSet, TypeTwoSoftSet, ValidationError
from .decision import decide
from .io import load_softset, softset_to_document
from .measures import Measure

_T1_TOKENS = ("e", "q", "dp", "dm")
_T2_TOKENS = ("Dp", "Dm", "NDp", "NDm")
_SIM_TOKENS = ("sm", "sd:Dp", "sd:Dm", "sd:NDp", "sd:NDm", "se")
_CHECK_TARGETS = _T1_TOKENS + _T2_TOKENS + ("Em", "sm", "profile", "se") + tuple(
    t for t in _SIM_TOKENS if t.startswith("sd:")
)


def _render_value(value, exact: str | None = None) -> dict:
    """Scalar result as a 3-decimal string plus an exact form."""
    if isinstance(value, Fraction):
        return {"decimal": f"{float(value):.3f}", "exact": str(value)}
    if isinstance(value, int):
        return {"decimal": f"{float(value):.3f}", "exact": str(value)}
    return {"decimal": f"{value:.3f}", "exact": exact}


def _sha256(path: str) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def _load(path: str, want):
    s = load_softset(path)
    if not isinstance(s, want):
        kind = "t1ss" if want is TypeOneSoftSet else "t2ss"
        raise ValidationError(f"{path}: expected a {kind} document")
    return s


def _witness_payload(w: lab.Witness) -> dict:
    return {
        "axiom": w.axiom_id,
        "target": w.target,
        "instances": [softset_to_document(s) for s in w.instances],
        "details": w.details,
    }


def _verdict_payload(v: lab.AxiomVerdict) -> dict:
    out = {"axiom": v.axiom_id, "status": v.status, "checked": v.checked}
    if v.witness is not None:
        out["witness"] = _witness_payload(v.witness)
    return out


def _print_human_verdicts(verdicts) -> None:
    for v in verdicts:
        print(f"{v.axiom_id:>4}  {v.status:<15} checked={v.checked}")
        if v.witness is not None:
            for k, val in v.witness.details.items():
                print(f"      {k} = {val}")
            for s in v.witness.instances:
                print(f"      instance: {json.dumps(softset_to_document(s))}")


def _build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="softsets", description=__doc__.splitlines()[0])
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument(
        "--containment",
        choices=("subset", "equality"),
        default="subset",
        help="image relation used by containment-based checks",
    )
    sub = p.add_subparsers(dest="command", required=True)

    d1 = sub.add_parser("distance", help="Type-1 distance between two soft sets")
    d1.add_argument("--measure", choices=_T1_TOKENS, required=True)
    d1.add_argument("a")
    d1.add_argument("b")

    d2 = sub.add_parser("distance2", help="Type-2 distance between two soft sets")
    d2.add_argument("--measure", choices=_T2_TOKENS, required=True)
    d2.add_argument("a")
    d2.add_argument("b")

    en = sub.add_parser("entropy", help="entropy of a Type-2 soft set")
    en.add_argument("a")

    si = sub.add_parser("similarity", help="scalar similarity of two Type-2 soft sets")
    si.add_argument("--measure", choices=_SIM_TOKENS, required=True)
    si.add_argument("a")
    si.add_argument("b")

    pr = sub.add_parser("profile", help="per-parameter similarity profile")
    pr.add_argument("a")
    pr.add_argument("b")

    ck = sub.add_parser("check", help="axiom verdicts over a bounded search space")
    ck.add_argument("--target", choices=_CHECK_TARGETS, required=True)
    ck.add_argument("--max-universe", type=int, default=2)
    ck.add_argument("--max-primary", type=int, default=2)
    ck.add_argument("--max-underlying", type=int, default=2)
    ck.add_argument("--random", type=int, metavar="N", help="sample N random instances")
    ck.add_argument("--seed", type=int, default=0)
    ck.add_argument("--trials", type=int, default=20_000)
    ck.add_argument("--chains", type=int, default=300)
    ck.add_argument("--no-seeds", action="store_true", help="skip the fixture seed corpus")
    ck.add_argument("--no-minimize", action="store_true", help="report raw witnesses")

    de = sub.add_parser("decide", help="pick per-parameter winners against an ideal")
    de.add_argument("--ideal", required=True)
    de.add_argument("candidates", nargs="+")
    return p


def _cmd_distance(args, report: dict) -> int:
    want = TypeOneSoftSet if args.command == "distance" else TypeTwoSoftSet
    a = _load(args.a, want)
    b = _load(args.b, want)
    m = Measure(args.measure)
    value = measures.distance(m, a, b)
    exact = None
    if m is Measure.EUCLIDEAN:
        s, t = measures.euclidean_parts(a, b)
        exact = f"{s}+sqrt({t})"
    elif m is Measure.NORM_EUCLIDEAN:
        s, u, n, d = measures.norm_euclidean_parts(a, b)
        exact = f"{s}/sqrt({u})+sqrt({n}/{d})" if u else "0"
    report["result"] = {"measure": args.measure, "value": _render_value(value, exact)}
    return 0


def _cmd_entropy(args, report: dict) -> int:
    a = _load(args.a, TypeTwoSoftSet)
    report["result"] = {"value": _render_value(measures.entropy(a))}
    return 0


def _cmd_similarity(args, report: dict) -> int:
    a = _load(args.a, TypeTwoSoftSet)
    b = _load(args.b, TypeTwoSoftSet)
    value = lab.similarity_value(args.measure, a, b)
    report["result"] = {"measure": args.measure, "value": _render_value(value)}
    return 0


def _cmd_profile(args, report: dict) -> int:
    a = _load(args.a, TypeTwoSoftSet)
    b = _load(args.b, TypeTwoSoftSet)
    prof = measures.similarity_profile(a, b)
    report["result"] = {
        "scores": {k: _render_value(v) for k, v in sorted(prof.scores.items())}
    }
    return 0


def _cmd_check(args, report: dict) -> int:
    bounds = lab.SearchBounds(
        max_universe=args.max_universe,
        max_primary=args.max_primary,
        max_underlying=args.max_underlying,
        mode="random" if args.random else "exhaustive",
        trials=args.random or args.trials,
        seed=args.seed,
    )
    minimize = not args.no_minimize
    target = args.target
    result: dict = {"target": target, "bounds": {
        "max_universe": bounds.max_universe,
        "max_primary": bounds.max_primary,
        "max_underlying": bounds.max_underlying,
        "mode": bounds.mode,
        "trials": bounds.trials,
        "seed": bounds.seed,
    }}
    if target in _T1_TOKENS + _T2_TOKENS:
        seeds = () if args.no_seeds else None
        cls = lab.classify_distance(Measure(target), bounds, seeds=seeds, minimize=minimize)
        verdicts = [cls.verdicts[ax] for ax in sorted(cls.verdicts)]
        result["classification"] = cls.level
    elif target == "Em":
        seeds = () if args.no_seeds else None
        verdicts = lab.check_entropy_axioms(
            bounds, seeds=seeds, mode=args.containment, minimize=minimize
        )
    else:
        seeds = () if args.no_seeds else None
        verdicts = lab.check_similarity_axioms(
            target,
            bounds,
            seeds=seeds,
            mode=args.containment,
            minimize=minimize,
            chains=args.chains,
        )
    result["verdicts"] = [_verdict_payload(v) for v in verdicts]
    report["result"] = result
    report["_verdicts"] = verdicts
    return 2 if any(v.status == "fails" for v in verdicts) else 0


def _cmd_decide(args, report: dict) -> int:
    ideal = _load(args.ideal, TypeTwoSoftSet)
    cands = [_load(c, TypeTwoSoftSet) for c in args.candidates]
    rep = decide(ideal, cands)
    report["result"] = {
        "candidates": list(args.candidates),
        "rows": [
            {
                "parameter": row.parameter,
                "scores": [_render_value(s) for s in row.scores],
                "winner": row.winner_index,
                "winner_file": args.candidates[row.winner_index],
                "tie": row.tie,
                "selection": {b: list(items) for b, items in sorted(row.selection.items())},
            }
            for row in rep.rows
        ],
    }
    return 0


def _print_human(args, report: dict, verdicts) -> None:
    result = report["result"]
    cmd = args.command
    if cmd in ("distance", "distance2", "entropy", "similarity"):
        v = result["value"]
        exact = v.get("exact")
        if exact is not None and exact.lstrip("-").isdigit():
            print(exact)  # integer-valued distances print exactly
        elif exact is not None:
            print(f"{v['decimal']}  (exact: {exact})")
        else:
            print(v["decimal"])
    elif cmd == "profile":
        for k, v in result["scores"].items():
            print(f"{k}: {v['decimal']}  (exact: {v['exact']})")
    elif cmd == "check":
        if "classification" in result:
            print(f"classification: {result['classification']}")
        _print_human_verdicts(verdicts)
    elif cmd == "decide":
        for row in result["rows"]:
            scores = ", ".join(s["decimal"] for s in row["scores"])
            tie = " (tie)" if row["tie"] else ""
            print(f"{row['parameter']}: winner={row['winner_file']}{tie}  scores=[{scores}]")
            for b, items in row["selection"].items():
                print(f"    {b}: {', '.join(items)}")


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code not in (0, None) else 0
    report: dict = {
        "tool": "softsets",
        "version": __version__,
        "command": argv,
        "inputs": {},
    }
    handlers = {
        "distance": _cmd_distance,
        "distance2": _cmd_distance,
        "entropy": _cmd_entropy,
        "similarity": _cmd_similarity,
        "profile": _cmd_profile,
        "check": _cmd_check,
        "decide": _cmd_decide,
    }
    try:
        for name in ("a", "b", "ideal"):
            if getattr(args, name, None):
                report["inputs"][getattr(args, name)] = _sha256(getattr(args, name))
        for path in getattr(args, "candidates", ()):
            report["inputs"][path] = _sha256(path)
        code = handlers[args.command](args, report)
    except json.JSONDecodeError as exc:
        print(f"error: invalid JSON: {exc}", file=sys.stderr)
        return 3
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except lab.BoundsTooLargeError as exc:
        print(f"error: bounds too large: {exc}", file=sys.stderr)
        return 1
    except SoftSetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    verdicts = report.pop("_verdicts", None)
    if args.json:
        print(json.dumps(report, indent=2, ensure_ascii=False))
    else:
        _print_human(args, report, verdicts)
    return code


if __name__ == "__main__":
    sys.exit(main())
