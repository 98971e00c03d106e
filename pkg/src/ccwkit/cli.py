"""Command-line surface: construct graph families, build and verify
factorizations, run the solvers and the separator engine.

Exit codes: 0 success, 1 verification failure, 2 usage error.
All outputs are deterministic (sorted keys, ascending vertex order) so a
manifest replay reproduces byte-identical files.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from . import (
    CliqueSumSpec,
    Factorization,
    Graph,
    Measure,
    audit_lower_bound,
    bandwidth_exact,
    ccw_exact,
    ccw_upper_greedy,
    example3_i,
    example3_ii,
    factorize_apex_grid,
    factorize_clique_sum,
    apex_grid,
    grid,
    separate,
    verify_factorization,
)
from .errors import CcwKitError


def _dump(obj: dict, out: str | None) -> None:
    text = json.dumps(obj, indent=2, sort_keys=True) + "\n"
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _parse_apex_edges(text: str | None) -> set[tuple[int, int]]:
    if not text:
        return set()
    out = set()
    for tok in text.split(","):
        a, b = tok.split("-")
        out.add((int(a), int(b)))
    return out


def _parse_parts(text: str) -> list[tuple[int, int]]:
    # "1:4,1:6" -> [(k=1, n=4), (k=1, n=6)]
    parts = []
    for tok in text.split(","):
        k, n = tok.split(":")
        parts.append((int(k), int(n)))
    return parts


def _write_manifest(path: str | None, argv: list[str], seed: int) -> None:
    if path:
        _dump({"command": "ccwkit", "argv": argv, "seed": seed}, path)


def _build_graph(args: argparse.Namespace) -> Graph:
    family = args.family
    if family == "grid":
        return grid(args.n)
    if family == "apex-grid":
        return apex_grid(args.k, args.n, _parse_apex_edges(args.apex_edges))
    if family == "clique-sum":
        spec = CliqueSumSpec(
            parts=tuple(_parse_parts(args.parts)),
            removed_edges=tuple(_parse_apex_edges(args.removed_edges)),
        )
        return factorize_clique_sum(spec).base
    if family == "example3i":
        return example3_i(args.n, args.k).base
    if family == "example3ii":
        return example3_ii(args.n, args.k).base
    raise CcwKitError(f"unknown family {family!r}")


def _build_factorization(args: argparse.Namespace) -> tuple[Factorization, dict]:
    family = args.family
    if family == "apex-grid":
        f = factorize_apex_grid(args.k, args.n, _parse_apex_edges(args.apex_edges))
        meta = {"family": family, "n": args.n, "k": args.k}
    elif family == "clique-sum":
        parts = _parse_parts(args.parts)
        spec = CliqueSumSpec(
            parts=tuple(parts),
            removed_edges=tuple(_parse_apex_edges(args.removed_edges)),
        )
        f = factorize_clique_sum(spec)
        meta = {
            "family": family,
            "n": sum(n for _, n in parts),
            "k": parts[0][0],
        }
    elif family == "example3i":
        f = example3_i(args.n, args.k)
        meta = {"family": family, "n": args.n, "k": args.k}
    elif family == "example3ii":
        f = example3_ii(args.n, args.k)
        meta = {"family": family, "n": args.n, "k": args.k}
    else:
        raise CcwKitError(f"unknown family {family!r}")
    return f, meta


def cmd_construct(args: argparse.Namespace) -> int:
    g = _build_graph(args)
    if args.dot:
        if args.out and args.out != "-":
            Path(args.out).write_text(g.to_dot())
        else:
            sys.stdout.write(g.to_dot())
    else:
        _dump(g.to_json(), args.out)
    return 0


def cmd_factorize(args: argparse.Namespace) -> int:
    f, meta = _build_factorization(args)
    envelope = f.to_json()
    envelope["meta"] = meta
    _dump(envelope, args.out)
    return 0


def _load_factorization(path: str) -> tuple[Factorization, dict]:
    obj = json.loads(Path(path).read_text())
    meta = obj.get("meta", {})
    return Factorization.from_json(obj), meta


def cmd_verify(args: argparse.Namespace) -> int:
    f, _ = _load_factorization(args.file)
    checks = verify_factorization(f)
    failed = None
    for name, ok, detail in checks:
        print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
        if not ok and failed is None:
            failed = name
    if failed is not None:
        print(f"verification failed: {failed}", file=sys.stderr)
        return 1
    return 0


def cmd_ccw(args: argparse.Namespace) -> int:
    g = Graph.from_json(json.loads(Path(args.file).read_text()))
    if args.greedy:
        width, cover = ccw_upper_greedy(g)
        report = {"mode": "greedy", "width": width, "cover": cover.to_json()}
    else:
        res, cover = ccw_exact(g, budget=args.budget)
        report = {
            "mode": "exact",
            "width": res.value,
            "exact": res.exact,
            "cover": cover.to_json(),
        }
    if args.bandwidth:
        res, order = bandwidth_exact(g, budget=args.budget)
        report["bandwidth"] = res.value
        report["bandwidth_exact"] = res.exact
        report["ordering"] = order
    _dump(report, args.out)
    return 0


def cmd_separate(args: argparse.Namespace) -> int:
    f, meta = _load_factorization(args.file)
    if args.weights:
        mu = Measure.from_list(json.loads(Path(args.weights).read_text()))
    else:
        mu = Measure.uniform(f.base.n)
    result = separate(f, mu)
    _dump(result.to_json(), args.out)
    if args.csv:
        row = {
            "family": meta.get("family", "?"),
            "n": meta.get("n", ""),
            "k": meta.get("k", ""),
            "N": f.base.n,
            "lstar": result.lstar,
            "sep_size": len(result.separator),
            "sep_cliques": len(result.separator_cliques),
            "bound": f"{result.bound_value:.3f}",
            "mu_a": result.mu_a,
            "mu_b": result.mu_b,
        }
        path = Path(args.csv)
        new = not path.exists()
        with path.open("a", newline="") as fh:
            writer = csv.DictWriter(fh, fieldnames=list(row))
            if new:
                writer.writeheader()
            writer.writerow(row)
    return 0


def cmd_audit(args: argparse.Namespace) -> int:
    f, _ = _load_factorization(args.file)
    report = audit_lower_bound(f, x=args.apex)
    _dump(report.to_json(), args.out)
    return 0


def cmd_replay(args: argparse.Namespace) -> int:
    manifest = json.loads(Path(args.file).read_text())
    return main(manifest["argv"])


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=2)
    p.add_argument("--k", type=int, default=0)
    p.add_argument("--apex-edges", help="apex pairs, e.g. '1-2,2-3'")
    p.add_argument("--parts", help="clique-sum parts as k:n pairs, e.g. '1:4,1:6'")
    p.add_argument("--removed-edges", help="apex pairs removed from the sum junction")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ccwkit")
    parser.add_argument("--manifest", help="write a replayable run manifest here")
    parser.add_argument("--seed", type=int, default=0)
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("construct", help="write a graph family as JSON (or DOT)")
    p.add_argument("family", choices=["grid", "apex-grid", "clique-sum", "example3i", "example3ii"])
    _add_family_args(p)
    p.add_argument("--dot", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("factorize", help="write a verified factorization envelope")
    p.add_argument("family", choices=["apex-grid", "clique-sum", "example3i", "example3ii"])
    _add_family_args(p)
    p.add_argument("--out")
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("verify", help="re-check a factorization envelope")
    p.add_argument("file")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("ccw", help="clique cover width of a graph file")
    p.add_argument("file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", default=True)
    mode.add_argument("--greedy", action="store_true")
    p.add_argument("--bandwidth", action="store_true", help="also report exact bandwidth")
    p.add_argument("--budget", type=int, default=500_000)
    p.add_argument("--out")
    p.set_defaults(func=cmd_ccw)

    p = sub.add_parser("separate", help="balanced separator with clique certificate")
    p.add_argument("file")
    p.add_argument("--weights", help="JSON list of vertex weights (default uniform)")
    p.add_argument("--csv", help="append a summary row to this CSV file")
    p.add_argument("--out")
    p.set_defaults(func=cmd_separate)

    p = sub.add_parser("audit", help="lower-bound audit of an apex-grid factorization")
    p.add_argument("file")
    p.add_argument("--apex", type=int, default=1)
    p.add_argument("--out")
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("replay", help="re-run a recorded manifest")
    p.add_argument("file")
    p.set_defaults(func=cmd_replay)
    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    args = parser.parse_args(argv)
    _write_manifest(args.manifest, argv, args.seed)
    try:
        return args.func(args)
    except CcwKitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
