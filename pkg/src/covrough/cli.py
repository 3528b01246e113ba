"""Command line interface and JSON document formats.

Space document::

    {"universe": ["x1", "x2", ...],
     "coverings": [{"name": "C1", "blocks": [[0, 3], [1, 2, 3]]}, ...],
     "decision": [[0, 1], [2, 3]]}          # optional

Event document::

    {"object": 2, "memberships": [{"covering": "C1", "blocks": [0, 1]}]}

All indices are 0-based.  Exit status is 0 on success, 1 when a document,
update or ``--verify`` check fails, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Any, Sequence

from . import bench
from .boolmat import BoolVector
from .charmat import CharMatrices, build_gamma, build_pi
from .covering import OPERATORS, Covering, CoveringSpace, Universe
from .dynamic import UpdateEvent, apply_update, incremental_approx, recompute_baseline
from .reduct import DecisionSystem, find_reduct


class DocumentError(ValueError):
    pass


def space_to_doc(space: CoveringSpace, decision: Sequence[frozenset[int]] | None = None) -> dict[str, Any]:
    doc: dict[str, Any] = {
        "universe": list(space.universe.names),
        "coverings": [{"name": c.name, "blocks": [list(b) for b in c.blocks]} for c in space.coverings],
    }
    if decision is not None:
        doc["decision"] = [sorted(d) for d in decision]
    return doc


def space_from_doc(doc: dict[str, Any]) -> tuple[CoveringSpace, tuple[frozenset[int], ...] | None]:
    try:
        universe = Universe(tuple(doc["universe"]))
        covs = tuple(Covering(str(c["name"]), tuple(tuple(b) for b in c["blocks"])) for c in doc["coverings"])
        decision = doc.get("decision")
    except (KeyError, TypeError) as exc:
        raise DocumentError(f"malformed space document: {exc!r}") from None
    space = CoveringSpace(universe, covs)
    if decision is None:
        return space, None
    classes = tuple(frozenset(d) for d in decision)
    DecisionSystem(space, classes)
    return space, classes


def event_to_doc(ev: UpdateEvent) -> dict[str, Any]:
    return {
        "object": ev.obj,
        "memberships": [{"covering": name, "blocks": sorted(b)} for name, b in ev.memberships.items()],
    }


def event_from_doc(doc: dict[str, Any]) -> UpdateEvent:
    try:
        return UpdateEvent(int(doc["object"]), {m["covering"]: frozenset(m["blocks"]) for m in doc["memberships"]})
    except (KeyError, TypeError, ValueError) as exc:
        raise DocumentError(f"malformed event document: {exc!r}") from None


def _read_json(path: str) -> Any:
    try:
        return json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise DocumentError(f"{path}: {exc}") from None


def load_space(path: str):
    return space_from_doc(_read_json(path))


def load_event(path: str) -> UpdateEvent:
    return event_from_doc(_read_json(path))


def _names(arg: str | None) -> list[str] | None:
    if arg is None:
        return None
    return [s.strip() for s in arg.split(",") if s.strip()]


def _parse_set(arg: str, n: int) -> BoolVector:
    arg = arg.strip()
    if arg == "all":
        return BoolVector.ones(n)
    idx = [int(s) for s in arg.split(",") if s.strip()] if arg else []
    return BoolVector.from_indices(idx, n)


def _labels(space: CoveringSpace, v: BoolVector) -> str:
    return "{" + ",".join(space.universe.names[i] for i in v.indices()) + "}"


def _print_approx(space: CoveringSpace, result) -> None:
    print(f"upper: {_labels(space, result.upper)}")
    print(f"lower: {_labels(space, result.lower)}")


def cmd_matrix(args) -> int:
    space, _ = load_space(args.space)
    sel = _names(args.coverings)
    mat = build_gamma(space, sel) if args.type == 1 else build_pi(space, sel)
    print(mat.format())
    return 0


def cmd_approx(args) -> int:
    space, _ = load_space(args.space)
    x = _parse_set(args.set, space.n)
    _print_approx(space, CharMatrices.build(space, _names(args.coverings)).approx(x, args.op))
    return 0


def cmd_update(args) -> int:
    space, _ = load_space(args.space)
    ev = load_event(args.event)
    sel = _names(args.coverings)
    x = _parse_set(args.set, space.n)
    space_new = apply_update(space, ev)
    old = CharMatrices.build(space, sel)
    result = incremental_approx(old.gamma if args.op == "second" else old.pi, space_new, sel, ev.obj, x, args.op)
    _print_approx(space_new, result)
    if args.verify:
        if result != recompute_baseline(space_new, sel, x, args.op):
            print("verify: FAILED, incremental result differs from full rebuild", file=sys.stderr)
            return 1
        print("verify: ok", file=sys.stderr)
    return 0


def cmd_reduct(args) -> int:
    space, decision = load_space(args.space)
    if decision is None:
        raise DocumentError(f"{args.space}: no decision block; reducts need a decision partition")
    red = find_reduct(DecisionSystem(space, decision), args.kind, args.mode)
    print("\n".join(red.members))
    return 0


def _parse_sizes(text: str) -> list[tuple[int, int]]:
    try:
        return [tuple(int(v) for v in item.split(":")) for item in text.split(",") if item.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"sizes must look like 500:25,1000:50, got {text!r}") from None


def cmd_bench(args) -> int:
    cfg = bench.ExperimentConfig(
        sizes=args.sizes, trials=args.trials, seed=args.seed, output=args.out, density=args.density
    )
    records = bench.run_experiment(cfg, progress=lambda s: print(s, file=sys.stderr))
    print(bench.format_summary(records))
    if args.out:
        print(f"wrote {len(records)} records to {args.out}", file=sys.stderr)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="covrough", description="Covering rough set matrices, approximations and reducts.")
    sub = p.add_subparsers(dest="command", required=True)

    m = sub.add_parser("matrix", help="print a characteristic matrix")
    m.add_argument("space")
    m.add_argument("--type", type=int, choices=(1, 2), default=1)
    m.add_argument("--coverings", help="comma-separated covering names (default: all)")
    m.set_defaults(func=cmd_matrix)

    a = sub.add_parser("approx", help="upper/lower approximations of a set")
    a.add_argument("space")
    a.add_argument("--set", required=True, help="comma-separated 0-based indices, or 'all'")
    a.add_argument("--op", choices=OPERATORS, default="second")
    a.add_argument("--coverings")
    a.set_defaults(func=cmd_approx)

    u = sub.add_parser("update", help="apply an event and compute approximations incrementally")
    u.add_argument("space")
    u.add_argument("event")
    u.add_argument("--set", required=True)
    u.add_argument("--op", choices=OPERATORS, default="second")
    u.add_argument("--coverings")
    u.add_argument("--verify", action="store_true", help="also rebuild from scratch and compare")
    u.set_defaults(func=cmd_update)

    r = sub.add_parser("reduct", help="type-1 or type-2 reduct of a decision system")
    r.add_argument("space")
    r.add_argument("--kind", type=int, choices=(1, 2), default=1)
    r.add_argument("--mode", choices=("greedy", "exhaustive"), default="greedy")
    r.set_defaults(func=cmd_reduct)

    b = sub.add_parser("bench", help="time rebuild vs incremental pipelines")
    b.add_argument("--sizes", type=_parse_sizes, default=list(bench.DEFAULT_LADDER), help="n:m pairs, e.g. 500:25,1000:50")
    b.add_argument("--trials", type=int, default=10)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--density", type=float, default=0.5)
    b.add_argument("--out", type=Path)
    b.set_defaults(func=cmd_bench)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
