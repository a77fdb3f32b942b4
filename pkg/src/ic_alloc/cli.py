"""Command-line surface.

Every subcommand prints machine-readable output (JSON, or the native text
format of the artifact it produces) on stdout and diagnostics on stderr,
and exits 0 only on full success.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .baselines import ThinningSpec, thin
from .design import (
    BasePartition,
    as_final,
    build_base_partition,
    derive_parameters,
    refine,
)
from .errors import ICAllocError
from .formats import (
    emit_partition,
    emit_sweep_csv,
    emit_tasks,
    parse_partition,
    parse_tasks,
)
from .harness import grid_points, monte_carlo_delta, simulate_rounds, sweep
from .metrics import full_report
from .oracle import brute_force_pi_star
from .tasks import TaskSet
from .verify import run_invariant_checks


def _diag(msg: str) -> None:
    print(msg, file=sys.stderr)


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)
        print(json.dumps({"out": out, "bytes": len(text)}))


def _read_tasks(path: str) -> TaskSet:
    return parse_tasks(Path(path).read_text())


def cmd_partition(args) -> int:
    params = derive_parameters(args.n, args.d, args.workers)
    base = build_base_partition(params)
    if args.tasks is not None:
        fp = refine(base, _read_tasks(args.tasks))
    else:
        fp = as_final(base)
    _diag(
        f"built {params.case} partition: k={params.k}, "
        f"family_size={params.family_size}, g={params.g}, N'={params.N_prime}"
    )
    _emit(emit_partition(fp), args.out)
    return 0


def cmd_thin(args) -> int:
    tasks = thin(args.n, args.d, ThinningSpec(phi=args.phi, seed=args.seed))
    _diag(f"kept {len(tasks)} of C({args.n},{args.d}) tuples")
    _emit(emit_tasks(tasks), args.out)
    return 0


def cmd_eval(args) -> int:
    fp = parse_partition(Path(args.partition).read_text())
    if args.tasks is not None:
        tasks = _read_tasks(args.tasks)
        if fp.params is None:
            raise ICAllocError("--tasks requires a construction partition")
        base = BasePartition(
            params=fp.params,
            groups=fp.groups,
            footprints=tuple(tuple(f) for f in fp.placement),
        )
        fp = refine(base, tasks)
    report = full_report(fp, fp.params)
    print(json.dumps(report.as_dict(), indent=2))
    return 0


def cmd_verify(args) -> int:
    fp = parse_partition(Path(args.partition).read_text())
    checks = run_invariant_checks(fp)
    ok = all(c.ok for c in checks)
    print(json.dumps({"ok": ok, "checks": [c.as_dict() for c in checks]}, indent=2))
    for c in checks:
        _diag(f"{'PASS' if c.ok else 'FAIL'} {c.name}: {c.detail}")
    return 0 if ok else 1


def cmd_bruteforce(args) -> int:
    tasks = _read_tasks(args.tasks)
    pi_star, witness = brute_force_pi_star(tasks, args.workers, edge_cap=args.edge_cap)
    print(
        json.dumps(
            {
                "pi_star": pi_star,
                "witness": [[list(t) for t in g] for g in witness],
            },
            indent=2,
        )
    )
    return 0


def cmd_montecarlo(args) -> int:
    summary = monte_carlo_delta(
        args.n, args.d, args.workers, args.phi, args.trials, args.seed
    )
    print(json.dumps(summary.as_dict(), indent=2))
    return 0


def cmd_sweep(args) -> int:
    axes = json.loads(Path(args.grid).read_text())
    records = sweep(grid_points(axes))
    skipped = sum(1 for r in records if r.error is not None)
    _diag(f"swept {len(records)} points ({skipped} unsupported)")
    _emit(emit_sweep_csv(records), args.out)
    violations = [r for r in records if r.bounds_ok is False]
    if violations:
        for r in violations:
            _diag(f"BOUND VIOLATION at n={r.n} d={r.d} N={r.N} phi={r.phi}")
        return 1
    return 0


def cmd_simulate(args) -> int:
    phis = [float(x) for x in args.phi_list.split(",")]
    specs = [
        ThinningSpec(phi=phis[i % len(phis)], seed=args.seed + i)
        for i in range(args.rounds)
    ]
    result = simulate_rounds(args.n, args.d, args.workers, specs)
    print(json.dumps(result.as_dict(), indent=2))
    return 0 if result.verdict == "PASS" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ic-alloc",
        description=(
            "Blind data-and-task allocation: partition d-uniform task sets "
            "over n files across N workers with guaranteed communication "
            "and computation costs."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("partition", help="build a partition (optionally refined by a task file)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--workers", type=int, required=True)
    p.add_argument("--tasks", default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_partition)

    p = sub.add_parser("thin", help="sample a task set by random thinning")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--phi", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_thin)

    p = sub.add_parser("eval", help="cost report for a partition file")
    p.add_argument("--partition", required=True)
    p.add_argument("--tasks", default=None)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("verify", help="run every invariant; nonzero exit on violation")
    p.add_argument("--partition", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bruteforce", help="exact optimal communication cost at tiny scale")
    p.add_argument("--tasks", required=True)
    p.add_argument("--workers", type=int, required=True)
    p.add_argument("--edge-cap", type=int, default=16)
    p.set_defaults(func=cmd_bruteforce)

    p = sub.add_parser("montecarlo", help="seeded trials of the balance guarantee")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--workers", type=int, required=True)
    p.add_argument("--phi", type=float, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_montecarlo)

    p = sub.add_parser("sweep", help="evaluate a JSON grid of parameter points to CSV")
    p.add_argument("--grid", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("simulate", help="multi-round blind allocation with a fixed placement")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--workers", type=int, required=True)
    p.add_argument("--rounds", type=int, required=True)
    p.add_argument("--phi-list", required=True, help="comma-separated phi per round (cycled)")
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_simulate)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ICAllocError as exc:
        _diag(f"error: {exc}")
        return 1
    except OSError as exc:
        _diag(f"io error: {exc}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
