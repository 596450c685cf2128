"""Batch command-line interface.

Commands: ``validate`` an instance file, ``rgroup`` to compute one or both
R-groups (optionally cross-checked by the brute-force oracle), ``explain``
to pretty-print the classification buckets of the assembled parameter,
and ``fuzz`` to run the two-sided check over randomly generated
instances.  Exit codes: 0 success/agreement, 1 domain violation or
disagreement, 2 usage or parse errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .centralizer import centralizer, descriptor_rank
from .errors import BoundsInfeasible, ParseError, RGroupError
from .instances import (
    ClassicalInstance,
    Instance,
    UnitaryInstance,
    instance_document,
    load_instance,
    serialize_instance,
    validate_instance,
)
from .levi import FuzzBounds, random_instance, verify_theorem
from .params import Family, classify
from .unitary import (
    maximal_levi_phi,
    merged_summands,
    unitary_centralizer,
    unitary_maximal_levi_r_group,
)
from .weyl import weyl_quotient


def _print_violations(report) -> None:
    for violation in report.violations:
        print(f"violation [{violation.rule}] {violation.message}")


def cmd_validate(args: argparse.Namespace) -> int:
    inst = load_instance(args.path)
    report = validate_instance(inst)
    if args.json:
        doc = instance_document(inst)
        doc["results"] = {
            "valid": report.ok,
            "violations": [
                {"rule": v.rule, "message": v.message} for v in report.violations
            ],
        }
        print(json.dumps(doc, indent=2))
        return 0 if report.ok else 1
    if report.ok:
        print(f"{args.path}: valid ({inst.family.value})")
        return 0
    print(f"{args.path}: invalid ({inst.family.value})")
    _print_violations(report)
    return 1


def _classical_descriptor(inst: ClassicalInstance):
    from .levi import parameter_of_induced

    phi = parameter_of_induced(inst.data)
    ambient = inst.data.ambient_group()
    return phi, ambient, centralizer(phi, ambient)


def _unitary_descriptor(inst: UnitaryInstance):
    if inst.deltas:
        delta, _ = inst.deltas[0]
        phi = merged_summands(maximal_levi_phi(delta, inst.sigma))
        ambient = inst.sigma.rank + 2 * delta.dim
    else:
        phi = [(block, 1) for block in inst.sigma.blocks]
        ambient = inst.sigma.rank
    return phi, ambient, unitary_centralizer(phi, ambient)


def _rgroup_results(inst: Instance, oracle: bool) -> dict:
    if isinstance(inst, ClassicalInstance):
        result = verify_theorem(inst.data)
        _, _, desc = _classical_descriptor(inst)
        rows = result.witness
    else:
        if inst.deltas:
            result = unitary_maximal_levi_r_group(inst.deltas[0][0], inst.sigma)
            rows = result.witness
        else:
            result = None
            rows = ()
        _, _, desc = _unitary_descriptor(inst)

    if result is not None:
        ks, arthur = result.ks_rank, result.arthur_rank
    else:
        ks, arthur = 0, descriptor_rank(desc).rank

    out = {
        "ks_rank": ks,
        "arthur_rank": arthur,
        "agree": ks == arthur,
        "centralizer": desc.describe(),
        "witness": [
            {
                "delta": row.summand.describe(),
                "mult": row.multiplicity,
                "self_dual": row.self_dual,
                "same_type": row.same_type,
                "in_jordan": row.in_jordan,
                "counted": row.counted,
            }
            for row in rows
        ],
    }
    if oracle:
        oracle_rank = weyl_quotient(desc).rank
        out["oracle_rank"] = oracle_rank
        out["agree"] = out["agree"] and oracle_rank == arthur
    return out


def cmd_rgroup(args: argparse.Namespace) -> int:
    inst = load_instance(args.path)
    report = validate_instance(inst)
    if not report.ok:
        print(f"{args.path}: invalid instance", file=sys.stderr)
        for violation in report.violations:
            print(f"violation [{violation.rule}] {violation.message}", file=sys.stderr)
        return 1
    results = _rgroup_results(inst, args.oracle)
    if args.json:
        doc = instance_document(inst)
        if args.side == "ks":
            results = {k: results[k] for k in ("ks_rank", "witness")}
        elif args.side == "arthur":
            results = {
                k: results[k] for k in ("arthur_rank", "centralizer", "witness")
            }
        doc["results"] = results
        print(json.dumps(doc, indent=2))
        return 0 if results.get("agree", True) else 1

    if results["witness"]:
        for line in _witness_table_rows(results["witness"]):
            print(line)
    if args.side in ("both", "ks"):
        print(f"knapp-stein rank: {results['ks_rank']}")
    if args.side in ("both", "arthur"):
        print(f"arthur rank: {results['arthur_rank']}")
        print(f"centralizer: {results['centralizer']}")
    if args.oracle:
        print(f"oracle rank: {results['oracle_rank']}")
    if args.side == "both":
        print(f"agree: {'yes' if results['agree'] else 'NO'}")
        return 0 if results["agree"] else 1
    return 0


def _witness_table_rows(rows: list[dict]) -> list[str]:
    header = (
        f"{'delta':<16}{'mult':>5}  {'self-dual':<10}{'same-type':<10}"
        f"{'in-jordan':<10}{'counted':<8}"
    )
    lines = [header]
    for row in rows:
        lines.append(
            f"{row['delta']:<16}{row['mult']:>5}  "
            f"{str(row['self_dual']).lower():<10}{str(row['same_type']).lower():<10}"
            f"{str(row['in_jordan']).lower():<10}{str(row['counted']).lower():<8}"
        )
    return lines


def cmd_explain(args: argparse.Namespace) -> int:
    inst = load_instance(args.path)
    report = validate_instance(inst)
    if not report.ok:
        print(f"{args.path}: invalid instance", file=sys.stderr)
        for violation in report.violations:
            print(f"violation [{violation.rule}] {violation.message}", file=sys.stderr)
        return 1

    if isinstance(inst, ClassicalInstance):
        phi, ambient, desc = _classical_descriptor(inst)
        buckets = classify(phi, ambient)
        bucket_rows = [
            ("dual-pair", buckets.dual_pairs),
            ("opposite-type", buckets.opposite_type),
            ("same-type-odd", buckets.same_type_odd_mult),
            ("same-type-even", buckets.same_type_even_mult),
        ]
        doc = {
            "ambient": ambient.describe(),
            "parameter": phi.describe(),
            "buckets": {
                name: [
                    {
                        "summand": e.summand.describe(),
                        "dim": e.summand.dim,
                        "mult": e.multiplicity,
                    }
                    for e in entries
                ]
                for name, entries in bucket_rows
            },
            "d": buckets.d,
            "centralizer": desc.describe(),
        }
        if args.json:
            out = instance_document(inst)
            out["results"] = doc
            print(json.dumps(out, indent=2))
            return 0
        print(f"ambient group: {doc['ambient']}")
        print(f"parameter: {doc['parameter']}")
        for name, entries in bucket_rows:
            for e in entries:
                print(
                    f"  [{name:<14}] {e.summand.describe():<16} dim={e.summand.dim}"
                    f" mult={e.multiplicity}"
                )
        print(f"rank d = {doc['d']}")
        print(f"centralizer: {doc['centralizer']}")
        return 0

    phi, ambient, desc = _unitary_descriptor(inst)
    doc = {
        "ambient": f"U({ambient})",
        "summands": [
            {
                "summand": s.describe(),
                "dim": s.dim,
                "mult": m,
                "conj_self_dual": s.conj_self_dual,
                "lambda": s.lam if s.conj_self_dual else None,
            }
            for s, m in phi
        ],
        "centralizer": desc.describe(),
        "rank": descriptor_rank(desc).rank,
    }
    if args.json:
        out = instance_document(inst)
        out["results"] = doc
        print(json.dumps(out, indent=2))
        return 0
    print(f"ambient group: {doc['ambient']}")
    for row in doc["summands"]:
        lam = f" lambda={row['lambda']:+d}" if row["lambda"] is not None else ""
        print(f"  {row['summand']:<16} dim={row['dim']} mult={row['mult']}{lam}")
    print(f"centralizer: {doc['centralizer']}")
    print(f"rank = {doc['rank']}")
    return 0


def cmd_fuzz(args: argparse.Namespace) -> int:
    try:
        bounds = FuzzBounds(
            max_deltas=args.max_deltas,
            max_dim=args.max_dim,
            max_a=args.max_a,
            max_mult=args.max_mult,
            family=Family(args.family),
        )
    except (BoundsInfeasible, ValueError) as exc:
        print(f"infeasible bounds: {exc}", file=sys.stderr)
        return 2

    failures: list[Path] = []
    replay_dir = Path(args.replay_dir)
    for index in range(args.count):
        seed = args.seed + index
        try:
            pi = random_instance(seed, bounds)
        except BoundsInfeasible as exc:
            print(f"infeasible bounds: {exc}", file=sys.stderr)
            return 2
        result = verify_theorem(pi)
        if not result.agree:
            replay_dir.mkdir(parents=True, exist_ok=True)
            path = replay_dir / f"fail-{args.family}-seed{seed}.json"
            path.write_text(
                serialize_instance(ClassicalInstance(bounds.family, pi))
            )
            failures.append(path)
            print(
                f"instance {index} (seed {seed}): ks={result.ks_rank}"
                f" arthur={result.arthur_rank} DISAGREE -> {path}"
            )
    print(f"{args.count - len(failures)}/{args.count} agree (family {args.family}, seed {args.seed})")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rgroups",
        description=(
            "Compute and cross-check Knapp-Stein and Arthur R-groups of"
            " classical p-adic groups from Jordan-block instance files."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_validate = sub.add_parser("validate", help="validate an instance file")
    p_validate.add_argument("path")
    p_validate.add_argument("--json", action="store_true", help="machine-readable output")
    p_validate.set_defaults(func=cmd_validate)

    p_rgroup = sub.add_parser("rgroup", help="compute R-groups for an instance")
    p_rgroup.add_argument("path")
    p_rgroup.add_argument(
        "--side", choices=("both", "ks", "arthur"), default="both"
    )
    p_rgroup.add_argument(
        "--oracle",
        action="store_true",
        help="also run the brute-force Weyl quotient",
    )
    p_rgroup.add_argument("--json", action="store_true")
    p_rgroup.set_defaults(func=cmd_rgroup)

    p_explain = sub.add_parser(
        "explain", help="pretty-print the classification of the parameter"
    )
    p_explain.add_argument("path")
    p_explain.add_argument("--json", action="store_true")
    p_explain.set_defaults(func=cmd_explain)

    p_fuzz = sub.add_parser("fuzz", help="fuzz the two-sided R-group check")
    p_fuzz.add_argument("--seed", type=int, default=0)
    p_fuzz.add_argument("--count", type=int, default=100)
    p_fuzz.add_argument(
        "--family", choices=("sp", "so-odd", "o-even"), default="sp"
    )
    p_fuzz.add_argument("--max-deltas", type=int, default=5)
    p_fuzz.add_argument("--max-dim", type=int, default=4)
    p_fuzz.add_argument("--max-a", type=int, default=5)
    p_fuzz.add_argument("--max-mult", type=int, default=3)
    p_fuzz.add_argument(
        "--replay-dir",
        default="fuzz-failures",
        help="directory for replay files of disagreeing instances",
    )
    p_fuzz.set_defaults(func=cmd_fuzz)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except RGroupError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
