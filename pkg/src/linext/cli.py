"""Command-line front end.

Subcommands: ``analyze`` a poset file, ``generate`` family posets,
``verify`` inequality sweeps, ``experiment`` trend tables, ``sample``
linear extensions.  Exit codes: 0 success, 1 a theorem-backed check
failed, 2 usage or parse error, 3 node budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import checks, families, mcmc
from .errors import BudgetExceeded, LinextError
from .lattice import all_position_distributions, count_extensions, sample_extensions
from .poset import Poset, comparability_profile, grid_poset
from .stats import balance, fraction_json, position_statistics
from .twochain import make_two_chain


def _fmt(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator} ({float(value):.6g})"


def _load_poset_file(path: str):
    """Read a poset from JSON; the shape of the keys picks the format.

    Accepts {"labels", "covers"}, grid {"dim", "points"} and two-chain
    {"m", "n", "cross"} files; "-" reads stdin so `generate` pipes in.
    Returns (poset, source_kind).
    """
    if path == "-":
        data = json.load(sys.stdin)
    else:
        with open(path) as fh:
            data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("top-level JSON value must be an object")
    keys = set(data)
    if {"labels", "covers"} <= keys:
        return Poset.from_dict(data), "poset"
    if {"dim", "points"} <= keys:
        points = [tuple(int(c) for c in q) for q in data["points"]]
        if any(len(q) != int(data["dim"]) for q in points):
            raise ValueError("grid points disagree with the declared dimension")
        return grid_poset(points), "grid"
    if {"m", "n"} <= keys:
        cross = [tuple(pair) for pair in data.get("cross", [])]
        return make_two_chain(int(data["m"]), int(data["n"]), cross).poset, "two-chain"
    raise ValueError(
        "unrecognized poset file: expected labels/covers, dim/points, or m/n/cross keys"
    )


# -- analyze --------------------------------------------------------------


def cmd_analyze(args) -> int:
    p, _kind = _load_poset_file(args.file)
    budget = args.budget_nodes
    profile = comparability_profile(p)
    extensions = count_extensions(p, budget)
    dists = all_position_distributions(p, budget)
    stats = {lab: position_statistics(p, lab, budget) for lab in p.labels}
    sigma_arg = max(p.labels, key=lambda lab: (stats[lab].variance, -p.index(lab)))
    pi_arg = max(p.labels, key=lambda lab: (profile.counts[lab], -p.index(lab)))

    if p.is_chain():
        delta_report = None
    else:
        delta_report = balance(p, budget)

    if args.json:
        payload = {
            "elements": p.n,
            "extensions": str(extensions),
            "width": profile.width,
            "antichain": list(profile.antichain),
            "pi": profile.max_count,
            "pi_argmax": pi_arg,
            "sigma": float(stats[sigma_arg].stddev),
            "sigma_argmax": sigma_arg,
            "delta": None
            if delta_report is None
            else fraction_json(delta_report.delta),
            "witness": None if delta_report is None else list(delta_report.witness),
        }
        if args.full:
            payload["per_element"] = {
                lab: {
                    "mean": fraction_json(stats[lab].mean),
                    "variance": fraction_json(stats[lab].variance),
                    "sigma": stats[lab].stddev,
                    "q": fraction_json(stats[lab].q),
                    "pi": profile.counts[lab],
                    "positions": [fraction_json(v) for v in dists[lab].probs],
                }
                for lab in p.labels
            }
        print(json.dumps(payload, indent=2))
        return 0

    print(f"elements: {p.n}")
    print(f"extensions: {extensions}")
    print(f"width: {profile.width}  antichain {{{', '.join(profile.antichain)}}}")
    print(f"pi: {profile.max_count}  (argmax {pi_arg})")
    if delta_report is None:
        print("chain: balance not applicable")
    else:
        w = delta_report.witness
        print(f"delta: {_fmt(delta_report.delta)}  witness ({w[0]}, {w[1]})")
    print(f"sigma: {stats[sigma_arg].stddev:.6g}  (argmax {sigma_arg})")
    if args.full:
        print()
        print("element  mean  variance  sigma  q  pi")
        for lab in p.labels:
            st = stats[lab]
            print(
                f"{lab}  {_fmt(st.mean)}  {_fmt(st.variance)}"
                f"  {st.stddev:.6g}  {_fmt(st.q)}  {profile.counts[lab]}"
            )
    return 0


# -- generate -------------------------------------------------------------


def _parse_int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(part) for part in text.split(",")]


def _parse_cross(text: str) -> list[tuple[int, int]]:
    pairs = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        i, j = part.split(":")
        pairs.append((int(i), int(j)))
    return pairs


def cmd_generate(args) -> int:
    family = args.family
    params = args.params
    seed = args.seed

    def need(k):
        if len(params) != k:
            raise ValueError(f"family {family!r} takes {k} parameter(s)")

    if family == "chain":
        need(1)
        p = families.chain(int(params[0]))
    elif family == "antichain":
        need(1)
        p = families.antichain(int(params[0]))
    elif family == "chainpoint":
        need(1)
        p = families.chain_plus_point(int(params[0]))
    elif family == "twochains":
        need(1)
        p = families.two_equal_chains(int(params[0]))
    elif family == "young":
        need(1)
        p = families.young_diagram(_parse_int_list(params[0])).poset
    elif family == "skew":
        need(2)
        p = families.skew_diagram(
            _parse_int_list(params[0]), _parse_int_list(params[1])
        ).poset
    elif family == "tripod":
        need(2)
        p = families.tripod(int(params[0]), int(params[1])).poset
    elif family == "grid":
        need(2)
        gens = [tuple(_parse_int_list(g)) for g in params[1].split(";") if g.strip()]
        p = families.grid_ideal(int(params[0]), gens).poset
    elif family == "random":
        need(2)
        p = families.random_poset(int(params[0]), float(params[1]), seed)
    elif family == "two-chain":
        need(2)
        spec = {
            "m": int(params[0]),
            "n": int(params[1]),
            "cross": sorted(_parse_cross(args.cross or "")),
        }
        print(json.dumps(spec, indent=2))
        return 0
    else:
        raise ValueError(f"unknown family {family!r}")
    print(json.dumps(p.to_dict(), indent=2))
    return 0


# -- verify ---------------------------------------------------------------


def cmd_verify(args) -> int:
    records = checks.run_suite(
        args.suite,
        count=args.random,
        nmax=args.n,
        seed=args.seed,
        budget=args.budget_nodes,
        corpus=args.corpus,
    )
    records = sorted(records, key=lambda r: (r.check, r.instance))
    for rec in records:
        print(json.dumps(rec.to_json(), sort_keys=True))
    hard_failures = [r for r in records if not r.holds and r.kind != "conjecture"]
    findings = [r for r in records if not r.holds and r.kind == "conjecture"]
    print(
        f"{len(records)} checks, {len(hard_failures)} failures, "
        f"{len(findings)} conjecture findings",
        file=sys.stderr,
    )
    return 1 if hard_failures else 0


# -- experiment -----------------------------------------------------------


def cmd_experiment(args) -> int:
    sizes = _parse_int_list(args.sizes)
    if not sizes:
        print("error: need at least one size", file=sys.stderr)
        return 2
    rows = checks.trend_experiment(args.family, sizes, args.budget_nodes)
    buf = io.StringIO()
    writer = csv.writer(buf)
    writer.writerow(
        [
            "family",
            "size",
            "n",
            "width",
            "delta_num",
            "delta_den",
            "delta_float",
            "sigma_float",
            "pi",
        ]
    )
    for row in rows:
        writer.writerow(
            [
                row.family,
                row.size,
                row.n,
                row.width,
                row.delta.numerator,
                row.delta.denominator,
                f"{float(row.delta):.10g}",
                f"{row.sigma:.10g}",
                row.pi,
            ]
        )
    text = buf.getvalue()
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


# -- sample ---------------------------------------------------------------


def cmd_sample(args) -> int:
    p, _kind = _load_poset_file(args.file)
    count = args.samples
    if args.mc:
        state = mcmc.initial_state(p, args.seed)
        burn = args.burn_in if args.burn_in is not None else mcmc.default_burn_in(p)
        spacing = max(p.n * p.n, 1)
        print(
            f"# approximate: adjacent-transposition chain, "
            f"burn-in {burn}, spacing {spacing}"
        )
        for _ in range(burn):
            mcmc.mc_step(state)
        for _ in range(count):
            for _ in range(spacing):
                mcmc.mc_step(state)
            print(" ".join(p.labels[i] for i in state.order))
        return 0
    for ext in sample_extensions(p, count, args.seed, args.budget_nodes):
        print(" ".join(ext))
    return 0


# -- wiring ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="linext",
        description="Exact linear-extension analytics for finite posets.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_budget(sp):
        sp.add_argument(
            "--budget-nodes",
            type=int,
            default=None,
            metavar="N",
            help="ideal-lattice node budget (default 10^7)",
        )

    sp = sub.add_parser("analyze", help="report statistics of a poset file")
    sp.add_argument("file")
    sp.add_argument("--full", action="store_true", help="per-element table")
    sp.add_argument("--json", action="store_true", help="emit JSON instead of text")
    add_budget(sp)
    sp.set_defaults(func=cmd_analyze)

    sp = sub.add_parser("generate", help="emit a family poset as JSON")
    sp.add_argument(
        "family",
        choices=[
            "chain",
            "antichain",
            "chainpoint",
            "twochains",
            "young",
            "skew",
            "tripod",
            "grid",
            "random",
            "two-chain",
        ],
    )
    sp.add_argument("params", nargs="*")
    sp.add_argument("--seed", type=int, default=None)
    sp.add_argument("--cross", default=None, help="two-chain cross pairs i:j,...")
    sp.set_defaults(func=cmd_generate)

    sp = sub.add_parser("verify", help="run an inequality sweep, emit JSON lines")
    sp.add_argument("suite", choices=sorted(checks.SUITES) + ["all"])
    sp.add_argument("--random", type=int, default=100, metavar="N", help="instances")
    sp.add_argument("--n", type=int, default=8, metavar="NMAX", help="max poset size")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument(
        "--corpus",
        choices=["builtin"],
        default=None,
        help="sweep the builtin corpus where the suite supports it",
    )
    add_budget(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("experiment", help="exact trend table for a family")
    sp.add_argument("family", choices=sorted(checks.TREND_FAMILIES))
    sp.add_argument("sizes", help="comma-separated sizes, e.g. 2,5,10,20")
    sp.add_argument("--csv", default=None, metavar="PATH", help="write CSV here")
    add_budget(sp)
    sp.set_defaults(func=cmd_experiment)

    sp = sub.add_parser("sample", help="print linear extensions, one per line")
    sp.add_argument("file")
    sp.add_argument("--samples", type=int, default=1, metavar="N")
    sp.add_argument("--seed", type=int, default=None)
    group = sp.add_mutually_exclusive_group()
    group.add_argument("--exact", action="store_true", help="exact sampling (default)")
    group.add_argument("--mc", action="store_true", help="approximate Markov chain")
    sp.add_argument("--burn-in", type=int, default=None, metavar="N")
    add_budget(sp)
    sp.set_defaults(func=cmd_sample)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return args.func(args)
    except BudgetExceeded as exc:
        print(
            f"error: ideal lattice needs more than {exc.budget} nodes; "
            "raise --budget-nodes",
            file=sys.stderr,
        )
        return 3
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (LinextError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
