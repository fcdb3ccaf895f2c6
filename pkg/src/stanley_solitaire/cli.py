"""Command-line front door. Thin dispatch onto the package; every
subcommand prints human-readably by default and machine-readably with
--json (counts always as decimal strings, they outgrow 64-bit fast).

Exit codes: 0 success, 1 runtime or verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import itertools
import json
import random
import sys

from .counting import PlayLimitExceeded, count_plays, enumerate_plays, sample_play
from .formulas import (
    arrange,
    catalan,
    count_syt_bruteforce,
    fact_three_piles,
    is_231_avoiding,
    parse_partition,
    yfm,
)
from .guess import Template, default_grid, fit_template
from .positions import (
    format_position,
    legal_moves,
    parse_position,
    total_candies,
)
from .reduced_words import (
    count_reduced_words,
    format_permutation,
    parse_permutation,
    stanley_witness,
)
from .verify import SWEEPS

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2


def _emit(args, payload: dict, human: str) -> None:
    if args.json:
        print(json.dumps(payload))
    else:
        print(human)


def _play_to_text(play) -> str:
    return " -> ".join(format_position(p) for p in play)


def cmd_count(args) -> int:
    p = parse_position(args.position)
    n = count_plays(p)
    _emit(args, {"position": list(p), "count": str(n)}, str(n))
    return EXIT_OK


def cmd_moves(args) -> int:
    p = parse_position(args.position)
    options = [(i, child, count_plays(child)) for i, child in legal_moves(p)]
    if args.json:
        print(
            json.dumps(
                {
                    "position": list(p),
                    "total": total_candies(p),
                    "count": str(count_plays(p)),
                    "moves": [
                        {"index": i, "position": list(c), "count": str(n)}
                        for i, c, n in options
                    ],
                }
            )
        )
    else:
        print(
            f"position {format_position(p)}  candies {total_candies(p)}  "
            f"plays {count_plays(p)}"
        )
        for i, child, n in options:
            print(f"  move {i} -> {format_position(child)}  plays {n}")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    p = parse_position(args.position)
    plays = enumerate_plays(p, args.limit)
    if args.json:
        print(
            json.dumps(
                {
                    "position": list(p),
                    "count": str(len(plays)),
                    "plays": [[list(q) for q in play] for play in plays],
                }
            )
        )
    else:
        for play in plays:
            print(_play_to_text(play))
    return EXIT_OK


def cmd_sample(args) -> int:
    p = parse_position(args.position)
    rng = random.Random(args.seed)
    play = sample_play(p, rng)
    _emit(
        args,
        {"position": list(p), "play": [list(q) for q in play]},
        _play_to_text(play),
    )
    return EXIT_OK


def cmd_yfm(args) -> int:
    value = yfm(parse_partition(args.partition))
    _emit(args, {"value": str(value)}, str(value))
    return EXIT_OK


def cmd_syt(args) -> int:
    value = count_syt_bruteforce(parse_partition(args.partition), args.max_cells)
    _emit(args, {"value": str(value)}, str(value))
    return EXIT_OK


def cmd_fact3(args) -> int:
    value = fact_three_piles(b=args.b, c=args.c, a=args.a)
    _emit(args, {"value": str(value)}, str(value))
    return EXIT_OK


def cmd_avoiders(args) -> int:
    patterns = [
        pi
        for pi in itertools.permutations(range(1, args.k + 1))
        if is_231_avoiding(pi)
    ]
    if args.list:
        for pi in patterns:
            print(format_permutation(pi))
    expected = catalan(args.k)
    payload = {"k": args.k, "count": str(len(patterns)), "catalan": str(expected)}
    if not args.list:
        _emit(args, payload, str(len(patterns)))
    elif args.json:
        print(json.dumps(payload))
    return EXIT_OK


def cmd_arrange(args) -> int:
    p = arrange(parse_partition(args.partition), parse_permutation(args.pattern))
    _emit(args, {"position": list(p)}, format_position(p))
    return EXIT_OK


def cmd_reduced(args) -> int:
    value = count_reduced_words(parse_permutation(args.permutation))
    _emit(args, {"value": str(value)}, str(value))
    return EXIT_OK


def cmd_witness(args) -> int:
    w = stanley_witness(parse_partition(args.partition))
    _emit(args, {"permutation": list(w)}, format_permutation(w))
    return EXIT_OK


_SWEEP_FLAGS = {
    "yfm": ("max_sum",),
    "fact3": ("max_sum",),
    "rearrange": ("max_sum", "max_len"),
    "witness": ("max_first_part",),
    "staircase": ("max_n",),
    "recurrences": ("max_a1",),
}


def cmd_verify(args) -> int:
    bounds = {}
    for name in ("max_sum", "max_len", "max_first_part", "max_n", "max_a1"):
        value = getattr(args, name)
        if value is None:
            continue
        if name not in _SWEEP_FLAGS[args.sweep]:
            raise ValueError(
                f"--{name.replace('_', '-')} does not apply to the {args.sweep} sweep"
            )
        bounds[name] = value
    report = SWEEPS[args.sweep](**bounds)
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        print(report.summary())
        for m in report.mismatches:
            print(f"  {m.case}: expected {m.expected}, got {m.actual}")
    return EXIT_OK if report.ok else EXIT_FAILURE


def cmd_guess(args) -> int:
    lo, _, hi = args.range.partition(":")
    template = Template(args.gap, args.template)
    form = fit_template(
        template,
        default_grid(template, args.grid_max),
        offset_range=(int(lo), int(hi)),
        max_degree=args.degree,
        holdout=args.holdout,
    )
    if form is None:
        _emit(args, {"fit": None}, f"no fit for {template}")
        return EXIT_OK
    payload = {
        "fit": form.to_dict(),
        "template": str(template),
        "formula": str(form),
    }
    _emit(args, payload, str(form))
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app, default_static_dir

    app = create_app(
        static_dir=args.static_dir or default_static_dir(),
        cache_cap=args.cache_cap,
    )
    uvicorn.run(app, host=args.bind, port=args.port)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="stanley-solitaire",
        description="Exact play counting and exploration for Stanley solitaire.",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("count", parents=[common], help="exact number of plays")
    sp.add_argument("position")
    sp.set_defaults(func=cmd_count)

    sp = sub.add_parser("moves", parents=[common], help="legal moves with play counts")
    sp.add_argument("position")
    sp.set_defaults(func=cmd_moves)

    sp = sub.add_parser("enumerate", parents=[common], help="list every complete play")
    sp.add_argument("position")
    sp.add_argument("--limit", type=int, default=1000, help="refuse beyond this many plays")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("sample", parents=[common], help="one uniformly random play")
    sp.add_argument("position")
    sp.add_argument("--seed", type=int, default=None)
    sp.set_defaults(func=cmd_sample)

    sp = sub.add_parser("yfm", parents=[common], help="closed-form count for a partition")
    sp.add_argument("partition")
    sp.set_defaults(func=cmd_yfm)

    sp = sub.add_parser("syt", parents=[common], help="brute-force tableau count for a shape")
    sp.add_argument("partition")
    sp.add_argument("--max-cells", type=int, default=12)
    sp.set_defaults(func=cmd_syt)

    sp = sub.add_parser(
        "fact3", parents=[common], help="three-pile closed form for [b,c,a], a >= b >= c"
    )
    sp.add_argument("--a", type=int, required=True, help="rightmost (largest) pile")
    sp.add_argument("--b", type=int, required=True, help="leftmost pile")
    sp.add_argument("--c", type=int, required=True, help="middle (smallest) pile")
    sp.set_defaults(func=cmd_fact3)

    sp = sub.add_parser("avoiders", parents=[common], help="231-avoiding patterns of S_k")
    sp.add_argument("k", type=int)
    sp.add_argument("--list", action="store_true", help="print each avoider")
    sp.set_defaults(func=cmd_avoiders)

    sp = sub.add_parser("arrange", parents=[common], help="rearrange a partition by a pattern")
    sp.add_argument("partition")
    sp.add_argument("pattern")
    sp.set_defaults(func=cmd_arrange)

    sp = sub.add_parser("reduced", parents=[common], help="number of reduced words")
    sp.add_argument("permutation")
    sp.set_defaults(func=cmd_reduced)

    sp = sub.add_parser(
        "witness", parents=[common], help="witness permutation of a strictly decreasing partition"
    )
    sp.add_argument("partition")
    sp.set_defaults(func=cmd_witness)

    sp = sub.add_parser("verify", parents=[common], help="identity sweeps against the DP")
    sp.add_argument("sweep", choices=sorted(SWEEPS))
    sp.add_argument("--max-sum", type=int, default=None)
    sp.add_argument("--max-len", type=int, default=None)
    sp.add_argument("--max-first-part", type=int, default=None)
    sp.add_argument("--max-n", type=int, default=None)
    sp.add_argument("--max-a1", type=int, default=None)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("guess", parents=[common], help="fit a closed form to DP data")
    sp.add_argument("--template", choices=["x>y", "x<y", "x>=y"], default="x>=y")
    sp.add_argument("--gap", type=int, default=0, help="zeros between the two piles")
    sp.add_argument("--degree", type=int, default=3, help="maximum polynomial degree")
    sp.add_argument("--range", default="0:3", help="offset search range LO:HI")
    sp.add_argument("--grid-max", type=int, default=10)
    sp.add_argument("--holdout", type=int, default=10)
    sp.set_defaults(func=cmd_guess)

    sp = sub.add_parser("serve", parents=[common], help="run the HTTP API and explorer UI")
    sp.add_argument("--port", type=int, default=8000)
    sp.add_argument("--bind", default="127.0.0.1")
    sp.add_argument("--static-dir", default=None, help="built UI directory to host at /")
    sp.add_argument("--cache-cap", type=int, default=None)
    sp.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (PlayLimitExceeded, ArithmeticError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAILURE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
