"""Command-line entry point.

Subcommands: solve-lattice, count, series, verify, compile-formula,
conjecture, play, serve, report.  Usage errors exit 2; verification
mismatches exit 1.  All outputs are deterministic given the flags; --json
emits machine-readable output.
"""

from __future__ import annotations

import argparse
import json
import sys

from .errors import IllegalMove, NibbleError


def _parse_partition(text):
    text = text.strip()
    if not text:
        return ()
    return tuple(int(p) for p in text.split(","))


def cmd_solve_lattice(args):
    from .lattice import FiniteLattice, WinLabel

    with open(args.path) as fh:
        spec = json.load(fh)
    lat = FiniteLattice(spec["n"], spec["covers"], spec.get("labels"))
    labels = lat.solve()
    if args.json:
        out = {
            "schema_version": 1,
            "n": lat.n,
            "labels": [lab.value for lab in labels],
            "top": lat.top,
            "top_label": labels[lat.top].value,
            "eeta_count": sum(1 for lab in labels if lab is WinLabel.EETA),
        }
        print(json.dumps(out, sort_keys=True))
    else:
        for x in range(lat.n):
            name = lat.labels[x] if lat.labels else str(x)
            print(f"{x}\t{name}\t{labels[x].value}")
        print(f"top element {lat.top}: {labels[lat.top].value}")
    return 0


def cmd_count(args):
    if args.family == "weak":
        from .weak import count_eeta_sn

        value = count_eeta_sn(args.n)
    elif args.family == "tamari":
        from .tamari import count_eeta_tam

        value = count_eeta_tam(args.n)
    elif args.family == "typea":
        from .dyck import type_a_eeta_count

        value = type_a_eeta_count(args.n)
    elif args.family == "rectangle":
        from .young import count_eeta_rectangle

        value = count_eeta_rectangle(args.a, args.b)
    elif args.family == "skew":
        from .posets import count_eeta_ideals, skew_shape

        value = count_eeta_ideals(skew_shape(args.lam, args.mu))
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(args.family)
    if args.json:
        print(
            json.dumps(
                {"schema_version": 1, "family": args.family, "count": value},
                sort_keys=True,
            )
        )
    else:
        print(value)
    return 0


def cmd_series(args):
    if args.which == "typea":
        from .dyck import type_a_series

        coeffs = type_a_series(args.order).assert_integral()
    elif args.which == "tamari":
        from .tamari import g_f_series

        _, f = g_f_series(args.order)
        coeffs = f.assert_integral()
    elif args.which == "tamari-indecomposable":
        from .tamari import g_f_series

        g, _ = g_f_series(args.order)
        coeffs = g.assert_integral()
    else:  # pragma: no cover
        raise ValueError(args.which)
    print(json.dumps([str(c) for c in coeffs]))
    return 0


def cmd_verify(args):
    from .verify import SUITES, run_suites

    names = list(SUITES) if args.suite == "all" else [args.suite]
    results = run_suites(names, quick=args.quick)
    failed = [r for r in results if not r["passed"]]
    if args.json:
        print(json.dumps(results, sort_keys=True, default=str))
    else:
        for r in results:
            mark = "PASS" if r["passed"] else "FAIL"
            detail = r["detail"]
            if isinstance(detail, dict):
                detail = detail.get("summary", "")
            print(f"{mark} [{r['seconds']:7.2f}s] {r['name']}: {detail}")
        print(f"{len(results) - len(failed)}/{len(results)} checks passed")
        for r in failed:
            print(f"FAILED: {r['name']}: {r['detail']}", file=sys.stderr)
    return 1 if failed else 0


def cmd_compile_formula(args):
    from .formula import compile_formula, evaluate, parse
    from .lattice import WinLabel

    tree = parse(args.formula)
    assignment = {}
    if args.assign:
        for item in args.assign.split(","):
            name, _, value = item.partition("=")
            if value not in ("0", "1"):
                raise NibbleError(f"assignment {item!r} must set 0 or 1")
            assignment[name.strip()] = int(value)
    lat = compile_formula(tree, assignment)
    label = lat.label_of_top()
    truth = evaluate(tree, assignment)
    if args.emit:
        with open(args.emit, "w") as fh:
            json.dump(lat.to_json_dict(), fh, sort_keys=True)
            fh.write("\n")
    out = {
        "schema_version": 1,
        "formula": args.formula,
        "truth_value": truth,
        "lattice_size": lat.n,
        "top_label": label.value,
        "equivalent": (label is WinLabel.EETA) == (truth == 1),
    }
    if args.json:
        print(json.dumps(out, sort_keys=True))
    else:
        print(
            f"value {truth}; compiled lattice has {lat.n} elements, "
            f"top is {label.value} ({'consistent' if out['equivalent'] else 'INCONSISTENT'})"
        )
    return 0 if out["equivalent"] else 1


def cmd_conjecture(args):
    if args.which == "yf":
        from .conjectures import YoungFibonacci, yf_conjecture_check

        lattice = YoungFibonacci(args.max_rank)
        reports = [yf_conjecture_check(n, lattice) for n in range(2, args.max_rank + 1)]
    else:
        from .conjectures import ss_conjecture_check

        reports = [
            {
                "n": rep["n"],
                "computed": rep["states"] - len(rep["mismatches"]),
                "predicted": rep["states"],
                "match": rep["match"],
            }
            for rep in (ss_conjecture_check(n) for n in range(1, args.n + 1))
        ]
    if args.json:
        print(json.dumps(reports, sort_keys=True))
    else:
        for rep in reports:
            mark = "match" if rep["match"] else "MISMATCH"
            print(
                f"n={rep['n']}: computed {rep['computed']}, predicted {rep['predicted']} [{mark}]"
            )
    return 0


def cmd_play(args):
    from .engine import engine_move, make_game, winning_moves

    params = {"lam": args.lam, "mu": args.mu, "n": args.n}
    if args.family == "file":
        with open(args.path) as fh:
            params["lattice"] = json.load(fh)
        family = "lattice"
    else:
        family = args.family
    game = make_game(family, params)
    state = game.start()
    human_turn = not args.engine_first
    print("You play the first player." if human_turn else "Engine plays first.")
    print("Enter moves as shown in the legal-move list; 'hint' lists winning moves; 'q' quits.")
    while True:
        print()
        print(game.render(state))
        moves = game.legal_moves(state)
        if not moves:
            loser = "You" if human_turn else "Engine"
            print(f"{loser} cannot make a nontrivial move -- "
                  f"{'engine wins' if human_turn else 'you win'}.")
            return 0
        if human_turn:
            legal = [mv for mv, _ in moves]
            print("legal moves:", json.dumps(legal))
            try:
                line = input("your move> ").strip()
            except EOFError:
                return 0
            if line in ("q", "quit"):
                return 0
            if line == "hint":
                print("winning moves:", json.dumps(winning_moves(game, state)))
                continue
            try:
                move = _parse_move_text(line, game)
            except (ValueError, IllegalMove) as exc:
                print(f"could not read that move: {exc}")
                continue
            chosen = None
            for mv, nxt in moves:
                if mv == move:
                    chosen = nxt
                    break
            if chosen is None:
                print("illegal move; choose one of the listed moves")
                continue
            state = chosen
        else:
            move, state = engine_move(game, state)
            print("engine plays:", json.dumps(move))
        human_turn = not human_turn


def _parse_move_text(line, game):
    from .engine import LatticeGame, SkewGame

    line = line.strip()
    if line.startswith("["):
        return json.loads(line)
    if isinstance(game, SkewGame):
        # "r,c r,c" -> [[r, c], ...]
        boxes = []
        for token in line.replace(";", " ").split():
            r, _, c = token.partition(",")
            boxes.append([int(r), int(c)])
        return sorted(boxes)
    if isinstance(game, LatticeGame):
        return int(line)
    return [int(v) for v in line.replace(",", " ").split()]


def cmd_serve(args):
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port)
    return 0


def cmd_report(args):
    from .report import write_report

    paths = write_report(args.out, order=args.order)
    for path in paths:
        print(path)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="nibble",
        description="Solve, enumerate, verify and play last-player-loses meet games on finite lattices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve-lattice", help="solve a lattice from a JSON file")
    p.add_argument("path")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_solve_lattice)

    p = sub.add_parser("count", help="count responder wins in a family")
    p.add_argument("--family", required=True,
                   choices=["weak", "tamari", "typea", "rectangle", "skew"])
    p.add_argument("--n", type=int)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--lam", type=_parse_partition, default=())
    p.add_argument("--mu", type=_parse_partition, default=())
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("series", help="emit exact counting-series coefficients as JSON")
    p.add_argument("--which", required=True,
                   choices=["typea", "tamari", "tamari-indecomposable"])
    p.add_argument("--order", type=int, default=200)
    p.set_defaults(fn=cmd_series)

    p = sub.add_parser("verify", help="run verification suites")
    from .verify import SUITES

    p.add_argument("--suite", default="all", choices=["all"] + list(SUITES))
    p.add_argument("--quick", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("compile-formula", help="compile a boolean formula to a game lattice")
    p.add_argument("--formula", required=True)
    p.add_argument("--assign", default="")
    p.add_argument("--emit")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_compile_formula)

    p = sub.add_parser("conjecture", help="run a conjecture checker")
    p.add_argument("--which", required=True, choices=["yf", "ss"])
    p.add_argument("--max-rank", type=int, default=12)
    p.add_argument("--n", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_conjecture)

    p = sub.add_parser("play", help="play against the engine in the terminal")
    p.add_argument("--family", required=True, choices=["skew", "tamari", "weak", "file"])
    p.add_argument("--lam", type=_parse_partition, default=())
    p.add_argument("--mu", type=_parse_partition, default=())
    p.add_argument("--n", type=int)
    p.add_argument("--path")
    p.add_argument("--engine-first", action="store_true")
    p.set_defaults(fn=cmd_play)

    p = sub.add_parser("serve", help="serve the HTTP session API")
    p.add_argument("--port", type=int, default=8321)
    p.add_argument("--host", default="127.0.0.1")
    p.set_defaults(fn=cmd_serve)

    p = sub.add_parser("report", help="write CSV tables and figures")
    p.add_argument("--out", required=True)
    p.add_argument("--order", type=int, default=200)
    p.set_defaults(fn=cmd_report)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except NibbleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
