"""Command-line driver: ``proxyrep <command> [instance.json] [options]``.

Exit status is 0 on success, 1 when an arrangement fails verification and 2
for bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from typing import Optional, Sequence

from . import elections, restricted, unrestricted
from .geometry import Arrangement, Instance, TieBreak
from .io import (DocumentError, ResultDocument, emit_instance, emit_result, parse_arrangement,
                 parse_instance_doc, parse_profile, parse_rational)
from .render import render_svg
from .verify import verify_arrangement

OK, VIOLATION, INPUT_ERROR = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise DocumentError(f"usage error: {message}")


def _build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="proxyrep", description="Theta-representative proxy arrangements on a line.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, help_text, instance=True):
        sp = sub.add_parser(name, help=help_text)
        if instance:
            sp.add_argument("instance", nargs="?", default="-",
                            help="instance JSON file ('-' or omitted reads stdin)")
        sp.add_argument("--tiebreak", choices=["left", "right"], default="left")
        sp.add_argument("--out", help="write the output here instead of stdout")
        return sp

    for name in ("solve", "bound"):
        add(name, f"{name} an instance").add_argument(
            "--mode", choices=["restricted", "unrestricted"], required=True)
    g = add("genlower", "emit a lower-bound instance", instance=False)
    g.add_argument("--mode", choices=["restricted", "unrestricted"], required=True)
    g.add_argument("--theta", required=True)
    add("dual", "arrangement for a proxy budget").add_argument("--k", type=int, required=True)
    add("verify", "check an arrangement").add_argument("--arrangement", required=True)
    e = add("elect", "compare direct and proxy election outcomes")
    e.add_argument("--arrangement", required=True)
    e.add_argument("--profile", required=True)
    e.add_argument("--side", choices=["leftmost", "rightmost"], default="leftmost")
    add("render", "draw an instance as SVG").add_argument("--arrangement")
    return p


def _read(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    try:
        with open(source, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise DocumentError(f"cannot read {source}: {exc.strerror}") from None


def _inline_or_file(value: str) -> str:
    """Return file contents if ``value`` names a file, else ``value`` as a JSON list."""
    if os.path.isfile(value):
        return _read(value)
    try:
        json.loads(value)
        return value
    except json.JSONDecodeError:
        # comma separated rationals, e.g. "0,1/2,1"
        return json.dumps([s.strip() for s in value.split(",") if s.strip()])


def _result(mode: str, inst: Instance, arr: Arrangement, tb: TieBreak, name=None,
            count: Optional[int] = None, bounds=None) -> ResultDocument:
    v = verify_arrangement(inst, arr, tb)
    return ResultDocument(mode=mode, theta=inst.theta, proxies=arr.proxies,
                          count=count if count is not None else len(arr),
                          status="ok" if v is None else "violation", violation=v,
                          bounds=bounds or {}, name=name)


def _bounds(inst: Instance, mode: str) -> dict[str, Fraction]:
    upper = (restricted.restricted_upper_bound_size(inst.theta) if mode == "restricted"
             else unrestricted.unrestricted_upper_bound_size(inst.theta))
    return {"upper": Fraction(upper), "lower": Fraction(unrestricted.approx_lower_bound(inst))}


def _dispatch(args) -> tuple[str, int]:
    tb = TieBreak(args.tiebreak)
    cmd = args.command
    if cmd == "genlower":
        theta = parse_rational(args.theta, "--theta")
        if not 0 < theta < 1:
            raise DocumentError("--theta must lie strictly between 0 and 1")
        gen = (restricted.gen_lower_restricted if args.mode == "restricted"
               else unrestricted.gen_lower_unrestricted)
        inst = gen(theta)
        solver = (restricted.solve_restricted_optimal if args.mode == "restricted"
                  else unrestricted.solve_unrestricted_optimal)
        sol = solver(inst, tb)
        res = _result(f"genlower-{args.mode}", inst, sol.arrangement, tb, count=sol.count,
                      bounds=_bounds(inst, args.mode))
        doc = json.loads(emit_instance(inst, name=f"lower-bound-{args.mode}"))
        doc.update(json.loads(emit_result(res)))
        return json.dumps(doc, indent=2) + "\n", OK

    inst, name = parse_instance_doc(_read(args.instance))
    if cmd == "render":
        arr = parse_arrangement(_inline_or_file(args.arrangement)) if args.arrangement else None
        return render_svg(inst, arr), OK
    if cmd == "solve":
        solver = (restricted.solve_restricted_optimal if args.mode == "restricted"
                  else unrestricted.solve_unrestricted_optimal)
        sol = solver(inst, tb)
        res = _result(args.mode, inst, sol.arrangement, tb, name, sol.count,
                      _bounds(inst, args.mode))
    elif cmd == "bound":
        arr = (restricted.upper_bound_restricted(inst) if args.mode == "restricted"
               else unrestricted.upper_bound_unrestricted(inst))
        res = _result(f"bound-{args.mode}", inst, arr, tb, name, bounds=_bounds(inst, args.mode))
    elif cmd == "dual":
        if args.k < 3:
            raise DocumentError("--k must be at least 3")
        theta, arr = unrestricted.dual_theta_for_k(inst, args.k)
        res = _result("dual", inst.with_theta(theta), arr, tb, name,
                      bounds={"budget": Fraction(args.k)})
    elif cmd == "verify":
        arr = parse_arrangement(_inline_or_file(args.arrangement))
        res = _result("verify", inst, arr, tb, name)
    else:  # elect
        arr = parse_arrangement(_inline_or_file(args.arrangement))
        try:
            profile = elections.Profile(parse_profile(_inline_or_file(args.profile)))
        except ValueError as exc:
            raise DocumentError(str(exc)) from None
        side = elections.Side(args.side)
        res = _result("elect", inst, arr, tb, name)
        res.distance = elections.outcome_distance(profile, inst, arr, tb, side)
    return emit_result(res), (OK if res.status == "ok" else VIOLATION)


def run(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = _build_parser().parse_args(argv)
        text, code = _dispatch(args)
    except DocumentError as exc:
        print(f"proxyrep: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except SystemExit as exc:  # --help
        return OK if exc.code in (0, None) else INPUT_ERROR
    if args.out:
        try:
            with open(args.out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"proxyrep: cannot write {args.out}: {exc.strerror}", file=sys.stderr)
            return INPUT_ERROR
    else:
        sys.stdout.write(text)
    return code


def main() -> None:
    sys.exit(run())
