"""Command-line front end.

Exit status is 0 on success, 1 on a domain error (message on stderr) and 2
on a usage error.  ``--pd -`` reads the diagram from standard input.
Component indices for ``lk`` are 0-based, in PD ``components:`` order.
"""

from __future__ import annotations

import argparse
import random
import sys
from typing import Sequence, TextIO

from . import __version__
from .alexander import alexander
from .bracket import BracketError, jones, jones_from_bracket, kauffman_bracket, normalized_bracket
from .diagram import (
    Diagram,
    DiagramError,
    PDParseError,
    linking_number,
    parse_pd,
    to_pd,
    total_linking_number,
    writhe,
)
from .hopf_family import compile_H, hopf_bracket, s_family, thistlethwaite, thistlethwaite_pair
from .laurent import LaurentError
from .statesum import DEFAULT_CAP, StateSumCapExceeded
from .tangle import (
    TangleSyntaxError,
    bracket_vector,
    compile_tangle,
    parse_tangle,
    tangle_bracket_statesum,
    to_text,
)


class CLIError(Exception):
    """A domain error reported as ``error: <message>`` with exit status 1."""


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, stderr: TextIO | None = None, **kwargs):
        super().__init__(*args, **kwargs)
        self._stderr = stderr

    def _print_message(self, message, file=None):
        if message:
            (self._stderr if file is sys.stderr and self._stderr else file or sys.stderr).write(message)


def _build_parser(stderr: TextIO) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="state-sum crossing cap (default %(default)s)")
    common.add_argument("--seed", type=int, default=0, help="seed for randomized checks (default %(default)s)")

    p = _Parser(prog="knotbracket", description="Kauffman bracket, Jones and Alexander polynomials, tangle algebra.",
                stderr=stderr)
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help_):
        return sub.add_parser(name, help=help_, parents=[common], stderr=stderr)

    for name, help_ in [
        ("bracket", "Kauffman bracket <L>"),
        ("nbracket", "normalized bracket (-A)^(-3w) <L>"),
        ("jones", "Jones polynomial in t"),
        ("alexander", "Alexander polynomial of a knot"),
    ]:
        cmd(name, help_).add_argument("--pd", required=True, metavar="FILE")

    lk = cmd("lk", "linking numbers")
    lk.add_argument("--pd", required=True, metavar="FILE")
    g = lk.add_mutually_exclusive_group(required=True)
    g.add_argument("--pair", metavar="I,J", type=_pair)
    g.add_argument("--total", action="store_true")

    bv = cmd("brvec", "bracket vector (f, g) of a tangle expression")
    bv.add_argument("--tangle", required=True, metavar="EXPR")
    bv.add_argument("--oracle", action="store_true", help="cross-check against the compiled-diagram state sum")

    h = cmd("hopf", "bracket of the doubled-Hopf satellite H(T, U)")
    h.add_argument("--t", required=True, metavar="EXPR")
    h.add_argument("--u", required=True, metavar="EXPR")
    h.add_argument("--jones", action="store_true")
    h.add_argument("--oracle", action="store_true", help="cross-check against the state sum of the diagram")
    h.add_argument("--emit-pd", metavar="FILE")

    f = cmd("family", "the link S(n) with trivial Jones polynomial")
    f.add_argument("--n", required=True, type=_nonneg, metavar="K")
    f.add_argument("--verify", action="store_true", help="state-sum check when within the cap")
    f.add_argument("--emit-pd", metavar="FILE")

    th = cmd("thistlethwaite", "Thistlethwaite's 15-crossing link")
    th.add_argument("--emit-pd", metavar="FILE")

    sc = cmd("selfcheck", "random differential test of tangle vectors against state sums")
    sc.add_argument("--cases", type=_nonneg, default=50)
    sc.add_argument("--max-crossings", type=_nonneg, default=12)
    return p


def _pair(text: str) -> tuple[int, int]:
    try:
        i, j = (int(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected I,J got {text!r}") from None
    return i, j


def _nonneg(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if n < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {n}")
    return n


def _read_pd(path: str, stdin: TextIO) -> Diagram:
    try:
        if path == "-":
            text = stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise CLIError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        return parse_pd(text)
    except PDParseError as exc:
        raise CLIError(f"PD parse error in {path}: {exc}") from exc
    except DiagramError as exc:
        raise CLIError(f"invalid diagram in {path}: {exc}") from exc


def _tangle(text: str):
    try:
        return parse_tangle(text)
    except TangleSyntaxError as exc:
        raise CLIError(f"tangle syntax error: {exc}") from exc


def _emit(path: str | None, d: Diagram, out: TextIO) -> None:
    if path is None:
        return
    text = to_pd(d)
    if path == "-":
        out.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise CLIError(f"cannot write {path}: {exc.strerror or exc}") from exc


def _oracle_mismatch(what: str, expected, got) -> CLIError:
    return CLIError(f"oracle mismatch for {what}: algebra gives {expected}, state sum gives {got}")


def _run(args, stdin: TextIO, out: TextIO) -> None:
    c = args.command
    if c in ("bracket", "nbracket", "jones", "alexander", "lk"):
        d = _read_pd(args.pd, stdin)
        if c == "bracket":
            print(kauffman_bracket(d, cap=args.cap), file=out)
        elif c == "nbracket":
            print(normalized_bracket(d, cap=args.cap), file=out)
        elif c == "jones":
            print(jones(d, cap=args.cap), file=out)
        elif c == "alexander":
            print(alexander(d).to_str("t"), file=out)
        elif args.total:
            print(total_linking_number(d), file=out)
        else:
            print(linking_number(d, *args.pair), file=out)
        return

    if c == "brvec":
        t = _tangle(args.tangle)
        v = bracket_vector(t)
        print(f"f: {v.f}", file=out)
        print(f"g: {v.g}", file=out)
        if args.oracle:
            td = compile_tangle(t)
            got = tangle_bracket_statesum(td, cap=args.cap)
            if got != v:
                raise _oracle_mismatch(args.tangle, v, got)
            print(f"oracle: ok ({len(td.crossings)} crossings)", file=out)
        return

    if c == "hopf":
        t, u = _tangle(args.t), _tangle(args.u)
        br = hopf_bracket(t, u)
        d = compile_H(t, u)
        w = writhe(d)
        print(f"bracket: {br}", file=out)
        print(f"crossings: {d.n_crossings}", file=out)
        print(f"components: {d.n_components}", file=out)
        print(f"writhe: {w}", file=out)
        if args.jones:
            print(f"jones: {jones_from_bracket(br, w)}", file=out)
        if args.oracle:
            got = kauffman_bracket(d, cap=args.cap)
            if got != br:
                raise _oracle_mismatch("H(T, U)", br, got)
            print("oracle: ok", file=out)
        _emit(args.emit_pd, d, out)
        return

    if c == "family":
        e = s_family(args.n, verify=args.verify, cap=args.cap)
        print(f"n: {e.n}", file=out)
        print(f"T: {to_text(e.T)}", file=out)
        print(f"crossings: {e.diagram.n_crossings}", file=out)
        print(f"writhe: {e.writhe}", file=out)
        print(f"writhes: {', '.join(str(w) for w in sorted(e.writhes))}", file=out)
        print(f"bracket: {e.bracket}", file=out)
        print(f"jones: {e.jones}", file=out)
        if args.verify:
            if e.oracle_bracket is None:
                print(f"oracle: skipped ({e.diagram.n_crossings} crossings > cap {args.cap})", file=out)
            elif e.oracle_bracket != e.bracket:
                raise _oracle_mismatch(f"S({e.n})", e.bracket, e.oracle_bracket)
            else:
                print("oracle: ok", file=out)
        _emit(args.emit_pd, e.diagram, out)
        return

    if c == "thistlethwaite":
        t, u = thistlethwaite_pair()
        d = thistlethwaite()
        w = writhe(d)
        br = hopf_bracket(t, u)
        print(f"T: {to_text(t)}", file=out)
        print(f"U: {to_text(u)}", file=out)
        print(f"crossings: {d.n_crossings}", file=out)
        print(f"writhe: {w}", file=out)
        print(f"bracket: {br}", file=out)
        print(f"jones: {jones_from_bracket(br, w)}", file=out)
        _emit(args.emit_pd, d, out)
        return

    if c == "selfcheck":
        from .randexpr import random_tangle

        rng = random.Random(args.seed)
        checked = 0
        while checked < args.cases:
            t = random_tangle(rng, max_depth=5)
            td = compile_tangle(t)
            if len(td.crossings) > min(args.max_crossings, args.cap):
                continue
            v, got = bracket_vector(t), tangle_bracket_statesum(td, cap=args.cap)
            if v != got:
                raise _oracle_mismatch(to_text(t), v, got)
            checked += 1
        print(f"selfcheck: {checked} expressions ok (seed {args.seed})", file=out)
        return

    raise AssertionError(c)  # pragma: no cover


def run(argv: Sequence[str], stdin: TextIO | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    """Run the CLI and return its exit status."""
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _build_parser(stderr)
    try:
        args = parser.parse_args(list(argv))
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        _run(args, stdin, stdout)
    except CLIError as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    except StateSumCapExceeded as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    except (DiagramError, BracketError, LaurentError) as exc:
        stderr.write(f"error: {exc}\n")
        return 1
    return 0


def main(argv: Sequence[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
