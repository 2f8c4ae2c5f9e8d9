"""Command-line driver: ``matroid-functors <subcommand> ...``.

Verdict commands print ``yes``/``no`` (or a TE status) on the first line.
Exit codes: 0 success or positive verdict, 1 negative verdict, 2 usage or
input error, 3 search budget exhausted.
"""

from __future__ import annotations

import argparse
import contextlib
import io
import sys
from pathlib import Path

from .core import (
    Family,
    Matroid,
    MatroidError,
    add_coloop,
    circuits,
    direct_sum,
    is_matroid,
    matroids_isomorphic,
    restriction,
)
from .exchange import BUDGET, DEFAULT_BUDGET, FAILS, HOLDS, te_check, white_report
from .families import graphic_matroid, is_binary, partition_matroid, transversal_matroid, uniform
from .formats import load, serialize
from .functors import ExpansionVector, contract, expand_family, is_contracted
from .labels import Label, format_labels

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _load_kind(path, kind):
    doc = load(path)
    if doc.kind != kind:
        raise UsageError(f"{path}: expected a {kind} document, got {doc.kind}")
    return doc.payload


def _family(path) -> Family:
    return _load_kind(path, "matroid")


def _matroid(path) -> Matroid:
    return Matroid.from_family(_family(path), check=True)


def _alpha(spec: str) -> ExpansionVector:
    if Path(spec).is_file():
        return _load_kind(spec, "alpha")
    tokens = spec.replace(",", " ").split()
    try:
        return ExpansionVector(tuple(int(t) for t in tokens))
    except ValueError:
        raise UsageError(f"cannot read expansion vector from {spec!r}") from None


def _elements(spec: str) -> list[Label]:
    try:
        return [Label.parse(t) for t in spec.replace(",", " ").split()]
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _yes(flag: bool) -> tuple[int, str]:
    return (EXIT_OK, "yes") if flag else (EXIT_NO, "no")


# -- subcommands -------------------------------------------------------------


def cmd_check(args, out):
    fam = _family(args.file)
    ok = is_matroid(fam)
    code, word = _yes(ok)
    print(word, file=out)
    if ok:
        M = Matroid.from_family(fam, check=False)
        print(f"rank {M.rank}", file=out)
        print(f"bases {len(M)}", file=out)
    return code


def cmd_circuits(args, out):
    for c in circuits(_matroid(args.file)).sets():
        print(f"circuit {format_labels(c)}".rstrip(), file=out)
    return EXIT_OK


def cmd_rank(args, out):
    print(_matroid(args.file).rank, file=out)
    return EXIT_OK


def cmd_restrict(args, out):
    out.write(serialize(restriction(_matroid(args.file), _elements(args.keep))))
    return EXIT_OK


def cmd_expand(args, out):
    out.write(serialize(expand_family(_family(args.file), _alpha(args.alpha))))
    return EXIT_OK


def cmd_contract(args, out):
    res = contract(_family(args.file))
    out.write(serialize(res.contracted))
    print(f"# alpha {res.alpha}", file=out)
    for cls in res.classes:
        print(f"# class {cls[0]}: {' '.join(map(str, cls))}", file=out)
    return EXIT_OK


def cmd_iscontracted(args, out):
    code, word = _yes(is_contracted(_family(args.file)))
    print(word, file=out)
    return code


def cmd_binary(args, out):
    code, word = _yes(is_binary(_matroid(args.file)))
    print(word, file=out)
    return code


def cmd_isomorphic(args, out):
    found = matroids_isomorphic(_family(args.first), _family(args.second))
    code, word = _yes(found is not None)
    print(word, file=out)
    if found is not None:
        for x in sorted(found):
            print(f"{x} -> {found[x]}", file=out)
    return code


def cmd_construct(args, out):
    kind, params = args.kind, args.params
    try:
        if kind == "uniform" and len(params) == 2:
            M = uniform(int(params[0]), int(params[1]))
        elif kind == "partition" and len(params) == 2:
            M = partition_matroid(_load_kind(params[0], "system"), int(params[1]))
        elif kind == "graphic" and len(params) == 1:
            M = graphic_matroid(_load_kind(params[0], "graph"))
        elif kind == "transversal" and len(params) == 1:
            M = transversal_matroid(_load_kind(params[0], "system"))
        else:
            raise UsageError(
                "usage: construct uniform T N | partition SYSTEM T | graphic GRAPH | transversal SYSTEM"
            )
    except ValueError as exc:
        if isinstance(exc, MatroidError):
            raise
        raise UsageError(str(exc)) from None
    out.write(serialize(M))
    return EXIT_OK


_STATUS_EXIT = {HOLDS: EXIT_OK, FAILS: EXIT_NO, BUDGET: EXIT_BUDGET}


def cmd_te(args, out):
    v = te_check(_matroid(args.file), args.exchange_class, args.m, args.budget)
    print(v.status, file=out)
    print(f"sequences {v.nodes}", file=out)
    print(f"nontrivial_classes {v.nontrivial_classes}", file=out)
    if v.witness:
        print(f"witness {v.witness[0]}", file=out)
        print(f"witness {v.witness[1]}", file=out)
    return _STATUS_EXIT[v.status]


def cmd_white(args, out):
    rep = white_report(_matroid(args.file), args.mmax, args.budget)
    print(rep.summary, file=out)
    out.write(rep.to_kv() if args.format == "kv" else rep.to_table())
    return {"yes": EXIT_OK, "no": EXIT_NO}.get(rep.summary, EXIT_BUDGET)


def cmd_sum(args, out):
    out.write(serialize(direct_sum(_matroid(args.first), _matroid(args.second))))
    return EXIT_OK


def cmd_coloop(args, out):
    (z,) = _elements(args.element)
    out.write(serialize(add_coloop(_matroid(args.file), z)))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="matroid-functors", description="Expansion/contraction functors and exchange checks.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def one_file(name, func, help):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("file")
        sp.set_defaults(func=func)
        return sp

    one_file("check", cmd_check, "is the basis list a matroid?")
    one_file("circuits", cmd_circuits, "list the circuits")
    one_file("rank", cmd_rank, "print the rank")
    one_file("restrict", cmd_restrict, "restrict to a subset").add_argument("--keep", required=True)
    one_file("expand", cmd_expand, "expand by a multiplicity vector").add_argument(
        "--alpha", required=True, help="alpha file or comma-separated multiplicities"
    )
    one_file("contract", cmd_contract, "contract equivalent elements")
    one_file("iscontracted", cmd_iscontracted, "is every equivalence class a singleton?")
    one_file("binary", cmd_binary, "circuit criterion for binary matroids")

    sp = sub.add_parser("isomorphic", help="search for a relabeling")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.set_defaults(func=cmd_isomorphic)

    sp = sub.add_parser("construct", help="build a standard matroid")
    sp.add_argument("kind", choices=["uniform", "partition", "graphic", "transversal"])
    sp.add_argument("params", nargs="*")
    sp.set_defaults(func=cmd_construct)

    sp = one_file("te", cmd_te, "bounded exchange-connectivity check")
    sp.add_argument("--class", dest="exchange_class", type=int, choices=[1, 2, 3], required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)

    sp = one_file("white", cmd_white, "contract, then run all bounded checks")
    sp.add_argument("--mmax", type=int, required=True)
    sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    sp.add_argument("--format", choices=["table", "kv"], default="table")

    sp = sub.add_parser("sum", help="direct sum of two matroids")
    sp.add_argument("first")
    sp.add_argument("second")
    sp.set_defaults(func=cmd_sum)

    sp = one_file("coloop", cmd_coloop, "add an element to every basis")
    sp.add_argument("element")
    return p


def run(argv) -> tuple[int, str]:
    """Execute one invocation; returns ``(exit code, stdout text)``."""
    out = io.StringIO()
    try:
        args = build_parser().parse_args(list(argv))
        code = args.func(args, out)
    except (UsageError, MatroidError, OSError) as exc:
        return EXIT_USAGE, out.getvalue() + f"error: {exc}\n"
    except SystemExit as exc:  # --help
        return int(exc.code or 0), out.getvalue()
    return code, out.getvalue()


def main(argv=None) -> int:
    with contextlib.suppress(BrokenPipeError):
        code, text = run(sys.argv[1:] if argv is None else argv)
        stream = sys.stderr if code == EXIT_USAGE else sys.stdout
        stream.write(text)
        return code
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
