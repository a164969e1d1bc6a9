"""Command line front end.

Atlas documents are read from stdin (or ``-f FILE``) and written to stdout
one per line, so commands compose in pipelines::

    striped gen --seed 7 --strips 4 | striped cut --singular | striped reduce | striped check

Exit codes: 0 success / every check passed, 1 a check failed or the atlas
is invalid, 2 usage or parse error.
"""
from __future__ import annotations

import argparse
import contextlib
import sys
from fractions import Fraction

from .atlas import AtlasParseError, dump_json, parse, serialize, validate
from .generator import GenParams, enumerate_small, random_atlas
from .leafspace import (build_leaf_space, export_dot, export_json, leafspace_isomorphic,
                        smooth)
from .leaves import SINGULAR_TYPES, classify, enumerate_leaves, leaf_of_pair, leaf_record
from .surgery import (SurgeryError, canonical_form, cut, cutmap_to_json, reduce,
                      report_to_obj)
from .theorems import CHECKS


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


class _Invalid(Exception):
    pass


def _read(args, stdin, name="file"):
    path = getattr(args, name, None)
    if path in (None, "-"):
        return stdin.read()
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _load(text, stderr):
    atlas = parse(text)
    violations = validate(atlas)
    if violations:
        for v in violations:
            print(f"invalid atlas: {v}", file=stderr)
        raise _Invalid
    return atlas


def _write_side_document(path, text, stderr):
    if path is None:
        stderr.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


# -- subcommands -----------------------------------------------------------

def cmd_validate(args, stdin, stdout, stderr):
    violations = validate(parse(_read(args, stdin)))
    stdout.write(dump_json({"valid": not violations,
                            "violations": [{"rule": v.rule, "id": v.id} for v in violations]}))
    return 1 if violations else 0


def cmd_classify(args, stdin, stdout, stderr):
    atlas = _load(_read(args, stdin), stderr)
    for leaf in enumerate_leaves(atlas):
        stdout.write(dump_json(leaf_record(atlas, leaf)))
    return 0


def cmd_leafspace(args, stdin, stdout, stderr):
    ls = build_leaf_space(_load(_read(args, stdin), stderr))
    if args.smooth:
        ls = smooth(ls)
    stdout.write(export_dot(ls) if args.dot else export_json(ls))
    return 0


def cmd_reduce(args, stdin, stdout, stderr):
    reduced, report = reduce(_load(_read(args, stdin), stderr))
    stdout.write(serialize(reduced))
    _write_side_document(args.report, dump_json(report_to_obj(report)), stderr)
    return 0


def cmd_cut(args, stdin, stdout, stderr):
    atlas = _load(_read(args, stdin), stderr)
    if args.singular:
        pairs = [p.id for p in atlas.pairs
                 if classify(atlas, leaf_of_pair(p)) in SINGULAR_TYPES]
    else:
        pairs = [pid for chunk in args.pairs or () for pid in chunk.split(",") if pid]
    result, cm = cut(atlas, pairs)
    stdout.write(serialize(result))
    _write_side_document(args.cutmap, cutmap_to_json(cm), stderr)
    return 0


def cmd_canon(args, stdin, stdout, stderr):
    stdout.write(canonical_form(_load(_read(args, stdin), stderr)))
    return 0


def cmd_check(args, stdin, stdout, stderr):
    names = [n for n in CHECKS if getattr(args, n)] or list(CHECKS)
    text = _read(args, stdin)
    if args.corpus:
        docs = [line for line in text.splitlines() if line.strip()]
    else:
        docs = [text]
    ok = True
    for k, doc in enumerate(docs):
        atlas = _load(doc, stderr)
        for name in names:
            rep = CHECKS[name](atlas)
            ok &= rep.passed
            rec = rep.to_obj()
            if args.corpus:
                rec = {"index": k, **rec}
            stdout.write(dump_json(rec))
    return 0 if ok else 1


def cmd_gen(args, stdin, stdout, stderr):
    if args.enumerate is not None:
        k, m = args.enumerate
        for atlas in enumerate_small(k, m):
            stdout.write(serialize(atlas))
        return 0
    if args.seed is None:
        raise UsageError("gen: --seed or --enumerate is required")
    try:
        density = Fraction(args.density)
        params = GenParams(args.seed, args.strips, args.ivals, density)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"gen: {exc}") from None
    stdout.write(serialize(random_atlas(params)))
    return 0


def cmd_iso(args, stdin, stdout, stderr):
    with open(args.file_a, encoding="utf-8") as fh:
        a = _load(fh.read(), stderr)
    with open(args.file_b, encoding="utf-8") as fh:
        b = _load(fh.read(), stderr)
    if args.leafspace:
        equal = leafspace_isomorphic(smooth(build_leaf_space(a)), smooth(build_leaf_space(b)))
    else:
        equal = canonical_form(a) == canonical_form(b)
    stdout.write(dump_json({"equal": equal, "by": "leafspace" if args.leafspace else "canonical"}))
    return 0 if equal else 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="striped", description="Striped surfaces: atlases, leaves, "
                                                 "leaf spaces and surgery.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def command(name, func, help, reads=True):
        p = sub.add_parser(name, help=help)
        if reads:
            p.add_argument("-f", "--file", help="input document (default: stdin)")
        p.set_defaults(func=func)
        return p

    command("validate", cmd_validate, "list well-formedness violations")
    command("classify", cmd_classify, "type and predicates of every leaf")

    p = command("leafspace", cmd_leafspace, "leaf space as DOT or JSON")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true", help="(default)")
    p.add_argument("--smooth", action="store_true", help="erase regular glued nodes first")

    p = command("reduce", cmd_reduce, "merge c2 pairs; report cylinders and Moebius bands")
    p.add_argument("--report", metavar="PATH",
                   help="write the extraction report here (default: stderr)")

    p = command("cut", cmd_cut, "unglue pairs")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--pairs", nargs="*", metavar="ID", help="pair ids, space or comma separated")
    which.add_argument("--singular", action="store_true", help="every pair whose leaf is singular")
    p.add_argument("--cutmap", metavar="PATH", help="write the cut map here (default: stderr)")

    command("canon", cmd_canon, "canonical form")

    p = command("check", cmd_check, "run the characterization checks")
    p.add_argument("--all", action="store_true", help="(default)")
    for name in CHECKS:
        p.add_argument(f"--{name}", action="store_true")
    p.add_argument("--corpus", action="store_true", help="input is a stream of documents")

    p = command("gen", cmd_gen, "random or enumerated atlases", reads=False)
    p.add_argument("--seed", type=int)
    p.add_argument("--strips", type=int, default=4)
    p.add_argument("--ivals", type=int, default=2)
    p.add_argument("--density", default="1/2")
    p.add_argument("--enumerate", nargs=2, type=int, metavar=("K", "M"))

    p = command("iso", cmd_iso, "compare two atlases", reads=False)
    p.add_argument("file_a")
    p.add_argument("file_b")
    p.add_argument("--leafspace", action="store_true", help="compare smoothed leaf spaces")
    return parser


def main(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stderr):
            # --help output counts as a diagnostic
            args = parser.parse_args(argv)
    except UsageError as exc:
        print(exc, file=stderr)
        return 2
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, stdin, stdout, stderr)
    except UsageError as exc:
        print(exc, file=stderr)
        return 2
    except AtlasParseError as exc:
        print(f"parse error: {exc}", file=stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=stderr)
        return 2
    except _Invalid:
        return 1
    except SurgeryError as exc:
        print(f"error: {exc}", file=stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
