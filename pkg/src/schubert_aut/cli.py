"""Command-line front end: ``schubert-aut <verb> <TYPE> [options]``.

Exit status: 0 success, 1 verification failure, 2 usage error,
3 enumeration cap exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from .classify import PreconditionError, classify
from .constructions import list_suites, verify_lemma_suite
from .demazure import Character, demazure_apply, module_character
from .extremal import minimal_negator, minimal_transporter
from .rootsys import NotARootError, UnsupportedTypeError, Weight, build
from .schubert import search_witnesses, verify_witness
from .verify import run_all
from .weyl import DEFAULT_CAP, EnumerationTooLarge, from_word

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


class UsageError(Exception):
    pass


def parse_word(text: str | None) -> list[int]:
    """Accept ``"1,2,3"``, ``"[1, 2, 3]"`` or an empty string."""
    if text is None:
        return []
    text = text.strip()
    if not text:
        return []
    try:
        value = json.loads(text) if text.startswith("[") else [int(x) for x in text.split(",") if x.strip()]
    except (ValueError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot parse index list {text!r}") from exc
    if not isinstance(value, list) or not all(isinstance(x, int) for x in value):
        raise UsageError(f"index list must contain integers: {text!r}")
    return value


def _render_text(data, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(data, dict):
        lines = []
        for k, v in data.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.extend(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {json.dumps(v)}")
        return lines
    if isinstance(data, list):
        lines = []
        for item in data:
            sub = _render_text(item, indent + 1)
            if sub:
                sub[0] = pad + "- " + sub[0].lstrip()
            lines.extend(sub)
        return lines
    return [f"{pad}{json.dumps(data)}"]


def dumps(data, indent: int = 0) -> str:
    """Indented JSON that keeps flat lists of scalars on one line."""
    pad, inner = "  " * indent, "  " * (indent + 1)
    if isinstance(data, dict):
        if not data:
            return "{}"
        body = ",\n".join(f"{inner}{json.dumps(str(k))}: {dumps(v, indent + 1)}" for k, v in data.items())
        return "{\n" + body + "\n" + pad + "}"
    if isinstance(data, list):
        if all(not isinstance(x, (dict, list)) for x in data):
            return json.dumps(data)
        if all(isinstance(x, list) and all(not isinstance(y, (dict, list)) for y in x) for x in data):
            return "[" + ", ".join(json.dumps(x) for x in data) + "]"
        body = ",\n".join(inner + dumps(x, indent + 1) for x in data)
        return "[\n" + body + "\n" + pad + "]"
    return json.dumps(data)


def _emit(data, mode: str, out):
    if mode == "text":
        out.write("\n".join(_render_text(data)) + "\n")
    else:
        out.write(dumps(data) + "\n")


def _target(args) -> int:
    t = args.target if args.target is not None else args.index
    if t is None:
        raise UsageError("a target index is required (positional or --target)")
    return t


def _cmd_classify(args):
    rs = build(args.type)
    reports = classify(rs)
    data = {
        "type": str(rs.ctype),
        "minuscule": [r.index for r in reports if r.minuscule],
        "cominuscule": [r.index for r in reports if r.cominuscule],
        "highest_root": list(rs.highest),
        "nodes": [r.to_json() for r in reports],
    }
    return data, True


def _cmd_transporter(args):
    rs = build(args.type)
    res = minimal_transporter(rs, rs.simple_root(_target(args)))
    return {"type": str(rs.ctype), **res.to_json()}, True


def _cmd_negator(args):
    rs = build(args.type)
    res = minimal_negator(rs, _target(args))
    return {"type": str(rs.ctype), **res.to_json()}, True


def _cmd_witness_verify(args):
    rs = build(args.type)
    if args.word is None:
        raise UsageError("witness-verify needs --word")
    w = from_word(rs, parse_word(args.word))
    rep = verify_witness(rs, _target(args), parse_word(args.ambient), w)
    return rep.to_json(), rep.verdict


def _cmd_witness_search(args):
    rs = build(args.type)
    target = _target(args)
    found = search_witnesses(rs, target, args.cap, include_empty=args.include_empty)
    data = {
        "type": str(rs.ctype),
        "target": target,
        "count": len(found),
        "witnesses": [{"ambient": sorted(J), "element": w.to_json()} for J, w in found],
    }
    return data, True


def _cmd_lemmas(args):
    if args.list:
        return {"suites": [{"suite_id": k, "summary": d} for k, d in list_suites()]}, True
    if args.suite is None:
        raise UsageError("lemmas needs a suite id, 'all', or --list")
    ids = [k for k, _ in list_suites()] if args.suite == "all" else [args.suite]
    results = []
    for sid in ids:
        rank = args.rank if sid.startswith("D.") else None
        try:
            results.append(verify_lemma_suite(sid, rank))
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from exc
    data = [r.to_json() for r in results]
    ok = all(r.all_pass for r in results)
    return (data[0] if len(data) == 1 else {"all_pass": ok, "suites": data}), ok


def _cmd_demazure(args):
    rs = build(args.type)
    word = parse_word(args.word)
    if args.weight is not None:
        chi = Character.monomial(Weight(tuple(parse_word(args.weight))))
        if len(chi.sorted_terms()[0][0].fwcoords) != rs.rank:
            raise UsageError(f"--weight needs {rs.rank} fundamental-weight coordinates")
    elif args.module is not None:
        chi = module_character(rs, parse_word(args.module))
    else:
        raise UsageError("demazure needs --module J or --weight")
    res = demazure_apply(rs, word, chi)
    return {"type": str(rs.ctype), "word": word, "dimension": res.dimension, "character": res.to_json()}, True


def _cmd_verify_all(args):
    steps = run_all(deep=args.deep, cap=args.cap, max_rank=args.rank)
    ok = all(s.passed for s in steps)
    return {"all_pass": ok, "deep": args.deep, "steps": [s.to_json() for s in steps]}, ok


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    mode = common.add_mutually_exclusive_group()
    mode.add_argument("--json", dest="mode", action="store_const", const="json", help="JSON output (default)")
    mode.add_argument("--text", dest="mode", action="store_const", const="text", help="plain-text rendering")
    common.add_argument("--cap", type=int, default=DEFAULT_CAP, help="bound on any single coset enumeration")
    common.set_defaults(mode="json")

    parser = argparse.ArgumentParser(prog="schubert-aut", description="Root-system and Schubert-variety checks.")
    sub = parser.add_subparsers(dest="verb", required=True, metavar="VERB")

    p = sub.add_parser("classify", parents=[common], help="minuscule/cominuscule table")
    p.add_argument("type")
    p.set_defaults(func=_cmd_classify)

    for verb, fn, what in (
        ("transporter", _cmd_transporter, "minimal u with u^-1(alpha_0) = alpha_i"),
        ("negator", _cmd_negator, "minimal v with v^-1(alpha_0) = -alpha_i"),
    ):
        p = sub.add_parser(verb, parents=[common], help=what)
        p.add_argument("type")
        p.add_argument("index", type=int, nargs="?")
        p.add_argument("--target", type=int)
        p.set_defaults(func=fn)

    p = sub.add_parser("witness-verify", parents=[common], help="check one (J, w) pair")
    p.add_argument("type")
    p.add_argument("index", type=int, nargs="?")
    p.add_argument("--target", type=int)
    p.add_argument("--ambient", default="", help="ambient set J, e.g. 3 or 2,4")
    p.add_argument("--word", help="word a,b,c or JSON list")
    p.set_defaults(func=_cmd_witness_verify)

    p = sub.add_parser("witness-search", parents=[common], help="exhaustive witness search")
    p.add_argument("type")
    p.add_argument("index", type=int, nargs="?")
    p.add_argument("--target", type=int)
    p.add_argument("--include-empty", action="store_true", help="also search J empty")
    p.set_defaults(func=_cmd_witness_search)

    p = sub.add_parser("lemmas", parents=[common], help="root-image identity suites")
    p.add_argument("suite", nargs="?")
    p.add_argument("--list", action="store_true")
    p.add_argument("--rank", type=int, help="rank n for the D_n suites")
    p.set_defaults(func=_cmd_lemmas)

    p = sub.add_parser("demazure", parents=[common], help="apply a Demazure operator")
    p.add_argument("type")
    p.add_argument("--word", default="")
    p.add_argument("--module", help="J for the character of g/p_J")
    p.add_argument("--weight", help="a single weight in fundamental-weight coordinates")
    p.set_defaults(func=_cmd_demazure)

    p = sub.add_parser("verify-all", parents=[common], help="run the full verification pipeline")
    p.add_argument("type", nargs="?", help="ignored; accepted for grammar uniformity")
    p.add_argument("--deep", action="store_true", help="include the D5 and E6 exhaustive searches")
    p.add_argument("--rank", type=int, help="largest D_n rank for suites and witnesses")
    p.set_defaults(func=_cmd_verify_all)
    return parser


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if getattr(args, "cap", 1) < 1:
        err.write("schubert-aut: --cap must be positive\n")
        return EXIT_USAGE
    try:
        data, ok = args.func(args)
    except EnumerationTooLarge as exc:
        err.write(f"schubert-aut: {exc}\n")
        _emit({"error": "cap exceeded", "enumeration": exc.label, "count": exc.count, "cap": exc.cap}, args.mode, out)
        return EXIT_CAP
    except (UsageError, UnsupportedTypeError, NotARootError, PreconditionError, IndexError) as exc:
        err.write(f"schubert-aut: {exc}\n")
        return EXIT_USAGE
    _emit(data, args.mode, out)
    return EXIT_OK if ok else EXIT_FAIL


def main() -> None:
    sys.exit(run())
