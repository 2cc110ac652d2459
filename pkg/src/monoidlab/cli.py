"""Command-line front end: ``monoidlab <subcommand> ...``.

Exit status: 0 success, 1 a checked property was violated, 2 bad input.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import automata
from .binroot import binary_roots
from .errors import MonoidLabError
from .experiments import CHECKS, PropertyViolation, SweepConfig, default_workers, run_intersection_sweep, verify_theorems
from .factorization import (WordSet, code_witness, dependency_graph, is_bifix_code, is_prefix_code,
                            is_suffix_code, parse_wordset)
from .hull import combinatorial_rank, free_hull, graph_lemma_check
from .maximal import (cube_occurrence_check, intersect_primitive_pairs, is_k_maximal, is_primitive_pair,
                      primitive_root_rank2)
from .theta import ANTIMORPHIC, MORPHIC, Involution, check_bridge_props, theta_root
from .words import primitive_word_root

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _split(items: Sequence[str]) -> list[str]:
    out = []
    for item in items:
        out.extend(w for w in (s.strip() for s in item.split(",")) if w)
    return out


def _wordset(args) -> WordSet:
    words = _split(args.words)
    if getattr(args, "file", None):
        words.extend(parse_wordset(Path(args.file).read_text()))
    if not words:
        raise UsageError("no words given")
    return WordSet(words)


def _ws(X) -> Optional[list]:
    return None if X is None else list(X)


def cmd_word(args):
    out = []
    for w in _split(args.words):
        root, exp = primitive_word_root(w)
        out.append({"word": w, "primitive": exp == 1, "root": root, "exponent": exp})
    return out, EXIT_OK


def cmd_code(args):
    X = _wordset(args)
    witness = code_witness(X)
    data = {"set": list(X), "code": witness is None, "prefix": is_prefix_code(X),
            "suffix": is_suffix_code(X), "bifix": is_bifix_code(X), "witness": None}
    if witness is not None:
        first, second = witness.blocks(X)
        data["witness"] = {"word": witness.word, "first": first, "second": second}
    return data, EXIT_OK


def cmd_hull(args):
    X = _wordset(args)
    hull = free_hull(X)
    return {"set": list(X), "basis": list(hull.basis), "free_rank": hull.free_rank,
            "trace": [list(step) for step in hull.trace]}, EXIT_OK


def cmd_rank(args):
    X = _wordset(args)
    res = combinatorial_rank(X, mode=args.mode)
    return {"set": list(X), "rank": res.rank, "exact": res.exact, "witness": _ws(res.witness)}, EXIT_OK


def cmd_graph(args):
    X = _wordset(args)
    rep = graph_lemma_check(X)
    data = {"set": list(X), "edges": [list(e) for e in rep.edges], "components": rep.components,
            "free_rank": rep.free_rank, "code": rep.is_code, "graph_lemma_holds": rep.holds}
    return data, EXIT_OK if rep.holds else EXIT_VIOLATION


def cmd_pair(args):
    rep = is_primitive_pair(args.x, args.y)
    return {"pair": list(rep.pair), "primitive": rep.primitive,
            "counterexample": _ws(rep.counterexample)}, EXIT_OK


def cmd_kmax(args):
    X = _wordset(args)
    maximal, witness = is_k_maximal(X, args.k, args.alphabet)
    return {"set": list(X), "k": args.k or len(X), "maximal": maximal, "witness": _ws(witness)}, EXIT_OK


def cmd_primroot(args):
    X = _wordset(args)
    return {"set": list(X), "root": list(primitive_root_rank2(X))}, EXIT_OK


def cmd_intersect(args):
    left, right = WordSet(_split([args.left])), WordSet(_split([args.right]))
    rep = intersect_primitive_pairs(left, right, sample_len=args.sample_len)
    data = {"left": list(left), "right": list(right), "kind": rep.kind, "finite": rep.finite,
            "generators": list(rep.generators), "pumping": None, "z": rep.z,
            "z_len": None if rep.z is None else len(rep.z), "product_bound": rep.bound,
            "bound_ok": rep.bound_ok, "both_primitive": rep.both_primitive, "theorem_ok": rep.theorem_ok}
    if rep.pumping is not None:
        p = rep.pumping
        data["pumping"] = {"prefix": p.prefix, "loop": p.loop, "suffix": p.suffix, "pattern": str(p)}
    if args.dot:
        Path(args.dot).write_text(automata.minimize(automata.intersect(
            automata.star_automaton(left, "".join(sorted(set(left.letters + right.letters)))),
            automata.star_automaton(right, "".join(sorted(set(left.letters + right.letters)))))).to_dot())
    return data, EXIT_VIOLATION if rep.theorem_ok is False else EXIT_OK


def cmd_cube(args):
    rep = cube_occurrence_check(args.x, args.y)
    return {"x": rep.x, "y": rep.y, "clean": rep.clean,
            "occurrences": [{"host": h, "pattern": p, "offset": o} for h, p, o in rep.occurrences]}, EXIT_OK


def _root_json(r):
    return {"pair": list(r.pair), "size": r.size, "factorization": list(r.blocks)}


def cmd_binroot(args):
    rep = binary_roots(args.word)
    data = {"word": rep.word, "length": len(rep.word),
            "small_root": None if rep.small_root is None else _root_json(rep.small_root)}
    if not args.small:
        data["roots"] = [_root_json(r) for r in rep.roots]
    return data, EXIT_VIOLATION if len(rep.small_roots) > 1 else EXIT_OK


def cmd_theta(args):
    theta = Involution.parse(args.theta or "", args.kind)
    w = args.word
    data = {"word": w, "theta": str(theta), "image": theta(w), "theta_root": theta_root(w, theta)}
    data["theta_primitive"] = data["theta_root"] == w
    code = EXIT_OK
    if theta(w) != w:
        rep = check_bridge_props(w, theta)
        data["bridge"] = {
            "pair_primitive": rep.pair_primitive, "pair_root": _ws(rep.pair_root),
            "equivalence_ok": rep.equivalence_ok, "implication_ok": rep.implication_ok,
            "palindromes": _ws(rep.palindromes), "palindromes_ok": rep.palindromes_ok,
            "cube_clean": rep.cube_clean}
        code = EXIT_OK if rep.ok else EXIT_VIOLATION
    return data, code


def _config(args) -> SweepConfig:
    return SweepConfig(alphabet_size=args.alphabet_size, max_gen_len=args.max_len,
                       max_pair_size=args.max_pair_size or min(10, 2 * args.max_len),
                       workers=args.workers or default_workers(),
                       max_word_len=args.max_word_len, theta_max_len=args.theta_max_len,
                       max_set_size=args.max_set_size)


def cmd_sweep(args):
    cfg = _config(args)
    if args.csv == "-":
        summary = run_intersection_sweep(cfg, sys.stdout)
        sys.stdout.flush()
        print(json.dumps(summary.as_dict(), sort_keys=True), file=sys.stderr)
        return None, EXIT_OK
    if args.csv:
        with open(args.csv, "w", newline="") as fh:
            summary = run_intersection_sweep(cfg, fh)
    else:
        summary = run_intersection_sweep(cfg)
    return summary.as_dict(), EXIT_OK


def cmd_verify(args):
    which = [name for name in CHECKS if args.all or getattr(args, name.lower())]
    if not which:
        raise UsageError("choose at least one check (--t2, --t4, --t5, --t6, --theta, --defect, --all)")
    results = verify_theorems(_config(args), which)
    ok = all(r.passed for r in results)
    return {"passed": ok, "checks": [r.as_dict() for r in results]}, EXIT_OK if ok else EXIT_VIOLATION


def _add_words(p, file=True):
    p.add_argument("words", nargs="*", help="words, space or comma separated")
    if file:
        p.add_argument("--file", help="word list file: one word per line, # comments")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monoidlab", description="Primitive sets of words toolkit")
    parser.add_argument("--json", action="store_true", help="machine-readable JSON output")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("word", help="primitivity and primitive root of words")
    _add_words(p, file=False)
    p.set_defaults(func=cmd_word)
    for name, func, helptext in [("code", cmd_code, "code / prefix / suffix / bifix tests"),
                                 ("hull", cmd_hull, "free hull basis and free rank"),
                                 ("graph", cmd_graph, "dependency graph and Graph Lemma"),
                                 ("primroot", cmd_primroot, "unique primitive root of a rank-2 set")]:
        p = sub.add_parser(name, help=helptext)
        _add_words(p)
        p.set_defaults(func=func)
    p = sub.add_parser("rank", help="combinatorial rank")
    _add_words(p)
    p.add_argument("--mode", choices=["exact_small", "decide_le_2"], default="exact_small")
    p.set_defaults(func=cmd_rank)
    p = sub.add_parser("kmax", help="k-maximality of X* (k = |X| <= 3)")
    _add_words(p)
    p.add_argument("--k", type=int)
    p.add_argument("--alphabet", help="ambient alphabet (default: letters of X)")
    p.set_defaults(func=cmd_kmax)
    for name, func, helptext in [("pair-primitive", cmd_pair, "is {x, y} a primitive pair"),
                                 ("cube", cmd_cube, "internal xy / yx occurrences in {x,y}^3")]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("x")
        p.add_argument("y")
        p.set_defaults(func=func)
    p = sub.add_parser("intersect", help="generators of X* intersected with U*")
    p.add_argument("--left", required=True, help="comma separated words")
    p.add_argument("--right", required=True, help="comma separated words")
    p.add_argument("--sample-len", type=int, default=automata.DEFAULT_SAMPLE_LEN)
    p.add_argument("--dot", help="write the intersection automaton in DOT format")
    p.set_defaults(func=cmd_intersect)
    p = sub.add_parser("binroot", help="binary roots of a primitive word")
    p.add_argument("word")
    g = p.add_mutually_exclusive_group()
    g.add_argument("--all", action="store_true", help="list every binary root (default)")
    g.add_argument("--small", action="store_true", help="only the root below sqrt(|w|)")
    p.set_defaults(func=cmd_binroot)
    p = sub.add_parser("theta", help="theta-root, theta-primitivity and bridge checks")
    p.add_argument("word")
    p.add_argument("--theta", help='letter map such as "a:b,b:a,c:c"; unlisted letters are fixed')
    p.add_argument("--kind", choices=[MORPHIC, ANTIMORPHIC], default=MORPHIC)
    p.set_defaults(func=cmd_theta)

    for name, func, helptext in [("sweep", cmd_sweep, "intersection sweep, CSV of z lengths"),
                                 ("verify", cmd_verify, "exhaustive theorem checks")]:
        p = sub.add_parser(name, help=helptext)
        p.add_argument("--alphabet-size", type=int, default=3)
        p.add_argument("--max-len", type=int, default=4, help="max generator length")
        p.add_argument("--max-pair-size", type=int, help="max |x|+|y| (default 2*max-len, at most 10)")
        p.add_argument("--max-word-len", type=int, default=14, help="word length for T6")
        p.add_argument("--theta-max-len", type=int, default=10, help="word length for the theta suite")
        p.add_argument("--max-set-size", type=int, default=3, help="set size for T4 / defect")
        p.add_argument("--workers", type=int, help="worker processes (env MONOIDLAB_WORKERS)")
        p.set_defaults(func=func)
    p = sub.choices["sweep"]
    p.add_argument("--csv", help="CSV output path, '-' for stdout")
    p = sub.choices["verify"]
    for name in CHECKS:
        p.add_argument(f"--{name.lower()}", action="store_true")
    p.add_argument("--all", action="store_true")
    return parser


def _render(data, indent=0) -> str:
    pad = "  " * indent
    if isinstance(data, list) and all(isinstance(d, dict) for d in data) and data:
        return "\n".join(_render(d, indent) + ("\n" + pad + "--" if i < len(data) - 1 else "")
                         for i, d in enumerate(data))
    lines = []
    for key, value in data.items():
        if isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.append(_render(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            lines.append(_render(value, indent + 1))
        elif isinstance(value, list):
            lines.append(f"{pad}{key}: {{{', '.join(map(str, value))}}}")
        else:
            lines.append(f"{pad}{key}: {value}")
    return "\n".join(lines)


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        data, code = args.func(args)
    except PropertyViolation as exc:
        print(json.dumps({"violation": str(exc), "details": exc.details}, sort_keys=True))
        return EXIT_VIOLATION
    except (MonoidLabError, UsageError, ValueError, OSError) as exc:
        print(f"monoidlab {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if data is not None:
        print(json.dumps(data, sort_keys=True) if args.json else _render(data))
    return code


if __name__ == "__main__":
    sys.exit(main())
