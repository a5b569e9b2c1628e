"""Command line entry point: ``adlv verify genus3``, ``adlv lp ...`` and friends."""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .adlv_sets import (
    emptiness, kr_decompose, length_positive, s_adm_nonempty, sigma_support,
)
from .affine_weyl import AffineWeylGroup, WordSyntaxError
from .reduction import DROP, reduction_tree
from .verify import SUITES, render, run_suite


class UsageError(Exception):
    pass


def _group(args) -> AffineWeylGroup:
    try:
        return AffineWeylGroup.of(args.group, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _element(G, text):
    # WordSyntaxError is a ValueError; it is reported as a usage error by main
    return G.evaluate(text)


def _labels(J):
    return [f"s{i}" for i in sorted(J)]


def _emit(args, payload, text_lines):
    if args.format == "json":
        out = json.dumps(payload, indent=2) + "\n"
    elif args.format == "md":
        out = "\n".join(f"- {line}" for line in text_lines) + "\n"
    else:
        out = "\n".join(text_lines) + "\n"
    _write(args, out)


def _write(args, text):
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    kwargs = dict(seed=args.seed, samples=args.samples, timing=not args.no_timing)
    if args.jobs > 1 and len(names) > 1:
        with ProcessPoolExecutor(args.jobs) as pool:
            futures = [pool.submit(run_suite, name, **kwargs) for name in names]
            reports = [f.result() for f in futures]
    else:
        reports = [run_suite(name, **kwargs) for name in names]
    _write(args, render(reports, args.format))
    return 0 if all(r.passed(args.strict) for r in reports) else 1


def cmd_adm(args) -> int:
    G = _group(args)
    try:
        mu = tuple(int(x) for x in args.mu.split(","))
        rec = s_adm_nonempty(G, mu)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    elems = rec.s_adm_0 if args.nonempty else rec.s_adm
    words = [G.format(w) for w in elems]
    payload = {"group": G.datum.name, "mu": list(rec.mu), "adm_size": len(rec.adm),
               "nonempty_only": args.nonempty, "elements": words}
    head = f"{G.datum.name} mu={list(rec.mu)}: |Adm| = {len(rec.adm)}, " \
           f"{'SAdm_0' if args.nonempty else 'SAdm'} has {len(words)} elements"
    _emit(args, payload, [head] + words)
    return 0


def cmd_lp(args) -> int:
    G = _group(args)
    w = _element(G, args.word)
    kr = kr_decompose(G, w)
    lp = length_positive(G, w)
    words = [G.format(v) for v in lp]
    payload = {"element": G.format(w), "kr": {"x": G.format(kr.x), "mu": list(kr.mu),
                                              "y": G.format(kr.y)},
               "LP": words}
    _emit(args, payload, [f"LP({G.format(w)}) has {len(words)} elements"] + words)
    return 0


def cmd_reduce(args) -> int:
    G = _group(args)
    w = _element(G, args.word)
    k = G.kottwitz(w) if args.k is None else args.k
    tree = reduction_tree(G, w, k)
    nodes = []
    lines = []

    def visit(node, depth):
        entry = {"element": G.format(node.element), "status": node.status}
        label = f"{'  ' * depth}{G.format(node.element)} [{node.status}]"
        if node.step is not None:
            entry["reflection"] = f"s{node.step.reflection}"
            entry["case"] = node.step.case
            label += f" --s{node.step.reflection}{'*' if node.step.case == DROP else ''}-->"
        if node.mixed:
            entry["mixed"] = True
            label += " (mixed)"
        if node.certificate is not None:
            c = node.certificate
            entry["certificate"] = {"kind": c.kind}
            if c.target is not None:
                entry["certificate"].update(target=G.format(c.target),
                                            conjugator=G.format(c.conjugator))
                label += f" conj by {G.format(c.conjugator)} to {G.format(c.target)}"
            else:
                entry["certificate"]["reason"] = c.verdict.reason
                label += f" ({c.verdict.reason})"
        nodes.append(entry)
        lines.append(label)
        for child in node.children:
            visit(child, depth + 1)

    visit(tree, 0)
    # the main branch continues through the last child; a drop's open piece comes first
    spine, node = [], tree
    while node.status in ("preserve", "drop"):
        spine.append(f"s{node.step.reflection}" + ("*" if node.step.case == DROP else ""))
        node = node.children[-1]
    payload = {"element": G.format(w), "k": k, "arrows": spine, "end": G.format(node.element),
               "end_status": node.status, "tree": nodes}
    lines.append(f"path: {' '.join(spine) or '(none)'} -> {G.format(node.element)} [{node.status}]")
    _emit(args, payload, lines)
    return 0


def cmd_len(args) -> int:
    G = _group(args)
    w = _element(G, args.word)
    payload = {"element": G.format(w), "length": G.length(w), "kottwitz": G.kottwitz(w)}
    _emit(args, payload, [f"{payload['element']}: length {payload['length']}, "
                          f"kottwitz {payload['kottwitz']}"])
    return 0


def cmd_bruhat(args) -> int:
    G = _group(args)
    a, b = _element(G, args.word[0]), _element(G, args.word[1])
    leq = G.bruhat_leq(a, b)
    payload = {"w": G.format(a), "v": G.format(b), "leq": leq}
    _emit(args, payload, [f"{payload['w']} <= {payload['v']}: {leq}"])
    return 0


def cmd_support(args) -> int:
    G = _group(args)
    w = _element(G, args.word)
    w_a, kk = G.omega_decompose(w)
    verdict = emptiness(G, w, G.kottwitz(w) if args.k is None else args.k)
    payload = {"element": G.format(w), "support": _labels(G.support(w_a)), "omega": kk,
               "sigma_support": _labels(sigma_support(G, w)),
               "projection": G.format(G.projection(w)),
               "nonempty": verdict.nonempty, "reason": verdict.reason}
    _emit(args, payload, [f"{k}: {v}" for k, v in payload.items()])
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "md", "text"], default="text")
    common.add_argument("--out", metavar="PATH")
    group = argparse.ArgumentParser(add_help=False)
    group.add_argument("--group", choices=["gl", "gsp"], required=True)
    group.add_argument("--n", type=int, required=True)

    p = argparse.ArgumentParser(prog="adlv", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="run a verification suite")
    v.add_argument("suite", choices=list(SUITES) + ["all"])
    v.add_argument("--seed", type=int, default=0, help="seed for sampled property checks")
    v.add_argument("--samples", type=int, default=2000)
    v.add_argument("--strict", action="store_true", help="treat warnings as failures")
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--no-timing", action="store_true", help="report duration_ms = 0")
    v.set_defaults(func=cmd_verify)

    a = sub.add_parser("adm", parents=[common, group], help="S-admissible set of mu")
    a.add_argument("--mu", required=True, help="comma separated, e.g. 1,1,1,0,0,0")
    a.add_argument("--nonempty", action="store_true", help="only elements with X_w(tau) nonempty")
    a.set_defaults(func=cmd_adm)

    for name, func, hlp in [("lp", cmd_lp, "length positive set LP(w)"),
                            ("reduce", cmd_reduce, "reduction tree of w"),
                            ("len", cmd_len, "length and Kottwitz class"),
                            ("support", cmd_support, "supports and emptiness verdict")]:
        q = sub.add_parser(name, parents=[common, group], help=hlp)
        q.add_argument("--word", required=True)
        if name in ("reduce", "support"):
            q.add_argument("--k", type=int, default=None, help="basic class tau^k (default: class of w)")
        q.set_defaults(func=func)

    b = sub.add_parser("bruhat", parents=[common, group], help="is w <= v in the Bruhat order")
    b.add_argument("--word", action="append", required=True, help="give twice: w then v")
    b.set_defaults(func=cmd_bruhat)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    if args.command == "bruhat" and len(args.word) != 2:
        print("adlv bruhat: error: give --word exactly twice", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except WordSyntaxError as exc:
        print(f"adlv {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except UsageError as exc:
        print(f"adlv {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
