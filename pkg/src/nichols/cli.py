"""Command-line front end.

Exit codes: 0 success (including unterminated or infinite results), 1 on a
verification mismatch or failed validation, 2 on unreadable input, 3 when a
degree block exceeds the size cap.
"""

from __future__ import annotations

import argparse
import configparser
import json
import os
import sys

from .errors import DegreeTooLarge, NicholsError, NoConstructionPath, NoMatch, NotInAPlus, SpecError
from .fixtures import fixture_spec
from .nichols import NicholsEngine, factor_hilbert, factors_text
from .rank2 import (CSequence, enumerate_a_plus, eta_product_check, f_sequence_roots,
                    match_weyl_groupoid, triangulation_from_sequence)
from .roots import (cartan_case, cartan_matrix, crystallographic_check, q_diagram, real_roots,
                    reflect, validate_axioms, weyl_groupoid)
from .serialize import dumps, parse_braiding
from .verify import golden_names, run_verify

DEFAULTS = {
    "k_max": 12,
    "max_objects": 1024,
    "block_cap": 20000,
    "workers": 1,
    "max_cartan_entry": 8,
    "depth": 64,
    "prime": 31,
}


class UsageError(Exception):
    pass


def load_config(path):
    """key = value lines, with or without a section header."""
    out = dict(DEFAULTS)
    if not path:
        return out
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc}") from exc
    if not text.lstrip().startswith("["):
        text = "[nichols]\n" + text
    cp = configparser.ConfigParser()
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise UsageError(f"bad config file: {exc}") from exc
    for section in cp.sections():
        for key, val in cp[section].items():
            key = key.replace("-", "_")
            if key in DEFAULTS:
                try:
                    out[key] = int(val.strip().strip('"'))
                except ValueError as exc:
                    raise UsageError(f"config {key} must be an integer") from exc
    return out


def read_input(arg):
    if arg is None:
        raise UsageError("--input is required")
    if arg.startswith("fixture:"):
        return parse_braiding(fixture_spec(arg[len("fixture:"):]))
    text = arg
    if not arg.lstrip().startswith("{"):
        try:
            with open(arg) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {arg}: {exc}") from exc
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"invalid JSON: {exc}") from exc
    return parse_braiding(spec)


def _seq(text):
    try:
        return [int(x) for x in text.replace(" ", "").strip("()[]").split(",") if x]
    except ValueError as exc:
        raise UsageError(f"cannot read sequence {text!r}") from exc


def _matrix_text(M):
    if M is None:
        return "?"
    return "[" + ", ".join("[" + ", ".join(str(x) for x in row) + "]" for row in M) + "]"


# --- commands ---------------------------------------------------------------------

def cmd_hilbert(args, cfg):
    b = read_input(args.input)
    eng = NicholsEngine(b, block_cap=cfg["block_cap"], workers=cfg["workers"],
                        probabilistic=args.probabilistic_generic, prime=cfg["prime"])
    h = eng.hilbert_series(cfg["k_max"])
    factors = factor_hilbert(h) if h.terminated else None
    data = {
        "dims": h.dims,
        "terminated": h.terminated,
        "total": h.total,
        "blocks": [{"k": k, "degree": b.key_json(blk.degree), "dim": blk.dim, "rank": blk.rank}
                   for k, blks in enumerate(h.blocks) for blk in blks],
        "factors": [list(f) for f in factors] if factors is not None else None,
        "probabilistic": h.probabilistic,
    }
    if args.format == "text":
        if h.terminated:
            text = " ".join(map(str, h.poly)) + f", total {h.total}, factors {factors_text(factors)}"
        else:
            text = " ".join(map(str, h.dims)) + ", unterminated"
        if h.probabilistic:
            text += " (probabilistic)"
        return text + "\n", 0
    return dumps(data), 0


def cmd_cartan(args, cfg):
    b = read_input(args.input)
    C = cartan_matrix(b)
    cases = [[None if i == j else cartan_case(b, i, j) for j in range(b.rank)] for i in range(b.rank)]
    if args.format == "text":
        return _matrix_text(C) + "\n", 0
    return dumps({"cartan": [list(r) for r in C], "cases": cases}), 0


def cmd_reflect(args, cfg):
    b = read_input(args.input)
    if not 1 <= args.index <= b.rank:
        raise UsageError(f"--index must be in 1..{b.rank}")
    r = reflect(b, args.index - 1)
    if args.format == "text":
        return f"R{args.index}: exponents {_matrix_text(r.exponents)}; {q_diagram(r).text()}\n", 0
    return dumps({"index": args.index, "braiding": r.to_json(), "q_diagram": q_diagram(r).text()}), 0


def cmd_weylgroupoid(args, cfg):
    b = read_input(args.input)
    g = weyl_groupoid(b, cfg["max_objects"], cfg["max_cartan_entry"])
    if args.format == "dot":
        return g.to_dot(), 0
    data = g.to_json()
    data["q_diagram_types_labeled"] = len(g.q_diagram_types(up_to_relabeling=False))
    data["cartan_types_labeled"] = len(g.cartan_types(up_to_relabeling=False))
    if args.format == "text":
        lines = [f"status {g.status}, {g.n_objects} objects, {data['q_diagram_types']} q-diagram types, "
                 f"{data['cartan_types']} Cartan types"]
        for o in data["objects"]:
            lines.append(f"  a{o['id']}: C={_matrix_text(o['cartan'])} {o.get('q_diagram', '')}")
        return "\n".join(lines) + "\n", 0
    return dumps(data), 0


def cmd_roots(args, cfg):
    b = read_input(args.input)
    g = weyl_groupoid(b, cfg["max_objects"], cfg["max_cartan_entry"])
    r = real_roots(g, depth=cfg["depth"])
    data = r.to_json()
    violations = validate_axioms(g, r) if r.status == "finite" else []
    data["violations"] = violations
    data["crystallographic"] = crystallographic_check(r, g) if r.status == "finite" else False
    code = 1 if violations else 0
    if args.format == "text":
        roots = " ".join("(" + ",".join(map(str, v)) + ")" for v in r.sorted_positive())
        return f"{r.status}: {len(r.positive)} positive roots {roots}\n", code
    return dumps(data), code


def cmd_relations(args, cfg):
    b = read_input(args.input)
    eng = NicholsEngine(b, block_cap=cfg["block_cap"], workers=cfg["workers"],
                        probabilistic=args.probabilistic_generic, prime=cfg["prime"])
    if args.degree < 2:
        raise UsageError("--degree must be at least 2")
    rels = eng.degree(args.degree, want_kernel=True).kernel
    if args.format == "text":
        return "".join(repr(r) + "\n" for r in rels) or "no relations\n", 0
    return dumps({"degree": args.degree, "relations": [r.to_json() for r in rels]}), 0


def cmd_rank2(args, cfg):
    sub = args.rank2_command
    if sub == "enumerate":
        classes = enumerate_a_plus(args.max_length)
        if args.format == "text":
            lines = [f"n={n}: {len(v)} classes " + " ".join(str(c.entries) for c in v)
                     for n, v in classes.items()]
            return "\n".join(lines) + "\n", 0
        return dumps({"command": sub, "counts": {str(n): len(v) for n, v in classes.items()},
                      "classes": {str(n): [c.to_json() for c in v] for n, v in classes.items()}}), 0
    if sub == "match":
        b = read_input(args.input)
        try:
            m = match_weyl_groupoid(b)
        except NoMatch as exc:
            return dumps({"command": sub, "match": None, "error": str(exc)}), 1
        if args.format == "text":
            return f"{m.entries}\n", 0
        return dumps({"command": sub, "match": list(m.entries),
                      "variant": list(m.matched_variant)}), 0
    if not args.seq:
        raise UsageError("--seq is required")
    entries = _seq(args.seq)
    if sub == "check":
        rep = eta_product_check(entries)
        if args.format == "text":
            return f"in A: {rep.in_a}, in A+: {rep.in_a_plus}\n", 0
        return dumps({"command": sub, **rep.to_json()}), 0
    try:
        seq = CSequence.construct(entries)
    except NotInAPlus as exc:
        raise UsageError(str(exc)) from exc
    if sub == "roots":
        f = f_sequence_roots(seq)
        if args.format == "text":
            return " ".join("(" + ",".join(map(str, v)) + ")" for v in f.roots) + "\n", 0
        return dumps({"command": sub, "sequence": seq.to_json(), "roots": f.to_json()}), 0
    if sub == "triangulation":
        t = triangulation_from_sequence(seq)
        if args.format == "text":
            return f"{t.n}-gon, diagonals {t.diagonals}\n", 0
        return dumps({"command": sub, "sequence": seq.to_json(), **t.to_json()}), 0
    raise UsageError(f"unknown rank2 command {sub}")


def cmd_verify(args, cfg):
    report = run_verify(args.name, k_max=cfg["k_max"], block_cap=cfg["block_cap"])
    code = 0 if report["passed"] else 1
    if args.format == "text":
        lines = [f"{args.name}: {'pass' if report['passed'] else 'FAIL'}"]
        for c in report["checks"]:
            lines.append(f"  {'ok ' if c['ok'] else 'BAD'} {c['name']}: expected {c['expected']}, got {c['actual']}")
        return "\n".join(lines) + "\n", code
    return dumps(report), code


# --- parser -----------------------------------------------------------------------

def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", help="braiding spec: JSON file, inline JSON, or fixture:NAME")
    common.add_argument("--format", choices=["json", "dot", "text"], default="json")
    common.add_argument("--kmax", type=int)
    common.add_argument("--max-objects", type=int)
    common.add_argument("--max-cartan-entry", type=int)
    common.add_argument("--block-cap", type=int)
    common.add_argument("--workers", type=int)
    common.add_argument("--probabilistic-generic", action="store_true")
    common.add_argument("--config", default=os.environ.get("NICHOLS_CONFIG"))
    common.add_argument("--output", help="write the report here instead of stdout")

    p = argparse.ArgumentParser(prog="nichols", description="Nichols algebras and Weyl groupoids")
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("hilbert", parents=[common], help="graded dimensions")
    sub.add_parser("cartan", parents=[common], help="Cartan matrix of a diagonal braiding")
    r = sub.add_parser("reflect", parents=[common], help="reflection R_i")
    r.add_argument("--index", type=int, required=True, help="1-based node")
    sub.add_parser("weylgroupoid", parents=[common], help="Cartan graph (json or dot)")
    sub.add_parser("roots", parents=[common], help="real roots and axiom checks")
    rel = sub.add_parser("relations", parents=[common], help="symmetrizer kernel in one degree")
    rel.add_argument("--degree", type=int, required=True)
    r2 = sub.add_parser("rank2", parents=[common], help="rank-2 classification")
    r2.add_argument("rank2_command", choices=["enumerate", "check", "roots", "triangulation", "match"])
    r2.add_argument("--max-length", type=int, default=6)
    r2.add_argument("--seq", help="comma separated sequence, e.g. 3,1,2,2,1")
    v = sub.add_parser("verify", parents=[common], help="check a golden fixture")
    v.add_argument("name", help="one of: " + ", ".join(golden_names()))
    return p


COMMANDS = {
    "hilbert": cmd_hilbert, "cartan": cmd_cartan, "reflect": cmd_reflect,
    "weylgroupoid": cmd_weylgroupoid, "roots": cmd_roots, "relations": cmd_relations,
    "rank2": cmd_rank2, "verify": cmd_verify,
}


def run(argv=None):
    """Returns (output text, exit code) without touching stdout."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return "", int(exc.code or 0)
    try:
        cfg = load_config(args.config)
        for flag, key in (("kmax", "k_max"), ("max_objects", "max_objects"), ("block_cap", "block_cap"),
                          ("workers", "workers"), ("max_cartan_entry", "max_cartan_entry")):
            val = getattr(args, flag)
            if val is not None:
                if val < 1 and key != "k_max" or val < 0:
                    raise UsageError(f"--{flag.replace('_', '-')} must be positive")
                cfg[key] = val
        if args.format == "dot" and args.command != "weylgroupoid":
            raise UsageError("dot output is only available for weylgroupoid")
        return COMMANDS[args.command](args, cfg)
    except DegreeTooLarge as exc:
        return f"error: {exc}\n", 3
    except (UsageError, SpecError, NoConstructionPath) as exc:
        return f"error: {exc}\n", 2
    except NicholsError as exc:
        return f"error: {exc}\n", 1


def main(argv=None):
    parser_args = argv if argv is not None else sys.argv[1:]
    out, code = run(parser_args)
    target = None
    if "--output" in parser_args:
        i = parser_args.index("--output")
        if i + 1 < len(parser_args):
            target = parser_args[i + 1]
    if target and code in (0, 1) and out:
        with open(target, "w") as fh:
            fh.write(out)
    elif out:
        stream = sys.stdout if code in (0, 1) else sys.stderr
        stream.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
