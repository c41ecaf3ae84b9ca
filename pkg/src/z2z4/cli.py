"""Command-line front end: ``z2z4 <command> FILE ...``.

Code files hold a header ``alpha=<a> beta=<b>`` followed by one generator per
line, binary digits, a ``|``, then quaternary digits, all whitespace separated.
Blank lines and lines starting with ``#`` are skipped.
"""

from __future__ import annotations

import argparse
import json
import os
import re
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .code import ENUMERATION_CAP, Z2Z4Code, codeword_array, new_code, standard_form
from .duality import (
    ORACLE_CAP,
    dual_brute_force,
    dual_from_standard_form,
    dual_via_lift,
    macwilliams_transform,
    weight_enumerator,
)
from .exceptions import CapExceededError, ConsistencyError, ParseError, ValidationError
from .graymap import gray_array, lee_weight_array
from .selfdual import build_family, self_dual_report

EXIT_OK, EXIT_INVALID, EXIT_CAP = 0, 1, 2

_HEADER = re.compile(r"^\s*alpha\s*=\s*(\d+)\s+beta\s*=\s*(\d+)\s*$")


# -- code files ----------------------------------------------------------------


def _digits(tokens, modulus, block, lineno, source):
    out = []
    for j, tok in enumerate(tokens):
        if not tok.isdigit():
            raise ParseError(f"{block} entry {j + 1}: {tok!r} is not a digit", lineno, source)
        v = int(tok)
        if v >= modulus:
            raise ParseError(f"{block} entry {j + 1}: {v} not in Z{modulus}", lineno, source)
        out.append(v)
    return out


def parse_code_file(text: str, source: str | None = None) -> Z2Z4Code:
    alpha = beta = None
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if alpha is None:
            m = _HEADER.match(line)
            if not m:
                raise ParseError(f"expected header 'alpha=<int> beta=<int>', got {line!r}", lineno, source)
            alpha, beta = int(m.group(1)), int(m.group(2))
            continue
        if "|" in line:
            left, sep, right = line.partition("|")
            if "|" in right:
                raise ParseError("more than one '|' separator", lineno, source)
        elif alpha and beta:
            raise ParseError("missing '|' between binary and quaternary parts", lineno, source)
        else:
            left, right = (line, "") if beta == 0 else ("", line)
        x = _digits(left.split(), 2, "binary", lineno, source)
        y = _digits(right.split(), 4, "quaternary", lineno, source)
        if len(x) != alpha or len(y) != beta:
            raise ParseError(f"row has {len(x)}+{len(y)} entries, expected {alpha}+{beta}", lineno, source)
        rows.append(x + y)
    if alpha is None:
        raise ParseError("no header line found", None, source)
    return new_code(alpha, beta, rows)


def format_row(row, alpha: int) -> str:
    row = [str(int(v)) for v in row]
    x, y = " ".join(row[:alpha]), " ".join(row[alpha:])
    if x and y:
        return f"{x} | {y}"
    return x or y or "|"  # a zero-width row still needs a line


def format_matrix(rows, alpha: int) -> list[str]:
    return [format_row(r, alpha) for r in np.asarray(rows).tolist()]


def format_code_file(c: Z2Z4Code, comments=()) -> str:
    lines = [f"# {s}" for s in comments]
    lines.append(f"alpha={c.alpha} beta={c.beta}")
    lines += format_matrix(c.generator_array, c.alpha)
    return "\n".join(lines) + "\n"


def cycle_notation(perm) -> str:
    """Cycles of i -> perm[i], 1-based; the identity prints as ``()``."""
    seen = set()
    cycles = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = []
        i = start
        while i not in seen:
            seen.add(i)
            cyc.append(i + 1)
            i = perm[i]
        cycles.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(cycles) or "()"


# -- commands --------------------------------------------------------------------


def _code_json(c: Z2Z4Code, rows=None) -> dict:
    t = c.type
    rows = c.generator_array if rows is None else rows
    return {
        "alpha": t.alpha, "beta": t.beta, "gamma": t.gamma, "delta": t.delta, "kappa": t.kappa,
        "cardinality": t.cardinality,
        "rows": np.asarray(rows, dtype=np.int64).tolist(),
    }


def _min_lee_weight(c: Z2Z4Code, cap):
    w = lee_weight_array(codeword_array(c, cap), c.alpha)
    w = w[w > 0]
    return int(w.min()) if len(w) else None


def cmd_info(c, args):
    t = c.type
    mlw = _min_lee_weight(c, args.cap)
    data = _code_json(c)
    data["min_lee_weight"] = mlw
    text = [f"type {t}, |C| = {t.cardinality}", f"min Lee weight: {'-' if mlw is None else mlw}"]
    return data, text


def cmd_std(c, args):
    sf = standard_form(c)
    g = sf.canonical_array()
    data = _code_json(c, g)
    data["x_permutation"] = list(sf.x_permutation)
    data["y_permutation"] = list(sf.y_permutation)
    text = [f"type {sf.code_type}", "canonical generator matrix:"]
    text += ["  " + r for r in format_matrix(g, c.alpha)]
    text.append(f"X permutation: {cycle_notation(sf.x_permutation)}")
    text.append(f"Y permutation: {cycle_notation(sf.y_permutation)}")
    return data, text


def cmd_dual(c, args):
    if args.method == "brute":
        d = dual_brute_force(c, args.oracle_cap)
    elif args.method == "lift":
        d = dual_via_lift(c)
    else:
        d = dual_from_standard_form(c)
    data = _code_json(d)
    data["method"] = args.method
    text = format_code_file(d, [f"dual ({args.method}), type {d.type}, |C| = {d.cardinality}"]).splitlines()
    return data, text


def cmd_gray(c, args):
    rows = codeword_array(c, args.cap) if args.all else c.generator_array
    images = gray_array(rows, c.alpha)
    data = _code_json(c)
    data["gray"] = images.tolist()
    text = ["".join(map(str, r)) for r in images.tolist()]
    return data, text


def cmd_wenum(c, args):
    w = weight_enumerator(c, args.cap)
    data = _code_json(c)
    data["weight_enumerator"] = list(w.coefficients)
    text = [f"A_{i} = {v}" for i, v in enumerate(w.coefficients) if v]
    if args.macwilliams:
        wd = macwilliams_transform(w, c.cardinality)
        data["dual_weight_enumerator"] = list(wd.coefficients)
        text.append(f"dual (MacWilliams), |C^perp| = {wd.size}:")
        text += [f"B_{i} = {v}" for i, v in enumerate(wd.coefficients) if v]
    return data, text


def _yes(v) -> str:
    return "yes" if v else "no"


def cmd_check(c, args):
    rep = self_dual_report(c, args.cap)
    data = _code_json(c)
    data.update(rep.as_dict())
    r = rep.replication_exponent_r
    text = [
        f"type {c.type}",
        f"self-orthogonal: {_yes(rep.is_self_orthogonal)}",
        f"self-dual: {_yes(rep.is_self_dual)}",
        f"antipodal: {_yes(rep.is_antipodal)}",
        f"separable: {_yes(rep.is_separable)}",
        f"C_X self-dual: {_yes(rep.cx_self_dual)}",
        f"replication exponent r: {'-' if r is None else r}",
    ]
    return data, text


def cmd_family(args):
    c = build_family(args.name, args.kappa, args.delta, args.beta)
    data = _code_json(c)
    note = f"family {args.name} (kappa={args.kappa}, delta={args.delta}, beta={args.beta}), type {c.type}"
    return data, format_code_file(c, [note]).splitlines()


_COMMANDS = {
    "info": cmd_info, "std": cmd_std, "dual": cmd_dual, "gray": cmd_gray,
    "wenum": cmd_wenum, "check": cmd_check,
}


def _env_cap():
    raw = os.environ.get("Z2Z4_CAP")
    if raw is None:
        return None
    try:
        v = int(raw)
    except ValueError:
        raise ValidationError(f"Z2Z4_CAP must be an integer, got {raw!r}") from None
    if v <= 0:
        raise ValidationError(f"Z2Z4_CAP must be positive, got {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--cap", type=int, default=None,
                        help=f"max codewords to enumerate (default {ENUMERATION_CAP}, or Z2Z4_CAP)")
    common.add_argument("--oracle-cap", type=int, default=None,
                        help=f"max ambient vectors for brute-force duals (default {ORACLE_CAP}, or Z2Z4_CAP)")

    p = argparse.ArgumentParser(prog="z2z4", description="Exact computations with Z2Z4-additive codes.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    helps = {
        "info": "type, cardinality and minimum Lee weight",
        "std": "canonical generator matrix and coordinate permutations",
        "dual": "generator matrix of the additive dual",
        "gray": "Gray images of the generators (or of all codewords)",
        "wenum": "Lee weight enumerator",
        "check": "self-duality, antipodality and separability report",
    }
    for name, h in helps.items():
        sp = sub.add_parser(name, parents=[common], help=h)
        sp.add_argument("file", help="code file, or - for stdin")
        if name == "dual":
            sp.add_argument("--method", choices=["standard", "lift", "brute"], default="standard")
        if name == "gray":
            sp.add_argument("--all", action="store_true", help="all codewords instead of generators")
        if name == "wenum":
            sp.add_argument("--macwilliams", action="store_true", help="also print the dual's enumerator")

    fp = sub.add_parser("family", parents=[common], help="build a self-dual family member")
    fp.add_argument("name", choices=["a", "b", "c"])
    fp.add_argument("--kappa", type=int, required=True)
    fp.add_argument("--delta", type=int, required=True)
    fp.add_argument("--beta", type=int, required=True)
    return p


def _read(path: str) -> tuple[str, str]:
    if path == "-":
        return sys.stdin.read(), "<stdin>"
    try:
        return Path(path).read_text(), path
    except OSError as e:
        raise ValidationError(f"cannot read {path}: {e.strerror}") from None


def run(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        env = _env_cap()
        if args.cap is None:
            args.cap = env if env is not None else ENUMERATION_CAP
        if args.oracle_cap is None:
            args.oracle_cap = env if env is not None else ORACLE_CAP
        if args.command == "family":
            data, text = cmd_family(args)
        else:
            c = parse_code_file(*_read(args.file))
            data, text = _COMMANDS[args.command](c, args)
    except CapExceededError as e:
        print(f"z2z4: {e}", file=sys.stderr)
        return EXIT_CAP
    except (ValidationError, ConsistencyError) as e:
        print(f"z2z4: {e}", file=sys.stderr)
        return EXIT_INVALID
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print("\n".join(text))
    return EXIT_OK


def main():
    sys.exit(run())
