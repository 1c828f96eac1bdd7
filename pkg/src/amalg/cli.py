"""Command line front end: parsers for the text grammars and the subcommands.

Subcommands: nf, iso-check, functor-check, gl2 decompose/eval, sl2 decompose,
axioms.  Exit code 0 on success, 1 on a failed mathematical assertion, 2 on
usage or parse errors.  Positional word/matrix/group arguments accept '-' to
read stdin.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .amalgam import AmalgamSpec, AmalgamWord, make_amalgam, reduce_word, to_word
from .groups import (
    FiniteGroup,
    GroupAction,
    check_group_axioms,
    hom_from_generators,
    inversion_action,
    make_action,
    make_cyclic,
    make_dihedral,
)
from .iso import CompatibleActionTriple, make_big_amalgam, verify_exact_sequence, verify_split
from .matgroup import (
    Glt2Word,
    Mat2,
    evaluate_word,
    form_to_letters,
    gl2_decompose,
    sl2_decompose,
    small_form_to_letters,
)
from .products import inversion_embedding_catalog, verify_functor_laws
from .reporting import CheckRecord, Report

__all__ = [
    "ParseError",
    "parse_matrix",
    "parse_letter_word",
    "parse_amalgam_word",
    "parse_group_spec",
    "parse_action_spec",
    "render_matrix",
    "render_letter_word",
    "render_amalgam_word",
    "load_group",
    "run",
    "main",
]

BUILTIN_GROUPS = ("Z1", "Z2", "Z3", "Z4", "Z6", "D2", "D4", "D6")


class ParseError(ValueError):
    """A syntax error at a byte offset of the input expression."""

    def __init__(self, offset: int, message: str):
        super().__init__(f"parse error at offset {offset}: {message}")
        self.offset = offset


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def eof(self) -> bool:
        self.skip_ws()
        return self.pos >= len(self.text)

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def expect(self, ch: str) -> None:
        self.skip_ws()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            found = repr(self.text[self.pos]) if self.pos < len(self.text) else "end of input"
            raise ParseError(self.pos, f"expected {ch!r}, found {found}")
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        if self.pos < len(self.text) and self.text[self.pos] == "-":
            self.pos += 1
        digits = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == digits:
            raise ParseError(start, "expected an integer")
        return int(self.text[start : self.pos])

    def end(self) -> None:
        if not self.eof():
            raise ParseError(self.pos, f"unexpected trailing input {self.text[self.pos]!r}")


def parse_matrix(text: str) -> Mat2:
    """Parse '[[a,b],[c,d]]' (whitespace-insensitive, negative entries fine)."""
    s = _Scanner(text)
    s.expect("[")
    s.expect("[")
    a = s.integer()
    s.expect(",")
    b = s.integer()
    s.expect("]")
    s.expect(",")
    s.expect("[")
    c = s.integer()
    s.expect(",")
    d = s.integer()
    s.expect("]")
    s.expect("]")
    s.end()
    return Mat2(a, b, c, d)


def _fold_letters(raw: list[tuple[str, int]]) -> tuple[tuple[str, int], ...]:
    stack: list[tuple[str, int]] = []
    for letter, k in raw:
        if stack and stack[-1][0] == letter:
            k += stack.pop()[1]
            if k == 0:
                continue
        if k != 0:
            stack.append((letter, k))
    return tuple(stack)


def parse_letter_word(text: str) -> Glt2Word:
    """Parse a word like 's^3 * u^2 * j'; the empty string is the empty word."""
    s = _Scanner(text)
    if s.eof():
        return Glt2Word(())
    raw: list[tuple[str, int]] = []
    while True:
        s.skip_ws()
        off = s.pos
        ch = s.text[s.pos] if s.pos < len(s.text) else ""
        if ch not in ("s", "u", "j"):
            raise ParseError(off, f"unknown letter {ch!r}" if ch else "expected a term")
        s.pos += 1
        exp = 1
        if s.peek() == "^":
            s.expect("^")
            exp_off = s.pos
            exp = s.integer()
            if exp == 0:
                raise ParseError(exp_off, "zero exponent")
        raw.append((ch, exp))
        if s.eof():
            break
        s.expect("*")
        if s.eof():
            raise ParseError(s.pos, "expected a term after '*'")
    return Glt2Word(_fold_letters(raw))


def parse_amalgam_word(text: str, spec: AmalgamSpec) -> AmalgamWord:
    """Parse a word like 'a:1 * b:2 * a:3^-1' over the given amalgam."""
    s = _Scanner(text)
    if s.eof():
        return AmalgamWord(())
    syls: list[tuple[str, int]] = []
    while True:
        s.skip_ws()
        off = s.pos
        ch = s.text[s.pos] if s.pos < len(s.text) else ""
        if ch not in ("a", "b"):
            raise ParseError(off, f"unknown side {ch!r}" if ch else "expected a term")
        s.pos += 1
        s.expect(":")
        idx_off = s.pos
        idx = s.integer()
        group = spec.side_group(ch)
        if not 0 <= idx < group.order:
            raise ParseError(
                idx_off, f"element index {idx} out of range for side {ch}"
            )
        exp = 1
        if s.peek() == "^":
            s.expect("^")
            exp_off = s.pos
            exp = s.integer()
            if exp == 0:
                raise ParseError(exp_off, "zero exponent")
        syls.append((ch, group.power(idx, exp)))
        if s.eof():
            break
        s.expect("*")
        if s.eof():
            raise ParseError(s.pos, "expected a term after '*'")
    return AmalgamWord(tuple(syls))


def render_matrix(m: Mat2) -> str:
    return f"[[{m.a},{m.b}],[{m.c},{m.d}]]"


def render_letter_word(w: Glt2Word) -> str:
    return " * ".join(l if k == 1 else f"{l}^{k}" for l, k in w.letters)


def render_amalgam_word(w: AmalgamWord) -> str:
    return " * ".join(f"{side}:{idx}" for side, idx in w.syllables)


def parse_group_spec(text: str) -> FiniteGroup:
    """Parse the line-oriented group format (header, identity, rows, generators)."""
    lines = [
        (i + 1, line.strip())
        for i, line in enumerate(text.splitlines())
        if line.strip()
    ]
    if not lines:
        raise ValueError("empty group specification")

    def fail(lineno: int, msg: str) -> ValueError:
        return ValueError(f"group spec line {lineno}: {msg}")

    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 4 or parts[0] != "group" or parts[2] != "order":
        raise fail(lineno, "expected 'group <label> order <n>'")
    label = parts[1]
    try:
        n = int(parts[3])
    except ValueError:
        raise fail(lineno, f"bad order {parts[3]!r}") from None
    if n <= 0:
        raise fail(lineno, "order must be positive")

    if len(lines) < 2:
        raise ValueError("group spec: missing 'identity' line")
    lineno, ident_line = lines[1]
    parts = ident_line.split()
    if len(parts) != 2 or parts[0] != "identity":
        raise fail(lineno, "expected 'identity <i>'")
    identity = int(parts[1])
    if not 0 <= identity < n:
        raise fail(lineno, f"identity index {identity} out of range")

    rows: list[tuple[int, ...] | None] = [None] * n
    body = lines[2:]
    if len(body) < n + 1:
        raise ValueError("group spec: missing rows or generators line")
    for lineno, line in body[:n]:
        if not line.startswith("row"):
            raise fail(lineno, "expected 'row <i>: ...'")
        head, _, rest = line.partition(":")
        try:
            i = int(head.split()[1])
        except (IndexError, ValueError):
            raise fail(lineno, "expected 'row <i>: ...'") from None
        if not 0 <= i < n or rows[i] is not None:
            raise fail(lineno, f"bad or repeated row index {i}")
        try:
            entries = tuple(int(v) for v in rest.split())
        except ValueError:
            raise fail(lineno, "row entries must be integers") from None
        if len(entries) != n or any(not 0 <= v < n for v in entries):
            raise fail(lineno, f"row {i} must have {n} entries in range")
        rows[i] = entries
    lineno, gen_line = body[n]
    if not gen_line.startswith("generators:"):
        raise fail(lineno, "expected 'generators: ...'")
    try:
        gen_idx = [int(v) for v in gen_line.split(":", 1)[1].split()]
    except ValueError:
        raise fail(lineno, "generator indices must be integers") from None
    if any(not 0 <= g < n for g in gen_idx):
        raise fail(lineno, "generator index out of range")

    mul = tuple(r for r in rows if r is not None)
    inv = []
    for x in range(n):
        found = x  # placeholder so axiom checking can still report the failure
        for y in range(n):
            if mul[x][y] == identity and mul[y][x] == identity:
                found = y
                break
        inv.append(found)
    gens = tuple((f"g{i}", g) for i, g in enumerate(gen_idx))
    return FiniteGroup(label, mul, identity, tuple(inv), gens)


def parse_action_spec(text: str, actor: FiniteGroup, space: FiniteGroup) -> GroupAction:
    """Parse the line-oriented action format and verify the action laws."""
    lines = [
        (i + 1, line.strip())
        for i, line in enumerate(text.splitlines())
        if line.strip()
    ]
    if not lines:
        raise ValueError("empty action specification")
    lineno, header = lines[0]
    parts = header.split()
    if len(parts) != 4 or parts[0] != "action" or parts[2] != "on":
        raise ValueError(f"action spec line {lineno}: expected 'action <actor> on <space>'")
    rows: list[tuple[int, ...] | None] = [None] * actor.order
    for lineno, line in lines[1:]:
        head, _, rest = line.partition(":")
        parts = head.split()
        if len(parts) != 2 or parts[0] != "c":
            raise ValueError(f"action spec line {lineno}: expected 'c <i>: ...'")
        c = int(parts[1])
        if not 0 <= c < actor.order or rows[c] is not None:
            raise ValueError(f"action spec line {lineno}: bad or repeated actor index {c}")
        perm = tuple(int(v) for v in rest.split())
        if len(perm) != space.order:
            raise ValueError(
                f"action spec line {lineno}: expected {space.order} entries"
            )
        rows[c] = perm
    if any(r is None for r in rows):
        raise ValueError("action spec: missing actor rows")
    return make_action(actor, space, tuple(r for r in rows if r is not None))


def load_group(name: str) -> FiniteGroup:
    """A builtin name (Z1 Z2 Z3 Z4 Z6 D2 D4 D6) or a path to a group file."""
    if name in BUILTIN_GROUPS:
        kind, k = name[0], int(name[1:])
        return make_cyclic(k) if kind == "Z" else make_dihedral(k)
    path = Path(name)
    if not path.exists():
        raise ValueError(f"unknown group {name!r}: not a builtin and not a file")
    return parse_group_spec(path.read_text())


def load_action(arg: str, actor: FiniteGroup, space: FiniteGroup) -> GroupAction:
    """The builtin name 'inv' or a path to an action file."""
    if arg == "inv":
        return inversion_action(actor, space)
    path = Path(arg)
    if not path.exists():
        raise ValueError(f"unknown action {arg!r}: not 'inv' and not a file")
    return parse_action_spec(path.read_text(), actor, space)


def parse_gen_map(arg: str) -> dict[int, int]:
    """Parse a generator-image map like '1:2' or '1:2,3:4'."""
    out: dict[int, int] = {}
    for piece in arg.split(","):
        left, sep, right = piece.partition(":")
        if not sep:
            raise ValueError(f"bad generator map entry {piece!r}, expected 'i:j'")
        try:
            out[int(left)] = int(right)
        except ValueError:
            raise ValueError(f"bad generator map entry {piece!r}") from None
    return out


def _read_arg(value: str) -> str:
    return sys.stdin.read().strip() if value == "-" else value


def _emit_report(report: Report, fmt: str) -> None:
    for r in report.records:
        if fmt == "json-lines":
            rec = {"check": r.check, "instance": r.instance,
                   "status": "pass" if r.ok else "fail"}
            if r.witness is not None:
                rec["witness"] = r.witness
            print(json.dumps(rec, sort_keys=True))
        else:
            mark = "PASS" if r.ok else "FAIL"
            tail = "" if r.witness is None else f": {r.witness}"
            print(f"{mark} {r.check} [{r.instance}]{tail}")


def _emit_result(check: str, instance: str, result: str, fmt: str) -> None:
    if fmt == "json-lines":
        print(json.dumps(
            {"check": check, "instance": instance, "status": "pass", "result": result},
            sort_keys=True,
        ))
    else:
        print(result)


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--samples", type=int, default=1000)
    common.add_argument("--bound", type=int, default=3)
    common.add_argument("--format", choices=("text", "json-lines"), default="text")

    parser = argparse.ArgumentParser(
        prog="amalg",
        description="Finite-group amalgams, semidirect products, and GL2(Z) words.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_nf = sub.add_parser("nf", parents=[common], help="normalize an amalgam word")
    for flag in ("--A", "--B", "--D"):
        p_nf.add_argument(flag, required=True)
    p_nf.add_argument("--iotaA", required=True)
    p_nf.add_argument("--iotaB", required=True)
    p_nf.add_argument("word")

    p_iso = sub.add_parser(
        "iso-check", parents=[common],
        help="verify the semidirect/amalgam distribution on an instance",
    )
    for flag in ("--A", "--B", "--D", "--C"):
        p_iso.add_argument(flag, required=True)
    p_iso.add_argument("--iotaA", required=True)
    p_iso.add_argument("--iotaB", required=True)
    p_iso.add_argument("--actA", required=True)
    p_iso.add_argument("--actB", required=True)
    p_iso.add_argument("--actD", required=True)

    sub.add_parser(
        "functor-check", parents=[common],
        help="verify functor laws on the builtin inversion catalog",
    )

    p_gl2 = sub.add_parser("gl2", help="GL2(Z) word operations")
    gl2_sub = p_gl2.add_subparsers(dest="gl2_command", required=True)
    p_gd = gl2_sub.add_parser("decompose", parents=[common])
    p_gd.add_argument("matrix")
    p_ge = gl2_sub.add_parser("eval", parents=[common])
    p_ge.add_argument("word")

    p_sl2 = sub.add_parser("sl2", help="SL2(Z) word operations")
    sl2_sub = p_sl2.add_subparsers(dest="sl2_command", required=True)
    p_sd = sl2_sub.add_parser("decompose", parents=[common])
    p_sd.add_argument("matrix")

    p_ax = sub.add_parser("axioms", parents=[common], help="check group axioms")
    p_ax.add_argument("group")
    return parser


def _amalgam_from_args(args: argparse.Namespace) -> AmalgamSpec:
    a = load_group(args.A)
    b = load_group(args.B)
    d = load_group(args.D)
    iota_a = hom_from_generators(d, a, parse_gen_map(args.iotaA))
    iota_b = hom_from_generators(d, b, parse_gen_map(args.iotaB))
    return make_amalgam(a, b, d, iota_a, iota_b)


def _cmd_nf(args: argparse.Namespace) -> int:
    spec = _amalgam_from_args(args)
    text = _read_arg(args.word)
    form = reduce_word(spec, parse_amalgam_word(text, spec))
    _emit_result("nf", text, render_amalgam_word(to_word(spec, form)), args.format)
    return 0


def _cmd_iso_check(args: argparse.Namespace) -> int:
    spec = _amalgam_from_args(args)
    c_group = load_group(args.C)
    acts = CompatibleActionTriple(
        load_action(args.actA, c_group, spec.a),
        load_action(args.actB, c_group, spec.b),
        load_action(args.actD, c_group, spec.d),
    )
    try:
        big = make_big_amalgam(spec, acts)
    except ValueError as e:
        _emit_report(
            Report((CheckRecord("instance-construction", spec.label, False, str(e)),)),
            args.format,
        )
        return 1
    report = verify_exact_sequence(big, args.bound) + verify_split(
        big, args.samples, args.seed
    )
    _emit_report(report, args.format)
    return 0 if report.ok else 1


def _cmd_functor_check(args: argparse.Namespace) -> int:
    actor, spaces, homs = inversion_embedding_catalog()
    report = verify_functor_laws(actor, spaces, homs)
    _emit_report(report, args.format)
    return 0 if report.ok else 1


def _cmd_gl2_decompose(args: argparse.Namespace) -> int:
    text = _read_arg(args.matrix)
    m = parse_matrix(text)
    form = gl2_decompose(m)
    _emit_result(
        "gl2-decompose", render_matrix(m),
        render_letter_word(form_to_letters(form)), args.format,
    )
    return 0


def _cmd_gl2_eval(args: argparse.Namespace) -> int:
    text = _read_arg(args.word)
    word = parse_letter_word(text)
    m = evaluate_word(word)
    _emit_result("gl2-eval", render_letter_word(word), render_matrix(m), args.format)
    return 0


def _cmd_sl2_decompose(args: argparse.Namespace) -> int:
    text = _read_arg(args.matrix)
    m = parse_matrix(text)
    word = small_form_to_letters(sl2_decompose(m))
    _emit_result("sl2-decompose", render_matrix(m), render_letter_word(word), args.format)
    return 0


def _cmd_axioms(args: argparse.Namespace) -> int:
    if args.group == "-":
        group = parse_group_spec(sys.stdin.read())
    else:
        group = load_group(args.group)
    report = check_group_axioms(group)
    _emit_report(report, args.format)
    return 0 if report.ok else 1


def run(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        if args.command == "nf":
            return _cmd_nf(args)
        if args.command == "iso-check":
            return _cmd_iso_check(args)
        if args.command == "functor-check":
            return _cmd_functor_check(args)
        if args.command == "gl2":
            if args.gl2_command == "decompose":
                return _cmd_gl2_decompose(args)
            return _cmd_gl2_eval(args)
        if args.command == "sl2":
            return _cmd_sl2_decompose(args)
        if args.command == "axioms":
            return _cmd_axioms(args)
        raise AssertionError(f"unhandled command {args.command!r}")
    except ParseError as e:
        print(str(e), file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except RuntimeError as e:
        print(f"assertion failed: {e}", file=sys.stderr)
        return 1


def main(argv: list[str] | None = None) -> None:
    sys.exit(run(argv))
