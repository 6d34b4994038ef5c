"""Trace documents: text and JSON forms, parsing, and replay verification.

Text form is one ``X->Y`` move per line, LF-terminated.  It carries no
metadata, so parsing it needs ``n``, the variant and alpha from the caller.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .rules import PEGS, Configuration, Move, RuleSet, TowerError, apply_move

VARIANTS = ("bouncing", "hanoi", "alt", "levitating")
DEFAULT_ALPHA = {"bouncing": Fraction(1, 2), "alt": Fraction(1, 2), "hanoi": Fraction(0)}

_LINE_RE = re.compile(r"^([ABC])->([ABC])$")


class TraceFormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


@dataclass(frozen=True)
class TraceDocument:
    variant: str
    alpha: Fraction
    n: int
    initial: str
    moves: tuple[Move, ...] = ()

    def __post_init__(self) -> None:
        if self.variant not in VARIANTS:
            raise TraceFormatError(f"unknown variant {self.variant!r}")
        RuleSet(self.alpha)
        if len(self.initial) != self.n:
            raise TraceFormatError(f"initial word {self.initial!r} does not have length n={self.n}")
        if any(ch not in PEGS for ch in self.initial):
            raise TraceFormatError(f"initial word {self.initial!r} uses an unknown peg")
        for m in self.moves:
            if m.src not in PEGS or m.dst not in PEGS or m.src == m.dst:
                raise TraceFormatError(f"invalid move {m.src}->{m.dst}")
        object.__setattr__(self, "moves", tuple(Move(*m) for m in self.moves))

    @property
    def rules(self) -> RuleSet:
        return RuleSet(self.alpha)


def alpha_label(alpha: Fraction) -> str:
    return f"{alpha.numerator}/{alpha.denominator}"


def serialize_trace(doc: TraceDocument, fmt: str = "text") -> str:
    if fmt == "text":
        return "".join(f"{m.src}->{m.dst}\n" for m in doc.moves)
    if fmt == "json":
        body = {
            "variant": doc.variant,
            "alpha": alpha_label(doc.alpha),
            "n": doc.n,
            "initial": doc.initial,
            "moves": [[m.src, m.dst] for m in doc.moves],
        }
        return json.dumps(body, separators=(",", ":")) + "\n"
    raise ValueError(f"unsupported trace format {fmt!r}; expected text or json")


def _parse_text(text: str) -> list[Move]:
    moves = []
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    for lineno, raw in enumerate(lines, start=1):
        line = raw.rstrip("\r")
        m = _LINE_RE.match(line)
        if not m:
            if re.match(r"^\w->\w$", line):
                raise TraceFormatError(f"unknown peg in {line!r}", lineno)
            raise TraceFormatError(f"expected X->Y, got {line!r}", lineno)
        if m.group(1) == m.group(2):
            raise TraceFormatError(f"self-move {line!r}", lineno)
        moves.append(Move(m.group(1), m.group(2)))
    return moves


def parse_trace(
    text: str,
    fmt: str = "text",
    *,
    n: int | None = None,
    variant: str = "bouncing",
    alpha: Fraction | None = None,
    initial: str | None = None,
) -> TraceDocument:
    """Inverse of :func:`serialize_trace`.

    For the text form, ``n`` is required and the remaining metadata
    defaults from the variant with the tower starting on ``A``.
    """
    if fmt == "text":
        if n is None:
            raise TraceFormatError("text traces need n")
        if alpha is None:
            if variant not in DEFAULT_ALPHA:
                raise TraceFormatError(f"variant {variant!r} needs an explicit alpha")
            alpha = DEFAULT_ALPHA[variant]
        return TraceDocument(variant, alpha, n, initial if initial is not None else "A" * n, tuple(_parse_text(text)))
    if fmt == "json":
        try:
            body = json.loads(text)
        except json.JSONDecodeError as exc:
            raise TraceFormatError(f"invalid JSON: {exc.msg}", exc.lineno) from None
        missing = {"variant", "alpha", "n", "initial", "moves"} - set(body)
        if missing:
            raise TraceFormatError(f"missing fields: {', '.join(sorted(missing))}")
        try:
            rules = RuleSet.parse(str(body["alpha"]))
        except ValueError as exc:
            raise TraceFormatError(str(exc)) from None
        moves = []
        for i, pair in enumerate(body["moves"]):
            if not (isinstance(pair, list) and len(pair) == 2):
                raise TraceFormatError(f"move #{i + 1} is not a peg pair: {pair!r}")
            if pair[0] not in PEGS or pair[1] not in PEGS:
                raise TraceFormatError(f"move #{i + 1} uses an unknown peg: {pair!r}")
            if pair[0] == pair[1]:
                raise TraceFormatError(f"move #{i + 1} is a self-move: {pair!r}")
            moves.append(Move(pair[0], pair[1]))
        if not isinstance(body["n"], int):
            raise TraceFormatError("n must be an integer")
        return TraceDocument(body["variant"], rules.alpha, body["n"], body["initial"], tuple(moves))
    raise ValueError(f"unsupported trace format {fmt!r}; expected text or json")


def sniff_format(text: str) -> str:
    return "json" if text.lstrip().startswith("{") else "text"


@dataclass
class ReplayReport:
    legal_prefix_len: int
    final_word: str
    solved: bool
    error: str | None = field(default=None)

    def summary(self) -> str:
        line = (
            f"legal_prefix_len={self.legal_prefix_len} final={self.final_word} "
            f"solved={str(self.solved).lower()}"
        )
        return line + (f" error={self.error}" if self.error else "")


def replay_verify(doc: TraceDocument, target: str = "C") -> ReplayReport:
    """Simulate every move; stop at the first illegal one and report it."""
    rules = doc.rules
    c = Configuration.from_word(doc.initial)
    done = 0
    for m in doc.moves:
        try:
            c = apply_move(c, m, rules)
        except TowerError as exc:
            return ReplayReport(done, c.word, False, str(exc))
        done += 1
    return ReplayReport(done, c.word, c.word == target * doc.n)
