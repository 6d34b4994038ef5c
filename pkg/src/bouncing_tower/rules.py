"""Puzzle state and the parametric removal/insertion rules.

A peg holding ``k`` disks gives up the disk of rank ``floor(alpha*k) + 1``
counted from the top, and receives a new disk below ``floor(alpha*(k+1))``
of its current disks.  ``alpha = 0`` is the classic Tower of Hanoi and
``alpha = 1/2`` is the Bouncing Tower.

Disks are numbered by size, 1 being the smallest.  A configuration records
the peg of every disk; the order on a peg is forced by the sizes, so every
word over ``{A, B, C}`` is a legal state.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, NamedTuple

PEGS = ("A", "B", "C")
PEG_INDEX = {peg: i for i, peg in enumerate(PEGS)}

_ALPHA_RE = re.compile(r"^\s*(\d+)\s*/\s*(\d+)\s*$")


class TowerError(Exception):
    """Base class for rule violations."""


class IllegalMoveError(TowerError):
    pass


class EmptyPegError(IllegalMoveError):
    """Raised when a disk is requested from a peg holding none."""


class InsertionError(IllegalMoveError):
    """Raised when the inserted disk would sit above a smaller one."""


def check_peg(peg: str) -> str:
    if peg not in PEG_INDEX:
        raise ValueError(f"unknown peg {peg!r}; expected one of A, B, C")
    return peg


@dataclass(frozen=True)
class RuleSet:
    """Removal/insertion geometry, fixed by an exact rational ``alpha`` in [0, 1/2]."""

    alpha: Fraction

    def __post_init__(self) -> None:
        alpha = self.alpha
        if isinstance(alpha, float):
            raise TypeError("alpha must be exact; pass a Fraction or a 'p/q' string")
        alpha = Fraction(alpha)
        if not 0 <= alpha <= Fraction(1, 2):
            raise ValueError(f"alpha must lie in [0, 1/2], got {alpha}")
        object.__setattr__(self, "alpha", alpha)

    @classmethod
    def parse(cls, text: str) -> "RuleSet":
        """Build from a ``"p/q"`` string; decimals are rejected."""
        m = _ALPHA_RE.match(text)
        if not m:
            raise ValueError(f"alpha must be written as p/q, got {text!r}")
        p, q = int(m.group(1)), int(m.group(2))
        if q == 0:
            raise ValueError("alpha denominator must be positive")
        return cls(Fraction(p, q))

    @property
    def label(self) -> str:
        return f"{self.alpha.numerator}/{self.alpha.denominator}"

    def removal_index(self, k: int) -> int:
        # 0-based position from the top
        return (self.alpha.numerator * k) // self.alpha.denominator

    def insertion_depth(self, k: int) -> int:
        return (self.alpha.numerator * (k + 1)) // self.alpha.denominator


HANOI = RuleSet(Fraction(0))
BOUNCING = RuleSet(Fraction(1, 2))


class Move(NamedTuple):
    src: str
    dst: str

    def reversed(self) -> "Move":
        return Move(self.dst, self.src)

    def __str__(self) -> str:
        return f"{self.src}->{self.dst}"


def make_move(src: str, dst: str) -> Move:
    check_peg(src)
    check_peg(dst)
    if src == dst:
        raise ValueError(f"a move needs two distinct pegs, got {src}->{dst}")
    return Move(src, dst)


class ParityContext(NamedTuple):
    """Parities of the fixed-disk counts on the source, middle and target pegs."""

    x: int
    y: int
    z: int

    @classmethod
    def parse(cls, bits: str) -> "ParityContext":
        if len(bits) != 3 or set(bits) - {"0", "1"}:
            raise ValueError(f"parity context must be three bits, got {bits!r}")
        return cls(*(int(b) for b in bits))

    def flipped(self) -> "ParityContext":
        return ParityContext(1 - self.x, 1 - self.y, 1 - self.z)

    def __str__(self) -> str:
        return f"{self.x}{self.y}{self.z}"


@dataclass(frozen=True)
class Configuration:
    """Peg of every disk; ``placement[d - 1]`` holds the peg of disk ``d``."""

    placement: tuple[str, ...]

    def __post_init__(self) -> None:
        for peg in self.placement:
            check_peg(peg)

    @classmethod
    def tower(cls, n: int, peg: str = "A") -> "Configuration":
        check_peg(peg)
        return cls((peg,) * n)

    @classmethod
    def from_word(cls, word: str) -> "Configuration":
        """Letter ``i`` of the word is the peg of the ``i``-th largest disk."""
        for ch in word:
            check_peg(ch)
        return cls(tuple(reversed(word)))

    @classmethod
    def from_stacks(cls, stacks: dict[str, Iterable[int]]) -> "Configuration":
        """Build from explicit peg contents; each stack must hold distinct sizes 1..n overall."""
        owner: dict[int, str] = {}
        for peg, disks in stacks.items():
            check_peg(peg)
            disks = list(disks)
            if any(a <= b for a, b in zip(disks, disks[1:])):
                raise InsertionError(f"stack on {peg} is not decreasing bottom to top: {disks}")
            for d in disks:
                if d in owner:
                    raise ValueError(f"disk {d} appears twice")
                owner[d] = peg
        n = len(owner)
        if sorted(owner) != list(range(1, n + 1)):
            raise ValueError("disk sizes must be exactly 1..n")
        return cls(tuple(owner[d] for d in range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.placement)

    @property
    def word(self) -> str:
        return "".join(reversed(self.placement))

    def stack(self, peg: str) -> tuple[int, ...]:
        """Disks on ``peg`` from bottom to top."""
        return tuple(d for d in range(self.n, 0, -1) if self.placement[d - 1] == peg)

    def count(self, peg: str) -> int:
        return self.placement.count(peg)

    def peg_of(self, disk: int) -> str:
        return self.placement[disk - 1]

    def __str__(self) -> str:
        return " ".join(f"{p}={list(self.stack(p))}" for p in PEGS)


def all_configurations(n: int) -> Iterator[Configuration]:
    """Every one of the 3**n states, in lexicographic word order."""
    from itertools import product

    for letters in product(PEGS, repeat=n):
        yield Configuration.from_word("".join(letters))


def removal_rank(n: int, rules: RuleSet) -> int:
    """Rank from the top of the disk that leaves an ``n``-disk peg."""
    if n < 1:
        raise EmptyPegError("cannot remove a disk from an empty peg")
    return rules.removal_index(n) + 1


def insertion_depth(n: int, rules: RuleSet) -> int:
    """How many of the ``n`` existing disks stay above a newly inserted one."""
    if n < 0:
        raise ValueError("disk count must be non-negative")
    return rules.insertion_depth(n)


def removable_disk(c: Configuration, peg: str, rules: RuleSet) -> int:
    top_down = c.stack(peg)[::-1]
    if not top_down:
        raise EmptyPegError(f"peg {peg} is empty")
    return top_down[removal_rank(len(top_down), rules) - 1]


def _insertion_ok(target: tuple[int, ...], disk: int, rules: RuleSet) -> bool:
    # target is bottom->top; the disks above the insertion point are the smallest ones
    depth = rules.insertion_depth(len(target))
    return sum(1 for d in target if d < disk) == depth


def is_legal(c: Configuration, m: Move, rules: RuleSet) -> bool:
    if m.src == m.dst or not c.count(m.src):
        return False
    return _insertion_ok(c.stack(m.dst), removable_disk(c, m.src, rules), rules)


def legal_moves(c: Configuration, rules: RuleSet) -> list[Move]:
    """All legal moves from ``c``, in canonical (source, target) order."""
    return [
        Move(x, y)
        for x in PEGS
        for y in PEGS
        if x != y and is_legal(c, Move(x, y), rules)
    ]


def apply_move(c: Configuration, m: Move, rules: RuleSet) -> Configuration:
    if m.src == m.dst:
        raise IllegalMoveError(f"move {m} does not change peg")
    if not c.count(m.src):
        raise EmptyPegError(f"move {m}: peg {m.src} is empty")
    disk = removable_disk(c, m.src, rules)
    if not _insertion_ok(c.stack(m.dst), disk, rules):
        raise InsertionError(
            f"move {m}: disk {disk} cannot be inserted into {m.dst}={list(c.stack(m.dst))}"
        )
    placement = list(c.placement)
    placement[disk - 1] = m.dst
    return Configuration(tuple(placement))


def inverse_move(c_after: Configuration, m: Move, rules: RuleSet) -> Configuration:
    """Undo ``m``: the moved disk always sits at the removal point of its new peg."""
    return apply_move(c_after, m.reversed(), rules)


def replay(c: Configuration, moves: Iterable[Move], rules: RuleSet) -> Configuration:
    for m in moves:
        c = apply_move(c, m, rules)
    return c


def removal_order(n: int, rules: RuleSet) -> tuple[int, ...]:
    """Sizes in the order they leave a full ``n``-tower by repeated removals."""
    remaining = list(range(1, n + 1))  # top -> bottom
    order = []
    while remaining:
        order.append(remaining.pop(rules.removal_index(len(remaining))))
    return tuple(order)


def insertion_order(n: int, rules: RuleSet) -> tuple[int, ...]:
    return removal_order(n, rules)[::-1]


def fixed_disk_parity(total_on_peg: int, moving: int) -> int:
    if moving < 0 or moving > total_on_peg:
        raise ValueError(f"cannot move {moving} disks off a peg holding {total_on_peg}")
    return (total_on_peg - moving) % 2
