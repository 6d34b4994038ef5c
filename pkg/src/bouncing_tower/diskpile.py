"""Disk Pile: classic top-of-peg rules, but several disks may share a size.

Equal disks are interchangeable, so a state is just how many disks of each
size sit on each peg.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .rules import PEG_INDEX, EmptyPegError, InsertionError, Move, check_peg

DEFAULT_PILE_CAP = 9


@dataclass(frozen=True)
class SizeProfile:
    """``counts[i]`` disks of size ``i + 1``, smallest size first."""

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "counts", tuple(int(c) for c in self.counts))
        if not self.counts:
            raise ValueError("a profile needs at least one size")
        if any(c < 1 for c in self.counts):
            raise ValueError(f"every size needs at least one disk, got {self.counts}")

    @classmethod
    def parse(cls, text: str) -> "SizeProfile":
        try:
            return cls(tuple(int(part) for part in text.split(",")))
        except ValueError as exc:
            raise ValueError(f"bad profile {text!r}: {exc}") from None

    @property
    def s(self) -> int:
        return len(self.counts)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __str__(self) -> str:
        return ",".join(map(str, self.counts))


def profiles(n: int, s: int) -> Iterator[SizeProfile]:
    """Every profile with ``s`` sizes and ``n`` disks in total."""
    for cuts in combinations(range(1, n), s - 1):
        bounds = (0, *cuts, n)
        yield SizeProfile(tuple(b - a for a, b in zip(bounds, bounds[1:])))


def solve_diskpile(p: SizeProfile, src: str = "A", via: str = "B", dst: str = "C") -> list[Move]:
    for peg in (src, via, dst):
        check_peg(peg)
    if len({src, via, dst}) != 3:
        raise ValueError("pegs must be distinct")
    out: list[Move] = []

    def rec(s: int, a: str, b: str, c: str) -> None:
        if s == 0:
            return
        rec(s - 1, a, c, b)
        out.extend([Move(a, c)] * p.counts[s - 1])
        rec(s - 1, b, a, c)

    rec(p.s, src, via, dst)
    return out


def count_diskpile(p: SizeProfile) -> int:
    return sum(n_i << (p.s - i) for i, n_i in enumerate(p.counts, start=1))


def worst_case_count(n: int, s: int) -> int:
    if not 1 <= s <= n:
        raise ValueError(f"need 1 <= s <= n, got n={n}, s={s}")
    return 2 ** (s - 1) * (n - s + 2) - 1


@dataclass(frozen=True)
class PileConfiguration:
    """Per-peg stacks of sizes, bottom to top."""

    stacks: tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...]]

    @classmethod
    def initial(cls, p: SizeProfile, peg: str = "A") -> "PileConfiguration":
        pile = tuple(size for size in range(p.s, 0, -1) for _ in range(p.counts[size - 1]))
        stacks = [(), (), ()]
        stacks[PEG_INDEX[peg]] = pile
        return cls(tuple(stacks))

    def apply(self, m: Move) -> "PileConfiguration":
        src, dst = self.stacks[PEG_INDEX[m.src]], self.stacks[PEG_INDEX[m.dst]]
        if not src:
            raise EmptyPegError(f"move {m}: peg {m.src} is empty")
        disk = src[-1]
        if dst and dst[-1] < disk:
            raise InsertionError(f"move {m}: size {disk} would rest on size {dst[-1]}")
        stacks = list(self.stacks)
        stacks[PEG_INDEX[m.src]] = src[:-1]
        stacks[PEG_INDEX[m.dst]] = dst + (disk,)
        return PileConfiguration(tuple(stacks))

    def peg(self, name: str) -> tuple[int, ...]:
        return self.stacks[PEG_INDEX[name]]


def replay_pile(p: SizeProfile, moves: list[Move], src: str = "A") -> PileConfiguration:
    c = PileConfiguration.initial(p, src)
    for m in moves:
        c = c.apply(m)
    return c


def diskpile_oracle(p: SizeProfile, *, cap: int = DEFAULT_PILE_CAP) -> int:
    """Exact optimum by BFS over per-size peg counts."""
    if p.total > cap:
        raise ValueError(f"profile has {p.total} disks, above the oracle cap of {cap}")
    start = tuple((c, 0, 0) for c in p.counts)
    goal = tuple((0, 0, c) for c in p.counts)
    dist = {start: 0}
    queue = deque([start])
    while queue:
        state = queue.popleft()
        if state == goal:
            return dist[state]
        # smallest size present on each peg is its top disk
        tops = [next((i for i, row in enumerate(state) if row[x]), None) for x in range(3)]
        for x in range(3):
            i = tops[x]
            if i is None:
                continue
            for y in range(3):
                if y == x or (tops[y] is not None and tops[y] < i):
                    continue
                rows = [list(row) for row in state]
                rows[i][x] -= 1
                rows[i][y] += 1
                nxt = tuple(tuple(row) for row in rows)
                if nxt not in dist:
                    dist[nxt] = dist[state] + 1
                    queue.append(nxt)
    raise AssertionError("goal unreachable")  # pragma: no cover

