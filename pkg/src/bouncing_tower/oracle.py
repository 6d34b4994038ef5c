"""Configuration graph, exact BFS and path counting.

Every word over ``{A, B, C}`` of length ``n`` is a vertex; its integer code
puts the largest disk in the most significant base-3 digit, so ascending
codes are words in lexicographic order.  Edges come from the compiled (or
pure-Python) kernel in ``kernels``; nothing here trusts the solver.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from . import kernels
from .rules import BOUNCING, HANOI, PEG_INDEX, PEGS, Configuration, Move, RuleSet, replay, TowerError
from .solver import SolverVariant, solve

DEFAULT_CAP = 12
CAP_ENV = "BOUNCING_TOWER_ORACLE_CAP"


class ScaleCapError(ValueError):
    pass


def oracle_cap() -> int:
    value = os.environ.get(CAP_ENV)
    return int(value) if value else DEFAULT_CAP


def word_to_code(word: str) -> int:
    code = 0
    for ch in word:
        code = code * 3 + PEG_INDEX[ch]
    return code


def code_to_word(code: int, n: int) -> str:
    letters = []
    for _ in range(n):
        code, r = divmod(code, 3)
        letters.append(PEGS[r])
    return "".join(reversed(letters))


@dataclass(frozen=True)
class FixedDiskConstraint:
    """Disks pinned to a peg; moves that would lift them are dropped."""

    pins: frozenset[tuple[int, str]] = frozenset()

    @classmethod
    def of(cls, pins: Iterable[tuple[int, str]]) -> "FixedDiskConstraint":
        return cls(frozenset(pins))

    @property
    def mask(self) -> int:
        return sum(1 << (d - 1) for d, _ in self.pins)

    def check(self, word: str) -> None:
        c = Configuration.from_word(word)
        for d, peg in self.pins:
            if not 1 <= d <= c.n or c.peg_of(d) != peg:
                raise ValueError(f"disk {d} is not on peg {peg} in {word}")


@dataclass(frozen=True)
class StateGraph:
    n: int
    rules: RuleSet
    adjacency: object = field(repr=False)
    frozen_mask: int = 0
    forbidden_mask: int = 0

    @property
    def vertex_count(self) -> int:
        return 3**self.n

    def _check(self, word: str) -> int:
        if len(word) != self.n or any(ch not in PEG_INDEX for ch in word):
            raise ValueError(f"malformed state {word!r} for n={self.n}")
        return word_to_code(word)

    def neighbours(self, code: int) -> list[int]:
        base = code * kernels.SLOTS
        out = []
        for k in range(base, base + kernels.SLOTS):
            v = self.adjacency[k]
            if v < 0:
                break
            out.append(v)
        return out

    def degree(self, code: int) -> int:
        return len(self.neighbours(code))

    def edges(self) -> Iterator[tuple[int, int]]:
        """Undirected edges ``(u, v)`` with ``u < v``, sorted."""
        for u in range(self.vertex_count):
            for v in sorted(self.neighbours(u)):
                if u < v:
                    yield u, v

    def distances(self, source: str):
        return kernels.bfs_distances(self.adjacency, self.vertex_count, self._check(source))


def build_graph(
    n: int,
    rules: RuleSet,
    *,
    cap: int | None = None,
    constraint: FixedDiskConstraint | None = None,
    forbidden_pegs: Iterable[str] = (),
) -> StateGraph:
    cap = oracle_cap() if cap is None else cap
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > cap:
        raise ScaleCapError(f"n={n} exceeds the oracle cap of {cap} (3**{n} states)")
    frozen = constraint.mask if constraint else 0
    forbidden = sum(1 << PEG_INDEX[p] for p in set(forbidden_pegs))
    alpha = rules.alpha
    adj = kernels.build_adjacency(n, alpha.numerator, alpha.denominator, frozen, forbidden)
    return StateGraph(n, rules, adj, frozen, forbidden)


def bfs_distance(g: StateGraph, s: str, t: str) -> int | None:
    """Exact shortest-path length, or ``None`` when ``t`` is unreachable."""
    d = g.distances(s)[g._check(t)]
    return None if d < 0 else d


def shortest_path_count(g: StateGraph, s: str, t: str) -> int:
    source, target = g._check(s), g._check(t)
    ds = g.distances(s)
    if ds[target] < 0:
        return 0
    dt = g.distances(t)
    total = ds[target]
    layers: dict[int, list[int]] = {}
    for v in range(g.vertex_count):
        if ds[v] >= 0 and dt[v] >= 0 and ds[v] + dt[v] == total:
            layers.setdefault(ds[v], []).append(v)
    counts = {source: 1}
    for level in range(1, total + 1):
        for v in layers[level]:
            counts[v] = sum(counts.get(u, 0) for u in g.neighbours(v) if ds[u] == level - 1)
    return counts[target]


def _move_between(u: int, v: int, n: int) -> Move:
    a, b = code_to_word(u, n), code_to_word(v, n)
    (i,) = [i for i in range(n) if a[i] != b[i]]
    return Move(a[i], b[i])


def shortest_path(g: StateGraph, s: str, t: str) -> list[Move] | None:
    """One shortest move sequence; ties go to the smallest predecessor code."""
    ds = g.distances(s)
    v = g._check(t)
    if ds[v] < 0:
        return None
    path = []
    while ds[v] > 0:
        u = min(u for u in g.neighbours(v) if ds[u] == ds[v] - 1)
        path.append(_move_between(u, v, g.n))
        v = u
    return path[::-1]


def restricted_reachability(
    n: int,
    rules: RuleSet,
    start: str,
    constraint: FixedDiskConstraint | None = None,
    forbidden_pegs: Iterable[str] = (),
    *,
    cap: int | None = None,
) -> set[str]:
    """States reachable from ``start`` without lifting pinned disks or touching forbidden pegs."""
    if constraint:
        constraint.check(start)
    g = build_graph(n, rules, cap=cap, constraint=constraint, forbidden_pegs=forbidden_pegs)
    dist = g.distances(start)
    return {code_to_word(v, n) for v in range(g.vertex_count) if dist[v] >= 0}


@dataclass
class SolverReport:
    n: int
    variant: str
    trace_len: int
    bfs_len: int | None
    unique: bool
    legal: bool
    terminal: bool
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def summary(self) -> str:
        verdict = "PASS" if self.ok else "FAIL"
        return (
            f"{verdict} n={self.n} variant={self.variant} trace_len={self.trace_len} "
            f"bfs_len={self.bfs_len} unique={str(self.unique).lower()} "
            f"legal={str(self.legal).lower()} terminal={str(self.terminal).lower()}"
        )


def verify_solver(n: int, variant: SolverVariant | str, *, cap: int | None = None) -> SolverReport:
    """Check the solver trace against BFS: same length, unique optimum, legal, terminal."""
    variant = SolverVariant(variant)
    rules = HANOI if variant is SolverVariant.HANOI else BOUNCING
    g = build_graph(n, rules, cap=cap)
    s, t = "A" * n, "C" * n
    trace = solve(variant, n)
    legal, terminal = True, False
    try:
        terminal = replay(Configuration.tower(n, "A"), trace, rules).word == t
    except TowerError:
        legal = False
    bfs_len = bfs_distance(g, s, t)
    unique = shortest_path_count(g, s, t) == 1
    report = SolverReport(n, variant.value, len(trace), bfs_len, unique, legal, terminal)
    if not legal:
        report.problems.append("trace contains an illegal move")
    if not terminal:
        report.problems.append("trace does not end with every disk on C")
    if bfs_len != len(trace):
        report.problems.append(f"trace length {len(trace)} differs from shortest path {bfs_len}")
    if not unique:
        report.problems.append("shortest path is not unique")
    return report


def export_graph(g: StateGraph, fmt: str) -> str:
    if fmt == "dot":
        lines = ["graph G {"]
        lines += [f'  "{code_to_word(v, g.n)}";' for v in range(g.vertex_count)]
        lines += [
            f'  "{code_to_word(u, g.n)}" -- "{code_to_word(v, g.n)}";' for u, v in g.edges()
        ]
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {
            "n": g.n,
            "alpha": g.rules.label,
            "nodes": [code_to_word(v, g.n) for v in range(g.vertex_count)],
            "edges": [[u, v] for u, v in g.edges()],
        }
        return json.dumps(doc, separators=(",", ":")) + "\n"
    raise ValueError(f"unsupported graph format {fmt!r}; expected dot or json")
