"""Test-only oracles that share no code with the package."""

from collections import deque
from fractions import Fraction

from bouncing_tower.rules import Configuration, removal_order, BOUNCING


def stack_neighbours(state, alpha):
    """Independent move generator on explicit top->bottom stacks."""
    out = []
    for x in range(3):
        if not state[x]:
            continue
        src = list(state[x])
        disk = src.pop(int(alpha * len(src)))
        for y in range(3):
            if y == x:
                continue
            dst = list(state[y])
            dst.insert(int(alpha * (len(dst) + 1)), disk)
            if all(a < b for a, b in zip(dst, dst[1:])):
                nxt = list(state)
                nxt[x], nxt[y] = tuple(src), tuple(dst)
                out.append(((x, y), tuple(nxt)))
    return out


def stack_bfs(n, alpha):
    """Distance and number of shortest paths from A^n to C^n."""
    alpha = Fraction(alpha)
    start = (tuple(range(1, n + 1)), (), ())
    goal = ((), (), tuple(range(1, n + 1)))
    dist, count = {start: 0}, {start: 1}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for _, v in stack_neighbours(u, alpha):
            if v not in dist:
                dist[v] = dist[u] + 1
                count[v] = 0
                queue.append(v)
            if dist[v] == dist[u] + 1:
                count[v] += count[u]
    return dist.get(goal), count.get(goal, 0)


def context_setup(ctx, n):
    """Configuration realising parity context ``ctx`` with ``n`` movable disks on A.

    One small fixed disk per odd peg; on A it is the last disk in removal
    order, on B and C it sits above the insertion point.  Returns the start
    configuration, the expected end configuration and the fixed disks.
    """
    x, y, z = (int(b) for b in str(ctx))
    stacks = {"A": [], "B": [], "C": []}
    size = 1
    fixed = []
    for peg, bit in (("B", y), ("C", z), ("A", x)):
        if bit:
            stacks[peg].append(size)
            fixed.append(size)
            size += 1
    movable = list(range(size, size + n))
    stacks["A"] += movable
    start = Configuration.from_stacks({p: sorted(v, reverse=True) for p, v in stacks.items()})
    end = list(start.placement)
    for d in movable:
        end[d - 1] = "C"
    return start, Configuration(tuple(end)), fixed


def two_peg_setup(height, moving, fixed_on_target):
    """Source A holds a ``height`` tower whose first ``moving`` removals must reach C.

    C holds ``fixed_on_target`` pinned disks straddling its insertion point.
    Returns (start, goal, fixed disks).
    """
    above = (fixed_on_target + 1) // 2
    small = list(range(1, above + 1))
    tower = list(range(above + 1, above + height + 1))
    large = list(range(above + height + 1, height + fixed_on_target + 1))
    order = removal_order(height, BOUNCING)
    movable = [tower[r - 1] for r in order[:moving]]
    start = Configuration.from_stacks(
        {"A": sorted(tower, reverse=True), "B": [], "C": sorted(small + large, reverse=True)}
    )
    goal = list(start.placement)
    for d in movable:
        goal[d - 1] = "C"
    fixed = [d for d in range(1, start.n + 1) if d not in movable]
    return start, Configuration(tuple(goal)), fixed
