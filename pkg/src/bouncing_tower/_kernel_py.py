"""Pure-Python graph kernel.  Mirrors ``_kernel.pyx`` line for line."""

from array import array

SLOTS = 6
MAX_DISKS = 16


def build_adjacency(n, p, q, frozen_mask=0, forbidden_mask=0):
    """Flat ``3**n * SLOTS`` neighbour table, padded with -1.

    State code: digit ``d - 1`` (base 3) is the peg of disk ``d``.
    """
    if not 0 <= n <= MAX_DISKS:
        raise ValueError(f"kernel supports 0..{MAX_DISKS} disks, got {n}")
    total = 3**n
    adj = array("i", [-1]) * (total * SLOTS)
    pow3 = [3**i for i in range(n + 1)]
    for code in range(total):
        pegs = ([], [], [])
        c = code
        for d in range(1, n + 1):
            pegs[c % 3].append(d)
            c //= 3
        slot = code * SLOTS
        for x in range(3):
            src = pegs[x]
            if not src or (forbidden_mask >> x) & 1:
                continue
            disk = src[(p * len(src)) // q]
            if (frozen_mask >> (disk - 1)) & 1:
                continue
            for y in range(3):
                if y == x or (forbidden_mask >> y) & 1:
                    continue
                dst = pegs[y]
                depth = (p * (len(dst) + 1)) // q
                smaller = 0
                for e in dst:
                    if e >= disk:
                        break
                    smaller += 1
                if smaller == depth:
                    adj[slot] = code + (y - x) * pow3[disk - 1]
                    slot += 1
    return adj


def bfs_distances(adj, total, source):
    dist = array("i", [-1]) * total
    queue = array("i", [0]) * total
    dist[source] = 0
    queue[0] = source
    head, tail = 0, 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        base = u * SLOTS
        for k in range(base, base + SLOTS):
            v = adj[k]
            if v < 0:
                break
            if dist[v] < 0:
                dist[v] = du
                queue[tail] = v
                tail += 1
    return dist
