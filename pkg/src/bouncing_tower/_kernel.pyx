# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled graph kernel.  Same contract as ``_kernel_py``."""

from cpython cimport array
import array

SLOTS = 6
MAX_DISKS = 16

cdef int _SLOTS = 6


def build_adjacency(int n, long long p, long long q, long long frozen_mask=0, int forbidden_mask=0):
    cdef Py_ssize_t total, code, c, slot
    cdef array.array adj_arr
    cdef int[:] adj
    cdef int pegs[3][32]
    cdef int cnt[3]
    cdef long long pow3[32]
    cdef int d, x, y, i, disk, depth, smaller

    if n < 0 or n > MAX_DISKS:
        raise ValueError(f"kernel supports 0..{MAX_DISKS} disks, got {n}")
    pow3[0] = 1
    for i in range(1, n + 1):
        pow3[i] = pow3[i - 1] * 3
    total = pow3[n]
    adj_arr = array.clone(array.array("i"), total * _SLOTS, zero=False)
    adj = adj_arr
    for code in range(total * _SLOTS):
        adj[code] = -1

    for code in range(total):
        cnt[0] = 0
        cnt[1] = 0
        cnt[2] = 0
        c = code
        for d in range(1, n + 1):
            x = c % 3
            pegs[x][cnt[x]] = d
            cnt[x] += 1
            c = c // 3
        slot = code * _SLOTS
        for x in range(3):
            if cnt[x] == 0 or (forbidden_mask >> x) & 1:
                continue
            disk = pegs[x][(p * cnt[x]) // q]
            if (frozen_mask >> (disk - 1)) & 1:
                continue
            for y in range(3):
                if y == x or (forbidden_mask >> y) & 1:
                    continue
                depth = <int>((p * (cnt[y] + 1)) // q)
                smaller = 0
                for i in range(cnt[y]):
                    if pegs[y][i] >= disk:
                        break
                    smaller += 1
                if smaller == depth:
                    adj[slot] = <int>(code + (y - x) * pow3[disk - 1])
                    slot += 1
    return adj_arr


def bfs_distances(adj_in, Py_ssize_t total, Py_ssize_t source):
    cdef const int[:] adj = adj_in
    cdef array.array dist_arr = array.clone(array.array("i"), total, zero=False)
    cdef array.array queue_arr = array.clone(array.array("i"), total, zero=False)
    cdef int[:] dist = dist_arr
    cdef int[:] queue = queue_arr
    cdef Py_ssize_t i, k, head = 0, tail = 1
    cdef int u, v, du

    for i in range(total):
        dist[i] = -1
    dist[source] = 0
    queue[0] = <int>source
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u] + 1
        for k in range(u * _SLOTS, u * _SLOTS + _SLOTS):
            v = adj[k]
            if v < 0:
                break
            if dist[v] < 0:
                dist[v] = du
                queue[tail] = v
                tail += 1
    return dist_arr
