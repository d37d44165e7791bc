"""Independent reference implementations used only by the tests.

Nothing here imports the package's adjacency, forcing or search code: tiles
are plain ``(i, j, slot)`` tuples and adjacency comes from intersecting the
closed rectangles the dominoes occupy.
"""

from __future__ import annotations

from collections import deque


def rect(t):
    i, j, s = t
    if (i + j) % 2 == 0:
        return (2 * i, 2 * j + s, 2 * i + 2, 2 * j + s + 1)
    return (2 * i + s, 2 * j, 2 * i + s + 1, 2 * j + 2)


def contact(t, u):
    """Dimension of the intersection of the two closed rectangles (-1 if empty)."""
    a, b = rect(t), rect(u)
    dx = min(a[2], b[2]) - max(a[0], b[0])
    dy = min(a[3], b[3]) - max(a[1], b[1])
    if dx < 0 or dy < 0:
        return -1
    return (dx > 0) + (dy > 0)


def adjacent(t, u, kind="full"):
    if tuple(t) == tuple(u):
        return False
    c = contact(t, u)
    return c >= 0 if kind == "full" else c >= 1


def window(radius, center=(0, 0)):
    ci, cj = center
    return [
        (i, j, s)
        for i in range(ci - radius, ci + radius + 1)
        for j in range(cj - radius, cj + radius + 1)
        for s in (0, 1)
    ]


def raster_neighbors(t, kind="full"):
    i, j, _ = t
    box = [(a, b, s) for a in range(i - 2, i + 3) for b in range(j - 2, j + 3) for s in (0, 1)]
    return [u for u in box if adjacent(t, u, kind)]


def all_colorings(tiles, fixed=None):
    """Every proper 4-colouring of ``tiles`` agreeing with ``fixed`` (plain DFS)."""
    tiles = [tuple(t) for t in tiles]
    fixed = {tuple(t): int(c) for t, c in (fixed or {}).items()}
    earlier = [[k for k in range(n) if adjacent(tiles[n], tiles[k])] for n in range(len(tiles))]
    cur = [0] * len(tiles)

    def rec(n):
        if n == len(tiles):
            yield tuple(cur)
            return
        opts = [fixed[tiles[n]]] if tiles[n] in fixed else range(4)
        for c in opts:
            if all(cur[k] != c for k in earlier[n]):
                cur[n] = c
                yield from rec(n + 1)

    yield from rec(0)


def candidate_sets(tiles, fixed=None):
    tiles = [tuple(t) for t in tiles]
    out = {t: set() for t in tiles}
    for col in all_colorings(tiles, fixed):
        for t, c in zip(tiles, col):
            out[t].add(c)
    return out


def naive_forcing(seed, tiles):
    """Sequential application of the three-colours rule to a fixpoint.

    Returns ``(colours, contradiction)``.
    """
    inside = {tuple(t) for t in tiles}
    col = {tuple(t): int(c) for t, c in seed.items()}
    nbrs = {t: [u for u in raster_neighbors(t) if u in inside] for t in inside}
    for t, c in col.items():
        if any(col.get(u) == c for u in raster_neighbors(t)):
            return col, True
    changed = True
    while changed:
        changed = False
        for t in sorted(inside):
            if t in col:
                continue
            seen = {col[u] for u in nbrs[t] if u in col}
            if len(seen) == 4:
                return col, True
            if len(seen) == 3:
                (c,) = set(range(4)) - seen
                if any(col.get(u) == c for u in nbrs[t]):
                    return col, True
                col[t] = c
                changed = True
    return col, False


def bfs_counts(start, kind, s_max):
    dist = {tuple(start): 0}
    q = deque([tuple(start)])
    while q:
        t = q.popleft()
        if dist[t] == s_max:
            continue
        for u in raster_neighbors(t, kind):
            if u not in dist:
                dist[u] = dist[t] + 1
                q.append(u)
    counts = [0] * (s_max + 1)
    for d in dist.values():
        counts[d] += 1
    return counts
