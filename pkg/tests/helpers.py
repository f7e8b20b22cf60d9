"""Independent reference implementations used as test oracles.

Everything here is deliberately naive (dense 0/1 lists, cubic loops,
exhaustive enumeration) and shares no code with the production package.
"""

import itertools


# -- dense GF(2) -------------------------------------------------------------

def dense_rank(rows):
    """Rank of a dense 0/1 row-major matrix by textbook elimination."""
    work = [list(r) for r in rows]
    if not work:
        return 0
    ncols = len(work[0])
    rank = 0
    for col in range(ncols):
        pivot = None
        for i in range(rank, len(work)):
            if work[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        for i in range(len(work)):
            if i != rank and work[i][col]:
                work[i] = [a ^ b for a, b in zip(work[i], work[rank])]
        rank += 1
    return rank


def columns_independent(rows, selected):
    """Whether the selected columns of a row-major matrix are independent."""
    sub = [[row[j] for j in selected] for row in rows]
    return dense_rank(sub) == len(selected)


def greedy_profile(rows):
    """Left-to-right scan keeping each column independent of the kept ones."""
    ncols = len(rows[0]) if rows else 0
    kept = []
    for j in range(ncols):
        if columns_independent(rows, kept + [j]):
            kept.append(j)
    return tuple(kept)


def exhaustive_lex_min_profile(rows):
    """Smallest independent index sequence of maximum size, by full scan.

    itertools.combinations yields index tuples in lexicographic order, so
    the first independent combination of size r is the minimum.
    """
    ncols = len(rows[0]) if rows else 0
    r = dense_rank(rows)
    for combo in itertools.combinations(range(ncols), r):
        if columns_independent(rows, list(combo)):
            return combo
    return ()


def lex_min_profile_dfs(col_bits, nrows):
    """Lexicographically smallest independent sequence of size rank.

    Depth-first search over increasing index sequences, smallest index
    first, pruning prefixes that are dependent (subsets of independent
    sets are independent, so the pruning is sound).  The first complete
    sequence found is the lexicographic minimum.
    """

    def reduce(bits, pivots):
        while bits:
            top = bits.bit_length() - 1
            if top not in pivots:
                return bits, top
            bits ^= pivots[top]
        return 0, -1

    # rank by one straight pass
    pivots = {}
    for b in col_bits:
        red, top = reduce(b, pivots)
        if red:
            pivots[top] = red
    r = len(pivots)

    ncols = len(col_bits)
    found = []

    def dfs(start, chosen, pivots):
        if len(chosen) == r:
            found.append(tuple(chosen))
            return True
        for j in range(start, ncols):
            if ncols - j < r - len(chosen):
                return False
            red, top = reduce(col_bits[j], pivots)
            if red:
                nxt = dict(pivots)
                nxt[top] = red
                chosen.append(j)
                if dfs(j + 1, chosen, nxt):
                    return True
                chosen.pop()
        return False

    dfs(0, [], {})
    return found[0] if found else ()


# -- graph oracles ------------------------------------------------------------

def bellman_ford(n, edges, source):
    """Base-weight distances; None for unreachable vertices."""
    dist = [None] * n
    dist[source] = 0
    for _ in range(max(0, n - 1)):
        changed = False
        for u, v, w in edges:
            for a, b in ((u, v), (v, u)):
                if dist[a] is not None and (dist[b] is None or dist[a] + w < dist[b]):
                    dist[b] = dist[a] + w
                    changed = True
        if not changed:
            break
    return dist


def floyd_warshall(n, edges):
    """Base-weight all-pairs distances; None for unreachable pairs."""
    inf = float("inf")
    d = [[inf] * n for _ in range(n)]
    for i in range(n):
        d[i][i] = 0
    for u, v, w in edges:
        if w < d[u][v]:
            d[u][v] = d[v][u] = w
    for k in range(n):
        for i in range(n):
            dik = d[i][k]
            if dik == inf:
                continue
            for j in range(n):
                if dik + d[k][j] < d[i][j]:
                    d[i][j] = dik + d[k][j]
    return [[None if x == inf else x for x in row] for row in d]


def all_simple_paths(n, edges, source, target):
    """Every simple path source -> target as a list of edge indices."""
    adj = [[] for _ in range(n)]
    for idx, (u, v, _w) in enumerate(edges):
        adj[u].append((v, idx))
        adj[v].append((u, idx))
    paths = []

    def walk(v, visited, acc):
        if v == target:
            paths.append(list(acc))
            return
        for o, idx in adj[v]:
            if not (visited >> o) & 1:
                acc.append(idx)
                walk(o, visited | (1 << o), acc)
                acc.pop()

    if source == target:
        return [[]]
    walk(source, 1 << source, [])
    return paths


def path_key(edges, path):
    """(base weight, edge bit set) of a list of edge indices."""
    base = 0
    mask = 0
    for idx in path:
        base += edges[idx][2]
        mask |= 1 << idx
    return base, mask
