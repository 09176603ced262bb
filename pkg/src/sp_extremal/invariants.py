"""Girth, K4-minor recognition, and isomorphism via canonical labeling.

The canonical form of a graph is defined as the lexicographically least
graph6 encoding over all vertex relabelings -- a total order on strings,
so the definition is implementation-independent.  The same placement
search, run in the opposite direction, decides whether a labeled graph is
the colex-greatest representative of its class; the generator in
search.py uses that test to emit one graph per isomorphism class.
"""

from __future__ import annotations

from itertools import combinations

from .graphs import Graph, Infinite, _iter_bits, encode_graph6
from .limits import check_size, EXACT_MAX_N

#: Girth of a graph with no cycle.  Compares greater than any integer, so
#: "girth(G) >= g" is vacuously true for forests.
ACYCLIC = Infinite("ACYCLIC")


# -- girth -------------------------------------------------------------------


def girth(G: Graph):
    """Length of a shortest cycle, or ACYCLIC.

    Breadth-first search from every vertex; a non-tree edge seen at depth d
    closes a walk of length dist[x]+dist[w]+1 that contains a cycle no
    longer than that, and the minimum over all roots is exact.
    """
    best = _shortest_cycle_below(G.adj, G.n, None)
    return ACYCLIC if best is None else best


def girth_at_least(G: Graph, g: int) -> bool:
    """True iff G has no cycle shorter than g (true for forests)."""
    return _shortest_cycle_below(G.adj, G.n, g) is None


def _shortest_cycle_below(adj, n: int, cutoff: int | None):
    """Shortest cycle length found below ``cutoff`` (None = no cutoff).

    With a cutoff, returns as soon as any qualifying cycle is seen, which
    makes the common reject case (a triangle in a dense graph) cheap.
    """
    best = cutoff
    found = None
    for root in range(n):
        dist = [-1] * n
        parent = [-1] * n
        dist[root] = 0
        queue = [root]
        qi = 0
        while qi < len(queue):
            x = queue[qi]
            qi += 1
            dx = dist[x]
            if best is not None and 2 * dx >= best:
                break
            for w in _iter_bits(adj[x]):
                dw = dist[w]
                if dw == -1:
                    dist[w] = dx + 1
                    parent[w] = x
                    queue.append(w)
                elif w != parent[x]:
                    cyc = dx + dw + 1
                    if best is None or cyc < best:
                        best = cyc
                        found = cyc
                        if cutoff is not None:
                            return found
    return found if cutoff is None else None


# -- K4-minor-freeness -------------------------------------------------------


def is_k4_minor_free(G: Graph) -> bool:
    """True iff G has no K4 minor (equivalently, is series-parallel).

    Reduction: repeatedly delete a vertex of degree <= 1; delete a degree-2
    vertex whose neighbors are adjacent; replace a degree-2 vertex whose
    neighbors are non-adjacent by the edge joining them.  The graph is
    K4-minor-free iff this terminates with no vertex left.  Components
    reduce independently, so disconnected input is fine.
    """
    return _reduces_to_empty(list(G.adj))


def _reduces_to_empty(adj: list[int]) -> bool:
    """Destructive worklist form of the degree-<=2 reduction above."""
    n = len(adj)
    alive = (1 << n) - 1 if n else 0
    stack = list(range(n))
    while stack:
        v = stack.pop()
        if not (alive >> v) & 1:
            continue
        nb = adj[v]
        d = nb.bit_count()
        if d > 2:
            continue  # re-pushed by whichever deletion lowers its degree
        alive &= ~(1 << v)
        if d == 2:
            low = nb & -nb
            u = low.bit_length() - 1
            w = (nb ^ low).bit_length() - 1
            adj[u] &= ~(1 << v)
            adj[w] &= ~(1 << v)
            if (adj[u] >> w) & 1:
                stack.append(u)
                stack.append(w)
            else:
                adj[u] |= 1 << w
                adj[w] |= 1 << u
        elif d == 1:
            u = nb.bit_length() - 1
            adj[u] &= ~(1 << v)
            stack.append(u)
        adj[v] = 0
    return alive == 0


def find_k4_minor(G: Graph):
    """Four disjoint connected branch sets pairwise joined by edges, or None.

    Exhaustive: K4 has maximum degree 3, so a K4 minor exists iff some four
    branch vertices are linked by six internally disjoint paths.  All
    candidate quadruples are tried; per quadruple, the six pairs are routed
    by depth-first search over simple paths on the unused vertices.
    Returns a tuple of four frozensets, or None when no minor exists.
    """
    check_size(G.n, EXACT_MAX_N, "find_k4_minor")
    n = G.n
    adj = G.adj
    cands = [v for v in range(n) if adj[v].bit_count() >= 3]
    for quad in combinations(cands, 4):
        quad_mask = 0
        for q in quad:
            quad_mask |= 1 << q
        # quick reject: each pair must be connectable avoiding the other two
        ok = True
        for a, b in combinations(quad, 2):
            others = quad_mask & ~(1 << a) & ~(1 << b)
            if not _connectable(adj, a, b, others):
                ok = False
                break
        if not ok:
            continue
        paths = _route_six_paths(adj, quad, quad_mask)
        if paths is not None:
            sets = {q: {q} for q in quad}
            for (a, b), internals in zip(combinations(quad, 2), paths):
                sets[a].update(internals)
            return tuple(frozenset(sets[q]) for q in quad)
    return None


def _connectable(adj, a: int, b: int, blocked: int) -> bool:
    seen = (1 << a) | blocked
    frontier = 1 << a
    target = 1 << b
    while frontier:
        nxt = 0
        for w in _iter_bits(frontier):
            nxt |= adj[w]
        if nxt & target:
            return True
        nxt &= ~seen
        seen |= nxt
        frontier = nxt
    return False


def _route_six_paths(adj, quad, quad_mask: int):
    """Internally disjoint paths for all six pairs of quad, or None."""
    pairs = list(combinations(quad, 2))

    def solve(i: int, used: int):
        if i == 6:
            return []
        a, b = pairs[i]
        for internals, mask in _simple_paths(adj, a, b, used | quad_mask):
            rest = solve(i + 1, used | mask)
            if rest is not None:
                return [internals] + rest
        return None

    return solve(0, 0)


def _simple_paths(adj, a: int, b: int, avoid: int):
    """Yield (internal-vertex list, mask) of simple a-b paths; direct edge first."""
    if (adj[a] >> b) & 1:
        yield [], 0
    path: list[int] = []

    def walk(v: int, used: int):
        for w in _iter_bits(adj[v] & ~avoid & ~used):
            if w == b:
                continue
            path.append(w)
            if (adj[w] >> b) & 1:
                yield list(path), used | (1 << w)
            yield from walk(w, used | (1 << w))
            path.pop()

    yield from walk(a, 1 << a | 1 << b)


# -- canonical labeling ------------------------------------------------------
#
# A placement assigns original vertices to positions 0,1,2,...; placing a
# vertex at position j appends column j of the adjacency string (its bits
# against positions 0..j-1, earliest position most significant), which is
# exactly the graph6 bit order.  Branch and bound over placements, with
# vertices grouped by already-found automorphism orbits so symmetric
# graphs do not explode.

_BIG = 1 << 63  # larger than any column value (columns have < 62 bits)


def _column(adj_v: int, placed: list[int]) -> int:
    col = 0
    for u in placed:
        col = (col << 1) | ((adj_v >> u) & 1)
    return col


class _AutRecorder:
    """Automorphism generators found during the placement search.

    A new automorphism is kept only when it merges two orbits not already
    joined, which caps the list at n-1 generators.  Each generator stores
    its support as a bitmask, so "fixes the placed prefix pointwise" is a
    single AND against the prefix mask.
    """

    __slots__ = ("n", "gens", "supports", "_parent")

    def __init__(self, n: int):
        self.n = n
        self.gens: list[list[int]] = []
        self.supports: list[int] = []
        self._parent = list(range(n))

    def _find(self, x: int) -> int:
        parent = self._parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def add(self, g: list[int]) -> None:
        merged = False
        for v in range(self.n):
            a, b = self._find(v), self._find(g[v])
            if a != b:
                self._parent[a] = b
                merged = True
        if merged:
            sup = 0
            for v in range(self.n):
                if g[v] != v:
                    sup |= 1 << v
            self.gens.append(g)
            self.supports.append(sup)

    def filter_ties(self, scored: list[tuple[int, int]], placed_mask: int) -> list[tuple[int, int]]:
        """Drop candidates orbit-equivalent (under generators fixing the
        prefix) to an earlier candidate with the same column value."""
        if not self.gens:
            return scored
        usable = [g for g, s in zip(self.gens, self.supports) if not (s & placed_mask)]
        if not usable:
            return scored
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in usable:
            for v in range(self.n):
                a, b = find(v), find(g[v])
                if a != b:
                    parent[a] = b
        out = []
        seen: set[tuple[int, int]] = set()
        for col, v in scored:
            key = (col, find(v))
            if key not in seen:
                seen.add(key)
                out.append((col, v))
        return out


def _min_placement(n: int, adj) -> list[int]:
    """Placement (position -> vertex) minimizing the colex adjacency string."""
    best_cols = [_BIG] * n
    best_perm: list[int] | None = None
    auts = _AutRecorder(n)
    placed: list[int] = []
    used = 0

    def rec(level: int) -> None:
        nonlocal best_perm, used
        if level == n:
            if best_perm is None:
                best_perm = placed.copy()
            elif placed != best_perm:
                g = [0] * n
                for pos in range(n):
                    g[best_perm[pos]] = placed[pos]
                auts.add(g)
            return
        scored = sorted(
            (_column(adj[v], placed), v) for v in range(n) if not (used >> v) & 1
        )
        if level < n - 1 and len(scored) > 1:
            scored = auts.filter_ties(scored, used)
        for col, v in scored:
            b = best_cols[level]
            if col > b:
                break
            if col < b:
                best_cols[level] = col
                for i in range(level + 1, n):
                    best_cols[i] = _BIG
                best_perm = None
            placed.append(v)
            used |= 1 << v
            rec(level + 1)
            placed.pop()
            used &= ~(1 << v)

    rec(0)
    assert best_perm is not None
    return best_perm


def _identity_columns(n: int, adj) -> list[int]:
    cols = [0] * n
    for j in range(n):
        col = 0
        aj = adj[j]
        for i in range(j):
            col = (col << 1) | ((aj >> i) & 1)
        cols[j] = col
    return cols


def _is_colex_max(n: int, adj) -> bool:
    """True iff the labeling as given yields the colex-greatest adjacency
    string over all relabelings (i.e. this labeled graph is the canonical
    representative used by the generator)."""
    target = _identity_columns(n, adj)
    auts = _AutRecorder(n)
    identity = list(range(n))
    placed: list[int] = []
    used = 0

    def rec(level: int) -> bool:
        nonlocal used
        if level == n:
            if placed != identity:
                auts.add(placed.copy())
            return False
        scored = sorted(
            ((_column(adj[v], placed), v) for v in range(n) if not (used >> v) & 1),
            reverse=True,
        )
        if level < n - 1 and len(scored) > 1:
            scored = auts.filter_ties(scored, used)
        t = target[level]
        for col, v in scored:
            if col < t:
                break
            if col > t:
                return True
            placed.append(v)
            used |= 1 << v
            beats = rec(level + 1)
            placed.pop()
            used &= ~(1 << v)
            if beats:
                return True
        return False

    return not rec(0)


def _colex_max_prefilter(n: int, adj) -> bool:
    """Cheap necessary conditions for _is_colex_max; rejects most non-maxima.

    In a colex-greatest labeling: isolated vertices come last, vertex 0 and
    1 are adjacent whenever any edge exists, and once some vertex has no
    neighbor below itself, no later vertex may have one either.
    """
    last_used = -1
    first_iso = -1
    for v in range(n):
        if adj[v]:
            last_used = v
        elif first_iso == -1:
            first_iso = v
    if last_used >= 0:
        if first_iso != -1 and first_iso < last_used:
            return False
        if not (adj[0] >> 1) & 1:
            return False
    suffix = [0] * (n + 1)  # suffix[j] = OR of adj[w] for w > j
    acc = 0
    for w in range(n - 1, -1, -1):
        suffix[w] = acc
        acc |= adj[w]
    for j in range(1, n):
        mask = (1 << j) - 1
        if adj[j] & mask == 0 and suffix[j] & mask:
            return False
    return True


def canonical_form(G: Graph) -> str:
    """Lexicographically least graph6 encoding over all vertex relabelings."""
    check_size(G.n, EXACT_MAX_N, "canonical_form")
    n = G.n
    perm = _min_placement(n, G.adj)
    newadj = [0] * n
    pos_of = [0] * n
    for pos, v in enumerate(perm):
        pos_of[v] = pos
    for pos, v in enumerate(perm):
        bits = 0
        av = G.adj[v]
        for w in _iter_bits(av):
            bits |= 1 << pos_of[w]
        newadj[pos] = bits
    return encode_graph6(Graph._from_adj(n, tuple(newadj)))


def are_isomorphic(G: Graph, H: Graph) -> bool:
    """True iff G and H have equal canonical forms."""
    check_size(G.n, EXACT_MAX_N, "are_isomorphic")
    check_size(H.n, EXACT_MAX_N, "are_isomorphic")
    if G.n != H.n:
        return False
    if sorted(m.bit_count() for m in G.adj) != sorted(m.bit_count() for m in H.adj):
        return False
    return canonical_form(G) == canonical_form(H)
