"""Compact immutable graphs on at most 62 vertices.

Vertices are the integers 0..n-1 and adjacency is stored as one bitmask
per vertex, so the neighborhood operations that dominate the search code
are single machine-word operations at these sizes.  Graphs are value
objects: every editing helper returns a new Graph, and all functions in
this package are safe to call concurrently.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

MAX_VERTICES = 62  # largest n expressible with a single graph6 size byte


class Infinite:
    """Sentinel that compares strictly greater than every int and float."""

    __slots__ = ("_name",)

    def __init__(self, name: str):
        self._name = name

    def __repr__(self) -> str:
        return self._name

    def __gt__(self, other):
        if isinstance(other, (int, float)):
            return True
        if other is self:
            return False
        return NotImplemented

    def __ge__(self, other):
        if isinstance(other, (int, float)) or other is self:
            return True
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, (int, float)) or other is self:
            return False
        return NotImplemented

    def __le__(self, other):
        if isinstance(other, (int, float)):
            return False
        if other is self:
            return True
        return NotImplemented


#: Returned by distance() when no path exists.  Greater than any integer.
UNREACHABLE = Infinite("UNREACHABLE")


def _iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of mask in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Simple undirected graph: no loops, no parallel edges, n <= 62."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count must be in 0..{MAX_VERTICES}, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)

    @classmethod
    def _from_adj(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        # Trusted fast path: caller guarantees a symmetric, irreflexive mask table.
        g = object.__new__(cls)
        g.n = n
        g.adj = adj
        return g

    # -- basic queries ------------------------------------------------------

    def has_edge(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return bool((self.adj[u] >> v) & 1)

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> Iterator[int]:
        self._check_vertex(v)
        return _iter_bits(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in ascending order."""
        return [(u, v) for u in range(self.n) for v in _iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def vertices(self) -> range:
        return range(self.n)

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise ValueError(f"vertex {v} out of range for n={self.n}")

    # -- derived graphs -----------------------------------------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise ValueError(f"loop at vertex {u} not allowed")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._from_adj(self.n, tuple(adj))

    def without_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise ValueError(f"edge ({u},{v}) not present")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph._from_adj(self.n, tuple(adj))

    def without_vertices(self, drop: Iterable[int]) -> "Graph":
        """Induced subgraph on the complement of ``drop``, relabeled compactly."""
        dropped = set(drop)
        keep = [v for v in range(self.n) if v not in dropped]
        index = {v: i for i, v in enumerate(keep)}
        edges = [(index[u], index[v]) for u, v in self.edges() if u in index and v in index]
        return Graph(len(keep), edges)

    def relabel(self, perm: list[int]) -> "Graph":
        """Image of the graph under the vertex map v -> perm[v]."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("perm must be a permutation of 0..n-1")
        return Graph(self.n, [(perm[u], perm[v]) for u, v in self.edges()])

    # -- value semantics ----------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph({self.n}, {self.edges()})"


# -- small factories used all over the tests and demos ----------------------


def empty_graph(n: int) -> Graph:
    return Graph(n)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + w) for u in range(a) for w in range(b)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    edges = g.edges() + [(u + g.n, v + g.n) for u, v in h.edges()]
    return Graph(g.n + h.n, edges)


# -- counting, distance, connectivity ----------------------------------------


def edge_count(G: Graph) -> int:
    """Number of unordered adjacent pairs."""
    return sum(m.bit_count() for m in G.adj) // 2


def distance(G: Graph, u: int, v: int):
    """Length of a shortest u-v path, 0 for u == v, UNREACHABLE if none."""
    G._check_vertex(u)
    G._check_vertex(v)
    if u == v:
        return 0
    adj = G.adj
    seen = 1 << u
    frontier = seen
    target = 1 << v
    d = 0
    while frontier:
        d += 1
        nxt = 0
        for w in _iter_bits(frontier):
            nxt |= adj[w]
        nxt &= ~seen
        if nxt & target:
            return d
        seen |= nxt
        frontier = nxt
    return UNREACHABLE


def _component_masks(adj: tuple[int, ...] | list[int], universe: int) -> list[int]:
    """Connected components of the graph induced on ``universe``, as masks,
    ordered by least member."""
    comps = []
    rem = universe
    while rem:
        comp = rem & -rem
        frontier = comp
        while frontier:
            nxt = 0
            for v in _iter_bits(frontier):
                nxt |= adj[v]
            nxt &= universe & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        rem &= ~comp
    return comps


def connected_components(G: Graph) -> list[frozenset[int]]:
    """Partition of the vertices into maximal connected sets, by least vertex."""
    full = (1 << G.n) - 1
    return [frozenset(_iter_bits(m)) for m in _component_masks(G.adj, full)]


def is_connected(G: Graph) -> bool:
    if G.n <= 1:
        return True
    return len(_component_masks(G.adj, (1 << G.n) - 1)) == 1


def cutvertices(G: Graph) -> list[int]:
    """All vertices whose removal increases the component count, ascending.

    Lowpoint depth-first search, one pass per component.
    """
    n = G.n
    adj = G.adj
    disc = [-1] * n
    low = [0] * n
    result = set()
    timer = 0

    def dfs(root: int) -> None:
        nonlocal timer
        stack = [(root, -1, _iter_bits(adj[root]))]
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    if v == root:
                        root_children += 1
                    stack.append((w, v, _iter_bits(adj[w])))
                    advanced = True
                    break
                elif w != parent:
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    if low[v] < low[pv]:
                        low[pv] = low[v]
                    if pv != root and low[v] >= disc[pv]:
                        result.add(pv)
        if root_children > 1:
            result.add(root)

    for v in range(n):
        if disc[v] == -1:
            dfs(v)
    return sorted(result)


def blocks(G: Graph) -> list[frozenset[int]]:
    """Biconnected components as vertex sets (a bridge edge is a block of
    size 2; isolated vertices belong to no block).  Sorted by least vertex."""
    n = G.n
    adj = G.adj
    disc = [-1] * n
    low = [0] * n
    out: list[frozenset[int]] = []
    timer = 0
    edge_stack: list[tuple[int, int]] = []

    def dfs(root: int) -> None:
        nonlocal timer
        stack = [(root, -1, _iter_bits(adj[root]))]
        disc[root] = low[root] = timer
        timer += 1
        while stack:
            v, parent, it = stack[-1]
            advanced = False
            for w in it:
                if disc[w] == -1:
                    edge_stack.append((v, w))
                    disc[w] = low[w] = timer
                    timer += 1
                    stack.append((w, v, _iter_bits(adj[w])))
                    advanced = True
                    break
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    if disc[w] < low[v]:
                        low[v] = disc[w]
            if not advanced:
                stack.pop()
                if stack:
                    pv = stack[-1][0]
                    if low[v] < low[pv]:
                        low[pv] = low[v]
                    if low[v] >= disc[pv]:
                        # every edge down to (pv, v) forms one block
                        verts = set()
                        while edge_stack:
                            a, b = edge_stack.pop()
                            verts.add(a)
                            verts.add(b)
                            if (a, b) == (pv, v):
                                break
                        if verts:
                            out.append(frozenset(verts))

    for v in range(n):
        if disc[v] == -1:
            dfs(v)
    return sorted(out, key=lambda s: (min(s), sorted(s)))


def two_cuts(G: Graph) -> list[tuple[int, int]]:
    """All pairs {u, v} whose removal disconnects G, lexicographic.

    Requires a connected graph with no cutvertex.
    """
    if not is_connected(G):
        raise ValueError("two_cuts requires a connected graph")
    if cutvertices(G):
        raise ValueError("two_cuts requires a graph with no cutvertex")
    n = G.n
    adj = G.adj
    full = (1 << n) - 1
    out = []
    for u in range(n):
        for v in range(u + 1, n):
            rest = full & ~(1 << u) & ~(1 << v)
            if rest and len(_component_masks(adj, rest)) >= 2:
                out.append((u, v))
    return out


def all_cycles(G: Graph, max_len: int) -> list[tuple[int, ...]]:
    """Every simple cycle of length <= max_len, once each.

    A cycle is reported in canonical rotation: least vertex first, then its
    smaller cycle-neighbor.  The listing enumerates paths from the least
    vertex of each cycle using larger vertices only, so no cycle is seen
    twice.  Exponential in the worst case, hence the size guard.
    """
    if G.n > 14:
        raise ValueError(f"all_cycles is limited to n <= 14, got n={G.n}")
    adj = G.adj
    res: list[tuple[int, ...]] = []
    path: list[int] = []

    def extend(s: int, v: int, used: int) -> None:
        for w in _iter_bits(adj[v]):
            if w == s:
                if len(path) >= 3 and path[1] < path[-1]:
                    res.append(tuple(path))
            elif w > s and not (used >> w) & 1 and len(path) < max_len:
                path.append(w)
                extend(s, w, used | (1 << w))
                path.pop()

    for s in range(G.n):
        path = [s]
        extend(s, s, 1 << s)
    res.sort(key=lambda c: (len(c), c))
    return res


# -- graph6 and DOT ----------------------------------------------------------
#
# graph6 layout (n <= 62): one size byte with value n+63, then the upper
# triangle of the adjacency matrix read column by column
# (x01, x02, x12, x03, x13, x23, ...) as a bit vector, zero-padded to a
# multiple of 6, each 6-bit group emitted as one byte with value group+63.


def encode_graph6(G: Graph) -> str:
    if G.n > MAX_VERTICES:
        raise ValueError(f"graph6 single-byte header requires n <= {MAX_VERTICES}")
    out = [chr(G.n + 63)]
    buf = 0
    nbits = 0
    adj = G.adj
    for j in range(1, G.n):
        col = adj[j]
        for i in range(j):
            buf = (buf << 1) | ((col >> i) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(buf + 63))
                buf = 0
                nbits = 0
    if nbits:
        out.append(chr((buf << (6 - nbits)) + 63))
    return "".join(out)


def decode_graph6(s: str) -> Graph:
    if isinstance(s, bytes):
        s = s.decode("ascii")
    s = s.strip()
    if not s:
        raise ValueError("empty graph6 string")
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    first = ord(s[0])
    if first == 126:
        raise ValueError("multi-byte graph6 size header (n > 62) not supported")
    if not 63 <= first <= 125:
        raise ValueError(f"invalid graph6 size byte {s[0]!r}")
    n = first - 63
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) != 1 + nbytes:
        raise ValueError(f"graph6 string has {len(s)} bytes, expected {1 + nbytes} for n={n}")
    adj = [0] * n
    bit = 0
    for ch in s[1:]:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise ValueError(f"invalid graph6 data byte {ch!r}")
        for k in range(5, -1, -1):
            if bit >= nbits:
                if (val >> k) & 1:
                    raise ValueError("nonzero padding bits in graph6 string")
                continue
            if (val >> k) & 1:
                i, j = _EDGE_BY_BIT_CACHE.setdefault(n, _colex_edges(n))[bit]
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
    return Graph._from_adj(n, tuple(adj))


def _colex_edges(n: int) -> list[tuple[int, int]]:
    """All vertex pairs (i, j), i < j, in column order: sorted by (j, i)."""
    return [(i, j) for j in range(1, n) for i in range(j)]


_EDGE_BY_BIT_CACHE: dict[int, list[tuple[int, int]]] = {}


def to_dot(G: Graph, name: str = "G") -> str:
    """DOT text: every vertex as an integer node, edges with u < v, ascending."""
    lines = [f"graph {name} {{"]
    lines += [f"  {v};" for v in range(G.n)]
    lines += [f"  {u} -- {v};" for u, v in G.edges()]
    lines.append("}")
    return "\n".join(lines) + "\n"
