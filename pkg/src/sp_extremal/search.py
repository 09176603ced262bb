"""Exhaustive extremal search over K4-minor-free graphs with girth >= g.

Orderly generation: graphs on a fixed vertex set are grown one edge at a
time, edges always inserted in increasing colex position, and a partial
graph is kept only when its labeled adjacency string is the colex-greatest
over all relabelings.  Dropping the last (colex-greatest) edge of such a
representative yields the representative of the smaller graph, so the kept
graphs form a tree with exactly one node per isomorphism class -- no
duplicated work and no global seen-set.  Both girth >= g and having no K4
minor are closed under edge deletion, which makes rejecting a bad partial
graph sound: nothing feasible can be reachable through it.

Optional pruning (on by default) discards a branch when the edges not yet
insertable can no longer lift it to the best edge count seen so far, also
capping the potential with the applicable closed-form bound.  Disabling it
changes the node count, never the result.

By default the class under study is the 2-connected graphs: extremal
values are unchanged by that restriction (cutvertex elimination rewrites
any extremal graph into a 2-connected one with the same parameters, see
structure.make_two_connected), while the complete lists of extremal
graphs are only finite-and-classifiable in the 2-connected setting --
e.g. a 5-cycle with a pendant vertex ties the 6-cycle at n=6.  Setting
two_connected=False searches the unrestricted class, with no
connectivity assumption at all.  Since 2-connectivity is not closed
under edge deletion it never prunes the tree; it only gates which graphs
may be recorded as results.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .construct import GirthClassParams, bound_even_girth, bound_girth5
from .graphs import Graph, _colex_edges, _component_masks, _iter_bits
from .invariants import _colex_max_prefilter, _is_colex_max, _reduces_to_empty, canonical_form
from .limits import SEARCH_MAX_N, check_size

MODES = ("max", "enumerate", "count")


@dataclass(frozen=True)
class SearchConfig:
    """Search parameters; see extremal_search."""

    n: int
    g: int
    mode: str = "enumerate"
    target_edges: int | None = None  # only for mode="count"
    upper_bound_pruning: bool = True
    parallel_width: int = 1
    two_connected: bool = True

    def __post_init__(self):
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.mode == "count" and self.target_edges is None:
            raise ValueError("mode='count' requires target_edges")
        if self.g < 4:
            raise ValueError(f"girth constraint must be >= 4, got {self.g}")
        if self.n < 3:
            raise ValueError(f"need n >= 3, got {self.n}")
        check_size(self.n, SEARCH_MAX_N, "extremal_search")


@dataclass
class ExtremalResult:
    """Outcome of one search: the exact maximum and, when enumerating, the
    complete list of extremal graphs as sorted canonical graph6 strings."""

    params: GirthClassParams
    max_edges: int
    extremal: list[str]
    nodes_explored: int
    elapsed: float  # seconds

    def to_json_dict(self) -> dict:
        return {
            "n": self.params.n,
            "g": self.params.g,
            "max_edges": self.max_edges,
            "count": len(self.extremal),
            "graphs": list(self.extremal),
            "nodes": self.nodes_explored,
            "ms": int(round(self.elapsed * 1000)),
        }


def _applicable_bound(n: int, g: int) -> int | None:
    """Closed-form edge bound for the class, when one is known.

    The bounds presume a cycle can exist at all; below n = g the class is
    forests (plus nothing 2-connected), where e.g. a path on 3 vertices
    already beats the even-girth formula, so no bound applies there.
    """
    if n < g:
        return None
    if g % 2 == 0:
        return bound_even_girth(n, g // 2)
    if g == 5:
        return bound_girth5(n)
    return None


def _is_two_connected(adj, n: int) -> bool:
    """Connected, n >= 3, and no single vertex removal disconnects.

    Plain remove-and-recount; only called on candidate result graphs.
    """
    if n < 3:
        return False
    full = (1 << n) - 1
    if len(_component_masks(adj, full)) != 1:
        return False
    for v in range(n):
        if len(_component_masks(adj, full & ~(1 << v))) > 1:
            return False
    return True


def _within_distance(adj, u: int, v: int, k: int) -> bool:
    """True iff some u-v path has at most k edges (u != v, k >= 1)."""
    seen = 1 << u
    frontier = seen
    target = 1 << v
    for _ in range(k):
        nxt = 0
        for w in _iter_bits(frontier):
            nxt |= adj[w]
        if nxt & target:
            return True
        nxt &= ~seen
        if not nxt:
            return False
        seen |= nxt
        frontier = nxt
    return False


def _subtree(n, g, mode, target_edges, bound, use_bound, two_conn, root_adj, root_m, root_last):
    """Depth-first search of the canonical-representative tree below one node.

    Returns (best_m, snapshots, nodes) where snapshots are adjacency tuples
    of the collected graphs (at best_m for enumerate, at target for count,
    empty for max).  With two_conn, only 2-connected graphs count as
    results; the tree itself is unaffected.
    """
    edges = _colex_edges(n)
    total = len(edges)
    adj = list(root_adj)
    collect = mode != "max"
    counting = mode == "count"
    nodes = 0
    best = -1
    out: list[tuple[int, ...]] = []

    def visit(m: int, last: int) -> None:
        nonlocal nodes, best
        nodes += 1
        if counting:
            if m == target_edges:
                if not two_conn or _is_two_connected(adj, n):
                    out.append(tuple(adj))
                return  # extensions only add edges
        elif m >= best and (not two_conn or _is_two_connected(adj, n)):
            if m > best:
                best = m
                if collect:
                    out.clear()
                    out.append(tuple(adj))
            elif collect:
                out.append(tuple(adj))
        for idx in range(last + 1, total):
            potential = m + 1 + (total - 1 - idx)
            if counting:
                if potential < target_edges:
                    break
            elif use_bound:
                if bound is not None and potential > bound:
                    potential = bound
                if potential < best:
                    break
            u, v = edges[idx]
            if _within_distance(adj, u, v, g - 2):
                continue  # the new edge would close a cycle shorter than g
            bu, bv = 1 << u, 1 << v
            adj[u] |= bv
            adj[v] |= bu
            if (
                _colex_max_prefilter(n, adj)
                and _reduces_to_empty(adj.copy())
                and _is_colex_max(n, adj)
            ):
                visit(m + 1, idx)
            adj[u] &= ~bv
            adj[v] &= ~bu

    visit(root_m, root_last)
    return best, out, nodes


def _expand_frontier(n, g, mode, target_edges, depth, min_tasks):
    """Visit the canonical tree down to a small depth, returning the shallow
    nodes (handled serially) and the frontier nodes (handed to workers)."""
    edges = _colex_edges(n)
    total = len(edges)
    adj = [0] * n
    shallow: list[tuple[tuple[int, ...], int, int]] = []
    frontier: list[tuple[tuple[int, ...], int, int]] = []

    def visit(m: int, last: int) -> None:
        if m == depth:
            frontier.append((tuple(adj), m, last))
            return
        shallow.append((tuple(adj), m, last))
        for idx in range(last + 1, total):
            if mode == "count" and m + 1 + (total - 1 - idx) < target_edges:
                break
            u, v = edges[idx]
            if _within_distance(adj, u, v, g - 2):
                continue
            bu, bv = 1 << u, 1 << v
            adj[u] |= bv
            adj[v] |= bu
            if (
                _colex_max_prefilter(n, adj)
                and _reduces_to_empty(adj.copy())
                and _is_colex_max(n, adj)
            ):
                visit(m + 1, idx)
            adj[u] &= ~bv
            adj[v] &= ~bu

    visit(0, -1)
    if len(frontier) < min_tasks and depth < 4:
        return _expand_frontier(n, g, mode, target_edges, depth + 1, min_tasks)
    return shallow, frontier


def _worker(args):
    n, g, mode, target_edges, bound, use_bound, two_conn, root = args
    best, snaps, nodes = _subtree(n, g, mode, target_edges, bound, use_bound, two_conn, *root)
    forms = sorted(canonical_form(Graph._from_adj(n, a)) for a in snaps)
    return best, forms, nodes


def extremal_search(cfg: SearchConfig) -> ExtremalResult:
    """Exact maximum edge count over K4-minor-free graphs on cfg.n vertices
    with girth >= cfg.g and, in enumerate mode, all extremal graphs up to
    isomorphism.

    The searched space always includes disconnected graphs; with the
    default two_connected=True only 2-connected graphs are eligible as
    results (see the module docstring), and max_edges is -1 when no such
    graph exists (exactly when n < g).  mode="count" collects the classes
    with exactly cfg.target_edges edges instead (max_edges then reports
    that target).
    """
    n, g = cfg.n, cfg.g
    bound = _applicable_bound(n, g)
    start = time.perf_counter()

    if cfg.parallel_width <= 1:
        empty = (tuple([0] * n), 0, -1)
        best, snaps, nodes = _subtree(
            n, g, cfg.mode, cfg.target_edges, bound,
            cfg.upper_bound_pruning, cfg.two_connected, *empty,
        )
        forms = sorted({canonical_form(Graph._from_adj(n, a)) for a in snaps})
    else:
        best, forms, nodes = _parallel_search(cfg, bound)

    elapsed = time.perf_counter() - start
    if cfg.mode == "count":
        max_edges = cfg.target_edges
    else:
        max_edges = best
        if bound is not None and max_edges > bound:
            raise AssertionError(
                f"search found {max_edges} edges above the closed-form bound {bound}; "
                "rerun with upper_bound_pruning=False and report"
            )
    if cfg.mode == "max":
        forms = []
    return ExtremalResult(
        params=GirthClassParams(n=n, g=g),
        max_edges=max_edges,
        extremal=forms,
        nodes_explored=nodes,
        elapsed=elapsed,
    )


def _parallel_search(cfg: SearchConfig, bound):
    from multiprocessing import get_context

    n, g = cfg.n, cfg.g
    shallow, frontier = _expand_frontier(
        n, g, cfg.mode, cfg.target_edges, depth=2, min_tasks=4 * cfg.parallel_width
    )
    tasks = [
        (n, g, cfg.mode, cfg.target_edges, bound,
         cfg.upper_bound_pruning, cfg.two_connected, root)
        for root in frontier
    ]
    results = []
    if tasks:
        with get_context("fork").Pool(processes=cfg.parallel_width) as pool:
            results = pool.map(_worker, tasks)
    nodes = len(shallow) + sum(r[2] for r in results)

    def counts_as_result(adj, n_):
        return not cfg.two_connected or _is_two_connected(adj, n_)

    if cfg.mode == "count":
        forms = set()
        for _, fs, _ in results:
            forms.update(fs)
        for adj, m, _ in shallow:
            if m == cfg.target_edges and counts_as_result(adj, n):
                forms.add(canonical_form(Graph._from_adj(n, adj)))
        return cfg.target_edges, sorted(forms), nodes

    best = max((r[0] for r in results), default=-1)
    shallow_hits = [
        (adj, m) for adj, m, _ in shallow if counts_as_result(adj, n)
    ]
    best = max(best, max((m for _, m in shallow_hits), default=-1))
    forms = set()
    if cfg.mode == "enumerate":
        for b, fs, _ in results:
            if b == best:
                forms.update(fs)
        for adj, m in shallow_hits:
            if m == best:
                forms.add(canonical_form(Graph._from_adj(n, adj)))
    return best, sorted(forms), nodes


@dataclass
class BoundReport:
    """verify_bound outcome: search maximum versus the closed-form bound."""

    n: int
    g: int
    bound: int
    max_edges: int
    attained: bool
    ok: bool
    nodes_explored: int = 0
    elapsed: float = 0.0

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "g": self.g,
            "bound": self.bound,
            "max_edges": self.max_edges,
            "attained": self.attained,
            "ok": self.ok,
        }


def verify_bound(n: int, g: int, parallel_width: int = 1) -> BoundReport:
    """Run the search and check its maximum against the closed-form bound,
    flagging whether the bound is attained at this n."""
    bound = _applicable_bound(n, g)
    if bound is None:
        raise ValueError(f"no closed-form bound for girth {g} at n={n}")
    res = extremal_search(
        SearchConfig(n=n, g=g, mode="max", parallel_width=parallel_width)
    )
    return BoundReport(
        n=n,
        g=g,
        bound=bound,
        max_edges=res.max_edges,
        attained=res.max_edges == bound,
        ok=res.max_edges <= bound,
        nodes_explored=res.nodes_explored,
        elapsed=res.elapsed,
    )


def count_at_edges(n: int, g: int, m: int, parallel_width: int = 1) -> tuple[int, list[str]]:
    """Number of isomorphism classes of K4-minor-free graphs with girth >= g,
    n vertices and exactly m edges, plus their canonical forms."""
    res = extremal_search(
        SearchConfig(n=n, g=g, mode="count", target_edges=m, parallel_width=parallel_width)
    )
    return len(res.extremal), res.extremal
