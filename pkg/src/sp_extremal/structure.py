"""Bridge decomposition of a cycle and cutvertex elimination.

A bridge of a cycle C is one connected component of G - C together with
its legs (the edges from that component to C); the cycle vertices met by
legs are its attachments.  Chords of C have no interior and are listed
separately.  Attachment order is taken along a fixed traversal of C
starting at its least vertex, toward that vertex's smaller neighbor, so
the crossing test is a pure list computation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graphs import (
    Graph,
    _component_masks,
    _iter_bits,
    all_cycles,
    blocks,
    cutvertices,
    edge_count,
    encode_graph6,
    is_connected,
)
from .invariants import girth_at_least, is_k4_minor_free


def _canonical_cycle(G: Graph, C) -> tuple[int, ...]:
    """Validate that C is a cycle of G and normalize rotation/direction."""
    cyc = tuple(C)
    if len(cyc) < 3 or len(set(cyc)) != len(cyc):
        raise ValueError(f"{cyc} is not a cycle (needs >= 3 distinct vertices)")
    for v in cyc:
        G._check_vertex(v)
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        if not (G.adj[a] >> b) & 1:
            raise ValueError(f"{cyc} is not a cycle of the graph: missing edge ({a},{b})")
    start = cyc.index(min(cyc))
    rot = cyc[start:] + cyc[:start]
    if rot[1] > rot[-1]:
        rot = (rot[0],) + tuple(reversed(rot[1:]))
    return rot


@dataclass(frozen=True)
class Bridge:
    """One bridge of a cycle: interior component, legs, attachments."""

    cycle: tuple[int, ...]
    interior: frozenset[int]
    legs: tuple[tuple[int, int], ...]   # (interior vertex, cycle vertex)
    attachments: tuple[int, ...]        # cycle vertices in traversal order

    @property
    def leg_count(self) -> int:
        return len(self.legs)


def bridges(G: Graph, C) -> list[Bridge]:
    """Bridges of the cycle C in G, ordered by least interior vertex.

    Chords (edges between cycle vertices that are not cycle edges) have an
    empty interior and are not bridges; see chords().
    """
    cyc = _canonical_cycle(G, C)
    cyc_mask = 0
    for v in cyc:
        cyc_mask |= 1 << v
    rest = ((1 << G.n) - 1) & ~cyc_mask
    pos = {v: i for i, v in enumerate(cyc)}
    out = []
    for comp in _component_masks(G.adj, rest):
        legs = []
        att = set()
        for v in _iter_bits(comp):
            for w in _iter_bits(G.adj[v] & cyc_mask):
                legs.append((v, w))
                att.add(w)
        out.append(
            Bridge(
                cycle=cyc,
                interior=frozenset(_iter_bits(comp)),
                legs=tuple(sorted(legs)),
                attachments=tuple(sorted(att, key=pos.__getitem__)),
            )
        )
    return out


def chords(G: Graph, C) -> list[tuple[int, int]]:
    """Edges of G joining two non-consecutive vertices of the cycle C."""
    cyc = _canonical_cycle(G, C)
    k = len(cyc)
    cyc_edges = {frozenset((cyc[i], cyc[(i + 1) % k])) for i in range(k)}
    out = []
    for i, u in enumerate(cyc):
        for v in cyc[i + 1:]:
            if (G.adj[u] >> v) & 1 and frozenset((u, v)) not in cyc_edges:
                out.append((min(u, v), max(u, v)))
    return sorted(out)


def crossing(b1: Bridge, b2: Bridge, C) -> bool:
    """True iff some attachments a1, b1, a2, b2 interleave around the cycle.

    The two bridges must have been computed against the same cycle.
    """
    cyc = tuple(C)
    ref = b1.cycle
    if b2.cycle != ref:
        raise ValueError("bridges were computed against different cycles")
    if set(cyc) != set(ref):
        raise ValueError("cycle argument does not match the bridges' cycle")
    if b1 == b2:
        return False
    pos = {v: i for i, v in enumerate(ref)}
    k = len(ref)
    a_pos = [pos[v] for v in b1.attachments]
    b_pos = [pos[v] for v in b2.attachments]
    for a1, a2 in combinations(a_pos, 2):
        arc1 = set()
        i = (a1 + 1) % k
        while i != a2:
            arc1.add(i)
            i = (i + 1) % k
        arc2 = set(range(k)) - arc1 - {a1, a2}
        hits1 = any(p in arc1 for p in b_pos)
        hits2 = any(p in arc2 for p in b_pos)
        if hits1 and hits2:
            return True
    return False


@dataclass
class BridgeViolation:
    cycle: tuple[int, ...]
    kind: str  # "too-many-attachments" | "crossing" | "missing-second-leg"
    detail: str

    def to_json_dict(self) -> dict:
        return {"cycle": list(self.cycle), "kind": self.kind, "detail": self.detail}


@dataclass
class BridgeCheckReport:
    """Outcome of auditing every cycle of a graph: bridge attachment counts,
    pairwise crossings, and leg statistics."""

    graph6: str
    cycles_checked: int = 0
    bridges_checked: int = 0
    chords_seen: int = 0
    max_leg_count: int = 0
    over_two_legs: int = 0  # bridges with >2 legs (legal; see check_bridges)
    violations: list[BridgeViolation] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_json_dict(self) -> dict:
        return {
            "graph": self.graph6,
            "cycles_checked": self.cycles_checked,
            "bridges_checked": self.bridges_checked,
            "chords_seen": self.chords_seen,
            "max_leg_count": self.max_leg_count,
            "over_two_legs": self.over_two_legs,
            "ok": self.ok,
            "violations": [v.to_json_dict() for v in self.violations],
        }


def check_bridges(
    G: Graph,
    *,
    diagnostic: bool = False,
    require_two_legs: bool = False,
) -> BridgeCheckReport:
    """Audit every cycle of G: each bridge must have at most 2 distinct
    attachment vertices, and bridges must be pairwise non-crossing.  Both
    hold in every K4-minor-free graph (a bridge with 3 attachments or a
    crossing pair contracts to a K4); that precondition is enforced unless
    ``diagnostic`` is set, which turns the audit into a structure probe for
    arbitrary graphs.

    Leg counts are reported but larger counts are not violations: a bridge
    may carry several legs into only two attachment vertices without
    creating a K4 minor (a 9-cycle with a chord and a 2-path already shows
    3 legs), so only the attachment bound is a sound invariant.

    ``require_two_legs`` additionally flags bridges with fewer than 2 legs;
    that stronger condition only holds in special extremal situations and
    is off by default.
    """
    if G.n > 14:
        raise ValueError(f"check_bridges is limited to n <= 14, got n={G.n}")
    if not diagnostic and not is_k4_minor_free(G):
        raise ValueError("graph has a K4 minor; pass diagnostic=True to audit anyway")
    report = BridgeCheckReport(graph6=encode_graph6(G))
    for cyc in all_cycles(G, G.n):
        report.cycles_checked += 1
        bs = bridges(G, cyc)
        report.bridges_checked += len(bs)
        report.chords_seen += len(chords(G, cyc))
        for b in bs:
            if b.leg_count > report.max_leg_count:
                report.max_leg_count = b.leg_count
            if b.leg_count > 2:
                report.over_two_legs += 1
            if len(b.attachments) > 2:
                report.violations.append(
                    BridgeViolation(cyc, "too-many-attachments",
                                    f"bridge {sorted(b.interior)} attaches at {list(b.attachments)}")
                )
            elif require_two_legs and b.leg_count < 2:
                report.violations.append(
                    BridgeViolation(cyc, "missing-second-leg",
                                    f"bridge {sorted(b.interior)} has {b.leg_count} leg(s)")
                )
        for b1, b2 in combinations(bs, 2):
            if crossing(b1, b2, cyc):
                report.violations.append(
                    BridgeViolation(cyc, "crossing",
                                    f"bridges {sorted(b1.interior)} and {sorted(b2.interior)} cross")
                )
    return report


# -- cutvertex elimination ----------------------------------------------------


def cut_reduction(G: Graph, x: int, v1: int | None = None, v2: int | None = None) -> Graph:
    """Rewrite at a cutvertex: delete the edge (v2, x), add the edge (v1, v2),
    where v1 and v2 are neighbors of x in different components of G - x.

    Preserves vertex and edge counts, girth >= 5 and K4-minor-freeness
    (requires girth >= 5 and no K4 minor on input).  When v1/v2 are omitted
    they default to the least-index neighbor of x in each of the two
    least-index components of G - x.
    """
    cuts = cutvertices(G)
    if x not in cuts:
        raise ValueError(f"vertex {x} is not a cutvertex")
    if not girth_at_least(G, 5):
        raise ValueError("cut_reduction requires girth >= 5")
    if not is_k4_minor_free(G):
        raise ValueError("cut_reduction requires a K4-minor-free graph")
    comps = _component_masks(G.adj, ((1 << G.n) - 1) & ~(1 << x))
    nbr_comps = [c for c in comps if G.adj[x] & c]
    if v1 is None or v2 is None:
        if v1 is not None or v2 is not None:
            raise ValueError("give both v1 and v2 or neither")
        c1, c2 = nbr_comps[0], nbr_comps[1]
        v1 = (G.adj[x] & c1 & -(G.adj[x] & c1)).bit_length() - 1
        v2 = (G.adj[x] & c2 & -(G.adj[x] & c2)).bit_length() - 1
    comp_of_v1 = next((c for c in comps if (c >> v1) & 1), None)
    comp_of_v2 = next((c for c in comps if (c >> v2) & 1), None)
    if not G.has_edge(x, v1) or not G.has_edge(x, v2):
        raise ValueError(f"v1={v1} and v2={v2} must be neighbors of {x}")
    if comp_of_v1 is None or comp_of_v1 == comp_of_v2:
        raise ValueError(f"v1={v1} and v2={v2} must lie in different components of G - {x}")
    return G.without_edge(x, v2).with_edge(v1, v2)


def _pick_merging_reduction(G: Graph) -> tuple[int, int, int]:
    """Choose (x, v1, v2) so that the rewrite merges blocks.

    Taking v2 in a component that receives at least two legs from x
    guarantees the new edge closes a cycle through x, so the rewrite
    strictly decreases the number of blocks.  Such a cutvertex exists in
    every connected graph that has a cycle and a cutvertex: a 2-connected
    block exists and, the block-cut tree having >= 2 blocks, some
    cutvertex lies inside one.
    """
    adj = G.adj
    full = (1 << G.n) - 1
    for x in cutvertices(G):
        comps = _component_masks(adj, full & ~(1 << x))
        multi = None
        for c in comps:
            if (adj[x] & c).bit_count() >= 2:
                multi = c
                break
        if multi is None:
            continue
        other = next(c for c in comps if c != multi)
        v2 = (adj[x] & multi & -(adj[x] & multi)).bit_length() - 1
        v1 = (adj[x] & other & -(adj[x] & other)).bit_length() - 1
        return x, v1, v2
    raise ValueError("no cutvertex has a multi-leg component; input must contain a cycle")


def make_two_connected(G: Graph) -> Graph:
    """Repeated cut_reduction until no cutvertex remains.

    Vertex and edge counts are unchanged; girth >= 5 and K4-minor-freeness
    are preserved.  Requires a connected input with at least one cycle
    (an acyclic graph has too few edges to ever become 2-connected).
    Terminates because each rewrite strictly decreases the block count,
    which is asserted as the loop variant.
    """
    if G.n < 3:
        raise ValueError(f"need n >= 3, got {G.n}")
    if not is_connected(G):
        raise ValueError("make_two_connected requires a connected graph")
    if not girth_at_least(G, 5):
        raise ValueError("make_two_connected requires girth >= 5")
    if not is_k4_minor_free(G):
        raise ValueError("make_two_connected requires a K4-minor-free graph")
    if edge_count(G) < G.n:
        if cutvertices(G):
            raise ValueError("acyclic (or too sparse) input cannot be made 2-connected")
        return G
    while cutvertices(G):
        n_blocks = len(blocks(G))
        x, v1, v2 = _pick_merging_reduction(G)
        G = cut_reduction(G, x, v1, v2)
        if len(blocks(G)) >= n_blocks:
            raise AssertionError("block count failed to decrease; loop variant violated")
    return G
