"""Bridges of a cycle, crossing, and cutvertex elimination."""

import random

import pytest

from sp_extremal.graphs import (
    Graph,
    blocks,
    complete_graph,
    cutvertices,
    cycle_graph,
    edge_count,
    path_graph,
)
from sp_extremal.invariants import canonical_form, girth_at_least, is_k4_minor_free
from sp_extremal.structure import (
    bridges,
    check_bridges,
    chords,
    crossing,
    cut_reduction,
    make_two_connected,
)
from sp_extremal.construct import h_catalog, theta


def glue_cycles(*lengths):
    """Cycles of the given lengths, all sharing vertex 0 and nothing else."""
    edges = []
    nxt = 1
    for ln in lengths:
        ring = [0] + list(range(nxt, nxt + ln - 1))
        nxt += ln - 1
        edges += list(zip(ring, ring[1:] + ring[:1]))
    return Graph(nxt, edges)


# -- bridges ---------------------------------------------------------------------


def test_bridges_of_theta():
    G = theta(3, 3)  # hubs 0, 1; paths 0-2-3-1, 0-4-5-1, 0-6-7-1
    C = (0, 2, 3, 1, 5, 4)
    bs = bridges(G, C)
    assert len(bs) == 1
    (b,) = bs
    assert b.interior == frozenset({6, 7})
    assert b.legs == ((6, 0), (7, 1))
    assert b.attachments == (0, 1)


def test_bridges_empty_when_cycle_spans():
    C5 = cycle_graph(5)
    assert bridges(C5, (0, 1, 2, 3, 4)) == []


def test_bridges_rejects_non_cycles():
    G = theta(3, 3)
    with pytest.raises(ValueError):
        bridges(G, (0, 2, 3))  # 3-1 missing closes nothing
    with pytest.raises(ValueError):
        bridges(G, (0, 2))
    with pytest.raises(ValueError):
        bridges(G, (0, 2, 3, 1, 5, 5))


def test_bridges_ordered_by_least_interior():
    # C4 with two pendant paths hanging off opposite sides
    G = Graph(8, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (4, 5), (3, 6), (6, 7)])
    bs = bridges(G, (0, 1, 2, 3))
    assert [min(b.interior) for b in bs] == [4, 6]


def test_chords():
    G = cycle_graph(4).with_edge(0, 2)
    assert chords(G, (0, 1, 2, 3)) == [(0, 2)]
    assert chords(cycle_graph(5), (0, 1, 2, 3, 4)) == []


# -- crossing ----------------------------------------------------------------------


def cross_fixture():
    """C8 plus 2-paths attached at (0,4) and (2,6): the classic interleaving."""
    G = Graph(10, [(i, (i + 1) % 8) for i in range(8)] + [(0, 8), (8, 4), (2, 9), (9, 6)])
    C = tuple(range(8))
    return G, C


def test_crossing_interleaved():
    G, C = cross_fixture()
    b1, b2 = bridges(G, C)
    assert crossing(b1, b2, C)
    assert crossing(b2, b1, C)  # symmetric


def test_crossing_nested_is_false():
    # attach at (0,4) and (1,3): nested, not interleaved
    G = Graph(10, [(i, (i + 1) % 8) for i in range(8)] + [(0, 8), (8, 4), (1, 9), (9, 3)])
    C = tuple(range(8))
    b1, b2 = bridges(G, C)
    assert not crossing(b1, b2, C)


def test_crossing_self_and_shared_attachments():
    G = theta(3, 4)
    C = (0, 2, 3, 1, 5, 4)
    bs = bridges(G, C)
    assert len(bs) == 2  # the two remaining paths, both attached at the hubs
    assert not crossing(bs[0], bs[0], C)
    assert not crossing(bs[0], bs[1], C)  # identical attachment pairs never cross


def test_crossing_rejects_mismatched_cycles():
    G, C = cross_fixture()
    b1, b2 = bridges(G, C)
    other = bridges(G, (0, 1, 2, 9, 6, 7))
    with pytest.raises(ValueError):
        crossing(b1, other[0], C)


# -- whole-graph audit ---------------------------------------------------------------


def test_check_bridges_on_minor_free_corpus():
    for G in [theta(2, 4), theta(3, 3)] + h_catalog():
        rep = check_bridges(G)
        assert rep.ok, rep.violations


def test_check_bridges_legs_vs_attachments():
    # H1 contains a pentagon whose bridge has 3 legs on 2 attachments:
    # legal (no K4 minor), reported as a statistic, not a violation
    h1 = h_catalog()[0]
    rep = check_bridges(h1)
    assert rep.ok
    assert rep.max_leg_count == 3
    assert rep.over_two_legs > 0


def test_check_bridges_diagnostic_on_k4():
    with pytest.raises(ValueError):
        check_bridges(complete_graph(4))
    rep = check_bridges(complete_graph(4), diagnostic=True)
    assert not rep.ok
    # a triangle cycle leaves the fourth vertex as a 3-leg, 3-attachment bridge
    assert any(v.kind == "too-many-attachments" for v in rep.violations)


def test_check_bridges_require_two_legs():
    # on the even-girth extremal construction every bridge has exactly 2 legs
    rep = check_bridges(theta(3, 3), require_two_legs=True)
    assert rep.ok
    # a pendant path is a bridge with a single leg
    G = cycle_graph(5).with_edge(0, 4)  # no-op keeps C5
    G = Graph(6, G.edges() + [(0, 5)])
    rep = check_bridges(G, require_two_legs=True)
    assert any(v.kind == "missing-second-leg" for v in rep.violations)


# -- cut_reduction ---------------------------------------------------------------------


def test_cut_reduction_two_pentagons():
    G = glue_cycles(5, 5)  # 9 vertices, 10 edges, cutvertex 0
    H = cut_reduction(G, 0, 1, 5)
    assert H.n == 9 and edge_count(H) == 10
    assert girth_at_least(H, 5)
    assert is_k4_minor_free(H)
    # 0 no longer separates the two sides
    from sp_extremal.graphs import distance, UNREACHABLE

    assert distance(H.without_vertices([0]), 0, 4) is not UNREACHABLE


def test_cut_reduction_defaults_deterministic():
    G = glue_cycles(5, 6)
    H1 = cut_reduction(G, 0)
    H2 = cut_reduction(G, 0)
    assert H1 == H2
    assert H1.n == 10 and edge_count(H1) == 11
    assert girth_at_least(H1, 5) and is_k4_minor_free(H1)


def test_cut_reduction_errors():
    with pytest.raises(ValueError):
        cut_reduction(cycle_graph(5), 0)  # no cutvertex
    G = glue_cycles(5, 5)
    with pytest.raises(ValueError):
        cut_reduction(G, 0, 1, 4)  # same side
    with pytest.raises(ValueError):
        cut_reduction(glue_cycles(3, 3), 0)  # girth below 5
    with pytest.raises(ValueError):
        cut_reduction(G, 0, 1, None)


# -- make_two_connected -------------------------------------------------------------------


def test_make_two_connected_fixed_point():
    C9 = cycle_graph(9)
    assert make_two_connected(C9) == C9


def test_make_two_connected_two_pentagons():
    H = make_two_connected(glue_cycles(5, 5))
    assert H.n == 9 and edge_count(H) == 10
    assert cutvertices(H) == []
    assert girth_at_least(H, 5) and is_k4_minor_free(H)


def test_make_two_connected_three_pentagon_chain():
    chain = Graph(13, [])
    edges = []
    # pentagons 0-4, 4-8, 8-12 glued in a path of cutvertices
    for base in (0, 4, 8):
        ring = list(range(base, base + 5))
        edges += list(zip(ring, ring[1:] + ring[:1]))
    chain = Graph(13, edges)
    H = make_two_connected(chain)
    assert H.n == 13 and edge_count(H) == 15
    assert cutvertices(H) == []
    assert girth_at_least(H, 5) and is_k4_minor_free(H)


def test_make_two_connected_pendant_vertex():
    # the spec-order least-index choice loops forever here; the block-merging
    # choice must converge (to the 6-cycle, the only 2-connected option)
    G = Graph(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 5)])
    H = make_two_connected(G)
    assert cutvertices(H) == []
    assert canonical_form(H) == canonical_form(cycle_graph(6))


def test_make_two_connected_block_count_decreases():
    rng = random.Random(31)
    from sp_extremal.verify import random_cut_reduction_input

    for _ in range(20):
        G = random_cut_reduction_input(rng)
        before = len(blocks(G))
        H = make_two_connected(G)
        assert len(blocks(H)) == 1
        assert len(blocks(H)) <= before


def test_make_two_connected_rejects_bad_inputs():
    with pytest.raises(ValueError):
        make_two_connected(path_graph(5))  # acyclic
    with pytest.raises(ValueError):
        make_two_connected(glue_cycles(4, 5))  # girth 4
    with pytest.raises(ValueError):
        make_two_connected(Graph(6, [(0, 1)]))  # disconnected
