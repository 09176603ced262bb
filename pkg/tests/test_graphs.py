"""Graph representation, basic algorithms, and serialization."""

import random

import pytest

from sp_extremal.graphs import (
    Graph,
    MAX_VERTICES,
    UNREACHABLE,
    all_cycles,
    blocks,
    complete_graph,
    connected_components,
    cutvertices,
    cycle_graph,
    decode_graph6,
    disjoint_union,
    distance,
    edge_count,
    empty_graph,
    encode_graph6,
    is_connected,
    path_graph,
    to_dot,
    two_cuts,
)
from sp_extremal.construct import theta


def bowtie():
    return Graph(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])


# -- construction and value semantics -----------------------------------------


def test_graph_validation():
    with pytest.raises(ValueError):
        Graph(-1)
    with pytest.raises(ValueError):
        Graph(MAX_VERTICES + 1)
    with pytest.raises(ValueError):
        Graph(3, [(0, 0)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])


def test_graph_equality_and_hash():
    a = Graph(4, [(0, 1), (2, 3)])
    b = Graph(4, [(2, 3), (0, 1), (0, 1)])  # duplicates collapse
    assert a == b and hash(a) == hash(b)
    assert a != Graph(5, [(0, 1), (2, 3)])


def test_edit_helpers():
    G = path_graph(4)
    assert G.with_edge(0, 3) == cycle_graph(4)
    assert cycle_graph(4).without_edge(0, 3) == G
    with pytest.raises(ValueError):
        G.without_edge(0, 3)
    assert G.without_vertices([0]) == path_graph(3)


def test_relabel_is_an_isomorphism():
    G = bowtie()
    H = G.relabel([4, 3, 2, 1, 0])
    assert edge_count(H) == edge_count(G)
    assert cutvertices(H) == [2]  # center 2 maps to 2 under this reversal
    with pytest.raises(ValueError):
        G.relabel([0, 0, 1, 2, 3])


# -- edge_count ----------------------------------------------------------------


def test_edge_count():
    assert edge_count(empty_graph(5)) == 0
    assert edge_count(cycle_graph(5)) == 5
    assert edge_count(theta(3, 3)) == 9  # two hubs, three 3-edge paths


# -- distance ------------------------------------------------------------------


def test_distance_basics():
    C6 = cycle_graph(6)
    assert distance(C6, 0, 3) == 3
    assert distance(C6, 2, 2) == 0
    two = disjoint_union(cycle_graph(3), cycle_graph(4))
    assert distance(two, 0, 5) is UNREACHABLE
    with pytest.raises(ValueError):
        distance(C6, 0, 6)


def test_unreachable_orders_above_integers():
    assert UNREACHABLE > 10**9
    assert not (UNREACHABLE <= 5)
    assert UNREACHABLE >= UNREACHABLE
    assert UNREACHABLE != 7


def test_distance_invariant_under_relabeling():
    rng = random.Random(5)
    for _ in range(50):
        n = rng.randint(2, 9)
        G = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3])
        perm = list(range(n))
        rng.shuffle(perm)
        H = G.relabel(perm)
        u, v = rng.randrange(n), rng.randrange(n)
        assert distance(G, u, v) == distance(H, perm[u], perm[v])


# -- components, cutvertices, blocks, 2-cuts -----------------------------------


def test_connected_components():
    assert connected_components(cycle_graph(5)) == [frozenset(range(5))]
    assert connected_components(empty_graph(3)) == [frozenset({0}), frozenset({1}), frozenset({2})]
    two = disjoint_union(cycle_graph(3), cycle_graph(4))
    assert [len(c) for c in connected_components(two)] == [3, 4]


def test_components_partition_property():
    rng = random.Random(6)
    for _ in range(50):
        n = rng.randint(1, 12)
        G = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.2])
        comps = connected_components(G)
        seen = set()
        for c in comps:
            assert not (c & seen)
            seen |= c
        assert seen == set(range(n))


def test_cutvertices_examples():
    assert cutvertices(bowtie()) == [2]
    assert cutvertices(cycle_graph(5)) == []
    assert cutvertices(path_graph(4)) == [1, 2]


def naive_cutvertices(G):
    """Remove-and-recount: v is a cutvertex iff deleting it raises the
    component count (an isolated v lowers it by one, never raises it)."""
    base = len(connected_components(G))
    out = []
    for v in range(G.n):
        left = len(connected_components(G.without_vertices([v])))
        before = base - (0 if G.adj[v] else 1)
        if left > before:
            out.append(v)
    return out


def test_cutvertices_against_remove_and_recount():
    rng = random.Random(7)
    for _ in range(80):
        n = rng.randint(1, 10)
        G = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.3])
        assert cutvertices(G) == naive_cutvertices(G)


def test_blocks():
    assert blocks(cycle_graph(5)) == [frozenset(range(5))]
    assert blocks(path_graph(4)) == [frozenset({0, 1}), frozenset({1, 2}), frozenset({2, 3})]
    assert sorted(len(b) for b in blocks(bowtie())) == [3, 3]
    assert blocks(empty_graph(3)) == []


def test_two_cuts():
    # brute-forced: removing any two non-adjacent vertices of C5 leaves 2 paths
    assert two_cuts(cycle_graph(5)) == [(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)]
    assert two_cuts(complete_graph(4)) == []
    assert (0, 1) in two_cuts(theta(3, 3))  # removing both hubs leaves 3 paths
    with pytest.raises(ValueError):
        two_cuts(disjoint_union(cycle_graph(3), cycle_graph(3)))
    with pytest.raises(ValueError):
        two_cuts(bowtie())


# -- cycle listing ---------------------------------------------------------------


def naive_cycles(G, max_len):
    """Independent listing: try every vertex subset, every rotation."""
    from itertools import combinations, permutations

    found = set()
    for k in range(3, min(G.n, max_len) + 1):
        for subset in combinations(range(G.n), k):
            for perm in permutations(subset[1:]):
                cyc = (subset[0],) + perm
                if all(G.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k)):
                    if cyc[1] < cyc[-1]:
                        found.add(cyc)
    return sorted(found, key=lambda c: (len(c), c))


def test_all_cycles_examples():
    assert len(all_cycles(cycle_graph(5), 10)) == 1
    assert len(all_cycles(complete_graph(4), 4)) == 7  # 4 triangles + 3 squares
    assert all_cycles(path_graph(6), 6) == []


def test_all_cycles_against_subset_oracle():
    rng = random.Random(8)
    for _ in range(40):
        n = rng.randint(3, 7)
        G = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5])
        max_len = rng.randint(3, n)
        assert all_cycles(G, max_len) == naive_cycles(G, max_len)


def test_all_cycles_canonical_rotation():
    for cyc in all_cycles(complete_graph(5), 5):
        assert cyc[0] == min(cyc)
        assert cyc[1] < cyc[-1]


def test_all_cycles_size_guard():
    with pytest.raises(ValueError):
        all_cycles(empty_graph(15), 3)


# -- graph6 ----------------------------------------------------------------------


def reference_encode(G):
    """Second, independent encoder: build the whole bit string, then pack."""
    bits = []
    for j in range(1, G.n):
        for i in range(j):
            bits.append("1" if G.has_edge(i, j) else "0")
    s = "".join(bits)
    s += "0" * (-len(s) % 6)
    return chr(G.n + 63) + "".join(
        chr(int(s[i : i + 6], 2) + 63) for i in range(0, len(s), 6)
    )


def test_graph6_known_values():
    assert encode_graph6(Graph(0)) == "?"
    assert encode_graph6(path_graph(3)) == "Bg"  # bits 101 -> 'g'
    assert decode_graph6("Bg") == path_graph(3)


def test_graph6_matches_reference_encoder():
    rng = random.Random(9)
    for _ in range(120):
        n = rng.randint(0, 13)
        G = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        assert encode_graph6(G) == reference_encode(G)


def test_graph6_roundtrip():
    rng = random.Random(10)
    for _ in range(120):
        n = rng.randint(0, 12)
        G = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.4])
        assert decode_graph6(encode_graph6(G)) == G
    big = cycle_graph(MAX_VERTICES)
    assert decode_graph6(encode_graph6(big)) == big


def test_graph6_malformed_inputs():
    with pytest.raises(ValueError):
        decode_graph6("")
    with pytest.raises(ValueError):
        decode_graph6("~??")  # multi-byte size header
    with pytest.raises(ValueError):
        decode_graph6("Bgg")  # trailing junk
    with pytest.raises(ValueError):
        decode_graph6("D")  # truncated
    with pytest.raises(ValueError):
        decode_graph6("B" + chr(62))  # data byte out of range
    with pytest.raises(ValueError):
        decode_graph6("Bh")  # nonzero padding (101000 would be 'g')


def test_graph6_header_prefix_accepted():
    assert decode_graph6(">>graph6<<Bg") == path_graph(3)


# -- DOT -------------------------------------------------------------------------


def test_to_dot_exact():
    assert to_dot(path_graph(3)) == (
        "graph G {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n"
    )


def test_to_dot_edges_ascending():
    G = Graph(4, [(3, 1), (2, 0)])
    body = to_dot(G)
    assert body.index("0 -- 2") < body.index("1 -- 3")
