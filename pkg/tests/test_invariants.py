"""Girth, K4-minor recognition, canonical forms."""

import random
from itertools import combinations, permutations

import pytest

from sp_extremal.graphs import (
    Graph,
    all_cycles,
    complete_graph,
    cycle_graph,
    disjoint_union,
    edge_count,
    empty_graph,
    path_graph,
)
from sp_extremal.invariants import (
    ACYCLIC,
    _colex_max_prefilter,
    _is_colex_max,
    are_isomorphic,
    canonical_form,
    find_k4_minor,
    girth,
    girth_at_least,
    is_k4_minor_free,
)
from sp_extremal.construct import h_catalog, theta


def random_graph(rng, n, p=None):
    p = p if p is not None else rng.choice([0.2, 0.4, 0.6])
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])


# -- girth -----------------------------------------------------------------------


def test_girth_examples():
    assert girth(cycle_graph(5)) == 5
    assert girth(path_graph(6)) is ACYCLIC
    assert girth(empty_graph(4)) is ACYCLIC
    assert girth(theta(3, 3)) == 6  # every cycle passes both hubs
    assert girth(complete_graph(4)) == 3


def test_acyclic_sentinel_ordering():
    assert ACYCLIC > 100
    assert girth(path_graph(4)) >= 5  # vacuous: no short cycle in a forest


def test_girth_matches_cycle_listing():
    rng = random.Random(21)
    for _ in range(60):
        G = random_graph(rng, rng.randint(1, 7))
        cycles = all_cycles(G, G.n)
        expected = min((len(c) for c in cycles), default=None)
        got = girth(G)
        assert (got is ACYCLIC and expected is None) or got == expected


def test_girth_relabeling_invariance():
    rng = random.Random(22)
    for _ in range(40):
        n = rng.randint(2, 9)
        G = random_graph(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        assert girth(G) == girth(G.relabel(perm))


def test_girth_monotone_under_edge_edits():
    rng = random.Random(23)
    for _ in range(40):
        G = random_graph(rng, rng.randint(3, 8))
        edges = G.edges()
        if edges:
            e = rng.choice(edges)
            assert girth(G.without_edge(*e)) >= girth(G)
        non_edges = [
            (u, v) for u in range(G.n) for v in range(u + 1, G.n) if not G.has_edge(u, v)
        ]
        if non_edges:
            u, v = rng.choice(non_edges)
            assert girth(G.with_edge(u, v)) <= girth(G)


def test_girth_at_least_agrees_with_girth():
    rng = random.Random(24)
    for _ in range(60):
        G = random_graph(rng, rng.randint(1, 8))
        for g in (4, 5, 6, 7):
            assert girth_at_least(G, g) == (girth(G) >= g)


# -- K4-minor-freeness -------------------------------------------------------------


def test_recognition_examples():
    assert not is_k4_minor_free(complete_graph(4))
    assert is_k4_minor_free(path_graph(7))
    assert is_k4_minor_free(cycle_graph(9))
    assert all(is_k4_minor_free(H) for H in h_catalog())
    assert not is_k4_minor_free(complete_graph(5))
    # disconnected inputs reduce component by component
    assert is_k4_minor_free(disjoint_union(cycle_graph(3), path_graph(4)))
    assert not is_k4_minor_free(disjoint_union(cycle_graph(3), complete_graph(4)))


def _contract(G, u, v):
    """Contract edge (u, v), keeping single edges only."""
    assert G.has_edge(u, v)
    keep = [w for w in range(G.n) if w != v]
    index = {w: i for i, w in enumerate(keep)}
    edges = set()
    for a, b in G.edges():
        a2 = u if a == v else a
        b2 = u if b == v else b
        if a2 != b2:
            edges.add((min(index[a2], index[b2]), max(index[a2], index[b2])))
    return Graph(G.n - 1, sorted(edges))


def test_minor_closedness():
    from sp_extremal.verify import random_sp_graph

    rng = random.Random(25)
    for _ in range(40):
        G = random_sp_graph(rng, rng.randint(3, 9))
        assert is_k4_minor_free(G)
        for e in G.edges():
            assert is_k4_minor_free(G.without_edge(*e))
            assert is_k4_minor_free(_contract(G, *e))


def test_certificate_examples():
    cert = find_k4_minor(complete_graph(4))
    assert cert is not None and sorted(map(sorted, cert)) == [[0], [1], [2], [3]]
    assert find_k4_minor(cycle_graph(6)) is None
    # K4 with every edge subdivided once: singletons fail, larger sets exist
    sub = Graph(10, [(0, 4), (4, 1), (0, 5), (5, 2), (0, 6), (6, 3),
                     (1, 7), (7, 2), (1, 8), (8, 3), (2, 9), (9, 3)])
    assert not is_k4_minor_free(sub)
    cert = find_k4_minor(sub)
    assert cert is not None
    assert any(len(s) > 1 for s in cert)
    union = set().union(*cert)
    assert len(union) == sum(len(s) for s in cert)
    for a, b in combinations(cert, 2):
        assert any(sub.has_edge(x, y) for x in a for y in b)


def test_certificate_size_guard():
    with pytest.raises(ValueError):
        find_k4_minor(empty_graph(15))


def test_recognition_agrees_with_certificate():
    rng = random.Random(26)
    for _ in range(150):
        G = random_graph(rng, rng.randint(1, 8))
        assert is_k4_minor_free(G) == (find_k4_minor(G) is None)


# -- canonical labeling --------------------------------------------------------------


def test_canonical_form_invariance():
    rng = random.Random(27)
    for _ in range(80):
        n = rng.randint(1, 9)
        G = random_graph(rng, n)
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(G) == canonical_form(G.relabel(perm))


def test_canonical_form_separates():
    assert canonical_form(cycle_graph(5)) != canonical_form(path_graph(5))
    forms = {canonical_form(H) for H in h_catalog()}
    assert len(forms) == 8


def test_canonical_form_is_least_encoding():
    from sp_extremal.graphs import encode_graph6

    rng = random.Random(28)
    for _ in range(25):
        n = rng.randint(1, 6)
        G = random_graph(rng, n)
        explicit = min(
            encode_graph6(G.relabel(list(p))) for p in permutations(range(n))
        )
        assert canonical_form(G) == explicit


def test_canonical_size_guard():
    with pytest.raises(ValueError):
        canonical_form(empty_graph(15))


def test_are_isomorphic():
    rng = random.Random(29)
    G = random_graph(rng, 8)
    perm = list(range(8))
    rng.shuffle(perm)
    assert are_isomorphic(G, G.relabel(perm))
    assert are_isomorphic(cycle_graph(10), theta(5, 2))  # two 5-edge paths = C10
    cat = h_catalog()
    assert not are_isomorphic(cat[3], cat[4])  # H4 vs H5
    assert not are_isomorphic(cycle_graph(6), cycle_graph(7))


def test_are_isomorphic_equivalence_relation():
    rng = random.Random(30)
    gs = [random_graph(rng, 6) for _ in range(8)]
    for a in gs:
        assert are_isomorphic(a, a)
        for b in gs:
            assert are_isomorphic(a, b) == are_isomorphic(b, a)
    for a in gs:
        for b in gs:
            for c in gs:
                if are_isomorphic(a, b) and are_isomorphic(b, c):
                    assert are_isomorphic(a, c)


# -- the generator's canonicity test ---------------------------------------------------


def test_colex_max_unique_per_class():
    # exhaustive for n <= 5: every isomorphism class has exactly one
    # labeled representative accepted by the test
    for n in range(1, 6):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            G = Graph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])
            reps = {
                G.relabel(list(p)).adj
                for p in permutations(range(n))
                if _is_colex_max(n, G.relabel(list(p)).adj)
            }
            assert len(reps) == 1


def test_colex_max_prefilter_is_sound():
    # the cheap filter never rejects a true representative
    for n in range(1, 7):
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            G = Graph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])
            if _is_colex_max(n, G.adj):
                assert _colex_max_prefilter(n, G.adj)
