"""Labeled trees, edge contraction, and the tree-decorated decomposition
poset."""

import itertools
import random

import pytest

from symposet.builders import build_D
from symposet.homology import reduced_homology
from symposet.posets import check_isomorphism
from symposet.rings import PrimeField
from symposet.symplectic import SymplecticModule
from symposet.trees import (UTree, build_T, build_TD, contract,
                            contraction_unique, enumerate_plain_trees,
                            enumerate_trees, tree_certificate,
                            tree_forget_map)

F2 = PrimeField(2)


def test_plain_tree_counts():
    reps = enumerate_plain_trees(6)
    assert len(reps) == 24
    by_edges = {}
    for n, edges in reps:
        by_edges[len(edges)] = by_edges.get(len(edges), 0) + 1
    assert by_edges == {1: 1, 2: 1, 3: 2, 4: 3, 5: 6, 6: 11}


def test_certificate_relabel_invariance():
    # the 4-vertex star, two labelings of the same shape
    a = tree_certificate(4, ((0, 1), (0, 2), (0, 3)), lambda v: ())
    b = tree_certificate(4, ((1, 3), (2, 3), (0, 3)), lambda v: ())
    assert a == b
    path = tree_certificate(4, ((0, 1), (1, 2), (2, 3)), lambda v: ())
    assert path != a


def test_certificate_sees_annotation():
    edges = ((0, 1), (1, 2))
    left = tree_certificate(3, edges, lambda v: ("x",) if v == 0 else ())
    right = tree_certificate(3, edges, lambda v: ("x",) if v == 2 else ())
    mid = tree_certificate(3, edges, lambda v: ("x",) if v == 1 else ())
    assert left == right  # the flip matches the annotation
    assert left != mid


def test_utree_validation():
    with pytest.raises(AssertionError):
        UTree(3, ((0, 1),), (0, 1, 2))  # disconnected
    with pytest.raises(AssertionError):
        UTree(3, ((0, 1), (1, 2), (0, 2)), (0, 1, 2))  # cycle
    with pytest.raises(AssertionError):
        # vertex 2 has degree 1 but carries no label
        UTree(3, ((0, 1), (1, 2)), (0, 1))
    T = UTree(3, ((0, 1), (1, 2)), (0, 1, 2))
    assert T.strict
    assert not UTree(3, ((0, 1), (1, 2)), (0, 1, 2, 0)).strict
    assert T.annotation(1) == (1,)
    assert T.degree(1) == 2


def test_strict_trees_are_rigid():
    for T in enumerate_trees(3, strict=True):
        assert len(T.automorphisms()) == 1


def test_enumerate_trees_m2():
    ts = enumerate_trees(2)
    # edge with both labels split, plus the two single-vertex-ish shapes
    # are excluded (a tree needs an edge), doubled labels on one end allowed
    assert all(T.m == 2 for T in ts)
    assert len(ts) == len({T.certificate() for T in ts})


def test_contract_path():
    # keeping the middle edge collapses both outer edges
    T = UTree(4, ((0, 1), (1, 2), (2, 3)), (0, 1, 2, 3))
    S = contract(T, [(1, 2)])
    assert S.n == 2 and len(S.edges) == 1
    assert sorted(S.annotation(v) for v in range(2)) == [(0, 1), (2, 3)]
    assert contract(T, T.edges) == T
    with pytest.raises(AssertionError):
        contract(T, [])  # collapsing every edge is not a tree here


def test_contraction_unique_examples():
    edges = ((0, 1), (1, 2))
    assert contraction_unique(3, edges, [(0, 1)], [(0, 1)])
    assert contraction_unique(3, edges, [(0, 1)], [(1, 2)])


def test_contraction_unique_exhaustive_small():
    for n, edges in enumerate_plain_trees(4):
        m = len(edges)
        subsets = [tuple(c) for k in range(1, m + 1)
                   for c in itertools.combinations(edges, k)]
        for E in subsets:
            for Ep in subsets:
                assert contraction_unique(n, edges, E, Ep)


def test_T_counts_and_contractibility():
    for m, count in ((2, 1), (3, 7), (4, 63)):
        T = build_T(m)
        assert len(T) == count
        assert reduced_homology(T).betti == {}


def test_T_order_is_contraction():
    T = build_T(3)
    maxs = [t for t in T if not T.covers(t)]
    mins = [t for t in T if not any(T.lt(s, t) for s in T)]
    # three ways to split the labels over a single edge; one maximal shape
    assert len(mins) == 3
    assert len(maxs) == 1
    assert all(T.lt(b, maxs[0]) for b in mins)


def test_TD_genus2_is_DP():
    L = SymplecticModule.standard(F2, 2)
    DP = build_D(L, strict=True)
    TD = build_TD(L, DP=DP)
    assert len(TD) == len(DP) == 10
    assert check_isomorphism(TD, DP, {x: x[0] for x in TD})


def test_forget_map_fibers_genus3():
    L = SymplecticModule.standard(F2, 3)
    DP = build_D(L, strict=True)
    TD = build_TD(L, DP=DP)
    assert len(TD) == 4816
    p = tree_forget_map(L, TD=TD, DP=DP)
    assert p.source is TD and p.target is DP
    rng = random.Random(7)
    three_parts = sorted(d for d in DP if len(d) == 3)
    for d in rng.sample(three_parts, 5):
        fib = p.fiber_le(d)
        assert len(fib) == 7
    two_parts = sorted(d for d in DP if len(d) == 2)
    for d in rng.sample(two_parts, 5):
        assert len(p.fiber_le(d)) == 1
