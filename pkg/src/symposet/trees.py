"""Finite labeled trees under edge contraction.

A tree here is a pair (vertex count n, edge set) with vertices 0..n-1,
at least one edge, and connected.  A labeled tree carries a map from m
label indices into the vertex set whose image contains every vertex of
degree at most two.  Isomorphism classes are represented by a canonical
certificate (a rooted encoding at the tree center with per-vertex label
annotations), so dictionary keys and poset labels are certificates.
"""

from __future__ import annotations

import itertools
from typing import Dict, Iterable, List, Sequence, Set, Tuple

from .posets import FinitePoset, PosetMap


def _degrees(n: int, edges) -> List[int]:
    deg = [0] * n
    for a, b in edges:
        deg[a] += 1
        deg[b] += 1
    return deg


def _is_tree(n: int, edges) -> bool:
    if len(edges) != n - 1 or n < 2:
        return False
    adj = _adjacency(n, edges)
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == n


def _adjacency(n: int, edges) -> List[List[int]]:
    adj: List[List[int]] = [[] for _ in range(n)]
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    return adj


def _centers(n: int, edges) -> List[int]:
    """One or two middle vertices, by stripping leaves."""
    if n == 1:
        return [0]
    adj = [set(x) for x in _adjacency(n, edges)]
    alive = set(range(n))
    layer = [v for v in alive if len(adj[v]) <= 1]
    while len(alive) > 2:
        nxt = []
        for v in layer:
            alive.discard(v)
            for w in adj[v]:
                adj[w].discard(v)
                if len(adj[w]) == 1 and w in alive:
                    nxt.append(w)
        layer = nxt
    return sorted(alive)


def tree_certificate(n: int, edges, annotation) -> Tuple:
    """Canonical form of (tree, vertex annotation); two annotated trees have
    equal certificates exactly when an isomorphism matching annotations
    exists.  ``annotation`` maps a vertex to a hashable, comparable value.
    """
    adj = _adjacency(n, edges)

    def enc(v, parent):
        subs = sorted(enc(w, v) for w in adj[v] if w != parent)
        return (annotation(v), tuple(subs))

    centers = _centers(n, edges)
    if len(centers) == 1:
        return ("c", enc(centers[0], None))
    a, b = centers
    return ("e", tuple(sorted((enc(a, b), enc(b, a)))))


class UTree:
    """A tree with a labeling from m indices covering all degree-<=2 vertices."""

    def __init__(self, n: int, edges: Iterable[Tuple[int, int]], labeling: Sequence[int]):
        edges = tuple(sorted(tuple(sorted(e)) for e in edges))
        assert _is_tree(n, edges), "not a tree"
        labeling = tuple(labeling)
        assert all(0 <= v < n for v in labeling)
        deg = _degrees(n, edges)
        image = set(labeling)
        assert all(v in image for v in range(n) if deg[v] <= 2), \
            "labels must cover every vertex of degree at most 2"
        self.n = n
        self.edges = edges
        self.labeling = labeling
        self.m = len(labeling)

    @property
    def strict(self) -> bool:
        return len(set(self.labeling)) == self.m

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def annotation(self, v: int) -> Tuple:
        return tuple(j for j, w in enumerate(self.labeling) if w == v)

    def certificate(self) -> Tuple:
        return tree_certificate(self.n, self.edges, self.annotation)

    def automorphisms(self) -> List[Tuple[int, ...]]:
        """All vertex bijections preserving edges and commuting with the
        labeling; rigidity means only the identity shows up."""
        eset = set(self.edges)
        out = []
        for perm in itertools.permutations(range(self.n)):
            if any(perm[self.labeling[j]] != self.labeling[j] for j in range(self.m)):
                continue
            if all(tuple(sorted((perm[a], perm[b]))) in eset for a, b in eset):
                out.append(perm)
        return out

    def __eq__(self, other):
        if not isinstance(other, UTree):
            return NotImplemented
        return self.certificate() == other.certificate()

    def __hash__(self):
        return hash(self.certificate())

    def __repr__(self):
        return f"UTree(n={self.n}, edges={self.edges}, labeling={self.labeling})"


def _contract_plain(n: int, edges, keep) -> Tuple[int, Tuple, List[int]]:
    """Contract every component of the tree minus ``keep``; returns the new
    vertex count, new edges, and the vertex -> component map."""
    keep = {tuple(sorted(e)) for e in keep}
    assert keep, "need a nonempty edge set"
    assert keep <= set(edges)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        if tuple(sorted(e)) not in keep:
            a, b = find(e[0]), find(e[1])
            if a != b:
                parent[a] = b
    reps = sorted({find(v) for v in range(n)})
    index = {r: i for i, r in enumerate(reps)}
    comp = [index[find(v)] for v in range(n)]
    new_edges = []
    for a, b in sorted(keep):
        ca, cb = comp[a], comp[b]
        assert ca != cb, "kept edge collapsed"
        new_edges.append(tuple(sorted((ca, cb))))
    assert len(set(new_edges)) == len(new_edges)
    return len(reps), tuple(sorted(new_edges)), comp


def contract(T: UTree, E: Iterable[Tuple[int, int]]) -> UTree:
    """The quotient tree keeping exactly the edges E, with induced labeling."""
    n2, edges2, comp = _contract_plain(T.n, T.edges, E)
    return UTree(n2, edges2, tuple(comp[v] for v in T.labeling))


def contraction_unique(n: int, edges, E, Eprime) -> bool:
    """True unless E != E' yet the two quotients are isomorphic compatibly
    with the projections on the degree-<=2 vertices."""
    edges = tuple(sorted(tuple(sorted(e)) for e in edges))
    E = frozenset(tuple(sorted(e)) for e in E)
    Eprime = frozenset(tuple(sorted(e)) for e in Eprime)
    if E == Eprime:
        return True
    deg = _degrees(n, edges)
    t00 = [v for v in range(n) if deg[v] <= 2]

    def cert(keep):
        n2, edges2, comp = _contract_plain(n, edges, keep)
        sets = [tuple(v for v in t00 if comp[v] == c) for c in range(n2)]
        return tree_certificate(n2, edges2, lambda c: sets[c])

    return cert(E) != cert(Eprime)


def enumerate_plain_trees(max_edges: int) -> List[Tuple[int, Tuple]]:
    """One representative (n, edges) per isomorphism class, up to the given
    edge count, via Pruefer sequences."""
    out = []
    for n in range(2, max_edges + 2):
        seen: Set[Tuple] = set()
        for seq in itertools.product(range(n), repeat=max(0, n - 2)):
            edges = _pruefer_to_edges(n, seq)
            c = tree_certificate(n, edges, lambda v: ())
            if c not in seen:
                seen.add(c)
                out.append((n, edges))
    return out


def _pruefer_to_edges(n: int, seq) -> Tuple:
    if n == 2:
        return ((0, 1),)
    seq = list(seq)
    deg = [1] * n
    for v in seq:
        deg[v] += 1
    edges = []
    for v in seq:
        leaf = min(i for i in range(n) if deg[i] == 1)
        edges.append(tuple(sorted((leaf, v))))
        deg[leaf] -= 1
        deg[v] -= 1
    last = [i for i in range(n) if deg[i] == 1]
    edges.append(tuple(sorted(last)))
    return tuple(sorted(edges))


def enumerate_trees(m: int, strict: bool = False) -> List[UTree]:
    """All labeled trees on m label indices up to isomorphism."""
    assert m >= 2
    reps = enumerate_plain_trees(2 * m - 3)
    found: Dict[Tuple, UTree] = {}
    for n, edges in reps:
        deg = _degrees(n, edges)
        needed = [v for v in range(n) if deg[v] <= 2]
        if len(needed) > m:
            continue
        for labeling in itertools.product(range(n), repeat=m):
            if strict and len(set(labeling)) != m:
                continue
            if not set(needed) <= set(labeling):
                continue
            T = UTree(n, edges, labeling)
            found.setdefault(T.certificate(), T)
    return [found[c] for c in sorted(found, key=repr)]


def build_T(m: int, strict: bool = False) -> FinitePoset:
    """The poset of labeled trees on m indices under edge contraction."""
    trees = enumerate_trees(m, strict=strict)
    by_cert = {T.certificate(): T for T in trees}
    rel = []
    for T in trees:
        for k in range(1, len(T.edges)):
            for E in itertools.combinations(T.edges, k):
                S = contract(T, E)
                c = S.certificate()
                if strict and not S.strict:
                    continue
                assert c in by_cert
                rel.append((c, T.certificate()))
    return FinitePoset(list(by_cert), rel)


# ---------------------------------------------------------------------------
# tree decompositions over a symplectic module

def build_TD(L, DP: FinitePoset = None) -> FinitePoset:
    """Pairs (strict decomposition, strict labeled tree on its parts); a pair
    sits above another when the decomposition refines it and a contraction
    matches the induced part surjection."""
    from .builders import build_D, submodule_from_key

    if DP is None:
        DP = build_D(L, strict=True)
    tree_cache: Dict[int, List[UTree]] = {}

    def strict_trees(m):
        if m not in tree_cache:
            tree_cache[m] = enumerate_trees(m, strict=True)
        return tree_cache[m]

    elements = []
    utrees: Dict[Tuple, UTree] = {}
    for dec in DP:
        for T in strict_trees(len(dec)):
            label = (dec, T.certificate())
            elements.append(label)
            utrees[label] = T
    rel = []
    merge_cache: Dict[Tuple, Tuple] = {}

    def merged_key(keys: Tuple) -> Tuple:
        if keys not in merge_cache:
            acc = submodule_from_key(L, keys[0])
            for k in keys[1:]:
                acc = acc.add(submodule_from_key(L, k))
            merge_cache[keys] = acc.key()
        return merge_cache[keys]

    eset = set(elements)
    for dec, cert in elements:
        T = utrees[(dec, cert)]
        for k in range(1, len(T.edges)):
            for E in itertools.combinations(T.edges, k):
                n2, edges2, comp = _contract_plain(T.n, T.edges, E)
                groups: Dict[int, List] = {}
                for j, v in enumerate(T.labeling):
                    groups.setdefault(comp[v], []).append(dec[j])
                dec2 = tuple(sorted(merged_key(tuple(sorted(g)))
                                    for g in groups.values()))
                if len(dec2) < 2:
                    continue
                assert dec2 in DP, "merged parts left the decomposition poset"
                vertex_of = {merged_key(tuple(sorted(g))): c
                             for c, g in groups.items()}
                S = UTree(n2, edges2, tuple(vertex_of[k2] for k2 in dec2))
                assert S.strict
                label2 = (dec2, S.certificate())
                assert label2 in eset
                rel.append((label2, (dec, cert)))
    return FinitePoset(elements, rel)


def tree_forget_map(L, TD: FinitePoset = None, DP: FinitePoset = None) -> PosetMap:
    from .builders import build_D

    if DP is None:
        DP = build_D(L, strict=True)
    if TD is None:
        TD = build_TD(L, DP)
    return PosetMap(TD, DP, {x: x[0] for x in TD})
