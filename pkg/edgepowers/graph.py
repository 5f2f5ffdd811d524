"""Simple graphs on [n], their edge ideals and the lexsegment edge ideals

Date -- 19.10.2026
"""


from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Set, Tuple

import networkx as nx

from edgepowers.monomial import Monomial, MonomialIdeal, PrimeSupport, lex_cmp, sorted_supports
from edgepowers.utils import MAX_MIS_VERTICES, check_guard


Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    n: int
    edges: FrozenSet[Edge] = field(default_factory=frozenset)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"Graph needs at least one vertex, got n={self.n}")

        normalized = set()
        for i, j in self.edges:
            if i == j:
                raise ValueError(f"Loop at vertex {i}")
            i, j = min(i, j), max(i, j)
            if not (1 <= i and j <= self.n):
                raise ValueError(f"Edge {{{i},{j}}} outside vertex set 1..{self.n}")
            normalized.add((i, j))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_json(cls, data: Dict) -> Graph:
        return cls(int(data["n"]), frozenset(tuple(e) for e in data["edges"]))

    @classmethod
    def from_networkx(cls, G: nx.Graph) -> Graph:
        """Relabel the nodes of G to 1..|V| in sorted order."""
        nodes = sorted(G.nodes())
        index = {v: i + 1 for i, v in enumerate(nodes)}
        return cls(len(nodes), frozenset((index[a], index[b]) for a, b in G.edges()))

    @property
    def vertices(self) -> List[int]:
        return list(range(1, self.n + 1))

    @property
    def sorted_edges(self) -> List[Edge]:
        return sorted(self.edges)

    def has_edge(self, i: int, j: int) -> bool:
        return (min(i, j), max(i, j)) in self.edges

    def neighbours(self) -> Dict[int, Set[int]]:
        adjacency = {v: set() for v in self.vertices}
        for i, j in self.edges:
            adjacency[i].add(j)
            adjacency[j].add(i)
        return adjacency

    def to_networkx(self) -> nx.Graph:
        G = nx.Graph()
        G.add_nodes_from(self.vertices)
        G.add_edges_from(self.sorted_edges)
        return G

    def to_json(self) -> Dict:
        return {"n": self.n, "edges": [list(e) for e in self.sorted_edges]}


def d_path(n: int, d: int) -> Graph:
    """Union of the complete graphs on the windows {t, ..., t+d}."""
    if n < 1 or d < 1:
        raise ValueError(f"d-path needs n >= 1 and d >= 1, got n={n}, d={d}")
    return Graph(n, frozenset((i, j) for i, j in itertools.combinations(range(1, n + 1), 2) if j - i <= d))


def complement(G: Graph) -> Graph:
    return Graph(G.n, frozenset(e for e in itertools.combinations(G.vertices, 2) if e not in G.edges))


def anti_d_path(n: int, d: int) -> Graph:
    return complement(d_path(n, d))


def star(n: int) -> Graph:
    return Graph(n, frozenset((1, j) for j in range(2, n + 1)))


def complete_graph(n: int) -> Graph:
    return Graph(n, frozenset(itertools.combinations(range(1, n + 1), 2)))


def empty_graph(n: int) -> Graph:
    return Graph(n)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"Cycle needs at least 3 vertices, got {n}")
    return Graph(n, frozenset((i, i % n + 1) for i in range(1, n + 1)))


def edge_ideal(G: Graph) -> MonomialIdeal:
    return MonomialIdeal(G.n, [Monomial.from_indices(G.n, e) for e in G.edges])


def graph_of_ideal(ideal: MonomialIdeal) -> Graph:
    """Inverse of edge_ideal for squarefree quadric ideals."""
    edges = []
    for g in ideal.gens:
        if g.degree != 2 or not g.is_squarefree:
            raise ValueError(f"{g} is not a squarefree quadric, no graph attached")
        edges.append(tuple(sorted(g.support)))
    return Graph(ideal.n, frozenset(edges))


def squarefree_quadrics(n: int) -> List[Monomial]:
    """All x_i x_j, i < j, in decreasing lex order."""
    return [Monomial.from_indices(n, e) for e in itertools.combinations(range(1, n + 1), 2)]


def _check_lexsegment_bound(m: Monomial, n: int) -> None:
    if m.n != n:
        raise ValueError(f"{m} lives in {m.n} variables, expected {n}")
    if m.degree != 2 or not m.is_squarefree:
        raise ValueError(f"Lexsegment bound must be a squarefree monomial of degree 2, got {m}")


def lexsegment_initial(v: Monomial, n: int) -> MonomialIdeal:
    """(L^i(v)): squarefree quadrics w with w >=_lex v."""
    _check_lexsegment_bound(v, n)
    return MonomialIdeal(n, [w for w in squarefree_quadrics(n) if lex_cmp(w, v) >= 0])


def lexsegment_final(u: Monomial, n: int) -> MonomialIdeal:
    """(L^f(u)): squarefree quadrics w with u >=_lex w."""
    _check_lexsegment_bound(u, n)
    return MonomialIdeal(n, [w for w in squarefree_quadrics(n) if lex_cmp(u, w) >= 0])


@dataclass(frozen=True)
class BipartiteCheck:
    is_bipartite: bool
    parts: Optional[Tuple[Tuple[int, ...], Tuple[int, ...]]] = None
    odd_walk: Optional[Tuple[int, ...]] = None

    def __bool__(self) -> bool:
        return self.is_bipartite

    def to_json(self) -> Dict:
        if self.is_bipartite:
            return {"bipartite": True, "parts": [list(p) for p in self.parts]}
        return {"bipartite": False, "odd_walk": list(self.odd_walk)}


def _tree_path(parent: Dict[int, Optional[int]], v: int) -> List[int]:
    path = [v]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    return path


def is_bipartite(G: Graph) -> BipartiteCheck:
    """BFS 2-coloring from the smallest uncolored vertex.

    On failure the witness is the odd closed walk through the BFS tree and the
    offending edge, listed from and back to the same vertex.
    """
    adjacency = G.neighbours()
    color: Dict[int, int] = {}
    parent: Dict[int, Optional[int]] = {}

    for root in G.vertices:
        if root in color:
            continue
        color[root] = 0
        parent[root] = None
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for w in sorted(adjacency[v]):
                if w not in color:
                    color[w] = 1 - color[v]
                    parent[w] = v
                    queue.append(w)
                elif color[w] == color[v]:
                    path_v = _tree_path(parent, v)
                    path_w = _tree_path(parent, w)
                    common = set(path_v) & set(path_w)
                    cut_v = next(i for i, x in enumerate(path_v) if x in common)
                    cut_w = path_w.index(path_v[cut_v])
                    walk = path_v[:cut_v + 1] + list(reversed(path_w[:cut_w])) + [v]
                    return BipartiteCheck(False, odd_walk=tuple(walk))

    V1 = tuple(v for v in G.vertices if color[v] == 0)
    V2 = tuple(v for v in G.vertices if color[v] == 1)
    return BipartiteCheck(True, parts=(V1, V2))


def maximum_cardinality_search(G: Graph) -> List[int]:
    """Visit order of MCS; ties go to the smallest vertex index."""
    adjacency = G.neighbours()
    weight = {v: 0 for v in G.vertices}
    order = []
    unvisited = set(G.vertices)
    while unvisited:
        v = min(unvisited, key=lambda x: (-weight[x], x))
        unvisited.remove(v)
        order.append(v)
        for w in adjacency[v] & unvisited:
            weight[w] += 1
    return order


def is_perfect_elimination_ordering(G: Graph, ordering: List[int]) -> bool:
    """Every vertex's neighbours later in the ordering form a clique."""
    adjacency = G.neighbours()
    position = {v: i for i, v in enumerate(ordering)}
    for v in ordering:
        later = [w for w in adjacency[v] if position[w] > position[v]]
        for a, b in itertools.combinations(later, 2):
            if b not in adjacency[a]:
                return False
    return True


def perfect_elimination_ordering(G: Graph) -> Optional[List[int]]:
    ordering = list(reversed(maximum_cardinality_search(G)))
    return ordering if is_perfect_elimination_ordering(G, ordering) else None


def is_chordal(G: Graph) -> bool:
    return perfect_elimination_ordering(G) is not None


def maximal_independent_sets(G: Graph) -> List[FrozenSet[int]]:
    """Maximal independent sets of G as the maximal cliques of its complement (Bron-Kerbosch)."""
    check_guard("vertices", MAX_MIS_VERTICES, G.n)
    cliques = nx.find_cliques(complement(G).to_networkx())
    return sorted((frozenset(c) for c in cliques), key=lambda s: sorted(s))


def minimal_vertex_cover_primes(G: Graph) -> List[PrimeSupport]:
    """Minimal primes of I(G): complements of the maximal independent sets."""
    covers = (PrimeSupport(G.n, frozenset(G.vertices) - mis) for mis in maximal_independent_sets(G))
    return sorted_supports(p for p in covers if p.vars)


def all_graphs_up_to_isomorphism(n: int) -> Iterable[Graph]:
    """Every graph on exactly n vertices, one per isomorphism class (n <= 7)."""
    if not 1 <= n <= 7:
        raise ValueError(f"Graph atlas covers 1 <= n <= 7, got {n}")
    for G in nx.graph_atlas_g():
        if G.number_of_nodes() == n:
            yield Graph.from_networkx(G)
