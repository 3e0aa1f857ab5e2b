from dataclasses import asdict, dataclass
from math import comb

import networkx as nx

from .complex import bits, ridge_counts
from .exceptions import StructureError


@dataclass(frozen=True)
class StructureReport:
    pure: bool
    weak_pseudomanifold: bool
    pseudomanifold: bool
    closed: bool
    connected: bool
    neighbourliness: int
    euler_characteristic: int

    def as_dict(self):
        return asdict(self)


def is_weak_pseudomanifold(X):
    return X.is_pure() and all(n <= 2 for n in ridge_counts(X).values())


def is_closed(X):
    return X.dim >= 0 and X.is_pure() and all(n == 2 for n in ridge_counts(X).values())


def dual_graph(X):
    """Facets as nodes (label tuples), edges between facets sharing a codimension-1 face."""
    if not X.is_pure():
        raise StructureError("the dual graph is only defined for pure complexes")
    graph = nx.Graph()
    graph.add_nodes_from(X.labels_of(f) for f in X.facets)
    by_ridge = {}
    for facet in X.facets:
        for i in bits(facet):
            by_ridge.setdefault(facet & ~(1 << i), []).append(facet)
    for sharing in by_ridge.values():
        for a in range(len(sharing)):
            for b in range(a + 1, len(sharing)):
                graph.add_edge(X.labels_of(sharing[a]), X.labels_of(sharing[b]))
    graph.graph["connected"] = graph.number_of_nodes() > 0 and nx.is_connected(graph)
    return graph


def one_skeleton(X):
    graph = nx.Graph()
    graph.add_nodes_from(range(X.num_vertices))
    graph.add_edges_from(tuple(bits(e)) for e in X.faces(1))
    return graph


def is_connected(X):
    return X.num_vertices > 0 and nx.is_connected(one_skeleton(X))


def is_neighbourly(X, l):
    return l <= X.num_vertices and len(X.faces(l - 1)) == comb(X.num_vertices, l)


def neighbourliness(X):
    l = 0
    while l < X.num_vertices and is_neighbourly(X, l + 1):
        l += 1
    return l


def euler_characteristic(X):
    return sum((-1) ** i * len(X.faces(i)) for i in range(X.dim + 1))


def structure_report(X):
    pure = X.is_pure()
    weak = is_weak_pseudomanifold(X)
    return StructureReport(
        pure=pure,
        weak_pseudomanifold=weak,
        pseudomanifold=weak and X.dim >= 0 and dual_graph(X).graph["connected"],
        closed=is_closed(X),
        connected=is_connected(X),
        neighbourliness=neighbourliness(X),
        euler_characteristic=euler_characteristic(X),
    )

