from dataclasses import dataclass

from complexes.complex import Complex, bits, face_link, fresh_label, label_key, popcount
from complexes.exceptions import StructureError

from .exceptions import MoveError


@dataclass(frozen=True)
class BistellarMove:
    """alpha -> beta, replacing closure(alpha) * boundary(beta) by boundary(alpha) * closure(beta).

    Faces are kept as sorted label tuples so a move survives the vertex
    renumbering that 0-moves and d-moves cause.
    """

    alpha: tuple
    beta: tuple

    @classmethod
    def of(cls, alpha, beta):
        return cls(
            tuple(sorted((str(v) for v in alpha), key=label_key)),
            tuple(sorted((str(v) for v in beta), key=label_key)),
        )

    @property
    def index(self):
        return len(self.beta) - 1

    @property
    def fresh_vertex(self):
        return self.index == 0

    def reverse(self):
        return BistellarMove(self.beta, self.alpha)

    def as_dict(self):
        return {"alpha": list(self.alpha), "beta": list(self.beta), "index": self.index}

    def __str__(self):
        return "{" + ",".join(self.alpha) + "} -> {" + ",".join(self.beta) + "}"


def _link_is_sphere_boundary(X, alpha, beta):
    """lk_X(alpha) equals the boundary of beta, both as masks over X."""
    link = face_link(X, alpha)
    if popcount(beta) == 1:
        return link.facets == (0,) and not link.vertices
    expected = {beta & ~(1 << i) for i in bits(beta)}
    if len(link.facets) != len(expected):
        return False
    return {X.mask_of(link.labels_of(f)) for f in link.facets} == expected


def is_valid_move(X, alpha, beta):
    """closure(alpha) * boundary(beta) is an induced subcomplex of X of dimension d."""
    alpha = [str(v) for v in alpha]
    beta = [str(v) for v in beta]
    if not alpha or not beta or set(alpha) & set(beta):
        return False
    if len(set(alpha)) != len(alpha) or len(set(beta)) != len(beta):
        return False
    if len(alpha) + len(beta) != X.dim + 2:
        return False
    if not set(alpha) <= set(X.vertices):
        return False
    a = X.mask_of(alpha)
    if not X.contains(a):
        return False
    if len(beta) == 1:
        # index 0: alpha is a facet, beta a new vertex
        return beta[0] not in X.vertices and a in X.facets
    if not set(beta) <= set(X.vertices):
        return False
    b = X.mask_of(beta)
    # induced: no face of X on alpha+beta contains beta
    return not X.contains(b) and _link_is_sphere_boundary(X, a, b)


def enumerate_moves(X, indices=None):
    """Valid proper moves plus one 0-move per facet, ordered by index then masks."""
    if not X.is_pure():
        raise StructureError("moves are enumerated on pure complexes only")
    d = X.dim
    wanted = set(range(d + 1)) if indices is None else set(indices)
    moves = []
    for t in sorted(wanted - {0}):
        if t > d:
            continue
        for a in X.faces(d - t):
            link = face_link(X, a)
            if len(link.facets) != t + 1 or link.num_vertices != t + 1:
                continue
            if any(popcount(f) != t for f in link.facets):
                continue
            b = X.mask_of(link.vertices)
            if X.contains(b):
                continue
            moves.append(BistellarMove(X.labels_of(a), X.labels_of(b)))
    if 0 in wanted:
        fresh = fresh_label(X)
        moves.extend(BistellarMove(X.labels_of(f), (fresh,)) for f in X.facets)
    return moves


def apply_move(X, move):
    if not is_valid_move(X, move.alpha, move.beta):
        raise MoveError(f"{move} is not a valid move on this complex")
    a = set(move.alpha)
    kept = [list(f) for f in X.facet_labels() if not a <= set(f)]
    added = [[v for v in move.alpha if v != x] + list(move.beta) for x in move.alpha]
    return Complex.from_facets(kept + added)


def g_delta(d, t):
    """Change of (g_0, ..., g_{d+1}) under one index-t move on a d-complex."""
    delta = [0] * (d + 2)
    if 2 * t != d:
        delta[t + 1] += 1
    if 2 * (d - t) != d:
        delta[d - t + 1] -= 1
    return delta
