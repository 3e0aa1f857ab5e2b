import logging
import re
from dataclasses import dataclass, field
from itertools import combinations

from .exceptions import (
    CapacityError,
    DisjointnessError,
    EmptyComplexError,
    MalformedFaceError,
    StructureError,
    UnknownVertexError,
)

logger = logging.getLogger(__name__)

MAX_VERTICES = 64

_NUMBER = re.compile(r"^-?\d+$")


def label_key(label):
    """Natural ordering: numeric labels by value, then everything else by text."""
    if _NUMBER.match(label):
        return (0, int(label), label)
    match = re.match(r"^(\D*)(\d+)$", label)
    if match:
        return (1, match.group(1), int(match.group(2)), label)
    return (2, label)


def popcount(mask):
    return mask.bit_count()


def bits(mask):
    """Vertex indices set in `mask`, ascending."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def submasks_of_size(mask, size):
    for chosen in combinations(bits(mask), size):
        sub = 0
        for i in chosen:
            sub |= 1 << i
        yield sub


def maximal_masks(masks):
    kept = []
    for mask in sorted(set(masks), key=lambda m: (-popcount(m), m)):
        if not any(mask & ~other == 0 for other in kept):
            kept.append(mask)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class Complex:
    """A finite abstract simplicial complex.

    `vertices` holds the external labels in natural order; vertex i is bit i of
    every face mask. `facets` are the maximal faces as sorted masks. The empty
    complex has no vertices and the single facet 0 (the empty face).
    """

    vertices: tuple
    facets: tuple
    _faces: dict = field(default_factory=dict, compare=False, repr=False, hash=False)

    # constructors

    @classmethod
    def from_facets(cls, facets):
        facets = [list(f) for f in facets]
        if not facets:
            raise EmptyComplexError("a complex needs at least one facet")
        return cls._from_label_facets(facets)

    @classmethod
    def _from_label_facets(cls, facets):
        for facet in facets:
            if len(set(facet)) != len(facet):
                raise MalformedFaceError(f"facet {facet} repeats a vertex")
        labels = sorted({str(v) for facet in facets for v in facet}, key=label_key)
        if len(labels) > MAX_VERTICES:
            raise CapacityError(f"{len(labels)} vertices exceed the {MAX_VERTICES}-vertex limit")
        index = {label: i for i, label in enumerate(labels)}
        masks = []
        for facet in facets:
            mask = 0
            for v in facet:
                mask |= 1 << index[str(v)]
            masks.append(mask)
        return cls(tuple(labels), maximal_masks(masks))

    @classmethod
    def from_masks(cls, vertices, masks):
        """Build from masks over `vertices`, dropping unused labels and renumbering."""
        masks = maximal_masks(masks) if masks else (0,)
        used = 0
        for mask in masks:
            used |= mask
        keep = bits(used)
        if len(keep) == len(vertices):
            return cls(tuple(vertices), masks)
        remap = {old: new for new, old in enumerate(keep)}
        renumbered = []
        for mask in masks:
            out = 0
            for i in bits(mask):
                out |= 1 << remap[i]
            renumbered.append(out)
        return cls(tuple(vertices[i] for i in keep), tuple(sorted(renumbered)))

    @classmethod
    def empty(cls):
        return cls((), (0,))

    # basic queries

    @property
    def dim(self):
        return max(popcount(f) for f in self.facets) - 1

    @property
    def num_vertices(self):
        return len(self.vertices)

    @property
    def vertex_mask(self):
        return (1 << len(self.vertices)) - 1

    def is_empty(self):
        return not self.vertices

    def index_of(self, label):
        try:
            return self.vertices.index(str(label))
        except ValueError:
            raise UnknownVertexError(f"vertex {label!r} is not in the complex") from None

    def mask_of(self, labels, strict=True):
        mask = 0
        for label in labels:
            label = str(label)
            if label in self.vertices:
                mask |= 1 << self.vertices.index(label)
            elif strict:
                raise UnknownVertexError(f"vertex {label!r} is not in the complex")
        return mask

    def labels_of(self, mask):
        return tuple(self.vertices[i] for i in bits(mask))

    def contains(self, mask):
        return any(mask & ~facet == 0 for facet in self.facets)

    def faces(self, i):
        """All i-dimensional faces as masks, sorted; generated from facets on demand."""
        if i not in self._faces:
            if i < -1:
                found = ()
            elif i == -1:
                found = (0,)
            else:
                seen = set()
                for facet in self.facets:
                    if popcount(facet) > i:
                        seen.update(submasks_of_size(facet, i + 1))
                found = tuple(sorted(seen))
            self._faces[i] = found
        return self._faces[i]

    def is_pure(self):
        return len({popcount(f) for f in self.facets}) == 1

    def facet_labels(self):
        return [self.labels_of(f) for f in self.facets]

    def __str__(self):
        body = ", ".join("{" + ",".join(f) + "}" for f in self.facet_labels())
        return f"Complex(dim={self.dim}, facets=[{body}])"


def closure(labels):
    """The full simplex on `labels`: every subset is a face."""
    return Complex.from_facets([list(labels)])


def standard_ball(n):
    """B^{n-1}_n on the labels 1..n."""
    if n < 1:
        raise StructureError("a standard ball needs at least one vertex")
    return closure([str(i) for i in range(1, n + 1)])


def standard_sphere(d):
    """S^d_{d+2}: all proper subsets of a (d+2)-set."""
    if d < 0:
        raise StructureError("sphere dimension must be at least 0")
    labels = [str(i) for i in range(1, d + 3)]
    return Complex.from_facets([list(f) for f in combinations(labels, d + 1)])


def cycle(n):
    if n < 3:
        raise StructureError("a cycle needs at least three vertices")
    return Complex.from_facets([[str(i), str(i % n + 1)] for i in range(1, n + 1)])


def is_standard_sphere(X):
    m, d = X.num_vertices, X.dim
    return m == d + 2 and X.is_pure() and len(X.facets) == d + 2


def induced_subcomplex(X, A):
    """X[A]; `A` is a mask over X's vertices or an iterable of labels."""
    if not isinstance(A, int):
        A = X.mask_of(A, strict=False)
    A &= X.vertex_mask
    return Complex.from_masks(X.vertices, [f & A for f in X.facets])


def face_link(X, alpha):
    """lk_X(alpha) as a mask-level Complex over X's labels; `alpha` is a mask."""
    return Complex.from_masks(X.vertices, [f & ~alpha for f in X.facets if f & alpha == alpha])


def vertex_link(X, x):
    return face_link(X, 1 << X.index_of(x))


def star(X, alpha):
    return Complex.from_masks(X.vertices, [f for f in X.facets if f & alpha == alpha])


def join(X, Y):
    shared = set(X.vertices) & set(Y.vertices)
    if shared:
        raise DisjointnessError(f"join needs disjoint vertex sets, both contain {sorted(shared, key=label_key)}")
    if X.num_vertices + Y.num_vertices > MAX_VERTICES:
        raise CapacityError(f"join would have {X.num_vertices + Y.num_vertices} vertices")
    if Y.is_empty():
        return X
    if X.is_empty():
        return Y
    return Complex.from_facets(
        [list(fx) + list(fy) for fx in X.facet_labels() for fy in Y.facet_labels()]
    )


def boundary_complex(X):
    from .structure import is_weak_pseudomanifold

    if not X.is_pure() or not is_weak_pseudomanifold(X):
        raise StructureError("boundary needs a pure weak pseudomanifold")
    counts = ridge_counts(X)
    return Complex.from_masks(X.vertices, [r for r, n in counts.items() if n == 1])


def ridge_counts(X):
    """Number of facets containing each (d-1)-face."""
    counts = {}
    for facet in X.facets:
        for i in bits(facet):
            ridge = facet & ~(1 << i)
            counts[ridge] = counts.get(ridge, 0) + 1
    return counts


def skeleton(X, r):
    if r < -1:
        raise StructureError("skeleton dimension must be at least -1")
    masks = [f for f in X.facets if popcount(f) <= r + 1]
    masks.extend(X.faces(r))
    return Complex.from_masks(X.vertices, masks)


def relabel(X, mapping):
    return Complex.from_facets(
        [[mapping.get(v, v) for v in facet] for facet in X.facet_labels()]
    ) if not X.is_empty() else X


def fresh_label(X, taken=()):
    """Smallest unused label of the form vN."""
    used = set(X.vertices) | set(taken)
    n = 1
    while f"v{n}" in used:
        n += 1
    return f"v{n}"
