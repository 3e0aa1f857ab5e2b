from itertools import combinations

from complexes.complex import bits


def reduced_betti_convention(dim):
    """Reduced Betti numbers of the empty induced subcomplex: beta~_0 = -1, zero above."""
    return [-1] + [0] * max(dim, 0)


def subsets_by_cardinality(m, sizes=None):
    """Vertex masks ordered by size, then lexicographically by their index tuples."""
    for size in sizes if sizes is not None else range(m + 1):
        for chosen in combinations(range(m), size):
            mask = 0
            for i in chosen:
                mask |= 1 << i
            yield mask


class ChainComplex:
    """Oriented simplicial chains of a complex over a field.

    Faces are oriented by ascending vertex index; column `n` of `columns[i]`
    is the boundary of the n-th i-face, encoded the way the field wants it.
    """

    def __init__(self, X, field):
        self.complex = X
        self.field = field
        self.dim = X.dim
        self.faces = [X.faces(i) for i in range(self.dim + 1)]
        self.index = [{face: n for n, face in enumerate(level)} for level in self.faces]
        self.columns = [()]
        for i in range(1, self.dim + 1):
            self.columns.append(tuple(field.encode(self._boundary(i, face)) for face in self.faces[i]))
        self._full_ranks = {}

    def _boundary(self, i, face):
        column = {}
        for position, v in enumerate(bits(face)):
            column[self.index[i - 1][face & ~(1 << v)]] = -1 if position % 2 else 1
        return column

    def inside(self, A):
        """Per dimension, indices of the faces contained in vertex mask A."""
        return [[n for n, face in enumerate(level) if face & ~A == 0] for level in self.faces]

    def row_mask(self, i, A):
        """Row-drop mask selecting the i-faces inside A."""
        mask = 0
        if 0 <= i <= self.dim:
            for n, face in enumerate(self.faces[i]):
                if face & ~A == 0:
                    mask |= 1 << n
        return mask

    def rank(self, i, indices, drop_rows=0):
        if i < 1 or i > self.dim or not indices:
            return 0
        columns = self.columns[i]
        return self.field.rank([columns[n] for n in indices], drop_rows)

    def full_rank(self, i):
        if i not in self._full_ranks:
            self._full_ranks[i] = self.rank(i, range(len(self.faces[i]))) if 1 <= i <= self.dim else 0
        return self._full_ranks[i]

    def reduced_betti_within(self, A):
        """beta~_i of the induced subcomplex on vertex mask A, i = 0..dim."""
        if A & self.complex.vertex_mask == 0:
            return reduced_betti_convention(self.dim)
        selected = self.inside(A)
        ranks = [1] + [self.rank(i, selected[i]) for i in range(1, self.dim + 1)] + [0]
        return [len(selected[i]) - ranks[i] - ranks[i + 1] for i in range(self.dim + 1)]

    def relative_betti(self, B, A):
        """beta_i(X[B], X[A]) for A a subset of B, from the quotient chains."""
        A &= B
        selected = [[n for n in level if self.faces[i][n] & ~A] for i, level in enumerate(self.inside(B))]
        ranks = [0]
        for i in range(1, self.dim + 1):
            ranks.append(self.rank(i, selected[i], self.row_mask(i - 1, A)))
        ranks.append(0)
        return [len(selected[i]) - ranks[i] - ranks[i + 1] for i in range(self.dim + 1)]

    def injective_in_degree(self, A, j, selected=None):
        """H_j(X[A]) -> H_j(X) is injective.

        dim(B_j(X) meet C_j(X[A])) = rank d_{j+1} - rank(d_{j+1} with A-rows dropped),
        and injectivity means that equals rank of d_{j+1} on X[A].
        """
        if j >= self.dim or j < 0:
            return True
        if selected is None:
            selected = self.inside(A)
        meet = self.full_rank(j + 1) - self.rank(j + 1, range(len(self.faces[j + 1])), self.row_mask(j, A))
        return meet == self.rank(j + 1, selected[j + 1])
