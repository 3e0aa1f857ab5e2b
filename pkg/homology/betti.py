import logging
from dataclasses import dataclass

from complexes.structure import structure_report

from .chains import ChainComplex, reduced_betti_convention, subsets_by_cardinality
from .exceptions import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BettiTable:
    betti: tuple
    reduced: tuple

    def __getitem__(self, i):
        return self.betti[i] if 0 <= i < len(self.betti) else 0

    def as_dict(self):
        return {"betti": list(self.betti), "reduced": list(self.reduced)}

    def __str__(self):
        return "(" + ", ".join(str(b) for b in self.betti) + ")"


def _chains(X, field):
    return field if isinstance(field, ChainComplex) else ChainComplex(X, field)


def betti(X, field):
    if X.is_empty():
        return BettiTable((0,), tuple(reduced_betti_convention(0)))
    reduced = _chains(X, field).reduced_betti_within(X.vertex_mask)
    return BettiTable(tuple([reduced[0] + 1] + reduced[1:]), tuple(reduced))


def relative_betti(X, A, field):
    """Betti numbers of the pair (X, X[A]); `A` is a mask or a label iterable."""
    if not isinstance(A, int):
        A = X.mask_of(A, strict=False)
    if X.is_empty():
        return [0]
    return _chains(X, field).relative_betti(X.vertex_mask, A)


def inclusion_injective(X, A, j, field):
    if not isinstance(A, int):
        A = X.mask_of(A, strict=False)
    if X.is_empty():
        return True
    return _chains(X, field).injective_in_degree(A & X.vertex_mask, j)


def injectivity_profile(X, field, stop_at_first=False):
    """For every degree j, whether all induced inclusions are injective in H_j.

    Subsets are visited by ascending size then lexicographically; the first
    non-injective (A, j) in that order is kept per degree.
    """
    cc = _chains(X, field)
    d = X.dim
    witnesses = {}
    for A in subsets_by_cardinality(X.num_vertices):
        selected = cc.inside(A)
        for j in range(d):
            if j in witnesses:
                continue
            if not cc.injective_in_degree(A, j, selected):
                witnesses[j] = A
                logger.debug("inclusion not injective in degree %d on %s", j, X.labels_of(A))
                if stop_at_first:
                    return witnesses
    return witnesses


def orientable(X, field):
    report = structure_report(X)
    if not (report.closed and report.connected):
        raise PreconditionError("orientability is only decided for connected closed complexes")
    return betti(X, field)[X.dim] == 1


def reduced_betti_of_subcomplex(X, A, field):
    """Reduced Betti numbers of X[A]; the empty subcomplex gives (-1, 0, ..., 0)."""
    if not isinstance(A, int):
        A = X.mask_of(A, strict=False)
    if X.is_empty():
        return reduced_betti_convention(0)
    return _chains(X, field).reduced_betti_within(A & X.vertex_mask)
