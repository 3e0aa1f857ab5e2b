import logging
from fractions import Fraction
from math import comb

from django.conf import settings

from complexes.complex import bits
from complexes.exceptions import CapacityError
from complexes.vectors import RationalVector
from core.parallel import parallel_map, resolve_workers
from homology.chains import ChainComplex, reduced_betti_convention

logger = logging.getLogger(__name__)


def check_capacity(m, cap=None):
    default = settings.SIGMA_EXHAUSTIVE_CAP
    cap = default if cap is None else cap
    if cap > settings.SIGMA_CAP_LIMIT:
        raise CapacityError(f"cap {cap} is above the hard limit of {settings.SIGMA_CAP_LIMIT} vertices")
    if m > cap:
        raise CapacityError(
            f"{m} vertices exceed the exhaustive cap of {cap}; pass cap={m} (up to {settings.SIGMA_CAP_LIMIT}) to override"
        )
    if m > default:
        logger.warning("sweeping 2^%d subsets above the default cap of %d; expect a long run", m, default)
    return cap


def gray(n):
    return n ^ (n >> 1)


class SubsetSweep:
    """Induced-subcomplex Betti sweep in Gray-code order.

    Consecutive subsets differ by one vertex, so the faces inside the current
    subset are updated from the faces through that vertex only; ranks are
    recomputed from scratch each time.
    """

    def __init__(self, chains):
        self.chains = chains
        self.dim = chains.dim
        self.m = chains.complex.num_vertices
        self.through = [[[] for _ in range(self.dim + 1)] for _ in range(self.m)]
        for i, level in enumerate(chains.faces):
            for n, face in enumerate(level):
                for v in bits(face):
                    self.through[v][i].append((n, face))

    def reduced_betti(self, A, inside):
        if A == 0:
            return reduced_betti_convention(self.dim)
        chains = self.chains
        ranks = [1] + [chains.rank(i, inside[i]) for i in range(1, self.dim + 1)] + [0]
        return [len(inside[i]) - ranks[i] - ranks[i + 1] for i in range(self.dim + 1)]

    def sums(self, chunk):
        """Per-cardinality integer sums of beta~_i over Gray indices [start, stop)."""
        start, stop = chunk
        totals = [[0] * (self.dim + 1) for _ in range(self.m + 1)]
        A = gray(start)
        inside = [set(level) for level in self.chains.inside(A)]
        for n in range(start, stop):
            if n > start:
                v = (n & -n).bit_length() - 1
                A ^= 1 << v
                if A >> v & 1:
                    for i in range(self.dim + 1):
                        inside[i].update(idx for idx, face in self.through[v][i] if face & ~A == 0)
                else:
                    for i in range(self.dim + 1):
                        inside[i].difference_update(idx for idx, _ in self.through[v][i])
            size = A.bit_count()
            for i, value in enumerate(self.reduced_betti(A, [list(s) for s in inside])):
                totals[size][i] += value
        return totals


def _chunk_sums(chunk, sweep):
    return sweep.sums(chunk)


def subset_betti_sums(X, field, workers=1):
    """totals[j][i] = sum over |A| = j of beta~_i(X[A])."""
    sweep = SubsetSweep(ChainComplex(X, field))
    total = 1 << X.num_vertices
    pieces = max(1, min(resolve_workers(workers) * 4, total))
    bounds = [total * p // pieces for p in range(pieces + 1)]
    chunks = [(bounds[p], bounds[p + 1]) for p in range(pieces) if bounds[p] < bounds[p + 1]]
    merged = [[0] * (sweep.dim + 1) for _ in range(sweep.m + 1)]
    for part in parallel_map(_chunk_sums, chunks, workers, sweep=sweep):
        for j, row in enumerate(part):
            for i, value in enumerate(row):
                merged[j][i] += value
    return merged


def sigma_vector(X, field, cap=None, workers=1):
    m, d = X.num_vertices, X.dim
    check_capacity(m, cap)
    if X.is_empty():
        return RationalVector((Fraction(reduced_betti_convention(0)[0]),))
    totals = subset_betti_sums(X, field, workers)
    return RationalVector(
        tuple(sum((Fraction(totals[j][i], comb(m, j)) for j in range(m + 1)), Fraction(0)) for i in range(d + 1))
    )
