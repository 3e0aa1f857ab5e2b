from fractions import Fraction
from math import comb

from complexes.complex import vertex_link
from complexes.exceptions import EmptyComplexError
from complexes.structure import is_neighbourly
from complexes.vectors import RationalVector
from core.parallel import parallel_map
from homology.chains import ChainComplex, subsets_by_cardinality
from homology.exceptions import PreconditionError

from .sigma import check_capacity, sigma_vector


def _link_sigma(label, X, field, cap):
    return sigma_vector(vertex_link(X, label), field, cap)


def link_sigmas(X, field, cap=None, workers=1):
    return dict(zip(X.vertices, parallel_map(_link_sigma, X.vertices, workers, X=X, field=field, cap=cap)))


def mu_vector(X, field, cap=None, workers=1):
    """mu_0 = 1, mu_i = [i = 1] + (1/m) * sum over vertices of sigma_{i-1}(link)."""
    if X.is_empty():
        raise EmptyComplexError("the mu-vector needs at least one vertex")
    m, d = X.num_vertices, X.dim
    sigmas = link_sigmas(X, field, cap, workers)
    mu = [Fraction(1)]
    for i in range(1, d + 1):
        total = sum((sigmas[x][i - 1] for x in X.vertices), Fraction(0))
        mu.append((1 if i == 1 else 0) + total / m)
    return RationalVector(tuple(mu))


def _relative_sums(size, chains):
    m = chains.complex.num_vertices
    totals = [0] * (chains.dim + 1)
    for B in subsets_by_cardinality(m, [size]):
        rest = B
        while rest:
            low = rest & -rest
            rest ^= low
            for i, value in enumerate(chains.relative_betti(B, B ^ low)):
                totals[i] += value
    return totals


def mu_via_relative(X, field, cap=None, workers=1):
    """mu from relative Betti numbers of consecutive induced pairs (2-neighbourly X only)."""
    if X.is_empty():
        raise EmptyComplexError("the mu-vector needs at least one vertex")
    if not is_neighbourly(X, 2):
        raise PreconditionError("the relative mu formula holds for 2-neighbourly complexes only")
    m, d = X.num_vertices, X.dim
    check_capacity(m, cap)
    chains = ChainComplex(X, field)
    sizes = list(range(1, m + 1))
    per_size = parallel_map(_relative_sums, sizes, workers, chains=chains)
    mu = []
    for i in range(d + 1):
        total = sum((Fraction(row[i], comb(m - 1, j - 1)) for j, row in zip(sizes, per_size)), Fraction(0))
        mu.append(total / m)
    return RationalVector(tuple(mu))
