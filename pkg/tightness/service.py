import logging
from dataclasses import dataclass, field as dc_field

from django.conf import settings

from complexes.structure import is_connected, is_neighbourly
from core.parallel import parallel_map, resolve_workers
from flips.moves import enumerate_moves
from homology.betti import betti, injectivity_profile
from homology.chains import ChainComplex, subsets_by_cardinality
from sigmamu.mu import mu_vector
from sigmamu.sigma import check_capacity

from .exceptions import HypothesisError, InconsistencyError

logger = logging.getLogger(__name__)

SKIPPED = "skipped"


@dataclass(frozen=True)
class DirectResult:
    tight: bool
    witness: tuple = None
    reason: str = ""

    def as_dict(self):
        out = {"tight": self.tight}
        if self.witness is not None:
            out["witness"] = {"subset": list(self.witness[0]), "degree": self.witness[1]}
        if self.reason:
            out["reason"] = self.reason
        return out


@dataclass(frozen=True)
class TightnessReport:
    field: object
    two_neighbourly: bool
    mu: object
    betti: object
    mu_equals_beta: bool
    direct_result: object = SKIPPED
    failing_witness: tuple = None

    @property
    def tight(self):
        return self.two_neighbourly and self.mu_equals_beta

    def as_dict(self):
        out = {
            "field": str(self.field),
            "tight": self.tight,
            "two_neighbourly": self.two_neighbourly,
            "mu": self.mu,
            "betti": list(self.betti.betti),
            "mu_equals_beta": self.mu_equals_beta,
            "direct_result": self.direct_result if isinstance(self.direct_result, str) else self.direct_result.tight,
        }
        if self.failing_witness is not None:
            out["witness"] = {"subset": list(self.failing_witness[0]), "degree": self.failing_witness[1]}
        return out


def _first_failure(chunk, chains):
    for position, A in chunk:
        selected = chains.inside(A)
        for j in range(chains.dim):
            if not chains.injective_in_degree(A, j, selected):
                return position, j
    return None


def tight_direct(X, field, cap=None, workers=1):
    """Exhaustive check of every induced inclusion, smallest subsets first."""
    if not is_connected(X):
        return DirectResult(False, None, "not connected")
    check_capacity(X.num_vertices, cap)
    chains = ChainComplex(X, field)
    pieces = resolve_workers(workers)
    for size in range(1, X.num_vertices + 1):
        subsets = list(enumerate(subsets_by_cardinality(X.num_vertices, [size])))
        step = max(1, -(-len(subsets) // pieces))
        chunks = [subsets[s:s + step] for s in range(0, len(subsets), step)]
        failures = [f for f in parallel_map(_first_failure, chunks, workers, chains=chains) if f]
        if failures:
            position, j = min(failures)
            witness = (X.labels_of(subsets[position][1]), j)
            logger.debug("first non-injective inclusion: %s in degree %d", witness[0], j)
            return DirectResult(False, witness, "inclusion not injective")
    return DirectResult(True)


def tight_mu(X, field, cap=None, workers=1, cross_check=None):
    """Tightness as 2-neighbourliness plus mu = beta."""
    two = is_neighbourly(X, 2) and is_connected(X)
    mu = mu_vector(X, field, cap, workers)
    table = betti(X, field)
    equal = all(mu[i] == table[i] for i in range(X.dim + 1))
    direct = SKIPPED
    witness = None
    if cross_check is None:
        cross_check = settings.TIGHTNESS_CROSS_CHECK and X.num_vertices <= settings.TIGHTNESS_CROSS_CHECK_CAP
    if cross_check:
        direct = tight_direct(X, field, cap, workers)
        witness = direct.witness
        if direct.tight != (two and equal):
            raise InconsistencyError(
                f"direct check says tight={direct.tight}, mu criterion says tight={two and equal}"
            )
    return TightnessReport(field, two, mu, table, equal, direct, witness)


@dataclass(frozen=True)
class MorseRow:
    part: str
    degree: int
    lhs: object
    rhs: object
    relation: str
    holds: bool
    detail: dict = dc_field(default_factory=dict)

    def as_dict(self):
        return {"part": self.part, "degree": self.degree, "lhs": self.lhs, "rhs": self.rhs,
                "relation": self.relation, "holds": self.holds, **self.detail}


@dataclass(frozen=True)
class MorseReport:
    field: object
    mu: object
    betti: object
    rows: tuple
    witnesses: dict
    manifold_asserted: bool = False

    @property
    def holds(self):
        return all(row.holds for row in self.rows)

    def part(self, name):
        return [row for row in self.rows if row.part == name]

    def as_dict(self):
        return {
            "field": str(self.field),
            "mu": self.mu,
            "betti": list(self.betti.betti),
            "holds": self.holds,
            "rows": [row.as_dict() for row in self.rows],
            "witnesses": {j: {"subset": list(w[0]), "degree": j} for j, w in self.witnesses.items()},
            "manifold": "caller-asserted" if self.manifold_asserted else "not asserted",
        }


def _alternating(values, j):
    return sum((-1) ** (j - i) * values[i] for i in range(j + 1))


def morse_report(X, field, cap=None, workers=1, manifold=False):
    """The Morse relations between mu and beta, each equivalence paired with a direct check.

    The duality rows (e) are added only when the caller asserts that X is a
    manifold; a closed pseudomanifold is not enough.
    """
    if not is_neighbourly(X, 2):
        raise HypothesisError("the Morse relations are stated for 2-neighbourly complexes")
    d = X.dim
    mu = mu_vector(X, field, cap, workers)
    table = betti(X, field)
    beta = [table[i] for i in range(d + 1)]
    failing = injectivity_profile(X, field)
    injective = {j: j not in failing for j in range(-1, d + 1)}
    rows = []
    for j in range(d + 1):
        lhs, rhs = _alternating(mu, j), _alternating(beta, j)
        relation = "=" if j == d else ">="
        rows.append(MorseRow("a", j, lhs, rhs, relation, lhs == rhs if j == d else lhs >= rhs))
    for j in range(d + 1):
        rows.append(MorseRow("b", j, mu[j], beta[j], ">=", mu[j] >= beta[j]))
    for j in range(d + 1):
        equal = _alternating(mu, j) == _alternating(beta, j)
        rows.append(MorseRow("c", j, equal, injective[j], "iff", equal == injective[j],
                             {"alternating_equal": equal, "injective": injective[j]}))
    for j in range(d + 1):
        equal = mu[j] == beta[j]
        both = injective[j] and injective[j - 1]
        rows.append(MorseRow("d", j, equal, both, "iff", equal == both,
                             {"mu_equals_beta": equal, "injective": both}))
    if manifold and beta[d] == 1:
        for j in range(d + 1):
            rows.append(MorseRow("e", j, beta[d - j], beta[j], "=", beta[d - j] == beta[j]))
            rows.append(MorseRow("e", j, mu[d - j], mu[j], "=", mu[d - j] == mu[j]))
    witnesses = {j: (X.labels_of(A), j) for j, A in failing.items()}
    return MorseReport(field, mu, table, tuple(rows), witnesses, bool(manifold))


def proper_moves_blocked(X):
    """No bistellar move of non-zero index applies."""
    return not enumerate_moves(X, range(1, X.dim + 1))


class TightnessService:
    def __init__(self, complex_, field, workers=1, cap=None):
        self.complex = complex_
        self.field = field
        self.workers = workers
        self.cap = cap

    def call(self, method="mu"):
        if method == "direct":
            return tight_direct(self.complex, self.field, self.cap, self.workers)
        if method == "mu":
            return tight_mu(self.complex, self.field, self.cap, self.workers)
        raise HypothesisError(f"unknown tightness method {method!r}")
