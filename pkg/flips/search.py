import logging
import math
import random
from dataclasses import dataclass

from django.conf import settings

from complexes.complex import MAX_VERTICES, is_standard_sphere, standard_sphere
from complexes.exceptions import StructureError
from complexes.structure import euler_characteristic, structure_report
from complexes.vectors import f_vector

from .certificates import FlipCertificate
from .moves import apply_move, enumerate_moves

logger = logging.getLogger(__name__)

CERTIFICATE = "certificate"
UNKNOWN = "unknown"
NO = "no"

RESTARTS = 8
START_TEMPERATURE = 2.0
COOLING = 0.995


@dataclass(frozen=True)
class ReductionResult:
    verdict: str
    certificate: FlipCertificate = None
    states: int = 0
    reason: str = ""

    def as_dict(self):
        out = {"verdict": self.verdict, "states": self.states}
        if self.reason:
            out["reason"] = self.reason
        if self.certificate is not None:
            out["moves"] = [m.as_dict() for m in self.certificate.moves]
        return out


def random_stellated_sphere(d, k, n_moves, seed):
    """S^d_{d+2} after `n_moves` uniformly random moves of index < k."""
    if not 1 <= k <= d + 1:
        raise StructureError(f"k must lie in 1..{d + 1}")
    rng = random.Random(seed)
    start = current = standard_sphere(d)
    moves = []
    for step in range(n_moves):
        indices = range(k) if current.num_vertices < MAX_VERTICES else range(1, k)
        candidates = enumerate_moves(current, indices)
        if not candidates:
            logger.warning("no move of index < %d after %d steps; certificate is shorter", k, step)
            break
        move = rng.choice(candidates)
        current = apply_move(current, move)
        moves.append(move)
    return current, FlipCertificate(start, tuple(moves), current)


def _mask_order(X, move):
    return (X.mask_of(move.alpha), X.mask_of(move.beta))


def _energy(X):
    return sum(f_vector(X))


def _anneal(X, indices, rng, steps):
    """One annealing walk; returns (path, end, visited) with end standard on success."""
    current, path = X, []
    temperature = START_TEMPERATURE
    visited = 0
    for _ in range(steps):
        if is_standard_sphere(current):
            return path, current, visited
        candidates = enumerate_moves(current, indices)
        if not candidates:
            break
        removals = [m for m in candidates if m.index == current.dim]
        if removals:
            move = min(removals, key=lambda m: _mask_order(current, m))
            current = apply_move(current, move)
        else:
            move = rng.choice(candidates)
            proposal = apply_move(current, move)
            delta = _energy(proposal) - _energy(current)
            if delta > 0 and rng.random() >= math.exp(-delta / temperature):
                visited += 1
                temperature *= COOLING
                continue
            current = proposal
        path.append(move)
        visited += 1
        temperature *= COOLING
    return path, current, visited


def _exhaustive(X, indices, budget):
    """Depth-first search over all reachable complexes, vertex removals first.

    Returns (path or None, visited, complete).
    """
    seen = {X}
    stack = [(X, iter(_ordered(X, indices)), [])]
    while stack:
        current, options, path = stack[-1]
        if is_standard_sphere(current):
            return path, len(seen), True
        move = next(options, None)
        if move is None:
            stack.pop()
            continue
        nxt = apply_move(current, move)
        if nxt in seen:
            continue
        if len(seen) >= budget:
            return None, len(seen), False
        seen.add(nxt)
        stack.append((nxt, iter(_ordered(nxt, indices)), path + [move]))
    return None, len(seen), True


def _ordered(X, indices):
    moves = enumerate_moves(X, indices)
    return sorted(moves, key=lambda m: (-m.index, _mask_order(X, m)))


def stellated_reduction(X, k, budget=None, seed=0):
    """Search for moves of index > d-k taking X to a standard sphere.

    Annealing restarts run first; the rest of the budget goes to an exhaustive
    search that can also prove there is no such reduction.
    """
    budget = settings.REDUCTION_BUDGET if budget is None else budget
    report = structure_report(X)
    d = X.dim
    if not (report.closed and report.pseudomanifold):
        raise StructureError("stellated reduction needs a closed pseudomanifold")
    if euler_characteristic(X) != 1 + (-1) ** d:
        raise StructureError(f"Euler characteristic {euler_characteristic(X)} rules out a {d}-sphere")
    indices = [t for t in range(1, d + 1) if t > d - k]
    if is_standard_sphere(X):
        return ReductionResult(CERTIFICATE, FlipCertificate(X, (), X), 1)

    spent = 0
    share = max(1, budget // (2 * RESTARTS))
    for restart in range(RESTARTS):
        if not indices or spent >= budget // 2:
            break
        path, end, visited = _anneal(X, indices, random.Random(seed + restart), share)
        spent += visited
        if is_standard_sphere(end):
            logger.debug("reduction found on restart %d after %d states", restart, spent)
            return ReductionResult(CERTIFICATE, FlipCertificate(X, tuple(path), end), spent)

    path, visited, complete = _exhaustive(X, indices, max(1, budget - spent))
    spent += visited
    if path is not None:
        certificate = FlipCertificate(X, tuple(path), certificate_end(X, path))
        return ReductionResult(CERTIFICATE, certificate, spent)
    if complete and k <= d:
        return ReductionResult(NO, None, spent)
    logger.info("reduction budget of %d states exhausted", budget)
    return ReductionResult(UNKNOWN, None, spent)


def certificate_end(X, path):
    for move in path:
        X = apply_move(X, move)
    return X
