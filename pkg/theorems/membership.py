import logging
from dataclasses import dataclass, field

from complexes.complex import vertex_link
from complexes.exceptions import StructureError
from complexes.structure import structure_report
from core.parallel import parallel_map
from flips.certificates import stacked_ball_from_certificate
from flips.search import CERTIFICATE, NO, ReductionResult, stellated_reduction

from .exceptions import HypothesisError
from .stacked import is_shelling, k_stacked_sphere_check

logger = logging.getLogger(__name__)

YES = "yes"
UNKNOWN = "unknown"
CLASS_W = "w"
CLASS_K = "k"


@dataclass(frozen=True)
class MembershipVerdict:
    """Tri-state answer for W_k(d) / K_k(d) with the per-link evidence found."""

    verdict: str
    klass: str
    k: int
    certificates: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    non_spheres: dict = field(default_factory=dict)
    states: int = 0

    def as_dict(self):
        return {
            "verdict": self.verdict,
            "class": self.klass.upper(),
            "k": self.k,
            "certified_links": sorted(set(self.certificates) | set(self.witnesses)),
            "non_sphere_links": self.non_spheres,
            "states": self.states,
        }


def _reduce(link, k, budget, seed):
    try:
        return stellated_reduction(link, k, budget, seed)
    except StructureError as exc:
        return ReductionResult(NO, reason=str(exc))


def _reduce_link(label, M, k, budget, seed):
    return _reduce(vertex_link(M, label), k, budget, seed)


def _aggregate(results):
    if all(r.verdict == CERTIFICATE for r in results.values()):
        return YES
    if any(r.verdict == NO for r in results.values()):
        return NO
    return UNKNOWN


def link_reductions(M, k, budget=None, seed=0, workers=1):
    results = parallel_map(_reduce_link, M.vertices, workers, M=M, k=k, budget=budget, seed=seed)
    return dict(zip(M.vertices, results))


def witness_ball(link, k, reduction):
    """Stacked ball grown from a link certificate, kept only if it verifies and shells."""
    generating = reduction.certificate.reversed()
    ball, order = stacked_ball_from_certificate(generating)
    if not k_stacked_sphere_check(link, k, ball):
        return None
    if not is_shelling([ball.mask_of(f) for f in order]):
        logger.warning("grown ball for a link did not shell in attachment order")
        return None
    return ball


def class_membership(M, k, klass=CLASS_W, budget=None, witnesses=None, seed=0, workers=1):
    report = structure_report(M)
    if not (report.closed and report.connected):
        raise HypothesisError("class membership is decided for connected closed complexes")
    klass = klass.lower()
    if klass not in (CLASS_W, CLASS_K):
        raise HypothesisError(f"unknown class {klass!r}; use w or k")

    if klass == CLASS_W:
        results = link_reductions(M, k, budget, seed, workers)
        certificates = {x: r.certificate for x, r in results.items() if r.verdict == CERTIFICATE}
        non_spheres = {x: r.reason for x, r in results.items() if r.reason}
        return MembershipVerdict(
            _aggregate(results), klass, k, certificates=certificates, non_spheres=non_spheres,
            states=sum(r.states for r in results.values()),
        )

    witnesses = dict(witnesses or {})
    found, non_spheres, states = {}, {}, 0
    link_dim = M.dim - 1
    for x in M.vertices:
        link = vertex_link(M, x)
        if x in witnesses and k_stacked_sphere_check(link, k, witnesses[x]):
            found[x] = witnesses[x]
            continue
        if link_dim < 2 * k - 1:
            continue
        reduction = _reduce(link, k, budget, seed)
        states += reduction.states
        if reduction.reason:
            non_spheres[x] = reduction.reason
            continue
        if reduction.verdict == CERTIFICATE:
            ball = witness_ball(link, k, reduction)
            if ball is not None:
                found[x] = ball
    if non_spheres:
        verdict = NO
    else:
        verdict = YES if len(found) == M.num_vertices else UNKNOWN
    return MembershipVerdict(verdict, klass, k, witnesses=found, non_spheres=non_spheres, states=states)
