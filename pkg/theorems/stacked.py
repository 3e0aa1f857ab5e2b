import logging
from dataclasses import dataclass

from django.conf import settings

from complexes.complex import boundary_complex, popcount, relabel, skeleton
from complexes.exceptions import StructureError
from complexes.structure import structure_report

logger = logging.getLogger(__name__)

FOUND = "found"
UNKNOWN = "unknown"
NO = "no"


def stacked_skeleton_dim(ball_dim, k):
    """Skeleton compared for k-stackedness of a ball of dimension `ball_dim`.

    A (d+1)-ball is k-stacked when its (d-k)-skeleton lies in its boundary;
    with D = d+1 that is the (D-1-k)-skeleton.
    """
    return ball_dim - 1 - k


def k_stacked_ball_check(B, k):
    report = structure_report(B)
    if not (report.pure and report.pseudomanifold):
        raise StructureError("a stacked-ball candidate must be a pure pseudomanifold")
    boundary = boundary_complex(B)
    if boundary.is_empty():
        raise StructureError("a ball candidate needs a nonempty boundary")
    r = stacked_skeleton_dim(B.dim, k)
    return skeleton(B, r) == skeleton(boundary, r)


def k_stacked_sphere_check(S, k, B, mapping=None):
    """B is a k-stacked ball whose boundary is S (after relabelling B by `mapping`)."""
    if mapping:
        B = relabel(B, mapping)
    if B.dim != S.dim + 1:
        raise StructureError(f"a {S.dim}-sphere bounds a {S.dim + 1}-ball, witness has dimension {B.dim}")
    try:
        if boundary_complex(B) != S:
            return False
        return k_stacked_ball_check(B, k)
    except StructureError:
        return False


@dataclass(frozen=True)
class ShellingResult:
    verdict: str
    order: tuple = None
    nodes: int = 0

    def as_dict(self):
        out = {"verdict": self.verdict, "nodes": self.nodes}
        if self.order is not None:
            out["order"] = [list(f) for f in self.order]
        return out


def _attaches(facet, earlier):
    """facet meets the union of `earlier` in a pure codimension-1 subcomplex."""
    if not earlier:
        return True
    size = popcount(facet)
    ridges = [facet & g for g in earlier if popcount(facet & g) == size - 1]
    if not ridges:
        return False
    return all(any(facet & g & ~r == 0 for r in ridges) for g in earlier)


def is_shelling(facets):
    return all(_attaches(f, facets[:n]) for n, f in enumerate(facets))


def shelling_search(B, budget=None):
    budget = settings.SHELLING_BUDGET if budget is None else budget
    if not B.is_pure():
        raise StructureError("shellings are searched on pure complexes")
    facets = list(B.facets)
    order, used = [], [False] * len(facets)
    nodes = 0
    complete = True

    def extend():
        nonlocal nodes, complete
        if len(order) == len(facets):
            return True
        for n, facet in enumerate(facets):
            if used[n] or not _attaches(facet, order):
                continue
            nodes += 1
            if nodes > budget:
                complete = False
                return False
            used[n] = True
            order.append(facet)
            if extend():
                return True
            order.pop()
            used[n] = False
            if not complete:
                return False
        return False

    if extend():
        return ShellingResult(FOUND, tuple(B.labels_of(f) for f in order), nodes)
    return ShellingResult(NO if complete else UNKNOWN, None, nodes)
