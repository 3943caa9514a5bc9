"""Reduction of a spanning set to at most 2d generators, and below.

The two-sided Caratheodory construction: pick a direction v in no linear
hull of d-1 or fewer input points, reduce v and -v separately, and take the
union.  The refinement step finds a spanning subset of size <= 2d-1 whenever
the input is not (at ray level) a plus-minus basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .caratheodory import cone_caratheodory
from .cones import FarkasWitness, SpanCertificate, spanning, spans_space
from .errors import NotSpanning, RecursionInvariantViolation
from .ratlin import in_linear_hull, neg, primitive_ray, rank


def generic_direction(points):
    """A direction v outside the linear hull of every <= d-1 input points.

    Walks the moment curve (1, t, t^2, ...) for t = 1, 2, ...; each finite
    rational input rules out only finitely many t, so the walk terminates.
    The returned v is verified exhaustively against all relevant subsets.
    """
    points = list(points)
    d = len(points[0])
    k = min(d - 1, len(points))
    subsets = [[points[i] for i in s] for s in combinations(range(len(points)), k)]
    t = 1
    while True:
        tf = Fraction(t)
        v = tuple(tf**i for i in range(d))
        if all(not in_linear_hull(v, s) for s in subsets):
            return v
        t += 1


@dataclass(frozen=True)
class ReducedSet:
    indices: tuple  # sorted positions into the input list
    certificate: SpanCertificate  # over the selected points, in index order


@dataclass(frozen=True)
class BasisCaseWitness:
    basis: tuple  # d linearly independent primitive rays e_1..e_d


def _require_spanning(points):
    res = spans_space(tuple(points))
    if isinstance(res, FarkasWitness):
        raise NotSpanning(res)


def steinitz_reduce(points) -> ReducedSet:
    """Spanning subset of size <= 2d, via two one-sided reductions."""
    points = [tuple(p) for p in points]
    _require_spanning(points)
    v = generic_direction(points)
    idx_pos, _ = cone_caratheodory(v, points)
    idx_neg, _ = cone_caratheodory(neg(v), points)
    indices = tuple(sorted(set(idx_pos) | set(idx_neg)))
    chosen = tuple(points[i] for i in indices)
    cert = spans_space(chosen)
    if not isinstance(cert, SpanCertificate):  # pragma: no cover
        raise RecursionInvariantViolation("two-sided reduction failed to span")
    return ReducedSet(indices, cert)


def basis_case(points):
    """The d primitive basis rays if the rays of points are exactly +-e_1..+-e_d.

    Returns None otherwise.  Duplicate points and positive rescalings are
    identified: the test runs at ray level.
    """
    points = [tuple(p) for p in points]
    d = len(points[0])
    rays = []
    for p in points:
        r = primitive_ray(p)
        if r not in rays:
            rays.append(r)
    if len(rays) != 2 * d:
        return None
    ray_set = set(rays)
    if any(neg(r) not in ray_set for r in rays):
        return None
    reps = []
    for r in rays:
        if neg(r) not in reps:
            reps.append(r)
    if len(reps) != d or rank(reps) != d:
        return None
    return tuple(reps)


def refine_below_2d(points):
    """Either a spanning subset with <= 2d-1 points or a BasisCaseWitness.

    Search runs over distinct rays, smallest subset sizes first (d+1 up to
    2d-1), in lexicographic index order, so the result is deterministic.
    """
    points = [tuple(p) for p in points]
    d = len(points[0])
    reduced = steinitz_reduce(points)
    if len(reduced.indices) <= 2 * d - 1:
        return reduced

    basis = basis_case(points)
    if basis is not None:
        return BasisCaseWitness(basis)

    # distinct rays, first occurrence keeps the original index
    ray_idx = []
    seen = set()
    for i, p in enumerate(points):
        r = primitive_ray(p)
        if r not in seen:
            seen.add(r)
            ray_idx.append(i)
    for size in range(d + 1, 2 * d):
        for combo in combinations(ray_idx, size):
            chosen = tuple(points[i] for i in combo)
            if spanning(chosen):
                cert = spans_space(chosen)
                return ReducedSet(tuple(combo), cert)
    raise RecursionInvariantViolation(
        "no small spanning subset although the input is not a plus-minus basis"
    )  # pragma: no cover
