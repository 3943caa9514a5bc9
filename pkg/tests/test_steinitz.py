"""Two-sided reduction to 2d generators and the below-2d refinement."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from colorsteinitz.cones import SpanCertificate, spanning
from colorsteinitz.errors import NotSpanning
from colorsteinitz.ratlin import in_linear_hull
from colorsteinitz.steinitz import (
    BasisCaseWitness,
    ReducedSet,
    generic_direction,
    refine_below_2d,
    steinitz_reduce,
)

from conftest import pt as P, units


class TestGenericDirection:
    def test_off_both_axes(self):
        v = generic_direction(units(2))
        assert v[0] != 0 and v[1] != 0

    def test_single_point(self):
        v = generic_direction([P(1, 0)])
        assert not in_linear_hull(v, [P(1, 0)])

    def test_exhaustive_contract_3d(self):
        rng = random.Random(31)
        pts = []
        while len(pts) < 6:
            p = tuple(Fraction(rng.randint(-4, 4)) for _ in range(3))
            if any(p):
                pts.append(p)
        v = generic_direction(pts)
        for s in combinations(pts, 2):
            assert not in_linear_hull(v, list(s))


def _random_spanning(rng, d, n):
    while True:
        pts = []
        while len(pts) < n:
            p = tuple(Fraction(rng.randint(-3, 3)) for _ in range(d))
            if any(p):
                pts.append(p)
        if spanning(tuple(pts)):
            return pts


class TestSteinitzReduce:
    def test_basis_input_keeps_all(self):
        res = steinitz_reduce(units(2))
        assert len(res.indices) == 4
        assert isinstance(res.certificate, SpanCertificate)

    def test_with_extra_point(self):
        pts = list(units(2)) + [P(1, 1)]
        res = steinitz_reduce(pts)
        assert len(res.indices) <= 4
        chosen = tuple(pts[i] for i in res.indices)
        assert res.certificate.verify(chosen)

    def test_dimension_one(self):
        res = steinitz_reduce([P(1), P(-1)])
        assert res.indices == (0, 1)

    def test_not_spanning_raises(self):
        with pytest.raises(NotSpanning) as exc:
            steinitz_reduce([P(1, 0), P(0, 1)])
        assert exc.value.witness.verify([P(1, 0), P(0, 1)])

    def test_random_bound_and_certificate(self):
        rng = random.Random(41)
        for d in (2, 3, 4):
            for _ in range(10):
                pts = _random_spanning(rng, d, d + 3)
                res = steinitz_reduce(pts)
                assert len(res.indices) <= 2 * d
                chosen = tuple(pts[i] for i in res.indices)
                assert res.certificate.verify(chosen)


class TestRefineBelow2d:
    def test_basis_case_witness(self):
        res = refine_below_2d(units(2))
        assert isinstance(res, BasisCaseWitness)
        assert len(res.basis) == 2

    def test_basis_case_ray_level(self):
        # rescaled and duplicated rays still count as the plus-minus basis
        pts = [P(2, 0), P(-1, 0), P(0, 3), P(0, "-1/2"), P(4, 0)]
        res = refine_below_2d(pts)
        assert isinstance(res, BasisCaseWitness)

    def test_extra_point_breaks_basis_case(self):
        pts = list(units(2)) + [P(1, 1)]
        res = refine_below_2d(pts)
        assert isinstance(res, ReducedSet)
        assert len(res.indices) <= 3
        chosen = tuple(pts[i] for i in res.indices)
        assert res.certificate.verify(chosen)

    def test_simplex_already_small(self):
        pts = [P(1, 0), P(0, 1), P(-1, -1)]
        res = refine_below_2d(pts)
        assert isinstance(res, ReducedSet)
        assert res.indices == (0, 1, 2)

    def test_oracle_cross_check_d2(self):
        """Exhaustive d=2 check against brute-force minimum subset search."""
        rays = [P(x, y) for x in range(-2, 3) for y in range(-2, 3) if (x, y) != (0, 0)]
        rng = random.Random(53)
        cases = 0
        while cases < 40:
            pts = rng.sample(rays, rng.randint(5, 7))
            if not spanning(tuple(pts)):
                continue
            cases += 1
            res = refine_below_2d(pts)
            brute_has_small = any(
                spanning(tuple(pts[i] for i in combo))
                for k in (3,)
                for combo in combinations(range(len(pts)), k)
            )
            if isinstance(res, BasisCaseWitness):
                assert not brute_has_small
            else:
                assert len(res.indices) <= 3
                assert brute_has_small
