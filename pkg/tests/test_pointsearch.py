import random

from cubicdescent.descent import DP4Surface
from cubicdescent.forms import ProjPoint, QuadForm
from cubicdescent.pointsearch import (brute_force_search,
                                      search, search_parallel, verify_point)

from conftest import PAPER_POINT, random_quadform


def _random_surface(rng, bound=3):
    while True:
        try:
            return DP4Surface(random_quadform(rng, 5, bound),
                              random_quadform(rng, 5, bound))
        except Exception:
            continue


def test_completeness_against_brute_force():
    rng = random.Random(101)
    for trial in range(20):
        v = _random_surface(rng)
        h = rng.choice([1, 2, 3])
        fast = search(v, h)
        slow = brute_force_search(v, h)
        assert fast.points == slow.points, (trial, h)


def test_soundness():
    rng = random.Random(55)
    for _ in range(5):
        v = _random_surface(rng)
        res = search(v, 3)
        for p in res.points:
            assert verify_point(v, p)


def test_mechanical_example():
    v = DP4Surface(QuadForm.from_poly_coeffs(5, {(0, 0): 1, (1, 1): -1}),
                   QuadForm.from_poly_coeffs(5, {(2, 2): 1, (3, 3): -1}))
    res = search(v, 1)
    assert ProjPoint([1, 1, 1, 1, 0]) in set(res.points)
    assert res.points == brute_force_search(v, 1).points


def test_empty_result():
    v = DP4Surface(QuadForm.diagonal([1, 1, 1, 1, 1]),
                   QuadForm.diagonal([1, 2, 1, 1, 1]))
    res = search(v, 3)
    assert res.count == 0 and res.points == []


def test_plane_at_infinity_strata():
    # double line x3^2 = x3*x4 = 0 relative pieces force (0:0:0:0:1)
    v = DP4Surface(QuadForm.from_poly_coeffs(5, {(0, 0): 1, (1, 2): 1, (3, 3): 1}),
                   QuadForm.from_poly_coeffs(5, {(0, 1): 1, (2, 2): 1, (3, 4): 1}))
    res = search(v, 2)
    assert ProjPoint([0, 0, 0, 0, 1]) in set(res.points)
    assert res.points == brute_force_search(v, 2).points


def test_partition_independence(paper_dp4):
    h = 12
    whole = search(paper_dp4, h)
    merged = set()
    for lo, hi in ((0, 3), (4, 7), (8, 12)):
        part = search(paper_dp4, h, x0_range=(lo, hi))
        merged.update(part.points)
    assert sorted(merged) == whole.points


def test_parallel_matches_serial(paper_dp4):
    h = 10
    serial = search(paper_dp4, h)
    par = search_parallel(paper_dp4, h, workers=2)
    assert par.points == serial.points


def test_verify_point_paper(paper_dp4):
    assert verify_point(paper_dp4, ProjPoint(PAPER_POINT))
    assert not verify_point(paper_dp4, ProjPoint([1, 0, 0, 0, 0]))


def test_object_dtype_fallback():
    # coefficients past the int64 audit threshold take the exact path
    big = 10 ** 12
    v = DP4Surface(QuadForm.from_poly_coeffs(
                       5, {(0, 0): big, (1, 1): -big, (2, 3): 1}),
                   QuadForm.from_poly_coeffs(
                       5, {(2, 2): big, (3, 3): -big, (0, 4): 1}))
    res = search(v, 2)
    assert res.points == brute_force_search(v, 2).points


def test_result_sorted_and_deduplicated():
    rng = random.Random(7)
    v = _random_surface(rng)
    res = search(v, 3)
    assert res.points == sorted(set(res.points))
    assert res.height_bound == 3
    assert res.elapsed_ms >= 0
