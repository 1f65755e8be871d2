"""Refined counts, the invariance audit, and the theorem conversions."""

import os
from fractions import Fraction

import pytest

from tropical_refine import (Degree, ExhaustedRetries, HalfLaurent,
                             MomentVector, NotDivisible, SplitMix64,
                             broccoli_from_r, build_delta_s, delta_d,
                             invariance_audit, q_analog, r_from_n,
                             random_generic_moments, refined_count,
                             w_pow_minus_inverse)
from tropical_refine.invariants import THREADS_ENV_VAR, moment_from_draw

W_MINUS = w_pow_minus_inverse(1)   # q^(1/2) - q^(-1/2)
W_PLUS = HalfLaurent({1: 1, -1: 1})


def test_splitmix64_published_vector():
    gen = SplitMix64(0)
    assert gen.next_u64() == 0xE220A8397B1DCDAF
    assert gen.next_u64() == 0x6E789E6AA1B965F4
    assert gen.next_u64() == 0x06C45D188009454F


def test_splitmix64_is_seed_deterministic():
    a = SplitMix64(123)
    b = SplitMix64(123)
    assert [a.next_u64() for _ in range(6)] == [b.next_u64() for _ in range(6)]
    assert SplitMix64(124).next_u64() != SplitMix64(123).next_u64()


def test_moment_from_draw_recipe():
    # moment = (draw mod 2001 - 1000) / (1 + draw mod 7)
    assert moment_from_draw(0) == Fraction(-1000)
    assert moment_from_draw(1000) == Fraction(0, 1)
    assert moment_from_draw(2001) == Fraction(-1000, 7)
    assert moment_from_draw(1001) == Fraction(1, 1 + 1001 % 7)


def test_refined_count_triangle(triangle, triangle_mu):
    n_trop, sols = refined_count(triangle, triangle_mu)
    assert n_trop == HalfLaurent(1)
    assert len(sols) == 1


def test_refined_count_square(square, square_mu):
    n_trop, sols = refined_count(square, square_mu)
    assert n_trop == HalfLaurent(1)
    assert len(sols) == 1


def test_refined_count_doubled_quad(doubled_quad, doubled_quad_mu):
    n_trop, _ = refined_count(doubled_quad, doubled_quad_mu)
    assert n_trop == W_PLUS


def test_random_generic_moments_deterministic(conic):
    assert random_generic_moments(conic, 42) == random_generic_moments(conic, 42)
    assert random_generic_moments(conic, 42) != random_generic_moments(conic, 43)


def test_random_generic_moments_triangle_never_rejects(triangle):
    # no bounded edges, so the very first draw must be accepted
    gen = SplitMix64(9)
    expect = MomentVector((moment_from_draw(gen.next_u64()),
                           moment_from_draw(gen.next_u64())))
    assert random_generic_moments(triangle, 9) == expect


def test_random_generic_moments_exhaustion(square):
    with pytest.raises(ExhaustedRetries):
        random_generic_moments(square, 0, max_retries=0)


def test_r_from_n_zero_pairs_is_multiplication():
    # s = 0: R = (q^(1/2) - q^(-1/2))^(m-2) * N
    n = q_analog(2)
    assert r_from_n(n, 4, 0) == W_MINUS ** 2 * n
    assert r_from_n(HalfLaurent(1), 3, 0) == W_MINUS


def test_r_from_n_conic_merged(conic_merged):
    mu = random_generic_moments(conic_merged, 1)
    n_trop, _ = refined_count(conic_merged, mu)
    assert n_trop == W_PLUS
    r = r_from_n(n_trop, 6, 1)
    assert r == HalfLaurent({2: 1, 0: -2, -2: 1})   # q - 2 + q^-1
    assert r == W_MINUS ** 2


def test_r_from_n_not_divisible_is_fatal():
    with pytest.raises(NotDivisible):
        r_from_n(HalfLaurent(1), 3, 1)


def test_broccoli_zero_pairs_is_n(triangle, triangle_mu):
    n_trop, _ = refined_count(triangle, triangle_mu)
    r = r_from_n(n_trop, 3, 0)
    assert broccoli_from_r(r, 3, 0) == n_trop


def test_broccoli_of_zero_is_zero():
    assert broccoli_from_r(HalfLaurent(0), 6, 1) == HalfLaurent(0)


def test_broccoli_identity_conic_merged(conic_merged):
    mu = random_generic_moments(conic_merged, 5)
    n_trop, _ = refined_count(conic_merged, mu)
    r = r_from_n(n_trop, 6, 1)
    bg = broccoli_from_r(r, 6, 1)
    q_plus = HalfLaurent({2: 1, -2: 1})
    assert bg * W_PLUS == n_trop * q_plus
    assert bg == q_plus


def test_invariance_audit_triangle(triangle):
    report = invariance_audit(triangle, trials=20, seed=0)
    assert report.n_trop == HalfLaurent(1)
    assert report.r_inv == W_MINUS
    assert report.broccoli == HalfLaurent(1)
    assert report.solutions_per_trial == (1,) * 20
    assert report.trials == 20
    assert report.s == 0 and report.m == 3


def test_invariance_audit_square(square):
    report = invariance_audit(square, trials=20, seed=0)
    assert report.n_trop == HalfLaurent(1)
    assert report.r_inv == W_MINUS ** 2


def test_invariance_audit_conic(conic):
    report = invariance_audit(conic, trials=10, seed=0)
    assert report.n_trop == HalfLaurent(1)
    assert report.r_inv == W_MINUS ** 4
    assert report.broccoli == HalfLaurent(1)


def test_invariance_audit_conic_merged(conic_merged):
    report = invariance_audit(conic_merged, trials=20, seed=0)
    assert report.n_trop == W_PLUS
    assert report.r_inv == W_MINUS ** 2
    assert report.broccoli == HalfLaurent({2: 1, -2: 1})
    assert report.s == 1 and report.m == 6
    assert sorted(report.delta.entries) == sorted(delta_d(2).entries)


def test_audit_report_symmetry_and_specialization(conic_merged):
    report = invariance_audit(conic_merged, trials=5, seed=3)
    assert report.n_trop.is_symmetric()
    assert report.r_inv.is_symmetric()
    for record in report.trial_records:
        counted = sum(s.det_abs for s in record.solutions)
        assert record.n_trop.eval_q1() == counted


def test_audit_json_shape(triangle):
    report = invariance_audit(triangle, trials=2, seed=1)
    data = report.to_json()
    assert data["trials"] == 2
    assert len(data["trialRecords"]) == 2
    assert data["refinedCount"] == [[0, 1]]
    assert data["realInvariantText"] == "q^1/2 - q^-1/2"
    for record in data["trialRecords"]:
        assert set(record) == {"seed", "moments", "solutionCount",
                               "refinedCount"}


def test_thread_cap_does_not_change_results(conic_merged):
    mu = random_generic_moments(conic_merged, 8)
    single, _ = refined_count(conic_merged, mu)
    old = os.environ.get(THREADS_ENV_VAR)
    os.environ[THREADS_ENV_VAR] = "4"
    try:
        threaded, _ = refined_count(conic_merged, mu)
    finally:
        if old is None:
            del os.environ[THREADS_ENV_VAR]
        else:
            os.environ[THREADS_ENV_VAR] = old
    assert threaded == single


def test_merged_degrees_share_a_polygon_but_not_a_count(conic, conic_merged):
    from tropical_refine import polygon_of
    assert polygon_of(conic).vertices == polygon_of(conic_merged).vertices
    full = invariance_audit(conic, trials=3, seed=0)
    merged = invariance_audit(conic_merged, trials=3, seed=0)
    assert full.n_trop != merged.n_trop


def test_build_delta_s_feeds_audit(conic):
    merged = build_delta_s(conic, (-1, 0), 1)
    report = invariance_audit(merged, trials=5, seed=0)
    assert report.n_trop == W_PLUS
