"""Generators: closed-form parameters, design verification, extensions, packing."""

from collections import Counter
from itertools import combinations
from math import comb

import pytest

from traceschemes import (
    BudgetExceeded,
    CongruenceViolated,
    NotADesign,
    ParamsInvalid,
    ag_lines,
    design_max_strength,
    extend_design,
    greedy_packing_ts,
    hermitian_unital,
    inversive_plane,
    pg_lines,
    trivial_ts,
    verify_design,
    verify_packing,
    verify_ts,
)


def _brute_design_check(s, tau, lam):
    counts = Counter()
    for b in s.blocks:
        for sub in combinations(b, tau):
            counts[sub] += 1
    every = all(counts[sub] == lam for sub in combinations(range(s.v), tau))
    return every


def test_trivial_ts_shapes():
    s = trivial_ts(10, 4)
    assert (s.v, s.w, s.m) == (10, 4, 7)
    assert all(b[:3] == (0, 1, 2) for b in s.blocks)
    assert trivial_ts(4, 4).m == 1
    s = trivial_ts(5, 1)
    assert s.m == 5 and all(len(b) == 1 for b in s.blocks)
    with pytest.raises(ParamsInvalid):
        trivial_ts(3, 4)


@pytest.mark.parametrize("n,q,v,w,m", [
    (2, 2, 7, 3, 7),
    (2, 3, 13, 4, 13),
    (2, 4, 21, 5, 21),
    (3, 2, 15, 3, 35),
])
def test_pg_lines_parameters(n, q, v, w, m):
    s = pg_lines(n, q)
    assert (s.v, s.w, s.m) == (v, w, m)
    assert verify_design(s, 2, 1).holds


def test_pg_lines_fano_brute_force():
    assert _brute_design_check(pg_lines(2, 2), 2, 1)


@pytest.mark.parametrize("n,q,v,w,m", [
    (2, 2, 4, 2, 6),
    (2, 3, 9, 3, 12),
    (2, 5, 25, 5, 30),
    (3, 2, 8, 2, 28),
])
def test_ag_lines_parameters(n, q, v, w, m):
    s = ag_lines(n, q)
    assert (s.v, s.w, s.m) == (v, w, m)
    assert verify_design(s, 2, 1).holds


def test_ag_lines_2_2_is_all_pairs():
    s = ag_lines(2, 2)
    assert s.blocks == tuple(combinations(range(4), 2))


@pytest.mark.parametrize("q,v,w,m", [
    (2, 5, 3, 10),
    (3, 10, 4, 30),
    (4, 17, 5, 68),
])
def test_inversive_plane_parameters(q, v, w, m):
    s = inversive_plane(q)
    assert (s.v, s.w, s.m) == (v, w, m)
    assert s.m == comb(v, 3) // comb(w, 3)
    assert verify_design(s, 3, 1).holds


def test_inversive_plane_q2_is_all_triples():
    s = inversive_plane(2)
    assert s.blocks == tuple(combinations(range(5), 3))
    assert _brute_design_check(s, 3, 1)


def test_inversive_plane_q8():
    s = inversive_plane(8)
    assert (s.v, s.w, s.m) == (65, 9, 520)
    assert verify_design(s, 3, 1).holds


@pytest.mark.parametrize("q,v,w,m", [
    (2, 9, 3, 12),
    (3, 28, 4, 63),
    (4, 65, 5, 208),
])
def test_hermitian_unital_parameters(q, v, w, m):
    s = hermitian_unital(q)
    assert (s.v, s.w, s.m) == (v, w, m)
    assert verify_design(s, 2, 1).holds


def test_generators_are_deterministic():
    assert pg_lines(2, 4) == pg_lines(2, 4)
    assert ag_lines(2, 3) == ag_lines(2, 3)
    assert inversive_plane(3) == inversive_plane(3)
    assert greedy_packing_ts(20, 4, 2) == greedy_packing_ts(20, 4, 2)


def test_extend_design_identity():
    base = pg_lines(2, 4)
    extended, cert = extend_design(base, 0, 2)
    assert extended == base
    assert (cert.d, cert.t, cert.tau) == (0, 2, 2)
    assert verify_ts(extended, 2, mode="certified", certificate=cert).holds


def test_extend_design_one_point():
    base = ag_lines(2, 5)
    extended, cert = extend_design(base, 1, 2)
    assert (extended.v, extended.w, extended.m) == (26, 6, 30)
    # the appended point sits in every block
    assert all(25 in b for b in extended.blocks)
    out = verify_ts(extended, 2, mode="certified", certificate=cert)
    assert out.holds
    assert verify_ts(extended, 2).holds


def test_extend_design_congruence_violations():
    with pytest.raises(CongruenceViolated):
        extend_design(pg_lines(2, 4), 4, 2)  # d must be <= t^2 - 1
    with pytest.raises(CongruenceViolated):
        extend_design(ag_lines(2, 3), 1, 2)  # width 3+1 != d+1 (mod 4)


def test_extend_design_requires_design():
    base = trivial_ts(12, 5)  # width 5 == 1 (mod 4) but not a 2-design
    with pytest.raises(NotADesign):
        extend_design(base, 0, 2)


def test_design_max_strength():
    assert design_max_strength(2, 5) == 2
    assert design_max_strength(3, 9) == 2
    assert design_max_strength(2, 2) == 1
    assert design_max_strength(2, 17) == 4
    with pytest.raises(ParamsInvalid):
        design_max_strength(1, 5)


def test_greedy_packing_basics():
    s = greedy_packing_ts(30, 5, 2)
    assert verify_packing(s, 2).holds
    assert s.m >= 5  # ceiling of 435/100
    s = greedy_packing_ts(10, 4, 2)
    assert s.m == 2  # pairwise-disjoint quota under colex order
    assert s.blocks == ((0, 1, 2, 3), (4, 5, 6, 7))
    s = greedy_packing_ts(5, 5, 2)
    assert s.m == 1


def test_greedy_packing_meets_guarantee_on_sample():
    for v, w, t in [(12, 4, 2), (16, 4, 2), (14, 5, 2), (18, 6, 2)]:
        s = greedy_packing_ts(v, w, t)
        tau = -(-w // (t * t))
        assert verify_packing(s, tau).holds
        bound = comb(v, tau) / comb(w, tau) ** 2
        assert s.m >= bound


def test_greedy_packing_budget():
    with pytest.raises(BudgetExceeded):
        greedy_packing_ts(40, 10, 2, budget=1000)
    with pytest.raises(ParamsInvalid):
        greedy_packing_ts(4, 5, 2)
