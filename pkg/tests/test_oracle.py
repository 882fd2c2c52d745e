"""Oracle machinery: optimum search, proof traces, configurations."""

import random
from itertools import combinations

import pytest

from traceschemes import (
    CffCover,
    MinimalConfigTooLarge,
    ParamsInvalid,
    ProofTraceIpps,
    ProofTraceTs,
    SchemeParams,
    TraceBlocked,
    check_configuration,
    check_witness,
    cross_check_bounds,
    exhaustive_optimal,
    ipps_violation_from_missing_own_subsets,
    new_set_system,
    pg_lines,
    trivial_ts,
    ts_upper_general,
    ts_violation_from_cff_failure,
    verify_cff,
    verify_ipps,
    verify_ts,
)


def _triples(v):
    return new_set_system(v, list(combinations(range(v), 3)))


# --- exhaustive optimum -----------------------------------------------------


def test_search_matches_small_width_formula():
    # for t=2 and w <= 4 the maximum is exactly v-w+1
    for w in (2, 3, 4):
        for v in range(w, 9):
            if v < 2:
                continue
            p = SchemeParams(2, w, v) if v >= w >= 2 else None
            if p is None:
                continue
            r = exhaustive_optimal(p, "ts", budget=5_000_000)
            assert r.complete
            assert r.optimum == v - w + 1, (w, v)
            assert r.optimum <= ts_upper_general(p).integer_bound


def test_search_witness_family_verifies():
    r = exhaustive_optimal(SchemeParams(2, 3, 6), "ts")
    assert verify_ts(r.witness_family, 2).holds
    assert r.witness_family.m == r.optimum
    r = exhaustive_optimal(SchemeParams(2, 3, 6), "cff")
    assert verify_cff(r.witness_family, 2).holds
    r = exhaustive_optimal(SchemeParams(2, 3, 6), "ipps")
    assert verify_ipps(r.witness_family, 2).holds


def test_search_self_consistent_across_budgets():
    a = exhaustive_optimal(SchemeParams(2, 3, 6), "cff", budget=100_000)
    b = exhaustive_optimal(SchemeParams(2, 3, 6), "cff", budget=5_000_000)
    assert a.complete and b.complete
    assert a.optimum == b.optimum
    assert a.witness_family == b.witness_family


def test_search_budget_exhaustion_flags_incomplete():
    r = exhaustive_optimal(SchemeParams(2, 4, 8), "ts", budget=200)
    assert not r.complete
    assert r.nodes_explored >= 200
    assert verify_ts(r.witness_family, 2).holds  # still a valid lower bound


def test_search_rejects_unknown_property():
    with pytest.raises(ParamsInvalid):
        exhaustive_optimal(SchemeParams(2, 3, 6), "frameproof")


def test_search_is_deterministic():
    a = exhaustive_optimal(SchemeParams(2, 3, 7), "ts")
    b = exhaustive_optimal(SchemeParams(2, 3, 7), "ts")
    assert a == b


# --- cover failure -> evasion trace ------------------------------------------


def test_ts_trace_completes_on_all_triples_of_six():
    s = _triples(6)
    cff = verify_cff(s, 4)
    assert cff.violated
    trace = ts_violation_from_cff_failure(s, 2, cff.witness)
    assert isinstance(trace, ProofTraceTs)
    assert all(sig > 0 for sig in trace.sigmas[1:])
    w, t = s.w, 2
    tau0 = -(-w // (t * t))
    spread = sum(trace.sigmas[1:])
    assert (t + 1) * spread >= w - tau0 - trace.sigmas[0]
    assert len(trace.pirate_set) == w
    ok, why = check_witness(s, trace.evasion)
    assert ok, why
    # the evasion shows the system is not a 2-TS, matching the verifier
    assert verify_ts(s, 2).violated


def test_ts_trace_on_all_triples_of_four():
    s = new_set_system(4, list(combinations(range(4), 3)))
    cff = verify_cff(s, 4)
    assert cff.violated
    trace = ts_violation_from_cff_failure(s, 2, cff.witness)
    assert isinstance(trace, ProofTraceTs)
    assert check_witness(s, trace.evasion)[0]


def test_ts_trace_rejects_forged_witness():
    s = pg_lines(2, 4)  # genuine 2-TS: no valid cover witness exists
    forged = CffCover(target=0, cover=(1, 2, 3, 4), strength=4)
    with pytest.raises(ParamsInvalid):
        ts_violation_from_cff_failure(s, 2, forged)


def test_ts_trace_oversized_cover_rejected():
    s = _triples(6)
    cover = tuple(i for i in range(1, 7))  # 6 blocks > t^2 = 4
    union = set()
    for i in cover:
        union |= set(s.blocks[i])
    assert set(s.blocks[0]) <= union
    with pytest.raises(ParamsInvalid):
        ts_violation_from_cff_failure(s, 2, CffCover(target=0, cover=cover, strength=6))


# --- missing own-subsets -> ambiguity trace ----------------------------------


def test_ipps_trace_completes_on_all_triples_of_five():
    s = _triples(5)
    trace = ipps_violation_from_missing_own_subsets(s, 2)
    assert isinstance(trace, ProofTraceIpps)
    assert len(trace.pirate_set) == s.w
    k = -(-s.w // (2 * 2 // 4 + 2))
    assert all(len(a) in (k * 1, s.w - 2 * k) for a in trace.a_sets)
    assert all(len(d) == k for d in trace.d_sets)
    ok, why = check_witness(s, trace.ambiguity)
    assert ok, why
    assert verify_ipps(s, 2).violated


def test_ipps_trace_blocked_when_own_subsets_exist():
    trace = ipps_violation_from_missing_own_subsets(pg_lines(2, 4), 2)
    assert isinstance(trace, TraceBlocked)
    assert trace.step == "precondition"
    trace = ipps_violation_from_missing_own_subsets(trivial_ts(8, 3), 2)
    assert isinstance(trace, TraceBlocked)


def test_ipps_trace_strength_three():
    # all 4-subsets of 6 points: k = ceil(4/(2+3)) = 1, every block coverable
    s = new_set_system(6, list(combinations(range(6), 4)))
    trace = ipps_violation_from_missing_own_subsets(s, 3)
    if isinstance(trace, ProofTraceIpps):
        assert check_witness(s, trace.ambiguity)[0]
    else:
        assert isinstance(trace, TraceBlocked)


# --- configurations -----------------------------------------------------------


def test_check_configuration_examples():
    r = check_configuration([{"a", "b"}, {"a", "c"}, {"b", "c"}], 2)
    assert r.kind == "minimal" and r.union_size == 3
    assert check_configuration([{"a"}, {"a"}], 2).kind == "not-configuration"
    r = check_configuration([{"a", "b"}, {"a", "c"}, {"b", "c"}, {"a", "d"}], 2)
    assert r.kind == "non-minimal"


def test_check_configuration_validation():
    with pytest.raises(ParamsInvalid):
        check_configuration([], 2)
    with pytest.raises(ParamsInvalid):
        check_configuration([{"a", "b", "c"}], 2)
    with pytest.raises(ParamsInvalid):
        check_configuration([set()], 2)


def test_minimal_configurations_respect_union_cap():
    rng = random.Random(424242)
    minimal_seen = 0
    for _ in range(400):
        t = rng.choice([2, 3])
        parts = [frozenset(rng.sample(range(8), rng.randint(1, t)))
                 for _ in range(rng.randint(1, 5))]
        try:
            r = check_configuration(parts, t)
        except MinimalConfigTooLarge as exc:  # would contradict the union cap
            raise AssertionError(str(exc))
        if r.kind == "minimal":
            minimal_seen += 1
    assert minimal_seen > 0


# --- bound cross-checks ---------------------------------------------------------


def test_cross_check_examples():
    r = cross_check_bounds(SchemeParams(2, 4, 7), "ts")
    assert r.optimum == 4 and r.exact == 4 and r.consistent and r.complete
    r = cross_check_bounds(SchemeParams(2, 2, 5), "ts")
    assert r.optimum == 4 and r.exact == 4 and r.consistent
    r = cross_check_bounds(SchemeParams(2, 3, 6), "cff")
    assert r.consistent and r.lower <= r.optimum <= r.upper


def test_cross_check_incomplete_budget():
    r = cross_check_bounds(SchemeParams(2, 4, 8), "ts", budget=100)
    assert not r.complete
    assert r.consistent  # found family still respects the upper bound
