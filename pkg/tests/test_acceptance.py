"""Acceptance gate.

One test per shipped criterion, each with its stated tolerance or time
budget. Every test prints a single "ACCEPTANCE <i> PASS|FAIL <summary>"
line (visible under pytest -s; the -v test line carries the same
verdict), then asserts.
"""

import time

from bbforest import (check_bounds, emit_bbg, max_forest,
                      max_forest_bruteforce, min_degree, parse_bbg,
                      prop1_construction, thh1_l1, thh1_l2, thm3_lambda2,
                      thm3_lambda_half, verify_constructions,
                      verify_structure, verify_t1_exhaustive, verify_t8)

from .helpers import random_bipartite


def _announce(index: int, ok: bool, summary: str) -> None:
    print(f"ACCEPTANCE {index} {'PASS' if ok else 'FAIL'} {summary}")
    assert ok, f"acceptance criterion {index}: {summary}"


def test_acceptance_01_solver_matches_subset_scan():
    # 500 seeded instances, up to 16 vertices, densities 0.1 .. 0.9,
    # branch and bound vs the subset-scan oracle, under 60 s
    densities = (0.1, 0.3, 0.5, 0.7, 0.9)
    t0 = time.perf_counter()
    ok = True
    for i in range(500):
        n = 2 + i % 7
        p = densities[(i // 7) % 5]
        g = random_bipartite(n, p, seed=i)
        exact = max_forest(g)
        brute = max_forest_bruteforce(g)
        if exact.forest_number != brute.forest_number \
                or exact.witness != brute.witness:
            ok = False
            break
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 60.0
    _announce(1, ok, f"500 instances, solver == oracle, {elapsed:.1f}s (< 60s)")


def test_acceptance_02_t1_exhaustive_small_sizes():
    # every qualifying matrix at n = 2, 3, 4; the n = 4 scan under 120 s
    ok = True
    t4 = 0.0
    for n in (2, 3, 4):
        t0 = time.perf_counter()
        rep = verify_t1_exhaustive(n)
        dt = time.perf_counter() - t0
        if n == 4:
            t4 = dt
        ok = ok and rep.verdict == "pass"
    ok = ok and t4 < 120.0
    _announce(2, ok, f"degree threshold forces n+1 on all matrices up to n=4, "
                     f"n=4 scan {t4:.1f}s (< 120s)")


def test_acceptance_03_sharpness_construction():
    # minimum degree one below the threshold admits forest number n + 2,
    # for every n in 2 .. 10, under 30 s
    t0 = time.perf_counter()
    ok = True
    for n in range(2, 11):
        g = prop1_construction(n)
        if min_degree(g) != (n + 1) // 2:
            ok = False
        if max_forest(g).forest_number != n + 2:
            ok = False
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 30.0
    _announce(3, ok, f"sharpness family reaches n+2 for n=2..10, "
                     f"{elapsed:.1f}s (< 30s)")


def test_acceptance_04_witness_structure():
    # all optimal witnesses of qualifying instances split 1, 2, or n/2;
    # odd n: 1 exclusively; 25 samples per size, under 600 s total
    t0 = time.perf_counter()
    ok = True
    for n in (5, 6, 7, 8):
        rep = verify_structure(n, samples=25, seed=1, check="T2")
        ok = ok and rep.verdict == "pass"
    for n in (5, 7):
        ok = ok and verify_structure(n, samples=25, seed=1,
                                     check="T4").verdict == "pass"
        ok = ok and verify_structure(n, samples=25, seed=1,
                                     check="C1").verdict == "pass"
    elapsed = time.perf_counter() - t0
    ok = ok and elapsed < 600.0
    _announce(4, ok, f"witness smaller-part sizes confined to {{1, 2, n/2}}, "
                     f"odd n to 1, {elapsed:.1f}s (< 600s)")


def test_acceptance_05_lambda_constructions():
    # explicit families realizing smaller-part sizes 2 and n/2 at n = 4,
    # 6, 8, 10: witness size n+1, advertised split, optimal value n+1
    ok = True
    for n in (4, 6, 8, 10):
        g, w = thm3_lambda2(n)
        ok = ok and w.size == n + 1 and w.min_part_size() == 2
        ok = ok and max_forest(g).forest_number == n + 1
        g, w = thm3_lambda_half(n)
        ok = ok and w.size == n + 1 and w.min_part_size() == n // 2
        ok = ok and max_forest(g).forest_number == n + 1
    _announce(5, ok, "smaller-part sizes 2 and n/2 realized at n=4,6,8,10")


def test_acceptance_06_low_degree_constructions():
    # families with minimum degree exactly k and forest number part+1
    # resp. part+2 at the documented (n, k) pairs
    ok = True
    for n, k in ((3, 2), (5, 2), (5, 3), (7, 3)):
        g = thh1_l1(n, k)
        ok = ok and min_degree(g) == k
        ok = ok and max_forest(g).forest_number == g.n + 1
    for n, k in ((6, 2), (6, 3), (8, 3)):
        g = thh1_l2(n, k)
        ok = ok and min_degree(g) == k
        ok = ok and max_forest(g).forest_number == g.n + 2
    ok = ok and verify_constructions("T7l1").verdict == "pass"
    ok = ok and verify_constructions("T7l2").verdict == "pass"
    _announce(6, ok, "degree-k families hit forest numbers part+1 and part+2")


def test_acceptance_07_relaxed_threshold():
    # odd n, floor (n+1)/2 with at most one floor vertex per part still
    # forces n + 1; 25 samples at n = 5, 7, 9
    rep = verify_t8(n_values=(5, 7, 9), samples=25, seed=1)
    ok = rep.verdict == "pass" and rep.instances_checked == 75
    _announce(7, ok, "relaxed threshold forces n+1 on 75 seeded instances")


def test_acceptance_08_exact_bound_sweep():
    # the three degree-sum inequalities hold (as integer consequences)
    # for every n up to 1000, exactly, under 5 s
    t0 = time.perf_counter()
    rep = check_bounds(1000)
    elapsed = time.perf_counter() - t0
    ok = rep.verdict == "pass" and elapsed < 5.0
    near = rep.params["fractional_near_misses"]
    ok = ok and near == [["h", 7, 3, "15/2"]]
    _announce(8, ok, f"bound sweep to n=1000 exact, {elapsed:.2f}s (< 5s), "
                     f"single fractional near-miss as expected")


def test_acceptance_09_format_round_trip():
    # 1000 seeded graphs survive emit -> parse bit-exactly
    ok = True
    for i in range(1000):
        n = 1 + i % 12
        g = random_bipartite(n, (i % 10) / 10 + 0.05, seed=10_000 + i)
        text = emit_bbg(g)
        if parse_bbg(text) != g or emit_bbg(parse_bbg(text)) != text:
            ok = False
            break
    _announce(9, ok, "1000 instances round-trip the text format bit-exactly")
