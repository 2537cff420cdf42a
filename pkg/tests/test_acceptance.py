"""Acceptance criteria 1-8, each at its stated tolerance.

Every criterion prints exactly one PASS/FAIL line (also repeated in the
terminal summary).  The verification suite (every connected bipartite graph
on at most 6 vertices, 50 seeded random bipartite graphs on at most 8, and
one smoke instance at y = 10 n^2) is built once and shared.
"""

import time
from statistics import mean

import pytest

from metricdim import generate
from metricdim.graph import is_connected
from metricdim.mdim import exact_md_cover, exact_md_naive, greedy_resolving_set, is_resolving_set
from metricdim.rbds import exact_min_rbds, md_to_rbds
from metricdim.verify import SuiteConfig, run_suite

SEED = 2012


@pytest.fixture(scope="module")
def suite():
    start = time.perf_counter()
    reports = run_suite(SuiteConfig(exhaustive_max_n=6, random_count=50, random_max_n=8, seed=SEED))
    return reports, time.perf_counter() - start


def _fail_if(bad, what):
    if bad:
        pytest.fail(f"{len(bad)} {what}; first: {bad[0]}", pytrace=False)


def _failures(reports, name):
    return [(r.name, r.check(name).counterexample) for r in reports if not r.check(name).passed]


def test_criterion_1_equivalence(suite, acceptance_line):
    reports, seconds = suite
    bad = _failures(reports, "equivalence")
    ok = not bad and seconds < 600
    acceptance_line(1, ok, f"gamma(normalized G) + 4 = md(G') on {len(reports)} instances, "
                           f"{len(bad)} mismatches, suite time {seconds:.1f}s")
    _fail_if(bad, "instances violate gamma + 4 = md")
    assert seconds < 600


def test_criterion_2_forced_landmark_census(suite, acceptance_line):
    reports, _ = suite
    bad = _failures(reports, "forced_landmark_census")
    explained = sum(r.check("census_modulo_sibling_pairs").passed for r in reports)
    detail = ""
    if bad:
        name, cex = bad[0]
        detail = (f"; first: {name}: {cex['unresolved']} unresolved vs {cex['expected']} expected, "
                  f"pair {cex['pair']}; excess equals the predicted sibling pairs on "
                  f"{explained}/{len(reports)} instances")
    acceptance_line(2, not bad, f"exactly n^2 l/r pairs unresolved on {len(reports) - len(bad)}/{len(reports)} "
                                f"instances{detail}")
    _fail_if(bad, "instances leave more or fewer than the n^2 l/r pairs unresolved")


def test_criterion_3_closed_form(suite, acceptance_line):
    reports, _ = suite
    bad = _failures(reports, "closed_form")
    smoke = [r for r in reports if r.name.startswith("smoke")]
    pairs = sum(r.check("closed_form").checked for r in reports)
    ok = not bad and len(smoke) == 1 and smoke[0].y == 10 * smoke[0].n ** 2 and smoke[0].n <= 6
    acceptance_line(3, ok, f"BFS = formula on {pairs} covered pairs over {len(reports)} instances "
                           f"(smoke n={smoke[0].n}, y={smoke[0].y}), {len(bad)} failures")
    _fail_if(bad, "instances with a closed-form mismatch")
    assert ok


def test_criterion_4_structure(suite, acceptance_line):
    reports, _ = suite
    bad = _failures(reports, "structure")
    acceptance_line(4, not bad, f"max degree 3, connected, census match on {len(reports) - len(bad)}/{len(reports)}")
    _fail_if(bad, "instances with a structural violation")


def test_criterion_5_round_trip(suite, acceptance_line):
    reports, _ = suite
    bad = _failures(reports, "round_trip")
    sets = sum(r.check("round_trip").checked for r in reports)
    acceptance_line(5, not bad, f"{sets} round trips (min dominating sets and solver bases), {len(bad)} failures")
    _fail_if(bad, "instances with a failed round trip")


def test_criterion_6_rbds(acceptance_line):
    start = time.perf_counter()
    graphs = generate.connected_graphs(6) + generate.random_graphs(SEED, 100, 9)
    bad = []
    for k, g in enumerate(graphs):
        size, witness = exact_min_rbds(md_to_rbds(g, g.vertex_count))
        naive_size, naive_set = exact_md_naive(g, g.vertex_count)
        if size != naive_size or witness != naive_set or not is_resolving_set(g, witness):
            bad.append((k, g.edges(), size, naive_size))
    seconds = time.perf_counter() - start
    ok = not bad and seconds < 300
    acceptance_line(6, ok, f"RBDS optimum and witness = naive on {len(graphs) - len(bad)}/{len(graphs)} graphs "
                           f"in {seconds:.1f}s")
    _fail_if(bad, "graphs where RBDS and naive disagree")
    assert seconds < 300


def test_criterion_7_solver_agreement(acceptance_line):
    graphs = generate.random_graphs(SEED + 1, 200, 10)
    bad = []
    for k, g in enumerate(graphs):
        size, witness = exact_md_cover(g)
        naive_size, _ = exact_md_naive(g, g.vertex_count)
        if size != naive_size or not is_resolving_set(g, witness):
            bad.append((k, g.edges(), size, naive_size))
    acceptance_line(7, not bad, f"cover = naive on {len(graphs) - len(bad)}/{len(graphs)} random graphs")
    _fail_if(bad, "graphs where cover and naive disagree")


def test_criterion_8_greedy(suite, acceptance_line):
    reports, _ = suite
    graphs = generate.connected_graphs(6)
    graphs += [g for g in generate.random_graphs(SEED, 100, 9) if is_connected(g)]
    graphs += [g for g in generate.random_graphs(SEED + 1, 200, 10) if is_connected(g)]
    bad, ratios = [], []
    for k, g in enumerate(graphs):
        greedy = greedy_resolving_set(g)
        if not is_resolving_set(g, greedy):
            bad.append((k, g.edges()))
            continue
        exact, _ = exact_md_cover(g)
        if exact:
            ratios.append(len(greedy) / exact)
    acceptance_line(8, not bad, f"greedy resolving on {len(graphs) - len(bad)}/{len(graphs)} connected graphs; "
                                f"size/optimum mean {mean(ratios):.3f}, max {max(ratios):.3f}")
    _fail_if(bad, "graphs where greedy is not resolving")
