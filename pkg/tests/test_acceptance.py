"""Acceptance suite: one test per release criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; plain `pytest` reports the same results as ordinary test outcomes.
"""

import math
import random
import time

from ordifind.context import FormalContext
from ordifind.factorize import factorize_naive, ordifind
from ordifind.ferrers import chain_coverage, chain_to_ferrers, is_ferrers, max_ferrers
from ordifind.lattice import build_lattice
from ordifind.metrics import distance, hamming, selection_distance

from oracles import (
    best_chain_coverage,
    minimum_chain_cover_width,
    random_context,
)


def _ok(name):
    print(f"ACCEPTANCE {name}: PASS")


def test_running_example_lattice(socmed):
    started = time.perf_counter()
    lat = build_lattice(socmed)
    elapsed = time.perf_counter() - started
    assert len(lat) == 41
    assert elapsed < 1.0
    _ok("running-example lattice (41 concepts, <1s)")


def test_completeness_on_running_example(socmed, socmed_lattice):
    started = time.perf_counter()
    fz = ordifind(socmed, socmed_lattice)
    union = frozenset().union(
        *(chain_to_ferrers(socmed_lattice, f.chain).pairs for f in fz.factors)
    )
    elapsed = time.perf_counter() - started
    assert len(socmed.incidence) == 53
    assert union ^ socmed.incidence == frozenset()
    assert elapsed < 1.0
    _ok("completeness (53/53 incidences covered, <1s)")


def test_width_lower_bound(socmed, socmed_lattice, socmed_factorization):
    started = time.perf_counter()
    cells = [
        (socmed.object_index(g), socmed.attribute_index(m))
        for g, m in (
            ("YouTube", "premium"),
            ("WhatsApp", "mobile first"),
            ("Facebook", "timeline"),
        )
    ]
    for i in range(3):
        for j in range(i + 1, 3):
            (g, m), (h, n) = cells[i], cells[j]
            assert (g, n) not in socmed.incidence and (h, m) not in socmed.incidence
    assert socmed_factorization.width >= 3
    assert minimum_chain_cover_width(socmed, socmed_lattice) == 3
    elapsed = time.perf_counter() - started
    assert elapsed < 60.0
    _ok("width lower bound (pairwise-incompatible cells, minimum width 3)")


def test_max_ferrers_optimality():
    started = time.perf_counter()
    rng = random.Random(1001)
    for _ in range(200):
        ctx = random_context(rng, 6, 6)
        lat = build_lattice(ctx)
        for covered in (
            frozenset(),
            frozenset(p for p in sorted(ctx.incidence) if rng.random() < 0.4),
        ):
            chain = max_ferrers(lat, covered)
            assert chain_coverage(lat, chain, covered) == best_chain_coverage(
                lat, covered
            )
    elapsed = time.perf_counter() - started
    assert elapsed < 300.0
    _ok("chain search optimality (200 random contexts vs exhaustive)")


def test_oracle_equivalence(socmed, socmed_lattice):
    started = time.perf_counter()
    assert ordifind(socmed, socmed_lattice) == factorize_naive(socmed, socmed_lattice)
    rng = random.Random(1002)
    for _ in range(100):
        ctx = random_context(rng, 8, 8)
        lat = build_lattice(ctx)
        assert ordifind(ctx, lat) == factorize_naive(ctx, lat)
    elapsed = time.perf_counter() - started
    assert elapsed < 300.0
    _ok("oracle equivalence (incremental == naive on 100 random contexts)")


def test_approximation_bound():
    started = time.perf_counter()
    rng = random.Random(1003)
    checked = 0
    while checked < 100:
        ctx = random_context(rng, 5, 5)
        if len(ctx.incidence) < 2:
            continue  # the log-size bound presumes at least two incidences
        checked += 1
        lat = build_lattice(ctx)
        optimal = minimum_chain_cover_width(ctx, lat)
        fz = ordifind(ctx, lat)
        total = len(ctx.incidence)
        assert fz.width <= math.ceil(optimal * math.log(total))
        remaining = total
        for factor in fz.factors:
            # pigeonhole step, in integers: |F_i \ E| * k >= |I| - |E|
            assert factor.new_coverage * optimal >= remaining
            remaining -= factor.new_coverage
    elapsed = time.perf_counter() - started
    assert elapsed < 600.0
    _ok("approximation bound (r <= ceil(k ln|I|) and pigeonhole per step)")


def test_ferrers_complement_closure():
    rng = random.Random(1004)
    for _ in range(500):
        n, m = rng.randint(1, 10), rng.randint(1, 10)
        order = list(range(m))
        rng.shuffle(order)
        rel = {
            (g, a) for g in range(n) for a in order[: rng.randint(0, m)]
        }
        assert is_ferrers(rel)
        complement = {(g, a) for g in range(n) for a in range(m)} - rel
        assert is_ferrers(complement)
    _ok("complement closure (500 random staircases up to 10x10)")


def test_distance_semantics(socmed, socmed_factorization):
    fb = socmed.object_index("Facebook")
    ig = socmed.object_index("Instagram")
    assert distance(socmed, fb, ig) == 0
    assert distance(socmed, ig, fb) == 1
    assert hamming(socmed, fb, ig) == 1
    zeros = [0] * socmed_factorization.width
    for g in range(socmed.n_objects):
        assert selection_distance(socmed, socmed_factorization, g, zeros) == 0
    _ok("distance semantics (directed, Hamming, zero selection)")


def test_performance_sanity():
    # two generated contexts of roughly ten thousand concepts each;
    # wall-clock comparison only, no absolute threshold
    for seed in (1, 2):
        rng = random.Random(seed)
        pairs = frozenset(
            (g, a) for g in range(100) for a in range(20) if rng.random() < 0.5
        )
        ctx = FormalContext(
            tuple(f"g{i}" for i in range(100)),
            tuple(f"m{j}" for j in range(20)),
            pairs,
        )
        lat = build_lattice(ctx)
        assert 8_000 <= len(lat) <= 30_000
        started = time.perf_counter()
        fast = ordifind(ctx, lat)
        t_fast = time.perf_counter() - started
        started = time.perf_counter()
        slow = factorize_naive(ctx, lat)
        t_slow = time.perf_counter() - started
        assert fast == slow
        assert t_fast <= t_slow, f"incremental {t_fast:.2f}s vs naive {t_slow:.2f}s"
        print(
            f"  seed {seed}: {len(lat)} concepts, {fast.width} factors, "
            f"incremental {t_fast:.2f}s vs naive {t_slow:.2f}s"
        )
    _ok("performance sanity (incremental at least as fast, identical output)")
