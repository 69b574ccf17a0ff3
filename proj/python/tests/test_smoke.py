import itertools
import math

import pytest

import spanloc


def test_gen_is_deterministic():
    a = spanloc.gen_random(50, "uniform", 3)
    b = spanloc.gen_random(50, "uniform", 3)
    assert a == b
    assert len(a) == 50


def test_homothet_spanner_verifies():
    pts = spanloc.gen_random(40, "clustered", 5)
    edges = spanloc.build_spanner(pts, "homothet", "square", eps=0.25)
    rep = spanloc.verify(pts, edges, "homothet", "square", eps=0.25, trials=100)
    assert rep["ok"]
    assert rep["regions_tested"] == 100
    assert rep["max_dilation"] <= 1.25 + 1e-9


def test_complete_graph_has_dilation_one():
    pts = spanloc.gen_random(12, "uniform", 1)
    edges = list(itertools.combinations(range(12), 2))
    assert spanloc.dilation(pts, edges) == pytest.approx(1.0)
    assert math.isinf(spanloc.dilation(pts, []))


def test_disk_delaunay_and_lower_bound():
    pts, forced, certified = spanloc.gen_lower_bound_disk(8, 256)
    assert certified
    edges = set(spanloc.build_spanner(pts, "homothet", "disk", eps=0.25))
    assert all(tuple(sorted(e)) in edges for e in forced)
    tri = spanloc.delaunay([(0, 0), (1, 0), (0.3, 1)], "disk")
    assert len(tri) == 3


def test_decompose_covers_every_pair_once():
    pts = spanloc.gen_random(60, "uniform", 2)
    seen = {}
    for left, right in spanloc.decompose(pts, "wspd", 2.0):
        for a in left:
            for b in right:
                key = (min(a, b), max(a, b))
                seen[key] = seen.get(key, 0) + 1
    assert len(seen) == 60 * 59 // 2
    assert set(seen.values()) == {1}


def test_errors():
    pts = spanloc.gen_random(10, "uniform", 1)
    with pytest.raises(ValueError):
        spanloc.build_spanner(pts, "homothet", "square", eps=0.7)
    with pytest.raises(ValueError):
        spanloc.build_spanner(pts, "nope")
