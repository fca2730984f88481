"""Graph orientation, admissibility, degree statistics, presets."""
import random

import pytest

from rootsep import (
    ValidationError,
    check_classical_admissible,
    find_roots,
    min_total_degree,
    orient,
    parse_polynomial,
    preset_edges,
)
from rootsep.graph import parse_graph_json


class TestOrient:
    def test_single_edge(self):
        g = orient([(0, 1)], 2)
        assert g.oriented == ((0, 1),)
        assert g.in_degrees == (0, 1)

    def test_complete_three(self):
        g = orient([(0, 1), (0, 2), (1, 2)], 3)
        assert g.in_degrees == (0, 1, 2)

    def test_empty(self):
        g = orient([], 3)
        assert g.in_degrees == (0, 0, 0)
        assert g.total_degrees == (0, 0, 0)

    def test_reversed_input_normalized(self):
        g = orient([(2, 0)], 3)
        assert g.oriented == ((0, 2),)

    def test_loop_rejected(self):
        with pytest.raises(ValidationError, match="loop"):
            orient([(1, 1)], 3)

    def test_duplicate_rejected(self):
        with pytest.raises(ValidationError, match="duplicate"):
            orient([(0, 1), (1, 0)], 3)

    def test_out_of_range_rejected(self):
        with pytest.raises(ValidationError, match="out of range"):
            orient([(0, 5)], 3)


class TestAdmissibility:
    def test_path(self):
        g = orient([(0, 1), (1, 2)], 3)
        assert check_classical_admissible(g) == (True, True, True)

    def test_star_into_max(self):
        g = orient([(0, 2), (1, 2)], 3)
        assert check_classical_admissible(g) == (True, True, False)

    def test_complete(self):
        g = orient([(0, 1), (0, 2), (1, 2)], 3)
        assert check_classical_admissible(g) == (True, True, False)


class TestTotalDegree:
    def test_complete(self):
        g = orient([(0, 1), (0, 2), (1, 2)], 3)
        assert min_total_degree(g) == 2

    def test_isolated_vertex(self):
        g = orient([(0, 1)], 3)
        assert min_total_degree(g) == 0

    def test_path(self):
        g = orient([(0, 1), (1, 2)], 3)
        assert min_total_degree(g) == 1


def _random_graph(rng, r):
    return [
        (i, j)
        for j in range(r)
        for i in range(j)
        if rng.random() < 0.4
    ]


def test_degree_sums():
    rng = random.Random(55)
    for _ in range(50):
        r = rng.randint(1, 10)
        edges = _random_graph(rng, r)
        g = orient(edges, r)
        assert sum(g.in_degrees) == g.edge_count
        assert sum(g.total_degrees) == 2 * g.edge_count
        assert g.in_degrees[0] == 0
        assert all(d <= r - 1 for d in g.in_degrees)


def test_random_orientation_acyclic():
    rng = random.Random(56)
    for _ in range(50):
        r = rng.randint(2, 10)
        g = orient(_random_graph(rng, r), r)
        assert check_classical_admissible(g)[1]


def test_reorient_idempotent():
    rng = random.Random(57)
    for _ in range(20):
        r = rng.randint(2, 8)
        g = orient(_random_graph(rng, r), r)
        again = orient(g.edges, r)
        assert again == g


class TestPresets:
    def test_shapes(self):
        roots = find_roots(parse_polynomial("x*(x-1)*(x-2)*(x-3)"), 128)
        assert preset_edges("path", roots) == [(0, 1), (1, 2), (2, 3)]
        assert preset_edges("star_max", roots) == [(0, 3), (1, 3), (2, 3)]
        assert len(preset_edges("complete", roots)) == 6

    def test_nearest_neighbor_dedup(self):
        roots = find_roots(parse_polynomial("x*(x-1)*(x-2)"), 128)
        edges = preset_edges("nearest_neighbor", roots)
        # 0's partner is 1, 1's is 0 (tie with 2 broken by index), 2's is 1
        assert edges == [(0, 1), (1, 2)]

    def test_unknown_preset(self):
        roots = find_roots(parse_polynomial("x^2-1"), 128)
        with pytest.raises(ValidationError):
            preset_edges("ring", roots)


def test_graph_json_round_trip():
    g = parse_graph_json('{"edges": [[1, 0], [1, 2]]}', 3)
    assert g.edges == ((0, 1), (1, 2))
    with pytest.raises(ValidationError):
        parse_graph_json('{"edges": "nope"}', 3)
    with pytest.raises(ValidationError):
        parse_graph_json("{bad json", 3)
