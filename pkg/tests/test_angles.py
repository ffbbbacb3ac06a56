from itertools import product

import pytest

from edgetess.angles import (
    AngleMultiset,
    AngleSolution,
    _edge_inequality,
    enumerate_multisets,
    max_edge_count,
    nonnegative_param_points,
    param_solution_quad,
    param_solution_triangle,
    solve_system,
)


def brute_force(e):
    """Independent count over all (a,b,c,d) with a+b+c+d = e."""
    sols = []
    for a in range(e + 1):
        for b in range(e + 1 - a):
            for c in range(e + 1 - a - b):
                d = e - a - b - c
                if 30 * a + 45 * b + 60 * c + 90 * d == 180 * (e - 2):
                    sols.append((a, b, c, d))
    return sorted(sols)


def test_max_edge_count():
    assert max_edge_count() == 6
    assert _edge_inequality(6)  # 720 <= 720
    assert not _edge_inequality(7)  # 900 <= 840 fails


def test_solve_examples():
    assert [s.counts for s in solve_system(3)] == [(0, 0, 3, 0), (0, 2, 0, 1), (1, 0, 1, 1)]
    assert [s.counts for s in solve_system(4)] == [(0, 0, 0, 4)]
    assert solve_system(5) == []
    assert solve_system(6) == []


@pytest.mark.parametrize("e", [3, 4, 5, 6])
def test_solve_matches_brute_force(e):
    sols = solve_system(e)
    assert [s.counts for s in sols] == brute_force(e)
    for s in sols:
        assert 30 * s.a + 45 * s.b + 60 * s.c + 90 * s.d == 180 * (e - 2)
        assert s.a + s.b + s.c + s.d == e


@pytest.mark.parametrize("bad", [0, 2, 7, 100])
def test_solve_out_of_range(bad):
    with pytest.raises(ValueError):
        solve_system(bad)
    with pytest.raises(ValueError):
        enumerate_multisets(bad)


def test_param_examples():
    assert param_solution_triangle(3, 0) == (0, 0, 3, 0)
    assert param_solution_triangle(0, 1) == (0, 2, 0, 1)
    assert param_solution_triangle(1, 1) == (1, 0, 1, 1)
    assert param_solution_quad(0, 4) == (0, 0, 0, 4)
    assert param_solution_quad(0, 0) == (-12, 16, 0, 0)
    assert param_solution_quad(1, 0) == (-11, 14, 1, 0)


@pytest.mark.parametrize("s,t", list(product(range(-5, 6), range(-5, 6))))
def test_param_points_solve_the_system(s, t):
    # every point of either family satisfies both equations, sign aside
    for e, fn in ((3, param_solution_triangle), (4, param_solution_quad)):
        a, b, c, d = fn(s, t)
        assert a + b + c + d == e
        assert 30 * a + 45 * b + 60 * c + 90 * d == 180 * (e - 2)


@pytest.mark.parametrize("e", [3, 4])
def test_param_cross_check(e):
    assert nonnegative_param_points(e) == {s.counts for s in solve_system(e)}


def test_enumerate_examples():
    tri = [m.degrees for m in enumerate_multisets(3)]
    assert (30, 30, 120) in tri
    assert [m.degrees for m in enumerate_multisets(6)] == [(120,) * 6]
    assert (90, 90, 120, 120, 120) in [m.degrees for m in enumerate_multisets(5)]


@pytest.mark.parametrize("e", [3, 4, 5, 6])
def test_enumerate_brute_force(e):
    expected = sorted(
        {
            tuple(sorted(c))
            for c in product((30, 45, 60, 90, 120), repeat=e)
            if sum(c) == 180 * (e - 2)
        }
    )
    assert [m.degrees for m in enumerate_multisets(e)] == expected


@pytest.mark.parametrize("e", [3, 4, 5, 6])
def test_solutions_embed_in_multisets(e):
    multisets = enumerate_multisets(e)
    embedded = {s.to_multiset() for s in solve_system(e)}
    assert embedded <= set(multisets)
    assert all(m.counts[120] == 0 for m in embedded)
    with_120 = [m for m in multisets if m.counts[120] > 0]
    assert (len(multisets) > len(embedded)) == bool(with_120)


def test_type_invariants():
    with pytest.raises(ValueError):
        AngleSolution(1, 1, 1, 1, 3)
    with pytest.raises(ValueError):
        AngleMultiset((60, 60, 90))
    with pytest.raises(ValueError):
        AngleMultiset((120,) * 7)
