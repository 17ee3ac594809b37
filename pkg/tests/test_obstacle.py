from fractions import Fraction

import pytest
from hypothesis import given

from conftest import graphs_with_zero_set, two_triangles
from graphobstacle.graph import GraphFamily, build, generate, laplacian
from graphobstacle.obstacle import (
    Mode,
    ObstacleError,
    ObstacleProblem,
    ObstacleSolution,
    problem_from_json,
    problem_to_json,
    solution_from_json,
    solution_to_json,
    solve,
    solve_constant_shift,
    solve_restricted,
    solve_slack,
    verify_solution,
)

F = Fraction


def fam(tag, *params):
    return generate(GraphFamily(tag, params))


def vec(*xs):
    return tuple(F(x) for x in xs)


def bipartite_problem(m, n, r, s):
    """r zeros on side A (vertices 0..m-1), s zeros on side B (m..m+n-1)."""
    zeros = list(range(r)) + list(range(m, m + s))
    return ObstacleProblem(fam("kbip", m, n), zeros)


# ------------------------------------------------------------- restricted

def test_restricted_path3():
    assert solve_restricted(ObstacleProblem(fam("path", 3), [0])).u == vec(0, 2, 3)


def test_restricted_complete4():
    assert solve_restricted(ObstacleProblem(fam("complete", 4), [0, 1])).u == vec(0, 0, F(1, 2), F(1, 2))


def test_restricted_path2():
    assert solve_restricted(ObstacleProblem(fam("path", 2), [0])).u == vec(0, 1)


@pytest.mark.parametrize(
    "graph, zeros, match",
    [
        (two_triangles(), [0], "disconnected"),
        (fam("path", 3), [], "nonempty"),
        (fam("path", 3), [0, 1, 2], "positive"),
        (build(1, []), [0], "positive"),
        (fam("path", 3), [3], "out of range"),
    ],
)
def test_problem_validation(graph, zeros, match):
    with pytest.raises(ObstacleError, match=match):
        ObstacleProblem(graph, zeros)


@given(graphs_with_zero_set())
def test_restricted_unique_and_positive(case):
    g, zeros = case
    sol = solve_restricted(ObstacleProblem(g, zeros))
    assert all(sol.u[i] == 0 for i in zeros)
    assert all(sol.u[i] > 0 for i in range(g.n) if i not in zeros)
    lu = laplacian(g) @ sol.u
    assert all(lu[i] == 1 for i in range(g.n) if i not in zeros)


# ------------------------------------------------------------- slack

def test_slack_path3():
    sol = solve_slack(ObstacleProblem(fam("path", 3), [0]))
    assert sol.u == vec(0, 2, 3) and sol.slack == vec(2, 0, 0)


def test_slack_complete4():
    sol = solve_slack(ObstacleProblem(fam("complete", 4), [0, 1]))
    assert sol.slack[:2] == vec(1, 1) and sol.slack[2:] == vec(0, 0)


def test_slack_path4_has_zero_entry_on_interior_zero():
    sol = solve_slack(ObstacleProblem(fam("path", 4), [0, 1]))
    assert sol.u == vec(0, 0, 2, 3)
    assert sol.slack == vec(0, 2, 0, 0)


@given(graphs_with_zero_set())
def test_slack_identity_and_sign(case):
    g, zeros = case
    p = ObstacleProblem(g, zeros)
    sol = solve_slack(p)
    lu = laplacian(g) @ sol.u
    chi = [0 if i in zeros else 1 for i in range(g.n)]
    assert [lu[i] + sol.slack[i] for i in range(g.n)] == chi
    for i in range(g.n):
        if i in zeros:
            has_positive_neighbour = any(j not in zeros for j in g.neighbors(i))
            assert (sol.slack[i] > 0) == has_positive_neighbour
            assert sol.slack[i] >= 0
        else:
            assert sol.slack[i] == 0


# ------------------------------------------------------------- constant shift

def test_constant_shift_complete4():
    sol = solve_constant_shift(ObstacleProblem(fam("complete", 4), [0, 1]))
    assert sol.consistent and sol.slack == F(1, 2)
    assert sol.u == vec(0, 0, F(1, 4), F(1, 4))


def test_constant_shift_kbip23_inconsistent():
    sol = solve_constant_shift(bipartite_problem(2, 3, 1, 1))
    assert sol.consistent is False and sol.u is None


def test_constant_shift_kbip22_consistent():
    sol = solve_constant_shift(bipartite_problem(2, 2, 1, 1))
    assert sol.consistent and sol.slack == F(1, 2)
    assert sol.u == vec(0, F(1, 2), 0, F(1, 2))


@given(graphs_with_zero_set())
def test_constant_shift_scales_restricted_solution(case):
    g, zeros = case
    p = ObstacleProblem(g, zeros)
    sol = solve_constant_shift(p)
    assert sol.slack == F(g.n - len(zeros), g.n)
    if sol.consistent:
        restricted = solve_restricted(p).u
        assert sol.u == tuple((1 - sol.slack) * x for x in restricted)
        assert verify_solution(p, sol).ok


@pytest.mark.parametrize("n", range(2, 11))
def test_constant_shift_always_consistent_on_complete(n):
    g = fam("complete", n)
    for mask in range(1, (1 << n) - 1):
        zeros = [i for i in range(n) if mask >> i & 1]
        assert solve_constant_shift(ObstacleProblem(g, zeros)).consistent


def bipartite_consistency_by_hand(m, n, r, s):
    """Closed-form verdict from eliminating the two common values per side.

    Zeros on one side only: always solvable. One side entirely zero while the
    other also has zeros: a zero vertex there sees no positive neighbour, so
    b would have to vanish. Otherwise both zero rows give b = (m-r) v = (n-s) w
    and the positive rows reduce to m (m - r) = n (n - s).
    """
    if r == 0 or s == 0:
        return True
    if r == m or s == n:
        return False
    return m * (m - r) == n * (n - s)


def bipartite_cases(max_total=10):
    for m in range(1, max_total):
        for n in range(1, max_total - m + 1):
            for r in range(m + 1):
                for s in range(n + 1):
                    if 1 <= r + s <= m + n - 1:
                        yield m, n, r, s


@pytest.mark.parametrize("m, n, r, s", list(bipartite_cases()))
def test_constant_shift_bipartite_matches_hand_derivation(m, n, r, s):
    sol = solve_constant_shift(bipartite_problem(m, n, r, s))
    assert sol.consistent == bipartite_consistency_by_hand(m, n, r, s)
    assert sol.slack == F(m + n - r - s, m + n)


def test_balanced_bipartite_placements_are_consistent():
    for m, n, r, s in bipartite_cases():
        if m == n and r == s:
            assert solve_constant_shift(bipartite_problem(m, n, r, s)).consistent


def test_unbalanced_interior_bipartite_counterexample():
    # m != n yet solvable: m (m - r) = n (n - s) = 12
    sol = solve_constant_shift(bipartite_problem(6, 4, 4, 1))
    assert sol.consistent and sol.slack == F(1, 2)
    assert sol.u == vec(0, 0, 0, 0, F(1, 4), F(1, 4), 0, F(1, 6), F(1, 6), F(1, 6))


# ------------------------------------------------------------- dispatch / verify

def test_solve_dispatches_on_mode():
    p = ObstacleProblem(fam("path", 3), [0])
    assert solve(p, "slack") == solve_slack(p)
    assert solve(p, Mode.CONSTANT_SHIFT) == solve_constant_shift(p)
    assert solve(p) == solve_restricted(p)


def test_verify_round_trips():
    p3 = ObstacleProblem(fam("path", 3), [0])
    assert verify_solution(p3, solve_restricted(p3)).ok
    k4 = ObstacleProblem(fam("complete", 4), [0, 1])
    assert verify_solution(k4, solve_slack(k4)).ok


def test_verify_reports_failing_row():
    p = ObstacleProblem(fam("path", 3), [0])
    report = verify_solution(p, ObstacleSolution(Mode.RESTRICTED, vec(0, 1, 1)))
    assert not report.ok
    # row v2: 2*1 - 1 = 1 holds; row v3: 1 - 1 = 0 != 1
    assert report.failed_rows == [2]
    assert report.violations[0].lhs == 0 and report.violations[0].rhs == 1


def test_verify_slack_checks_every_row():
    p = ObstacleProblem(fam("path", 3), [0])
    bad = ObstacleSolution(Mode.SLACK, vec(0, 2, 3), slack=vec(1, 0, 0))
    assert verify_solution(p, bad).failed_rows == [0]
    negative = ObstacleSolution(Mode.SLACK, vec(0, 2, 3), slack=vec(-1, 0, 0))
    assert any(v.what == "b_i >= 0" for v in verify_solution(p, negative).violations)


def test_verify_constant_shift_inconsistent_has_note():
    p = bipartite_problem(2, 3, 1, 1)
    report = verify_solution(p, solve_constant_shift(p))
    assert not report.ok and report.note


def test_verify_dimension_mismatch():
    p = ObstacleProblem(fam("path", 3), [0])
    with pytest.raises(ObstacleError):
        verify_solution(p, ObstacleSolution(Mode.RESTRICTED, vec(0, 1)))


# ------------------------------------------------------------- JSON

def test_solution_json_uses_fraction_strings():
    p = ObstacleProblem(fam("complete", 4), [0, 1])
    data = solution_to_json(solve_slack(p))
    assert data == {"mode": "slack", "u": ["0", "0", "1/2", "1/2"], "b": ["1", "1", "0", "0"]}
    assert solution_from_json(data) == solve_slack(p)


def test_constant_shift_json():
    p = bipartite_problem(2, 3, 1, 1)
    data = solution_to_json(solve_constant_shift(p))
    assert data["consistent"] is False and "u" not in data
    assert solution_from_json(data) == solve_constant_shift(p)


def test_problem_json_round_trip():
    p = ObstacleProblem(fam("cycle", 5), [0, 2])
    data = problem_to_json(p, "constant-shift")
    assert data["zero_set"] == [1, 3] and data["mode"] == "constant-shift"
    assert problem_from_json(data) == (p, Mode.CONSTANT_SHIFT)
    with pytest.raises(ObstacleError):
        problem_from_json({"graph": data["graph"]})
