"""Discrete obstacle problem ``L u = chi_{u > 0}`` on a connected graph.

Given a zero set ``I`` the positive coordinates of ``u`` are found in one
of three senses:

``restricted``
    Solve only the rows outside ``I``: ``L[P, P] u_P = 1``.
``slack``
    Same ``u``; a vector ``b`` supported on ``I`` absorbs the zero rows,
    so ``L u + b = chi`` holds in every row.
``constant-shift``
    A scalar ``b`` added to every row. Summing all rows forces
    ``b = (n - |I|) / n``; a solution exists only for some zero sets.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from .graph import Graph, from_json as graph_from_json, is_connected, laplacian, to_json as graph_to_json
from .linalg import ExactVector, SingularMatrixError, format_fraction, parse_fraction, principal_submatrix, solve_linear

__all__ = [
    "Mode",
    "ObstacleError",
    "ObstacleProblem",
    "ObstacleSolution",
    "Violation",
    "VerificationReport",
    "solve",
    "solve_restricted",
    "solve_slack",
    "solve_constant_shift",
    "verify_solution",
    "problem_from_json",
    "problem_to_json",
    "solution_to_json",
    "solution_from_json",
]


class ObstacleError(ValueError):
    pass


class Mode(str, enum.Enum):
    RESTRICTED = "restricted"
    SLACK = "slack"
    CONSTANT_SHIFT = "constant-shift"


@dataclass(frozen=True)
class ObstacleProblem:
    graph: Graph
    zero_set: frozenset[int]

    def __init__(self, graph: Graph, zero_set: Iterable[int]):
        zeros = frozenset(int(i) for i in zero_set)
        bad = sorted(i for i in zeros if not 0 <= i < graph.n)
        if bad:
            raise ObstacleError(f"zero-set vertices {[i + 1 for i in bad]} out of range 1..{graph.n}")
        if not zeros:
            raise ObstacleError("zero set must be nonempty")
        if len(zeros) == graph.n:
            raise ObstacleError("zero set must leave at least one positive vertex")
        if not is_connected(graph):
            raise ObstacleError("graph is disconnected")
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "zero_set", zeros)

    @property
    def positive_set(self) -> list[int]:
        return [i for i in range(self.graph.n) if i not in self.zero_set]


@dataclass(frozen=True)
class ObstacleSolution:
    mode: Mode
    u: ExactVector | None
    slack: ExactVector | Fraction | None = None
    consistent: bool | None = None


def _restricted_u(p: ObstacleProblem, rhs: Fraction = Fraction(1)) -> ExactVector:
    pos = p.positive_set
    sub = principal_submatrix(laplacian(p.graph), pos)
    try:
        u_pos = solve_linear(sub, [rhs] * len(pos))
    except SingularMatrixError:
        # cannot happen for a connected graph with a proper nonempty zero set
        raise ArithmeticError("restricted Laplacian block is singular") from None
    u = [Fraction(0)] * p.graph.n
    for i, x in zip(pos, u_pos):
        u[i] = x
    return tuple(u)


def solve_restricted(p: ObstacleProblem) -> ObstacleSolution:
    return ObstacleSolution(Mode.RESTRICTED, _restricted_u(p))


def solve_slack(p: ObstacleProblem) -> ObstacleSolution:
    u = _restricted_u(p)
    lu = laplacian(p.graph) @ u
    b = tuple(-lu[i] if i in p.zero_set else Fraction(0) for i in range(p.graph.n))
    return ObstacleSolution(Mode.SLACK, u, slack=b)


def solve_constant_shift(p: ObstacleProblem) -> ObstacleSolution:
    n, j = p.graph.n, len(p.zero_set)
    b = Fraction(n - j, n)
    u = _restricted_u(p, 1 - b)
    lu = laplacian(p.graph) @ u
    consistent = all(lu[i] + b == 0 for i in p.zero_set)
    return ObstacleSolution(Mode.CONSTANT_SHIFT, u if consistent else None, slack=b, consistent=consistent)


_SOLVERS = {
    Mode.RESTRICTED: solve_restricted,
    Mode.SLACK: solve_slack,
    Mode.CONSTANT_SHIFT: solve_constant_shift,
}


def solve(p: ObstacleProblem, mode: Mode | str = Mode.RESTRICTED) -> ObstacleSolution:
    return _SOLVERS[Mode(mode)](p)


@dataclass(frozen=True)
class Violation:
    row: int
    lhs: Fraction
    rhs: Fraction
    what: str

    def __str__(self) -> str:
        return f"v{self.row + 1}: {self.what}: {format_fraction(self.lhs)} != {format_fraction(self.rhs)}"


@dataclass(frozen=True)
class VerificationReport:
    violations: tuple[Violation, ...] = field(default_factory=tuple)
    note: str | None = None

    @property
    def ok(self) -> bool:
        return not self.violations and self.note is None

    @property
    def failed_rows(self) -> list[int]:
        return sorted({v.row for v in self.violations})


def verify_solution(p: ObstacleProblem, s: ObstacleSolution) -> VerificationReport:
    """Re-evaluate the defining equations of ``s.mode`` and collect every violated row."""
    n = p.graph.n
    if s.u is None:
        return VerificationReport(note="no solution vector to verify")
    if len(s.u) != n:
        raise ObstacleError(f"solution has {len(s.u)} entries, graph has {n} vertices")
    u = s.u
    lu = laplacian(p.graph) @ u
    zero = Fraction(0)
    out: list[Violation] = []

    for i in sorted(p.zero_set):
        if u[i] != 0:
            out.append(Violation(i, u[i], zero, "u must vanish on the zero set"))
    for i in p.positive_set:
        if u[i] <= 0:
            out.append(Violation(i, u[i], zero, "u must be positive off the zero set"))

    if s.mode is Mode.RESTRICTED:
        for i in p.positive_set:
            if lu[i] != 1:
                out.append(Violation(i, lu[i], Fraction(1), "(Lu)_i = 1"))
    elif s.mode is Mode.SLACK:
        b = s.slack
        if b is None or len(b) != n:
            raise ObstacleError("slack mode needs a slack vector of length n")
        for i in range(n):
            chi = Fraction(0 if i in p.zero_set else 1)
            if b[i] < 0:
                out.append(Violation(i, b[i], zero, "b_i >= 0"))
            if i not in p.zero_set and b[i] != 0:
                out.append(Violation(i, b[i], zero, "b vanishes off the zero set"))
            if lu[i] + b[i] != chi:
                out.append(Violation(i, lu[i] + b[i], chi, "(Lu)_i + b_i = chi_i"))
    else:
        b = Fraction(s.slack)
        for i in range(n):
            chi = Fraction(0 if i in p.zero_set else 1)
            if lu[i] + b != chi:
                out.append(Violation(i, lu[i] + b, chi, "(Lu)_i + b = chi_i"))
    return VerificationReport(tuple(out))


# ---------------------------------------------------------------- JSON

def problem_to_json(p: ObstacleProblem, mode: Mode | str = Mode.RESTRICTED) -> dict:
    return {
        "graph": graph_to_json(p.graph),
        "zero_set": sorted(i + 1 for i in p.zero_set),
        "mode": Mode(mode).value,
    }


def problem_from_json(data: dict) -> tuple[ObstacleProblem, Mode]:
    try:
        graph = graph_from_json(data["graph"])
        zeros = [int(i) - 1 for i in data["zero_set"]]
        mode = Mode(data.get("mode", Mode.RESTRICTED.value))
    except KeyError as exc:
        raise ObstacleError(f"problem JSON is missing {exc}") from None
    except ValueError as exc:
        raise ObstacleError(str(exc)) from None
    return ObstacleProblem(graph, zeros), mode


def solution_to_json(s: ObstacleSolution) -> dict:
    out: dict = {"mode": s.mode.value}
    if s.mode is Mode.CONSTANT_SHIFT:
        out["consistent"] = s.consistent
        out["b"] = format_fraction(s.slack)
    if s.u is not None:
        out["u"] = [format_fraction(x) for x in s.u]
    if s.mode is Mode.SLACK:
        out["b"] = [format_fraction(x) for x in s.slack]
    return out


def solution_from_json(data: dict) -> ObstacleSolution:
    mode = Mode(data["mode"])
    u = tuple(parse_fraction(x) for x in data["u"]) if data.get("u") is not None else None
    slack = None
    if mode is Mode.SLACK and "b" in data:
        slack = tuple(parse_fraction(x) for x in data["b"])
    elif mode is Mode.CONSTANT_SHIFT and "b" in data:
        slack = parse_fraction(data["b"])
    consistent = data.get("consistent") if mode is Mode.CONSTANT_SHIFT else None
    return ObstacleSolution(mode, u, slack, consistent)
