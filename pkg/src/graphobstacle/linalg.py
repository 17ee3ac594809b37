"""Dense exact linear algebra over the rationals.

Entries are :class:`fractions.Fraction`, which keeps every value in lowest
terms with a positive denominator. Integer-only kernels (Bareiss,
Faddeev-LeVerrier, Jacobi) are dispatched to :mod:`graphobstacle.kernels`.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import kernels

__all__ = [
    "ExactMatrix",
    "ExactVector",
    "LinalgError",
    "SingularMatrixError",
    "MMatrixReport",
    "vector",
    "rref",
    "det_bareiss",
    "solve_linear",
    "inverse",
    "principal_submatrix",
    "mmatrix_check",
    "charpoly",
    "jacobi_eigenvalues",
    "format_fraction",
    "parse_fraction",
]

ExactVector = tuple[Fraction, ...]


class LinalgError(ValueError):
    """Shape or domain error in an exact linear-algebra call."""


class SingularMatrixError(LinalgError):
    def __init__(self, msg: str = "singular"):
        super().__init__(msg)


def vector(values: Iterable) -> ExactVector:
    return tuple(Fraction(v) for v in values)


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_fraction(token: str) -> Fraction:
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise LinalgError(f"not an exact rational: {token!r}") from None


@dataclass(frozen=True)
class ExactMatrix:
    rows: int
    cols: int
    entries: tuple[Fraction, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0 or len(self.entries) != self.rows * self.cols:
            raise LinalgError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence]) -> "ExactMatrix":
        r = len(rows)
        c = len(rows[0]) if r else 0
        if any(len(row) != c for row in rows):
            raise LinalgError("ragged rows")
        return cls(r, c, tuple(Fraction(x) for row in rows for x in row))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "ExactMatrix":
        return cls(rows, cols, (Fraction(0),) * (rows * cols))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> ExactVector:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def to_int_rows(self) -> list[list[int]]:
        if not self.is_integer():
            raise LinalgError("matrix has non-integer entries")
        return [[int(x) for x in self.row(i)] for i in range(self.rows)]

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_integer(self) -> bool:
        return all(x.denominator == 1 for x in self.entries)

    def is_symmetric(self) -> bool:
        return self.is_square and all(
            self[i, j] == self[j, i] for i in range(self.rows) for j in range(i + 1, self.cols)
        )

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix.from_rows([[self[i, j] for i in range(self.rows)] for j in range(self.cols)])

    def trace(self) -> Fraction:
        return sum((self[i, i] for i in range(min(self.rows, self.cols))), Fraction(0))

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._same_shape(other)
        return ExactMatrix(self.rows, self.cols, tuple(a - b for a, b in zip(self.entries, other.entries)))

    def scale(self, c) -> "ExactMatrix":
        c = Fraction(c)
        return ExactMatrix(self.rows, self.cols, tuple(c * x for x in self.entries))

    def __matmul__(self, other):
        if isinstance(other, ExactMatrix):
            if self.cols != other.rows:
                raise LinalgError(f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}")
            cols = [other.column(j) for j in range(other.cols)]
            return ExactMatrix.from_rows(
                [[sum((a * b for a, b in zip(self.row(i), col)), Fraction(0)) for col in cols]
                 for i in range(self.rows)]
            )
        v = vector(other)
        if len(v) != self.cols:
            raise LinalgError(f"cannot multiply {self.rows}x{self.cols} by vector of length {len(v)}")
        return tuple(sum((a * b for a, b in zip(self.row(i), v)), Fraction(0)) for i in range(self.rows))

    def column(self, j: int) -> ExactVector:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def _same_shape(self, other: "ExactMatrix") -> None:
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise LinalgError(f"shape mismatch {self.rows}x{self.cols} vs {other.rows}x{other.cols}")

    # Interchange text format: "rows cols" then row-major exact fractions.
    def to_text(self) -> str:
        lines = [f"{self.rows} {self.cols}"]
        lines += [" ".join(format_fraction(x) for x in self.row(i)) for i in range(self.rows)]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "ExactMatrix":
        tokens = text.split()
        if len(tokens) < 2:
            raise LinalgError("matrix text needs a 'rows cols' header")
        try:
            r, c = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise LinalgError(f"bad matrix header {tokens[:2]!r}") from None
        body = tokens[2:]
        if len(body) != r * c:
            raise LinalgError(f"{r}x{c} matrix needs {r * c} entries, got {len(body)}")
        return cls(r, c, tuple(parse_fraction(t) for t in body))

    def to_pretty(self) -> str:
        """Right-aligned columns of exact fractions, one row per line."""
        cells = [[format_fraction(x) for x in self.row(i)] for i in range(self.rows)]
        width = max((len(s) for row in cells for s in row), default=1)
        return "\n".join(" ".join(s.rjust(width) for s in row) for row in cells) + "\n"


def _require_square(m: ExactMatrix) -> None:
    if not m.is_square:
        raise LinalgError(f"expected a square matrix, got {m.rows}x{m.cols}")


def _gauss_jordan(a: list[list[Fraction]], ncols: int) -> list[int]:
    """Reduce ``a`` in place over its first ``ncols`` columns; returns pivot columns."""
    pivots = []
    r = 0
    nrows = len(a)
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return pivots


def rref(m: ExactMatrix) -> tuple[ExactMatrix, int]:
    a = m.to_rows()
    pivots = _gauss_jordan(a, m.cols)
    return (ExactMatrix.from_rows(a) if m.rows else m), len(pivots)


def _clear_denominators(m: ExactMatrix) -> tuple[list[list[int]], Fraction]:
    """Scale each row to integers; returns the rows and the factor det was multiplied by."""
    rows, factor = [], Fraction(1)
    for i in range(m.rows):
        row = m.row(i)
        d = math.lcm(*(x.denominator for x in row)) if row else 1
        rows.append([int(x * d) for x in row])
        factor *= d
    return rows, factor


def det_bareiss(m: ExactMatrix) -> Fraction:
    _require_square(m)
    rows, factor = _clear_denominators(m)
    return Fraction(kernels.bareiss_det(rows)) / factor


def solve_linear(a: ExactMatrix, b: Sequence) -> ExactVector:
    _require_square(a)
    rhs = vector(b)
    if len(rhs) != a.rows:
        raise LinalgError(f"right-hand side has length {len(rhs)}, matrix is {a.rows}x{a.cols}")
    aug = [list(a.row(i)) + [rhs[i]] for i in range(a.rows)]
    if len(_gauss_jordan(aug, a.cols)) < a.cols:
        raise SingularMatrixError()
    return tuple(row[-1] for row in aug)


def inverse(a: ExactMatrix) -> ExactMatrix:
    _require_square(a)
    n = a.rows
    aug = [list(a.row(i)) + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    if len(_gauss_jordan(aug, n)) < n:
        raise SingularMatrixError()
    return ExactMatrix.from_rows([row[n:] for row in aug]) if n else a


def principal_submatrix(m: ExactMatrix, keep: Iterable[int]) -> ExactMatrix:
    _require_square(m)
    idx = sorted(set(keep))
    for i in idx:
        if not 0 <= i < m.rows:
            raise LinalgError(f"index {i} out of range for {m.rows}x{m.cols} matrix")
    return ExactMatrix(len(idx), len(idx), tuple(m[i, j] for i in idx for j in idx))


@dataclass(frozen=True)
class MMatrixReport:
    """Which of the four diagonal-dominance hypotheses hold.

    ``witness`` names the offending indices of the first failing condition,
    checked in field order; it is ``None`` exactly when all four hold.
    """

    diag_positive: bool
    offdiag_nonpositive: bool
    rows_nonneg_sum: bool
    submatrix_condition: bool
    witness: frozenset[int] | None = None

    @property
    def ok(self) -> bool:
        return self.diag_positive and self.offdiag_nonpositive and self.rows_nonneg_sum and self.submatrix_condition


def mmatrix_check(m: ExactMatrix) -> MMatrixReport:
    """Evaluate the diagonal-dominance hypotheses that force a nonnegative inverse.

    The condition "every principal submatrix has a row with strictly positive
    sum" is decided without enumeration: build the digraph with an arc
    ``i -> j`` for each nonzero off-diagonal ``m[i, j]``; the condition holds
    iff every row can reach a row whose full sum is strictly positive.
    Under the sign hypotheses the rows that cannot are exactly a violating
    index set, reported as the witness.
    """
    _require_square(m)
    n = m.rows
    sums = [sum(m.row(i), Fraction(0)) for i in range(n)]

    bad_diag = [i for i in range(n) if m[i, i] <= 0]
    bad_off = next(((i, j) for i in range(n) for j in range(n) if i != j and m[i, j] > 0), None)
    bad_sum = [i for i in range(n) if sums[i] < 0]

    # reverse BFS from strictly positive rows
    reaches = [s > 0 for s in sums]
    preds: list[list[int]] = [[] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if i != j and m[i, j] != 0:
                preds[j].append(i)
    stack = [i for i in range(n) if reaches[i]]
    while stack:
        j = stack.pop()
        for i in preds[j]:
            if not reaches[i]:
                reaches[i] = True
                stack.append(i)
    stuck = [i for i in range(n) if not reaches[i]]

    witness = None
    if bad_diag:
        witness = frozenset(bad_diag[:1])
    elif bad_off is not None:
        witness = frozenset(bad_off)
    elif bad_sum:
        witness = frozenset(bad_sum[:1])
    elif stuck:
        witness = frozenset(stuck)
    return MMatrixReport(
        diag_positive=not bad_diag,
        offdiag_nonpositive=bad_off is None,
        rows_nonneg_sum=not bad_sum,
        submatrix_condition=not stuck,
        witness=witness,
    )


def charpoly(m: ExactMatrix) -> "UniPolynomial":
    """det(m - t*I) for an integer matrix, via Faddeev-LeVerrier."""
    from .polynomial import UniPolynomial

    _require_square(m)
    if not m.is_integer():
        raise LinalgError("charpoly is defined here for integer matrices only")
    monic = kernels.faddeev_leverrier(m.to_int_rows())
    sign = -1 if m.rows % 2 else 1
    return UniPolynomial([sign * c for c in monic])


def jacobi_eigenvalues(m: ExactMatrix, tol: float = 1e-12, max_sweeps: int = 100) -> list[float]:
    """All eigenvalues of a symmetric matrix, ascending, by cyclic Jacobi rotations."""
    _require_square(m)
    if tol <= 0:
        raise LinalgError("tol must be positive")
    if not m.is_symmetric():
        raise LinalgError("Jacobi iteration needs a symmetric matrix")
    rows = [[float(x) for x in m.row(i)] for i in range(m.rows)]
    return kernels.jacobi_eigenvalues(rows, tol, max_sweeps)
