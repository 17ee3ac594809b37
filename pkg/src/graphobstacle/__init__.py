"""Exact graph-Laplacian toolkit: discrete obstacle problem, spectra, and generalized characteristic polynomials."""
from .graph import (
    Graph,
    GraphError,
    GraphFamily,
    attach_pendant,
    build,
    generate,
    is_connected,
    laplacian,
    star_of,
)
from .kernels import BACKEND
from .linalg import ExactMatrix, SingularMatrixError, charpoly, det_bareiss, inverse, rref, solve_linear
from .obstacle import Mode, ObstacleProblem, ObstacleSolution, solve, verify_solution
from .polynomial import UniPolynomial

__version__ = "0.1.0"
