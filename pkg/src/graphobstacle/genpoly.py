"""Generalized characteristic polynomial det(L - diag(x_1, ..., x_n)).

The polynomial is multilinear, so it is stored as a map from vertex subsets
(bitmasks) to integer coefficients. The coefficient of ``prod_{i in S} x_i``
is ``(-1)^|S|`` times the principal minor of ``L`` on the complement of
``S``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from . import kernels
from .graph import Graph, delete_vertex, laplacian
from .linalg import principal_submatrix, det_bareiss
from .polynomial import UniPolynomial

__all__ = [
    "GENPOLY_MAX_N",
    "GenpolyError",
    "MultilinearPolynomial",
    "generalized_charpoly",
    "coefficient",
    "collapse",
    "substitute_shift",
    "x1_term_prop31",
    "pendant_genpoly",
    "linear_part",
    "mask_of",
    "members",
]

GENPOLY_MAX_N = 16


class GenpolyError(ValueError):
    pass


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out, i = [], 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def _submasks(mask: int):
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


@dataclass(frozen=True)
class MultilinearPolynomial:
    n: int
    terms: Mapping[int, int] = field(default_factory=dict)

    def __post_init__(self):
        full = (1 << self.n) - 1
        clean = {}
        for mask, c in self.terms.items():
            if mask & ~full or mask < 0:
                raise GenpolyError(f"monomial {members(mask)} uses a variable outside 0..{self.n - 1}")
            if c:
                clean[mask] = int(c)
        object.__setattr__(self, "terms", clean)

    def __getitem__(self, vertices) -> int:
        mask = vertices if isinstance(vertices, int) else mask_of(vertices)
        return self.terms.get(mask, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, MultilinearPolynomial) and self.n == other.n and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other: "MultilinearPolynomial") -> "MultilinearPolynomial":
        n = max(self.n, other.n)
        out = dict(self.terms)
        for mask, c in other.terms.items():
            out[mask] = out.get(mask, 0) + c
        return MultilinearPolynomial(n, out)

    def __neg__(self) -> "MultilinearPolynomial":
        return MultilinearPolynomial(self.n, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "MultilinearPolynomial") -> "MultilinearPolynomial":
        return self + (-other)

    def scale(self, c: int) -> "MultilinearPolynomial":
        return MultilinearPolynomial(self.n, {m: c * v for m, v in self.terms.items()})

    def times_affine(self, const: int, var: int, var_coeff: int, n: int | None = None) -> "MultilinearPolynomial":
        """Multiply by ``const + var_coeff * x_var``; ``x_var`` must not already occur."""
        n = self.n if n is None else n
        bit = 1 << var
        out: dict[int, int] = {}
        for mask, c in self.terms.items():
            if mask & bit:
                raise GenpolyError(f"x_{var} already occurs; product would not be multilinear")
            out[mask] = out.get(mask, 0) + const * c
            out[mask | bit] = out.get(mask | bit, 0) + var_coeff * c
        return MultilinearPolynomial(n, out)

    def relabel(self, old_of_new: list[int], n: int) -> "MultilinearPolynomial":
        """Rename variable ``k`` to ``old_of_new[k]`` inside an ``n``-variable polynomial."""
        out = {}
        for mask, c in self.terms.items():
            out[mask_of(old_of_new[k] for k in members(mask))] = c
        return MultilinearPolynomial(n, out)

    def sorted_terms(self) -> list[tuple[int, int]]:
        """Terms ordered by (degree, ascending variable list)."""
        return sorted(self.terms.items(), key=lambda kv: (bin(kv[0]).count("1"), members(kv[0])))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "terms": [
                {"vars": [v + 1 for v in members(mask)], "coeff": str(c)} for mask, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, data: dict) -> "MultilinearPolynomial":
        n = int(data["n"])
        terms: dict[int, int] = {}
        for t in data["terms"]:
            mask = mask_of(int(v) - 1 for v in t["vars"])
            terms[mask] = terms.get(mask, 0) + int(t["coeff"])
        return cls(n, terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mask, c in self.sorted_terms():
            mono = "*".join(f"x{v + 1}" for v in members(mask))
            parts.append(f"{c}" if not mono else (f"{c}*{mono}" if c not in (1, -1) else ("-" if c < 0 else "") + mono))
        return " + ".join(parts).replace("+ -", "- ")


def _check_cap(n: int) -> None:
    if n > GENPOLY_MAX_N:
        raise GenpolyError(f"generalized charpoly is capped at n <= {GENPOLY_MAX_N} vertices, got {n}")


def generalized_charpoly(g: Graph) -> MultilinearPolynomial:
    _check_cap(g.n)
    rows = laplacian(g).to_int_rows()
    full = (1 << g.n) - 1
    masks = list(range(1 << g.n))
    minors = kernels.principal_minors(rows, [full ^ s for s in masks])
    terms = {s: (-1 if bin(s).count("1") % 2 else 1) * d for s, d in zip(masks, minors)}
    return MultilinearPolynomial(g.n, terms)


def coefficient(g: Graph, s: Iterable[int]) -> int:
    s = set(s)
    bad = [v for v in s if not 0 <= v < g.n]
    if bad:
        raise GenpolyError(f"vertices {sorted(bad)} not in graph of order {g.n}")
    rest = [v for v in range(g.n) if v not in s]
    minor = det_bareiss(principal_submatrix(laplacian(g), rest))
    return (-1) ** len(s) * int(minor)


def collapse(mp: MultilinearPolynomial) -> UniPolynomial:
    """Set every variable equal to t."""
    coeffs = [0] * (mp.n + 1)
    for mask, c in mp.terms.items():
        coeffs[bin(mask).count("1")] += c
    return UniPolynomial(coeffs)


def substitute_shift(mp: MultilinearPolynomial, shifted: Iterable[int]) -> MultilinearPolynomial:
    """Substitute ``x_i -> x_i - 1`` for every ``i`` in ``shifted``."""
    smask = mask_of(shifted)
    if smask >> mp.n:
        raise GenpolyError(f"shift set {members(smask)} exceeds variables 0..{mp.n - 1}")
    out: dict[int, int] = {}
    for mask, c in mp.terms.items():
        movable = mask & smask
        for dropped in _submasks(movable):
            key = mask ^ dropped
            sign = -1 if bin(dropped).count("1") % 2 else 1
            out[key] = out.get(key, 0) + sign * c
    return MultilinearPolynomial(mp.n, out)


def linear_part(mp: MultilinearPolynomial, v: int) -> MultilinearPolynomial:
    """The terms of ``mp`` that contain ``x_v``."""
    bit = 1 << v
    return MultilinearPolynomial(mp.n, {m: c for m, c in mp.terms.items() if m & bit})


def _deleted_vertex_poly(g: Graph, v: int) -> MultilinearPolynomial:
    """Polynomial of ``g`` minus ``v`` with its neighbours shifted, in ``g``'s labels."""
    rest, old = delete_vertex(g, v)
    q = generalized_charpoly(rest).relabel(old, g.n)
    return substitute_shift(q, g.neighbors(v))


def x1_term_prop31(g: Graph, v: int) -> MultilinearPolynomial:
    """Part of the generalized charpoly linear in ``x_v``, built from the vertex-deleted graph."""
    if not 0 <= v < g.n:
        raise GenpolyError(f"vertex {v} out of range for n={g.n}")
    _check_cap(g.n)
    if g.n == 1:
        return MultilinearPolynomial(1, {1: -1})
    return _deleted_vertex_poly(g, v).times_affine(0, v, -1)


def pendant_genpoly(g: Graph, v: int) -> MultilinearPolynomial:
    """Generalized charpoly of ``attach_pendant(g, v)`` without the big determinant.

    Expanding along the new vertex ``w``:
    ``(1 - x_w) P_g(x_v - 1) - P_{g - v}(neighbours of v shifted)``.
    """
    if not 0 <= v < g.n:
        raise GenpolyError(f"vertex {v} out of range for n={g.n}")
    _check_cap(g.n + 1)
    n, w = g.n + 1, g.n
    main = substitute_shift(generalized_charpoly(g), [v]).times_affine(1, w, -1, n=n)
    if g.n == 1:
        minor = MultilinearPolynomial(n, {0: 1})
    else:
        minor = MultilinearPolynomial(n, _deleted_vertex_poly(g, v).terms)
    return main - minor
