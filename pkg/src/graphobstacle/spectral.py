"""Closed-form Laplacian spectra and characteristic polynomials for the standard families."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .graph import GraphFamily
from .polynomial import T, UniPolynomial

__all__ = [
    "Rational",
    "CosForm",
    "SpectrumEntry",
    "ClosedFormSpectrum",
    "SpectralError",
    "closed_form_spectrum",
    "tridiagonal_charpoly",
    "star_charpoly",
    "zero_multiplicity",
    "PATH",
    "CYCLE",
]

PATH = "path"
CYCLE = "cycle"


class SpectralError(ValueError):
    pass


@dataclass(frozen=True)
class Rational:
    q: Fraction

    def value(self) -> float:
        return float(self.q)

    def __str__(self) -> str:
        return str(self.q)


@dataclass(frozen=True)
class CosForm:
    """``a - b*cos(num*pi/den)``."""

    a: int
    b: int
    num: int
    den: int

    def value(self) -> float:
        return self.a - self.b * math.cos(self.num * math.pi / self.den)

    def __str__(self) -> str:
        return f"{self.a}-{self.b}cos({self.num}pi/{self.den})"


Descriptor = Union[Rational, CosForm]


@dataclass(frozen=True)
class SpectrumEntry:
    descriptor: Descriptor
    multiplicity: int
    value: float


@dataclass(frozen=True)
class ClosedFormSpectrum:
    entries: tuple[SpectrumEntry, ...]

    @property
    def size(self) -> int:
        return sum(e.multiplicity for e in self.entries)

    def values(self) -> list[float]:
        """Eigenvalues with multiplicity, ascending."""
        return [e.value for e in self.entries for _ in range(e.multiplicity)]

    def rational_multiset(self) -> dict[Fraction, int] | None:
        """``{eigenvalue: multiplicity}`` when every descriptor is rational, else ``None``."""
        if not all(isinstance(e.descriptor, Rational) for e in self.entries):
            return None
        return {e.descriptor.q: e.multiplicity for e in self.entries}


def _cos_descriptor(a: int, b: int, num: int, den: int) -> Descriptor:
    # cos(r*pi) is rational only at r in {0, 1/3, 1/2, 2/3, 1} (mod 2, up to sign)
    frac = Fraction(num, den) % 2
    exact = {
        Fraction(0): 1, Fraction(1, 3): Fraction(1, 2), Fraction(1, 2): 0,
        Fraction(2, 3): Fraction(-1, 2), Fraction(1): -1, Fraction(4, 3): Fraction(-1, 2),
        Fraction(3, 2): 0, Fraction(5, 3): Fraction(1, 2),
    }
    if frac in exact:
        return Rational(Fraction(a) - b * Fraction(exact[frac]))
    return CosForm(a, b, frac.numerator, frac.denominator)


def _assemble(pairs: list[tuple[Descriptor, int]]) -> ClosedFormSpectrum:
    merged: dict[Descriptor, int] = {}
    for d, mult in pairs:
        if mult > 0:
            merged[d] = merged.get(d, 0) + mult
    entries = [SpectrumEntry(d, m, d.value()) for d, m in merged.items()]
    entries.sort(key=lambda e: e.value)
    return ClosedFormSpectrum(tuple(entries))


def closed_form_spectrum(family: GraphFamily) -> ClosedFormSpectrum:
    tag, params = family.tag, family.params
    if tag == "path":
        (n,) = params
        return _assemble([(_cos_descriptor(2, 2, k, n), 1) for k in range(n)])
    if tag == "cycle":
        (n,) = params
        # k and n - k give the same cosine; pair them symbolically
        pairs = []
        for k in range(n // 2 + 1):
            mult = 1 if k == 0 or 2 * k == n else 2
            pairs.append((_cos_descriptor(2, 2, 2 * k, n), mult))
        return _assemble(pairs)
    if tag == "complete":
        (n,) = params
        return _assemble([(Rational(Fraction(0)), 1), (Rational(Fraction(n)), n - 1)])
    m, n = params
    return _assemble([
        (Rational(Fraction(0)), 1),
        (Rational(Fraction(m)), n - 1),
        (Rational(Fraction(n)), m - 1),
        (Rational(Fraction(m + n)), 1),
    ])


def tridiagonal_charpoly(n: int, kind: str) -> UniPolynomial:
    """det(L - tI) for Path(n) or Cycle(n) from the three-term determinant recurrence.

    ``T_k`` is the k x k tridiagonal determinant with ``2 - t`` on the
    diagonal: ``T_k = (2 - t) T_{k-1} - T_{k-2}``, ``T_0 = 1``, ``T_1 = 2 - t``.
    """
    if kind == PATH:
        if n < 1:
            raise SpectralError(f"path needs n >= 1, got {n}")
    elif kind == CYCLE:
        if n < 3:
            raise SpectralError(f"cycle needs n >= 3, got {n}")
    else:
        raise SpectralError(f"unknown kind {kind!r}")

    two_minus_t = 2 - T
    tri = [UniPolynomial([1]), two_minus_t]
    for _ in range(2, n + 1):
        tri.append(two_minus_t * tri[-1] - tri[-2])

    if kind == CYCLE:
        return tri[n] - tri[n - 2] - 2
    if n == 1:
        return -T

    def d(k: int) -> UniPolynomial:
        # 2 - t diagonal except a 1 - t corner
        if k == 0:
            return UniPolynomial([1])
        return (1 - T) * tri[k - 1] - (tri[k - 2] if k >= 2 else UniPolynomial())

    return (1 - T) * d(n - 1) - d(n - 2)


def star_charpoly(p: UniPolynomial, n: int) -> UniPolynomial:
    """Characteristic polynomial of the star of a graph from the graph's own.

    ``p`` is det(L - tI) of an n-vertex graph. Returns
    ``-t (n + 1 - t) p(t - 1) / (1 - t)``.
    """
    if p.degree != n:
        raise SpectralError(f"polynomial of degree {p.degree} is not the charpoly of a {n}-vertex graph")
    if p(0) != 0:
        raise SpectralError("not a Laplacian charpoly: p(0) != 0")
    shifted = p.compose_shift(-1)
    quotient, remainder = shifted.divide_by_root(1)
    if remainder != 0:
        raise ArithmeticError(f"division by (1 - t) left remainder {remainder}")
    # p(t-1)/(1-t) = -quotient
    return -T * (n + 1 - T) * (-quotient)


def zero_multiplicity(p: UniPolynomial) -> int:
    if p.is_zero():
        raise SpectralError("zero polynomial has no finite root multiplicity")
    return next(k for k, c in enumerate(p.coeffs) if c != 0)
