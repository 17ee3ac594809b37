"""Univariate polynomials with exact integer coefficients."""
from __future__ import annotations

from typing import Iterable

__all__ = ["UniPolynomial", "T"]


class UniPolynomial:
    """Integer polynomial; ``coeffs[k]`` is the coefficient of ``t**k``.

    Trailing zeros are stripped, so the zero polynomial has ``coeffs == ()``.
    Instances are immutable and hashable.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("UniPolynomial is immutable")

    @classmethod
    def constant(cls, c: int) -> "UniPolynomial":
        return cls([c])

    @classmethod
    def from_roots(cls, roots: Iterable[int], lead: int = 1) -> "UniPolynomial":
        """``lead * prod(r - t)`` over ``roots``; matches the det(L - tI) sign convention."""
        p = cls([lead])
        for r in roots:
            p = p * cls([r, -1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = UniPolynomial([other])
        return isinstance(other, UniPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"UniPolynomial({list(self.coeffs)})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            body = {0: str(mag), 1: ("" if mag == 1 else str(mag)) + "t"}.get(
                k, ("" if mag == 1 else str(mag)) + f"t^{k}"
            )
            parts.append(("-" if c < 0 else "+") + body)
        s = " ".join(p[0] + " " + p[1:] for p in parts)
        return s[2:] if s.startswith("+ ") else "-" + s[2:]

    def _coerce(self, other) -> "UniPolynomial":
        return UniPolynomial([other]) if isinstance(other, int) else other

    def __add__(self, other) -> "UniPolynomial":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return UniPolynomial(
            (a[k] if k < len(a) else 0) + (b[k] if k < len(b) else 0) for k in range(n)
        )

    __radd__ = __add__

    def __neg__(self) -> "UniPolynomial":
        return UniPolynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "UniPolynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "UniPolynomial":
        return self._coerce(other) - self

    def __mul__(self, other) -> "UniPolynomial":
        other = self._coerce(other)
        if self.is_zero() or other.is_zero():
            return UniPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "UniPolynomial":
        if e < 0:
            raise ValueError("negative exponent")
        result = UniPolynomial([1])
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def compose_shift(self, a: int) -> "UniPolynomial":
        """Return ``q(t) = p(t + a)`` by repeated synthetic (Taylor) shifting."""
        c = list(self.coeffs)
        n = len(c)
        for i in range(n - 1):
            for k in range(n - 2, i - 1, -1):
                c[k] += a * c[k + 1]
        return UniPolynomial(c)

    def divide_by_root(self, r: int) -> tuple["UniPolynomial", int]:
        """Synthetic division by ``(t - r)``; returns ``(quotient, remainder)``."""
        if self.is_zero():
            return UniPolynomial(), 0
        out = [0] * self.degree
        acc = 0
        for k in range(self.degree, 0, -1):
            acc = acc * r + self.coeffs[k]
            out[k - 1] = acc
        remainder = acc * r + self.coeffs[0]
        return UniPolynomial(out), remainder

    def to_text(self) -> str:
        """Space-separated coefficients, constant term first (``"0"`` for the zero polynomial)."""
        return " ".join(map(str, self.coeffs)) if self.coeffs else "0"

    @classmethod
    def from_text(cls, text: str) -> "UniPolynomial":
        return cls(int(tok) for tok in text.split())


T = UniPolynomial([0, 1])
