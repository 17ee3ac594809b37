"""Brute-force oracles. None of these share code with the package under test."""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations


def perm_sign(p) -> int:
    sign, seen = 1, [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det(rows) -> Fraction:
    n = len(rows)
    total = Fraction(0)
    for p in permutations(range(n)):
        term = Fraction(perm_sign(p))
        for i in range(n):
            term *= rows[i][p[i]]
            if term == 0:
                break
        total += term
    return total


def laplacian_rows(n, edges):
    L = [[0] * n for _ in range(n)]
    for i, j in edges:
        L[i][j] = L[j][i] = -1
        L[i][i] += 1
        L[j][j] += 1
    return L


def genpoly_by_expansion(L) -> dict[frozenset, int]:
    """det(L - diag(x)) expanded over permutations; keys are variable sets.

    Each permutation contributes prod over fixed points i of (L_ii - x_i)
    times the non-fixed entries, so expand the fixed-point product directly.
    """
    n = len(L)
    out: dict[frozenset, int] = {}
    for p in permutations(range(n)):
        off = perm_sign(p)
        fixed = [i for i in range(n) if p[i] == i]
        for i in range(n):
            if p[i] != i:
                off *= L[i][p[i]]
                if off == 0:
                    break
        if off == 0:
            continue
        # prod_{i in fixed} (L_ii - x_i) = sum over chosen S of (-1)^|S| x^S prod_{fixed \ S} L_ii
        for k in range(len(fixed) + 1):
            for chosen in combinations(fixed, k):
                c = off * (-1) ** k
                for i in fixed:
                    if i not in chosen:
                        c *= L[i][i]
                if c:
                    key = frozenset(chosen)
                    out[key] = out.get(key, 0) + c
    return {k: v for k, v in out.items() if v}


def charpoly_by_expansion(rows) -> list[int]:
    """det(A - tI) coefficients (constant first) through the multilinear expansion."""
    n = len(rows)
    coeffs = [0] * (n + 1)
    for S, c in genpoly_by_expansion(rows).items():
        coeffs[len(S)] += c
    return coeffs


def spanning_tree_count(n, edges) -> int:
    """Count spanning trees by testing every (n-1)-edge subset for acyclicity."""
    if n == 1:
        return 1
    count = 0
    for subset in combinations(sorted(edges), n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for a, b in subset:
            ra, rb = find(a), find(b)
            if ra == rb:
                ok = False
                break
            parent[ra] = rb
        count += ok
    return count


def submatrix_condition_by_enumeration(rows) -> bool:
    """Every nonempty principal submatrix has a row with strictly positive sum."""
    n = len(rows)
    for k in range(1, n + 1):
        for S in combinations(range(n), k):
            if not any(sum(rows[i][j] for j in S) > 0 for i in S):
                return False
    return True


def path_gap_coefficient(n: int, subset) -> int:
    """Coefficient of prod x_S in the path generalized charpoly from gap lengths.

    Deleting the chosen vertices splits the path into runs; an interior run
    of length g contributes g + 1, a run touching an end contributes 1.
    """
    s = sorted(subset)
    if not s:
        return 0
    prod = 1
    for a, b in zip(s, s[1:]):
        prod *= b - a
    return (-1) ** len(s) * prod
