"""Reference computations that share no code with the package.

Sequences come from sympy's closed forms in sqrt(2) or from plain loops;
matrices use nested lists.
"""

from functools import lru_cache

import sympy as sp

_R2 = sp.sqrt(2)


@lru_cache(maxsize=None)
def pell(n: int) -> int:
    v = sp.expand(((1 + _R2) ** n - (1 - _R2) ** n) / (2 * _R2))
    return int(sp.nsimplify(v))


@lru_cache(maxsize=None)
def pell_lucas_half(n: int) -> int:
    """Q[n-1] = ((1+r2)^n + (1-r2)^n) / 2."""
    return int(sp.expand(((1 + _R2) ** n + (1 - _R2) ** n) / 2))


def loop_terms(step, initials, count):
    vals = list(initials)
    while len(vals) < count:
        vals.append(step(vals))
    return vals[:count]


def r_terms(count):
    return loop_terms(lambda v: 2 * v[-1] + v[-2] + 1, [0, 0], count)


def b_terms(count):
    return loop_terms(lambda v: v[-1] + 3 * v[-2] + v[-3], [0, 1, 1], count)


def jacobsthal_like(count):
    return loop_terms(lambda v: 6 * v[-2] - v[-4], [0, 1, 4, 7], count)


def matmul(a, b):
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(len(b[0]))]
            for i in range(len(a))]


def matpow_naive(m, n):
    out = [[int(i == j) for j in range(len(m))] for i in range(len(m))]
    for _ in range(n):
        out = matmul(out, m)
    return out


def sympy_charpoly(rows):
    x = sp.Symbol("x")
    p = sp.Matrix(rows).charpoly(x)
    return [int(c) for c in p.all_coeffs()], p.as_expr()


def sympy_squarefree(rows) -> bool:
    x = sp.Symbol("x")
    p = sp.Matrix(rows).charpoly(x).as_expr()
    return sp.degree(sp.gcd(p, sp.diff(p, x)), x) == 0
