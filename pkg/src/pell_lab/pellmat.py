"""Exact 3x3 integer matrices and the three Pell generator matrices.

    U1  = [[0,0,1],[1,1,1],[1,1,1]]   det  0
    U1T = transpose(U1)
    U2  = [[0,1,1],[1,0,1],[1,1,1]]   det  1
    U3  = [[1,0,1],[0,1,1],[1,1,1]]   det -1

Each ``closed_form_*`` builds the matrix power (or inverse power) from the
sequence engine; ``mat_pow`` builds it by repeated squaring.  The two routes
never share code, so they check each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from itertools import permutations
from typing import Sequence

from .sequences import DomainError, SequenceId, term
from .zsqrt2 import LAMBDA, LAMBDA_BAR, SQRT2, Zsqrt2

Row = tuple[int, int, int]


@dataclass(frozen=True)
class Mat3:
    rows: tuple[Row, Row, Row]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        if len(rows) != 3 or any(len(r) != 3 for r in rows):
            raise ValueError("Mat3 needs exactly 3 rows of 3 entries")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def of(cls, rows: Sequence[Sequence[int]]) -> Mat3:
        return cls(tuple(tuple(r) for r in rows))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: Mat3) -> Mat3:
        a, b = self.rows, other.rows
        return Mat3(tuple(
            tuple(a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j] for j in range(3))
            for i in range(3)
        ))

    def __mul__(self, k: int) -> Mat3:
        if not isinstance(k, int):
            return NotImplemented
        return Mat3(tuple(tuple(k * x for x in r) for r in self.rows))

    __rmul__ = __mul__

    def __neg__(self) -> Mat3:
        return self * -1

    @property
    def T(self) -> Mat3:
        return Mat3(tuple(zip(*self.rows)))

    def entries(self) -> tuple[int, ...]:
        return tuple(x for r in self.rows for x in r)

    def tolist(self) -> list[list[int]]:
        return [list(r) for r in self.rows]

    def __str__(self):
        return "[" + ", ".join("[" + ", ".join(map(str, r)) + "]" for r in self.rows) + "]"


@dataclass(frozen=True)
class Mat2:
    rows: tuple[tuple[int, int], tuple[int, int]]

    def __matmul__(self, other: Mat2) -> Mat2:
        (a, b), (c, d) = self.rows
        (e, f), (g, h) = other.rows
        return Mat2(((a * e + b * g, a * f + b * h), (c * e + d * g, c * f + d * h)))


IDENTITY = Mat3(((1, 0, 0), (0, 1, 0), (0, 0, 1)))
ZERO = Mat3(((0, 0, 0), (0, 0, 0), (0, 0, 0)))
U1 = Mat3(((0, 0, 1), (1, 1, 1), (1, 1, 1)))
U1T = U1.T
U2 = Mat3(((0, 1, 1), (1, 0, 1), (1, 1, 1)))
U3 = Mat3(((1, 0, 1), (0, 1, 1), (1, 1, 1)))
PELL_2x2 = Mat2(((2, 1), (1, 0)))

GENERATORS = {"u1": U1, "u1T": U1T, "u2": U2, "u3": U3}

PERMUTATION_MATRICES = tuple(
    Mat3(tuple(tuple(int(p[i] == j) for j in range(3)) for i in range(3)))
    for p in permutations(range(3))
)


def mat_pow(m: Mat3, n: int) -> Mat3:
    """``m**n`` by binary powering, O(log n) products."""
    if n < 0:
        raise DomainError("mat_pow: use closed_form_*_inv or inverse_unimodular for negative powers")
    result, base = IDENTITY, m
    while n:
        if n & 1:
            result = result @ base
        base = base @ base
        n >>= 1
    return result


def trace(m: Mat3) -> int:
    return m[0, 0] + m[1, 1] + m[2, 2]


def det(m: Mat3) -> int:
    (a, b, c), (d, e, f), (g, h, i) = m.rows
    return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)


def adjugate(m: Mat3) -> Mat3:
    """Transposed cofactor matrix, so ``m @ adjugate(m) == det(m) * I``."""
    r = m.rows

    def minor(i, j):
        rr = [row for k, row in enumerate(r) if k != i]
        (p, q), (s, t) = ([x for k, x in enumerate(row) if k != j] for row in rr)
        return p * t - q * s

    return Mat3(tuple(
        tuple((-1) ** (i + j) * minor(j, i) for j in range(3)) for i in range(3)
    ))


def inverse_unimodular(m: Mat3) -> Mat3:
    """Exact integer inverse of a matrix with determinant +-1."""
    d = det(m)
    if d not in (1, -1):
        raise DomainError(f"matrix has determinant {d}; no integer inverse")
    return adjugate(m) * d


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def _E(n: int) -> int:
    # E[-1] = E[1] - 2 E[0] = 1, running the recurrence one step backwards
    return 1 if n == -1 else term(SequenceId.E, n)


def _require_positive(name: str, n: int):
    if n < 1:
        raise DomainError(f"{name}({n}): requires n >= 1")


def closed_form_u1(n: int) -> Mat3:
    _require_positive("closed_form_u1", n)
    e0, e1, e2 = _E(n), _E(n - 1), _E(n - 2)
    return Mat3(((e1, e1, e1 + e2), (e0, e0, e0 + e1), (e0, e0, e0 + e1)))


def closed_form_u1T(n: int) -> Mat3:
    _require_positive("closed_form_u1T", n)
    e0, e1, e2 = _E(n), _E(n - 1), _E(n - 2)
    return Mat3(((e1, e0, e0), (e1, e0, e0), (e1 + e2, e0 + e1, e0 + e1)))


def closed_form_u2(n: int) -> Mat3:
    _require_positive("closed_form_u2", n)
    e, ep, b = term(SequenceId.E, n), term(SequenceId.E, n - 1), term(SequenceId.B, n)
    d = e + ep - b
    return Mat3(((d, b, e), (b, d, e), (e, e, e + ep)))


def closed_form_u2_inv(n: int) -> Mat3:
    """``U2**-n`` from Q[n-1], r[n] and E[n]."""
    _require_positive("closed_form_u2_inv", n)
    s = _sign(n)
    q, r, e = term(SequenceId.Q, n - 1), term(SequenceId.R, n), term(SequenceId.E, n)
    return Mat3((
        (s * (q - r), s * r, -s * e),
        (s * r, s * (q - r), -s * e),
        (-s * e, -s * e, s * q),
    ))


def closed_form_u3(n: int) -> Mat3:
    _require_positive("closed_form_u3", n)
    a, r, e = term(SequenceId.A, n), term(SequenceId.R, n), term(SequenceId.E, n)
    return Mat3(((a, r, e), (r, a, e), (e, e, r + a)))


def closed_form_u3_inv(n: int) -> Mat3:
    """``U3**-n`` from b[n], E[n] and Q[n-1]."""
    _require_positive("closed_form_u3_inv", n)
    s = _sign(n)
    b, e, q = term(SequenceId.B, n), term(SequenceId.E, n), term(SequenceId.Q, n - 1)
    return Mat3((
        (1 + s * b, s * b, -s * e),
        (s * b, 1 + s * b, -s * e),
        (-s * e, -s * e, s * q),
    ))


CLOSED_FORMS = {
    "u1": (U1, closed_form_u1),
    "u1T": (U1T, closed_form_u1T),
    "u2": (U2, closed_form_u2),
    "u3": (U3, closed_form_u3),
}
CLOSED_FORM_INVERSES = {
    "u2": (U2, closed_form_u2_inv),
    "u3": (U3, closed_form_u3_inv),
}


@dataclass(frozen=True)
class EigenTriple:
    lam: Zsqrt2
    vec: tuple[Zsqrt2, Zsqrt2, Zsqrt2]


def _ev(lam, *coords) -> EigenTriple:
    def z(x):
        return x if isinstance(x, Zsqrt2) else Zsqrt2(x)
    return EigenTriple(z(lam), tuple(z(c) for c in coords))


# Eigenvectors with denominators cleared (scaling is free).
EIGEN_SYSTEMS: dict[str, tuple[EigenTriple, ...]] = {
    "u1": (
        _ev(0, -1, 1, 0),
        _ev(LAMBDA_BAR, -LAMBDA, 1, 1),
        _ev(LAMBDA, -LAMBDA_BAR, 1, 1),
    ),
    "u1T": (
        _ev(0, 0, -1, 1),
        _ev(LAMBDA_BAR, -SQRT2, -SQRT2, 2),
        _ev(LAMBDA, SQRT2, SQRT2, 2),
    ),
    "u2": (
        _ev(-1, -1, 1, 0),
        _ev(LAMBDA_BAR, -SQRT2, -SQRT2, 2),
        _ev(LAMBDA, SQRT2, SQRT2, 2),
    ),
    "u3": (
        _ev(1, -1, 1, 0),
        _ev(LAMBDA_BAR, -SQRT2, -SQRT2, 2),
        _ev(LAMBDA, SQRT2, SQRT2, 2),
    ),
}


def eigen_residual(m: Mat3, t: EigenTriple) -> bool:
    """True iff ``m @ vec == lam * vec`` exactly in Z[sqrt2]."""
    if all(c.is_zero() for c in t.vec):
        return False
    for i in range(3):
        row = m.rows[i]
        lhs = reduce(lambda acc, j: acc + row[j] * t.vec[j], range(3), Zsqrt2(0))
        if lhs != t.lam * t.vec[i]:
            return False
    return True


def diagonal_power_check(n: int) -> bool:
    """The nonzero diagonal entries of D**n are ``Q[n-1] -+ E[n] sqrt2``."""
    _require_positive("diagonal_power_check", n)
    q, e = term(SequenceId.Q, n - 1), term(SequenceId.E, n)
    return LAMBDA ** n == Zsqrt2(q, e) and LAMBDA_BAR ** n == Zsqrt2(q, -e)


@dataclass(frozen=True, order=True)
class CharPoly:
    """``x**3 + c2 x**2 + c1 x + c0``."""

    c2: int
    c1: int
    c0: int

    def coeffs(self) -> tuple[int, int, int, int]:
        return (1, self.c2, self.c1, self.c0)

    def discriminant(self) -> int:
        b, c, d = self.c2, self.c1, self.c0
        return b * b * c * c - 4 * c ** 3 - 4 * b ** 3 * d - 27 * d * d + 18 * b * c * d

    def is_squarefree(self) -> bool:
        # a cubic has a repeated root iff its discriminant vanishes
        return self.discriminant() != 0

    def __call__(self, x):
        return ((x + self.c2) * x + self.c1) * x + self.c0

    def __str__(self):
        terms = ["x^3"]
        for c, mono in ((self.c2, "x^2"), (self.c1, "x"), (self.c0, "")):
            if c == 0:
                continue
            mag = abs(c)
            body = mono if mag == 1 and mono else f"{mag}{mono}"
            terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms)


def char_poly(m: Mat3) -> CharPoly:
    """Coefficients of ``det(xI - m)``."""
    r = m.rows
    principal_minors = (
        r[0][0] * r[1][1] - r[0][1] * r[1][0]
        + r[0][0] * r[2][2] - r[0][2] * r[2][0]
        + r[1][1] * r[2][2] - r[1][2] * r[2][1]
    )
    return CharPoly(-trace(m), principal_minors, -det(m))


def similar_over_rationals(a: Mat3, b: Mat3) -> bool | None:
    """Decide Q-similarity via characteristic polynomials.

    Returns ``False`` if the polynomials differ, ``True`` if they agree and
    have distinct roots, and ``None`` (undecided) if they agree but have a
    repeated root.
    """
    pa, pb = char_poly(a), char_poly(b)
    if pa != pb:
        return False
    return True if pa.is_squarefree() else None


def intro_mat2_check(n: int) -> bool:
    """``[[2,1],[1,0]]**n == [[E[n+1], E[n]], [E[n], E[n-1]]]``."""
    _require_positive("intro_mat2_check", n)
    result, base, k = Mat2(((1, 0), (0, 1))), PELL_2x2, n
    while k:
        if k & 1:
            result = result @ base
        base = base @ base
        k >>= 1
    e = lambda i: term(SequenceId.E, i)  # noqa: E731
    return result.rows == ((e(n + 1), e(n)), (e(n), e(n - 1)))
