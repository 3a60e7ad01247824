r"""Exact arithmetic in the ring Z[sqrt(2)].

The Binet formulas for the Pell family all live in this ring once the
divisions by 2 and 2*sqrt(2) are multiplied through.  With
``LAMBDA = 1 + sqrt(2)``::

    LAMBDA**n == Q[n-1] + E[n] * sqrt(2)          (n >= 1)

and the conjugate power ``(1 - sqrt(2))**n`` is its Galois image.
"""

from __future__ import annotations

from dataclasses import dataclass

from .sequences import DomainError, SequenceId, term


@dataclass(frozen=True)
class Zsqrt2:
    """The element ``a + b*sqrt(2)`` with integer coordinates."""

    a: int
    b: int = 0

    def __add__(self, other):
        if isinstance(other, int):
            return Zsqrt2(self.a + other, self.b)
        if isinstance(other, Zsqrt2):
            return Zsqrt2(self.a + other.a, self.b + other.b)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Zsqrt2(-self.a, -self.b)

    def __sub__(self, other):
        if isinstance(other, (int, Zsqrt2)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, int):
            return Zsqrt2(other - self.a, -self.b)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, int):
            return Zsqrt2(self.a * other, self.b * other)
        if isinstance(other, Zsqrt2):
            return Zsqrt2(self.a * other.a + 2 * self.b * other.b,
                          self.a * other.b + self.b * other.a)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative powers are not ring elements in general")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> Zsqrt2:
        return Zsqrt2(self.a, -self.b)

    def norm(self) -> int:
        return self.a * self.a - 2 * self.b * self.b

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def __str__(self):
        sign = "-" if self.b < 0 else "+"
        return f"{self.a}{sign}{abs(self.b)}√2"


ZERO = Zsqrt2(0, 0)
ONE = Zsqrt2(1, 0)
SQRT2 = Zsqrt2(0, 1)
# roots of x^2 - 2x - 1
LAMBDA = Zsqrt2(1, 1)
LAMBDA_BAR = Zsqrt2(1, -1)


def mul(x: Zsqrt2, y: Zsqrt2) -> Zsqrt2:
    return x * y


def power(x: Zsqrt2, n: int) -> Zsqrt2:
    """``x**n`` by binary powering; ``power(x, 0) == 1``."""
    return x ** n


def conj(x: Zsqrt2) -> Zsqrt2:
    return x.conj()


def binet_check(n: int) -> bool:
    """``(1+sqrt2)**n == Q[n-1] + E[n]*sqrt2``.

    Adding and subtracting the conjugate gives the usual two Binet formulas
    for E and Q, so this is their division-free form.
    """
    if n < 1:
        raise DomainError(f"binet_check({n}): requires n >= 1")
    return LAMBDA ** n == Zsqrt2(term(SequenceId.Q, n - 1), term(SequenceId.E, n))


def binet_sum_check(n: int) -> bool:
    """Conjugate powers sum to ``2 Q[n-1]`` and the sqrt2 parts cancel."""
    if n < 1:
        raise DomainError(f"binet_sum_check({n}): requires n >= 1")
    total = LAMBDA ** n + LAMBDA_BAR ** n
    diff = LAMBDA ** n - LAMBDA_BAR ** n
    return (total == Zsqrt2(2 * term(SequenceId.Q, n - 1), 0)
            and diff == Zsqrt2(0, 2 * term(SequenceId.E, n)))


def binet_pell_lucas_check(n: int) -> bool:
    """Rational part of ``(1+sqrt2)**n`` equals ``E[n] + E[n-1]``."""
    if n < 1:
        raise DomainError(f"binet_pell_lucas_check({n}): requires n >= 1")
    return (LAMBDA ** n).a == term(SequenceId.E, n) + term(SequenceId.E, n - 1)


def binet_b_check(n: int) -> bool:
    """``4 b[n] == 2(-1)**(n+1) + (lam2**n + lam3**n)`` and ``2 b[n] - Q[n-1] == (-1)**(n+1)``."""
    if n < 1:
        raise DomainError(f"binet_b_check({n}): requires n >= 1")
    b = term(SequenceId.B, n)
    sign = -1 if n % 2 == 0 else 1
    trace = LAMBDA ** n + LAMBDA_BAR ** n
    return (trace.b == 0 and 4 * b == 2 * sign + trace.a
            and 2 * b - term(SequenceId.Q, n - 1) == sign)


def binet_ar_check(n: int) -> bool:
    """``4 a[n] == 2 + (lam2**n + lam3**n)`` and ``4 r[n] == -2 + (...)``.

    Uses the ring directly, so n = 0 is covered without needing Q[-1].
    """
    if n < 0:
        raise DomainError(f"binet_ar_check({n}): requires n >= 0")
    trace = LAMBDA ** n + LAMBDA_BAR ** n
    a, r = term(SequenceId.A, n), term(SequenceId.R, n)
    ok = trace.b == 0 and 4 * a == 2 + trace.a and 4 * r == -2 + trace.a
    if n >= 1:
        q = term(SequenceId.Q, n - 1)
        ok = ok and 2 * a == 1 + q and 2 * r == q - 1
    return ok
