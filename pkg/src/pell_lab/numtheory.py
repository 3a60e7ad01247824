"""Divisibility, gcd and Sidon-set checks for r[n] = 2r[n-1] + r[n-2] + 1."""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from .sequences import DomainError, SequenceId, accessor, partial_sum

r = accessor(SequenceId.R)
J = accessor(SequenceId.J)


def _divides(d: int, x: int) -> bool:
    return x == 0 if d == 0 else x % d == 0


def congruence_mod4(m: int) -> bool:
    """r[2m+1] - r[2m] is 0 mod 4 for even m and 2 mod 4 for odd m."""
    if m < 1:
        raise DomainError(f"congruence_mod4({m}): requires m >= 1")
    expected = 0 if m % 2 == 0 else 2
    return (r(2 * m + 1) - r(2 * m)) % 4 == expected


def double_index_check(n: int) -> bool:
    """r[2n] - (n mod 2) == 4 r[n] (r[n] + 1), plus the three divisibilities."""
    if n < 1:
        raise DomainError(f"double_index_check({n}): requires n >= 1")
    rn = r(n)
    target = r(2 * n) - n % 2
    return (target == 4 * rn * (rn + 1)
            and _divides(4, target)
            and _divides(rn, target)
            and _divides(rn + 1, target))


def gcd_consecutive(n: int) -> int:
    """Euclidean gcd of r[n] and r[n-1]."""
    if n < 2:
        raise DomainError(f"gcd_consecutive({n}): requires n >= 2")
    return gcd(r(n), r(n - 1))


def gcd_expected(n: int) -> int:
    """Closed-form value: 1 for even n, J[(n-1)/2] for odd n."""
    if n < 2:
        raise DomainError(f"gcd_expected({n}): requires n >= 2")
    return 1 if n % 2 == 0 else J((n - 1) // 2)


@dataclass(frozen=True)
class GcdRow:
    n: int
    k: int
    lhs: tuple[int, int]
    gcd_reduced: int
    gcd_direct: int

    @property
    def agrees(self) -> bool:
        return self.gcd_reduced == self.gcd_direct


def gcd_reduction_rows(n: int, ks: list[int] | None = None) -> list[GcdRow]:
    """Rows gcd(r[n-k+1] - r[k-2], r[n-k] + r[k-1] + 1) against gcd(r[n], r[n-1]).

    ``n`` and every ``k`` must be even with ``2 <= k <= n``; ``ks`` defaults to
    all such k.  ``math.gcd`` works on absolute values, so a negative first
    argument is fine.
    """
    if n < 2 or n % 2:
        raise DomainError(f"gcd_reduction_rows: n = {n} must be even and >= 2")
    if ks is None:
        ks = list(range(2, n + 1, 2))
    direct = gcd(r(n), r(n - 1))
    rows = []
    for k in ks:
        if k % 2 or not 2 <= k <= n:
            raise DomainError(f"gcd_reduction_rows: k = {k} must be even with 2 <= k <= {n}")
        x, y = r(n - k + 1) - r(k - 2), r(n - k) + r(k - 1) + 1
        rows.append(GcdRow(n, k, (x, y), gcd(x, y), direct))
    return rows


def partial_sum_bound(n_max: int) -> bool:
    """s[n] < r[n+1] for every 1 <= n <= n_max."""
    if n_max < 1:
        raise DomainError(f"partial_sum_bound({n_max}): requires n_max >= 1")
    s = partial_sum(0)
    for n in range(1, n_max + 1):
        s += r(n)
        if not s < r(n + 1):
            return False
    return True


@dataclass(frozen=True)
class SidonReport:
    n_max: int
    distinct: bool
    first_collision: tuple[int, int, int, int] | None = None
    sums_checked: int = 0


def sidon_check(n_max: int) -> SidonReport:
    """Pairwise sums r[i] + r[j], 1 <= i <= j <= n_max, all distinct?

    Index 0 is excluded: r[0] == r[1] == 0 and a set keeps that value once.
    """
    if n_max < 1:
        raise DomainError(f"sidon_check({n_max}): requires n_max >= 1")
    seen: dict[int, tuple[int, int]] = {}
    count = 0
    for j in range(1, n_max + 1):
        for i in range(1, j + 1):
            total = r(i) + r(j)
            count += 1
            if total in seen:
                k, l = seen[total]
                return SidonReport(n_max, False, (k, l, i, j), count)
            seen[total] = (i, j)
    return SidonReport(n_max, True, None, count)
