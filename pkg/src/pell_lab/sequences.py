"""Exact evaluation of the Pell-family sequences.

Every sequence is an affine linear recurrence

    x[n] = c[0]*x[n-1] + c[1]*x[n-2] + ... + c[k-1]*x[n-k] + constant

with ``k`` stored initial values.  All arithmetic is on Python ints, so
there is no overflow at any index.

Tags:

    E     Pell numbers              0, 1, 2, 5, 12, ...
    Q     generalized Pell          1, 3, 7, 17, ...        Q[n] = E[n] + E[n+1]
    QHAT  Pell-Lucas                2, 2, 6, 14, ...        QHAT[n] = 2 Q[n-1]
    B     b[n] = b[n-1] + 3b[n-2] + b[n-3]                  E[n] = b[n] + b[n-1]
    R     r[n] = 2r[n-1] + r[n-2] + 1                       0, 0, 1, 3, 8, 20, ...
    A     a[n] = 3a[n-1] - a[n-2] - a[n-3]                  a[n] = r[n] + 1
    S     s[n] = 3s[n-1] - s[n-2] - s[n-3] + 1              partial sums of r
    J     J[n] = 6J[n-2] - J[n-4]                           gcd(r[n], r[n-1]), n odd
"""

from __future__ import annotations

import enum
import threading
from dataclasses import dataclass


class DomainError(ValueError):
    """An index or argument lies outside the domain of an operation."""


class EmptyRangeError(ValueError):
    """A requested index range has ``lo > hi``."""


class SequenceId(str, enum.Enum):
    E = "E"
    Q = "Q"
    QHAT = "QHAT"
    B = "B"
    R = "R"
    A = "A"
    S = "S"
    J = "J"

    @classmethod
    def parse(cls, tag: str | SequenceId) -> SequenceId:
        if isinstance(tag, cls):
            return tag
        try:
            return cls(str(tag).upper())
        except ValueError:
            raise DomainError(f"unknown sequence tag {tag!r}") from None


@dataclass(frozen=True)
class RecurrenceSpec:
    """Affine linear recurrence with stored initial window.

    ``coeffs[0]`` multiplies the most recent term.  ``initials[0]`` is the
    value at ``base_index``.
    """

    order: int
    coeffs: tuple[int, ...]
    constant: int
    initials: tuple[int, ...]
    base_index: int = 0

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))
        object.__setattr__(self, "initials", tuple(int(v) for v in self.initials))
        if self.order < 1:
            raise ValueError("order must be positive")
        if not (len(self.coeffs) == self.order == len(self.initials)):
            raise ValueError(
                f"order {self.order} does not match "
                f"{len(self.coeffs)} coeffs / {len(self.initials)} initials"
            )

    def step(self, window: list[int]) -> int:
        """Next value given the last ``order`` values, oldest first."""
        acc = self.constant
        for c, v in zip(self.coeffs, reversed(window)):
            if c:
                acc += c * v
        return acc

    def evaluate(self, lo: int, hi: int) -> list[int]:
        """Values at indices ``lo..hi`` by a single linear pass."""
        if lo > hi:
            raise EmptyRangeError(f"empty range [{lo}, {hi}]")
        if lo < self.base_index:
            raise DomainError(f"index {lo} below base index {self.base_index}")
        values = list(self.initials)
        while len(values) <= hi - self.base_index:
            values.append(self.step(values[-self.order:]))
        return values[lo - self.base_index: hi - self.base_index + 1]


_BUILTIN = {
    SequenceId.E: RecurrenceSpec(2, (2, 1), 0, (0, 1)),
    SequenceId.Q: RecurrenceSpec(2, (2, 1), 0, (1, 3)),
    SequenceId.QHAT: RecurrenceSpec(2, (2, 1), 0, (2, 2)),
    SequenceId.B: RecurrenceSpec(3, (1, 3, 1), 0, (0, 1, 1)),
    # r[2] = 1 is forced by the recurrence from r[0] = r[1] = 0.
    SequenceId.R: RecurrenceSpec(2, (2, 1), 1, (0, 0)),
    SequenceId.A: RecurrenceSpec(3, (3, -1, -1), 0, (1, 1, 2)),
    SequenceId.S: RecurrenceSpec(3, (3, -1, -1), 1, (0, 0, 1)),
    SequenceId.J: RecurrenceSpec(4, (0, 6, 0, -1), 0, (0, 1, 4, 7)),
}


def builtin_spec(seq: SequenceId | str) -> RecurrenceSpec:
    return _BUILTIN[SequenceId.parse(seq)]


class _Memo:
    """Grow-only table of computed values per sequence.

    Fills are idempotent: every reader sees a prefix of the same list.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self._tables: dict[SequenceId, list[int]] = {}

    def upto(self, seq: SequenceId, n: int) -> list[int]:
        table = self._tables.get(seq)
        if table is not None and len(table) > n:
            return table
        with self._lock:
            spec = _BUILTIN[seq]
            table = list(self._tables.get(seq) or spec.initials)
            # grow geometrically so repeated small extensions stay linear overall
            target = max(n, 2 * len(table))
            while len(table) <= target:
                table.append(spec.step(table[-spec.order:]))
            self._tables[seq] = table
            return table

    def clear(self):
        with self._lock:
            self._tables.clear()


_memo = _Memo()


def term(seq: SequenceId | str, n: int) -> int:
    """Exact value of the sequence at index ``n``."""
    seq = SequenceId.parse(seq)
    if n < _BUILTIN[seq].base_index:
        raise DomainError(f"{seq.value}[{n}]: index below base index {_BUILTIN[seq].base_index}")
    return _memo.upto(seq, n)[n]


def terms(seq: SequenceId | str, lo: int, hi: int) -> list[int]:
    """Values at indices ``lo..hi`` inclusive."""
    seq = SequenceId.parse(seq)
    if lo > hi:
        raise EmptyRangeError(f"empty range [{lo}, {hi}]")
    if lo < _BUILTIN[seq].base_index:
        raise DomainError(f"{seq.value}[{lo}]: index below base index {_BUILTIN[seq].base_index}")
    return _memo.upto(seq, hi)[lo: hi + 1]


def accessor(seq: SequenceId | str):
    """``term`` specialised to one sequence, for tight loops."""
    seq = SequenceId.parse(seq)
    base = _BUILTIN[seq].base_index
    upto = _memo.upto

    def get(n: int) -> int:
        if n < base:
            raise DomainError(f"{seq.value}[{n}]: index below base index {base}")
        return upto(seq, n)[n]

    get.__name__ = seq.value
    return get


def partial_sum(n: int) -> int:
    """Sum of r[0..n] by direct summation (independent of the S recurrence)."""
    if n < 0:
        raise DomainError(f"partial_sum({n}): n must be non-negative")
    return sum(builtin_spec(SequenceId.R).evaluate(0, n))
