"""Catalog of Pell-family identities with an exact checker.

Each entry is a closed predicate over one, two or three integer indices.
Both sides are evaluated with the sequence engine and compared as ints.
Statements with a denominator are stored multiplied through; the original
fractional form is kept in ``Identity.fractional`` for display only.

Alternating identities take the sign function as an argument so the
harness can swap ``(-1)**k`` for ``(-1)**(k+1)`` and confirm the predicate
is not vacuous.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from .sequences import DomainError, SequenceId, accessor

E = accessor(SequenceId.E)
Q = accessor(SequenceId.Q)
QH = accessor(SequenceId.QHAT)
b = accessor(SequenceId.B)
r = accessor(SequenceId.R)
a = accessor(SequenceId.A)

SignFn = Callable[[int], int]


def _alt(k: int) -> int:
    return -1 if k % 2 else 1


def _flipped(k: int) -> int:
    return -_alt(k)


# I-01 takes (n, a, b); the free shifts a, b are capped here.
SHIFT_CAP = 20


@dataclass(frozen=True)
class Identity:
    code: str
    origin: str
    formula: str
    params: tuple[str, ...]
    lower: tuple[int, ...]
    sides: Callable[..., tuple[int, int]] = field(repr=False, compare=False)
    alternating: bool = False
    fractional: str | None = None
    constraint: Callable[..., bool] | None = field(default=None, repr=False, compare=False)
    bound_note: str | None = None
    # known misprint: the incorrect statement, kept so it can be shown to fail
    printed: str | None = None
    printed_sides: Callable[..., tuple[int, int]] | None = field(default=None, repr=False, compare=False)

    @property
    def arity(self) -> int:
        return len(self.params)

    def admits(self, args: tuple[int, ...]) -> bool:
        if len(args) != self.arity:
            return False
        if any(x < lo for x, lo in zip(args, self.lower)):
            return False
        return self.constraint is None or self.constraint(*args)

    def describe_bounds(self) -> str:
        parts = [f"{p} >= {lo}" for p, lo in zip(self.params, self.lower)]
        if self.code == "I-02":
            parts.append("m >= n")
        return ", ".join(parts)


@dataclass(frozen=True)
class IdentityCase:
    code: str
    args: tuple[int, ...]
    lhs: int
    rhs: int
    passed: bool

    @property
    def n(self) -> int:
        return self.args[0]

    @property
    def m(self) -> int | None:
        return self.args[1] if len(self.args) > 1 else None


@dataclass
class IdentityReport:
    code: str
    ranges: dict[str, tuple[int, int]]
    checked: int = 0
    failures: list[IdentityCase] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def merge(self, other: IdentityReport) -> IdentityReport:
        if other.code != self.code:
            raise ValueError("cannot merge reports for different identities")
        return IdentityReport(self.code, self.ranges, self.checked + other.checked,
                              self.failures + other.failures)


_CATALOG: list[Identity] = []


def _add(code, origin, formula, params, lower, sides, **kw):
    _CATALOG.append(Identity(code, origin, formula, tuple(params), tuple(lower), sides, **kw))


# -- classical Pell identities -------------------------------------------------

_add("I-01", "classical", "E(n+a)E(n+b) - E(n)E(n+a+b) = E(a)E(b)(-1)^n",
     "nab", (0, 0, 0),
     lambda n, i, j, s=_alt: (E(n + i) * E(n + j) - E(n) * E(n + i + j), E(i) * E(j) * s(n)),
     alternating=True,
     bound_note="a, b range over all integers; restricted to 0..20 for the harness")
_add("I-02", "classical", "E(m)E(n+1) - E(m+1)E(n) = (-1)^n E(m-n)",
     "nm", (0, 0),
     lambda n, m, s=_alt: (E(m) * E(n + 1) - E(m + 1) * E(n), s(n) * E(m - n)),
     alternating=True, constraint=lambda n, m: m >= n,
     bound_note="m >= n so that E(m-n) has a non-negative index")
_add("I-03", "classical", "E(n)^2 + E(n+1)^2 = E(2n+1)",
     "n", (0,), lambda n: (E(n) ** 2 + E(n + 1) ** 2, E(2 * n + 1)))

# -- addition formulas from powers of the det-0 generator ----------------------

_add("C1-1", "U1 addition formula", "E(m+n-1) = E(m-1)E(n-1) + E(n)(2E(m-1) + E(m-2))",
     "nm", (1, 2),
     lambda n, m: (E(m + n - 1), E(m - 1) * E(n - 1) + E(n) * (2 * E(m - 1) + E(m - 2))),
     printed="E(m+n-1) = 2E(m-1)E(n-1) + E(n)(E(m-1) + E(m-2))",
     printed_sides=lambda n, m: (E(m + n - 1), 2 * E(m - 1) * E(n - 1) + E(n) * (E(m - 1) + E(m - 2))),
     bound_note="m >= 2 keeps E(m-2) inside the engine domain")
_add("C1-2", "U1 addition formula",
     "E(m+n-1) + E(m+n-2) = 2E(m-1)E(n) + (E(m-1) + E(m-2))(E(n) + E(n-1))",
     "nm", (1, 2),
     lambda n, m: (E(m + n - 1) + E(m + n - 2),
                   2 * E(m - 1) * E(n) + (E(m - 1) + E(m - 2)) * (E(n) + E(n - 1))),
     bound_note="m >= 2 keeps E(m-2) inside the engine domain")
_add("C1-3", "U1 addition formula", "E(m+n) = E(m)(E(n) + E(n-1)) + E(n)(E(m) + E(m-1))",
     "nm", (1, 1),
     lambda n, m: (E(m + n), E(m) * (E(n) + E(n - 1)) + E(n) * (E(m) + E(m - 1))))
_add("C1-4", "U1 addition formula",
     "E(m+n) + E(m+n-1) = 2E(m)E(n) + (E(m) + E(m-1))(E(n) + E(n-1))",
     "nm", (1, 1),
     lambda n, m: (E(m + n) + E(m + n - 1),
                   2 * E(m) * E(n) + (E(m) + E(m - 1)) * (E(n) + E(n - 1))))

# -- Binet corollaries for E and Q ---------------------------------------------

_add("I4", "Binet formula for E and Q", "Q(n-1) = E(n) + E(n-1)",
     "n", (1,), lambda n: (Q(n - 1), E(n) + E(n - 1)))
_add("I3", "Binet formula for E and Q", "E(n-1) + E(n-2) = 2E(n) - Q(n-1)",
     "n", (2,), lambda n: (E(n - 1) + E(n - 2), 2 * E(n) - Q(n - 1)),
     bound_note="no bound stated; n >= 2 is the smallest with all indices >= 0")

# -- det-1 generator -------------------------------------------------------------

_add("L4", "b and E", "E(n) = b(n) + b(n-1)",
     "n", (1,), lambda n: (E(n), b(n) + b(n - 1)))
_add("L6", "Pell recurrence rearranged", "3E(n-1) + E(n) = E(n+1) - E(n-2)",
     "n", (2,), lambda n: (3 * E(n - 1) + E(n), E(n + 1) - E(n - 2)),
     bound_note="stated for n >= 1; n >= 2 keeps E(n-2) inside the engine domain")
_add("SIMP", "Simpson's formula", "E(n)E(n-2) - E(n-1)^2 = (-1)^(n-1)",
     "n", (2,), lambda n, s=_alt: (E(n) * E(n - 2) - E(n - 1) ** 2, s(n - 1)),
     alternating=True,
     bound_note="no bound stated; n >= 2 is the smallest with all indices >= 0")
_add("L7", "Cassini-type identity", "E(n)^2 - E(n-1)^2 - 2E(n)E(n-1) = (-1)^(n-1)",
     "n", (1,), lambda n, s=_alt: (E(n) ** 2 - E(n - 1) ** 2 - 2 * E(n) * E(n - 1), s(n - 1)),
     alternating=True)
_add("L13", "Q and E", "Q(n) = E(n) + E(n+1)",
     "n", (1,), lambda n: (Q(n), E(n) + E(n + 1)))
_add("DET2", "determinant of U2^n", "(Q(n-1) - 2b(n))(-1)^n = 1",
     "n", (1,), lambda n, s=_alt: ((Q(n - 1) - 2 * b(n)) * s(n), 1),
     alternating=True)

_add("ID7", "U2 addition formula",
     "E(m+n) + E(m+n-1) - b(m+n) = (E(m)+E(m-1)-b(m))(E(n)+E(n-1)-b(n)) + b(m)b(n) + E(m)E(n)",
     "nm", (1, 1),
     lambda n, m: (E(m + n) + E(m + n - 1) - b(m + n),
                   (E(m) + E(m - 1) - b(m)) * (E(n) + E(n - 1) - b(n)) + b(m) * b(n) + E(m) * E(n)))
_add("ID8", "U2 addition formula",
     "b(m+n) = b(n)(E(m)+E(m-1)-b(m)) + b(m)(E(n)+E(n-1)-b(n)) + E(m)E(n)",
     "nm", (1, 1),
     lambda n, m: (b(m + n),
                   b(n) * (E(m) + E(m - 1) - b(m)) + b(m) * (E(n) + E(n - 1) - b(n)) + E(m) * E(n)))
_add("ID9", "U2 addition formula", "E(m+n) = E(n)(E(m) + E(m-1)) + E(m)(E(n) + E(n-1))",
     "nm", (1, 1),
     lambda n, m: (E(m + n), E(n) * (E(m) + E(m - 1)) + E(m) * (E(n) + E(n - 1))))
_add("ID10", "U2 addition formula",
     "E(m+n) + E(m+n-1) = (E(m) + E(m-1))(E(n) + E(n-1)) + 2E(m)E(n)",
     "nm", (1, 1),
     lambda n, m: (E(m + n) + E(m + n - 1),
                   (E(m) + E(m - 1)) * (E(n) + E(n - 1)) + 2 * E(m) * E(n)))
_add("ID11", "U2 addition formula via Q", "Q(m+n-1) = Q(n-1)Q(m-1) + 2E(n)E(m)",
     "nm", (1, 1),
     lambda n, m: (Q(m + n - 1), Q(n - 1) * Q(m - 1) + 2 * E(n) * E(m)))
_add("ID12", "U2 addition formula via Q", "E(m+n) = E(m)Q(n-1) + E(n)Q(m-1)",
     "nm", (1, 1),
     lambda n, m: (E(m + n), E(m) * Q(n - 1) + E(n) * Q(m - 1)))
_add("ID13", "U2 addition formula via Q",
     "b(m+n) = b(n)Q(m-1) + b(m)Q(n-1) - 2b(n)b(m) + E(n)E(m)",
     "nm", (1, 1),
     lambda n, m: (b(m + n), b(n) * Q(m - 1) + b(m) * Q(n - 1) - 2 * b(n) * b(m) + E(n) * E(m)))

_add("L11", "b and r by parity", "b(n) = r(n) + (n mod 2)",
     "n", (1,), lambda n: (b(n), r(n) + n % 2))
_add("L12", "Pell-Lucas and E", "QHAT(n) = E(n+1) + E(n-1)",
     "n", (1,), lambda n: (QH(n), E(n + 1) + E(n - 1)))
_add("C13", "Pell-Lucas and r", "QHAT(n) = 4r(n) + 2",
     "n", (0,), lambda n: (QH(n), 4 * r(n) + 2))
_add("C16", "Q and r", "Q(n) = 2r(n+1) + 1",
     "n", (0,), lambda n: (Q(n), 2 * r(n + 1) + 1))
_add("QHATQ", "Pell-Lucas and Q", "QHAT(n) = 2Q(n-1)",
     "n", (1,), lambda n: (QH(n), 2 * Q(n - 1)),
     bound_note="stated for n >= 0; n >= 1 keeps Q(n-1) inside the engine domain")
_add("L13A", "E and r", "E(n) = r(n) + r(n-1) + 1",
     "n", (2,), lambda n: (E(n), r(n) + r(n - 1) + 1))

_add("ID3", "steps of the U2 inverse powers", "r(n) + E(n) = r(n+1)",
     "n", (1,), lambda n: (r(n) + E(n), r(n + 1)))
_add("ID4", "steps of the U2 inverse powers", "E(n) + Q(n-1) = E(n+1)",
     "n", (1,), lambda n: (E(n) + Q(n - 1), E(n + 1)))
_add("ID5", "steps of the U2 inverse powers", "2E(n) + Q(n-1) = Q(n)",
     "n", (1,), lambda n: (2 * E(n) + Q(n - 1), Q(n)))
_add("ID6", "steps of the U2 inverse powers", "E(n) + Q(n-1) - r(n) = Q(n) - r(n+1)",
     "n", (1,), lambda n: (E(n) + Q(n - 1) - r(n), Q(n) - r(n + 1)))
_add("L22", "Q and b", "Q(n-1) = b(n+1) - b(n-1)",
     "n", (1,), lambda n: (Q(n - 1), b(n + 1) - b(n - 1)))

_add("C23-15", "U2^n U2^-n = I", "Q(n-1)^2 - (b(n) + r(n))Q(n-1) + 2b(n)r(n) - E(n)^2 = (-1)^n",
     "n", (1,),
     lambda n, s=_alt: (Q(n - 1) ** 2 - (b(n) + r(n)) * Q(n - 1) + 2 * b(n) * r(n) - E(n) ** 2, s(n)),
     alternating=True)
_add("C23-16", "U2^n U2^-n = I", "E(n)^2 - (b(n) + r(n))Q(n-1) + 2b(n)r(n) = 0",
     "n", (1,), lambda n: (E(n) ** 2 - (b(n) + r(n)) * Q(n - 1) + 2 * b(n) * r(n), 0))
_add("C23-17", "U2^n U2^-n = I", "2E(n)^2 - Q(n-1)^2 = (-1)^(n-1)",
     "n", (1,), lambda n, s=_alt: (2 * E(n) ** 2 - Q(n - 1) ** 2, s(n - 1)),
     alternating=True)
_add("BINB", "Binet formula for b", "2b(n) = (-1)^(n+1) + Q(n-1)",
     "n", (1,), lambda n, s=_alt: (2 * b(n), s(n + 1) + Q(n - 1)),
     alternating=True, fractional="b(n) = ((-1)^(n+1) + Q(n-1)) / 2",
     bound_note="no bound stated; n >= 1 keeps Q(n-1) inside the engine domain")

# -- det(-1) generator -----------------------------------------------------------

_add("L24", "a and r", "a(n) = r(n) + 1",
     "n", (0,), lambda n: (a(n), r(n) + 1))
_add("L25", "a and E", "a(n+1) = a(n) + E(n)",
     "n", (0,), lambda n: (a(n + 1), a(n) + E(n)))
_add("C26", "E, r and a", "E(n+1) = E(n) + r(n) + a(n)",
     "n", (0,), lambda n: (E(n + 1), E(n) + r(n) + a(n)))
_add("C28", "determinant of U3^n", "(a(n) + r(n))^2 - 2E(n)^2 = (-1)^n",
     "n", (1,), lambda n, s=_alt: ((a(n) + r(n)) ** 2 - 2 * E(n) ** 2, s(n)),
     alternating=True)

_add("I20", "U3 addition formula", "a(m+n) = a(m)a(n) + r(m)r(n) + E(m)E(n)",
     "nm", (1, 1), lambda n, m: (a(m + n), a(m) * a(n) + r(m) * r(n) + E(m) * E(n)))
_add("I21", "U3 addition formula", "r(m+n) = r(m)a(n) + a(m)r(n) + E(m)E(n)",
     "nm", (1, 1), lambda n, m: (r(m + n), r(m) * a(n) + a(m) * r(n) + E(m) * E(n)))
_add("I22", "U3 addition formula", "E(m+n) = E(n)(r(m) + a(m)) + E(m)(r(n) + a(n))",
     "nm", (1, 1), lambda n, m: (E(m + n), E(n) * (r(m) + a(m)) + E(m) * (r(n) + a(n))))
_add("I23", "U3 addition formula",
     "r(m+n) + a(m+n) = 2E(m)E(n) + (r(m) + a(m))(r(n) + a(n))",
     "nm", (1, 1),
     lambda n, m: (r(m + n) + a(m + n), 2 * E(m) * E(n) + (r(m) + a(m)) * (r(n) + a(n))))
_add("I24", "a, r and Q", "a(n) + r(n) = Q(n-1)",
     "n", (1,), lambda n: (a(n) + r(n), Q(n - 1)),
     bound_note="stated for n >= 0; n >= 1 keeps Q(n-1) inside the engine domain")
_add("I25", "a, r and Q", "E(n+1) = E(n) + Q(n-1)",
     "n", (1,), lambda n: (E(n + 1), E(n) + Q(n - 1)),
     bound_note="stated for n >= 0; n >= 1 keeps Q(n-1) inside the engine domain")
_add("I26", "a, r and Q", "a(n+1) = a(n) + E(n)",
     "n", (0,), lambda n: (a(n + 1), a(n) + E(n)))

_add("L29-9", "steps of the U3 inverse powers", "b(n) + E(n) = (-1)^(n+1) + b(n+1)",
     "n", (1,), lambda n, s=_alt: (b(n) + E(n), s(n + 1) + b(n + 1)),
     alternating=True)
_add("L29-10", "steps of the U3 inverse powers", "2b(n) + E(n) = (-1)^(n+1) + E(n+1)",
     "n", (1,), lambda n, s=_alt: (2 * b(n) + E(n), s(n + 1) + E(n + 1)),
     alternating=True)
_add("I27", "U3^n U3^-n = I", "E(n)^2 = (-1)^n r(n) + b(n)Q(n-1)",
     "n", (1,), lambda n, s=_alt: (E(n) ** 2, s(n) * r(n) + b(n) * Q(n - 1)),
     alternating=True)
_add("I28", "U3^n U3^-n = I", "Q(n-1) = (-1)^n + 2b(n)",
     "n", (1,), lambda n, s=_alt: (Q(n - 1), s(n) + 2 * b(n)),
     alternating=True)
_add("BINA", "Binet formula for a", "2a(n) = 1 + Q(n-1)",
     "n", (1,), lambda n: (2 * a(n), 1 + Q(n - 1)),
     fractional="a(n) = (1 + Q(n-1)) / 2",
     bound_note="no bound stated; n >= 1 keeps Q(n-1) inside the engine domain")
_add("BINR", "Binet formula for r", "2r(n) = Q(n-1) - 1",
     "n", (1,), lambda n: (2 * r(n), Q(n - 1) - 1),
     fractional="r(n) = (-1 + Q(n-1)) / 2",
     bound_note="no bound stated; n >= 1 keeps Q(n-1) inside the engine domain")

_BY_CODE = {idn.code: idn for idn in _CATALOG}
assert len(_BY_CODE) == len(_CATALOG), "duplicate identity codes"


def catalog() -> list[str]:
    return [idn.code for idn in _CATALOG]


def get(code: str) -> Identity:
    try:
        return _BY_CODE[code]
    except KeyError:
        raise DomainError(f"unknown identity code {code!r}") from None


def _evaluate(idn: Identity, args: tuple[int, ...], sign: SignFn = _alt) -> IdentityCase:
    lhs, rhs = idn.sides(*args, s=sign) if idn.alternating else idn.sides(*args)
    return IdentityCase(idn.code, args, lhs, rhs, lhs == rhs)


def check(code: str, n: int, m: int | None = None, *more: int) -> IdentityCase:
    """Evaluate one identity at ``(n[, m[, ...]])``."""
    idn = get(code)
    args = tuple(x for x in (n, m, *more) if x is not None)
    if len(args) != idn.arity:
        raise DomainError(f"{code} takes {idn.arity} argument(s) {idn.params}, got {len(args)}")
    if not idn.admits(args):
        raise DomainError(f"{code}{args} outside validity range: {idn.describe_bounds()}")
    return _evaluate(idn, args)


def _grid(idn: Identity, n_max: int, m_max: int | None) -> tuple[dict[str, tuple[int, int]], list[range]]:
    if idn.arity == 1:
        axes = [range(idn.lower[0], n_max + 1)]
    elif idn.arity == 2:
        cap = n_max if m_max is None else m_max
        axes = [range(idn.lower[0], cap + 1), range(idn.lower[1], cap + 1)]
    else:
        shift = min(SHIFT_CAP, n_max if m_max is None else m_max)
        axes = [range(idn.lower[0], n_max + 1)] + [range(lo, shift + 1) for lo in idn.lower[1:]]
    ranges = {p: (ax.start, ax.stop - 1) for p, ax in zip(idn.params, axes)}
    return ranges, axes


def cases(code: str, n_max: int, m_max: int | None = None):
    """All admissible argument tuples for ``check_range``, in order."""
    idn = get(code)
    _, axes = _grid(idn, n_max, m_max)
    for args in product(*axes):
        if idn.constraint is None or idn.constraint(*args):
            yield args


def check_range(code: str, n_max: int, m_max: int | None = None) -> IdentityReport:
    """Check every admissible case up to the caps.

    One-parameter identities run ``n <= n_max``.  Two-parameter identities
    run ``n, m <= m_max`` (``n_max`` when ``m_max`` is omitted).  I-01 runs
    ``n <= n_max`` with both shifts ``<= min(20, m_max)``.
    """
    idn = get(code)
    ranges, _ = _grid(idn, n_max, m_max)
    report = IdentityReport(code, ranges)
    for args in cases(code, n_max, m_max):
        case = _evaluate(idn, args)
        report.checked += 1
        if not case.passed:
            report.failures.append(case)
    return report


def check_printed(code: str, n: int, m: int | None = None, *more: int) -> IdentityCase:
    """Evaluate the known-incorrect statement recorded for an erratum entry."""
    idn = get(code)
    if idn.printed_sides is None:
        raise DomainError(f"{code} has no recorded misprint")
    args = tuple(x for x in (n, m, *more) if x is not None)
    if not idn.admits(args):
        raise DomainError(f"{code}{args} outside validity range: {idn.describe_bounds()}")
    lhs, rhs = idn.printed_sides(*args)
    return IdentityCase(code, args, lhs, rhs, lhs == rhs)


def errata() -> list[str]:
    return [idn.code for idn in _CATALOG if idn.printed is not None]


def sign_sensitive(code: str, n_max: int = 10) -> bool:
    """True if flipping every ``(-1)**k`` breaks the identity somewhere in range.

    Guards against predicates that hold for both signs.
    """
    idn = get(code)
    if not idn.alternating:
        raise DomainError(f"{code} has no alternating sign")
    return any(not _evaluate(idn, args, _flipped).passed for args in cases(code, n_max, n_max))


def export_catalog() -> list[dict]:
    """One JSON-ready record per identity."""
    return [
        {
            "code": idn.code,
            "origin": idn.origin,
            "formula": idn.formula,
            "fractional_form": idn.fractional,
            "params": list(idn.params),
            "bounds": idn.describe_bounds(),
            "bound_note": idn.bound_note,
            "alternating": idn.alternating,
            "printed_form": idn.printed,
        }
        for idn in _CATALOG
    ]
