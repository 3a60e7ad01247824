"""Census of the 512 binary 3x3 matrices that generate the Pell recurrence.

A matrix counts as Pell-generating when x^2 - 2x - 1 divides its
characteristic polynomial, i.e. its spectrum contains 1 +- sqrt(2).  The
third eigenvalue is then an integer (trace - 2), and

    trace(M**n) == lam1**n + 2 Q[n-1]        (n >= 1).

Three equivalence views are reported side by side:

* characteristic-polynomial buckets (equal to Q-similarity classes here,
  because every Pell-generating polynomial is squarefree);
* orbits under conjugation by the six permutation matrices;
* components under M ~ P M P^-1 for any rationally invertible binary P
  whose conjugate is again binary.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .pellmat import (
    PERMUTATION_MATRICES, U1, U2, U3, CharPoly, Mat3, adjugate, char_poly, det, trace,
)
from .sequences import SequenceId, term

PELL_QUADRATIC = (1, -2, -1)  # x^2 - 2x - 1

REPRESENTATIVES = {"u1": U1, "u2": U2, "u3": U3}

# expected bucket of each representative, by its third eigenvalue
REPRESENTATIVE_BUCKETS = {
    "u1": CharPoly(-2, -1, 0),   # x (x^2 - 2x - 1)
    "u2": CharPoly(-1, -3, -1),  # (x + 1)(x^2 - 2x - 1)
    "u3": CharPoly(-3, 1, 1),    # (x - 1)(x^2 - 2x - 1)
}


def matrix_from_index(idx: int) -> Mat3:
    """Entry (i, j) is bit ``8 - (3i + j)`` of ``idx`` (big-endian)."""
    if not 0 <= idx < 512:
        raise ValueError(f"index {idx} outside 0..511")
    bits = [(idx >> (8 - k)) & 1 for k in range(9)]
    return Mat3((tuple(bits[0:3]), tuple(bits[3:6]), tuple(bits[6:9])))


def index_of(m: Mat3) -> int:
    idx = 0
    for x in m.entries():
        if x not in (0, 1):
            raise ValueError("not a binary matrix")
        idx = (idx << 1) | x
    return idx


def enumerate_binary3() -> list[Mat3]:
    return [matrix_from_index(i) for i in range(512)]


def poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    """Long division of integer polynomials (highest degree first) by a monic divisor."""
    if not den or den[0] != 1:
        raise ValueError("divisor must be monic")
    rem = list(num)
    quot = []
    for i in range(len(num) - len(den) + 1):
        c = rem[i]
        quot.append(c)
        for j, d in enumerate(den):
            rem[i + j] -= c * d
    return quot, rem[len(num) - len(den) + 1:]


def is_pell_generating(m: Mat3) -> bool:
    _, rem = poly_divmod(list(char_poly(m).coeffs()), list(PELL_QUADRATIC))
    return all(c == 0 for c in rem)


def third_eigenvalue(m: Mat3) -> int:
    """Root left over after removing x^2 - 2x - 1 (only for Pell-generating m)."""
    quot, rem = poly_divmod(list(char_poly(m).coeffs()), list(PELL_QUADRATIC))
    if any(rem):
        raise ValueError("matrix is not Pell-generating")
    return -quot[1]


def trace_sequence_check(m: Mat3, n_max: int = 30) -> bool:
    """trace(M**n) - lam1**n == 2 Q[n-1] for 1 <= n <= n_max."""
    lam1 = third_eigenvalue(m)
    power = m
    for n in range(1, n_max + 1):
        if trace(power) - lam1 ** n != 2 * term(SequenceId.Q, n - 1):
            return False
        power = power @ m
    return True


def conjugate(p: Mat3, m: Mat3) -> Mat3:
    """P M P^-1 for a permutation matrix P (whose inverse is its transpose)."""
    return p @ m @ p.T


def permutation_orbits(mats: list[Mat3]) -> list[list[Mat3]]:
    """Partition ``mats`` by conjugation under the six permutation matrices.

    Parts keep input order and appear in order of their first member.
    """
    members = {m: i for i, m in enumerate(mats)}
    assigned: dict[Mat3, int] = {}
    parts: list[list[Mat3]] = []
    for m in mats:
        if m in assigned:
            continue
        label = len(parts)
        orbit = {conjugate(p, m) for p in PERMUTATION_MATRICES}
        part = sorted((x for x in orbit if x in members), key=members.__getitem__)
        for x in part:
            assigned[x] = label
        parts.append(part)
    return parts


class _UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


def invertible_binary() -> list[tuple[Mat3, Mat3, int]]:
    """(P, adj(P), det P) for every binary P with nonzero determinant."""
    out = []
    for p in enumerate_binary3():
        d = det(p)
        if d:
            out.append((p, adjugate(p), d))
    return out


def binary_conjugacy_classes(mats: list[Mat3]) -> list[list[Mat3]]:
    """Components of ``mats`` under M ~ P M P^-1 (P binary, invertible over Q).

    The binary invertible matrices are not closed under products, so this is
    the transitive closure of single conjugations that stay binary.
    """
    members = {m: i for i, m in enumerate(mats)}
    uf = _UnionFind(mats)
    conjugators = invertible_binary()
    for m in mats:
        for p, adj, d in conjugators:
            num = p @ m @ adj  # == d * P M P^-1
            entries = num.entries()
            if any(x % d for x in entries):
                continue
            image = Mat3.of([[x // d for x in row] for row in num.rows])
            if image in members:
                uf.union(m, image)
    groups: dict[Mat3, list[Mat3]] = {}
    for m in mats:
        groups.setdefault(uf.find(m), []).append(m)
    return sorted(groups.values(), key=lambda g: members[g[0]])


@dataclass
class ClassificationReport:
    total: int
    pell_count: int
    buckets: dict[CharPoly, list[Mat3]]
    orbit_count_per_bucket: dict[CharPoly, int]
    orbits: dict[CharPoly, list[list[Mat3]]] = field(repr=False)
    binary_classes: dict[CharPoly, list[list[Mat3]]] = field(repr=False)
    representatives: dict[str, CharPoly]

    def invariant_errors(self) -> list[str]:
        errs = []
        if self.total != 512:
            errs.append(f"total {self.total} != 512")
        flat = [m for ms in self.buckets.values() for m in ms]
        if len(flat) != len(set(flat)) or len(flat) != self.pell_count:
            errs.append("bucket membership is not a partition of the Pell-generating set")
        if len(set(self.representatives.values())) != len(self.representatives):
            errs.append("representatives do not occupy distinct buckets")
        for name, key in self.representatives.items():
            if key != REPRESENTATIVE_BUCKETS[name]:
                errs.append(f"{name} in bucket {key}, expected {REPRESENTATIVE_BUCKETS[name]}")
            if REPRESENTATIVES[name] not in self.buckets.get(key, []):
                errs.append(f"{name} missing from its bucket")
        for key, parts in self.orbits.items():
            if sorted(map(index_of, (m for p in parts for m in p))) != sorted(map(index_of, self.buckets[key])):
                errs.append(f"orbits of {key} do not cover the bucket")
        return errs

    def to_dict(self) -> dict:
        buckets = []
        for key, mats in self.buckets.items():
            lam1 = -(key.c2 + 2)
            buckets.append({
                "char_poly": str(key),
                "coefficients": [1, key.c2, key.c1, key.c0],
                "factored": _factored(lam1),
                "third_eigenvalue": lam1,
                "trace": -key.c2,
                "det": -key.c0,
                "size": len(mats),
                "members": [index_of(m) for m in mats],
                "permutation_orbit_count": self.orbit_count_per_bucket[key],
                "permutation_orbit_sizes": [len(p) for p in self.orbits[key]],
                "permutation_orbits": [[index_of(m) for m in p] for p in self.orbits[key]],
                "binary_conjugacy_class_count": len(self.binary_classes[key]),
                "rational_similarity_classes": 1 if key.is_squarefree() else None,
            })
        return {
            "total": self.total,
            "pell_count": self.pell_count,
            "bucket_count": len(self.buckets),
            "buckets": buckets,
            "representatives": {
                name: {"index": index_of(REPRESENTATIVES[name]), "char_poly": str(key),
                       "trace": trace(REPRESENTATIVES[name]), "det": det(REPRESENTATIVES[name])}
                for name, key in self.representatives.items()
            },
        }


def _factored(lam1: int) -> str:
    if lam1 == 0:
        lin = "x"
    else:
        lin = f"(x {'-' if lam1 > 0 else '+'} {abs(lam1)})"
    return f"{lin}(x^2 - 2x - 1)"


def classify() -> ClassificationReport:
    mats = enumerate_binary3()
    pell = [m for m in mats if is_pell_generating(m)]
    buckets: dict[CharPoly, list[Mat3]] = {}
    for m in pell:
        buckets.setdefault(char_poly(m), []).append(m)
    buckets = dict(sorted(buckets.items()))
    orbits = {k: permutation_orbits(v) for k, v in buckets.items()}
    classes = {k: binary_conjugacy_classes(v) for k, v in buckets.items()}
    return ClassificationReport(
        total=len(mats),
        pell_count=len(pell),
        buckets=buckets,
        orbit_count_per_bucket={k: len(v) for k, v in orbits.items()},
        orbits=orbits,
        binary_classes=classes,
        representatives={name: char_poly(m) for name, m in REPRESENTATIVES.items()},
    )
