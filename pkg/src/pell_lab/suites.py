"""Range sweeps behind ``pell-lab verify``.

Each suite returns a list of :class:`CheckResult`; a check fails when any of
its cases does.  Only the first few failing cases are kept as detail.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import identities, numtheory, pellmat, zsqrt2
from .sequences import SequenceId, partial_sum, term

MAX_DETAIL = 5
SCOPES = ("identities", "matrices", "numtheory", "all")


@dataclass(frozen=True)
class VerifyConfig:
    n_max: int = 200
    # two-parameter identities sweep n, m <= m_max
    m_max: int = 100

    def __post_init__(self):
        if self.n_max < 2:
            raise ValueError(f"n_max must be >= 2, got {self.n_max}")
        if self.m_max < 1:
            raise ValueError(f"m_max must be >= 1, got {self.m_max}")


@dataclass
class CheckResult:
    suite: str
    name: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)
    failure_count: int = 0

    @property
    def ok(self) -> bool:
        return self.failure_count == 0

    def record(self, ok: bool, detail: str):
        self.cases += 1
        if not ok:
            self.failure_count += 1
            if len(self.failures) < MAX_DETAIL:
                self.failures.append(detail)

    def to_dict(self) -> dict:
        return {"suite": self.suite, "check": self.name, "cases": self.cases,
                "failure_count": self.failure_count, "failures": list(self.failures)}


def identity_suite(cfg: VerifyConfig) -> list[CheckResult]:
    out = []
    for code in identities.catalog():
        rep = identities.check_range(code, cfg.n_max, cfg.m_max)
        res = CheckResult("identities", code, cases=rep.checked, failure_count=len(rep.failures))
        res.failures = [f"{c.args}: lhs={c.lhs} rhs={c.rhs}" for c in rep.failures[:MAX_DETAIL]]
        out.append(res)
    return out


def matrix_suite(cfg: VerifyConfig) -> list[CheckResult]:
    n_max = cfg.n_max
    out = []
    for name, (gen, closed) in pellmat.CLOSED_FORMS.items():
        res = CheckResult("matrices", f"closed_form_{name}")
        power = pellmat.IDENTITY
        for n in range(1, n_max + 1):
            power = power @ gen
            res.record(closed(n) == power, f"n={n}")
        out.append(res)

    for name, (gen, closed_inv) in pellmat.CLOSED_FORM_INVERSES.items():
        res = CheckResult("matrices", f"closed_form_{name}_inv")
        inv = pellmat.inverse_unimodular(gen)
        power, inv_power = pellmat.IDENTITY, pellmat.IDENTITY
        for n in range(1, n_max + 1):
            power, inv_power = power @ gen, inv_power @ inv
            c = closed_inv(n)
            res.record(c @ power == pellmat.IDENTITY and c == inv_power, f"n={n}")
        out.append(res)

    res = CheckResult("matrices", "det_powers")
    p1, p2, p3 = pellmat.IDENTITY, pellmat.IDENTITY, pellmat.IDENTITY
    for n in range(1, n_max + 1):
        p1, p2, p3 = p1 @ pellmat.U1, p2 @ pellmat.U2, p3 @ pellmat.U3
        ok = (pellmat.det(p1) == 0 and pellmat.det(p2) == 1
              and pellmat.det(p3) == (-1) ** n)
        res.record(ok, f"n={n}")
    out.append(res)

    res = CheckResult("matrices", "trace_u1")
    power = pellmat.IDENTITY
    for n in range(1, n_max + 1):
        power = power @ pellmat.U1
        expected = 2 * (term(SequenceId.E, n - 1) + term(SequenceId.E, n))
        res.record(pellmat.trace(power) == expected, f"n={n}")
    out.append(res)

    res = CheckResult("matrices", "eigen_systems")
    for name, triples in pellmat.EIGEN_SYSTEMS.items():
        for t in triples:
            res.record(pellmat.eigen_residual(pellmat.GENERATORS[name], t), f"{name} lam={t.lam}")
    out.append(res)

    res = CheckResult("matrices", "similarity_u1_u1T")
    res.record(pellmat.similar_over_rationals(pellmat.U1, pellmat.U1T) is True, "u1 ~ u1T")
    out.append(res)

    res = CheckResult("matrices", "u2_sq_equals_u3_sq")
    res.record(pellmat.mat_pow(pellmat.U2, 2) == pellmat.mat_pow(pellmat.U3, 2), "n=2")
    out.append(res)

    res = CheckResult("matrices", "intro_mat2")
    for n in range(1, n_max + 1):
        res.record(pellmat.intro_mat2_check(n), f"n={n}")
    out.append(res)

    binet = [
        ("binet_E_Q", zsqrt2.binet_check, 1),
        ("binet_conjugate_sum", zsqrt2.binet_sum_check, 1),
        ("binet_pell_lucas", zsqrt2.binet_pell_lucas_check, 1),
        ("binet_b", zsqrt2.binet_b_check, 1),
        ("binet_a_r", zsqrt2.binet_ar_check, 0),
        ("diagonal_power", pellmat.diagonal_power_check, 1),
    ]
    for name, fn, lo in binet:
        res = CheckResult("matrices", name)
        for n in range(lo, n_max + 1):
            res.record(fn(n), f"n={n}")
        out.append(res)
    return out


def numtheory_suite(cfg: VerifyConfig) -> list[CheckResult]:
    n_max = cfg.n_max
    out = []

    res = CheckResult("numtheory", "partial_sum_vs_S")
    for n in range(0, n_max + 1):
        res.record(partial_sum(n) == term(SequenceId.S, n), f"n={n}")
    out.append(res)

    res = CheckResult("numtheory", "congruence_mod4")
    for m in range(1, n_max + 1):
        res.record(numtheory.congruence_mod4(m), f"m={m}")
    out.append(res)

    res = CheckResult("numtheory", "double_index")
    for n in range(1, n_max + 1):
        res.record(numtheory.double_index_check(n), f"n={n}")
    out.append(res)

    res = CheckResult("numtheory", "gcd_consecutive")
    for n in range(2, n_max + 1):
        got, want = numtheory.gcd_consecutive(n), numtheory.gcd_expected(n)
        res.record(got == want, f"n={n}: gcd={got} expected={want}")
    out.append(res)

    res = CheckResult("numtheory", "gcd_reduction")
    for n in range(2, n_max + 1, 2):
        for row in numtheory.gcd_reduction_rows(n):
            ok = row.agrees and (row.n != row.k or row.gcd_reduced == 1)
            res.record(ok, f"n={row.n} k={row.k}: reduced={row.gcd_reduced} direct={row.gcd_direct}")
    out.append(res)

    res = CheckResult("numtheory", "partial_sum_bound")
    res.record(numtheory.partial_sum_bound(n_max), f"n_max={n_max}")
    out.append(res)

    res = CheckResult("numtheory", "sidon")
    rep = numtheory.sidon_check(n_max)
    res.record(rep.distinct, f"collision {rep.first_collision}")
    out.append(res)
    return out


SUITES = {
    "identities": identity_suite,
    "matrices": matrix_suite,
    "numtheory": numtheory_suite,
}


def run(scope: str, cfg: VerifyConfig | None = None) -> list[CheckResult]:
    cfg = cfg or VerifyConfig()
    if scope not in SCOPES:
        raise ValueError(f"unknown scope {scope!r}; choose from {', '.join(SCOPES)}")
    names = list(SUITES) if scope == "all" else [scope]
    return [res for name in names for res in SUITES[name](cfg)]
