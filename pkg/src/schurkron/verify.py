"""Verification sweeps comparing closed forms, the oracle, and the series.

Each sweep returns a :class:`Report` whose failure labels identify the
offending parameters; sweeps iterate in a fixed order so reports are
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .closed_forms import (
    check_recurrence,
    check_stability,
    coeff_hook_rosas,
    coeff_two_row,
    easy_case,
    product_hook,
    product_two_row,
    two_row_rug,
    verify_magic,
)
from .partitions import format_partition, in_gamma_P, make_partition, partitions_of
from .schur import SchurVector, kron_oracle
from .series import (
    bounded_sum_identity_check,
    coefficient_sum,
    count_by_coefficient,
    g_k,
    l_kr,
)


@dataclass
class Report:
    """Outcome of one verification sweep."""

    target: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def record(self, ok: bool, label: str) -> None:
        self.checked += 1
        if not ok:
            self.failures.append(label)


def sweep_cleanest(max_d: int) -> Report:
    """Shifted-class coefficients against the oracle, all partitions of 2d."""
    report = Report("cleanest")
    for d in range(1, max_d + 1):
        for k in range(d + 1):
            product = kron_oracle((d, d), (d + k, d - k))
            for lam in partitions_of(2 * d):
                got = coeff_two_row(d, k, lam)
                want = product[lam]
                report.record(
                    got == want,
                    f"d={d} k={k} lam={format_partition(lam)}: closed={got} oracle={want}",
                )
    return report


def sweep_easy_cases(max_d: int) -> Report:
    """Direct set descriptions against both the shift family and the oracle."""
    report = Report("easy-cases")
    for d in range(1, max_d + 1):
        for k in (0, 1, 2):
            if k > d or (k == 2 and d < 2):
                continue
            direct = easy_case(d, k)
            report.record(
                direct == product_two_row(d, k),
                f"d={d} k={k}: easy case disagrees with the shift family",
            )
            report.record(
                direct == kron_oracle((d, d), (d + k, d - k)),
                f"d={d} k={k}: easy case disagrees with the oracle",
            )
    return report


def sweep_hook(max_d: int) -> Report:
    """Hook products against the oracle, plus multiplicity-freeness."""
    report = Report("hook")
    for d in range(1, max_d + 1):
        for k in range(2 * d):
            closed = product_hook(d, k)
            report.record(
                closed.max_coeff() <= 1,
                f"d={d} k={k}: coefficient above 1 in hook product",
            )
            report.record(
                closed == kron_oracle((d, d), make_partition((2 * d - k,) + (1,) * k)),
                f"d={d} k={k}: hook product disagrees with the oracle",
            )
    return report


def sweep_rosas(max_d: int) -> Report:
    """Indicator formula for two-row times hook against the oracle."""
    report = Report("rosas")
    for d in range(1, max_d + 1):
        mu = (d, d)
        hooks = [make_partition((2 * d - k,) + (1,) * k) for k in range(2 * d)]
        for nu in hooks:
            product = kron_oracle(mu, nu)
            for lam in partitions_of(2 * d):
                got = coeff_hook_rosas(mu, nu, lam)
                want = product[lam]
                report.record(
                    got == want,
                    f"d={d} nu={format_partition(nu)} lam={format_partition(lam)}: "
                    f"indicator={got} oracle={want}",
                )
    return report


def sweep_magic(max_d: int) -> Report:
    """Coefficient-raising shift for every admissible (d, k)."""
    report = Report("magic")
    for d in range(2, max_d + 1):
        for k in range(2, d + 1):
            report.record(verify_magic(d, k), f"d={d} k={k}: shift by (6,4,2) fails")
    return report


def sweep_hitlemma(max_degree: int, max_shift: int = 12) -> Report:
    """Equivalence of shifted membership with the two lifted memberships."""
    report = Report("hit-lemma")
    gammas: list = []
    seen = set()
    for m in range(max_shift + 1):
        for gamma in partitions_of(m, 4):
            if gamma not in seen:
                seen.add(gamma)
                gammas.append(gamma)
    for k in range(9):
        for gamma in two_row_rug(k).shifts:
            if gamma not in seen:
                seen.add(gamma)
                gammas.append(gamma)
    for n in range(max_degree + 1):
        for lam in partitions_of(n, 4):
            padded = lam + (0,) * (3 - len(lam)) if len(lam) < 3 else lam
            lifted = make_partition((padded[0] + 6, padded[1] + 4, padded[2] + 2) + lam[3:])
            for gamma in gammas:
                g = gamma + (0,) * (2 - len(gamma)) if len(gamma) < 2 else gamma
                up_a = make_partition((g[0] + 2, g[1] + 2) + gamma[2:])
                g3 = gamma + (0,) * (3 - len(gamma)) if len(gamma) < 3 else gamma
                up_b = make_partition((g3[0] + 4, g3[1] + 2, g3[2] + 2) + gamma[3:])
                lhs = in_gamma_P(lam, gamma)
                rhs = in_gamma_P(lifted, up_a) and in_gamma_P(lifted, up_b)
                report.record(
                    lhs == rhs,
                    f"lam={format_partition(lam)} gamma={format_partition(gamma)}: "
                    f"{lhs} vs {rhs}",
                )
    return report


def sweep_stability(max_d: int, max_k: int = 3) -> Report:
    """Stabilization checks, including the literal d = 1 and d = 2 levels."""
    report = Report("stability")
    for k in range(max_k + 1):
        report.record(
            product_hook(k + 1, 0) == SchurVector.basis((k + 1, k + 1)),
            f"k={k}: d=1 level is not the rectangle itself",
        )
        report.record(
            product_hook(k + 2, 1)
            == SchurVector.basis((k + 3, k + 1)) + SchurVector.basis((k + 2, k + 1, 1)),
            f"k={k}: d=2 level has the wrong two terms",
        )
    for d in range(1, max_d + 1):
        report.record(check_stability(d, max_k), f"d={d}: stabilization fails")
    return report


def sweep_recurrence(max_d: int) -> Report:
    """Length-stratified recurrence for all applicable (d, k, lam)."""
    report = Report("recurrence")
    for d in range(3, max_d + 1):
        for k in range(d - 1):
            for lam in partitions_of(2 * d):
                report.record(
                    check_recurrence(d, k, lam),
                    f"d={d} k={k} lam={format_partition(lam)}: recurrence fails",
                )
    return report


def sweep_bounded(max_n: int) -> Report:
    """Bounded-height Schur sums for heights 2 through 5."""
    report = Report("bounded")
    for n in range(1, max_n + 1):
        for h in (2, 3, 4, 5):
            report.record(
                bounded_sum_identity_check(n, h),
                f"n={n} h={h}: bounded-height identity fails",
            )
    return report


def sweep_gf(max_d: int, max_k: int = 4, identity_max_k: int = 6) -> Report:
    """Series coefficients against direct sweeps and the count recurrences."""
    report = Report("gf")
    for k in range(max_k + 1):
        series = g_k(k).series(max_d)
        for d in range(k, max_d + 1):
            report.record(
                series[d] == coefficient_sum(d, k),
                f"k={k} d={d}: series {series[d]} vs direct {coefficient_sum(d, k)}",
            )
    for k in range(identity_max_k + 1):
        acc = None
        for r in range(1, k // 2 + 2):
            term = r * l_kr(k, r)
            acc = term if acc is None else acc + term
        report.record(
            acc == g_k(k),
            f"k={k}: weighted count series do not sum to the total series",
        )
    for k in range(max_k + 1):
        for r in range(1, 4):
            series = l_kr(k, r).series(max_d)
            for d in range(k, max_d + 1):
                counts = count_by_coefficient(d, k)
                report.record(
                    series[d] == counts.get(r, 0),
                    f"k={k} r={r} d={d}: series {series[d]} vs count {counts.get(r, 0)}",
                )
    return report


SWEEPS = {
    "cleanest": lambda args: sweep_cleanest(args["max_d"]),
    "hook": lambda args: sweep_hook(args["max_d"]),
    "rosas": lambda args: sweep_rosas(args["max_d"]),
    "magic": lambda args: sweep_magic(args["max_d"]),
    "stability": lambda args: sweep_stability(args["max_d"], args["max_k"]),
    "recurrence": lambda args: sweep_recurrence(args["max_d"]),
    "bounded": lambda args: sweep_bounded(args["max_n"]),
    "gf": lambda args: sweep_gf(args["max_d"], args["max_k"]),
}
