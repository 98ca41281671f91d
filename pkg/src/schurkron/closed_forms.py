"""Closed-form expansions of Kronecker products with a two-row rectangle.

Two families are covered: the product with a general two-row shape, given
by counting shifted parity classes that contain the indexing partition,
and the product with a hook, given by a one-step recursion with four
boundary terms.  Every formula here is a fast path that the character
oracle in :mod:`schurkron.schur` can confirm coefficient by coefficient.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import BadDegreeError, BadKError, DegreeMismatchError, NotTwoRowError
from .partitions import (
    Partition,
    ShiftVector,
    classify_shape,
    conjugate,
    in_gamma_P,
    in_P,
    in_P_bar,
    make_partition,
    pad,
    partitions_of,
    phi,
)
from .schur import (
    SchurVector,
    kron_oracle,
    perp_box,
    pieri_mult_row,
    scalar_product,
)


@dataclass(frozen=True)
class RugSpec:
    """A family of shift vectors evaluated by membership counting.

    The coefficient assigned to a partition is the number of shifts gamma
    in the family whose shifted parity class contains it.
    """

    shifts: tuple[ShiftVector, ...]

    def coefficient(self, lam: Partition) -> int:
        return sum(1 for gamma in self.shifts if in_gamma_P(lam, gamma))

    def evaluate(self, deg: int) -> SchurVector:
        out = {}
        for lam in partitions_of(deg, 4):
            c = self.coefficient(lam)
            if c:
                out[lam] = c
        return SchurVector(deg, out)


@lru_cache(maxsize=None)
def two_row_rug(k: int) -> RugSpec:
    """Shift family for the rectangle-times-two-row product at parameter k.

    The shifts are (k+i, k, i) for 0 <= i <= k together with
    (k+i+1, k+1, i) for 1 <= i <= k.
    """
    shifts = [make_partition((k + i, k, i)) for i in range(k + 1)]
    shifts += [make_partition((k + i + 1, k + 1, i)) for i in range(1, k + 1)]
    return RugSpec(tuple(shifts))


def _check_two_row_params(d: int, k: int) -> None:
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if not 0 <= k <= d:
        raise BadKError(f"k must satisfy 0 <= k <= d, got k={k} with d={d}")


def coeff_two_row(d: int, k: int, lam) -> int:
    """Coefficient of s_lam in s_(d,d) * s_(d+k,d-k).

    Counts the shifts of :func:`two_row_rug` whose class contains *lam*;
    partitions with more than 4 parts get 0.
    """
    _check_two_row_params(d, k)
    lam = tuple(lam)
    if sum(lam) != 2 * d:
        raise BadDegreeError(f"lam must be a partition of {2 * d}, got {lam}")
    if len(lam) > 4:
        return 0
    return two_row_rug(k).coefficient(lam)


def product_two_row(d: int, k: int) -> SchurVector:
    """Full expansion of s_(d,d) * s_(d+k,d-k)."""
    _check_two_row_params(d, k)
    return two_row_rug(k).evaluate(2 * d)


def _has_three_equal(padded: tuple[int, ...]) -> bool:
    return any(padded.count(v) >= 3 for v in set(padded))


def easy_case(d: int, k: int) -> SchurVector:
    """Expansion for k in {0, 1, 2} built from direct set descriptions.

    k=0 sums over the all-even/all-odd class, k=1 over its complement, and
    k=2 adds the class members with no three equal padded entries to the
    partitions with four distinct padded entries (so coefficient 2 exactly
    on distinct class members).
    """
    if k not in (0, 1, 2):
        raise BadKError(f"easy cases exist only for k in {{0,1,2}}, got {k}")
    if d < 1 or (k == 2 and d < 2):
        raise ValueError(f"d={d} is too small for k={k}")
    out = {}
    for lam in partitions_of(2 * d, 4):
        padded = pad(lam, 4)
        if k == 0:
            c = int(in_P(lam))
        elif k == 1:
            c = int(in_P_bar(lam))
        else:
            c = int(in_P(lam) and not _has_three_equal(padded))
            c += int(len(set(padded)) == 4)
        if c:
            out[lam] = c
    return SchurVector(2 * d, out)


def check_recurrence(d: int, k: int, lam) -> bool:
    """Check the length-stratified recurrence for the two-row coefficient.

    The left side is always the oracle coefficient of s_lam in
    s_(d,d) * s_(d+k,d-k); the right side depends on the number of parts:
    four parts strip a full column, three parts reduce via a one-box
    raise/lower pair one and two steps down, at most two parts use the
    explicit parity formula, and more than four parts force 0.
    """
    if d < 3:
        raise ValueError(f"the recurrence needs d >= 3, got {d}")
    if not 0 <= k <= d - 2:
        raise BadKError(f"k must satisfy 0 <= k <= d-2, got k={k} with d={d}")
    lam = tuple(lam)
    if sum(lam) != 2 * d:
        raise BadDegreeError(f"lam must be a partition of {2 * d}, got {lam}")
    lhs = kron_oracle((d, d), (d + k, d - k))[lam]
    ell = len(lam)
    if ell > 4:
        rhs = 0
    elif ell == 4:
        inner = tuple(p - 1 for p in lam if p > 1)
        rhs = kron_oracle((d - 2, d - 2), (d + k - 2, d - k - 2))[inner]
    elif ell == 3:
        core = SchurVector.basis(tuple(p - 1 for p in lam if p > 1))
        rhs = scalar_product(
            kron_oracle((d - 1, d - 1), (d + k - 1, d - k - 1)),
            pieri_mult_row(core, 1),
        ) - scalar_product(
            kron_oracle((d - 2, d - 2), (d + k - 2, d - k - 2)),
            perp_box(core),
        )
    else:
        lam2 = lam[1] if len(lam) > 1 else 0
        rhs = int(k % 2 == lam2 % 2 and lam2 >= k)
    return lhs == rhs


def _hook_arm_leg(nu: Partition) -> tuple[int, int]:
    """Arm and leg parameters of a hook-shaped partition (one-row and
    one-column shapes included)."""
    if not nu:
        return 0, 0
    return nu[0], len(nu) - 1


def coeff_hook_rosas(mu, nu, lam) -> int:
    """Kronecker coefficient of a two-row shape with a hook, by indicators.

    *mu* must have at most two rows and *nu* must be a hook, a one-row
    shape, or a one-column shape.  Double hooks whose top-row excess
    exceeds the number of trailing ones are handled through transpose
    symmetry; partitions not contained in a double hook get 0.
    """
    mu, nu, lam = make_partition(mu), make_partition(nu), make_partition(lam)
    if len(mu) > 2:
        raise NotTwoRowError(f"mu must have at most two rows, got {mu}")
    n = sum(mu)
    if sum(nu) != n or sum(lam) != n:
        raise DegreeMismatchError(f"degree mismatch: {mu}, {nu}, {lam}")
    if len(nu) > 1 and nu[1] > 1:
        raise ValueError(f"nu must be a hook, one-row, or one-column shape, got {nu}")
    return _rosas(mu, nu, lam)


def _rosas(mu: Partition, nu: Partition, lam: Partition) -> int:
    shape = classify_shape(lam)
    mu1, mu2 = pad(mu, 2)
    _, leg = _hook_arm_leg(nu)
    if shape.tag == "one_row":
        return int(mu == nu)
    if shape.tag == "one_column":
        return int(mu == conjugate(nu))
    if shape.tag == "hook":
        m = shape.m1
        value = int(mu2 - 1 <= m <= mu1) * int(m == leg)
        value += int(2 * mu2 <= m + leg + 1 <= 2 * mu1) * int(abs(m - leg) <= 1)
        return value
    if shape.tag in ("two_row", "double_hook"):
        lam1, lam2 = shape.lam1, shape.lam2
        m2, m1 = shape.m2 or 0, shape.m1 or 0
        if lam1 - lam2 <= m1:
            s = leg - m1 - 2 * m2
            value = int(lam2 <= mu2 - m2 <= lam1) * int(0 <= s <= 3)
            value += int(lam2 <= mu2 - m2 - 1 <= lam1) * int(1 <= s <= 2)
            value += int(lam2 <= mu2 - m2 + 1 <= lam1) * int(1 <= s <= 2)
            value -= int(lam2 + m2 + m1 == mu2) * int(1 <= s <= 2)
            return value
        return _rosas(mu, conjugate(nu), conjugate(lam))
    return 0


def _hook_boundary_shapes(D: int, K: int) -> list[Partition]:
    """Boundary indices of the one-step hook recursion at previous level (D, K).

    Candidates whose index list is not a genuine partition (negative
    repetition counts, non-positive parts, or a non-monotone list) are
    dropped; the survivors are partitions of 2D + 2.
    """

    def half(n: int):
        return n // 2 if n >= 0 else None

    hk, hk1, hk2 = half(K), half(K - 1), half(K - 2)
    rk = hk1 + (K % 2) if hk1 is not None else None
    candidates = []
    if hk1 is not None:
        candidates.append([D - hk1 + 1, D - hk1] + [2] * hk1 + [1])
    if rk is not None and rk >= 0:
        candidates.append([D + 1 - rk] * 2 + [2] * rk)
    if hk2 is not None:
        candidates.append([D - hk2] * 2 + [2] * hk2 + [1, 1])
    candidates.append([D + 2 - hk, D - hk] + [2] * hk)
    shapes = []
    for cand in candidates:
        while cand and cand[-1] == 0:
            cand.pop()
        if all(p > 0 for p in cand) and all(
            cand[i] >= cand[i + 1] for i in range(len(cand) - 1)
        ):
            shapes.append(tuple(cand))
    return shapes


@lru_cache(maxsize=None)
def product_hook(d: int, k: int) -> SchurVector:
    """Expansion of s_(d,d) * s_(2d-k, 1^k); every coefficient is 0 or 1.

    Built by recursing (d, k) -> (d-1, k-1) and adding the four boundary
    terms plus the degree-raising image of the previous level.  The
    identity and one-column cases are bases, and k >= d reduces to
    2d-1-k through transpose symmetry, which also keeps the recursion
    inside its range of validity.
    """
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if not 0 <= k <= 2 * d - 1:
        raise BadKError(f"k must satisfy 0 <= k <= 2d-1, got k={k} with d={d}")
    if k == 0:
        return SchurVector.basis((d, d))
    if k == 2 * d - 1:
        return SchurVector.basis((2,) * d)
    if k >= d:
        mirror = product_hook(d, 2 * d - 1 - k)
        return SchurVector(2 * d, {conjugate(lam): c for lam, c in mirror.items()})
    out: dict[Partition, int] = {}
    for lam, c in product_hook(d - 1, k - 1).items():
        lifted = phi(lam)
        out[lifted] = out.get(lifted, 0) + c
    for shape in _hook_boundary_shapes(d - 1, k - 1):
        out[shape] = out.get(shape, 0) + 1
    return SchurVector(2 * d, out)


def check_stability(d: int, k_max: int) -> bool:
    """Shift invariance of the hook-product coefficients.

    For every partition of 2d and every 0 <= k <= k_max, the coefficient
    at the base level must equal the coefficient of the partition with k
    added to its first two rows after growing the rectangle by k.
    """
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    if k_max < 0:
        raise ValueError(f"k_max must be non-negative, got {k_max}")
    base = product_hook(d, d - 1)
    for k in range(k_max + 1):
        shifted = product_hook(d + k, d - 1)
        for lam in partitions_of(2 * d):
            first, second = pad(lam, 2)[:2] if len(lam) < 2 else lam[:2]
            lifted = make_partition((first + k, second + k) + lam[2:])
            if base[lam] != shifted[lifted]:
                return False
    return True


def verify_magic(d: int, k: int) -> bool:
    """Coefficient-raising shift by (6,4,2).

    Every partition with a positive coefficient at (d, k) must have
    coefficient exactly one larger at (d+6, k+2) after adding (6,4,2) to
    its first three rows.
    """
    if k < 2:
        raise BadKError(f"the shift needs k >= 2, got {k}")
    _check_two_row_params(d, k)
    for lam in partitions_of(2 * d, 4):
        c = coeff_two_row(d, k, lam)
        if c == 0:
            continue
        padded = pad(lam, 3) if len(lam) < 3 else lam
        lifted = make_partition((padded[0] + 6, padded[1] + 4, padded[2] + 2) + lam[3:])
        if coeff_two_row(d + 6, k + 2, lifted) != c + 1:
            return False
    return True
