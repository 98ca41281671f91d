"""Rational generating functions over q and bounded-height tableau counts.

Polynomials are dense integer coefficient tuples indexed by power.
Rational functions are never reduced to lowest terms; identities between
them are decided by cross-multiplication, so no gcd machinery is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .closed_forms import coeff_two_row
from .errors import BadHeightError, NonUnitConstantTermError
from .partitions import partitions_of
from .schur import SchurVector, kron_oracle, pieri_mult_row

Poly = tuple[int, ...]


def _trim(p) -> Poly:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _poly_add(a: Poly, b: Poly) -> Poly:
    out = [0] * max(len(a), len(b))
    for i, c in enumerate(a):
        out[i] += c
    for i, c in enumerate(b):
        out[i] += c
    return _trim(out)


def _poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            out[i + j] += ca * cb
    return _trim(out)


def _poly_scale(a: Poly, c: int) -> Poly:
    return _trim(x * c for x in a)


def _poly_shift(a: Poly, j: int) -> Poly:
    return _trim((0,) * j + tuple(a))


@dataclass(frozen=True, eq=False)
class RationalGF:
    """Ratio of integer polynomials in one variable.

    The denominator must have a nonzero constant term so the power series
    at the origin is well defined; the empty tuple is the zero polynomial.
    """

    numer: Poly
    denom: Poly = (1,)

    def __post_init__(self):
        object.__setattr__(self, "numer", _trim(self.numer))
        object.__setattr__(self, "denom", _trim(self.denom))
        if not self.denom or self.denom[0] == 0:
            raise ValueError("denominator must have a nonzero constant term")

    def series(self, order: int) -> list[int]:
        """First order+1 power-series coefficients at q = 0, exact integers."""
        if order < 0:
            raise ValueError("order must be non-negative")
        num, den = self.numer, self.denom
        if den[0] == -1:
            num, den = _poly_scale(num, -1), _poly_scale(den, -1)
        if den[0] != 1:
            raise NonUnitConstantTermError(
                f"denominator constant term must be +-1, got {self.denom[0]}")
        coeffs: list[int] = []
        for n in range(order + 1):
            value = num[n] if n < len(num) else 0
            for j in range(1, min(n, len(den) - 1) + 1):
                value -= den[j] * coeffs[n - j]
            coeffs.append(value)
        return coeffs

    def times_q_power(self, j: int) -> "RationalGF":
        return RationalGF(_poly_shift(self.numer, j), self.denom)

    def __add__(self, other: "RationalGF") -> "RationalGF":
        if not isinstance(other, RationalGF):
            return NotImplemented
        if self.denom == other.denom:
            return RationalGF(_poly_add(self.numer, other.numer), self.denom)
        return RationalGF(
            _poly_add(_poly_mul(self.numer, other.denom), _poly_mul(other.numer, self.denom)),
            _poly_mul(self.denom, other.denom),
        )

    def __sub__(self, other: "RationalGF") -> "RationalGF":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "RationalGF":
        if not isinstance(scalar, int):
            return NotImplemented
        return RationalGF(_poly_scale(self.numer, scalar), self.denom)

    def __eq__(self, other) -> bool:
        """Equality as rational functions, by cross-multiplication."""
        if not isinstance(other, RationalGF):
            return NotImplemented
        return _poly_mul(self.numer, other.denom) == _poly_mul(other.numer, self.denom)

    __hash__ = None

    def __repr__(self) -> str:
        return f"RationalGF({self.numer}, {self.denom})"


def _standard_denominator() -> Poly:
    out: Poly = (1,)
    for factor in ((1, -1), (1, 0, -1), (1, 0, -1), (1, 0, 0, -1)):
        out = _poly_mul(out, factor)
    return out


#: (1-q)(1-q^2)^2(1-q^3), the denominator shared by the coefficient-count series.
STANDARD_DENOMINATOR: Poly = _standard_denominator()


def g_k(k: int) -> RationalGF:
    """Generating function whose q^d coefficient is the total coefficient sum
    of the two-row product at parameter k."""
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if k == 0:
        return RationalGF((1,), STANDARD_DENOMINATOR)
    num = [0] * (2 * k + 2)
    num[k] += 1
    num[k + 1] += 1
    num[2 * k + 1] += 1
    for r in range(k + 2, 2 * k + 1):
        num[r] += 2
    return RationalGF(tuple(num), STANDARD_DENOMINATOR)


def _g_or_zero(k: int) -> RationalGF:
    return g_k(k) if k >= 0 else RationalGF((), STANDARD_DENOMINATOR)


def l_kr(k: int, r: int) -> RationalGF:
    """Generating function counting partitions whose coefficient is exactly r.

    Identically zero above the coefficient bound r > floor(k/2) + 1; the
    r = 1 case subtracts the doubly and quadruply shifted total-sum series,
    and larger r reduce to r = 1 with a q^(6r-6) shift.
    """
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    if r < 1:
        raise ValueError(f"r must be positive, got {r}")
    if r > k // 2 + 1:
        return RationalGF((), STANDARD_DENOMINATOR)
    if r == 1:
        return (
            _g_or_zero(k)
            - 2 * _g_or_zero(k - 2).times_q_power(6)
            + _g_or_zero(k - 4).times_q_power(12)
        )
    return l_kr(k - 2 * r + 2, 1).times_q_power(6 * r - 6)


def coefficient_sum(d: int, k: int) -> int:
    """Sum of all expansion coefficients of the two-row product, by sweep."""
    if not 0 <= k <= d:
        raise ValueError(f"need 0 <= k <= d, got k={k} with d={d}")
    return sum(coeff_two_row(d, k, lam) for lam in partitions_of(2 * d, 4))


def count_by_coefficient(d: int, k: int) -> dict[int, int]:
    """Histogram r -> number of partitions of 2d with coefficient exactly r."""
    if not 0 <= k <= d:
        raise ValueError(f"need 0 <= k <= d, got k={k} with d={d}")
    counts: dict[int, int] = {}
    for lam in partitions_of(2 * d, 4):
        c = coeff_two_row(d, k, lam)
        if c:
            counts[c] = counts.get(c, 0) + 1
    return dict(sorted(counts.items()))


def catalan(n: int) -> int:
    """n-th Catalan number."""
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return math.comb(2 * n, n) // (n + 1)


def y_height(n: int, h: int) -> int:
    """Number of standard tableaux with n cells and at most h rows.

    Heights 2 and 4 are single products of binomials/Catalan numbers,
    heights 3 and 5 are binomial-weighted Catalan sums.
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if h == 2:
        return math.comb(n, n // 2)
    if h == 3:
        return sum(math.comb(n, 2 * e) * catalan(e) for e in range(n // 2 + 1))
    if h == 4:
        return catalan((n + 1) // 2) * catalan((n + 2) // 2)
    if h == 5:
        total = Fraction(0)
        for e in range(n // 2 + 1):
            total += Fraction(
                6 * math.factorial(2 * e + 2) * catalan(e) * math.comb(n, 2 * e),
                math.factorial(e + 2) * math.factorial(e + 3),
            )
        if total.denominator != 1:
            raise ArithmeticError(f"height-5 sum not integral at n={n}")
        return int(total)
    raise BadHeightError(f"height must be one of 2, 3, 4, 5, got {h}")


def bounded_sum_identity_check(n: int, h: int) -> bool:
    """Compare the sum of all Schur functions with at most h rows against its
    product-side expression.

    Heights 2, 3, 5 build the right side from one-row outer products;
    height 4 uses Kronecker products of near-rectangles (even and odd
    degrees take different products).
    """
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if h not in (2, 3, 4, 5):
        raise BadHeightError(f"height must be one of 2, 3, 4, 5, got {h}")
    lhs = SchurVector(n, {lam: 1 for lam in partitions_of(n, h)})
    if h == 2:
        rhs = pieri_mult_row(SchurVector.basis((n // 2,)), (n + 1) // 2)
    elif h == 3:
        rhs = SchurVector(n)
        for e in range(n // 2 + 1):
            rhs = rhs + pieri_mult_row(SchurVector.basis((e, e)), n - 2 * e)
    elif h == 4:
        if n % 2 == 0:
            half = n // 2
            rhs = kron_oracle((half, half), (half, half)) + kron_oracle(
                (half, half), (half + 1, half - 1))
        else:
            half = (n + 1) // 2
            rhs = kron_oracle((half, half - 1), (half, half - 1))
    else:
        rhs = SchurVector(n)
        for e in range(n // 2 + 1):
            for r in range((n - 2 * e) // 4 + 1):
                rhs = rhs + pieri_mult_row(
                    SchurVector.basis((e + r, e + r, r, r)), n - 2 * e - 4 * r)
    return lhs == rhs
