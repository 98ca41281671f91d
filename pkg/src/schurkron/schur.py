"""Exact Schur-basis arithmetic and the character-theoretic Kronecker oracle.

The oracle evaluates Kronecker coefficients through the triple character
sum over cycle types, with characters computed by the border-strip
recursion and memoized in a :class:`CharacterCache`.  Products with
one-row and one-column Schur functions (horizontal and vertical strips)
and the one-box lowering operator are the only outer-product machinery
needed here.  Everything is exact arbitrary-precision integer arithmetic.
"""

from __future__ import annotations

import os
import tempfile
from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterator, Mapping, Optional

from .errors import CacheFormatError, CacheIntegrityError, DegreeMismatchError
from .partitions import (
    Partition,
    conjugate,
    format_partition,
    make_partition,
    parse_partition,
    partitions_of,
)

CACHE_HEADER = "KRONCACHE v1"


class SchurVector:
    """Sparse integer linear combination of Schur functions of one degree.

    Immutable by convention: arithmetic returns new vectors and no public
    method mutates the coefficient map.  Zero coefficients are never stored.
    """

    __slots__ = ("degree", "_coeffs")

    def __init__(self, degree: int, coeffs: Optional[Mapping[Partition, int]] = None):
        data: dict[Partition, int] = {}
        if coeffs:
            for lam, c in coeffs.items():
                if c == 0:
                    continue
                lam = tuple(lam)
                if sum(lam) != degree:
                    raise DegreeMismatchError(f"term {lam} does not have degree {degree}")
                data[lam] = c
        self.degree = degree
        self._coeffs = data

    @classmethod
    def zero(cls, degree: int) -> "SchurVector":
        return cls(degree)

    @classmethod
    def basis(cls, lam) -> "SchurVector":
        lam = make_partition(lam)
        return cls(sum(lam), {lam: 1})

    def __getitem__(self, lam) -> int:
        return self._coeffs.get(tuple(lam), 0)

    def items(self) -> list[tuple[Partition, int]]:
        """Terms in decreasing lexicographic order of the indexing partition."""
        return sorted(self._coeffs.items(), key=lambda kv: kv[0], reverse=True)

    def support(self) -> list[Partition]:
        return [lam for lam, _ in self.items()]

    def as_dict(self) -> dict[Partition, int]:
        return dict(self._coeffs)

    def max_coeff(self) -> int:
        return max(self._coeffs.values(), default=0)

    def coeff_total(self) -> int:
        return sum(self._coeffs.values())

    def __len__(self) -> int:
        return len(self._coeffs)

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __add__(self, other: "SchurVector") -> "SchurVector":
        if not isinstance(other, SchurVector):
            return NotImplemented
        if self.degree != other.degree:
            raise DegreeMismatchError(
                f"cannot add vectors of degrees {self.degree} and {other.degree}")
        out = dict(self._coeffs)
        for lam, c in other._coeffs.items():
            out[lam] = out.get(lam, 0) + c
        return SchurVector(self.degree, out)

    def __sub__(self, other: "SchurVector") -> "SchurVector":
        return self + (-1) * other

    def __rmul__(self, scalar: int) -> "SchurVector":
        if not isinstance(scalar, int):
            return NotImplemented
        return SchurVector(self.degree, {lam: scalar * c for lam, c in self._coeffs.items()})

    def __eq__(self, other) -> bool:
        if not isinstance(other, SchurVector):
            return NotImplemented
        return self.degree == other.degree and self._coeffs == other._coeffs

    __hash__ = None  # mutable-looking container semantics

    def __repr__(self) -> str:
        body = ", ".join(f"{lam}: {c}" for lam, c in self.items())
        return f"SchurVector({self.degree}, {{{body}}})"


class CharacterCache:
    """Memo table for irreducible symmetric-group character values.

    Keys are (lam, rho) pairs of equal degree with rho non-increasing.
    Inserts are idempotent (a key always maps to the same value), so
    concurrent readers and redundant writers are safe; there is no
    eviction.
    """

    def __init__(self) -> None:
        self._store: dict[tuple[Partition, Partition], int] = {}

    def __len__(self) -> int:
        return len(self._store)

    def items(self):
        return self._store.items()

    def absorb(self, records) -> None:
        """Insert (key, value) pairs; a conflicting value for an existing key
        raises :class:`CacheIntegrityError`."""
        for key, value in records:
            existing = self._store.get(key)
            if existing is not None and existing != value:
                raise CacheIntegrityError(
                    f"conflicting cached values for {key}: {existing} vs {value}")
            self._store[key] = value

    def value(self, lam: Partition, rho: Partition) -> int:
        """Character value indexed by *lam* at cycle type *rho*.

        Both arguments must be canonical partitions of the same degree.
        """
        return self._char(lam, rho)

    def _char(self, lam: Partition, rho: Partition) -> int:
        if not rho:
            return 1
        key = (lam, rho)
        cached = self._store.get(key)
        if cached is not None:
            return cached
        strip, rest = rho[0], rho[1:]
        ell = len(lam)
        beta = [lam[i] + ell - 1 - i for i in range(ell)]
        occupied = set(beta)
        total = 0
        for b in beta:
            nb = b - strip
            if nb < 0 or nb in occupied:
                continue
            height = sum(1 for c in beta if nb < c < b)
            newbeta = sorted((occupied - {b}) | {nb}, reverse=True)
            mu = [newbeta[i] - (ell - 1 - i) for i in range(ell)]
            while mu and mu[-1] == 0:
                mu.pop()
            term = self._char(tuple(mu), rest)
            total += -term if height % 2 else term
        self._store[key] = total
        return total


_DEFAULT_CACHE = CharacterCache()


def default_cache() -> CharacterCache:
    """The process-wide character cache shared by all oracle calls."""
    return _DEFAULT_CACHE


def z_value(lam: Partition) -> int:
    """Centralizer order of a permutation of cycle type *lam*."""
    out = 1
    for part, mult in Counter(lam).items():
        out *= part**mult * factorial(mult)
    return out


def character(lam, rho, cache: Optional[CharacterCache] = None) -> int:
    """Irreducible character value indexed by *lam* at cycle type *rho*."""
    lam = make_partition(lam)
    rho = make_partition(rho)
    if sum(lam) != sum(rho):
        raise DegreeMismatchError(f"degree mismatch: {lam} vs {rho}")
    return (cache or _DEFAULT_CACHE).value(lam, rho)


def syt_count(lam) -> int:
    """Number of standard tableaux of shape *lam*, by the hook length formula."""
    lam = make_partition(lam)
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= row - j + conj[j] - i - 1
    return factorial(sum(lam)) // hooks


def kron_coeff_oracle(mu, nu, lam, cache: Optional[CharacterCache] = None) -> int:
    """Single Kronecker coefficient via the character triple sum."""
    mu, nu, lam = make_partition(mu), make_partition(nu), make_partition(lam)
    n = sum(mu)
    if sum(nu) != n or sum(lam) != n:
        raise DegreeMismatchError(f"degree mismatch: {mu}, {nu}, {lam}")
    cache = cache or _DEFAULT_CACHE
    nfact = factorial(n)
    total = 0
    for rho in partitions_of(n):
        w = cache.value(mu, rho) * cache.value(nu, rho)
        if w:
            total += (nfact // z_value(rho)) * w * cache.value(lam, rho)
    quotient, remainder = divmod(total, nfact)
    if remainder:
        raise ArithmeticError(f"non-integral Kronecker coefficient for {mu},{nu},{lam}")
    return quotient


@lru_cache(maxsize=None)
def _kron_terms(mu: Partition, nu: Partition) -> tuple[tuple[Partition, int], ...]:
    cache = _DEFAULT_CACHE
    n = sum(mu)
    nfact = factorial(n)
    lams = partitions_of(n)
    acc = {lam: 0 for lam in lams}
    for rho in partitions_of(n):
        w = (nfact // z_value(rho)) * cache.value(mu, rho) * cache.value(nu, rho)
        if not w:
            continue
        for lam in lams:
            acc[lam] += w * cache.value(lam, rho)
    terms = []
    for lam, total in acc.items():
        quotient, remainder = divmod(total, nfact)
        if remainder:
            raise ArithmeticError(f"non-integral Kronecker coefficient for {mu},{nu},{lam}")
        if quotient:
            terms.append((lam, quotient))
    return tuple(terms)


def kron_oracle(mu, nu) -> SchurVector:
    """Full Schur expansion of the Kronecker product, via the character sum.

    Products are memoized process-wide; the result must be treated as
    read-only.
    """
    mu, nu = make_partition(mu), make_partition(nu)
    if sum(mu) != sum(nu):
        raise DegreeMismatchError(f"degree mismatch: {mu} vs {nu}")
    return SchurVector(sum(mu), dict(_kron_terms(mu, nu)))


def _row_strip_adds(mu: Partition, r: int) -> Iterator[Partition]:
    """Partitions obtained from *mu* by adding a horizontal strip of size r."""
    if not mu:
        yield (r,) if r else ()
        return
    rows = len(mu)

    def rec(i: int, remaining: int, prefix: Partition) -> Iterator[Partition]:
        if i == rows:
            if remaining <= mu[rows - 1]:
                yield prefix + ((remaining,) if remaining else ())
            return
        low = mu[i]
        high = min(mu[i - 1] if i else mu[0] + remaining, mu[i] + remaining)
        for val in range(low, high + 1):
            yield from rec(i + 1, remaining - (val - mu[i]), prefix + (val,))

    yield from rec(0, r, ())


def _col_strip_adds(mu: Partition, r: int) -> Iterator[Partition]:
    """Partitions obtained from *mu* by adding a vertical strip of size r."""
    rows = len(mu)

    def rec(i: int, remaining: int, prefix: Partition, prev: int) -> Iterator[Partition]:
        if i == rows:
            # any leftover boxes become new rows of size 1
            yield prefix + (1,) * remaining
            return
        for e in (0, 1):
            if e > remaining:
                continue
            val = mu[i] + e
            if val > prev:
                continue
            yield from rec(i + 1, remaining - e, prefix + (val,), val)

    yield from rec(0, r, (), (mu[0] + 1) if mu else 1)


def pieri_mult_row(f: SchurVector, r: int) -> SchurVector:
    """Multiply by the one-row Schur function of degree r (horizontal strips)."""
    if r < 0:
        raise ValueError("r must be non-negative")
    out: dict[Partition, int] = {}
    for mu, c in f.items():
        for lam in _row_strip_adds(mu, r):
            out[lam] = out.get(lam, 0) + c
    return SchurVector(f.degree + r, out)


def pieri_mult_col(f: SchurVector, r: int) -> SchurVector:
    """Multiply by the one-column Schur function of degree r (vertical strips)."""
    if r < 0:
        raise ValueError("r must be non-negative")
    out: dict[Partition, int] = {}
    for mu, c in f.items():
        for lam in _col_strip_adds(mu, r):
            out[lam] = out.get(lam, 0) + c
    return SchurVector(f.degree + r, out)


def perp_box(f: SchurVector) -> SchurVector:
    """One-box lowering operator: sum over removable corner cells."""
    if f.degree == 0:
        return SchurVector(0)
    out: dict[Partition, int] = {}
    for mu, c in f.items():
        for i in range(len(mu)):
            if i + 1 < len(mu) and mu[i] == mu[i + 1]:
                continue
            lam = mu[:i] + ((mu[i] - 1,) if mu[i] > 1 else ()) + mu[i + 1:]
            out[lam] = out.get(lam, 0) + c
    return SchurVector(f.degree - 1, out)


def scalar_product(f: SchurVector, g: SchurVector) -> int:
    """Schur-orthonormal pairing; vectors of unequal degree pair to 0."""
    if f.degree != g.degree:
        return 0
    small, large = (f, g) if len(f) <= len(g) else (g, f)
    return sum(c * large[lam] for lam, c in small.items())


def save_cache(cache: CharacterCache, path: str) -> None:
    """Persist *cache* in the KRONCACHE v1 format, atomically.

    Records are sorted so identical caches produce identical bytes.
    """
    lines = [CACHE_HEADER]
    for (lam, rho), value in sorted(cache.items()):
        lines.append(
            f"{sum(lam)}\t{format_partition(lam)}\t{format_partition(rho)}\t{value}")
    payload = "\n".join(lines) + "\n"
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".kroncache-")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(payload)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_cache(path: str, verify_degree: int = 10) -> CharacterCache:
    """Read a KRONCACHE v1 file into a fresh cache.

    Malformed headers or records raise :class:`CacheFormatError`.  Records
    of degree at most *verify_degree* are recomputed from scratch; any
    contradiction raises :class:`CacheIntegrityError`.
    """
    with open(path, "r", encoding="utf-8") as handle:
        lines = handle.read().splitlines()
    if not lines or lines[0] != CACHE_HEADER:
        found = lines[0] if lines else "<empty file>"
        raise CacheFormatError(f"bad cache header {found!r}, expected {CACHE_HEADER!r}")
    records: dict[tuple[Partition, Partition], int] = {}
    for lineno, line in enumerate(lines[1:], start=2):
        if not line:
            continue
        fields = line.split("\t")
        if len(fields) != 4:
            raise CacheFormatError(f"line {lineno}: expected 4 tab-separated fields")
        try:
            n = int(fields[0])
            lam = parse_partition(fields[1])
            rho = parse_partition(fields[2])
            value = int(fields[3])
        except ValueError as exc:
            raise CacheFormatError(f"line {lineno}: {exc}") from exc
        if sum(lam) != n or sum(rho) != n:
            raise CacheFormatError(
                f"line {lineno}: degrees of {format_partition(lam)} and "
                f"{format_partition(rho)} must both equal {n}")
        records[(lam, rho)] = value
    scratch = CharacterCache()
    for (lam, rho), value in records.items():
        if sum(lam) <= verify_degree and scratch.value(lam, rho) != value:
            raise CacheIntegrityError(
                f"cached value {value} for ({format_partition(lam)}, "
                f"{format_partition(rho)}) contradicts a fresh computation")
    cache = CharacterCache()
    cache.absorb(records.items())
    return cache
