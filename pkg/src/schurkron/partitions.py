"""Integer partitions, shape classification, and shifted parity-class tests.

Partitions are plain tuples of positive integers in non-increasing order;
the empty tuple is the unique partition of 0.  The parity classes (all
entries even or all odd after zero-padding to four entries, written P
below) and their shifted variants gamma+P are the building blocks of the
closed-form Kronecker expansions in :mod:`schurkron.closed_forms`.
"""

from __future__ import annotations

from typing import Iterable, Iterator, NamedTuple, Optional

from .errors import EmptyPartitionError, NegativePartError

Partition = tuple[int, ...]
ShiftVector = tuple[int, ...]


def make_partition(values: Iterable[int]) -> Partition:
    """Canonicalize *values* into a partition.

    Sorts non-increasing and strips zeros; raises
    :class:`NegativePartError` on any negative entry.
    """
    parts = sorted(values, reverse=True)
    if parts and parts[-1] < 0:
        raise NegativePartError(f"partition parts must be non-negative, got {parts}")
    return tuple(p for p in parts if p > 0)


def degree(lam: Partition) -> int:
    """Sum of the parts."""
    return sum(lam)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the diagram of *lam*."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def partitions_of(n: int, max_len: Optional[int] = None) -> list[Partition]:
    """All partitions of *n* with at most *max_len* parts.

    ``max_len=None`` means unbounded.  The list is in decreasing
    lexicographic order with no duplicates.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    limit = n if max_len is None else max_len
    return list(_partitions(n, n, limit))


def _partitions(n: int, max_part: int, max_len: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    if max_len <= 0 or max_part <= 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first, max_len - 1):
            yield (first,) + rest


def pad(lam: Partition, size: int) -> tuple[int, ...]:
    """Zero-pad *lam* on the right to exactly *size* entries."""
    if len(lam) > size:
        raise ValueError(f"partition {lam} has more than {size} parts")
    return lam + (0,) * (size - len(lam))


def in_P(lam: Partition) -> bool:
    """All-even-or-all-odd class membership.

    True iff *lam* has at most 4 parts and its zero-padded 4-tuple has all
    entries of a single parity (zero counts as even).
    """
    if len(lam) > 4:
        return False
    return len({p % 2 for p in pad(lam, 4)}) == 1


def in_P_bar(lam: Partition) -> bool:
    """Complement of :func:`in_P` among partitions with at most 4 parts,
    i.e. two even and two odd entries after padding."""
    return len(lam) <= 4 and not in_P(lam)


def in_gamma_P(lam: Partition, gamma: ShiftVector) -> bool:
    """Shifted class membership: the componentwise difference lam - gamma
    (both padded to 4 entries) is non-negative, non-increasing, and in P."""
    if len(lam) > 4 or len(gamma) > 4:
        return False
    diff = tuple(a - b for a, b in zip(pad(lam, 4), pad(gamma, 4)))
    if any(x < 0 for x in diff):
        return False
    if any(diff[i] < diff[i + 1] for i in range(3)):
        return False
    return len({x % 2 for x in diff}) == 1


def phi(lam: Partition) -> Partition:
    """Degree-raising map: add a box to the first row and append a row of 1."""
    if not lam:
        raise EmptyPartitionError("phi is undefined on the empty partition")
    return (lam[0] + 1,) + lam[1:] + (1,)


class ShapeClass(NamedTuple):
    """Canonical shape tag with parameters.

    For ``hook`` the arm is ``lam1`` and the leg length (number of 1s) is
    ``m1``.  For ``double_hook`` the rows below the first two consist of
    ``m2`` twos followed by ``m1`` ones.  Unused fields are None.
    """

    tag: str
    lam1: Optional[int] = None
    lam2: Optional[int] = None
    m2: Optional[int] = None
    m1: Optional[int] = None


def classify_shape(lam: Partition) -> ShapeClass:
    """Assign the unique canonical shape tag.

    Precedence: one_row (length <= 1), one_column, hook, two_row,
    double_hook, other.  ``other`` means not contained in a double hook,
    i.e. at least three rows exceed 2.
    """
    if len(lam) <= 1:
        return ShapeClass("one_row", lam1=lam[0] if lam else 0)
    if lam[0] == 1:
        return ShapeClass("one_column", m1=len(lam))
    if lam[1] == 1:
        return ShapeClass("hook", lam1=lam[0], m1=len(lam) - 1)
    if len(lam) == 2:
        return ShapeClass("two_row", lam1=lam[0], lam2=lam[1])
    if lam[2] <= 2:
        tail = lam[2:]
        return ShapeClass(
            "double_hook",
            lam1=lam[0],
            lam2=lam[1],
            m2=sum(1 for p in tail if p == 2),
            m1=sum(1 for p in tail if p == 1),
        )
    return ShapeClass("other")


def contained_in_double_hook(lam: Partition) -> bool:
    """True iff at most two rows of *lam* exceed 2."""
    return len(lam) < 3 or lam[2] <= 2


def parse_partition(text: str) -> Partition:
    """Parse the bracketed partition syntax, e.g. ``[6,4,2]`` or ``[]``.

    The exponent shorthand ``2^3`` expands to three parts equal to 2.  The
    result is canonicalized through :func:`make_partition`.
    """
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"partition literal must be bracketed like [6,4,2], got {text!r}")
    body = s[1:-1].strip()
    if not body:
        return ()
    parts: list[int] = []
    for token in body.split(","):
        token = token.strip()
        if "^" in token:
            base, _, exponent = token.partition("^")
            part, repeat = int(base), int(exponent)
            if repeat < 0:
                raise ValueError(f"exponent must be non-negative in {token!r}")
            parts.extend([part] * repeat)
        else:
            parts.append(int(token))
    return make_partition(parts)


def format_partition(lam: Partition) -> str:
    """Bracketed rendering, inverse of :func:`parse_partition` on canonical input."""
    return "[" + ",".join(str(p) for p in lam) + "]"
