"""Integer level matrices and the monomial conjugation action on them.

A level matrix records, for every position (i, j) of an n x n matrix ring
over a local division ring, the valuation exponent of the ideal sitting in
that entry.  The resulting additive module is a ring, and hence an order,
exactly when the diagonal exponents vanish and the triangle condition
m[i][k] <= m[i][j] + m[j][k] holds for all index triples; ``is_order``
decides this and ``order_violation`` reports the first broken constraint.

Monomial matrices (a diagonal of uniformizer powers composed with a
permutation) act on levels by conjugation.  The action is encoded by
:class:`WeylElement` and implemented by :func:`conjugate`; the convention
used throughout is

    conjugate(m, (shifts, perm))[perm[i]][perm[j]] = m[i][j] + shifts[i] - shifts[j]

Every order is conjugate to a *positive type* level: first row zero and all
entries nonnegative (:func:`normalize_positive`).  Exhausting the
permutation part on top of that normalization yields a canonical
representative per conjugacy class (:func:`canonical_form`).

All values are immutable and all functions are pure, so everything here is
safe to share between threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable

from .errors import DimensionMismatch, NotAnOrderError, SearchTooLargeError

#: Largest n for which the n! conjugacy searches run without an explicit opt-in.
DEFAULT_SEARCH_CAP = 8


@dataclass(frozen=True)
class LevelMatrix:
    """Square integer matrix of valuation exponents.

    Entries are stored as a tuple of row tuples and may be any integers;
    validity as an order is a separate query (`is_order`), so intermediate
    states such as enumeration candidates or duals are representable.
    """

    entries: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        n = len(self.entries)
        if n == 0:
            raise ValueError("a level matrix has size at least 1")
        for row in self.entries:
            if not isinstance(row, tuple) or len(row) != n:
                raise ValueError("level matrix entries must form a square tuple of tuples")
            for e in row:
                if not isinstance(e, int) or isinstance(e, bool):
                    raise TypeError(f"level entries must be integers, got {e!r}")

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[int]]) -> "LevelMatrix":
        return cls(tuple(tuple(int(e) for e in row) for row in rows))

    @classmethod
    def zero(cls, n: int) -> "LevelMatrix":
        return cls(tuple((0,) * n for _ in range(n)))

    @property
    def n(self) -> int:
        return len(self.entries)

    def row(self, i: int) -> tuple[int, ...]:
        """Row i, 1-based."""
        return self.entries[i - 1]

    def column(self, j: int) -> tuple[int, ...]:
        """Column j, 1-based."""
        return tuple(row[j - 1] for row in self.entries)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def __str__(self):
        width = max(len(str(e)) for row in self.entries for e in row)
        return "\n".join(" ".join(str(e).rjust(width) for e in row) for row in self.entries)


@dataclass(frozen=True)
class WeylElement:
    """Element (shifts, perm) of Z^n semidirect S_n acting on levels.

    ``shifts`` are the exponents of the diagonal part; ``perm`` maps index i
    to perm[i] (0-based).  Composition follows the action:
    ``conjugate(conjugate(m, w1), w2) == conjugate(m, compose(w2, w1))``.
    """

    shifts: tuple[int, ...]
    perm: tuple[int, ...]

    def __post_init__(self):
        n = len(self.shifts)
        if len(self.perm) != n:
            raise ValueError("shifts and perm must have the same length")
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"perm must be a permutation of range({n})")
        for s in self.shifts:
            if not isinstance(s, int) or isinstance(s, bool):
                raise TypeError("shifts must be integers")

    @classmethod
    def identity(cls, n: int) -> "WeylElement":
        return cls((0,) * n, tuple(range(n)))

    @property
    def n(self) -> int:
        return len(self.shifts)


def compose(outer: WeylElement, inner: WeylElement) -> WeylElement:
    """The element acting as `inner` first, then `outer`."""
    if outer.n != inner.n:
        raise DimensionMismatch("cannot compose elements of different sizes")
    perm = tuple(outer.perm[p] for p in inner.perm)
    shifts = tuple(inner.shifts[i] + outer.shifts[inner.perm[i]] for i in range(inner.n))
    return WeylElement(shifts, perm)


def inverse(w: WeylElement) -> WeylElement:
    n = w.n
    inv_perm = [0] * n
    for i, p in enumerate(w.perm):
        inv_perm[p] = i
    shifts = tuple(-w.shifts[inv_perm[j]] for j in range(n))
    return WeylElement(shifts, tuple(inv_perm))


@dataclass(frozen=True)
class PositiveTypeForm:
    """A positive-type level together with the element that produced it."""

    level: LevelMatrix
    applied: WeylElement


def order_violation(m: LevelMatrix):
    """First violated order constraint, or None.

    Returns a 1-based diagonal index i when m[i][i] != 0, else the first
    1-based triple (i, j, k) with m[i][k] > m[i][j] + m[j][k] in row-major
    scan order, else None.
    """
    rows = m.entries
    n = m.n
    for i in range(n):
        if rows[i][i] != 0:
            return i + 1
    for i in range(n):
        ri = rows[i]
        for j in range(n):
            rj = rows[j]
            mij = ri[j]
            for k in range(n):
                if ri[k] > mij + rj[k]:
                    return (i + 1, j + 1, k + 1)
    return None


def is_order(m: LevelMatrix) -> bool:
    """True iff the diagonal vanishes and the triangle condition holds."""
    return order_violation(m) is None


def _order_ok(rows, n):
    # fast path for enumeration loops; `rows` is any indexable of indexables
    for i in range(n):
        if rows[i][i] != 0:
            return False
    for i in range(n):
        ri = rows[i]
        for j in range(n):
            rj = rows[j]
            mij = ri[j]
            for k in range(n):
                if ri[k] > mij + rj[k]:
                    return False
    return True


def _require_order(m):
    witness = order_violation(m)
    if witness is not None:
        raise NotAnOrderError(f"level is not an order (violation at {witness})", witness)


def conjugate(m: LevelMatrix, w: WeylElement) -> LevelMatrix:
    """Conjugate a level by a Weyl element.

    Entry (perm[i], perm[j]) of the result is m[i][j] + shifts[i] - shifts[j].
    The order condition is preserved in both directions.
    """
    n = m.n
    if w.n != n:
        raise DimensionMismatch(f"level has size {n} but element has size {w.n}")
    rows = m.entries
    perm = w.perm
    shifts = w.shifts
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        target = out[perm[i]]
        si = shifts[i]
        ri = rows[i]
        for j in range(n):
            target[perm[j]] = ri[j] + si - shifts[j]
    return LevelMatrix(tuple(tuple(r) for r in out))


def normalize_positive(m: LevelMatrix) -> PositiveTypeForm:
    """Shift-conjugate an order so its first row is zero.

    Taking shifts[j] = m[1][j] kills the first row, and the triangle
    condition through row one then forces every entry of the result to be
    nonnegative.  The applied element is recorded for round-tripping.
    """
    _require_order(m)
    w = WeylElement(m.entries[0], tuple(range(m.n)))
    return PositiveTypeForm(conjugate(m, w), w)


def _permuted_normalized(rows, n, sigma):
    # rows of conjugate(m, (0, sigma)) followed by first-row normalization,
    # computed in one pass: with r = sigma^{-1}(0), entry (sigma[i], sigma[j])
    # is m[i][j] + m[r][i] - m[r][j].
    r = sigma.index(0)
    base = rows[r]
    out = [[0] * n for _ in range(n)]
    for i in range(n):
        target = out[sigma[i]]
        bi = base[i]
        ri = rows[i]
        for j in range(n):
            target[sigma[j]] = ri[j] + bi - base[j]
    return tuple(tuple(row) for row in out)


def canonical_form(m: LevelMatrix, search_cap: int = DEFAULT_SEARCH_CAP) -> tuple[LevelMatrix, WeylElement]:
    """Distinguished conjugacy-class representative of an order.

    Over all n! permutations, conjugate, normalize the first row to zero,
    and keep the row-major lexicographically smallest level.  Two orders are
    conjugate under the full action iff their canonical levels are equal.
    Returns the level together with an achieving Weyl element.
    """
    _require_order(m)
    n = m.n
    if n > search_cap:
        raise SearchTooLargeError(f"canonical form of size {n} exceeds the cap {search_cap}")
    rows = m.entries
    best = None
    best_sigma = None
    for sigma in itertools.permutations(range(n)):
        candidate = _permuted_normalized(rows, n, sigma)
        if best is None or candidate < best:
            best = candidate
            best_sigma = sigma
    witness = WeylElement(rows[best_sigma.index(0)], best_sigma)
    return LevelMatrix(best), witness


def is_upper_triangular(m: LevelMatrix) -> bool:
    """True iff m[i][j] = 0 whenever i <= j (strict lower triangular values only)."""
    rows = m.entries
    for i in range(m.n):
        ri = rows[i]
        for j in range(i, m.n):
            if ri[j] != 0:
                return False
    return True


def _is_upper_triangular_rows(rows, n):
    for i in range(n):
        ri = rows[i]
        for j in range(i, n):
            if ri[j] != 0:
                return False
    return True
