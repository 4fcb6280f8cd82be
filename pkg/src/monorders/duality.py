"""Lattices, projectivity, dual levels and the Gorenstein criterion.

A column lattice in the n-dimensional column space is described by its type,
a plain tuple of n integer exponents.  Over an order of level m, a type l is
a lattice iff m[i][j] + l[j] >= l[i] for all i, j, and a lattice is
projective iff it is, up to a global shift c, a column of m (the witness is
the pair (j, c)).

The dual of an order of level m is the module of level -transpose(m); it is
generally not an order itself.  An order is Gorenstein exactly when its dual
is projective as a one-sided module, which unwinds to a purely combinatorial
criterion: for every row i there are c and a column j with
m[i][k] + m[k][j] = c for all k.  ``gorenstein_via_dual`` re-derives the
verdict along the module route (dual columns tested for projectivity) and
serves as an independent cross-check of ``is_gorenstein``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import DimensionMismatch, NotALatticeError, NotNormalizedError
from .levels import LevelMatrix, _require_order, normalize_positive


def lattice_violation(m: LevelMatrix, l: Sequence[int]):
    """First 1-based pair (i, j) with m[i][j] + l[j] < l[i], or None."""
    _require_order(m)
    n = m.n
    if len(l) != n:
        raise DimensionMismatch(f"type has length {len(l)} but level has size {n}")
    rows = m.entries
    for i in range(n):
        ri = rows[i]
        li = l[i]
        for j in range(n):
            if ri[j] + l[j] < li:
                return (i + 1, j + 1)
    return None


def is_lattice(m: LevelMatrix, l: Sequence[int]) -> bool:
    """True iff the column type l is a lattice over the order m."""
    return lattice_violation(m, l) is None


def projective_witness(m: LevelMatrix, l: Sequence[int]):
    """Witness (column j, shift c), 1-based j, with l[i] = m[i][j] + c for all i.

    Requires m to be an order with zero first row and l to be a lattice over
    it; callers that normalize m by shifts must adjust l alongside
    (l[i] -> l[i] + shifts[i]).  Once j is fixed, c is forced by the first
    coordinate, so the scan is finite.  Returns None when no column matches.
    """
    _require_order(m)
    n = m.n
    if any(m.entries[0][j] != 0 for j in range(n)):
        raise NotNormalizedError("projectivity test requires a zero first row")
    witness = lattice_violation(m, l)
    if witness is not None:
        raise NotALatticeError(f"type is not a lattice (violation at {witness})", witness)
    rows = m.entries
    for j in range(n):
        c = l[0] - rows[0][j]
        if all(l[i] == rows[i][j] + c for i in range(n)):
            return (j + 1, c)
    return None


def is_projective(m: LevelMatrix, l: Sequence[int]) -> bool:
    """True iff the lattice of type l is projective over the order m."""
    return projective_witness(m, l) is not None


@dataclass(frozen=True)
class DualLevel:
    """Level of the dual module: raw = -transpose, normalized = zero first row.

    ``normalized`` differs from ``raw`` by per-column shifts (a module
    isomorphism), so each column keeps its projectivity class; it is not a
    conjugate of ``raw``.  For a positive-type source the normalized dual is
    again positive type.
    """

    raw: LevelMatrix
    normalized: LevelMatrix


def dual_level(m: LevelMatrix) -> DualLevel:
    """Dual module level of a level m.

    raw[i][j] = -m[j][i]; normalized[i][j] = raw[i][j] - raw[0][j], forcing
    the first row to zero by column shifts.  Total on square integer input:
    the raw dual of an order is typically not an order itself, and the
    double dual satisfies dual_level(dual_level(m).raw).raw == m.
    """
    n = m.n
    rows = m.entries
    raw = tuple(tuple(-rows[j][i] for j in range(n)) for i in range(n))
    top = raw[0]
    normalized = tuple(tuple(raw[i][j] - top[j] for j in range(n)) for i in range(n))
    return DualLevel(LevelMatrix(raw), LevelMatrix(normalized))


def _gorenstein_scan(m):
    # per-row witnesses (c, j) with m[i][k] + m[k][j] == c for all k,
    # or the first failing row; all indices 1-based in the result
    rows = m.entries
    n = m.n
    witnesses = []
    for i in range(n):
        ri = rows[i]
        found = None
        for j in range(n):
            c = ri[0] + rows[0][j]
            if all(ri[k] + rows[k][j] == c for k in range(n)):
                found = (c, j + 1)
                break
        if found is None:
            return None, i + 1
        witnesses.append(found)
    return tuple(witnesses), None


def gorenstein_witnesses(m: LevelMatrix):
    """Per-row witnesses (c(i), column j(i)) or None when some row has none.

    Row i admits a witness when m[i][k] + m[k][j] is constant in k, i.e. the
    negated row i equals column j up to the additive constant c(i).
    """
    _require_order(m)
    witnesses, _ = _gorenstein_scan(m)
    return witnesses


def gorenstein_failing_row(m: LevelMatrix):
    """First 1-based row without a witness, or None for Gorenstein orders."""
    _require_order(m)
    _, failing = _gorenstein_scan(m)
    return failing


def is_gorenstein(m: LevelMatrix) -> bool:
    """True iff every negated row is, up to a constant, a column of m.

    The criterion is invariant under conjugation, so no prior normalization
    is needed.
    """
    _require_order(m)
    witnesses, _ = _gorenstein_scan(m)
    return witnesses is not None


def gorenstein_via_dual(m: LevelMatrix) -> bool:
    """Independent Gorenstein verdict along the dual-module route.

    Normalizes m to positive type and tests every column of the normalized
    dual for projectivity over the normalized order.  Used as a cross-check
    oracle against :func:`is_gorenstein`; the two must always agree.
    """
    base = normalize_positive(m).level
    dual = dual_level(base).normalized
    n = base.n
    for j in range(n):
        column = tuple(dual.entries[i][j] for i in range(n))
        if not is_projective(base, column):
            return False
    return True
