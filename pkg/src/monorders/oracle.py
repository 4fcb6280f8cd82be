"""Definition-level brute-force oracles: overorder enumeration, Bass test.

Every order containing a monomial order is itself monomial, with an
entrywise smaller level bounded below by the negated transpose of the base
level.  That makes the set of overorders a finite box search, and "Bass"
(every overorder is Gorenstein) directly checkable, independently of the
structural classification theorems.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod

from .errors import BudgetExceededError
from .duality import is_gorenstein
from .levels import LevelMatrix, _require_order

DEFAULT_BUDGET = 10**7


@dataclass(frozen=True)
class OverorderSet:
    """All orders containing ``base``, including base itself, sorted by entries."""

    base: LevelMatrix
    members: tuple[LevelMatrix, ...]

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __contains__(self, level):
        return level in self.members


def overorder_bound(m: LevelMatrix) -> int:
    """Pair-range product used as the search-size guard."""
    rows = m.entries
    n = m.n
    return prod(rows[i][j] + rows[j][i] + 1 for j in range(1, n) for i in range(j))


def overorders(m: LevelMatrix, budget: int = DEFAULT_BUDGET) -> OverorderSet:
    """Exhaustively enumerate the levels of all orders containing m.

    Candidates have zero diagonal and -m[j][i] <= m'[i][j] <= m[i][j]; the
    search assigns off-diagonal pairs one at a time and prunes on every
    triangle constraint that becomes fully determined, so only viable
    prefixes are explored.  Raises BudgetExceededError when the pair-range
    product exceeds ``budget``.
    """
    _require_order(m)
    bound = overorder_bound(m)
    if bound > budget:
        raise BudgetExceededError(
            f"overorder search size {bound} exceeds the budget {budget}", bound
        )
    n = m.n
    rows = m.entries
    if n == 1:
        return OverorderSet(m, (LevelMatrix.zero(1),))

    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    candidates = []
    for i, j in pairs:
        a = rows[i][j]
        b = rows[j][i]
        cell = [(x, y) for x in range(-b, a + 1) for y in range(max(-a, -x), b + 1)]
        candidates.append(cell)

    cur = [[0] * n for _ in range(n)]
    found = []
    last = len(pairs) - 1

    def assign(idx):
        i, j = pairs[idx]
        row_i = cur[i]
        row_j = cur[j]
        for x, y in candidates[idx]:
            row_i[j] = x
            row_j[i] = y
            ok = True
            for k in range(i):
                row_k = cur[k]
                cki = row_k[i]
                cik = row_i[k]
                ckj = row_k[j]
                cjk = row_j[k]
                if (
                    x > cik + ckj
                    or y > cjk + cki
                    or cik > x + cjk
                    or cki > ckj + y
                    or ckj > cki + x
                    or cjk > y + cik
                ):
                    ok = False
                    break
            if not ok:
                continue
            if idx == last:
                found.append(tuple(tuple(r) for r in cur))
            else:
                assign(idx + 1)

    assign(0)
    found.sort()
    return OverorderSet(m, tuple(LevelMatrix(rows) for rows in found))


def bass_oracle(m: LevelMatrix, budget: int = DEFAULT_BUDGET):
    """Bass by definition: every overorder Gorenstein.

    Returns (True, None) or (False, w) with w a non-Gorenstein overorder.
    Among the failures, w is the one closest to the base (smallest total
    entrywise difference, ties broken lexicographically), so the witness is
    a minimal perturbation of the input.
    """
    rows = m.entries
    n = m.n
    best = None
    for member in overorders(m, budget).members:
        if is_gorenstein(member):
            continue
        distance = sum(
            rows[i][j] - member.entries[i][j] for i in range(n) for j in range(n)
        )
        key = (distance, member.entries)
        if best is None or key < best[0]:
            best = (key, member)
    if best is None:
        return True, None
    return False, best[1]
