"""Shared helpers for the test suite."""

import itertools
import random

from monorders import LevelMatrix, WeylElement
from monorders.levels import _order_ok


def min_plus_closure(rows):
    """Shortest-path closure of a nonnegative matrix with zero diagonal.

    The result always satisfies the order condition, which makes it a cheap
    generator of random orders.
    """
    n = len(rows)
    rows = [list(r) for r in rows]
    for k in range(n):
        rk = rows[k]
        for i in range(n):
            ri = rows[i]
            rik = ri[k]
            for j in range(n):
                v = rik + rk[j]
                if v < ri[j]:
                    ri[j] = v
    return rows


def random_order(rng: random.Random, n: int, bound: int, zero_first_row=False) -> LevelMatrix:
    rows = [
        [
            0 if i == j or (zero_first_row and i == 0) else rng.randint(0, bound)
            for j in range(n)
        ]
        for i in range(n)
    ]
    return LevelMatrix.from_rows(min_plus_closure(rows))


def random_weyl(rng: random.Random, n: int, shift_bound: int = 3) -> WeylElement:
    perm = list(range(n))
    rng.shuffle(perm)
    shifts = tuple(rng.randint(-shift_bound, shift_bound) for _ in range(n))
    return WeylElement(shifts, tuple(perm))


def enumerate_orders(n: int, bound: int):
    """All orders with zero first row, zero diagonal and entries in [0, bound]."""
    free = [(i, j) for i in range(1, n) for j in range(n) if j != i]
    rows = [[0] * n for _ in range(n)]
    out = []
    for combo in itertools.product(range(bound + 1), repeat=len(free)):
        for (i, j), value in zip(free, combo):
            rows[i][j] = value
        if _order_ok(rows, n):
            out.append(LevelMatrix.from_rows(rows))
    return out


def enumerate_triangular_orders(n: int, bound: int):
    """All upper triangular orders with below-diagonal entries in [0, bound]."""
    free = [(i, j) for i in range(n) for j in range(i)]
    rows = [[0] * n for _ in range(n)]
    out = []
    for combo in itertools.product(range(bound + 1), repeat=len(free)):
        for (i, j), value in zip(free, combo):
            rows[i][j] = value
        if _order_ok(rows, n):
            out.append(LevelMatrix.from_rows(rows))
    return out
