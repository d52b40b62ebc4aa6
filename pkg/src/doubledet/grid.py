"""The grid {1..m} x {1..n} x {1..r} under componentwise order.

This is a distributive lattice (a product of three chains); meet and join
are componentwise min and max, so no Hasse diagram is ever materialized —
a point plus its bounds is the whole representation.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from . import poset as poset_mod
from .errors import SizeGuardError


@dataclass(frozen=True)
class GridPoint:
    i: int
    j: int
    k: int
    bounds: tuple  # (m, n, r)

    def __post_init__(self):
        m, n, r = self.bounds
        if not (1 <= self.i <= m and 1 <= self.j <= n and 1 <= self.k <= r):
            raise ValueError(
                f"point ({self.i},{self.j},{self.k}) outside {self.bounds}")

    @property
    def coords(self):
        return (self.i, self.j, self.k)

    def __str__(self):
        return f"({self.i},{self.j},{self.k})"


def grid_points(m, n, r):
    """All grid points in lexicographic (i, j, k) order."""
    _validate_bounds(m, n, r)
    return [GridPoint(i, j, k, (m, n, r))
            for i in range(1, m + 1)
            for j in range(1, n + 1)
            for k in range(1, r + 1)]


def _validate_bounds(m, n, r):
    if m < 1 or n < 1 or r < 1:
        raise ValueError("grid bounds must be positive")


def _check_same_bounds(p, q):
    if p.bounds != q.bounds:
        raise ValueError(f"mismatched grid bounds: {p.bounds} vs {q.bounds}")


def leq(p, q):
    _check_same_bounds(p, q)
    return all(a <= b for a, b in zip(p.coords, q.coords))


def comparable(p, q):
    """True iff p <= q or q <= p componentwise."""
    _check_same_bounds(p, q)
    return (all(a <= b for a, b in zip(p.coords, q.coords))
            or all(a >= b for a, b in zip(p.coords, q.coords)))


def meet(p, q):
    _check_same_bounds(p, q)
    return GridPoint(min(p.i, q.i), min(p.j, q.j), min(p.k, q.k), p.bounds)


def join(p, q):
    _check_same_bounds(p, q)
    return GridPoint(max(p.i, q.i), max(p.j, q.j), max(p.k, q.k), p.bounds)


def count_comparable_pairs(m, n, r):
    """Unordered pairs of (not necessarily distinct) comparable grid points.

    Summing the order-ideal sizes i*j*k over the grid factors into a
    product of three triangular numbers.
    """
    _validate_bounds(m, n, r)
    return comb(m + 1, 2) * comb(n + 1, 2) * comb(r + 1, 2)


def count_incomparable_pairs(m, n, r):
    """Unordered pairs of distinct incomparable grid points."""
    _validate_bounds(m, n, r)
    total = m * n * r
    return comb(total + 1, 2) - count_comparable_pairs(m, n, r)


def lattice_isomorphic_to_ideals(m, n, r, max_ideals=10_000):
    """Verify explicitly that I -> (|I ∩ chain_t| + 1)_t is an order
    isomorphism from the ideal lattice of the three-chain poset onto the
    grid: a bijection preserving order in both directions."""
    _validate_bounds(m, n, r)
    if m * n * r > max_ideals:
        raise SizeGuardError(f"{m * n * r} ideals exceed guard {max_ideals}")
    p = poset_mod.make_pmnr(m, n, r)
    chains = poset_mod.pmnr_chain_ranges(m, n, r)
    ideals = p.order_ideals()

    def image(ideal):
        i, j, k = (sum(1 for e in chain if e in ideal) + 1 for chain in chains)
        return GridPoint(i, j, k, (m, n, r))

    images = [image(ideal) for ideal in ideals]
    if len(set(images)) != len(ideals) or len(ideals) != m * n * r:
        return False
    for a in range(len(ideals)):
        for b in range(len(ideals)):
            if (ideals[a] <= ideals[b]) != leq(images[a], images[b]):
                return False
    return True
