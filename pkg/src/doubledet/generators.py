"""2x2 minors of the concatenated matrices and the minimal generator families.

H is the m x (nr) horizontal concatenation of the r generic m x n matrices
(column (k-1)n + j holds column j of matrix k) and V is the (mr) x n
vertical concatenation (row (k-1)m + i holds row i of matrix k).  The
presentation ideal is generated by all 2x2 minors of H and V; its minimal
generators split into four disjoint families according to which of the
row / column / matrix indices coincide, and each family element is, up to
sign, one minor or a sum of two.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from math import comb

from . import sorting
from .ring import Binomial, Variable, monomial

FAMILY_KEYS = ("same_row", "same_column", "same_block", "mixed")


@dataclass(frozen=True)
class Minor:
    """A 2x2 minor of H or V, with positions in the concatenated matrix.

    ``entries`` is the (a11, a12, a21, a22) layout; the minor as a binomial
    is a11*a22 - a12*a21, whose leading term under the diagonal order is
    the diagonal product a11*a22.
    """

    source: str  # "H" or "V"
    rows: tuple
    cols: tuple
    entries: tuple

    @property
    def binomial(self):
        a11, a12, a21, a22 = self.entries
        return Binomial.make((a11, a22), (a12, a21))

    @property
    def block(self):
        """The matrix index k if all four entries lie in one matrix, else None."""
        ks = {v.k for v in self.entries}
        return ks.pop() if len(ks) == 1 else None

    def __str__(self):
        return (f"{self.source}[rows={self.rows},cols={self.cols}]: "
                f"{self.binomial}")


def _h_entry(n, i, c):
    return Variable(i, (c - 1) % n + 1, (c - 1) // n + 1)


def _v_entry(m, rho, j):
    return Variable((rho - 1) % m + 1, j, (rho - 1) // m + 1)


def _h_minor(n, i1, i2, c1, c2):
    return Minor("H", (i1, i2), (c1, c2),
                 (_h_entry(n, i1, c1), _h_entry(n, i1, c2),
                  _h_entry(n, i2, c1), _h_entry(n, i2, c2)))


def _v_minor(m, r1, r2, j1, j2):
    return Minor("V", (r1, r2), (j1, j2),
                 (_v_entry(m, r1, j1), _v_entry(m, r1, j2),
                  _v_entry(m, r2, j1), _v_entry(m, r2, j2)))


def _validate_sizes(m, n, r):
    if m < 1 or n < 1 or r < 1:
        raise ValueError("matrix sizes must be positive")


def minors_H(m, n, r):
    """All 2x2 minors of H, row pairs outer, column pairs inner."""
    _validate_sizes(m, n, r)
    return [_h_minor(n, i1, i2, c1, c2)
            for i1, i2 in combinations(range(1, m + 1), 2)
            for c1, c2 in combinations(range(1, n * r + 1), 2)]


def minors_V(m, n, r):
    """All 2x2 minors of V, row pairs outer, column pairs inner."""
    _validate_sizes(m, n, r)
    return [_v_minor(m, r1, r2, j1, j2)
            for r1, r2 in combinations(range(1, m * r + 1), 2)
            for j1, j2 in combinations(range(1, n + 1), 2)]


def minor_basis(m, n, r):
    """Minors of H then V with duplicates dropped (a minor inside a single
    matrix occurs in both concatenations but is listed once)."""
    seen = set()
    out = []
    for minor in minors_H(m, n, r) + minors_V(m, n, r):
        b = minor.binomial
        if b not in seen:
            seen.add(b)
            out.append(minor)
    return out


def generator_families(m, n, r):
    """The four disjoint families of minimal generators, keyed by which
    indices agree between the two points being swapped:

    - "same_row":    row i fixed, columns j1 < j2, matrices k1 < k2
    - "same_column": column j fixed, rows i1 < i2, matrices k1 < k2
    - "same_block":  matrix k fixed, rows i1 < i2, columns j1 < j2
    - "mixed":       all three index pairs distinct (three shapes each)
    """
    _validate_sizes(m, n, r)
    same_row = [
        Binomial.make((Variable(i, j2, k1), Variable(i, j1, k2)),
                      (Variable(i, j1, k1), Variable(i, j2, k2)))
        for i in range(1, m + 1)
        for j1, j2 in combinations(range(1, n + 1), 2)
        for k1, k2 in combinations(range(1, r + 1), 2)]
    same_column = [
        Binomial.make((Variable(i2, j, k1), Variable(i1, j, k2)),
                      (Variable(i1, j, k1), Variable(i2, j, k2)))
        for i1, i2 in combinations(range(1, m + 1), 2)
        for j in range(1, n + 1)
        for k1, k2 in combinations(range(1, r + 1), 2)]
    same_block = [
        Binomial.make((Variable(i1, j2, k), Variable(i2, j1, k)),
                      (Variable(i1, j1, k), Variable(i2, j2, k)))
        for i1, i2 in combinations(range(1, m + 1), 2)
        for j1, j2 in combinations(range(1, n + 1), 2)
        for k in range(1, r + 1)]
    mixed = []
    for i1, i2 in combinations(range(1, m + 1), 2):
        for j1, j2 in combinations(range(1, n + 1), 2):
            for k1, k2 in combinations(range(1, r + 1), 2):
                sorted_term = (Variable(i1, j1, k1), Variable(i2, j2, k2))
                mixed.extend(Binomial.make(unsorted, sorted_term)
                             for unsorted in (
                                 (Variable(i1, j2, k1), Variable(i2, j1, k2)),
                                 (Variable(i2, j1, k1), Variable(i1, j2, k2)),
                                 (Variable(i2, j2, k1), Variable(i1, j1, k2))))
    return {"same_row": same_row, "same_column": same_column,
            "same_block": same_block, "mixed": mixed}


def family_sizes(m, n, r):
    """Closed-form family cardinalities."""
    _validate_sizes(m, n, r)
    return {
        "same_row": m * comb(r, 2) * comb(n, 2),
        "same_column": n * comb(r, 2) * comb(m, 2),
        "same_block": r * comb(m, 2) * comb(n, 2),
        "mixed": 3 * comb(r, 2) * comb(m, 2) * comb(n, 2),
    }


def sorting_relations(m, n, r):
    """One relation per unsorted pair: the product of two incomparable grid
    variables minus the product over their meet and join."""
    _validate_sizes(m, n, r)
    triples = [(i, j, k)
               for i in range(1, m + 1)
               for j in range(1, n + 1)
               for k in range(1, r + 1)]
    out = []
    for a, b in combinations(triples, 2):
        if all(x <= y for x, y in zip(a, b)) or all(x >= y for x, y in zip(a, b)):
            continue
        lo = tuple(min(x, y) for x, y in zip(a, b))
        hi = tuple(max(x, y) for x, y in zip(a, b))
        out.append(Binomial.make((Variable(*a), Variable(*b)),
                                 (Variable(*lo), Variable(*hi))))
    return out


def _expansion(signed_minors):
    acc = {}
    for sign, minor in signed_minors:
        a11, a12, a21, a22 = minor.entries
        for coeff, term in ((sign, monomial((a11, a22))),
                            (-sign, monomial((a12, a21)))):
            acc[term] = acc.get(term, 0) + coeff
            if acc[term] == 0:
                del acc[term]
    return acc


def decompose_into_minors(g: Binomial, m, n, r):
    """Write a family element as a signed sum of at most two minors.

    The fixed-index families and the first two mixed shapes are single
    minors; the third mixed shape is the sum of a V-minor and an H-minor.
    Binomials outside the four families are rejected.
    """
    _validate_sizes(m, n, r)
    for v in g.variables():
        if v.i > m or v.j > n or v.k > r:
            raise ValueError(f"variable {v} outside a {m}x{n} x{r} arrangement")
    a, b = g.minus
    lo = (min(a.i, b.i), min(a.j, b.j), min(a.k, b.k))
    hi = (max(a.i, b.i), max(a.j, b.j), max(a.k, b.k))
    if ((a.i, a.j, a.k) in (lo, hi)  # comparable points: not a relation
            or monomial(g.plus) != monomial((Variable(*lo), Variable(*hi)))):
        raise ValueError(f"{g} is not a minimal generator")
    i1, j1, k1 = lo
    i2, j2, k2 = hi

    if a.i == b.i:
        # same row: one minor of V
        parts = [(1, _v_minor(m, (k1 - 1) * m + i1, (k2 - 1) * m + i1, j1, j2))]
    elif a.j == b.j:
        # same column: one minor of H
        parts = [(1, _h_minor(n, i1, i2, (k1 - 1) * n + j1, (k2 - 1) * n + j1))]
    elif a.k == b.k:
        # one matrix: that matrix's own minor
        parts = [(1, _h_minor(n, i1, i2, (k1 - 1) * n + j1, (k1 - 1) * n + j2))]
    else:
        low = a if a.k == k1 else b  # the variable from the earlier matrix
        v_min = _v_minor(m, (k1 - 1) * m + i1, (k2 - 1) * m + i2, j1, j2)
        h_min = _h_minor(n, i1, i2, (k1 - 1) * n + j1, (k2 - 1) * n + j2)
        if (low.i, low.j) == (i1, j2):
            parts = [(1, v_min)]
        elif (low.i, low.j) == (i2, j1):
            parts = [(1, h_min)]
        else:
            # antidiagonal swap: V-minor plus the H-minor on crossed columns
            parts = [(1, v_min),
                     (1, _h_minor(n, i1, i2, (k1 - 1) * n + j2, (k2 - 1) * n + j1))]
    assert _expansion(parts) == {monomial(g.plus): 1, monomial(g.minus): -1}
    return tuple(parts)


def minor_dependency_witness(m, n, r):
    """A zero signed sum of four distinct minors, or None.

    Integer dependencies can only relate minors whose terms share a common
    image under the monomial map, so the search runs fiber by fiber.
    """
    _validate_sizes(m, n, r)
    fibers = {}
    for minor in minor_basis(m, n, r):
        key = sorting.phi_monomial(minor.binomial.plus, m, n, r).ids
        fibers.setdefault(key, []).append(minor)
    for key in sorted(fibers):
        group = fibers[key]
        if len(group) < 4:
            continue
        for quad in combinations(group, 4):
            for rest in product((1, -1), repeat=3):
                signed = tuple(zip((1,) + rest, quad))
                if not _expansion(signed):
                    return signed
    return None
