"""Variables x[i,j,k] of the ambient polynomial ring and quadratic binomials.

x[i,j,k] is the (i,j) entry of the k-th generic matrix.  The monomial order
used throughout is the lexicographic order in which variables decrease as
the key (k, i, j) increases:

    x[1,1,1] > x[1,2,1] > ... > x[1,n,1] > x[2,1,1] > ... > x[m,n,1]
             > x[1,1,2] > ... > x[m,n,r]

Under this order the leading term of every 2x2 minor of the horizontal or
vertical concatenation is its main-diagonal product, so we call it the
diagonal order.  A monomial is stored as a tuple of Variables sorted with
the largest variable first.
"""

from __future__ import annotations

import re
from dataclasses import dataclass


@dataclass(frozen=True)
class Variable:
    i: int
    j: int
    k: int

    def __post_init__(self):
        if self.i < 1 or self.j < 1 or self.k < 1:
            raise ValueError(f"variable indices must be positive: {self}")

    @property
    def order_key(self):
        """Sort key: smaller key means larger variable in the diagonal order."""
        return (self.k, self.i, self.j)

    def __str__(self):
        return f"x[{self.i},{self.j},{self.k}]"


def monomial(variables):
    """Canonical monomial: variables sorted largest-first."""
    return tuple(sorted(variables, key=lambda v: v.order_key))


def lex_greater(a, b):
    """Compare canonical monomials under the diagonal lexicographic order.

    Pure lex: the first differing variable decides; with one monomial a
    prefix of the other, the longer (higher-degree) one is greater.
    """
    for va, vb in zip(a, b):
        if va != vb:
            return va.order_key < vb.order_key
    return len(a) > len(b)


def monomial_str(mono):
    return "*".join(str(v) for v in mono)


@dataclass(frozen=True)
class Binomial:
    """Difference of two distinct squarefree degree-2 monomials.

    Canonical form: ``plus`` is the term that is larger under the diagonal
    order, so ``plus`` is always the leading term.  Equal generating sets of
    binomials are then equal as Python sets.
    """

    plus: tuple
    minus: tuple

    @classmethod
    def make(cls, term_a, term_b):
        a, b = monomial(term_a), monomial(term_b)
        if len(a) != 2 or len(b) != 2:
            raise ValueError("binomial terms must have degree 2")
        if a == b:
            raise ValueError("binomial terms must differ")
        if lex_greater(a, b):
            return cls(a, b)
        return cls(b, a)

    def variables(self):
        return set(self.plus) | set(self.minus)

    def __str__(self):
        return f"{monomial_str(self.plus)} - {monomial_str(self.minus)}"


_VAR_RE = re.compile(r"x\[(\d+),(\d+),(\d+)\]")


def parse_binomial(text):
    """Inverse of str(Binomial): 'x[...]*x[...] - x[...]*x[...]'."""
    sides = text.split("-")
    if len(sides) != 2:
        raise ValueError(f"expected exactly one '-' in binomial: {text!r}")
    terms = []
    for side in sides:
        found = _VAR_RE.findall(side)
        if len(found) != 2 or _VAR_RE.sub("", side).replace("*", "").strip():
            raise ValueError(f"bad binomial term: {side.strip()!r}")
        terms.append(tuple(Variable(int(i), int(j), int(k))
                           for i, j, k in found))
    return Binomial.make(*terms)
