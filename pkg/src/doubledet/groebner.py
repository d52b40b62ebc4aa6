"""Division and the Buchberger certificate under the diagonal order.

Everything here is exact: coefficients are Python ints (reductions of
binomials can transiently create longer integer combinations), monomials
are canonical tuples from the ring module, and the reduction strategy is
fixed (largest reducible term, divisor with the largest leading term), so
remainders are reproducible.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations

from . import generators, sorting
from .errors import BudgetExceededError
from .multiset import DEFAULT_BUDGET
from .ring import Binomial, lex_greater, monomial, monomial_str


class SparsePoly:
    """Integer polynomial as a dict from canonical monomials to nonzero
    coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms=()):
        data = dict(terms)
        self.terms = {t: c for t, c in data.items() if c != 0}

    @classmethod
    def from_binomial(cls, b: Binomial):
        return cls({monomial(b.plus): 1, monomial(b.minus): -1})

    @classmethod
    def zero(cls):
        return cls()

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, SparsePoly):
            return self.terms == other.terms
        return NotImplemented

    def __sub__(self, other):
        out = dict(self.terms)
        for t, c in other.terms.items():
            out[t] = out.get(t, 0) - c
            if out[t] == 0:
                del out[t]
        return SparsePoly(out)

    def scaled(self, coeff, mono):
        """self times coeff times the monomial."""
        if coeff == 0:
            return SparsePoly()
        return SparsePoly({monomial(t + mono): c * coeff
                           for t, c in self.terms.items()})

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for t in sorted(self.terms, key=_descending_key):
            c = self.terms[t]
            sign = "-" if c < 0 else "+"
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            parts.append(f"{sign} {mag}{monomial_str(t)}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def _descending_key(mono):
    # tuple of variable keys; shorter-prefix = larger handled by callers
    return tuple(v.order_key for v in mono)


def leading_term(p: SparsePoly):
    """Largest monomial of a nonzero polynomial under the diagonal order."""
    if not p:
        raise ValueError("the zero polynomial has no leading term")
    best = None
    for t in p.terms:
        if best is None or lex_greater(t, best):
            best = t
    return best


def divides(a, b):
    """Monomial divisibility as multisets of variables."""
    return not Counter(a) - Counter(b)


def quotient(b, a):
    """b / a for monomials with a | b."""
    counts = Counter(b) - Counter(a)
    return monomial(counts.elements())


def lcm_monomial(a, b):
    return monomial((Counter(a) | Counter(b)).elements())


def reduce(p: SparsePoly, basis):
    """Remainder of p on division by the basis.

    Strategy: repeatedly take the largest still-reducible term and divide
    by the basis element with the largest leading term among those whose
    leading term divides it; all basis elements must have unit leading
    coefficient.  The remainder has no term divisible by any basis leading
    term, so remainder zero certifies ideal membership whenever the basis
    is a Groebner basis.
    """
    prepared = []
    for b in basis:
        if not b:
            raise ValueError("basis elements must be nonzero")
        lt = leading_term(b)
        if abs(b.terms[lt]) != 1:
            raise ValueError("basis leading coefficients must be units")
        prepared.append((lt, b))
    work = dict(p.terms)
    remainder = {}
    while work:
        t = None
        for cand in work:
            if t is None or lex_greater(cand, t):
                t = cand
        chosen = None
        for lt, b in prepared:
            if divides(lt, t) and (chosen is None or lex_greater(lt, chosen[0])):
                chosen = (lt, b)
        coeff = work.pop(t)
        if chosen is None:
            remainder[t] = coeff
            continue
        lt, b = chosen
        factor = coeff * b.terms[lt]  # lc is +-1, so this divides exactly
        shift = quotient(t, lt)
        for mono, c in b.scaled(factor, shift).terms.items():
            if mono == t:
                continue
            val = work.get(mono, 0) - c
            if val:
                work[mono] = val
            elif mono in work:
                del work[mono]
    return SparsePoly(remainder)


def s_polynomial(f: SparsePoly, g: SparsePoly):
    """lcm-cancelled combination of the two leading terms."""
    lt_f, lt_g = leading_term(f), leading_term(g)
    big = lcm_monomial(lt_f, lt_g)
    return (f.scaled(g.terms[lt_g], quotient(big, lt_f))
            - g.scaled(f.terms[lt_f], quotient(big, lt_g)))


def in_kernel_poly(p: SparsePoly, m, n, r):
    """True iff p maps to zero under the monomial map x[i,j,k] -> x_i y_j z_k."""
    image = {}
    for t, c in p.terms.items():
        key = sorting.phi_monomial(t, m, n, r)
        image[key] = image.get(key, 0) + c
    return all(c == 0 for c in image.values())


def verify_groebner(basis, m, n, r, budget=DEFAULT_BUDGET):
    """Certify that ``basis`` is a Groebner basis of the full minor ideal.

    Three ingredients: every basis element lies in the ideal (its image
    under the monomial map vanishes); every S-polynomial of a basis pair
    reduces to zero (pairs with coprime leading terms are skipped); and
    every 2x2 minor of H and V reduces to zero, so the basis generates at
    least the whole ideal.  Polynomials are accepted as SparsePoly or
    Binomial.
    """
    polys = [SparsePoly.from_binomial(b) if isinstance(b, Binomial) else b
             for b in basis]
    if not all(in_kernel_poly(p, m, n, r) for p in polys):
        return False
    pair_count = len(polys) * (len(polys) - 1) // 2
    if budget is not None and pair_count > budget:
        raise BudgetExceededError(
            f"{pair_count} S-pairs exceed budget {budget}")
    lts = [leading_term(p) for p in polys]
    for a, b in combinations(range(len(polys)), 2):
        if not (Counter(lts[a]) & Counter(lts[b])):
            continue  # coprime leading terms: S-pair reduces automatically
        if reduce(s_polynomial(polys[a], polys[b]), polys):
            return False
    return all(
        not reduce(SparsePoly.from_binomial(minor.binomial), polys)
        for minor in generators.minor_basis(m, n, r))


def initial_ideal_minimal_generators(basis):
    """Minimal monomial generators of the leading-term ideal of the basis."""
    lts = set()
    for b in basis:
        p = SparsePoly.from_binomial(b) if isinstance(b, Binomial) else b
        lts.add(leading_term(p))
    ordered = sorted(lts, key=len)
    kept = []
    for t in ordered:
        if not any(divides(s, t) for s in kept):
            kept.append(t)
    return frozenset(kept)
