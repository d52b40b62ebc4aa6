import pytest

from doubledet.errors import BudgetExceededError
from doubledet.generators import minor_basis, sorting_relations
from doubledet.groebner import (SparsePoly, in_kernel_poly,
                                initial_ideal_minimal_generators,
                                leading_term, lcm_monomial, reduce,
                                s_polynomial, verify_groebner)
from doubledet.ring import Binomial, Variable, lex_greater, monomial
from doubledet.simplicial import initial_generators, vertex_for_variable

GB_SIZES = [(2, 2, 2), (2, 2, 3), (2, 3, 2), (3, 2, 2), (1, 2, 5), (2, 2, 1)]


def paper_m1():
    return Binomial.make((Variable(1, 1, 1), Variable(2, 2, 2)),
                         (Variable(2, 1, 1), Variable(1, 2, 2)))


def test_variable_order():
    # x[1,1,1] > x[1,2,1] > x[2,1,1] > x[1,1,2]
    chain = [Variable(1, 1, 1), Variable(1, 2, 1), Variable(2, 1, 1),
             Variable(1, 1, 2)]
    for a, b in zip(chain, chain[1:]):
        assert lex_greater(monomial([a]), monomial([b]))


def test_lex_greater_prefix_rule():
    v = Variable(1, 1, 1)
    w = Variable(2, 2, 1)
    assert lex_greater(monomial([v, v]), monomial([v]))
    assert lex_greater(monomial([v]), monomial([w, w]))


def test_leading_term_is_diagonal():
    p = SparsePoly.from_binomial(paper_m1())
    assert leading_term(p) == monomial((Variable(1, 1, 1), Variable(2, 2, 2)))
    single = SparsePoly({monomial([Variable(1, 2, 1)]): 3})
    assert leading_term(single) == monomial([Variable(1, 2, 1)])
    with pytest.raises(ValueError):
        leading_term(SparsePoly.zero())


def test_all_minor_leading_terms_are_diagonals():
    for m, n, r in [(2, 2, 3), (3, 2, 2), (3, 3, 2)]:
        for minor in minor_basis(m, n, r):
            a11, _, _, a22 = minor.entries
            p = SparsePoly.from_binomial(minor.binomial)
            assert leading_term(p) == monomial((a11, a22))


def test_reduce_basics():
    basis = [SparsePoly.from_binomial(mi.binomial)
             for mi in minor_basis(2, 2, 2)]
    assert not reduce(SparsePoly.zero(), basis)
    v = SparsePoly({monomial([Variable(1, 1, 1)]): 1})
    assert reduce(v, basis) == v  # a variable is never reducible by quadrics


def test_generators_reduce_to_zero():
    for m, n, r in [(2, 2, 2), (2, 2, 3)]:
        basis = [SparsePoly.from_binomial(mi.binomial)
                 for mi in minor_basis(m, n, r)]
        for rel in sorting_relations(m, n, r):
            assert not reduce(SparsePoly.from_binomial(rel), basis)


def test_reduce_is_deterministic_remainder():
    basis = [SparsePoly.from_binomial(mi.binomial)
             for mi in minor_basis(2, 2, 2)]
    # an element outside the ideal keeps a nonzero, stable remainder
    p = SparsePoly({monomial((Variable(1, 1, 1), Variable(1, 1, 2))): 1})
    r1, r2 = reduce(p, basis), reduce(p, basis)
    assert r1 == r2 == p


def test_s_polynomial_cancels_leading_terms():
    polys = [SparsePoly.from_binomial(mi.binomial)
             for mi in minor_basis(2, 2, 2)]
    f, g = polys[0], polys[1]
    s = s_polynomial(f, g)
    big = lcm_monomial(leading_term(f), leading_term(g))
    assert not s or lex_greater(big, leading_term(s))


def test_in_kernel_poly():
    for minor in minor_basis(2, 2, 3):
        assert in_kernel_poly(SparsePoly.from_binomial(minor.binomial),
                              2, 2, 3)
    not_member = SparsePoly({monomial([Variable(1, 1, 1)]): 1})
    assert not in_kernel_poly(not_member, 2, 2, 2)


def test_verify_groebner_positive():
    for m, n, r in GB_SIZES:
        minors = [mi.binomial for mi in minor_basis(m, n, r)]
        assert verify_groebner(minors, m, n, r), (m, n, r)


def test_verify_groebner_negative_control():
    single = [Binomial.make((Variable(1, 1, 1), Variable(2, 2, 1)),
                            (Variable(1, 2, 1), Variable(2, 1, 1)))]
    assert verify_groebner(single, 2, 2, 2) is False


def test_verify_groebner_rejects_non_members():
    # a binomial outside the kernel cannot be part of a basis of the ideal
    outside = [Binomial.make((Variable(1, 1, 1), Variable(1, 2, 1)),
                             (Variable(2, 1, 1), Variable(2, 2, 1)))]
    assert verify_groebner(outside, 2, 2, 2) is False


def test_verify_groebner_budget():
    minors = [mi.binomial for mi in minor_basis(2, 2, 3)]
    with pytest.raises(BudgetExceededError):
        verify_groebner(minors, 2, 2, 3, budget=10)


def test_initial_ideal_matches_conflict_pairs():
    for m, n, r in GB_SIZES:
        minors = [mi.binomial for mi in minor_basis(m, n, r)]
        lts = initial_ideal_minimal_generators(minors)
        as_pairs = {frozenset(vertex_for_variable(v, n) for v in mono)
                    for mono in lts}
        assert as_pairs == set(initial_generators(m, n, r)), (m, n, r)


def test_initial_ideal_generators_are_squarefree_quadrics():
    minors = [mi.binomial for mi in minor_basis(2, 3, 2)]
    for mono in initial_ideal_minimal_generators(minors):
        assert len(mono) == 2 and mono[0] != mono[1]
