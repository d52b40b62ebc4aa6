"""Combinatorics of rings cut out by the 2x2 minors of r concatenated
generic m x n matrices: minimal generators, Hilbert data, h-polynomials,
the Gorenstein criterion, and the facet structure of the diagonal initial
complex, each backed by an independent brute-force cross-check.
"""

from .errors import BudgetExceededError, SizeGuardError
from .generators import (FAMILY_KEYS, Minor, decompose_into_minors,
                         family_sizes, generator_families, minor_basis,
                         minor_dependency_witness, minors_H, minors_V,
                         sorting_relations)
from .grid import (GridPoint, comparable, count_comparable_pairs,
                   count_incomparable_pairs, grid_points, join,
                   lattice_isomorphic_to_ideals, meet)
from .groebner import (SparsePoly, initial_ideal_minimal_generators,
                       leading_term, reduce, s_polynomial, verify_groebner)
from .intpoly import IntPolynomial
from .invariants import (InvariantReport, check_symmetry, compute_invariants,
                         h_poly_via_linear_extensions, h_poly_via_series,
                         h_poly_via_words, hilbert_function, is_gorenstein,
                         macmahon_check, minimal_generator_count,
                         multiplicity, order_preserving_map_count,
                         poset_descent_polynomial)
from .multiset import (DEFAULT_BUDGET, descent_polynomial, descents,
                       multinomial, multiset_permutations)
from .poset import (Poset, descent_count, is_linear_extension, make_pmnr,
                    pmnr_chain_ranges, poset_from_text, poset_to_text)
from .ring import Binomial, Variable, parse_binomial
from .simplicial import (Facet, Vertex, check_shelling_order,
                         complex_h_vector, extend_to_facet,
                         facet_from_vertices, facet_to_word, facets,
                         initial_generators, is_face,
                         maximal_faces_bruteforce, parse_vertices,
                         vertex_for_variable, word_to_facet)
from .sorting import (BlockAlphabet, BlockMonomial, a_mnr, in_kernel,
                      is_sorted, phi, phi_monomial, sort_pair)

__version__ = "0.1.0"
