"""The simplicial complex of the diagonal initial ideal.

Variables are drawn on an m x (nr) board: x[i,j,k] sits at (i, (k-1)n + j).
The initial ideal is quadratic and squarefree, so the complex is the
independence complex of a conflict graph on board positions: (i,c) and
(i',c') conflict when the two variables form the diagonal of a minor.

Every facet is a union of r monotone paths, one per matrix, with steps
up (-1,0) and right (0,1); writing the steps as letters M (up) and
N (right) and separating consecutive paths by R encodes each facet as a
word with exactly m-1 M's, n-1 N's and r-1 R's, and this is a bijection.
The word is therefore used as the identity of a facet.
"""

from __future__ import annotations

import re
from math import comb
from typing import NamedTuple

from .errors import BudgetExceededError, SizeGuardError
from .intpoly import IntPolynomial
from .multiset import DEFAULT_BUDGET, multinomial, multiset_permutations
from .ring import Variable


class Vertex(NamedTuple):
    row: int
    col: int

    def block(self, n):
        """Index k of the matrix whose columns contain this vertex."""
        return (self.col - 1) // n + 1

    def block_col(self, n):
        """Column inside that matrix."""
        return (self.col - 1) % n + 1

    def __str__(self):
        return f"({self.row},{self.col})"


def vertex_for_variable(v: Variable, n):
    return Vertex(v.i, (v.k - 1) * n + v.j)


def _validate_sizes(m, n, r):
    if m < 1 or n < 1 or r < 1:
        raise ValueError("sizes must be positive")


def _check_vertex(v, m, n, r):
    if not (1 <= v.row <= m and 1 <= v.col <= n * r):
        raise ValueError(f"vertex {v} outside the {m} x {n * r} board")


def conflicts(v1, v2, m, n, r):
    """True iff the two board positions carry a forbidden (diagonal) pair:
    inside one matrix, both coordinates strictly increase together; across
    matrices, rows increase with the matrix index, or columns do."""
    if v1 == v2:
        return False
    k1, j1 = v1.block(n), v1.block_col(n)
    k2, j2 = v2.block(n), v2.block_col(n)
    i1, i2 = v1.row, v2.row
    if k1 > k2:
        (i1, j1, k1), (i2, j2, k2) = (i2, j2, k2), (i1, j1, k1)
    if k1 == k2:
        return (i2 - i1) * (j2 - j1) > 0
    return i1 < i2 or j1 < j2


def initial_generators(m, n, r):
    """All conflicting vertex pairs: the degree-2 squarefree generators of
    the initial ideal, as a set of 2-element frozensets."""
    _validate_sizes(m, n, r)
    verts = board(m, n, r)
    return frozenset(
        frozenset((verts[a], verts[b]))
        for a in range(len(verts))
        for b in range(a + 1, len(verts))
        if conflicts(verts[a], verts[b], m, n, r))


def initial_generator_count(m, n, r):
    """Closed form for len(initial_generators): inclusion-exclusion over
    the three conflict conditions."""
    _validate_sizes(m, n, r)
    return (r * comb(m, 2) * comb(n, 2)
            + comb(r, 2) * comb(m, 2) * n * n
            + comb(r, 2) * comb(n, 2) * m * m
            - comb(r, 2) * comb(m, 2) * comb(n, 2))


def board(m, n, r):
    """All board positions, row-major."""
    _validate_sizes(m, n, r)
    return [Vertex(i, c)
            for i in range(1, m + 1) for c in range(1, n * r + 1)]


def is_face(vertices, m, n, r):
    """True iff no pair of the given vertices conflicts."""
    _validate_sizes(m, n, r)
    verts = [Vertex(*v) for v in vertices]
    for v in verts:
        _check_vertex(v, m, n, r)
    return not any(conflicts(verts[a], verts[b], m, n, r)
                   for a in range(len(verts))
                   for b in range(a + 1, len(verts)))


class Facet:
    """One facet, decoded from its step word on {M, N, R}.

    Attributes: ``g`` and ``h`` are the row/column profiles (length r+1,
    weakly decreasing, from m resp. n down to 1); ``paths`` holds the r
    vertex tuples; ``vertices`` is their union, always of size m+n+r-2.
    """

    __slots__ = ("m", "n", "r", "word", "g", "h", "paths", "vertices")

    def __init__(self, m, n, r, word):
        _validate_sizes(m, n, r)
        if set(word) - set("MNR"):
            raise ValueError(f"word {word!r} uses letters outside M, N, R")
        if (word.count("M"), word.count("N"), word.count("R")) != (
                m - 1, n - 1, r - 1):
            raise ValueError(
                f"word {word!r} needs {m - 1} M's, {n - 1} N's, {r - 1} R's")
        self.m, self.n, self.r, self.word = m, n, r, word
        subwords = word.split("R")
        suffix = ""
        g = [1]
        h = [1]
        for sub in reversed(subwords[1:]):  # letters after the k-th R
            suffix = sub + suffix
            g.append(1 + suffix.count("M"))
            h.append(1 + suffix.count("N"))
        g.append(m)
        h.append(n)
        self.g = tuple(reversed(g))
        self.h = tuple(reversed(h))
        paths = []
        for k, sub in enumerate(subwords, start=1):
            row, col = self.g[k - 1], (k - 1) * n + self.h[k]
            path = [Vertex(row, col)]
            for step in sub:
                row, col = (row - 1, col) if step == "M" else (row, col + 1)
                path.append(Vertex(row, col))
            assert path[-1] == Vertex(self.g[k], (k - 1) * n + self.h[k - 1])
            paths.append(tuple(path))
        self.paths = tuple(paths)
        self.vertices = frozenset(v for path in paths for v in path)
        assert len(self.vertices) == m + n + r - 2

    def __eq__(self, other):
        if isinstance(other, Facet):
            return (self.m, self.n, self.r, self.word) == (
                other.m, other.n, other.r, other.word)
        return NotImplemented

    def __hash__(self):
        return hash((self.m, self.n, self.r, self.word))

    def __repr__(self):
        return f"Facet({self.m},{self.n},{self.r},{self.word!r})"

    def path_endpoints(self):
        return tuple((p[0], p[-1]) for p in self.paths)


def word_to_facet(word, m, n, r):
    return Facet(m, n, r, word)


def facet_to_word(facet):
    return facet.word


def facets(m, n, r, budget=DEFAULT_BUDGET):
    """Yield every facet once, in lexicographic word order (M < N < R)."""
    _validate_sizes(m, n, r)
    if budget is not None and multinomial((m - 1, n - 1, r - 1)) > budget:
        raise BudgetExceededError(
            f"{multinomial((m - 1, n - 1, r - 1))} facets exceed budget {budget}")
    letters = "M" * (m - 1) + "N" * (n - 1) + "R" * (r - 1)
    for word in multiset_permutations(letters):
        yield Facet(m, n, r, "".join(word))


def facet_from_vertices(vertices, m, n, r):
    """Reconstruct a facet from its vertex set; rejects sets that are not
    facets (wrong block structure, broken paths, stray vertices)."""
    _validate_sizes(m, n, r)
    verts = {Vertex(*v) for v in vertices}
    for v in verts:
        _check_vertex(v, m, n, r)
    blocks = [[] for _ in range(r)]
    for v in verts:
        blocks[v.block(n) - 1].append(v)
    words = []
    for k in range(1, r + 1):
        block = blocks[k - 1]
        if not block:
            raise ValueError(f"no vertices in matrix {k}: not a facet")
        block.sort(key=lambda v: v.col - v.row)
        steps = []
        for a, b in zip(block, block[1:]):
            delta = (b.row - a.row, b.col - a.col)
            if delta == (-1, 0):
                steps.append("M")
            elif delta == (0, 1):
                steps.append("N")
            else:
                raise ValueError(
                    f"vertices {a} and {b} are not one step apart: not a facet")
        words.append("".join(steps))
    facet = Facet(m, n, r, "R".join(words))
    if facet.vertices != verts:
        raise ValueError("vertex set does not match its path decomposition")
    return facet


def extend_to_facet(face_vertices, m, n, r):
    """Grow a face into a facet containing it.

    Vertices are grouped by matrix; empty matrices receive one filler point
    (the (m, n) corner before the first occupied matrix, the (1, 1) corner
    after the last, and between occupied matrices c < d the point taking
    its row from d's first vertex and its column from c's first vertex).
    Inside each matrix, consecutive anchor points are then bridged moving
    up first, then right.  Applied to a facet this reproduces it.
    """
    _validate_sizes(m, n, r)
    verts = {Vertex(*v) for v in face_vertices}
    for v in verts:
        _check_vertex(v, m, n, r)
    if not is_face(verts, m, n, r):
        raise ValueError("input is not a face of the complex")
    # per-matrix points in path order, as (row, in-block column)
    blocks = [[] for _ in range(r + 1)]  # 1-based
    for v in verts:
        blocks[v.block(n)].append((v.row, v.block_col(n)))
    for block in blocks:
        block.sort(key=lambda p: (p[1], -p[0]))
    occupied = [k for k in range(1, r + 1) if blocks[k]]
    if not occupied:
        for k in range(1, r + 1):
            blocks[k] = [(m, n)]
    else:
        first, last = occupied[0], occupied[-1]
        for k in range(1, r + 1):
            if blocks[k]:
                continue
            if k < first:
                blocks[k] = [(m, n)]
            elif k > last:
                blocks[k] = [(1, 1)]
            else:
                c = max(q for q in occupied if q < k)
                d = min(q for q in occupied if q > k)
                blocks[k] = [(blocks[d][0][0], blocks[c][0][1])]
    g = [m] + [blocks[k + 1][0][0] for k in range(1, r)] + [1]
    h = [n] + [blocks[k][0][1] for k in range(1, r)] + [1]
    words = []
    for k in range(1, r + 1):
        anchors = [(g[k - 1], h[k])] + blocks[k] + [(g[k], h[k - 1])]
        steps = []
        for (r1, c1), (r2, c2) in zip(anchors, anchors[1:]):
            if r1 < r2 or c1 > c2:
                raise ValueError(
                    f"face cannot be threaded through ({r1},{c1})->({r2},{c2})")
            steps.append("M" * (r1 - r2) + "N" * (c2 - c1))
        words.append("".join(steps))
    facet = Facet(m, n, r, "R".join(words))
    assert verts <= facet.vertices
    return facet


def maximal_faces_bruteforce(m, n, r, max_vertices=27):
    """Oracle: facets as maximal independent sets of the conflict graph,
    enumerated Bron-Kerbosch style with pivoting on bitmasks."""
    _validate_sizes(m, n, r)
    verts = board(m, n, r)
    count = len(verts)
    if count > max_vertices:
        raise SizeGuardError(f"{count} vertices exceed guard {max_vertices}")
    # non-neighbors in the conflict graph = admissible companions
    compat = [0] * count
    for a in range(count):
        for b in range(count):
            if a != b and not conflicts(verts[a], verts[b], m, n, r):
                compat[a] |= 1 << b
    out = set()

    def expand(chosen, candidates, excluded):
        if not candidates and not excluded:
            out.add(frozenset(verts[a]
                              for a in range(count) if chosen >> a & 1))
            return
        pool = candidates | excluded
        pivot = max(range(count), key=lambda a: ((pool >> a) & 1,
                                                 (candidates & compat[a]).bit_count()))
        rest = candidates & ~compat[pivot]
        while rest:
            a = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            expand(chosen | 1 << a, candidates & compat[a],
                   excluded & compat[a])
            candidates &= ~(1 << a)
            excluded |= 1 << a

    expand(0, (1 << count) - 1, 0)
    return out


def all_faces(m, n, r, max_vertices=12):
    """Every face of the complex (independent sets, not only maximal)."""
    _validate_sizes(m, n, r)
    verts = board(m, n, r)
    count = len(verts)
    if count > max_vertices:
        raise SizeGuardError(f"{count} vertices exceed guard {max_vertices}")
    faces = []
    current = []

    def grow(start):
        faces.append(frozenset(current))
        for a in range(start, count):
            if all(not conflicts(verts[a], v, m, n, r) for v in current):
                current.append(verts[a])
                grow(a + 1)
                current.pop()

    grow(0)
    return faces


def complex_h_vector(m, n, r, max_vertices=12):
    """h-vector of the complex from its face counts; must coincide with
    the ring's h-polynomial because passing to the initial ideal preserves
    the Hilbert series."""
    _validate_sizes(m, n, r)
    top = m + n + r - 2
    f = [0] * (top + 1)  # f[s] = number of faces with s vertices
    for face in all_faces(m, n, r, max_vertices=max_vertices):
        f[len(face)] += 1
    h = [sum((-1) ** (j - s) * comb(top - s, j - s) * f[s]
             for s in range(j + 1))
         for j in range(top + 1)]
    return IntPolynomial(h)


def check_shelling_order(ordering):
    """Evaluate the shelling condition on a complete facet ordering: each
    facet must meet every earlier one inside a codimension-one intersection
    with some earlier facet.  Orderings that are not a permutation of all
    facets are rejected."""
    ordering = list(ordering)
    if not ordering:
        raise ValueError("empty ordering")
    m, n, r = ordering[0].m, ordering[0].n, ordering[0].r
    if any((f.m, f.n, f.r) != (m, n, r) for f in ordering):
        raise ValueError("facets from different complexes")
    if (len({f.word for f in ordering}) != len(ordering)
            or len(ordering) != multinomial((m - 1, n - 1, r - 1))):
        raise ValueError("ordering is not a permutation of all facets")
    sets = [f.vertices for f in ordering]
    size = m + n + r - 2
    for j in range(1, len(sets)):
        ridges = [sets[k] & sets[j] for k in range(j)
                  if len(sets[k] & sets[j]) == size - 1]
        for i in range(j):
            meet = sets[i] & sets[j]
            if not any(meet <= ridge for ridge in ridges):
                return False
    return True


_VERTEX_RE = re.compile(r"\(\s*(\d+)\s*,\s*(\d+)\s*\)")


def parse_vertices(text):
    """Parse a CLI vertex list like '(4,5),(3,7),(2,8)'."""
    found = _VERTEX_RE.findall(text)
    leftover = _VERTEX_RE.sub("", text).replace(",", "").strip()
    if not found or leftover:
        raise ValueError(f"cannot parse vertex list: {text!r}")
    return [Vertex(int(a), int(b)) for a, b in found]
