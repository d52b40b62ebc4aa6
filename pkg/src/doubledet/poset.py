"""Finite posets with a natural labeling.

Elements are the integers 0..n-1; the natural label of element ``e`` is
``e + 1``, and every stored order must satisfy ``a`` < ``b`` (as ints)
whenever ``a`` precedes ``b``.  Order ideals are frozensets of elements,
linear extensions are tuples of elements (the sequence in which the
elements are listed), and all iteration orders are lexicographic in the
labels, so repeated runs produce identical output.
"""

from __future__ import annotations

from itertools import combinations


class Poset:
    """Immutable finite poset on 0..n-1 with the identity natural labeling.

    ``relations`` is any iterable of pairs (a, b) meaning a precedes-or-equals
    b; the transitive closure is taken automatically.  Pairs with a > b are
    rejected, which forces the labeling to be natural and makes cycles
    impossible.
    """

    def __init__(self, n, relations=()):
        if n < 0:
            raise ValueError("poset size must be nonnegative")
        self.n = n
        up = [set() for _ in range(n)]
        for a, b in relations:
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"element out of range: ({a}, {b})")
            if a > b:
                raise ValueError(
                    f"relation {a + 1} < {b + 1} violates the natural labeling")
            if a != b:
                up[a].add(b)
        # transitive closure; processing in reverse label order suffices
        # because all edges point from smaller to larger labels
        for a in range(n - 1, -1, -1):
            acc = set(up[a])
            for b in up[a]:
                acc |= up[b]
            up[a] = acc
        self._up = tuple(frozenset(s) for s in up)
        self._down = tuple(
            frozenset(a for a in range(n) if b in self._up[a])
            for b in range(n))

    def less(self, a, b):
        """True iff a strictly precedes b."""
        return b in self._up[a]

    def leq(self, a, b):
        return a == b or b in self._up[a]

    def comparable(self, a, b):
        return a == b or b in self._up[a] or a in self._up[b]

    def strict_upset(self, a):
        return self._up[a]

    def strict_downset(self, a):
        return self._down[a]

    def label(self, a):
        return a + 1

    def __eq__(self, other):
        if isinstance(other, Poset):
            return self.n == other.n and self._up == other._up
        return NotImplemented

    def __hash__(self):
        return hash((self.n, self._up))

    def __repr__(self):
        return f"Poset(n={self.n}, covers={self.covers()})"

    def covers(self):
        """Cover pairs (a, b): a < b with nothing strictly between."""
        out = []
        for a in range(self.n):
            for b in sorted(self._up[a]):
                if not any(b in self._up[c] for c in self._up[a]):
                    out.append((a, b))
        return out

    # ------------------------------------------------------------------
    # ideals, extensions, chain statistics

    def order_ideals(self):
        """All downward closed subsets, in lexicographic order of their
        sorted label tuples (the empty ideal first).

        Under inclusion these form a distributive lattice: the union and
        the intersection of ideals are again ideals.
        """
        out = []
        current = set()

        def extend(start):
            out.append(frozenset(current))
            for e in range(start, self.n):
                if self._down[e] <= current:
                    current.add(e)
                    extend(e + 1)
                    current.discard(e)

        extend(0)
        return out

    def linear_extensions(self):
        """Yield every linear extension once, lexicographically.

        An extension is a tuple listing all elements so that no element
        appears before one of its predecessors.
        """
        placed = [False] * self.n
        seq = []

        def backtrack():
            if len(seq) == self.n:
                yield tuple(seq)
                return
            for e in range(self.n):
                if placed[e]:
                    continue
                if all(placed[p] for p in self._down[e]):
                    placed[e] = True
                    seq.append(e)
                    yield from backtrack()
                    seq.pop()
                    placed[e] = False

        yield from backtrack()

    def width(self):
        """Largest antichain, via Dilworth: n minus a maximum matching of
        the strict order viewed as a bipartite graph."""
        match = [-1] * self.n  # match[b] = a chained below b

        def augment(a, seen):
            for b in self._up[a]:
                if b in seen:
                    continue
                seen.add(b)
                if match[b] == -1 or augment(match[b], seen):
                    match[b] = a
                    return True
            return False

        matched = sum(1 for a in range(self.n) if augment(a, set()))
        return self.n - matched

    def rank(self):
        """Length (edge count) of the longest chain; -1 for the empty poset."""
        if self.n == 0:
            return -1
        height = [0] * self.n
        for b in range(self.n):
            for a in self._down[b]:
                height[b] = max(height[b], height[a] + 1)
        return max(height)

    def is_pure(self):
        """True iff all maximal chains have the same length.

        Computed by propagating, along cover edges, the set of saturated
        chain lengths from minimal elements (kept as bitmasks); the empty
        poset counts as pure.
        """
        if self.n == 0:
            return True
        cover_down = [[] for _ in range(self.n)]
        for a, b in self.covers():
            cover_down[b].append(a)
        lengths = [0] * self.n
        for e in range(self.n):
            if cover_down[e]:
                for a in cover_down[e]:
                    lengths[e] |= lengths[a] << 1
            else:
                lengths[e] = 1
        top = 0
        for e in range(self.n):
            if not self._up[e]:  # maximal element
                top |= lengths[e]
        return top.bit_count() <= 1


def is_linear_extension(p, seq):
    """Check that seq is a permutation of p's elements respecting the order."""
    if sorted(seq) != list(range(p.n)):
        return False
    pos = {e: s for s, e in enumerate(seq)}
    return all(pos[a] < pos[b]
               for a in range(p.n) for b in p.strict_upset(a))


def descent_count(seq, p):
    """Descents of a linear extension: positions where the element placed
    there carries a larger natural label than its successor."""
    seq = tuple(seq)
    if not is_linear_extension(p, seq):
        raise ValueError("sequence is not a linear extension of the poset")
    return sum(1 for a, b in zip(seq, seq[1:]) if a > b)


def make_pmnr(m, n, r):
    """The poset of three disjoint chains with m-1, n-1 and r-1 elements.

    Labels run along the first chain, then the second, then the third,
    increasing upward inside each chain.
    """
    if m < 1 or n < 1 or r < 1:
        raise ValueError("chain parameters must be positive")
    sizes = (m - 1, n - 1, r - 1)
    relations = []
    start = 0
    for size in sizes:
        relations.extend((e, e + 1) for e in range(start, start + size - 1))
        start += size
    return Poset(sum(sizes), relations)


def pmnr_chain_ranges(m, n, r):
    """Element index ranges of the three chains of make_pmnr(m, n, r)."""
    a = m - 1
    b = a + n - 1
    c = b + r - 1
    return range(0, a), range(a, b), range(b, c)


def max_antichain_bruteforce(p, max_elements=20):
    """Oracle: largest antichain size by exhaustive subset search."""
    if p.n > max_elements:
        raise ValueError("poset too large for brute-force antichain search")
    best = 0
    for size in range(p.n, 0, -1):
        if size <= best:
            break
        for sub in combinations(range(p.n), size):
            if all(not p.comparable(a, b) for a, b in combinations(sub, 2)):
                best = size
                break
    return best


# ----------------------------------------------------------------------
# text serialization: first line "n=<count>", then one "a < b" cover
# relation per line, in natural (1-based) labels

def poset_to_text(p):
    lines = [f"n={p.n}"]
    lines.extend(f"{a + 1} < {b + 1}" for a, b in p.covers())
    return "\n".join(lines) + "\n"


def poset_from_text(text):
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n="):
        raise ValueError("poset file must start with 'n=<count>'")
    try:
        n = int(lines[0][2:])
    except ValueError:
        raise ValueError(f"bad element count: {lines[0]!r}") from None
    relations = []
    for ln in lines[1:]:
        parts = ln.split("<")
        if len(parts) != 2:
            raise ValueError(f"bad cover relation line: {ln!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"bad cover relation line: {ln!r}") from None
        if not (1 <= a <= n and 1 <= b <= n):
            raise ValueError(f"label out of range in line: {ln!r}")
        relations.append((a - 1, b - 1))
    return Poset(n, relations)
