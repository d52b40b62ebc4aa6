"""Univariate polynomials in t with exact integer coefficients.

Used for h-polynomials, h-vectors and truncated Hilbert-series arithmetic.
Coefficients are Python ints, so everything is arbitrary precision.
"""

from __future__ import annotations

from math import comb


class IntPolynomial:
    """Immutable integer polynomial; ``coeffs[d]`` is the coefficient of t^d."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = list(coeffs)
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @property
    def degree(self):
        """Degree of the polynomial; the zero polynomial has degree -1."""
        return len(self.coeffs) - 1

    def __getitem__(self, d):
        if 0 <= d < len(self.coeffs):
            return self.coeffs[d]
        return 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, IntPolynomial):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __add__(self, other):
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPolynomial(
            [x + y for x, y in zip(a, b)] + list(a[len(b):]))

    def __neg__(self):
        return IntPolynomial([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return IntPolynomial([other * c for c in self.coeffs])
        if not self.coeffs or not other.coeffs:
            return IntPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    __rmul__ = __mul__

    def mul_truncated(self, other, max_degree):
        """Product of self and other, keeping only degrees <= max_degree."""
        out = [0] * (max_degree + 1)
        for i, a in enumerate(self.coeffs):
            if a == 0 or i > max_degree:
                continue
            for j, b in enumerate(other.coeffs):
                if i + j > max_degree:
                    break
                out[i + j] += a * b
        return out  # raw list: callers may care about trailing zeros

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def is_palindromic(self):
        """True iff the coefficient sequence reads the same reversed."""
        return self.coeffs == self.coeffs[::-1]

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for d, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if d == 0:
                parts.append(str(c))
            elif d == 1:
                parts.append(f"{c}*t" if c != 1 else "t")
            else:
                parts.append(f"{c}*t^{d}" if c != 1 else f"t^{d}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"IntPolynomial({list(self.coeffs)})"


def one_minus_t_power(e):
    """(1 - t)^e as an IntPolynomial."""
    if e < 0:
        raise ValueError("exponent must be nonnegative")
    return IntPolynomial([(-1) ** i * comb(e, i) for i in range(e + 1)])
