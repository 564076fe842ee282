"""Dense univariate polynomials over exact rationals.

Coefficients are stored in ascending order of degree with trailing zeros
stripped, so ``Polynomial([-2, 1, 2, -1])`` is ``-2 + x + 2x^2 - x^3`` and the
zero polynomial has an empty coefficient tuple.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

from .scalars import as_scalar, format_scalar


class Polynomial:
    __slots__ = ("_coeffs",)

    def __init__(self, coefficients=()):
        cs = [as_scalar(c) for c in coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def constant(cls, c) -> "Polynomial":
        return cls([c])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @property
    def coefficients(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        """Degree of the polynomial; -1 for the zero polynomial."""
        return len(self._coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self._coeffs

    def coefficient(self, k: int) -> Fraction:
        """Coefficient of x^k (zero beyond the stored degree)."""
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    # ---- ring operations ---------------------------------------------------

    def __add__(self, other) -> "Polynomial":
        other = _as_poly(other)
        n = max(len(self._coeffs), len(other._coeffs))
        return Polynomial(
            [self.coefficient(k) + other.coefficient(k) for k in range(n)]
        )

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self._coeffs])

    def __sub__(self, other) -> "Polynomial":
        return self + (-_as_poly(other))

    def __rsub__(self, other) -> "Polynomial":
        return _as_poly(other) - self

    def __mul__(self, other) -> "Polynomial":
        other = _as_poly(other)
        if self.is_zero or other.is_zero:
            return Polynomial()
        out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
        for i, a in enumerate(self._coeffs):
            for j, b in enumerate(other._coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative polynomial power")
        result = Polynomial([1])
        for _ in range(k):
            result = result * self
        return result

    def __call__(self, x) -> Fraction:
        """Evaluate by Horner's scheme."""
        x = as_scalar(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == Polynomial([other])
        return NotImplemented

    def __hash__(self):
        return hash(("Polynomial", self._coeffs))

    def __repr__(self):
        return f"Polynomial({[str(c) for c in self._coeffs]})"

    def __str__(self):
        return self.render()

    # ---- division ------------------------------------------------------------

    def __divmod__(self, other) -> tuple["Polynomial", "Polynomial"]:
        other = _as_poly(other)
        if other.is_zero:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(other._coeffs) + 1, 0)
        lead = other._coeffs[-1]
        for top in range(len(rem) - 1, len(other._coeffs) - 2, -1):
            factor = rem[top] / lead
            shift = top - (len(other._coeffs) - 1)
            quot[shift] = factor
            for j, b in enumerate(other._coeffs):
                rem[shift + j] -= factor * b
        return Polynomial(quot), Polynomial(rem)

    def __floordiv__(self, other) -> "Polynomial":
        return divmod(self, other)[0]

    def __mod__(self, other) -> "Polynomial":
        return divmod(self, other)[1]

    def deflate(self, root) -> "Polynomial":
        """Divide out one factor of (x - root); the root must actually be one."""
        root = as_scalar(root)
        quot, rem = divmod(self, Polynomial([-root, 1]))
        if not rem.is_zero:
            raise ValueError(f"{format_scalar(root)} is not a root")
        return quot

    # ---- integer form and rational roots --------------------------------------

    def primitive_integer_coefficients(self) -> tuple[int, ...]:
        """Scale to coprime integers (sign of the leading coefficient kept)."""
        if self.is_zero:
            return ()
        common_den = 1
        for c in self._coeffs:
            common_den = common_den * c.denominator // gcd(common_den, c.denominator)
        ints = [int(c * common_den) for c in self._coeffs]
        g = 0
        for v in ints:
            g = gcd(g, abs(v))
        return tuple(v // g for v in ints)

    def render(self, var: str = "x") -> str:
        """Ascending human form: ``-2 + x + 2x^2 - x^3``."""
        if self.is_zero:
            return "0"
        parts = []
        for k, c in enumerate(self._coeffs):
            if c == 0:
                continue
            mag = _term(abs(c), k, var)
            if not parts:
                parts.append(mag if c > 0 else f"-{mag}")
            else:
                parts.append(f"+ {mag}" if c > 0 else f"- {mag}")
        return " ".join(parts)


def _term(mag: Fraction, k: int, var: str) -> str:
    if k == 0:
        return format_scalar(mag)
    power = var if k == 1 else f"{var}^{k}"
    if mag == 1:
        return power
    if mag.denominator == 1:
        return f"{mag}{power}"
    return f"({mag}){power}"


def _as_poly(obj) -> Polynomial:
    if isinstance(obj, Polynomial):
        return obj
    return Polynomial([as_scalar(obj)])


def poly_eval(p: Polynomial, x) -> Fraction:
    """Function form of ``p(x)``."""
    return p(x)


def _divisors(n: int) -> list[int]:
    n = abs(n)
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def rational_roots(p: Polynomial) -> tuple[tuple[tuple[Fraction, int], ...], Polynomial]:
    """All rational roots of ``p`` with multiplicity, plus the unfactored rest.

    Returns ``(roots, residual)`` where ``roots`` is a tuple of
    ``(root, multiplicity)`` pairs in the order found and ``residual`` is what
    is left after dividing every rational root out.  ``residual`` has degree 0
    exactly when ``p`` splits over the rationals.
    """
    if p.is_zero:
        raise ValueError("the zero polynomial has every number as a root")
    roots: list[tuple[Fraction, int]] = []
    q = p

    mult = 0
    while q.degree > 0 and q.coefficient(0) == 0:
        q = q.deflate(0)
        mult += 1
    if mult:
        roots.append((Fraction(0), mult))

    while q.degree > 0:
        ints = q.primitive_integer_coefficients()
        found = None
        for num in _divisors(ints[0]):
            for den in _divisors(ints[-1]):
                for cand in (Fraction(num, den), Fraction(-num, den)):
                    if q(cand) == 0:
                        found = cand
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            break
        mult = 0
        while q.degree > 0 and q(found) == 0:
            q = q.deflate(found)
            mult += 1
        roots.append((found, mult))

    return tuple(roots), q
