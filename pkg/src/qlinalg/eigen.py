"""Eigenvalues, eigenspaces, and diagonalization — all over the rationals.

The characteristic polynomial det(A - x I) is computed exactly by cofactor
expansion over polynomial entries, then factored by the rational-root
theorem.  Irrational or complex eigenvalues cannot be represented here; in
that case the honest answer is a :class:`NotSplit` verdict carrying whatever
rational roots were found and the unfactored remainder.

Eigenvalues are always reported in decreasing order, and the diagonal factor
of a diagonalization lists them that way.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .elimination import inverse_gauss_jordan
from .errors import NegativePowerOfSingular, NotInvertible, NotSquare
from .matrix import Matrix
from .poly import Polynomial, rational_roots
from .scalars import Q, as_scalar
from .spaces import Subspace, fundamental_subspaces


def _poly_det(grid) -> Polynomial:
    if len(grid) == 1:
        return grid[0][0]
    total = Polynomial()
    for j, p in enumerate(grid[0]):
        if p.is_zero:
            continue
        minor = tuple(r[:j] + r[j + 1:] for r in grid[1:])
        term = p * _poly_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def char_poly(a: Matrix) -> Polynomial:
    """det(A - x I), ascending coefficients; leading coefficient (-1)^n."""
    if not a.is_square:
        raise NotSquare("characteristic polynomials need a square matrix")
    grid = tuple(
        tuple(
            Polynomial([a[i, j], -1]) if i == j else Polynomial([a[i, j]])
            for j in range(a.cols)
        )
        for i in range(a.rows)
    )
    return _poly_det(grid)


@dataclass(frozen=True)
class Split:
    """Every eigenvalue is rational: (eigenvalue, algebraic multiplicity) pairs,
    eigenvalues decreasing."""

    roots: tuple[tuple[Fraction, int], ...]

    def __bool__(self) -> bool:
        return True

    @property
    def eigenvalues(self) -> tuple[Fraction, ...]:
        return tuple(lam for lam, _ in self.roots)

    def multiplicity(self, lam) -> int:
        lam = as_scalar(lam)
        for other, m in self.roots:
            if other == lam:
                return m
        return 0


@dataclass(frozen=True)
class NotSplit:
    """The characteristic polynomial has an irreducible-over-Q part left."""

    found: tuple[tuple[Fraction, int], ...]
    residual: Polynomial

    def __bool__(self) -> bool:
        return False


EigenvalueVerdict = Union[Split, NotSplit]


def eigenvalues(a: Matrix) -> EigenvalueVerdict:
    """Rational roots of the characteristic polynomial, with multiplicity."""
    p = char_poly(a)
    roots, residual = rational_roots(p)
    ordered = tuple(sorted(roots, key=lambda rm: rm[0], reverse=True))
    if residual.degree <= 0:
        return Split(roots=ordered)
    return NotSplit(found=ordered, residual=residual)


def eigenspace(a: Matrix, lam) -> Subspace:
    """Null space of A - lam I (zero-dimensional when lam is no eigenvalue)."""
    if not a.is_square:
        raise NotSquare("eigenspaces need a square matrix")
    lam = as_scalar(lam)
    shifted = a - lam * Matrix.identity(a.rows)
    return fundamental_subspaces(shifted).null


def deficient_eigenvalue(profile) -> Fraction | None:
    """First eigenvalue whose geometric multiplicity falls short.

    ``profile`` is an ordered sequence of (eigenvalue, algebraic, geometric)
    triples; the answer is None when every geometric multiplicity matches its
    algebraic one — exactly the diagonalizable case (for a split polynomial).
    """
    for lam, alg, geom in profile:
        if geom < alg:
            return as_scalar(lam)
    return None


@dataclass(frozen=True)
class Diagonalizable:
    """A = L D L^{-1}; D's diagonal is decreasing, L's columns are the
    matching eigenspace bases."""

    L: Matrix
    D: Matrix

    def __bool__(self) -> bool:
        return True

    def reconstruct(self) -> Matrix:
        return self.L @ self.D @ inverse_gauss_jordan(self.L)


@dataclass(frozen=True)
class NotDiagonalizable:
    """Some eigenspace is too small."""

    eigenvalue: Fraction
    algebraic: int
    geometric: int

    def __bool__(self) -> bool:
        return False


DiagonalizeVerdict = Union[Diagonalizable, NotDiagonalizable, NotSplit]


def diagonalize(a: Matrix) -> DiagonalizeVerdict:
    """Factor A as L D L^{-1} when a basis of eigenvectors exists.

    Walking eigenvalues in decreasing order, the first one whose eigenspace
    dimension misses its algebraic multiplicity decides NotDiagonalizable.
    """
    verdict = eigenvalues(a)
    if isinstance(verdict, NotSplit):
        return verdict
    columns: list[tuple[Fraction, ...]] = []
    diag: list[Fraction] = []
    for lam, alg in verdict.roots:
        space = eigenspace(a, lam)
        if space.dimension < alg:
            return NotDiagonalizable(
                eigenvalue=lam, algebraic=alg, geometric=space.dimension
            )
        columns.extend(space.basis)
        diag.extend([lam] * alg)
    scale = Matrix(
        [[diag[i] if i == j else Q(0) for j in range(len(diag))]
         for i in range(len(diag))]
    )
    return Diagonalizable(L=Matrix.from_columns(columns), D=scale)


def matrix_power(a: Matrix, k: int) -> Matrix:
    """A^k exactly, for any integer k (negative needs A invertible).

    Diagonalizable matrices go through L D^k L^{-1}; everything else falls
    back to repeated squaring.
    """
    if not a.is_square:
        raise NotSquare("powers need a square matrix")
    if k < 0:
        try:
            inv = inverse_gauss_jordan(a)
        except NotInvertible:
            raise NegativePowerOfSingular(
                f"A^{k} asks for an inverse, but det(A) = 0"
            ) from None
        return matrix_power(inv, -k)
    if k == 0:
        return Matrix.identity(a.rows)
    verdict = diagonalize(a)
    if isinstance(verdict, Diagonalizable):
        n = verdict.D.rows
        dk = Matrix(
            [
                [verdict.D[i, i] ** k if i == j else Q(0) for j in range(n)]
                for i in range(n)
            ]
        )
        return verdict.L @ dk @ inverse_gauss_jordan(verdict.L)
    return a ** k


@dataclass(frozen=True)
class EigenSummary:
    """Everything the eigen analysis found, in one bundle."""

    char: Polynomial
    split: bool
    roots: tuple[tuple[Fraction, int], ...]
    residual: Polynomial | None
    spaces: tuple[tuple[Fraction, Subspace], ...]
    diagonalizable: bool | None
    deficient: tuple[Fraction, int, int] | None

    def eigenspace_of(self, lam) -> Subspace | None:
        lam = as_scalar(lam)
        for other, space in self.spaces:
            if other == lam:
                return space
        return None


def eigen_summary(a: Matrix) -> EigenSummary:
    """Characteristic polynomial, eigenvalues, eigenspaces, and the
    diagonalizability verdict, all at once."""
    p = char_poly(a)
    verdict = eigenvalues(a)
    roots = verdict.roots if isinstance(verdict, Split) else verdict.found
    spaces = tuple((lam, eigenspace(a, lam)) for lam, _ in roots)
    if isinstance(verdict, NotSplit):
        return EigenSummary(
            char=p,
            split=False,
            roots=roots,
            residual=verdict.residual,
            spaces=spaces,
            diagonalizable=None,
            deficient=None,
        )
    profile = [
        (lam, alg, space.dimension)
        for (lam, alg), (_, space) in zip(roots, spaces)
    ]
    bad = deficient_eigenvalue(profile)
    deficient = None
    if bad is not None:
        for lam, alg, geom in profile:
            if lam == bad:
                deficient = (lam, alg, geom)
                break
    return EigenSummary(
        char=p,
        split=True,
        roots=roots,
        residual=None,
        spaces=spaces,
        diagonalizable=bad is None,
        deficient=deficient,
    )
