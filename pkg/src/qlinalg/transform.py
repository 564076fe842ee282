"""Linear maps between coordinate spaces, held as standard matrices.

A map is built from coordinate formulas, from enough point-image pairs, or
directly from a matrix.  Polynomial spaces ride along through the ascending
coefficient isomorphism: a polynomial of degree < n is the vector
(a_0, ..., a_{n-1}).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .elimination import inverse_gauss_jordan
from .errors import (
    DegreeTooHigh,
    DependentPoints,
    DimensionMismatch,
    EmptyInput,
    MalformedForm,
    MixedDimensions,
    NotSpanning,
)
from .matrix import Matrix, as_vector
from .poly import Polynomial
from .scalars import Q, format_scalar
from .spaces import (
    Fundamentals,
    Subspace,
    _parse_forms,
    fundamental_subspaces,
    independence,
    infer_parameter_order,
)


@dataclass(frozen=True)
class NotLinear:
    """A coordinate formula carries a nonzero constant, so zero does not map to zero."""

    coordinate: int
    constant: Fraction

    def __bool__(self) -> bool:
        return False

    def __str__(self):
        return (
            f"coordinate {self.coordinate + 1} has constant "
            f"{format_scalar(self.constant)}"
        )


@dataclass(frozen=True)
class LinearMap:
    """A linear map Q^n -> Q^m as its standard matrix (m x n).

    ``domain_kind`` / ``codomain_kind`` record how coordinates should be
    read back: "euclidean" (plain vectors) or "polynomial" (ascending
    coefficients).
    """

    matrix: Matrix
    domain_kind: str = "euclidean"
    codomain_kind: str = "euclidean"

    @property
    def domain_dim(self) -> int:
        return self.matrix.cols

    @property
    def codomain_dim(self) -> int:
        return self.matrix.rows

    def apply(self, v) -> tuple[Fraction, ...]:
        vec = as_vector(v)
        if len(vec) != self.domain_dim:
            raise DimensionMismatch(
                f"map takes vectors of length {self.domain_dim}, got {len(vec)}"
            )
        return as_vector(self.matrix @ Matrix.column_vector(vec))

    def __call__(self, v) -> tuple[Fraction, ...]:
        return self.apply(v)

    def _fundamentals(self) -> Fundamentals:
        return fundamental_subspaces(self.matrix)

    def kernel(self) -> Subspace:
        """All domain vectors sent to zero (the matrix's null space)."""
        return self._fundamentals().null

    def range(self) -> Subspace:
        """All values actually taken (the matrix's column space)."""
        return self._fundamentals().column


def from_matrix(m: Matrix) -> LinearMap:
    return LinearMap(matrix=m)


def from_forms(forms, variables=None) -> Union[LinearMap, NotLinear]:
    """Build T from coordinate formulas like ``("3a1+a2", "a2", "-a1")``.

    Variables order the columns; when not given it is inferred (numeric
    suffixes such as x1, x2 sort by number, otherwise first appearance).
    A nonzero constant anywhere is a NotLinear verdict; powers or parameter
    products raise NonLinearCoordinate already at parsing.
    """
    parsed = _parse_forms(forms)
    if variables is None:
        names = infer_parameter_order(parsed)
    else:
        names = tuple(variables)
        known = set(names)
        for idx, f in enumerate(parsed):
            for name in f.parameters:
                if name not in known:
                    raise MalformedForm(
                        f"coordinate {idx + 1} uses undeclared variable {name!r}"
                    )
    for idx, f in enumerate(parsed):
        if f.constant != 0:
            return NotLinear(coordinate=idx, constant=f.constant)
    if not names:
        raise EmptyInput("the formulas mention no variables; pass variables=")
    rows = [[f.coefficient(n) for n in names] for f in parsed]
    return LinearMap(matrix=Matrix(rows))


def standard_matrix(map_or_matrix) -> Matrix:
    if isinstance(map_or_matrix, LinearMap):
        return map_or_matrix.matrix
    return map_or_matrix


def from_basis_images(pairs) -> LinearMap:
    """The unique linear map sending each given point to its given image.

    Needs exactly n independent points of Q^n (a basis); their images may
    live in any Q^m.  The standard matrix is Y P^{-1} with the points as
    the columns of P and the images as the columns of Y.
    """
    pts, imgs = [], []
    for p, y in pairs:
        pts.append(as_vector(p))
        imgs.append(as_vector(y))
    if not pts:
        raise EmptyInput("no point-image pairs given")
    n = len(pts[0])
    if any(len(p) != n for p in pts):
        raise MixedDimensions("domain points of different lengths")
    if any(len(y) != len(imgs[0]) for y in imgs):
        raise MixedDimensions("images of different lengths")
    if len(pts) < n:
        raise NotSpanning(
            f"{len(pts)} points cannot determine a map on Q^{n}"
        )
    if len(pts) > n or not independence(pts):
        raise DependentPoints("the domain points must form a basis")
    p = Matrix.from_columns(pts)
    y = Matrix.from_columns(imgs)
    return LinearMap(matrix=y @ inverse_gauss_jordan(p))


# ---- polynomial coordinates ---------------------------------------------------


def poly_to_coords(p: Polynomial, n: int) -> tuple[Fraction, ...]:
    """Ascending coefficients of ``p`` padded to length ``n``."""
    if p.degree >= n:
        raise DegreeTooHigh(f"degree {p.degree} does not fit in {n} coordinates")
    return tuple(p.coefficient(k) for k in range(n))


def coords_to_poly(coords) -> Polynomial:
    return Polynomial(as_vector(coords))


def integral_functional(n: int) -> LinearMap:
    """The map sending a polynomial of degree < n to its integral over [0, 1].

    In coordinates it is the 1 x n row (1, 1/2, ..., 1/n).
    """
    if n < 1:
        raise EmptyInput("need at least the constant polynomials")
    row = [Q(1, k + 1) for k in range(n)]
    return LinearMap(
        matrix=Matrix([row]),
        domain_kind="polynomial",
        codomain_kind="euclidean",
    )
