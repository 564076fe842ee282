"""Subspaces of Q^n: independence, bases, spans, and the fundamental trio.

The canonical basis of a span is what survives stacking the generators as
rows and semi-reducing: the nonzero rows.  Dependence is witnessed by the
reduction step that first zeroed a row.

Subspaces given by coordinate formulas ("(a, -2a+b, -a)") are handled by the
switch trick: set one parameter to 1 and the rest to 0, once per parameter,
and span the resulting points.  A nonzero constant in any coordinate means
the zero vector is missing and the set is no subspace at all.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

from .elimination import (
    Inconsistent,
    RowOp,
    Unique,
    apply_row_op,
    leaders,
    reduce,
    solve,
)
from .errors import (
    DimensionMismatch,
    EmptyInput,
    InputDependent,
    MalformedForm,
    MixedDimensions,
    NonLinearCoordinate,
)
from .matrix import Matrix, as_vector
from .scalars import Q, as_scalar, format_scalar, parse_scalar

Vector = tuple[Fraction, ...]


def _family(vectors) -> tuple[Vector, ...]:
    vecs = tuple(as_vector(v) for v in vectors)
    if not vecs:
        raise EmptyInput("at least one vector is required")
    if len({len(v) for v in vecs}) > 1:
        raise MixedDimensions("vectors of different lengths")
    return vecs


# ---- independence -----------------------------------------------------------


@dataclass(frozen=True)
class Independent:
    def __bool__(self) -> bool:
        return True


@dataclass(frozen=True)
class Dependent:
    """A row of the stacked generators vanished.

    ``row`` is its position at that moment; ``op`` is the reduction step that
    zeroed it, or None when a zero vector was already in the input.
    """

    row: int
    op: RowOp | None

    def __bool__(self) -> bool:
        return False


IndependenceVerdict = Union[Independent, Dependent]


def _zero_rows(m: Matrix) -> set[int]:
    return {i for i, row in enumerate(m.entries) if all(x == 0 for x in row)}


def independence(vectors) -> IndependenceVerdict:
    """Exact test: stack as rows, semi-reduce, look for vanished rows."""
    stacked = Matrix(_family(vectors))
    reduced, trace = reduce(stacked, "semi_reduced")
    if not _zero_rows(reduced):
        return Independent()
    cur = stacked
    seen = _zero_rows(cur)
    if seen:
        return Dependent(row=min(seen), op=None)
    for op, _ in trace.steps:
        cur = apply_row_op(cur, op)
        now = _zero_rows(cur)
        if len(now) > len(seen):
            return Dependent(row=min(now - seen), op=op)
        seen = now
    raise AssertionError("reduction lost a zero row it once created")


# ---- subspaces ---------------------------------------------------------------


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient, carried by an independent (possibly empty) basis."""

    ambient: int
    basis: tuple[Vector, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "basis", tuple(as_vector(v) for v in self.basis)
        )
        if self.ambient < 1:
            raise EmptyInput("ambient dimension must be at least 1")
        if any(len(v) != self.ambient for v in self.basis):
            raise MixedDimensions(
                f"basis vectors must have length {self.ambient}"
            )
        if self.basis and not independence(self.basis):
            raise InputDependent("a basis must be independent")

    @classmethod
    def zero(cls, ambient: int) -> "Subspace":
        return cls(ambient, ())

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    def coordinates_of(self, q) -> tuple[Fraction, ...] | None:
        return span_contains(self, q)

    def __contains__(self, q) -> bool:
        return span_contains(self, q) is not None

    def same_space(self, other: "Subspace") -> bool:
        """Span equality: mutual membership of the two bases."""
        if self.ambient != other.ambient:
            return False
        return all(v in self for v in other.basis) and all(
            v in other for v in self.basis
        )


def basis_of_span(vectors) -> Subspace:
    """Canonical basis of the span: nonzero rows after semi-reduction."""
    vecs = _family(vectors)
    reduced, _ = reduce(Matrix(vecs), "semi_reduced")
    rows = tuple(reduced.row(i) for i, _ in leaders(reduced))
    return Subspace(len(vecs[0]), rows)


def span_contains(space: Subspace, q) -> tuple[Fraction, ...] | None:
    """Coefficients of ``q`` against the basis, or None when outside.

    An empty tuple answers yes for the zero vector in the zero subspace.
    """
    qv = as_vector(q)
    if len(qv) != space.ambient:
        raise DimensionMismatch(
            f"vector of length {len(qv)} against ambient {space.ambient}"
        )
    if space.is_zero:
        return () if all(x == 0 for x in qv) else None
    system = Matrix.from_columns(space.basis)
    sol = solve(system, qv)
    if isinstance(sol, Unique):
        return sol.values
    if isinstance(sol, Inconsistent):
        return None
    raise AssertionError("independent columns cannot give infinitely many answers")


def extend_to_basis(vectors, n: int | None = None) -> Subspace:
    """Grow an independent set to a basis of Q^n by appending standard vectors.

    Candidates e1, e2, ... are tried in order; each that keeps the set
    independent is kept.  The input vectors stay in front, untouched.
    """
    vecs = _family(vectors)
    ambient = len(vecs[0])
    if n is not None and n != ambient:
        raise DimensionMismatch(f"vectors live in Q^{ambient}, not Q^{n}")
    if not independence(vecs):
        raise InputDependent("can only extend an independent set")
    current = list(vecs)
    for j in range(ambient):
        if len(current) == ambient:
            break
        candidate = tuple(Q(1) if t == j else Q(0) for t in range(ambient))
        if independence(current + [candidate]):
            current.append(candidate)
    return Subspace(ambient, tuple(current))


# ---- coordinate formulas ---------------------------------------------------------

_COEF = r"\d+(?:\.\d+)?(?:/\d+)?"
_NAME = r"[A-Za-z_]\w*"
_TERM = re.compile(rf"(?:(?P<coef>{_COEF})\*?)?(?P<name>{_NAME})?\Z")
_TOKEN = re.compile(r"[+-]?[^+-]+")
_NONLINEAR = re.compile(rf"\^|\*\*|{_NAME}\s*\*\s*{_NAME}")


@dataclass(frozen=True)
class LinearForm:
    """constant + sum of coefficient * parameter, exactly."""

    constant: Fraction
    terms: tuple[tuple[str, Fraction], ...]

    @property
    def parameters(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.terms)

    @property
    def is_homogeneous(self) -> bool:
        return self.constant == 0

    def coefficient(self, name: str) -> Fraction:
        for n, c in self.terms:
            if n == name:
                return c
        return Q(0)

    def evaluate(self, assignment) -> Fraction:
        return self.constant + sum(
            (c * as_scalar(assignment[n]) for n, c in self.terms), Q(0)
        )

    def __str__(self):
        parts = []
        if self.constant != 0 or not self.terms:
            parts.append(format_scalar(self.constant))
        for name, c in self.terms:
            if c == 0:
                continue
            lead = "-" if c < 0 else ("+" if parts else "")
            mag = abs(c)
            coef = "" if mag == 1 else (
                format_scalar(mag) if mag.denominator == 1 else f"({format_scalar(mag)})"
            )
            piece = f"{coef}{name}"
            parts.append(f"{lead} {piece}".strip() if parts else f"{lead}{piece}")
        return " ".join(parts) if parts else "0"


def parse_linear_form(text: str) -> LinearForm:
    """Read one coordinate formula like ``-2a + b`` or ``1/2x1 - x3 + 4``.

    Raises NonLinearCoordinate on powers or parameter products, MalformedForm
    on anything else unreadable.
    """
    compact = re.sub(r"\s+", "", text)
    if not compact:
        raise MalformedForm("empty coordinate formula")
    tokens = _TOKEN.findall(compact)
    if "".join(tokens) != compact:
        raise MalformedForm(f"cannot read {text!r}")
    constant = Q(0)
    order: list[str] = []
    coeffs: dict[str, Fraction] = {}
    for token in tokens:
        sign = Q(1)
        body = token
        if body[0] in "+-":
            sign = Q(-1) if body[0] == "-" else Q(1)
            body = body[1:]
        m = _TERM.match(body)
        if not m or (m.group("coef") is None and m.group("name") is None):
            if _NONLINEAR.search(body):
                raise NonLinearCoordinate(f"nonlinear term {token!r} in {text!r}")
            raise MalformedForm(f"cannot read term {token!r} in {text!r}")
        coef = sign * (parse_scalar(m.group("coef")) if m.group("coef") else Q(1))
        name = m.group("name")
        if name is None:
            constant += coef
        else:
            if name not in coeffs:
                order.append(name)
                coeffs[name] = Q(0)
            coeffs[name] += coef
    return LinearForm(constant=constant, terms=tuple((n, coeffs[n]) for n in order))


_STEM_NUM = re.compile(r"([A-Za-z_]+?)(\d+)\Z")


def infer_parameter_order(forms: Sequence[LinearForm]) -> tuple[str, ...]:
    """Parameter order across forms: numeric suffixes sort (x1, x2, ...),
    otherwise first appearance wins."""
    seen: list[str] = []
    for f in forms:
        for name in f.parameters:
            if name not in seen:
                seen.append(name)
    matches = [_STEM_NUM.match(n) for n in seen]
    if seen and all(matches) and len({m.group(1) for m in matches}) == 1:
        return tuple(sorted(seen, key=lambda n: int(_STEM_NUM.match(n).group(2))))
    return tuple(seen)


def _parse_forms(forms) -> list[LinearForm]:
    parsed = []
    for idx, f in enumerate(forms):
        try:
            parsed.append(parse_linear_form(f) if isinstance(f, str) else f)
        except NonLinearCoordinate as e:
            raise NonLinearCoordinate(f"coordinate {idx + 1}: {e}") from None
        except MalformedForm as e:
            raise MalformedForm(f"coordinate {idx + 1}: {e}") from None
    if not parsed:
        raise EmptyInput("no coordinate formulas given")
    return parsed


@dataclass(frozen=True)
class NotSubspace:
    """The described set misses the zero vector."""

    coordinate: int
    constant: Fraction

    def __bool__(self) -> bool:
        return False

    def __str__(self):
        return (
            f"coordinate {self.coordinate + 1} has constant "
            f"{format_scalar(self.constant)}, so the zero vector is excluded"
        )


def subspace_from_forms(forms, parameters=None) -> Union[Subspace, NotSubspace]:
    """The set of all (form_1, ..., form_m) over all parameter values.

    Homogeneous forms give a subspace: one generator per parameter (that
    parameter set to 1, the rest to 0), then the canonical basis of the span.
    A nonzero constant anywhere is a NotSubspace verdict, not an error.
    """
    parsed = _parse_forms(forms)
    if parameters is None:
        params = infer_parameter_order(parsed)
    else:
        params = tuple(parameters)
        known = set(params)
        for idx, f in enumerate(parsed):
            for name in f.parameters:
                if name not in known:
                    raise MalformedForm(
                        f"coordinate {idx + 1} uses undeclared parameter {name!r}"
                    )
    for idx, f in enumerate(parsed):
        if f.constant != 0:
            return NotSubspace(coordinate=idx, constant=f.constant)
    if not params:
        return Subspace.zero(len(parsed))
    points = [tuple(f.coefficient(p) for f in parsed) for p in params]
    return basis_of_span(points)


# ---- the fundamental subspaces of a matrix -------------------------------------


@dataclass(frozen=True)
class Fundamentals:
    """Null space, row space, column space, with rank and nullity."""

    null: Subspace
    row: Subspace
    column: Subspace
    rank: int
    nullity: int


def fundamental_subspaces(a: Matrix) -> Fundamentals:
    """All three subspaces from two reductions of ``a``.

    Row space: nonzero rows of the semi-reduced matrix.  Column space: the
    columns of the *original* matrix at the leader positions.  Null space:
    one generator per free column (set it to 1, other free columns to 0, and
    read each leading variable off the completely reduced matrix).
    """
    semi, _ = reduce(a, "semi_reduced")
    row_space = Subspace(
        a.cols, tuple(semi.row(i) for i, _ in leaders(semi))
    )

    full, _ = reduce(a, "completely_reduced")
    lead = leaders(full)
    lead_cols = [j for _, j in lead]
    rank = len(lead_cols)
    column_space = Subspace(a.rows, tuple(a.col(j) for j in lead_cols))

    free = [j for j in range(a.cols) if j not in lead_cols]
    null_basis = []
    for f in free:
        v = [Q(0)] * a.cols
        v[f] = Q(1)
        for r, c in lead:
            v[c] = -full[r, f]
        null_basis.append(tuple(v))
    null_space = Subspace(a.cols, tuple(null_basis))

    return Fundamentals(
        null=null_space,
        row=row_space,
        column=column_space,
        rank=rank,
        nullity=a.cols - rank,
    )
