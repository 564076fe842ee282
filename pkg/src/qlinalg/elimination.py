"""Row operations, elimination, and linear-system solving.

Three row operations exist, each invertible and each realized by an
elementary matrix (the operation applied to the identity):

* ``Scale(alpha, row)``            -- multiply a row by a nonzero scalar
* ``AddMultiple(alpha, source, target)`` -- add alpha times one row to another
* ``Swap(first, second)``          -- exchange two rows

:func:`reduce` drives a matrix to one of five target forms, returning both
the result and a :class:`Trace`: the ordered list of operations performed,
each paired with its elementary matrix.  Replaying the trace reproduces the
result; multiplying the elementary matrices together (newest on the left)
gives a single left factor that does the same in one product.

Pivoting is deterministic: scan columns left to right, take the topmost
usable row (swapping it up if needed), and clear downward.  The staggered
result means the "echelon" forms coincide with what the sweep already
produces; the form names differ in how far normalization and upward
elimination go.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import (
    DimensionMismatch,
    IndexOutOfRange,
    NotInvertible,
    NotSquare,
    ZeroScale,
)
from .matrix import Matrix, as_vector, hstack
from .scalars import as_scalar, format_scalar


# ---- the three operations ----------------------------------------------------


@dataclass(frozen=True)
class Scale:
    """alpha * R[row], alpha nonzero."""

    alpha: Fraction
    row: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_scalar(self.alpha))
        if self.alpha == 0:
            raise ZeroScale("scaling a row by zero is not a row operation")
        if self.row < 0:
            raise IndexOutOfRange(f"row {self.row}")


@dataclass(frozen=True)
class AddMultiple:
    """alpha * R[source] + R[target] -> R[target], alpha nonzero."""

    alpha: Fraction
    source: int
    target: int

    def __post_init__(self):
        object.__setattr__(self, "alpha", as_scalar(self.alpha))
        if self.alpha == 0:
            raise ZeroScale("adding zero times a row is not a row operation")
        if self.source == self.target:
            raise ValueError("source and target rows must differ")
        if min(self.source, self.target) < 0:
            raise IndexOutOfRange(f"rows {self.source}, {self.target}")


@dataclass(frozen=True)
class Swap:
    """R[first] <-> R[second]."""

    first: int
    second: int

    def __post_init__(self):
        if self.first == self.second:
            raise ValueError("swapping a row with itself is not a row operation")
        if min(self.first, self.second) < 0:
            raise IndexOutOfRange(f"rows {self.first}, {self.second}")


RowOp = Union[Scale, AddMultiple, Swap]


def _fold_coefficient(alpha: Fraction) -> str:
    if alpha == 1:
        return ""
    if alpha == -1:
        return "-"
    return format_scalar(alpha)


def render_row_op(op: RowOp) -> str:
    """1-based text: ``-2R1``, ``3R1+R2->R2``, ``R1<->R3``."""
    if isinstance(op, Scale):
        return f"{format_scalar(op.alpha)}R{op.row + 1}"
    if isinstance(op, AddMultiple):
        c = _fold_coefficient(op.alpha)
        return f"{c}R{op.source + 1}+R{op.target + 1}->R{op.target + 1}"
    return f"R{op.first + 1}<->R{op.second + 1}"


def _op_rows(op: RowOp) -> tuple[int, ...]:
    if isinstance(op, Scale):
        return (op.row,)
    if isinstance(op, AddMultiple):
        return (op.source, op.target)
    return (op.first, op.second)


def _apply_in_place(grid: list[list[Fraction]], op: RowOp) -> None:
    if isinstance(op, Scale):
        grid[op.row] = [op.alpha * x for x in grid[op.row]]
    elif isinstance(op, AddMultiple):
        src = grid[op.source]
        grid[op.target] = [t + op.alpha * s for t, s in zip(grid[op.target], src)]
    else:
        grid[op.first], grid[op.second] = grid[op.second], grid[op.first]


def apply_row_op(m: Matrix, op: RowOp) -> Matrix:
    """The matrix after one row operation (the input is untouched)."""
    for r in _op_rows(op):
        if r >= m.rows:
            raise IndexOutOfRange(f"row {r} outside a {m.rows}-row matrix")
    grid = [list(r) for r in m.entries]
    _apply_in_place(grid, op)
    return Matrix(grid)


def elementary_matrix(op: RowOp, n: int) -> Matrix:
    """The operation applied to the n x n identity."""
    return apply_row_op(Matrix.identity(n), op)


def invert_row_op(op: RowOp) -> RowOp:
    """The operation that undoes ``op`` (same kind in every case)."""
    if isinstance(op, Scale):
        return Scale(Fraction(1) / op.alpha, op.row)
    if isinstance(op, AddMultiple):
        return AddMultiple(-op.alpha, op.source, op.target)
    return op


# ---- traces -------------------------------------------------------------------


@dataclass(frozen=True)
class Trace:
    """What an elimination did: ordered (operation, elementary matrix) pairs."""

    start: Matrix
    end: Matrix
    steps: tuple[tuple[RowOp, Matrix], ...]

    def ops(self) -> tuple[RowOp, ...]:
        return tuple(op for op, _ in self.steps)

    def replay(self, m: Matrix | None = None) -> Matrix:
        """Apply the recorded operations to ``m`` (default: to ``start``)."""
        cur = self.start if m is None else m
        for op, _ in self.steps:
            cur = apply_row_op(cur, op)
        return cur

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self):
        return iter(self.steps)


def left_factor(trace: Trace) -> Matrix:
    """Product of the trace's elementary matrices, newest on the left.

    ``left_factor(t) @ t.start == t.end``.
    """
    p = Matrix.identity(trace.start.rows)
    for _, e in trace.steps:
        p = e @ p
    return p


# ---- reduction ------------------------------------------------------------------

FORMS = (
    "semi_reduced",
    "reduced",
    "completely_reduced",
    "echelon",
    "reduced_echelon",
)

# How far each form goes: 0 = clear below leaders, 1 = also scale leaders
# to 1, 2 = also clear above leaders.  Reduced-echelon is a completely
# reduced matrix whose leaders are staggered, so it shares stage 2.
_FORM_STAGE = {
    "semi_reduced": 0,
    "echelon": 0,
    "reduced": 1,
    "reduced_echelon": 2,
    "completely_reduced": 2,
}


def reduce(m: Matrix, form: str = "completely_reduced") -> tuple[Matrix, Trace]:
    """Drive ``m`` to the named form, recording every operation.

    Deterministic pivoting: columns left to right; the topmost row (at or
    below the working row) with a nonzero entry is swapped up if it is not
    already in place; entries below each pivot are cleared immediately.
    The sweep leaves pivots staggered, so the echelon forms ask for nothing
    beyond their reduced counterparts here.
    """
    stage = _form_stage(form)
    grid = [list(r) for r in m.entries]
    steps: list[tuple[RowOp, Matrix]] = []

    def do(op: RowOp) -> None:
        _apply_in_place(grid, op)
        steps.append((op, elementary_matrix(op, m.rows)))

    pivots: list[tuple[int, int]] = []
    r = 0
    for c in range(m.cols):
        if r == m.rows:
            break
        src = next((k for k in range(r, m.rows) if grid[k][c] != 0), None)
        if src is None:
            continue
        if src != r:
            do(Swap(r, src))
        for k in range(r + 1, m.rows):
            if grid[k][c] != 0:
                do(AddMultiple(-grid[k][c] / grid[r][c], r, k))
        pivots.append((r, c))
        r += 1

    if stage >= 1:
        for pr, pc in pivots:
            if grid[pr][pc] != 1:
                do(Scale(Fraction(1) / grid[pr][pc], pr))

    if stage >= 2:
        for pr, pc in reversed(pivots):
            for k in range(pr - 1, -1, -1):
                if grid[k][pc] != 0:
                    do(AddMultiple(-grid[k][pc], pr, k))

    end = Matrix(grid)
    return end, Trace(start=m, end=end, steps=tuple(steps))


def _form_stage(form: str) -> int:
    try:
        return _FORM_STAGE[form]
    except KeyError:
        raise ValueError(
            f"unknown reduction form {form!r}; choose from {', '.join(FORMS)}"
        ) from None


def leaders(m: Matrix) -> tuple[tuple[int, int], ...]:
    """(row, column) of the first nonzero entry of every nonzero row."""
    found = []
    for i, row in enumerate(m.entries):
        for j, x in enumerate(row):
            if x != 0:
                found.append((i, j))
                break
    return tuple(found)


def satisfies_form(m: Matrix, form: str) -> bool:
    """Does ``m`` already meet the named form's definition?"""
    stage = _form_stage(form)
    lead = leaders(m)

    below_clear = all(
        all(m[k, j] == 0 for k in range(i + 1, m.rows)) for i, j in lead
    )
    if not below_clear:
        return False
    if stage >= 1 and any(m[i, j] != 1 for i, j in lead):
        return False
    if stage >= 2:
        if not all(
            all(m[k, j] == 0 for k in range(m.rows) if k != i) for i, j in lead
        ):
            return False
    if form in ("echelon", "reduced_echelon"):
        nonzero_rows = [i for i, _ in lead]
        if nonzero_rows != list(range(len(nonzero_rows))):
            return False  # a zero row sits above a nonzero one
        cols = [j for _, j in lead]
        if any(a >= b for a, b in zip(cols, cols[1:])):
            return False
        if form == "reduced_echelon":
            return satisfies_form(m, "completely_reduced")
    return True


# ---- linear systems ------------------------------------------------------------


@dataclass(frozen=True)
class Inconsistent:
    """A row reduced to 0 = value with value nonzero."""

    row: int
    value: Fraction

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class Unique:
    values: tuple[Fraction, ...]


@dataclass(frozen=True)
class Infinite:
    """Solutions parametrized by the free variables.

    For the r-th leading variable:
    ``x[leading[r]] = constants[r] + sum(coefficients[r][s] * x[free[s]])``.
    All indices are 0-based column numbers.
    """

    leading: tuple[int, ...]
    free: tuple[int, ...]
    constants: tuple[Fraction, ...]
    coefficients: tuple[tuple[Fraction, ...], ...]

    def at(self, assignment) -> tuple[Fraction, ...]:
        """The full solution vector once every free variable is assigned.

        ``assignment`` is a mapping from free-variable index to value, or a
        sequence aligned with ``self.free``.
        """
        if isinstance(assignment, dict):
            free_vals = [as_scalar(assignment[f]) for f in self.free]
        else:
            free_vals = [as_scalar(v) for v in assignment]
            if len(free_vals) != len(self.free):
                raise DimensionMismatch(
                    f"{len(self.free)} free variables, {len(free_vals)} values"
                )
        n = len(self.leading) + len(self.free)
        x: list[Fraction] = [Fraction(0)] * n
        for f, v in zip(self.free, free_vals):
            x[f] = v
        for r, var in enumerate(self.leading):
            x[var] = self.constants[r] + sum(
                (c * v for c, v in zip(self.coefficients[r], free_vals)), Fraction(0)
            )
        return tuple(x)

    def particular(self) -> tuple[Fraction, ...]:
        """The solution with every free variable set to zero."""
        return self.at([0] * len(self.free))


SolutionSet = Union[Inconsistent, Unique, Infinite]


def solve_with_trace(a: Matrix, b) -> tuple[SolutionSet, Trace]:
    """Solve ``a x = b``; also hand back the elimination trace used.

    Inconsistency is detected on the semi-reduced matrix, where the impossible
    row still shows its raw ``0 = value``; otherwise the reduction is carried
    to completion and the solution read off.
    """
    bvec = as_vector(b)
    if len(bvec) != a.rows:
        raise DimensionMismatch(f"{a.rows} equations, {len(bvec)} constants")
    aug = hstack(a, Matrix.column_vector(bvec))

    semi, semi_trace = reduce(aug, "semi_reduced")
    for i, j in leaders(semi):
        if j == a.cols:
            return Inconsistent(row=i, value=semi[i, j]), semi_trace

    full, trace = reduce(aug, "completely_reduced")
    lead = leaders(full)
    lead_cols = [j for _, j in lead]
    if len(lead_cols) == a.cols:
        values = [Fraction(0)] * a.cols
        for i, j in lead:
            values[j] = full[i, a.cols]
        return Unique(tuple(values)), trace

    free = tuple(j for j in range(a.cols) if j not in lead_cols)
    constants = tuple(full[i, a.cols] for i, _ in lead)
    coefficients = tuple(
        tuple(-full[i, f] for f in free) for i, _ in lead
    )
    return Infinite(tuple(lead_cols), free, constants, coefficients), trace


def solve(a: Matrix, b) -> SolutionSet:
    """Classify and solve ``a x = b`` exactly."""
    return solve_with_trace(a, b)[0]


def inverse_gauss_jordan(a: Matrix) -> Matrix:
    """Invert by reducing ``[A | I]``; raises NotInvertible when rank falls short."""
    if not a.is_square:
        raise NotSquare(f"{a.rows}x{a.cols} matrix has no inverse")
    n = a.rows
    full, _ = reduce(hstack(a, Matrix.identity(n)), "completely_reduced")
    if full.take_columns(0, n) != Matrix.identity(n):
        raise NotInvertible("the matrix row-reduces short of the identity")
    return full.take_columns(n, 2 * n)
