"""Command-line front end.

Every matrix argument is taken literally, or read from a file when the
argument names one ('-' reads stdin).  Rows split on ';' or newlines, entries
on whitespace, and a system marks its constants column with '|'::

    qlinalg solve "3 2 | 5 ; -2 1 | -6"
    qlinalg det "1 0 2; 3 1 -1; 1 2 4"

Scalars are integers, p/q fractions, or terminating decimals.  Indices on
the command line (and in output) are 1-based.

Exit status: 0 for any computed answer (including answer-like negatives such
as "not invertible"), 1 when the values make the request impossible
(singular Cramer coefficient, negative power of a singular matrix, dependent
points, ...), 2 for unusable input or bad usage.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from .determinant import (
    adjoint,
    cofactor_matrix,
    cramer_solve,
    det_cofactor,
    det_with_effects,
    inverse_entry,
)
from .eigen import (
    Diagonalizable,
    NotSplit,
    diagonalize,
    eigen_summary,
    matrix_power,
)
from .elimination import (
    Inconsistent,
    Trace,
    Unique,
    inverse_gauss_jordan,
    reduce,
    render_row_op,
    solve_with_trace,
)
from .errors import (
    AllZeroInput,
    DependentPoints,
    DimensionMismatch,
    InputDependent,
    LinAlgError,
    NegativePowerOfSingular,
    NotInvertible,
    NotSpanning,
    SingularCoefficient,
    UsageError,
    ZeroVectorPresent,
)
from .matrix import (
    Matrix,
    as_vector,
    parse_matrix_text,
    render_block,
    render_inline,
    split_augmented,
    sym_skew_decompose,
)
from .orthogonal import dot, gram_schmidt
from .scalars import format_scalar
from .spaces import (
    LinearForm,
    NotSubspace,
    Subspace,
    basis_of_span,
    extend_to_basis,
    fundamental_subspaces,
    span_contains,
    subspace_from_forms,
)
from .transform import NotLinear, from_basis_images, from_forms, from_matrix

_ANSWER_DEPENDENT_ERRORS = (
    SingularCoefficient,
    NegativePowerOfSingular,
    DependentPoints,
    NotSpanning,
    InputDependent,
    ZeroVectorPresent,
    AllZeroInput,
)

_CLI_FORMS = {
    "semi-reduced": "semi_reduced",
    "reduced": "reduced",
    "completely-reduced": "completely_reduced",
    "echelon": "echelon",
    "reduced-echelon": "reduced_echelon",
}


# ---- argument reading -------------------------------------------------------


def _read_text(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    try:
        p = Path(arg)
        if p.is_file():
            return p.read_text()
    except OSError:
        pass
    return arg


def _plain_matrix(arg: str) -> Matrix:
    m, bar = parse_matrix_text(_read_text(arg))
    if bar is not None:
        raise UsageError("this verb takes a plain matrix; remove the '|'")
    return m


def _augmented(arg: str) -> tuple[Matrix, Matrix]:
    m, bar = parse_matrix_text(_read_text(arg))
    if bar is None:
        raise UsageError(
            "mark the constants column with '|', e.g. \"3 2 | 5 ; -2 1 | -6\""
        )
    a, b = split_augmented(m, bar)
    if b.cols != 1:
        raise UsageError("exactly one constants column may follow the '|'")
    return a, b


def _vector_rows(arg: str) -> list[tuple]:
    m = _plain_matrix(arg)
    return [m.row(i) for i in range(m.rows)]


def _one_vector(arg: str) -> tuple:
    m = _plain_matrix(arg)
    try:
        return as_vector(m)
    except DimensionMismatch:
        raise UsageError("expected a single vector (one row or one column)") from None


def _linear_map(arg: str):
    """Maps come as point->image pairs, coordinate formulas, or a matrix."""
    text = _read_text(arg)
    if "->" in text:
        pairs = []
        for row in _split_rows(text):
            sides = row.split("->")
            if len(sides) != 2:
                raise UsageError(f"expected one '->' per pair, got {row!r}")
            pairs.append((as_vector(sides[0]), as_vector(sides[1])))
        return from_basis_images(pairs)
    if re.search(r"[A-Za-z]", text):
        return from_forms(_split_rows(text))
    return from_matrix(Matrix.parse(text))


def _split_rows(text: str) -> list[str]:
    return [
        piece.strip()
        for chunk in text.splitlines()
        for piece in chunk.split(";")
        if piece.strip()
    ]


def _parse_entry(text: str) -> tuple[int, int]:
    m = re.fullmatch(r"\s*(\d+)\s*,\s*(\d+)\s*", text)
    if not m or int(m.group(1)) < 1 or int(m.group(2)) < 1:
        raise UsageError("--entry takes 1-based indices like --entry 2,4")
    return int(m.group(1)) - 1, int(m.group(2)) - 1


# ---- rendering ----------------------------------------------------------------


def _fmt_vec(v) -> str:
    return "(" + ", ".join(format_scalar(x) for x in v) + ")"


def _jvec(v) -> list[str]:
    return [format_scalar(x) for x in v]


def _jmat(m: Matrix) -> list[list[str]]:
    return [[format_scalar(x) for x in row] for row in m.entries]


def _jsub(s: Subspace) -> dict:
    return {
        "ambient": s.ambient,
        "dimension": s.dimension,
        "basis": [_jvec(v) for v in s.basis],
    }


def _trace_lines(trace: Trace) -> list[str]:
    return [
        f"{render_row_op(op)} :: E = {render_inline(e)}" for op, e in trace.steps
    ]


def _jtrace(trace: Trace) -> list[dict]:
    return [
        {"op": render_row_op(op), "elementary": _jmat(e)} for op, e in trace.steps
    ]


def _block_lines(m: Matrix) -> list[str]:
    return render_block(m).splitlines()


def _space_lines(space: Subspace) -> list[str]:
    lines = [f"dimension: {space.dimension}"]
    if space.is_zero:
        lines.append("(zero subspace)")
    else:
        lines.extend(_fmt_vec(v) for v in space.basis)
    return lines


def _var(j: int) -> str:
    return f"x{j + 1}"


def _solution_lines(sol) -> list[str]:
    if isinstance(sol, Unique):
        pairs = ", ".join(
            f"{_var(i)} = {format_scalar(v)}" for i, v in enumerate(sol.values)
        )
        return [f"unique: {pairs}"]
    if isinstance(sol, Inconsistent):
        return [
            f"inconsistent (row {sol.row + 1}: 0 = {format_scalar(sol.value)})"
        ]
    lines = [
        "infinite solutions",
        "free: " + ", ".join(_var(f) for f in sol.free),
    ]
    for r, var in enumerate(sol.leading):
        form = LinearForm(
            constant=sol.constants[r],
            terms=tuple(
                (_var(f), c) for f, c in zip(sol.free, sol.coefficients[r])
            ),
        )
        lines.append(f"{_var(var)} = {form}")
    return lines


def _jsolution(sol) -> dict:
    if isinstance(sol, Unique):
        return {"kind": "unique", "values": _jvec(sol.values)}
    if isinstance(sol, Inconsistent):
        return {
            "kind": "inconsistent",
            "row": sol.row + 1,
            "value": format_scalar(sol.value),
        }
    return {
        "kind": "infinite",
        "free": [_var(f) for f in sol.free],
        "leading": [_var(v) for v in sol.leading],
        "equations": {
            _var(var): {
                "constant": format_scalar(sol.constants[r]),
                "coefficients": {
                    _var(f): format_scalar(c)
                    for f, c in zip(sol.free, sol.coefficients[r])
                },
            }
            for r, var in enumerate(sol.leading)
        },
    }


# ---- verb handlers ---------------------------------------------------------------


def _cmd_solve(args):
    a, b = _augmented(args.system)
    sol, trace = solve_with_trace(a, b)
    lines = _trace_lines(trace) if args.trace else []
    lines += _solution_lines(sol)
    payload = {"verb": "solve", "result": _jsolution(sol)}
    if args.trace:
        payload["trace"] = _jtrace(trace)
    return lines, payload


def _cmd_rref(args):
    m = _plain_matrix(args.matrix)
    result, trace = reduce(m, "completely_reduced")
    lines = _trace_lines(trace) if args.trace else []
    lines += _block_lines(result)
    payload = {"verb": "rref", "matrix": _jmat(result)}
    if args.trace:
        payload["trace"] = _jtrace(trace)
    return lines, payload


def _cmd_reduce(args):
    m = _plain_matrix(args.matrix)
    result, trace = reduce(m, _CLI_FORMS[args.form])
    lines = _trace_lines(trace) if args.trace else []
    lines += _block_lines(result)
    payload = {"verb": "reduce", "form": args.form, "matrix": _jmat(result)}
    if args.trace:
        payload["trace"] = _jtrace(trace)
    return lines, payload


def _cmd_inverse(args):
    m = _plain_matrix(args.matrix)
    try:
        inv = inverse_gauss_jordan(m)
    except NotInvertible:
        return ["not invertible (det = 0)"], {
            "verb": "inverse",
            "invertible": False,
        }
    return _block_lines(inv), {
        "verb": "inverse",
        "invertible": True,
        "matrix": _jmat(inv),
    }


def _cmd_det(args):
    m = _plain_matrix(args.matrix)
    if args.method == "cofactor":
        if args.trace:
            raise UsageError("--trace goes with --method rowred")
        value = det_cofactor(m)
        return [format_scalar(value)], {
            "verb": "det",
            "method": "cofactor",
            "value": format_scalar(value),
        }
    value, log, _ = det_with_effects(m)
    lines = []
    if args.trace:
        lines = [
            f"{render_row_op(op)} :: factor {format_scalar(f)}"
            for op, f in log.steps
        ]
        lines.append(f"det = {format_scalar(value)}")
    else:
        lines = [format_scalar(value)]
    payload = {"verb": "det", "method": "rowred", "value": format_scalar(value)}
    if args.trace:
        payload["effects"] = [
            {"op": render_row_op(op), "factor": format_scalar(f)}
            for op, f in log.steps
        ]
    return lines, payload


def _cmd_cofactor(args):
    c = cofactor_matrix(_plain_matrix(args.matrix))
    return _block_lines(c), {"verb": "cofactor", "matrix": _jmat(c)}


def _cmd_cramer(args):
    a, b = _augmented(args.system)
    values = cramer_solve(a, b)
    pairs = ", ".join(
        f"{_var(i)} = {format_scalar(v)}" for i, v in enumerate(values)
    )
    return [pairs], {"verb": "cramer", "values": _jvec(values)}


def _cmd_adjoint(args):
    adj = adjoint(_plain_matrix(args.matrix))
    return _block_lines(adj), {"verb": "adjoint", "matrix": _jmat(adj)}


def _cmd_inv_entry(args):
    m = _plain_matrix(args.matrix)
    i, k = _parse_entry(args.entry)
    try:
        value = inverse_entry(m, i, k)
    except NotInvertible:
        return ["not invertible (det = 0)"], {
            "verb": "inv-entry",
            "invertible": False,
        }
    return [format_scalar(value)], {
        "verb": "inv-entry",
        "entry": [i + 1, k + 1],
        "value": format_scalar(value),
    }


def _cmd_basis(args):
    space = basis_of_span(_vector_rows(args.vectors))
    return _space_lines(space), {"verb": "basis", **_jsub(space)}


def _cmd_span_member(args):
    space = basis_of_span(_vector_rows(args.generators))
    q = _one_vector(args.vector)
    coeffs = span_contains(space, q)
    if coeffs is None:
        return ["member: no"], {
            "verb": "span-member",
            "member": False,
            "basis": _jsub(space)["basis"],
        }
    rendered = ", ".join(format_scalar(c) for c in coeffs) or "(empty)"
    return [f"member: yes (coefficients: {rendered})"], {
        "verb": "span-member",
        "member": True,
        "coefficients": _jvec(coeffs),
        "basis": _jsub(space)["basis"],
    }


def _cmd_extend_basis(args):
    space = extend_to_basis(_vector_rows(args.vectors))
    lines = [_fmt_vec(v) for v in space.basis]
    return lines, {"verb": "extend-basis", **_jsub(space)}


def _cmd_subspace(args):
    forms = _split_rows(_read_text(args.forms))
    params = (
        [p.strip() for p in args.params.split(",") if p.strip()]
        if args.params
        else None
    )
    result = subspace_from_forms(forms, params)
    if isinstance(result, NotSubspace):
        return [f"subspace: no ({result})"], {
            "verb": "subspace",
            "subspace": False,
            "coordinate": result.coordinate + 1,
            "constant": format_scalar(result.constant),
        }
    return ["subspace: yes", *_space_lines(result)], {
        "verb": "subspace",
        "subspace": True,
        **_jsub(result),
    }


def _cmd_fundamentals(args):
    f = fundamental_subspaces(_plain_matrix(args.matrix))
    lines = [f"rank: {f.rank}", f"nullity: {f.nullity}"]
    for label, space in (
        ("row space basis", f.row),
        ("column space basis", f.column),
        ("null space basis", f.null),
    ):
        lines.append(f"{label}:")
        if space.is_zero:
            lines.append("  (none)")
        else:
            lines.extend(f"  {_fmt_vec(v)}" for v in space.basis)
    return lines, {
        "verb": "fundamentals",
        "rank": f.rank,
        "nullity": f.nullity,
        "row": _jsub(f.row),
        "column": _jsub(f.column),
        "null": _jsub(f.null),
    }


def _not_linear_result(verb: str, verdict: NotLinear):
    return [f"not linear: {verdict}"], {
        "verb": verb,
        "linear": False,
        "coordinate": verdict.coordinate + 1,
        "constant": format_scalar(verdict.constant),
    }


def _cmd_transform(args):
    obj = _linear_map(args.map)
    if isinstance(obj, NotLinear):
        return _not_linear_result("transform", obj)
    lines = ["standard matrix:", *_block_lines(obj.matrix)]
    payload = {"verb": "transform", "linear": True, "matrix": _jmat(obj.matrix)}
    if args.apply is not None:
        v = _one_vector(args.apply)
        image = obj.apply(v)
        lines.append(f"T{_fmt_vec(v)} = {_fmt_vec(image)}")
        payload["input"] = _jvec(v)
        payload["image"] = _jvec(image)
    return lines, payload


def _cmd_kernel(args):
    obj = _linear_map(args.map)
    if isinstance(obj, NotLinear):
        return _not_linear_result("kernel", obj)
    space = obj.kernel()
    return _space_lines(space), {"verb": "kernel", **_jsub(space)}


def _cmd_range(args):
    obj = _linear_map(args.map)
    if isinstance(obj, NotLinear):
        return _not_linear_result("range", obj)
    space = obj.range()
    return _space_lines(space), {"verb": "range", **_jsub(space)}


def _cmd_eigen(args):
    summary = eigen_summary(_plain_matrix(args.matrix))
    lines = [f"characteristic polynomial: {summary.char.render()}"]
    payload = {
        "verb": "eigen",
        "char_poly": {
            "coefficients": _jvec(summary.char.coefficients),
            "text": summary.char.render(),
        },
        "split": summary.split,
    }
    jroots = []
    for (lam, alg), (_, space) in zip(summary.roots, summary.spaces):
        lines.append(
            f"eigenvalue {format_scalar(lam)} "
            f"(algebraic {alg}, geometric {space.dimension})"
        )
        lines.extend(f"  {_fmt_vec(v)}" for v in space.basis)
        jroots.append(
            {
                "value": format_scalar(lam),
                "algebraic": alg,
                "geometric": space.dimension,
                "basis": [_jvec(v) for v in space.basis],
            }
        )
    payload["eigenvalues"] = jroots
    if not summary.split:
        if not summary.roots:
            lines.insert(1, "rational eigenvalues: none")
        lines.append(f"unfactored residual: {summary.residual.render()}")
        payload["residual"] = {
            "coefficients": _jvec(summary.residual.coefficients),
            "text": summary.residual.render(),
        }
        return lines, payload
    if summary.diagonalizable:
        lines.append("diagonalizable: yes")
    else:
        lam, alg, geom = summary.deficient
        lines.append(
            f"diagonalizable: no (eigenvalue {format_scalar(lam)} "
            f"has geometric {geom} < algebraic {alg})"
        )
    payload["diagonalizable"] = summary.diagonalizable
    if summary.deficient is not None:
        lam, alg, geom = summary.deficient
        payload["deficient"] = {
            "value": format_scalar(lam),
            "algebraic": alg,
            "geometric": geom,
        }
    return lines, payload


def _cmd_diagonalize(args):
    m = _plain_matrix(args.matrix)
    verdict = diagonalize(m)
    if isinstance(verdict, NotSplit):
        return [
            "eigenvalues do not all lie in Q",
            f"unfactored residual: {verdict.residual.render()}",
        ], {
            "verb": "diagonalize",
            "diagonalizable": None,
            "residual": verdict.residual.render(),
        }
    if not isinstance(verdict, Diagonalizable):
        line = (
            f"not diagonalizable: eigenvalue {format_scalar(verdict.eigenvalue)} "
            f"has geometric multiplicity {verdict.geometric} "
            f"< algebraic multiplicity {verdict.algebraic}"
        )
        return [line], {
            "verb": "diagonalize",
            "diagonalizable": False,
            "eigenvalue": format_scalar(verdict.eigenvalue),
            "algebraic": verdict.algebraic,
            "geometric": verdict.geometric,
        }
    check = "yes" if verdict.reconstruct() == m else "no"
    lines = ["L =", *_block_lines(verdict.L), "D =", *_block_lines(verdict.D)]
    lines.append(f"check L D L^-1 = A: {check}")
    return lines, {
        "verb": "diagonalize",
        "diagonalizable": True,
        "L": _jmat(verdict.L),
        "D": _jmat(verdict.D),
    }


def _cmd_power(args):
    result = matrix_power(_plain_matrix(args.matrix), args.power)
    return _block_lines(result), {
        "verb": "power",
        "k": args.power,
        "matrix": _jmat(result),
    }


def _cmd_dot(args):
    value = dot(_one_vector(args.u), _one_vector(args.v))
    return [format_scalar(value)], {"verb": "dot", "value": format_scalar(value)}


def _cmd_gram_schmidt(args):
    result = gram_schmidt(_vector_rows(args.vectors))
    lines = []
    for idx, (w, n2, proj) in enumerate(
        zip(result.vectors, result.squared_norms, result.projections), start=1
    ):
        line = f"W{idx} = {_fmt_vec(w)}, |W{idx}|^2 = {format_scalar(n2)}"
        if proj:
            line += ", projections: " + ", ".join(format_scalar(c) for c in proj)
        lines.append(line)
    return lines, {
        "verb": "gram-schmidt",
        "vectors": [_jvec(w) for w in result.vectors],
        "squared_norms": _jvec(result.squared_norms),
        "projections": [_jvec(p) for p in result.projections],
        "source": [_jvec(v) for v in result.source],
    }


def _cmd_decompose_sym(args):
    b, c = sym_skew_decompose(_plain_matrix(args.matrix))
    lines = [
        "B = A + A^T (symmetric):",
        *_block_lines(b),
        "C = A - A^T (skew-symmetric):",
        *_block_lines(c),
    ]
    return lines, {"verb": "decompose-sym", "B": _jmat(b), "C": _jmat(c)}


def _cmd_transpose(args):
    t = _plain_matrix(args.matrix).transpose()
    return _block_lines(t), {"verb": "transpose", "matrix": _jmat(t)}


def _cmd_mul(args):
    product = _plain_matrix(args.a) @ _plain_matrix(args.b)
    return _block_lines(product), {"verb": "mul", "matrix": _jmat(product)}


# ---- parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qlinalg",
        description="Exact rational linear algebra.",
    )
    sub = parser.add_subparsers(dest="verb", required=True, metavar="verb")

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument(
            "--format",
            choices=("plain", "json"),
            default="plain",
            help="output style (default plain)",
        )
        p.set_defaults(func=func)
        return p

    p = add("solve", _cmd_solve, "solve a linear system given as an augmented matrix")
    p.add_argument("system", help="augmented matrix with '|' before the constants")
    p.add_argument("--trace", action="store_true", help="print every row operation")

    p = add("rref", _cmd_rref, "completely reduce a matrix")
    p.add_argument("matrix")
    p.add_argument("--trace", action="store_true")

    p = add("reduce", _cmd_reduce, "reduce a matrix to a chosen form")
    p.add_argument("matrix")
    p.add_argument(
        "--form",
        choices=tuple(_CLI_FORMS),
        default="completely-reduced",
    )
    p.add_argument("--trace", action="store_true")

    p = add("inverse", _cmd_inverse, "invert via Gauss-Jordan on [A | I]")
    p.add_argument("matrix")

    p = add("det", _cmd_det, "determinant")
    p.add_argument("matrix")
    p.add_argument("--method", choices=("rowred", "cofactor"), default="rowred")
    p.add_argument("--trace", action="store_true", help="show per-op det factors")

    p = add("cofactor", _cmd_cofactor, "matrix of signed minors")
    p.add_argument("matrix")

    p = add("cramer", _cmd_cramer, "solve a square system by Cramer's rule")
    p.add_argument("system", help="augmented matrix with '|'")

    p = add("adjoint", _cmd_adjoint, "transpose of the cofactor matrix")
    p.add_argument("matrix")

    p = add("inv-entry", _cmd_inv_entry, "one entry of the inverse, via a single minor")
    p.add_argument("matrix")
    p.add_argument("--entry", required=True, help="1-based i,k (row, column)")

    p = add("basis", _cmd_basis, "canonical basis of the span of the given rows")
    p.add_argument("vectors", help="one generator per row")

    p = add("span-member", _cmd_span_member, "is a vector in the span?")
    p.add_argument("generators", help="one generator per row")
    p.add_argument("vector")

    p = add("extend-basis", _cmd_extend_basis, "extend an independent set to a full basis")
    p.add_argument("vectors")

    p = add("subspace", _cmd_subspace, "is a coordinate-formula set a subspace?")
    p.add_argument("forms", help="one formula per row, e.g. 'a; -2a+b; -a'")
    p.add_argument("--params", help="comma-separated parameter order")

    p = add("fundamentals", _cmd_fundamentals, "row, column, and null spaces with rank")
    p.add_argument("matrix")

    p = add("transform", _cmd_transform, "standard matrix of a linear map")
    p.add_argument(
        "map",
        help="coordinate formulas, 'point -> image' pairs, or a matrix",
    )
    p.add_argument("--apply", help="vector to push through the map")

    p = add("kernel", _cmd_kernel, "all vectors a map sends to zero")
    p.add_argument("map")

    p = add("range", _cmd_range, "all values a map takes")
    p.add_argument("map")

    p = add("eigen", _cmd_eigen, "characteristic polynomial, eigenvalues, eigenspaces")
    p.add_argument("matrix")

    p = add("diagonalize", _cmd_diagonalize, "factor A as L D L^-1 when possible")
    p.add_argument("matrix")

    p = add("power", _cmd_power, "integer matrix power (negative needs invertible)")
    p.add_argument("matrix")
    p.add_argument("--power", required=True, type=int, metavar="k")

    p = add("dot", _cmd_dot, "dot product of two vectors")
    p.add_argument("u")
    p.add_argument("v")

    p = add("gram-schmidt", _cmd_gram_schmidt, "orthogonalize the span of the rows")
    p.add_argument("vectors")

    p = add("decompose-sym", _cmd_decompose_sym, "split A into symmetric and skew parts")
    p.add_argument("matrix")

    p = add("transpose", _cmd_transpose, "transpose")
    p.add_argument("matrix")

    p = add("mul", _cmd_mul, "matrix product")
    p.add_argument("a")
    p.add_argument("b")

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        lines, payload = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except _ANSWER_DEPENDENT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except LinAlgError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "json":
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)
    return 0
