"""Exact dense linear algebra on numpy object arrays.

Matrix entries are Python ints, ``fractions.Fraction`` values, or
:class:`~seidelspectra.polynomial.UniPoly`; nothing in this module touches
floating point.  The matrices of interest are small and dense, so the
algorithms favor exactness over asymptotics: Bareiss elimination for
integer determinants, Gauss-Jordan over Fraction for inverses, cofactor
expansion for adjugates and polynomial-entried determinants, and the
Faddeev-LeVerrier recursion for characteristic polynomials.

Characteristic polynomial convention: :func:`charpoly_oracle` returns
det(M - x*I), whose leading coefficient is (-1)^n.  Use
:func:`monic_charpoly` for the det(x*I - M) normalization.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

import numpy as np

from .errors import InternalError, SingularBlock, SingularInput
from .polynomial import UniPoly, X

#: Matrices in this package are numpy arrays with dtype=object and exact entries.
Matrix = np.ndarray

#: Exact rational scalar: always reduced, positive denominator, value equality.
RatScalar = Fraction

Entry = Union[int, Fraction, UniPoly]

__all__ = [
    "Matrix",
    "RatScalar",
    "exact_matrix",
    "identity_matrix",
    "ones_matrix",
    "zeros_matrix",
    "complete_adjacency",
    "assemble_blocks",
    "char_matrix",
    "trace_exact",
    "det_exact",
    "charpoly_oracle",
    "monic_charpoly",
    "adjugate_exact",
    "inverse_exact",
    "sherman_morrison_inverse",
    "schur_block_det",
    "schur_block_det_adjugate",
]


def _exact_entry(value: object) -> Entry:
    if isinstance(value, (UniPoly, Fraction)):
        return value
    if isinstance(value, (bool, np.bool_)):
        return int(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    raise TypeError(
        f"matrix entries must be int, Fraction, or UniPoly, got {type(value).__name__}"
    )


def exact_matrix(rows: object) -> Matrix:
    """Copy ``rows`` into a fresh numpy object array of exact entries.

    Accepts nested sequences or numpy arrays of any integer dtype.  Integer
    entries (including numpy scalars) become Python ints so later
    arithmetic is arbitrary precision; Fraction and UniPoly entries pass
    through unchanged.  Floats are rejected.
    """
    arr = np.asarray(rows, dtype=object)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-d matrix, got array of shape {arr.shape}")
    out = np.empty(arr.shape, dtype=object)
    for i in range(arr.shape[0]):
        for j in range(arr.shape[1]):
            out[i, j] = _exact_entry(arr[i, j])
    return out


def zeros_matrix(rows: int, cols: int | None = None) -> Matrix:
    if cols is None:
        cols = rows
    out = np.empty((rows, cols), dtype=object)
    out[...] = 0
    return out


def ones_matrix(rows: int, cols: int | None = None) -> Matrix:
    """All-ones matrix J, rectangular when ``cols`` differs from ``rows``."""
    if cols is None:
        cols = rows
    out = np.empty((rows, cols), dtype=object)
    out[...] = 1
    return out


def identity_matrix(n: int) -> Matrix:
    out = zeros_matrix(n)
    for i in range(n):
        out[i, i] = 1
    return out


def complete_adjacency(n: int) -> Matrix:
    """Adjacency matrix of the complete graph K_n: zero diagonal, ones elsewhere."""
    out = ones_matrix(n)
    for i in range(n):
        out[i, i] = 0
    return out


def assemble_blocks(grid: Sequence[Sequence[object]]) -> Matrix:
    """Assemble a block matrix from a 2-d grid of exact matrices."""
    return np.block([[exact_matrix(b) for b in row] for row in grid])


def char_matrix(m: object) -> Matrix:
    """Return m - x*I with polynomial entries, ready for symbolic determinants."""
    a = exact_matrix(m)
    _require_square(a, "char_matrix")
    out = a.copy()
    for i in range(a.shape[0]):
        out[i, i] = a[i, i] - X
    return out


def trace_exact(m: object) -> Entry:
    a = exact_matrix(m)
    _require_square(a, "trace")
    total: Entry = 0
    for i in range(a.shape[0]):
        total = total + a[i, i]
    return total


def _require_square(a: Matrix, what: str) -> int:
    if a.shape[0] != a.shape[1]:
        raise ValueError(f"{what} needs a square matrix, got shape {a.shape}")
    return a.shape[0]


def _normalize_rat(value: Entry) -> Entry:
    if isinstance(value, Fraction) and value.denominator == 1:
        return int(value)
    return value


def _det_bareiss(m: list[list[int]]) -> int:
    """Fraction-free elimination; every interior division is exact."""
    n = len(m)
    sign = 1
    prev = 1
    for r in range(n - 1):
        if m[r][r] == 0:
            for rr in range(r + 1, n):
                if m[rr][r] != 0:
                    m[r], m[rr] = m[rr], m[r]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(r + 1, n):
            for j in range(r + 1, n):
                m[i][j] = (m[i][j] * m[r][r] - m[i][r] * m[r][j]) // prev
            m[i][r] = 0
        prev = m[r][r]
    return sign * m[n - 1][n - 1]


def _det_rational(m: list[list[Fraction]]) -> Fraction:
    n = len(m)
    det = Fraction(1)
    for r in range(n):
        pivot_row = next((rr for rr in range(r, n) if m[rr][r] != 0), None)
        if pivot_row is None:
            return Fraction(0)
        if pivot_row != r:
            m[r], m[pivot_row] = m[pivot_row], m[r]
            det = -det
        pivot = m[r][r]
        det *= pivot
        for i in range(r + 1, n):
            factor = m[i][r] / pivot
            if factor == 0:
                continue
            for j in range(r, n):
                m[i][j] -= factor * m[r][j]
    return det


def _det_ring(m: list[list[Entry]]) -> Entry:
    """Determinant over any exact commutative ring.

    Subset dynamic program over column sets: f[S] is the determinant of the
    first |S| rows restricted to the columns in S, built by expansion along
    the last of those rows.  O(n * 2^n) ring operations, fine for the n <= 8
    symbolic matrices this package needs.
    """
    n = len(m)
    f: list[Entry] = [0] * (1 << n)
    f[0] = 1
    for mask in range(1, 1 << n):
        t = mask.bit_count()
        row = m[t - 1]
        sgn = 1 if (t - 1) % 2 == 0 else -1
        acc: Entry = 0
        for j in range(n):
            if mask >> j & 1:
                entry = row[j]
                if entry != 0:
                    acc = acc + sgn * entry * f[mask ^ (1 << j)]
                sgn = -sgn
        f[mask] = acc
    return f[(1 << n) - 1]


def det_exact(m: object) -> Entry:
    """Exact determinant of a square matrix with int/Fraction/UniPoly entries."""
    a = exact_matrix(m)
    n = _require_square(a, "determinant")
    if n == 0:
        return 1
    entries = [[a[i, j] for j in range(n)] for i in range(n)]
    flat = [e for row in entries for e in row]
    if any(isinstance(e, UniPoly) for e in flat):
        return _det_ring(entries)
    if any(isinstance(e, Fraction) for e in flat):
        return _normalize_rat(_det_rational([[Fraction(e) for e in row] for row in entries]))
    return _det_bareiss(entries)


def charpoly_oracle(m: object) -> UniPoly:
    """Characteristic polynomial det(m - x*I) by Faddeev-LeVerrier.

    Exact over arbitrary-precision integers, with every interior division
    checked for exactness.  Deliberately independent of every closed form
    in this package, which is what makes it usable as an oracle: it sees
    only the matrix entries.
    """
    a = exact_matrix(m)
    n = _require_square(a, "characteristic polynomial")
    if n == 0:
        raise ValueError("characteristic polynomial needs dimension >= 1")
    for i in range(n):
        for j in range(n):
            if not isinstance(a[i, j], int):
                raise TypeError("charpoly_oracle expects integer entries")
    ident = identity_matrix(n)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    work = zeros_matrix(n)
    for step in range(1, n + 1):
        work = a @ work + coeffs[n - step + 1] * ident
        trace_step = (a * work.T).sum()
        quot, rem = divmod(-trace_step, step)
        if rem:
            raise InternalError(f"Faddeev-LeVerrier division not exact at step {step}")
        coeffs[n - step] = quot
    # the recursion yields det(x*I - m); flip to det(m - x*I)
    if n % 2:
        coeffs = [-c for c in coeffs]
    return UniPoly(coeffs)


def monic_charpoly(p: UniPoly) -> UniPoly:
    """Convert det(M - x*I) to the monic convention det(x*I - M)."""
    return p if p.degree % 2 == 0 else -p


def _minor(entries: list[list[Entry]], drop_row: int, drop_col: int) -> list[list[Entry]]:
    return [
        [e for j, e in enumerate(row) if j != drop_col]
        for i, row in enumerate(entries)
        if i != drop_row
    ]


def adjugate_exact(m: object) -> Matrix:
    """Adjugate (transposed cofactor matrix): m @ adj(m) = det(m) * I.

    That identity holds for singular m too, which is why the adjugate and
    not the inverse is the right tool for symbolic block eliminations.
    Works entrywise over int, Fraction, or UniPoly.
    """
    a = exact_matrix(m)
    n = _require_square(a, "adjugate")
    if n == 0:
        return a.copy()
    out = np.empty((n, n), dtype=object)
    if n == 1:
        out[0, 0] = 1
        return out
    entries = [[a[i, j] for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            sign = 1 if (i + j) % 2 == 0 else -1
            out[j, i] = sign * det_exact(_minor(entries, i, j))
    return out


def inverse_exact(m: object) -> Matrix:
    """Exact inverse with Fraction entries, by Gauss-Jordan elimination."""
    a = exact_matrix(m)
    n = _require_square(a, "inverse")
    rows: list[list[Fraction]] = []
    for i in range(n):
        row = []
        for j in range(n):
            entry = a[i, j]
            if isinstance(entry, UniPoly):
                raise TypeError("inverse_exact supports int and Fraction entries only")
            row.append(Fraction(entry))
        row.extend(Fraction(1 if j == i else 0) for j in range(n))
        rows.append(row)
    for col in range(n):
        pivot_row = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot_row is None:
            raise SingularInput("matrix is singular, no exact inverse")
        rows[col], rows[pivot_row] = rows[pivot_row], rows[col]
        pivot = rows[col][col]
        rows[col] = [v / pivot for v in rows[col]]
        for r in range(n):
            if r == col or rows[r][col] == 0:
                continue
            factor = rows[r][col]
            rows[r] = [v - factor * w for v, w in zip(rows[r], rows[col])]
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = _normalize_rat(rows[i][n + j])
    return out


def sherman_morrison_inverse(
    a: int | Fraction, b: int | Fraction, n: int
) -> tuple[Fraction, Fraction]:
    """Coefficients (a2, b2) with (a*I_n + b*J_n)^-1 = a2*I_n + b2*J_n.

    J is the rank-one update ones @ ones.T of a*I, so the inverse stays in
    the span of I and J: a2 = 1/a, b2 = -b/(a*(a + b*n)).
    """
    a = Fraction(a)
    b = Fraction(b)
    if a == 0:
        raise SingularInput("a = 0: a*I + b*J has no inverse")
    if a + b * n == 0:
        raise SingularInput(f"a + b*n = 0 (a={a}, b={b}, n={n}): a*I + b*J is singular")
    return 1 / a, -b / (a * (a + b * n))


def _check_blocks(A: Matrix, B: Matrix, C: Matrix, D: Matrix) -> tuple[int, int]:
    na = _require_square(A, "top-left block")
    nd = _require_square(D, "bottom-right block")
    if B.shape != (na, nd):
        raise ValueError(f"top-right block must be {na}x{nd}, got {B.shape}")
    if C.shape != (nd, na):
        raise ValueError(f"bottom-left block must be {nd}x{na}, got {C.shape}")
    return na, nd


def schur_block_det(A: object, B: object, C: object, D: object) -> Entry:
    """det [[A, B], [C, D]] as det(D) * det(A - B @ D^-1 @ C).

    The complement is taken with B on the left and C on the right; the
    opposite ordering A - C @ D^-1 @ B gives a different determinant for
    general (non-symmetric) blocks.
    """
    A, B, C, D = (exact_matrix(x) for x in (A, B, C, D))
    na, _ = _check_blocks(A, B, C, D)
    det_d = det_exact(D)
    if det_d == 0:
        raise SingularBlock("det(D) = 0: Schur complement of D undefined")
    if na == 0:
        return det_d
    schur = A - B @ inverse_exact(D) @ C
    return _normalize_rat(Fraction(det_d) * Fraction(det_exact(schur)))


def schur_block_det_adjugate(A: object, B: object, C: object, D: object) -> Entry:
    """Same determinant via det(det(D)*A - B @ adj(D) @ C) / det(D)^(na - 1).

    Stays in integers until the one final division.  For integer blocks
    that division must come out exact; a remainder means the implementation
    is broken, not the input.
    """
    A, B, C, D = (exact_matrix(x) for x in (A, B, C, D))
    na, _ = _check_blocks(A, B, C, D)
    det_d = det_exact(D)
    if det_d == 0:
        raise SingularBlock("det(D) = 0: Schur complement of D undefined")
    if na == 0:
        return det_d
    inner = det_d * A - B @ adjugate_exact(D) @ C
    value = det_exact(inner)
    if na == 1:
        return value
    divisor = det_d ** (na - 1)
    if isinstance(value, int) and isinstance(divisor, int):
        quot, rem = divmod(value, divisor)
        if rem:
            raise InternalError(
                f"adjugate-route division not exact: {value} / {divisor}"
            )
        return quot
    return _normalize_rat(Fraction(value) / Fraction(divisor))
