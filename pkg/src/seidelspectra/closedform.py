"""Closed-form spectra and characteristic polynomials for the family.

Everything here is a formula: spectra of a*I + b*J matrices, spectra of
uniform block matrices, the characteristic polynomial and adjugate of the
negated complete graph, the sandwich product of the coupling block against
that adjugate, and finally the factored characteristic polynomial of the
family's Seidel matrix with its residual cubic.  The verify module checks
each formula against oracles that never look at these functions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple, Sequence, Union

from .errors import DegenerateFamily, UnsupportedShape
from . import cubic
from .family import FamilyParams
from .linalg import Matrix, assemble_blocks, ones_matrix, zeros_matrix
from .polynomial import UniPoly, X

ExactValue = Union[int, Fraction]

__all__ = [
    "ScalarMatrixSpec",
    "CubicRoot",
    "Spectrum",
    "FactoredCharPoly",
    "spectrum_aI_bJ",
    "spectrum_uniform_blocks",
    "uniform_block_matrix",
    "cp_poly",
    "adjugate_negK_closed",
    "sandwich_closed",
    "cubic_s",
    "charpoly_closed",
    "spectrum_closed",
]


def _exact(value: int | Fraction) -> ExactValue:
    f = Fraction(value)
    return int(f) if f.denominator == 1 else f


class ScalarMatrixSpec(NamedTuple):
    """The matrix a*I_n + b*J_n, kept as its two coefficients."""

    a: ExactValue
    b: ExactValue
    n: int

    def realize(self) -> Matrix:
        out = zeros_matrix(self.n)
        for i in range(self.n):
            for j in range(self.n):
                out[i, j] = _exact(self.b + (self.a if i == j else 0))
        return out


class CubicRoot(NamedTuple):
    """One irrational root of an integer cubic, carried symbolically.

    ``index`` selects a root in descending order; the numeric value only
    exists once :meth:`approx` is called, so exact reports stay exact.
    """

    coeffs: tuple[int, int, int, int]
    index: int

    def approx(self, tol: float = 1e-9) -> float:
        return cubic.cubic_roots(self.coeffs, tol)[self.index]


SpectrumValue = Union[int, Fraction, CubicRoot]


def _value_float(value: SpectrumValue, tol: float) -> float:
    if isinstance(value, CubicRoot):
        return value.approx(tol)
    return float(value)


class Spectrum(NamedTuple):
    """Eigenvalues with multiplicities, sorted descending by value."""

    entries: tuple[tuple[SpectrumValue, int], ...]

    @property
    def dimension(self) -> int:
        return sum(mult for _, mult in self.entries)

    def approx(self, tol: float = 1e-9) -> tuple[float, ...]:
        """The full multiset as floats, descending, one entry per eigenvalue."""
        out: list[float] = []
        for value, mult in self.entries:
            out.extend([_value_float(value, tol)] * mult)
        return tuple(sorted(out, reverse=True))


def _canonical_spectrum(
    entries: Sequence[tuple[SpectrumValue, int]], tol: float = 0.0
) -> Spectrum:
    bag: dict[SpectrumValue, int] = {}
    for value, mult in entries:
        if mult == 0:
            continue
        if mult < 0:
            raise ValueError(f"negative multiplicity {mult}")
        if not isinstance(value, CubicRoot):
            value = _exact(value)
        bag[value] = bag.get(value, 0) + mult
    merged: dict[SpectrumValue, int] = {
        v: m for v, m in bag.items() if not isinstance(v, CubicRoot)
    }
    for value, mult in bag.items():
        if not isinstance(value, CubicRoot):
            continue
        host = None
        if tol > 0:
            x = value.approx(tol)
            host = next(
                (v for v in merged if not isinstance(v, CubicRoot)
                 and abs(float(v) - x) <= tol),
                None,
            )
        if host is None:
            merged[value] = merged.get(value, 0) + mult
        else:
            merged[host] += mult
    ordered = sorted(
        merged.items(), key=lambda item: _value_float(item[0], max(tol, 1e-9)),
        reverse=True,
    )
    return Spectrum(tuple(ordered))


def spectrum_aI_bJ(spec: ScalarMatrixSpec) -> Spectrum:
    """Eigenvalues of a*I_n + b*J_n: a + b*n once, a with multiplicity n - 1."""
    if spec.n < 1:
        raise ValueError(f"n must be positive, got {spec.n}")
    return _canonical_spectrum(
        [(_exact(spec.a + spec.b * spec.n), 1), (_exact(spec.a), spec.n - 1)]
    )


def spectrum_uniform_blocks(
    r: int | Fraction,
    d: int | Fraction,
    b: int | Fraction,
    m: int,
    t: int,
) -> Spectrum:
    """Spectrum of the t x t block matrix with diagonal blocks A and b*J_m off it.

    A is any order-m matrix of the form a'*I + b'*J with row sum r and
    secondary eigenvalue d.  Eigenvalues: r + b*m*(t-1) once, r - b*m with
    multiplicity t - 1, and d with multiplicity t*(m-1).  The d-count is
    t*(m-1) and not the swapped m*(t-1): each block contributes its m - 1
    within-block eigenvectors in each of the t block positions, and only
    t*(m-1) makes the multiplicities sum to the dimension m*t.
    """
    if m < 1 or t < 1:
        raise ValueError(f"block order and count must be positive, got m={m}, t={t}")
    r, d, b = _exact(r), _exact(d), _exact(b)
    return _canonical_spectrum(
        [
            (_exact(r + b * m * (t - 1)), 1),
            (_exact(r - b * m), t - 1),
            (d, t * (m - 1)),
        ]
    )


def uniform_block_matrix(
    r: int | Fraction,
    d: int | Fraction,
    b: int | Fraction,
    m: int,
    t: int,
) -> Matrix:
    """Realize the block matrix of :func:`spectrum_uniform_blocks`.

    The diagonal block is the unique a'*I + b'*J of order m with row sum r
    and secondary eigenvalue d, namely d*I + ((r - d)/m)*J.
    """
    if m < 1 or t < 1:
        raise ValueError(f"block order and count must be positive, got m={m}, t={t}")
    diag = ScalarMatrixSpec(_exact(d), _exact((Fraction(r) - Fraction(d)) / m), m).realize()
    off = _exact(b) * ones_matrix(m)
    return assemble_blocks(
        [[diag if i == j else off for j in range(t)] for i in range(t)]
    )


def cp_poly(n: int) -> UniPoly:
    """det(-K_n - x*I) expanded: (1 - x)^(n-1) * (1 - n - x)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return (1 - X) ** (n - 1) * (1 - n - X)


def adjugate_negK_closed(n: int) -> tuple[UniPoly, UniPoly]:
    """Diagonal and off-diagonal entries of adj(-K_n - x*I).

    diag = (1 - x)^(n-2) * (2 - n - x), which is det(-K_(n-1) - x*I); the
    off-diagonal entry is (1 - x)^(n-2) everywhere, with the same sign in
    every position.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    shared = (1 - X) ** (n - 2)
    return shared * (2 - n - X), shared


def sandwich_closed(params: FamilyParams) -> UniPoly:
    """Scalar c(x) with X' @ adj(-K_h - x*I) @ X'^T = c(x) * J.

    All rows of the coupling block are identical, so the product collapses
    to a multiple of the all-ones matrix; with (diag, off) the adjugate
    entries, c = (diag - off)*h + (2p - h)^2 * off, using row sum 2p - h.
    """
    if params.k < 2:
        raise DegenerateFamily(f"k = {params.k}: no coupling block exists for k < 2")
    diag, off = adjugate_negK_closed(params.h)
    return (diag - off) * params.h + (2 * params.p - params.h) ** 2 * off


def cubic_s(params: FamilyParams) -> tuple[int, int, int, int]:
    """Ascending coefficients of the residual cubic s; leading term is -1."""
    if params.k < 2:
        raise DegenerateFamily(f"k = {params.k}: the factored form needs k >= 2")
    h, p, n = params.h, params.p, params.n
    c3 = -1
    c2 = -(2 * h - n + 2 * p - 3)
    c1 = -(2 * h * h - 2 * (h - 1) * n + 2 * (h - 2) * p - 4 * h + 3)
    c0 = (
        2 * h * h
        - (2 * h - 1) * n
        - 2 * (2 * h * h - 2 * h * n - h + 1) * p
        - 2 * h
        + 4 * (h - n) * p * p
        + 1
    )
    return c0, c1, c2, c3


class FactoredCharPoly(NamedTuple):
    """det(S - x*I) = (root1 - x)^e1 * (root2 - x)^e2 * s(x)."""

    root1: int
    e1: int
    root2: int
    e2: int
    cubic: tuple[int, int, int, int]

    @property
    def degree(self) -> int:
        return self.e1 + self.e2 + 3

    def expand(self) -> UniPoly:
        return (
            (self.root1 - X) ** self.e1
            * (self.root2 - X) ** self.e2
            * UniPoly(self.cubic)
        )


def charpoly_closed(params: FamilyParams) -> FactoredCharPoly:
    """Factored characteristic polynomial of the family's Seidel matrix.

    The linear factors contribute eigenvalue 1 - 2p with multiplicity
    k - 2 = (n - h)/p - 1 and eigenvalue 1 with multiplicity n - k - 1 =
    n - 2 - (n - h)/p; the remaining three eigenvalues are the roots of the
    cubic s.  Note the first eigenvalue really is 1 - 2p: the factor
    (1 - 2p - x) vanishes there, and the sign-flipped label 2p - 1 is a
    different number for every p >= 1.
    """
    if params.k < 2:
        raise DegenerateFamily(f"k = {params.k}: the factored form needs k >= 2")
    e1 = params.k - 2
    e2 = params.n - params.k - 1
    if e2 < 0:
        raise UnsupportedShape(
            f"exponent n - k - 1 = {e2} is negative for params {params}"
        )
    return FactoredCharPoly(
        root1=1 - 2 * params.p, e1=e1, root2=1, e2=e2, cubic=cubic_s(params)
    )


def spectrum_closed(params: FamilyParams, tol: float = 1e-9) -> Spectrum:
    """Full eigenvalue multiset from the factored form.

    Rational cubic roots come back exact and merge exactly with the linear
    factors' eigenvalues; irrational roots are carried as CubicRoot
    descriptors and merge with a rational eigenvalue only when closer
    than ``tol``.
    """
    fac = charpoly_closed(params)
    entries: list[tuple[SpectrumValue, int]] = [
        (fac.root1, fac.e1),
        (fac.root2, fac.e2),
    ]
    for index, value in enumerate(cubic.cubic_root_values(fac.cubic, tol)):
        if isinstance(value, float):
            entries.append((CubicRoot(fac.cubic, index), 1))
        else:
            entries.append((value, 1))
    return _canonical_spectrum(entries, tol)
