"""Determinant recurrences, vacuum resolvents, moments, and spectral measures.

Everything downstream of the Jacobi data is exact rational arithmetic
except the eigendecomposition, whose eigenvalues and weights are floats.
The characteristic polynomials follow the continuant recurrence

    D_{k+1}(t) = D_k(t) - beta_k^2 t^2 D_{k-1}(t),   D_{-1} = D_0 = 1,

for D_k(t) = det(I - t J_k) of the leading (k+1) x (k+1) minor.  The
vacuum resolvent sum_k t^k <e_0, J^k e_0> equals, by Cramer's rule, the
complementary-minor quotient det(I - t J') / det(I - t J) with J' the
block obtained by deleting the *first* row and column (coefficients
beta_1..beta_{r-1}).  For palindromic coefficient sequences, such as every
subset lattice, that numerator coincides with the leading minor D_{r-1}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping

import numpy as np

from .diamond import OperatorMatrix, basis_vector
from .gf import gaussian_binomial, q_int
from .lattice import FiniteLattice
from .radial import JacobiData, RankLayers


class RationalPolynomial:
    """Polynomial with exact rational coefficients, ascending degree.

    Canonical form: trailing zeros trimmed, so the zero polynomial is the
    empty coefficient tuple and otherwise the last coefficient is nonzero.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c) -> "RationalPolynomial":
        return cls((c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, t) -> Fraction:
        out = Fraction(0)
        for c in reversed(self.coeffs):
            out = out * t + c
        return out

    def __add__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RationalPolynomial(out)

    def __neg__(self) -> "RationalPolynomial":
        return RationalPolynomial(tuple(-c for c in self.coeffs))

    def __sub__(self, other: "RationalPolynomial") -> "RationalPolynomial":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, RationalPolynomial):
            if self.is_zero() or other.is_zero():
                return RationalPolynomial()
            out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
            return RationalPolynomial(out)
        return RationalPolynomial(tuple(Fraction(other) * c for c in self.coeffs))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalPolynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"RationalPolynomial({[str(c) for c in self.coeffs]})"

    def divmod(self, other: "RationalPolynomial"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        quot = [Fraction(0)] * max(len(rem) - len(other.coeffs) + 1, 0)
        d = other.coeffs
        while len(rem) >= len(d) and any(rem):
            if rem[-1] == 0:
                rem.pop()
                continue
            shift = len(rem) - len(d)
            factor = rem[-1] / d[-1]
            quot[shift] = factor
            for i, c in enumerate(d):
                rem[shift + i] -= factor * c
            rem.pop()
        return RationalPolynomial(quot), RationalPolynomial(rem)

    @staticmethod
    def gcd(a: "RationalPolynomial", b: "RationalPolynomial") -> "RationalPolynomial":
        """Monic greatest common divisor (Euclid over the rationals)."""
        while not b.is_zero():
            _, r = a.divmod(b)
            a, b = b, r
        if a.is_zero():
            return a
        lead = a.coeffs[-1]
        return RationalPolynomial(tuple(c / lead for c in a.coeffs))


_ONE = RationalPolynomial((1,))
_T2 = RationalPolynomial((0, 0, 1))


class RationalFunction:
    """Quotient of rational polynomials normalized so denominator(0) = 1."""

    __slots__ = ("numerator", "denominator", "reduced")

    def __init__(self, numerator: RationalPolynomial, denominator: RationalPolynomial, reduced: bool = False):
        if denominator.is_zero():
            raise ZeroDivisionError("zero denominator")
        c = denominator.coefficient(0)
        if c == 0:
            raise ValueError("denominator must not vanish at t = 0")
        if c != 1:
            numerator = numerator * (1 / c)
            denominator = denominator * (1 / c)
        self.numerator = numerator
        self.denominator = denominator
        self.reduced = reduced

    def reduce(self) -> "RationalFunction":
        g = RationalPolynomial.gcd(self.numerator, self.denominator)
        if g.is_zero() or g.degree == 0:
            return RationalFunction(self.numerator, self.denominator, reduced=True)
        num, _ = self.numerator.divmod(g)
        den, _ = self.denominator.divmod(g)
        return RationalFunction(num, den, reduced=True)

    def series(self, order: int) -> tuple[Fraction, ...]:
        """Taylor coefficients c_0..c_order at t = 0 (denominator(0) = 1)."""
        out: list[Fraction] = []
        den = self.denominator
        for k in range(order + 1):
            c = self.numerator.coefficient(k)
            for j in range(1, min(k, den.degree) + 1):
                c -= den.coefficient(j) * out[k - j]
            out.append(c)
        return tuple(out)

    def __call__(self, t) -> Fraction:
        return self.numerator(t) / self.denominator(t)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.numerator * other.denominator == other.numerator * self.denominator

    def __repr__(self) -> str:
        return f"RationalFunction({self.numerator!r} / {self.denominator!r})"


@dataclass(frozen=True)
class MomentSequence:
    """Vacuum moments m_0..m_K as exact rationals; m_0 is always 1."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        if not self.values or self.values[0] != 1:
            raise ValueError("a moment sequence starts with m_0 = 1")

    def __getitem__(self, k: int) -> Fraction:
        return self.values[k]

    def __len__(self) -> int:
        return len(self.values)

    @property
    def order(self) -> int:
        return len(self.values) - 1


@dataclass(frozen=True)
class SpectralMeasure:
    """Finitely supported probability measure: (eigenvalue, weight) pairs
    sorted by eigenvalue.  Weights are non-negative, sum to 1, and the mean
    is zero (zero-diagonal Jacobi matrices are centered); both facts are
    enforced at 1e-10."""

    atoms: tuple[tuple[float, float], ...]

    def __post_init__(self):
        eigs = [a[0] for a in self.atoms]
        if eigs != sorted(eigs):
            raise ValueError("atoms must be sorted by eigenvalue")
        weights = [a[1] for a in self.atoms]
        if any(w < -1e-12 for w in weights):
            raise ValueError("weights must be non-negative")
        if abs(sum(weights) - 1.0) > 1e-10:
            raise ValueError(f"weights sum to {sum(weights)}, not 1")
        mean = sum(l * w for l, w in self.atoms)
        if abs(mean) > 1e-10:
            raise ValueError(f"first moment {mean} is not zero")

    def moment(self, k: int) -> float:
        return sum(w * l**k for l, w in self.atoms)

    def to_document(self) -> dict:
        return {"atoms": [[l, w] for l, w in self.atoms]}

    @classmethod
    def from_document(cls, document: Mapping) -> "SpectralMeasure":
        atoms = tuple((float(l), float(w)) for l, w in document["atoms"])
        return cls(atoms)


# ---------------------------------------------------------------------------
# Operations
# ---------------------------------------------------------------------------


def _continuant(beta_sq: tuple[Fraction, ...]) -> list[RationalPolynomial]:
    out = [_ONE, _ONE]
    for b in beta_sq:
        out.append(out[-1] - b * (_T2 * out[-2]))
    return out


def determinant_polynomials(J: JacobiData) -> tuple[RationalPolynomial, ...]:
    """The sequence D_{-1}, D_0, ..., D_r; index k lives at position k + 1."""
    return tuple(_continuant(J.beta_sq))


def resolvent(J: JacobiData) -> RationalFunction:
    """Vacuum resolvent: its Taylor coefficients are the vacuum moments.

    Numerator: det(I - tJ') for the minor J' deleting the first row and
    column (coefficients beta_1..beta_{r-1}); denominator: det(I - tJ).
    Returns the constant function 1 when r = 0.
    """
    if J.r == 0:
        return RationalFunction(_ONE, _ONE, reduced=True)
    numerator = _continuant(J.beta_sq[1:])[-1]
    denominator = _continuant(J.beta_sq)[-1]
    return RationalFunction(numerator, denominator)


def vacuum_moments_full(L: FiniteLattice, H: OperatorMatrix, K: int) -> MomentSequence:
    """<e_bottom, H^k e_bottom> for k = 0..K, by iterated sparse application."""
    if K < 0:
        raise ValueError("K must be non-negative")
    values = [Fraction(1)]
    v = basis_vector(0)
    for _ in range(K):
        v = H.apply(v)
        values.append(v.get(0, Fraction(0)))
    return MomentSequence(tuple(values))


def vacuum_moments_radial(J: JacobiData, K: int) -> MomentSequence:
    """Moments of the Jacobi matrix at its first basis vector, computed as
    weighted Dyck-path sums: a conjugated transfer step carries beta_k^2 on
    the way up and 1 on the way down, so no square roots ever appear."""
    if K < 0:
        raise ValueError("K must be non-negative")
    r = J.r
    v = [Fraction(0)] * (r + 1)
    v[0] = Fraction(1)
    values = [Fraction(1)]
    for _ in range(K):
        nxt = [Fraction(0)] * (r + 1)
        for i in range(r + 1):
            if i > 0 and v[i - 1]:
                nxt[i] += J.beta_sq[i - 1] * v[i - 1]
            if i < r and v[i + 1]:
                nxt[i] += v[i + 1]
        v = nxt
        values.append(v[0])
    return MomentSequence(tuple(values))


def eigendecompose(J: JacobiData) -> SpectralMeasure:
    """Eigenvalues of the symmetric tridiagonal matrix with zero diagonal and
    off-diagonals beta_k; the weight of an eigenvalue is the squared first
    component of its normalized eigenvector."""
    r = J.r
    if r == 0:
        return SpectralMeasure(((0.0, 1.0),))
    T = np.zeros((r + 1, r + 1))
    for k, b in enumerate(J.beta):
        T[k, k + 1] = T[k + 1, k] = b
    eigenvalues, eigenvectors = np.linalg.eigh(T)
    atoms = tuple(
        (float(eigenvalues[j]), float(eigenvectors[0, j] ** 2)) for j in range(r + 1)
    )
    return SpectralMeasure(atoms)


def boolean_closed_form(n: int) -> SpectralMeasure:
    """The binomial measure: eigenvalue n/2 - j with weight C(n, j) / 2^n."""
    if n < 0:
        raise ValueError("n must be non-negative")
    atoms = tuple((n / 2 - j, comb(n, j) / 2**n) for j in range(n, -1, -1))
    return SpectralMeasure(atoms)


def closed_form_beta(family: str, k: int, *, n: int | None = None, r: int | None = None, q: int | None = None) -> tuple[Fraction, float]:
    """Closed-form Jacobi coefficient for a built-in family.

    Returns (beta_k^2 exact, beta_k float).  Families:

    * boolean(n):     beta_k^2 = (k+1)(n-k)/4,                 0 <= k <= n-1
    * projective(r,q): beta_k^2 = q^{2k} [k+1]_q [r-k]_q / 4,   0 <= k <= r-1
    * affine(r,q):    beta_0^2 = q^r / 4 for the adjoined-bottom level, and
                      beta_k^2 = (q-1)^2 q^{2k-1} [k]_q [r-k+1]_q / 4 for
                      1 <= k <= r (the flat-to-flat levels; the k = 0 case
                      is outside the flat-counting formula because the
                      bottom is adjoined rather than a flat).
    """
    if family == "boolean":
        if n is None:
            raise ValueError("boolean family needs n")
        if not 0 <= k <= n - 1:
            raise ValueError(f"k = {k} out of range for boolean({n})")
        bsq = Fraction((k + 1) * (n - k), 4)
    elif family == "projective":
        if r is None or q is None:
            raise ValueError("projective family needs r and q")
        if not 0 <= k <= r - 1:
            raise ValueError(f"k = {k} out of range for projective({r},{q})")
        bsq = Fraction(q ** (2 * k) * q_int(k + 1, q) * q_int(r - k, q), 4)
    elif family == "affine":
        if r is None or q is None:
            raise ValueError("affine family needs r and q")
        if not 0 <= k <= r:
            raise ValueError(f"k = {k} out of range for affine({r},{q})")
        if k == 0:
            bsq = Fraction(q**r, 4)
        else:
            bsq = Fraction((q - 1) ** 2 * q ** (2 * k - 1) * q_int(k, q) * q_int(r - k + 1, q), 4)
    else:
        raise ValueError(f"unknown family {family!r}")
    return bsq, math.sqrt(bsq)


def _jacobi_from_closed_form(r: int, sizes: list[int], W: list[int]) -> JacobiData:
    layers = RankLayers(tuple(sizes))
    beta_sq = tuple(Fraction(W[k] * W[k], 4 * sizes[k] * sizes[k + 1]) for k in range(r))
    return JacobiData(r, beta_sq, tuple(W), layers)


def boolean_jacobi(n: int) -> JacobiData:
    """Exact Jacobi data of the subset lattice without building it."""
    sizes = [comb(n, k) for k in range(n + 1)]
    W = [comb(n, k) * (n - k) for k in range(n)]
    return _jacobi_from_closed_form(n, sizes, W)


def projective_jacobi(r: int, q: int) -> JacobiData:
    """Exact Jacobi data of the subspace lattice of F_q^r: layer k counts
    (r choose k)_q, and each cover at level k carries weight q^k."""
    sizes = [gaussian_binomial(r, k, q) for k in range(r + 1)]
    W = [gaussian_binomial(r, k, q) * q_int(r - k, q) * q**k for k in range(r)]
    return _jacobi_from_closed_form(r, sizes, W)


def affine_jacobi(r: int, q: int) -> JacobiData:
    """Exact Jacobi data of the affine-flat lattice with adjoined bottom.

    Level 0 pairs the bottom with the q^r points (weight 1 per point);
    level k >= 1 pairs (k-1)-flats with k-flats, each such cover carrying
    weight q^{k-1}(q - 1), the number of points gained."""
    m = [q ** (r - k) * gaussian_binomial(r, k, q) for k in range(r + 1)]
    sizes = [1] + m
    W = [q**r]
    for k in range(1, r + 1):
        W.append(m[k - 1] * q_int(r - k + 1, q) * q ** (k - 1) * (q - 1))
    return _jacobi_from_closed_form(r + 1, sizes, W)
