"""Rank layers and the radial Jacobi compression.

The radial subspace is spanned by the normalized rank-layer sums; the
compression of the Hamiltonian to it is tridiagonal with zero diagonal.
All computations here use the *unnormalized* layer sums s_k so that every
quantity stays an exact rational: the off-diagonal coefficients enter as

    beta_k^2 = <s_k, H s_{k+1}>^2 / (n_k * n_{k+1}),

which avoids the square roots of the normalized basis.  Floats appear
only in the derived `beta` view.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .diamond import OperatorMatrix, hamiltonian
from .lattice import FiniteLattice


@dataclass(frozen=True)
class RankLayers:
    """Layer sizes n_k for k = 0..r."""

    sizes: tuple[int, ...]

    def __post_init__(self):
        if not self.sizes or any(s <= 0 for s in self.sizes):
            raise ValueError("layer sizes must be positive and start at rank 0")

    @property
    def r(self) -> int:
        return len(self.sizes) - 1

    @property
    def total(self) -> int:
        return sum(self.sizes)

    def __getitem__(self, k: int) -> int:
        return self.sizes[k]


@dataclass(frozen=True)
class JacobiData:
    """Radial Jacobi coefficients of a lattice.

    beta_sq[k] is the exact square of the k-th off-diagonal coefficient,
    W[k] the integer cover weight sum feeding it, layers the rank profile.
    A rank-0 lattice has r = 0 and no coefficients.  Boundary conventions:
    coefficients exist for 0 <= k <= r-1 only.
    """

    r: int
    beta_sq: tuple[Fraction, ...]
    W: tuple[int, ...]
    layers: RankLayers

    def __post_init__(self):
        if self.r != self.layers.r:
            raise ValueError("top rank inconsistent with layer count")
        if len(self.beta_sq) != self.r or len(self.W) != self.r:
            raise ValueError("expected one coefficient per adjacent layer pair")
        if any(b < 0 for b in self.beta_sq):
            raise ValueError("beta squares must be non-negative")

    @property
    def beta(self) -> tuple[float, ...]:
        return tuple(math.sqrt(b) for b in self.beta_sq)


@dataclass(frozen=True)
class InvarianceReport:
    """Whether the radial subspace is invariant under the Hamiltonian.

    When it is not, failing_level is the first k at which H s_k leaves
    span{s_{k-1}, s_{k+1}} and residual_support lists the element ids
    carrying the off-radial residual at that level.
    """

    invariant: bool
    failing_level: int | None
    residual_support: tuple[int, ...]


def rank_layers(L: FiniteLattice) -> RankLayers:
    return RankLayers(L.layer_sizes())


def cover_weight_sums(L: FiniteLattice) -> tuple[int, ...]:
    """W_k = sum over covers x < y with rank(x) = k of (a(y) - a(x)),
    where a(.) counts atoms below."""
    W = [0] * L.top_rank
    for x, y in L.covers():
        W[L.rank[x]] += L.count_atoms_below(y) - L.count_atoms_below(x)
    return tuple(W)


def jacobi_from_formula(L: FiniteLattice) -> JacobiData:
    """Jacobi data via the combinatorial formula beta_k^2 = W_k^2 / (4 n_k n_{k+1})."""
    layers = rank_layers(L)
    W = cover_weight_sums(L)
    beta_sq = tuple(
        Fraction(W[k] * W[k], 4 * layers[k] * layers[k + 1]) for k in range(layers.r)
    )
    return JacobiData(layers.r, beta_sq, W, layers)


def _layer_sum(vec: dict[int, Fraction], layer: tuple[int, ...]) -> Fraction:
    return sum((vec.get(x, Fraction(0)) for x in layer), Fraction(0))


def jacobi_from_compression(L: FiniteLattice, H: OperatorMatrix | None = None) -> JacobiData:
    """Jacobi data by compressing H to the radial subspace.

    Computes <s_k, H s_{k+1}> exactly on unnormalized layer sums and squares
    it; also verifies that the compression diagonal <s_k, H s_k> vanishes,
    which must hold for any graded lattice.  The integer W is recovered as
    twice the inner product (every entry of H is a half-integer).
    """
    if H is None:
        H = hamiltonian(L)
    layers = rank_layers(L)
    images = []
    for k in range(layers.r + 1):
        s_k = {x: Fraction(1) for x in L.layers[k]}
        images.append(H.apply(s_k))
    for k in range(layers.r + 1):
        diag = _layer_sum(images[k], L.layers[k])
        if diag != 0:
            raise ArithmeticError(
                f"nonzero radial diagonal {diag} at level {k}: the lattice is not graded "
                "or the Hamiltonian is corrupt"
            )
    beta_sq = []
    W = []
    for k in range(layers.r):
        inner = _layer_sum(images[k + 1], L.layers[k])
        beta_sq.append(inner * inner / (layers[k] * layers[k + 1]))
        doubled = 2 * inner
        if doubled.denominator != 1:
            raise ArithmeticError(f"cover weight sum 2<s_k, H s_(k+1)> = {doubled} is not an integer")
        W.append(int(doubled))
    return JacobiData(layers.r, tuple(beta_sq), tuple(W), layers)


def radial_invariance(L: FiniteLattice, H: OperatorMatrix | None = None) -> InvarianceReport:
    """Exact test of whether H maps each layer sum into the span of the
    adjacent layer sums, i.e. whether H s_k is constant on each adjacent
    layer.  No tolerances: coefficients are rationals."""
    if H is None:
        H = hamiltonian(L)
    r = L.top_rank
    for k in range(r + 1):
        s_k = {x: Fraction(1) for x in L.layers[k]}
        image = H.apply(s_k)
        residual = dict(image)
        for kk in (k - 1, k + 1):
            if 0 <= kk <= r:
                layer = L.layers[kk]
                c = _layer_sum(image, layer) / len(layer)
                for x in layer:
                    val = residual.get(x, Fraction(0)) - c
                    if val:
                        residual[x] = val
                    elif x in residual:
                        del residual[x]
        if residual:
            return InvarianceReport(False, k, tuple(sorted(residual)))
    return InvarianceReport(True, None, ())
