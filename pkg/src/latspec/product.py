"""Tensor structure of product lattices.

The Hamiltonian of a product lattice is the Kronecker sum of the factor
Hamiltonians under the identification e_(x1,x2) <-> e_x1 (x) e_x2, its
minimal-power matrix entries obey a shuffle (binomial) formula, and the
vacuum spectral measure of the product is the classical convolution of
the factor measures.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .diamond import OperatorMatrix, hamiltonian
from .lattice import FiniteLattice, build_product
from .spectral import MomentSequence, SpectralMeasure

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class TensorIdentification:
    """Bijection between product-lattice ids and component id pairs.

    Product elements are ordered lexicographically, so the maps are pure
    index arithmetic; ranks add across the identification.
    """

    n1: int
    n2: int

    def combine(self, x1: int, x2: int) -> int:
        if not (0 <= x1 < self.n1 and 0 <= x2 < self.n2):
            raise ValueError(f"pair ({x1}, {x2}) out of range")
        return x1 * self.n2 + x2

    def split(self, x: int) -> tuple[int, int]:
        if not 0 <= x < self.n1 * self.n2:
            raise ValueError(f"id {x} out of range")
        return divmod(x, self.n2)


def kronecker_sum(H1: OperatorMatrix, H2: OperatorMatrix) -> OperatorMatrix:
    """H1 (x) I + I (x) H2 on the lexicographic product basis."""
    ident = TensorIdentification(H1.dim, H2.dim)
    entries = []
    for row, col, value in H1.entries():
        for x2 in range(H2.dim):
            entries.append((ident.combine(row, x2), ident.combine(col, x2), value))
    for row, col, value in H2.entries():
        for x1 in range(H1.dim):
            entries.append((ident.combine(x1, row), ident.combine(x1, col), value))
    return OperatorMatrix.from_entries(
        H1.dim * H2.dim, entries, symmetric=H1.symmetric and H2.symmetric
    )


def kronecker_sum_check(L1: FiniteLattice, L2: FiniteLattice) -> bool:
    """Build the product Hamiltonian from the product lattice's own diamond
    product and independently as a Kronecker sum, then compare entry for
    entry.  Exact equality or bust."""
    direct = hamiltonian(build_product(L1, L2))
    assembled = kronecker_sum(hamiltonian(L1), hamiltonian(L2))
    if direct == assembled:
        return True
    direct_entries = dict(((r, c), v) for r, c, v in direct.entries())
    assembled_entries = dict(((r, c), v) for r, c, v in assembled.entries())
    for key in sorted(set(direct_entries) | set(assembled_entries)):
        a = direct_entries.get(key, Fraction(0))
        b = assembled_entries.get(key, Fraction(0))
        if a != b:
            log.warning("Kronecker sum mismatch at %s: direct %s vs assembled %s", key, a, b)
            break
    return False


def shuffle_entry(
    L1: FiniteLattice,
    L2: FiniteLattice,
    x: tuple[int, int],
    y: tuple[int, int],
    *,
    check: bool = True,
    product_hamiltonian: OperatorMatrix | None = None,
) -> Fraction:
    """Minimal-power Hamiltonian entry of a product lattice via the shuffle
    formula:

        <e_x, H^d e_y> = C(d, d1) <e_x1, H1^d1 e_y1> <e_x2, H2^d2 e_y2>

    with d1, d2 the component rank gaps and d = d1 + d2 (the entry at any
    other power with the same endpoints is forced to zero or involves
    non-minimal walks, which are outside this formula's scope).  With
    check=True the entry is also computed directly on the product lattice
    and the two values are asserted equal.
    """
    (x1, x2), (y1, y2) = x, y
    if not (L1.leq(x1, y1) and L2.leq(x2, y2)):
        raise ValueError(f"{x} is not componentwise below {y}")
    d1 = L1.rank[y1] - L1.rank[x1]
    d2 = L2.rank[y2] - L2.rank[x2]
    value = (
        comb(d1 + d2, d1)
        * hamiltonian(L1).power_entry(x1, y1, d1)
        * hamiltonian(L2).power_entry(x2, y2, d2)
    )
    if check:
        if product_hamiltonian is None:
            product_hamiltonian = hamiltonian(build_product(L1, L2))
        ident = TensorIdentification(L1.n, L2.n)
        direct = product_hamiltonian.power_entry(
            ident.combine(x1, x2), ident.combine(y1, y2), d1 + d2
        )
        if direct != value:
            raise AssertionError(
                f"shuffle formula {value} disagrees with direct entry {direct} for {x} -> {y}"
            )
    return value


def convolve_moments(m1: MomentSequence, m2: MomentSequence, K: int) -> MomentSequence:
    """Binomial convolution c_k = sum_j C(k, j) m1_j m2_{k-j}, the moment
    law of a sum of commuting independent parts."""
    if m1.order < K or m2.order < K:
        raise ValueError(f"need moments up to order {K} on both inputs")
    values = tuple(
        sum((comb(k, j) * m1[j] * m2[k - j] for j in range(k + 1)), Fraction(0))
        for k in range(K + 1)
    )
    return MomentSequence(values)


def convolve_measures(
    mu1: SpectralMeasure, mu2: SpectralMeasure, *, merge_tol: float = 1e-9
) -> SpectralMeasure:
    """Convolution of finitely supported measures: atoms at all pairwise
    sums, weights multiplied; atoms closer than merge_tol are merged (float
    eigenvalues of distinct factors can collide, e.g. integer spectra)."""
    raw = sorted(
        (l1 + l2, w1 * w2) for l1, w1 in mu1.atoms for l2, w2 in mu2.atoms
    )
    merged: list[list[float]] = []
    for l, w in raw:
        if merged and l - merged[-1][0] <= merge_tol:
            total = merged[-1][1] + w
            merged[-1][0] = (merged[-1][0] * merged[-1][1] + l * w) / total
            merged[-1][1] = total
        else:
            merged.append([l, w])
    return SpectralMeasure(tuple((l, w) for l, w in merged))
