"""The disjointness product on a lattice basis and its atom operators.

For lattice elements x, y the product is x ∨ y when x ∧ y is the bottom
and the algebra zero otherwise.  The zero is the zero *vector* of the
free span of lattice elements; it is distinct from the lattice bottom,
which acts as the multiplicative unit.  Left multiplication by an atom
raises rank by exactly one (semimodularity), which makes the atom
operators a creation/annihilation system and the summed Hamiltonian
rank-bipartite.

All matrices are exact: entries are `fractions.Fraction`.
"""

from __future__ import annotations

from bisect import bisect_left
from fractions import Fraction
from typing import Iterable, Iterator, Mapping

from .lattice import FiniteLattice, SizeBoundError


class _AlgebraZero:
    """Singleton sentinel for the vector-space zero. Never a lattice element."""

    _instance = None
    __slots__ = ()

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "0"

    def __bool__(self) -> bool:
        return False


ZERO = _AlgebraZero()

DiamondResult = int | _AlgebraZero


def diamond(L: FiniteLattice, x: int, y: int) -> DiamondResult:
    """x ∨ y when x ∧ y is the bottom, else the algebra zero.

    Commutative and unital (the bottom is the unit).  The bilinear
    extension to the span of the basis is associative exactly when the
    lattice is modular: Boolean, uniform, and projective lattices admit no
    associativity violation, while affine lattices do (two parallel lines
    meet at the adjoined bottom, so their product survives where a
    grouping through their common span would vanish).
    """
    return L.join(x, y) if L.meet(x, y) == 0 else ZERO


def _diamond_absorbing(L: FiniteLattice, u, v):
    if u is ZERO or v is ZERO:
        return ZERO
    return diamond(L, u, v)


def nonassociativity_witness(L: FiniteLattice) -> tuple[int, int, int] | None:
    """Exhaustive search for a triple with (x ⋄ y) ⋄ z != x ⋄ (y ⋄ z).

    Returns the lexicographically first witness, or None when the product
    is associative on the basis (hence, by bilinearity, on the whole span).
    """
    for x in range(L.n):
        for y in range(L.n):
            xy = diamond(L, x, y)
            for z in range(L.n):
                lhs = _diamond_absorbing(L, xy, z)
                rhs = _diamond_absorbing(L, x, diamond(L, y, z))
                if lhs is not rhs and lhs != rhs:
                    return (x, y, z)
    return None


def diamond_table(L: FiniteLattice, *, limit: int = 64) -> list[list]:
    """Full product table (list of rows); entries are element ids or ZERO."""
    if L.n > limit:
        raise SizeBoundError(f"product tables are limited to {limit} elements")
    return [[diamond(L, x, y) for y in range(L.n)] for x in range(L.n)]


# ---------------------------------------------------------------------------
# Sparse exact matrices
# ---------------------------------------------------------------------------

Vector = dict[int, Fraction]


def basis_vector(i: int) -> Vector:
    return {i: Fraction(1)}


class OperatorMatrix:
    """Column-sparse matrix over the rationals, indexed by lattice elements.

    Columns hold (row, value) pairs with rows ascending and values nonzero,
    which fixes a canonical entry order (col, then row) for serialization.
    Immutable after construction; `apply` is pure.
    """

    __slots__ = ("dim", "_cols", "symmetric")

    def __init__(self, dim: int, cols: tuple, symmetric: bool = False):
        self.dim = dim
        self._cols = cols
        self.symmetric = symmetric

    @classmethod
    def from_entries(
        cls,
        dim: int,
        entries: Iterable[tuple[int, int, Fraction]],
        symmetric: bool = False,
    ) -> "OperatorMatrix":
        cols: list[dict[int, Fraction]] = [{} for _ in range(dim)]
        for row, col, value in entries:
            if not (0 <= row < dim and 0 <= col < dim):
                raise ValueError(f"entry ({row}, {col}) out of range for dim {dim}")
            cols[col][row] = cols[col].get(row, Fraction(0)) + Fraction(value)
        frozen = tuple(
            tuple(sorted((r, v) for r, v in col.items() if v != 0)) for col in cols
        )
        M = cls(dim, frozen, symmetric)
        if symmetric:
            for row, col, value in M.entries():
                if M.entry(col, row) != value:
                    raise ValueError(f"matrix is not symmetric at ({row}, {col})")
        return M

    def entry(self, row: int, col: int) -> Fraction:
        col_entries = self._cols[col]
        i = bisect_left(col_entries, row, key=lambda e: e[0])
        if i < len(col_entries) and col_entries[i][0] == row:
            return col_entries[i][1]
        return Fraction(0)

    def entries(self) -> Iterator[tuple[int, int, Fraction]]:
        """All nonzero entries, sorted by (col, row)."""
        for col, col_entries in enumerate(self._cols):
            for row, value in col_entries:
                yield row, col, value

    def nnz(self) -> int:
        return sum(len(c) for c in self._cols)

    def apply(self, vec: Mapping[int, Fraction]) -> Vector:
        out: Vector = {}
        for col, coef in vec.items():
            if coef == 0:
                continue
            for row, value in self._cols[col]:
                acc = out.get(row, Fraction(0)) + coef * value
                if acc:
                    out[row] = acc
                elif row in out:
                    del out[row]
        return out

    def power_entry(self, row: int, col: int, power: int) -> Fraction:
        """<e_row, M^power e_col>, by repeated sparse application."""
        v: Vector = basis_vector(col)
        for _ in range(power):
            v = self.apply(v)
        return v.get(row, Fraction(0))

    def transpose(self) -> "OperatorMatrix":
        return OperatorMatrix.from_entries(
            self.dim, ((c, r, v) for r, c, v in self.entries()), self.symmetric
        )

    def __add__(self, other: "OperatorMatrix") -> "OperatorMatrix":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        merged = list(self.entries()) + list(other.entries())
        return OperatorMatrix.from_entries(self.dim, merged)

    def scale(self, c: Fraction) -> "OperatorMatrix":
        c = Fraction(c)
        return OperatorMatrix.from_entries(
            self.dim, ((r, col, c * v) for r, col, v in self.entries())
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OperatorMatrix):
            return NotImplemented
        return self.dim == other.dim and self._cols == other._cols

    def __repr__(self) -> str:
        return f"OperatorMatrix(dim={self.dim}, nnz={self.nnz()})"

    def to_dense(self) -> list[list[Fraction]]:
        dense = [[Fraction(0)] * self.dim for _ in range(self.dim)]
        for row, col, value in self.entries():
            dense[row][col] = value
        return dense

    def to_document(self) -> dict:
        return {
            "dim": self.dim,
            "entries": [[r, c, str(v)] for r, c, v in self.entries()],
        }


def creation_operator(L: FiniteLattice, a: int) -> OperatorMatrix:
    """Left multiplication by the atom a: column x holds a single 1 at row
    a ⋄ x when the product is a lattice element, and is empty otherwise."""
    if a not in L.atoms:
        raise ValueError(f"element {a} is not an atom")
    entries = []
    for x in range(L.n):
        y = diamond(L, a, x)
        if y is not ZERO:
            entries.append((y, x, Fraction(1)))
    return OperatorMatrix.from_entries(L.n, entries)


def annihilation_operator(L: FiniteLattice, a: int) -> OperatorMatrix:
    """Adjoint of the creation operator, built directly from its defining
    sum: column y collects every x with x ∨ a = y and a ∧ x = bottom.  This
    is deliberately not implemented as transpose(creation) so the two
    constructions can cross-check."""
    if a not in L.atoms:
        raise ValueError(f"element {a} is not an atom")
    entries = []
    for y in range(L.n):
        for x in L.elements_below(y):
            if L.meet(a, x) == 0 and L.join(a, x) == y:
                entries.append((x, y, Fraction(1)))
    return OperatorMatrix.from_entries(L.n, entries)


def hamiltonian(L: FiniteLattice, method: str = "atoms") -> OperatorMatrix:
    """The symmetric operator (1/2) * sum over atoms of (L_a + L_a^t).

    method="atoms" assembles atom by atom from the creation operators;
    method="covers" uses the equivalent cover-counting rule: a cover x < y
    contributes (atoms below y - atoms below x)/2 at (y, x) and (x, y).
    The two assemblies agree entry for entry.
    """
    half = Fraction(1, 2)
    entries: list[tuple[int, int, Fraction]] = []
    if method == "atoms":
        for a in L.atoms:
            for x in range(L.n):
                y = diamond(L, a, x)
                if y is not ZERO:
                    entries.append((y, x, half))
                    entries.append((x, y, half))
    elif method == "covers":
        for x, y in L.covers():
            w = Fraction(L.count_atoms_below(y) - L.count_atoms_below(x), 2)
            if w:
                entries.append((y, x, w))
                entries.append((x, y, w))
    else:
        raise ValueError(f"unknown assembly method {method!r}")
    return OperatorMatrix.from_entries(L.n, entries, symmetric=True)


def apply(M: OperatorMatrix, v: Mapping[int, Fraction]) -> Vector:
    """Exact sparse matrix-vector product; raises on out-of-range support."""
    for i in v:
        if not 0 <= i < M.dim:
            raise ValueError(f"vector support index {i} out of range for dim {M.dim}")
    return M.apply(v)
