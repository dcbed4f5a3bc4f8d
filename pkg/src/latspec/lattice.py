"""Finite graded lattices: construction, built-in families, parsing, validation.

Elements are dense integer ids with id 0 the bottom.  Built-in families
order elements rank-major and, within a rank, by a family-specific
canonical key (subset colex, echelon lex, coset-representative lex);
products are ordered lexicographically by component ids.

Meets and joins are computed through principal-ideal bitmask indexes: the
set of common lower bounds of x and y is the AND of their down-set masks,
and in a lattice that mask is itself a principal down-set.  The lookup
therefore doubles as a lattice-ness certificate for parsed input.
"""

from __future__ import annotations

import json
import os
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from . import gf

DEFAULT_SIZE_CAP = 200_000
SIZE_CAP_ENV = "LATTICE_SIZE_CAP"
BOOLEAN_MAX_GROUND = 20
TABLE_LIMIT = 2_048


class LatticeError(Exception):
    """Base class for all lattice construction and parsing failures."""


class SizeBoundError(LatticeError):
    pass


class ParseError(LatticeError):
    pass


class NotAPosetError(LatticeError):
    pass


class NotGradedError(LatticeError):
    pass


class NotALatticeError(LatticeError):
    pass


def size_cap(override: int | None = None) -> int:
    """Effective element cap: explicit override, else LATTICE_SIZE_CAP, else default."""
    if override is not None:
        return override
    env = os.environ.get(SIZE_CAP_ENV)
    return int(env) if env else DEFAULT_SIZE_CAP


def _check_size(n: int, cap: int | None) -> None:
    limit = size_cap(cap)
    if n > limit:
        raise SizeBoundError(f"lattice would have {n} elements, exceeding the cap of {limit}")


def _mask_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class FiniteLattice:
    """Immutable finite graded lattice.

    Attributes
    ----------
    n : element count
    rank : tuple of ranks, rank[0] == 0 for the bottom
    top_rank : rank of the unique top element
    covers_up : covers_up[x] lists the elements covering x, ascending
    covers_down : inverse of covers_up
    atoms : ids of the rank-1 elements, ascending
    layers : layers[k] lists the ids of rank k
    family_tag : provenance label, e.g. "boolean(3)" or "custom"
    labels : display label per element

    The object is immutable after construction and safe to share across
    threads; all query methods are pure.
    """

    def __init__(
        self,
        rank: Sequence[int],
        covers_up: Sequence[Sequence[int]],
        family_tag: str = "custom",
        labels: Sequence[str] | None = None,
    ):
        n = len(rank)
        if n == 0:
            raise NotALatticeError("empty element list: no bottom element")
        self.n = n
        self.rank = tuple(rank)
        self.covers_up = tuple(tuple(sorted(ups)) for ups in covers_up)
        self.family_tag = family_tag
        self.labels = tuple(labels) if labels is not None else tuple(f"e{i}" for i in range(n))
        if len(self.covers_up) != n or len(self.labels) != n:
            raise LatticeError("rank, covers_up, and labels must have equal length")
        self.top_rank = max(self.rank)

        covers_down: list[list[int]] = [[] for _ in range(n)]
        for x, ups in enumerate(self.covers_up):
            for y in ups:
                # the rank-ordered down-set fill below relies on this
                if self.rank[y] != self.rank[x] + 1:
                    raise NotGradedError(
                        f"cover [{x}, {y}] spans ranks {self.rank[x]} -> {self.rank[y]}"
                    )
                covers_down[y].append(x)
        self.covers_down = tuple(tuple(sorted(downs)) for downs in covers_down)

        if [i for i in range(n) if self.rank[i] == 0] != [0]:
            raise NotALatticeError("the bottom must be the unique rank-0 element and have id 0")
        for i in range(1, n):
            if not covers_down[i]:
                raise NotALatticeError(f"element {i} has rank {self.rank[i]} but covers nothing")
        tops = [i for i in range(n) if not self.covers_up[i]]
        if len(tops) != 1:
            raise NotALatticeError(f"expected a unique top element, found {len(tops)}")
        self.top = tops[0]
        if self.rank[self.top] != self.top_rank:
            raise NotGradedError("the unique maximal element does not have the maximal rank")

        # Down-set / up-set bitmasks, filled in rank order (ids need not be
        # rank-sorted: product lattices are ordered lexicographically).
        order = sorted(range(n), key=self.rank.__getitem__)
        down = [0] * n
        for y in order:
            m = 1 << y
            for x in covers_down[y]:
                m |= down[x]
            down[y] = m
        up = [0] * n
        for y in reversed(order):
            m = 1 << y
            for z in self.covers_up[y]:
                m |= up[z]
            up[y] = m
        self._down = down
        self._up = up
        self._down_index = {m: i for i, m in enumerate(down)}
        self._up_index = {m: i for i, m in enumerate(up)}

        layers: list[list[int]] = [[] for _ in range(self.top_rank + 1)]
        for i, rk in enumerate(self.rank):
            layers[rk].append(i)
        if not all(layers):
            empty = next(k for k, lay in enumerate(layers) if not lay)
            raise NotGradedError(f"no element has rank {empty}")
        self.layers = tuple(tuple(lay) for lay in layers)
        self.atoms = self.layers[1] if self.top_rank >= 1 else ()
        atoms_mask = 0
        for a in self.atoms:
            atoms_mask |= 1 << a
        self._atoms_mask = atoms_mask
        self.validation = None  # optionally attached by parse_lattice / validate

    # -- order queries ----------------------------------------------------

    def leq(self, x: int, y: int) -> bool:
        return (self._down[y] >> x) & 1 == 1

    def meet(self, x: int, y: int) -> int:
        m = self._down[x] & self._down[y]
        try:
            return self._down_index[m]
        except KeyError:
            raise NotALatticeError(f"elements {x} and {y} have no unique meet") from None

    def join(self, x: int, y: int) -> int:
        m = self._up[x] & self._up[y]
        try:
            return self._up_index[m]
        except KeyError:
            raise NotALatticeError(f"elements {x} and {y} have no unique join") from None

    def join_all(self, xs: Iterable[int]) -> int:
        out = 0
        for x in xs:
            out = self.join(out, x)
        return out

    def elements_below(self, x: int) -> Iterator[int]:
        """All y <= x, including x itself."""
        return _mask_bits(self._down[x])

    def elements_above(self, x: int) -> Iterator[int]:
        return _mask_bits(self._up[x])

    def downset_mask(self, x: int) -> int:
        return self._down[x]

    def atoms_below(self, x: int) -> Iterator[int]:
        return _mask_bits(self._down[x] & self._atoms_mask)

    def count_atoms_below(self, x: int) -> int:
        return (self._down[x] & self._atoms_mask).bit_count()

    def covers(self) -> Iterator[tuple[int, int]]:
        """All cover pairs (x, y) with x covered by y."""
        for x, ups in enumerate(self.covers_up):
            for y in ups:
                yield x, y

    def layer_sizes(self) -> tuple[int, ...]:
        return tuple(len(lay) for lay in self.layers)

    # -- bulk tables -------------------------------------------------------

    def join_table(self) -> list[list[int]]:
        """Dense n x n join table; guarded so that desk-scale use stays safe."""
        if self.n > TABLE_LIMIT:
            raise SizeBoundError(f"dense tables are limited to {TABLE_LIMIT} elements")
        return [[self.join(x, y) for y in range(self.n)] for x in range(self.n)]

    def meet_table(self) -> list[list[int]]:
        if self.n > TABLE_LIMIT:
            raise SizeBoundError(f"dense tables are limited to {TABLE_LIMIT} elements")
        return [[self.meet(x, y) for y in range(self.n)] for x in range(self.n)]

    def check_all_pairs(self) -> None:
        """Probe every pair for a unique meet and join; raises otherwise."""
        for x in range(self.n):
            for y in range(x + 1, self.n):
                self.meet(x, y)
                self.join(x, y)

    # -- construction from raw cover data ----------------------------------

    @classmethod
    def from_covers(
        cls,
        n: int,
        covers: Iterable[tuple[int, int]],
        family_tag: str = "custom",
        labels: Sequence[str] | None = None,
        cap: int | None = None,
    ) -> "FiniteLattice":
        """Build a lattice from an explicit cover list.

        Ranks are inferred as longest-chain length from the unique minimal
        element; ids are remapped to rank-major order (stable in the input
        ids) so that the bottom receives id 0.  Raises NotAPosetError on
        cycles, NotGradedError when some cover jumps more than one rank,
        and NotALatticeError when bottom/top are not unique or some pair
        lacks a meet or join.
        """
        if n == 0:
            raise NotALatticeError("empty element list: no bottom element")
        _check_size(n, cap)
        succ: list[list[int]] = [[] for _ in range(n)]
        indeg = [0] * n
        seen = set()
        for lo, hi in covers:
            if not (0 <= lo < n and 0 <= hi < n):
                raise ParseError(f"cover [{lo}, {hi}] references an unknown element id")
            if lo == hi:
                raise NotAPosetError(f"cover [{lo}, {hi}] is a self-loop")
            if (lo, hi) in seen:
                continue
            seen.add((lo, hi))
            succ[lo].append(hi)
            indeg[hi] += 1

        sources = [i for i in range(n) if indeg[i] == 0]
        if len(sources) != 1:
            raise NotALatticeError(f"expected a unique bottom element, found {len(sources)} minimal elements")

        # Kahn toposort with longest-path ranks; leftover nodes mean a cycle.
        rank = [0] * n
        pending = list(indeg)
        queue = [sources[0]]
        visited = 0
        while queue:
            x = queue.pop()
            visited += 1
            for y in succ[x]:
                rank[y] = max(rank[y], rank[x] + 1)
                pending[y] -= 1
                if pending[y] == 0:
                    queue.append(y)
        if visited != n:
            raise NotAPosetError("cover relation contains a cycle")

        for lo, hi in seen:
            if rank[hi] != rank[lo] + 1:
                raise NotGradedError(
                    f"cover [{lo}, {hi}] spans ranks {rank[lo]} -> {rank[hi]}; the poset is not graded"
                )

        perm = sorted(range(n), key=lambda i: (rank[i], i))
        new_id = {old: new for new, old in enumerate(perm)}
        new_rank = [rank[old] for old in perm]
        new_covers: list[list[int]] = [[] for _ in range(n)]
        for lo, hi in seen:
            new_covers[new_id[lo]].append(new_id[hi])
        if labels is not None:
            new_labels = [labels[old] for old in perm]
        else:
            new_labels = None
        L = cls(new_rank, new_covers, family_tag, new_labels)
        L.check_all_pairs()
        return L

    # -- serialization ------------------------------------------------------

    def to_document(self) -> dict:
        """The interchange document: element list plus cover pairs."""
        return {
            "elements": [{"id": i, "label": self.labels[i]} for i in range(self.n)],
            "covers": [[x, y] for x, y in self.covers()],
        }

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteLattice):
            return NotImplemented
        return self.rank == other.rank and self.covers_up == other.covers_up

    def __repr__(self) -> str:
        return f"FiniteLattice({self.family_tag}, n={self.n}, top_rank={self.top_rank})"


# ---------------------------------------------------------------------------
# Built-in families
# ---------------------------------------------------------------------------


def _subset_label(mask: int) -> str:
    return "{" + ",".join(str(i + 1) for i in _mask_bits(mask)) + "}"


def build_boolean(n: int, *, cap: int | None = None) -> FiniteLattice:
    """Lattice of all subsets of {1..n}: rank = cardinality, join = union,
    meet = intersection, atoms = singletons.  Elements are ordered by
    (cardinality, colex), i.e. numerically within a rank when subsets are
    read as bitmasks."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n > BOOLEAN_MAX_GROUND:
        raise SizeBoundError(f"boolean ground sets are limited to {BOOLEAN_MAX_GROUND} elements")
    _check_size(2**n, cap)
    masks = sorted(range(2**n), key=lambda m: (m.bit_count(), m))
    index = {m: i for i, m in enumerate(masks)}
    rank = [m.bit_count() for m in masks]
    covers_up = [
        [index[m | (1 << b)] for b in range(n) if not (m >> b) & 1] for m in masks
    ]
    labels = [_subset_label(m) for m in masks]
    return FiniteLattice(rank, covers_up, f"boolean({n})", labels)


def build_uniform(r: int, m: int, *, cap: int | None = None) -> FiniteLattice:
    """Lattice of flats of the uniform matroid U_{r,m}: all subsets of
    {1..m} of size < r, plus the full set as top.  build_uniform(2, 3) is
    the diamond with three atoms."""
    if r < 1:
        raise ValueError("r must be at least 1")
    if m < r:
        raise ValueError("m must be at least r")
    full = (1 << m) - 1
    proper = sorted(
        (mask for mask in range(1 << m) if mask.bit_count() < r),
        key=lambda mask: (mask.bit_count(), mask),
    )
    _check_size(len(proper) + 1, cap)
    masks = proper + [full]
    index = {mask: i for i, mask in enumerate(masks)}
    top = len(masks) - 1
    rank = [mask.bit_count() for mask in proper] + [r]
    covers_up: list[list[int]] = []
    for mask in proper:
        k = mask.bit_count()
        if k == r - 1:
            covers_up.append([top])
        else:
            covers_up.append(
                [index[mask | (1 << b)] for b in range(m) if not (mask >> b) & 1]
            )
    covers_up.append([])
    labels = [_subset_label(mask) for mask in masks]
    return FiniteLattice(rank, covers_up, f"uniform({r},{m})", labels)


def _rref_label(basis: gf.Rref) -> str:
    return "[" + ";".join("".join(str(v) for v in row) for row in basis) + "]"


def build_projective(r: int, q: int, *, cap: int | None = None) -> FiniteLattice:
    """Lattice of linear subspaces of F_q^r (q prime): rank = dimension,
    join = subspace sum, meet = intersection.  Layer k has Gaussian-binomial
    size (r choose k)_q."""
    if r < 1:
        raise ValueError("r must be at least 1")
    if not gf.is_prime(q):
        raise ValueError(f"q = {q} must be prime")
    total = sum(gf.gaussian_binomial(r, k, q) for k in range(r + 1))
    _check_size(total, cap)
    by_dim: list[list[gf.Rref]] = [sorted(gf.subspaces_of_dim(r, q, k)) for k in range(r + 1)]
    ids: dict[gf.Rref, int] = {}
    rank: list[int] = []
    labels: list[str] = []
    for k, layer in enumerate(by_dim):
        for basis in layer:
            ids[basis] = len(rank)
            rank.append(k)
            labels.append(_rref_label(basis))
    covers_up: list[list[int]] = [[] for _ in range(len(rank))]
    for k in range(r):
        for small in by_dim[k]:
            lo = ids[small]
            for big in by_dim[k + 1]:
                if gf.rowspace_contains(big, small, q):
                    covers_up[lo].append(ids[big])
    return FiniteLattice(rank, covers_up, f"projective({r},{q})", labels)


def build_affine(r: int, q: int, *, cap: int | None = None) -> FiniteLattice:
    """Lattice of affine flats (cosets x + U) of F_q^r, all dimensions 0..r,
    with an adjoined bottom.  A k-flat has lattice rank k + 1; the atoms are
    the q^r points.  Meets of disjoint flats land on the adjoined bottom."""
    if r < 1:
        raise ValueError("r must be at least 1")
    if not gf.is_prime(q):
        raise ValueError(f"q = {q} must be prime")
    total = 1 + sum(q ** (r - k) * gf.gaussian_binomial(r, k, q) for k in range(r + 1))
    _check_size(total, cap)

    Flat = tuple[gf.Rref, gf.Vec]  # (direction subspace, canonical representative)
    by_dim: list[list[Flat]] = []
    for k in range(r + 1):
        flats = [
            (basis, rep)
            for basis in sorted(gf.subspaces_of_dim(r, q, k))
            for rep in gf.coset_representatives(basis, r, q)
        ]
        by_dim.append(flats)

    ids: dict[Flat, int] = {}
    rank = [0]
    labels = ["empty"]
    for k, flats in enumerate(by_dim):
        for flat in flats:
            ids[flat] = len(rank)
            rank.append(k + 1)
            basis, rep = flat
            labels.append("".join(str(v) for v in rep) + "+" + _rref_label(basis))

    covers_up: list[list[int]] = [[] for _ in range(len(rank))]
    covers_up[0] = [ids[flat] for flat in by_dim[0]]
    for k in range(r):
        for small in by_dim[k]:
            u_basis, s_rep = small
            lo = ids[small]
            for big in by_dim[k + 1]:
                v_basis, t_rep = big
                if gf.rowspace_contains(v_basis, u_basis, q) and gf.reduce_vector(
                    s_rep, v_basis, q
                ) == t_rep:
                    covers_up[lo].append(ids[big])
    return FiniteLattice(rank, covers_up, f"affine({r},{q})", labels)


def build_product(L1: FiniteLattice, L2: FiniteLattice, *, cap: int | None = None) -> FiniteLattice:
    """Direct product with componentwise order: element (x1, x2) gets id
    x1 * L2.n + x2 (lexicographic), rank is the sum of component ranks, and
    the atoms are exactly the pairs (a, bottom) and (bottom, b)."""
    n1, n2 = L1.n, L2.n
    _check_size(n1 * n2, cap)
    rank = [L1.rank[x1] + L2.rank[x2] for x1 in range(n1) for x2 in range(n2)]
    covers_up = [
        [y1 * n2 + x2 for y1 in L1.covers_up[x1]]
        + [x1 * n2 + y2 for y2 in L2.covers_up[x2]]
        for x1 in range(n1)
        for x2 in range(n2)
    ]
    labels = [
        f"({L1.labels[x1]},{L2.labels[x2]})" for x1 in range(n1) for x2 in range(n2)
    ]
    return FiniteLattice(rank, covers_up, f"product({L1.family_tag},{L2.family_tag})", labels)


# ---------------------------------------------------------------------------
# Parsing
# ---------------------------------------------------------------------------


def parse_lattice(document: str | bytes | dict, *, cap: int | None = None) -> FiniteLattice:
    """Parse the interchange document {"elements": [...], "covers": [...]}.

    Ranks are inferred from cover chains; ids must be dense from 0 and are
    remapped to rank-major order.  Non-posets, non-lattices, and non-graded
    posets are rejected with distinguishing errors.  The returned lattice
    carries a ValidationReport in its `validation` attribute.
    """
    if isinstance(document, (str, bytes)):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(document, dict):
        raise ParseError("document must be a JSON object")
    elements = document.get("elements")
    covers = document.get("covers", [])
    if not isinstance(elements, list):
        raise ParseError('document must contain an "elements" list')
    if not isinstance(covers, list):
        raise ParseError('"covers" must be a list of [lo, hi] pairs')
    if not elements:
        raise NotALatticeError("empty element list: no bottom element")

    n = len(elements)
    labels = [f"e{i}" for i in range(n)]
    seen_ids = set()
    for entry in elements:
        if not isinstance(entry, dict) or not isinstance(entry.get("id"), int):
            raise ParseError('each element must be an object with an integer "id"')
        i = entry["id"]
        if i in seen_ids or not 0 <= i < n:
            raise ParseError(f"element ids must be dense from 0; offending id {i}")
        seen_ids.add(i)
        labels[i] = str(entry.get("label", f"e{i}"))

    pairs = []
    for pair in covers:
        if (
            not isinstance(pair, (list, tuple))
            or len(pair) != 2
            or not all(isinstance(v, int) for v in pair)
        ):
            raise ParseError(f"malformed cover entry {pair!r}; expected [lo, hi]")
        pairs.append((pair[0], pair[1]))

    L = FiniteLattice.from_covers(n, pairs, "custom", labels, cap=cap)
    L.validation = validate(L)
    return L


def read_lattice_file(path: str, *, cap: int | None = None) -> FiniteLattice:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_lattice(fh.read(), cap=cap)


# ---------------------------------------------------------------------------
# Validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    counterexample: tuple | None = None


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of the structural checks run by validate().

    is_geometric is the measured conjunction graded + atomic + semimodular;
    is_semimodular_atomic additionally ignores nothing but is kept separate
    because the affine family is admitted through the weaker hypothesis.
    Notes record family-specific caveats.
    """

    checks: tuple[CheckResult, ...]
    is_geometric: bool
    is_semimodular_atomic: bool
    notes: tuple[str, ...] = ()

    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failed_checks(self) -> tuple[CheckResult, ...]:
        return tuple(c for c in self.checks if not c.passed)

    def render(self) -> str:
        lines = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            extra = f"  counterexample={c.counterexample}" if c.counterexample else ""
            lines.append(f"{c.name:<24s} {status}{extra}")
        lines.append(f"{'is_geometric':<24s} {self.is_geometric}")
        lines.append(f"{'is_semimodular_atomic':<24s} {self.is_semimodular_atomic}")
        for note in self.notes:
            lines.append(f"note: {note}")
        return "\n".join(lines)


def _survey_pairs(L: FiniteLattice, exhaustive_limit: int, samples: int, seed: int):
    if L.n <= exhaustive_limit:
        return combinations(range(L.n), 2)
    rng = random.Random(seed)
    return ((rng.randrange(L.n), rng.randrange(L.n)) for _ in range(samples))


def validate(
    L: FiniteLattice,
    *,
    exhaustive_limit: int = 400,
    samples: int = 20_000,
    triple_limit: int = 64,
    seed: int = 0,
) -> ValidationReport:
    """Run the structural invariant checks.

    Pair checks (lattice-ness, absorption, semimodularity) are exhaustive up
    to `exhaustive_limit` elements and randomly sampled above; triple checks
    (associativity) are exhaustive up to `triple_limit` and sampled above.
    All failures carry a first counterexample.
    """
    checks: list[CheckResult] = []

    bottoms = [i for i in range(L.n) if L.rank[i] == 0]
    checks.append(CheckResult("unique-bottom", bottoms == [0], tuple(bottoms) if bottoms != [0] else None))
    tops = [i for i in range(L.n) if not L.covers_up[i]]
    checks.append(CheckResult("unique-top", len(tops) == 1, tuple(tops) if len(tops) != 1 else None))

    bad_cover = next(((x, y) for x, y in L.covers() if L.rank[y] != L.rank[x] + 1), None)
    checks.append(CheckResult("graded-covers", bad_cover is None, bad_cover))

    lattice_ok, lattice_ce = True, None
    absorb_ok, absorb_ce = True, None
    semi_ok, semi_ce = True, None
    for x, y in _survey_pairs(L, exhaustive_limit, samples, seed):
        try:
            m = L.meet(x, y)
            j = L.join(x, y)
        except NotALatticeError:
            if lattice_ok:
                lattice_ok, lattice_ce = False, (x, y)
            continue
        if absorb_ok and not (
            L.leq(m, x) and L.leq(m, y) and L.leq(x, j) and L.leq(y, j)
            and L.join(x, m) == x and L.meet(x, j) == x
        ):
            absorb_ok, absorb_ce = False, (x, y)
        if semi_ok and L.rank[x] + L.rank[y] < L.rank[j] + L.rank[m]:
            semi_ok, semi_ce = False, (x, y)
    checks.append(CheckResult("lattice-pairs", lattice_ok, lattice_ce))
    checks.append(CheckResult("order-absorption", absorb_ok, absorb_ce))
    checks.append(CheckResult("semimodular", semi_ok, semi_ce))

    assoc_ok, assoc_ce = True, None
    if L.n <= triple_limit:
        triples = (
            (x, y, z) for x in range(L.n) for y in range(L.n) for z in range(L.n)
        )
    else:
        rng = random.Random(seed + 1)
        triples = (
            (rng.randrange(L.n), rng.randrange(L.n), rng.randrange(L.n))
            for _ in range(samples)
        )
    for x, y, z in triples:
        try:
            if L.join(L.join(x, y), z) != L.join(x, L.join(y, z)) or L.meet(
                L.meet(x, y), z
            ) != L.meet(x, L.meet(y, z)):
                assoc_ok, assoc_ce = False, (x, y, z)
                break
        except NotALatticeError:
            assoc_ok, assoc_ce = False, (x, y, z)
            break
    checks.append(CheckResult("join-meet-associative", assoc_ok, assoc_ce))

    atomic_ok, atomic_ce = True, None
    for x in range(L.n):
        if L.join_all(L.atoms_below(x)) != x:
            atomic_ok, atomic_ce = False, (x,)
            break
    checks.append(CheckResult("atomic", atomic_ok, atomic_ce))

    core_ok = all(c.passed for c in checks)
    notes: list[str] = []
    if L.family_tag.startswith("affine("):
        notes.append(
            "affine family: admitted through the atomic + semimodular route; "
            "the geometric flag reports the measured checks"
        )
    report = ValidationReport(
        checks=tuple(checks),
        is_geometric=core_ok,
        is_semimodular_atomic=core_ok,
        notes=tuple(notes),
    )
    return report


def count_atoms_below(L: FiniteLattice, x: int) -> int:
    """Number of atoms p with p <= x."""
    if not 0 <= x < L.n:
        raise ValueError(f"element id {x} out of range")
    return L.count_atoms_below(x)
