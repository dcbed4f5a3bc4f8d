"""Shared test utilities: independent oracles and a random-lattice source.

The oracles here deliberately avoid the code paths they check: dense
matrix powering instead of sparse application, explicit walk enumeration
instead of the transfer recursion, and matching enumeration instead of
the continuant recurrence.
"""

from __future__ import annotations

import random
from fractions import Fraction
from itertools import combinations

from latspec import RationalPolynomial
from latspec.gf import in_rowspace, rref


# ---------------------------------------------------------------------------
# Dense exact linear algebra (oracle for sparse apply / power_entry)
# ---------------------------------------------------------------------------


def dense_matmul(A: list[list[Fraction]], B: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(A)
    out = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for k in range(n):
            a = A[i][k]
            if a == 0:
                continue
            row_b = B[k]
            row_o = out[i]
            for j in range(n):
                if row_b[j]:
                    row_o[j] += a * row_b[j]
    return out


def dense_power(A: list[list[Fraction]], k: int) -> list[list[Fraction]]:
    n = len(A)
    out = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(k):
        out = dense_matmul(out, A)
    return out


def dense_power_entry(H, row: int, col: int, k: int) -> Fraction:
    return dense_power(H.to_dense(), k)[row][col]


# ---------------------------------------------------------------------------
# Walk-sum oracle for radial moments
# ---------------------------------------------------------------------------


def walk_moment_bruteforce(beta_sq: tuple[Fraction, ...], k: int) -> Fraction:
    """Sum over closed walks of length k on the path graph, starting and
    ending at 0, of the product of beta_{level}^2 over up-steps."""
    r = len(beta_sq)

    def recurse(level: int, remaining: int, acc: Fraction) -> Fraction:
        if remaining == 0:
            return acc if level == 0 else Fraction(0)
        if level > remaining:  # cannot return to 0 in time
            return Fraction(0)
        total = Fraction(0)
        if level < r:
            total += recurse(level + 1, remaining - 1, acc * beta_sq[level])
        if level > 0:
            total += recurse(level - 1, remaining - 1, acc)
        return total

    return recurse(0, k, Fraction(1))


# ---------------------------------------------------------------------------
# Matching-sum oracle for tridiagonal determinants
# ---------------------------------------------------------------------------


def det_by_matchings(beta_sq: tuple[Fraction, ...], size: int) -> RationalPolynomial:
    """det(I - tJ) for the leading size x size block, via the permutation
    expansion: only involutions built from disjoint adjacent transpositions
    survive, so the determinant is a sum over matchings of the path graph."""
    edges = list(range(size - 1))  # edge i joins vertices i, i+1
    total = RationalPolynomial()
    for count in range(size // 2 + 1):
        for subset in combinations(edges, count):
            if any(b - a == 1 for a, b in zip(subset, subset[1:])):
                continue  # adjacent edges share a vertex
            weight = Fraction(1)
            for e in subset:
                weight *= beta_sq[e]
            coeffs = [Fraction(0)] * (2 * count) + [weight * (-1) ** count]
            total = total + RationalPolynomial(coeffs)
    return total


# ---------------------------------------------------------------------------
# Random geometric lattices (flats of random prime-field point sets)
# ---------------------------------------------------------------------------


def random_flats_document(rng: random.Random) -> dict:
    """Interchange document for the lattice of flats of a random simple
    matroid realized by points over a small prime field.  Element ids are
    shuffled so that parsing also exercises id canonicalization."""
    q = rng.choice((2, 3))
    dim = rng.choice((2, 3))
    all_points = []
    for code in range(1, q**dim):
        v = tuple((code // q**i) % q for i in range(dim))
        lead = next(x for x in v if x)
        if lead == 1:  # scalar-normalized: one representative per direction
            all_points.append(v)
    npoints = rng.randint(dim, min(6, len(all_points)))
    points = rng.sample(all_points, npoints)

    def closure(subset: frozenset[int]) -> frozenset[int]:
        basis = rref([points[i] for i in subset], q)
        return frozenset(
            i for i, p in enumerate(points) if in_rowspace(p, basis, q)
        )

    bottom = closure(frozenset())
    flats = {bottom}
    covers: set[tuple[frozenset, frozenset]] = set()
    queue = [bottom]
    while queue:
        flat = queue.pop()
        for i in range(npoints):
            if i in flat:
                continue
            bigger = closure(flat | {i})
            covers.add((flat, bigger))
            if bigger not in flats:
                flats.add(bigger)
                queue.append(bigger)

    ordered = sorted(flats, key=lambda f: (len(f), sorted(f)))
    ids = list(range(len(ordered)))
    rng.shuffle(ids)
    id_of = {flat: ids[i] for i, flat in enumerate(ordered)}
    elements = [
        {"id": id_of[flat], "label": "{" + ",".join(map(str, sorted(flat))) + "}"}
        for flat in ordered
    ]
    return {
        "elements": sorted(elements, key=lambda e: e["id"]),
        "covers": sorted([id_of[lo], id_of[hi]] for lo, hi in covers),
    }
