"""Aggregated invariant suite for a single lattice.

Collects every cross-module law that can be checked mechanically on a
built lattice: validation, product-operator structure, compression
identities, moment dualities, and spectral-measure consistency.  Used by
the `lattice verify` subcommand; each outcome is an exact pass/fail.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from .diamond import ZERO, annihilation_operator, creation_operator, diamond, hamiltonian
from .lattice import FiniteLattice, validate
from .radial import jacobi_from_compression, jacobi_from_formula, radial_invariance
from .spectral import (
    determinant_polynomials,
    eigendecompose,
    resolvent,
    vacuum_moments_full,
    vacuum_moments_radial,
)


@dataclass(frozen=True)
class SuiteResult:
    name: str
    passed: bool
    detail: str = ""


def _pairs(n: int, limit: int, samples: int, seed: int):
    if n <= limit:
        return itertools.product(range(n), repeat=2)
    rng = random.Random(seed)
    return ((rng.randrange(n), rng.randrange(n)) for _ in range(samples))


def run_invariant_suite(
    L: FiniteLattice,
    *,
    max_moment: int = 11,
    pair_limit: int = 200,
    samples: int = 10_000,
    seed: int = 0,
) -> list[SuiteResult]:
    results: list[SuiteResult] = []

    report = validate(L)
    for check in report.checks:
        results.append(
            SuiteResult(
                f"validate:{check.name}",
                check.passed,
                f"counterexample {check.counterexample}" if check.counterexample else "",
            )
        )

    ok, detail = True, ""
    for x, y in _pairs(L.n, pair_limit, samples, seed):
        if diamond(L, x, y) != diamond(L, y, x):
            ok, detail = False, f"({x}, {y})"
            break
    results.append(SuiteResult("diamond:commutative", ok, detail))

    ok = all(diamond(L, 0, x) == x for x in range(L.n))
    results.append(SuiteResult("diamond:bottom-is-unit", ok))

    ok, detail = True, ""
    for a in L.atoms:
        for x in range(L.n):
            y = diamond(L, a, x)
            if y is not ZERO and L.rank[y] != L.rank[x] + 1:
                ok, detail = False, f"atom {a}, element {x}"
                break
        if not ok:
            break
    results.append(SuiteResult("diamond:atom-raises-rank", ok, detail))

    ok, detail = True, ""
    for a in L.atoms:
        if annihilation_operator(L, a) != creation_operator(L, a).transpose():
            ok, detail = False, f"atom {a}"
            break
    results.append(SuiteResult("operators:transpose-consistency", ok, detail))

    H = hamiltonian(L)
    ok = H == hamiltonian(L, method="covers")
    results.append(SuiteResult("hamiltonian:assembly-agreement", ok))

    ok, detail = True, ""
    for row, col, value in H.entries():
        if abs(L.rank[row] - L.rank[col]) != 1:
            ok, detail = False, f"entry ({row}, {col})"
            break
        doubled = 2 * value
        if doubled.denominator != 1 or doubled <= 0:
            ok, detail = False, f"entry ({row}, {col}) = {value}"
            break
    results.append(SuiteResult("hamiltonian:bipartite-half-integer", ok, detail))

    moments = vacuum_moments_full(L, H, max_moment)
    odd_ok = all(moments[k] == 0 for k in range(1, max_moment + 1, 2))
    results.append(SuiteResult("moments:odd-vanish", odd_ok))

    J_formula = jacobi_from_formula(L)
    J_comp = jacobi_from_compression(L, H)
    jacobi_ok = J_formula.beta_sq == J_comp.beta_sq and J_formula.W == J_comp.W
    results.append(
        SuiteResult(
            "jacobi:formula-equals-compression",
            jacobi_ok,
            "" if jacobi_ok else f"{J_formula.beta_sq} vs {J_comp.beta_sq}",
        )
    )

    total_by_lower = sum(J_formula.W)
    total_by_covers = sum(
        L.count_atoms_below(y) - L.count_atoms_below(x) for x, y in L.covers()
    )
    results.append(
        SuiteResult("jacobi:layer-sum-consistency", total_by_lower == total_by_covers)
    )

    series = resolvent(J_formula).series(2 * J_formula.r)
    radial_m = vacuum_moments_radial(J_formula, 2 * J_formula.r)
    results.append(
        SuiteResult(
            "spectral:resolvent-moment-duality",
            series == radial_m.values,
        )
    )

    D = determinant_polynomials(J_formula)
    results.append(
        SuiteResult(
            "spectral:determinant-normalization",
            all(p.coefficient(0) == 1 for p in D),
        )
    )

    inv = radial_invariance(L, H)
    if inv.invariant:
        radial_long = vacuum_moments_radial(J_formula, 10)
        full_long = vacuum_moments_full(L, H, 10)
        results.append(
            SuiteResult("moments:full-equals-radial", full_long.values == radial_long.values)
        )
    else:
        results.append(
            SuiteResult(
                "moments:full-equals-radial",
                True,
                f"skipped: radial subspace not invariant (level {inv.failing_level})",
            )
        )

    measure = eigendecompose(J_comp)
    radial_f = vacuum_moments_radial(J_comp, 10)
    ok, detail = True, ""
    for k in range(11):
        if abs(measure.moment(k) - float(radial_f[k])) > 1e-8:
            ok, detail = False, f"moment {k}"
            break
    results.append(SuiteResult("spectral:measure-moments", ok, detail))

    return results
