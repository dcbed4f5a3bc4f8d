#!/usr/bin/env python3
"""Tabulate radial Jacobi data and vacuum spectra for the built-in families.

Prints, for each lattice: layer sizes, cover weight sums, exact squared
coefficients, float coefficients, the vacuum resolvent, and the spectral
atoms.  Everything rational is exact; floats are display-only.

Usage: python scripts/family_report.py [--max-boolean N]
"""

import argparse

from latspec import (
    build_affine,
    build_boolean,
    build_projective,
    build_uniform,
    eigendecompose,
    jacobi_from_compression,
    radial_invariance,
    resolvent,
)


def report(L):
    J = jacobi_from_compression(L)
    inv = radial_invariance(L)
    G = resolvent(J)
    print(f"\n== {L.family_tag}  (n = {L.n}, top rank = {J.r})")
    print(f"   layers:   {J.layers.sizes}")
    print(f"   W:        {J.W}")
    print(f"   beta^2:   ({', '.join(str(b) for b in J.beta_sq)})")
    print(f"   beta:     ({', '.join(f'{b:.6f}' for b in J.beta)})")
    print(f"   invariant radial subspace: {inv.invariant}")
    num = " ".join(str(c) for c in G.numerator.coeffs)
    den = " ".join(str(c) for c in G.denominator.coeffs)
    print(f"   resolvent: ({num}) / ({den})")
    atoms = eigendecompose(J).atoms
    shown = ", ".join(f"{l:+.4f}:{w:.4f}" for l, w in atoms[: min(len(atoms), 7)])
    more = "" if len(atoms) <= 7 else f" ... ({len(atoms)} atoms)"
    print(f"   spectrum:  {shown}{more}")


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-boolean", type=int, default=6)
    args = parser.parse_args()

    for n in range(1, args.max_boolean + 1):
        report(build_boolean(n))
    for m in range(3, 6):
        report(build_uniform(2, m))
    for r, q in [(2, 2), (3, 2), (4, 2), (2, 3), (3, 3)]:
        report(build_projective(r, q))
    for r, q in [(1, 2), (2, 2), (2, 3), (3, 2)]:
        report(build_affine(r, q))


if __name__ == "__main__":
    main()
