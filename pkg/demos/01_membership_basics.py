#!/usr/bin/env python3
"""Walkthrough: deciding uniform star-factor weightability from scratch.

A star-factor of a graph is a spanning subgraph in which every component
is a star (one center joined to at least one leaf).  We ask: can the
edges be given strictly positive weights so that *every* star-factor has
the same total weight?  This script runs the brute-force oracle on small
cycles and paths and prints the certificates it produces.
"""

from starfactor import (
    enumerate_star_factors,
    edge_count_spectrum,
    omega_oracle,
)
from starfactor.graph import Graph


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def show(name, g):
    print(f"--- {name} (n={g.n}, m={g.m}) ---")
    factors = enumerate_star_factors(g)
    spectrum = dict(sorted(edge_count_spectrum(factors).items()))
    print(f"star-factors: {len(factors)}, edge-count spectrum: {spectrum}")
    result = omega_oracle(g)
    print(f"verdict: {result.verdict.value}")
    if result.witness is not None:
        weights = result.witness.weighting.integral
        detail = ", ".join(f"{u}-{v}:{w}" for (u, v), w in zip(g.edges, weights))
        print(f"witness weights: {detail}")
        print(f"every factor totals {result.witness.common_weight} x scale")
    if result.refutation is not None:
        forced = result.refutation.forced_zero
        nz = {i: str(c) for i, c in enumerate(result.refutation.coeffs) if c != 0}
        print(f"refutation: combination {nz} of factor differences")
        print(f"forces a nonnegative, nonzero edge combination to vanish: "
              f"{[str(x) for x in forced]}")
    print()


def main():
    # The 5-cycle and 7-cycle are members with constant weights: every
    # star-factor of C5 uses 3 edges, every one of C7 uses 4.
    show("C5", cycle(5))
    show("C7", cycle(7))

    # The 6-cycle has factors of 3 and 4 edges whose incidence vectors
    # trap every candidate weighting: a nonnegative combination of the
    # difference rows is nonzero, so no positive weighting equalizes.
    show("C6", cycle(6))

    # The 6-vertex path is a member even though its factors have
    # *different* edge counts -- the witness is necessarily non-constant.
    show("P6", path(6))

    # The 8-vertex path is the shortest path that fails.
    show("P8", path(8))


if __name__ == "__main__":
    main()
