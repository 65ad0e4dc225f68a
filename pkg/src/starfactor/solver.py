"""Brute-force membership oracle for the uniform star-weighting family.

A graph belongs to the family iff some strictly positive edge-weighting
gives every star-factor the same total weight.  Writing x_i for the
factor incidence vectors, that is a strictly positive solution of
(x_i - x_1).w = 0 for all i.  The decision runs over exact rationals:

  maximize t  subject to  D w = 0,  w_e >= t,  w_e <= 1

has optimum t > 0 exactly when a positive solution exists (the system is
homogeneous, so any positive solution scales into the box).  At optimum
t = 0, Stiemke's alternative guarantees a nonnegative nonzero vector in
the row space of D; a second small program extracts it as a certificate
that is checkable without trusting the simplex.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from . import simplex
from .factors import (
    DEFAULT_CAP,
    CapExceeded,
    IncidenceVector,
    VacuousGraph,
    enumerate_star_factors,
    incidence_vectors,
)
from .graph import Graph

ZERO = Fraction(0)
ONE = Fraction(1)


@dataclass(frozen=True)
class Weighting:
    """Strictly positive rational edge weights, indexed by edge index."""

    weights: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if any(w <= ZERO for w in self.weights):
            raise ValueError("all edge weights must be strictly positive")

    @property
    def integral(self) -> tuple[int, ...]:
        """The same weighting scaled by the LCM of denominators to integers."""
        scale = math.lcm(*(w.denominator for w in self.weights)) if self.weights else 1
        return tuple(int(w * scale) for w in self.weights)

    @classmethod
    def constant(cls, m: int, value: Fraction | int = 1) -> "Weighting":
        return cls(tuple(Fraction(value) for _ in range(m)))


@dataclass(frozen=True)
class Witness:
    """A uniform weighting: every factor totals ``common_weight``."""

    weighting: Weighting
    common_weight: Fraction


@dataclass(frozen=True)
class Refutation:
    """Stiemke certificate: a nonnegative nonzero combination of rows.

    ``forced_zero`` equals sum of coeffs[i] * (x_{i+1} - x_1) entrywise;
    every equal-weight w would satisfy forced_zero.w = 0, which no
    strictly positive w can.
    """

    coeffs: tuple[Fraction, ...]
    forced_zero: tuple[Fraction, ...]


FeasibilityOutcome = Witness | Refutation


class OracleVerdict(enum.Enum):
    MEMBER = "Member"
    NOT_MEMBER = "NotMember"
    VACUOUS = "Vacuous"
    CAP_EXCEEDED = "CapExceeded"


@dataclass(frozen=True)
class OracleResult:
    verdict: OracleVerdict
    witness: Witness | None = None
    refutation: Refutation | None = None
    factor_count: int | None = None


def difference_matrix(vectors: Sequence[IncidenceVector]) -> list[list[int]]:
    """Rows x_i - x_1 for i >= 2; w equalizes all factors iff D w = 0."""
    if not vectors:
        raise ValueError("at least one incidence vector required")
    first = vectors[0]
    if any(len(v) != len(first) for v in vectors):
        raise ValueError("incidence vectors must all have the same length")
    return [[a - b for a, b in zip(v, first)] for v in vectors[1:]]


def _reduce_rows(
    d_rows: list[list[int]],
) -> tuple[list[list[Fraction]], list[dict[int, Fraction]]]:
    """Reduced row echelon basis of the row space of D, with provenance.

    Returns (basis, combos) where basis row j equals
    sum over i of combos[j][i] * D[i].
    """
    basis: list[list[Fraction]] = []
    combos: list[dict[int, Fraction]] = []
    pivots: list[int] = []
    for i, raw in enumerate(d_rows):
        row = [Fraction(x) for x in raw]
        combo: dict[int, Fraction] = {i: ONE}
        for j, p in enumerate(pivots):
            f = row[p]
            if f != ZERO:
                brow = basis[j]
                row = [x - f * y for x, y in zip(row, brow)]
                for k, c in combos[j].items():
                    combo[k] = combo.get(k, ZERO) - f * c
        pivot = next((k for k, x in enumerate(row) if x != ZERO), None)
        if pivot is None:
            continue
        inv = ONE / row[pivot]
        row = [x * inv for x in row]
        combo = {k: c * inv for k, c in combo.items() if c != ZERO}
        # clear the new pivot column from the existing basis rows
        for j in range(len(basis)):
            f = basis[j][pivot]
            if f != ZERO:
                basis[j] = [x - f * y for x, y in zip(basis[j], row)]
                cj = combos[j]
                for k, c in combo.items():
                    cj[k] = cj.get(k, ZERO) - f * c
        basis.append(row)
        combos.append(combo)
        pivots.append(pivot)
    return basis, combos


def _refutation_from_combination(
    nrows: int, ys: Sequence[Fraction], basis: list[list[Fraction]], combos: list[dict[int, Fraction]]
) -> Refutation:
    m = len(basis[0])
    forced = [ZERO] * m
    coeffs = [ZERO] * nrows
    for y, brow, combo in zip(ys, basis, combos):
        if y == ZERO:
            continue
        for e in range(m):
            forced[e] += y * brow[e]
        for k, c in combo.items():
            coeffs[k] += y * c
    return Refutation(coeffs=tuple(coeffs), forced_zero=tuple(forced))


def decide_uniform_weighting(vectors: Sequence[IncidenceVector]) -> FeasibilityOutcome:
    """Exact decision: uniform positive weighting, or a Stiemke certificate."""
    d_rows = difference_matrix(vectors)
    m = len(vectors[0])
    basis, combos = _reduce_rows(d_rows)
    nrows = len(d_rows)
    if not basis:
        weighting = Weighting.constant(m) if m else Weighting(())
        return Witness(weighting=weighting, common_weight=Fraction(sum(vectors[0])))

    # A one-signed basis row is already a certificate.
    for j, brow in enumerate(basis):
        if all(x >= ZERO for x in brow):
            return _refutation_from_combination(nrows, _unit(len(basis), j, ONE), basis, combos)
        if all(x <= ZERO for x in brow):
            return _refutation_from_combination(nrows, _unit(len(basis), j, -ONE), basis, combos)

    r = len(basis)
    # LP1 variables: w_0..w_{m-1}, t, surplus s_e (w_e - t >= 0), slack u_e (w_e <= 1)
    nvars = 3 * m + 1
    rows: list[list[Fraction | int]] = []
    rhs: list[Fraction | int] = []
    for brow in basis:
        rows.append(list(brow) + [ZERO] * (2 * m + 1))
        rhs.append(ZERO)
    for e in range(m):
        row = [0] * nvars
        row[e] = 1
        row[m] = -1
        row[m + 1 + e] = -1
        rows.append(row)
        rhs.append(0)
    for e in range(m):
        row = [0] * nvars
        row[e] = 1
        row[2 * m + 1 + e] = 1
        rows.append(row)
        rhs.append(1)
    c = [0] * nvars
    c[m] = 1
    t_opt, x = simplex.solve(c, rows, rhs)
    if t_opt > ZERO:
        scale = min(x[:m])
        weighting = Weighting(tuple(w / scale for w in x[:m]))
        common = sum(w for w, bit in zip(weighting.weights, vectors[0]) if bit)
        return Witness(weighting=weighting, common_weight=Fraction(common))

    # LP2: find y with y.R >= 0, y.R != 0 (exists by Stiemke's alternative).
    # Variables: p_j, q_j (y_j = p_j - q_j), s_e = (y.R)_e, slack u_e (s_e <= 1).
    nvars2 = 2 * r + 2 * m
    rows2: list[list[Fraction | int]] = []
    rhs2: list[Fraction | int] = []
    for e in range(m):
        row = [ZERO] * nvars2
        for j, brow in enumerate(basis):
            row[j] = brow[e]
            row[r + j] = -brow[e]
        row[2 * r + e] = -ONE
        rows2.append(row)
        rhs2.append(ZERO)
    for e in range(m):
        row = [ZERO] * nvars2
        row[2 * r + e] = ONE
        row[2 * r + m + e] = ONE
        rows2.append(row)
        rhs2.append(ONE)
    c2 = [ZERO] * nvars2
    for e in range(m):
        c2[2 * r + e] = ONE
    total, x2 = simplex.solve(c2, rows2, rhs2)
    if total <= ZERO:
        raise AssertionError("Stiemke alternative violated: no certificate found")
    ys = [x2[j] - x2[r + j] for j in range(r)]
    return _refutation_from_combination(nrows, ys, basis, combos)


def _unit(length: int, index: int, value: Fraction) -> list[Fraction]:
    out = [ZERO] * length
    out[index] = value
    return out


def verify_outcome(vectors: Sequence[IncidenceVector], outcome: FeasibilityOutcome) -> bool:
    """Independent exact re-check of the Witness/Refutation invariants."""
    if not vectors:
        return False
    m = len(vectors[0])
    if isinstance(outcome, Witness):
        w = outcome.weighting.weights
        if len(w) != m or any(x <= ZERO for x in w):
            return False
        for vec in vectors:
            if sum(wi for wi, bit in zip(w, vec) if bit) != outcome.common_weight:
                return False
        return True
    if isinstance(outcome, Refutation):
        if len(outcome.coeffs) != len(vectors) - 1:
            return False
        if len(outcome.forced_zero) != m:
            return False
        forced = [ZERO] * m
        first = vectors[0]
        for coeff, vec in zip(outcome.coeffs, vectors[1:]):
            if coeff == ZERO:
                continue
            for e in range(m):
                forced[e] += coeff * (vec[e] - first[e])
        if tuple(forced) != outcome.forced_zero:
            return False
        return all(x >= ZERO for x in forced) and any(x > ZERO for x in forced)
    return False


def omega_oracle(g: Graph, cap: int = DEFAULT_CAP) -> OracleResult:
    """Full brute-force decision for one graph."""
    try:
        factors = enumerate_star_factors(g, cap=cap)
    except VacuousGraph:
        return OracleResult(verdict=OracleVerdict.VACUOUS)
    except CapExceeded:
        return OracleResult(verdict=OracleVerdict.CAP_EXCEEDED)
    vectors = incidence_vectors(factors, g.m)
    outcome = decide_uniform_weighting(vectors)
    if isinstance(outcome, Witness):
        return OracleResult(
            verdict=OracleVerdict.MEMBER, witness=outcome, factor_count=len(factors)
        )
    return OracleResult(
        verdict=OracleVerdict.NOT_MEMBER, refutation=outcome, factor_count=len(factors)
    )
