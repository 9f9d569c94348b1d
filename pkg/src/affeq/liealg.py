"""Lie-algebra computations on affine vector fields.

Fields are pairs (Q, t); the bracket of (Q, q) and (R, r) is
(RQ - QR, Rq - Qr), which is the commutator of the corresponding first-order
operators.  `structure_constants` solves every bracket back into the span of
the given fields by exact Gaussian elimination whose pivots must be nonzero
rationals or certified units — anything else raises, because silently
dividing by a symbol that may vanish would fork the computation into cases.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .algebra import (
    NonvanishingSet,
    Polynomial,
    PossiblyZeroDivision,
    RationalExpression,
)
from .jets import AffineVectorField, Jet, build_eqlf, mat_mul, mat_sub, mat_vec


class NotClosed(ValueError):
    """A bracket left the span of the given fields."""

    def __init__(self, i: int, j: int, residual: AffineVectorField):
        super().__init__(f"[e{i + 1}, e{j + 1}] is not in the span of the fields")
        self.pair = (i, j)
        self.residual = residual


class CaseSplitRequired(ValueError):
    """Elimination hit a pivot column whose entries are neither nonzero
    rationals nor certified units; continuing would require a case split."""


def bracket(v: AffineVectorField, w: AffineVectorField) -> AffineVectorField:
    q_mat = mat_sub(mat_mul(w.Q, v.Q), mat_mul(v.Q, w.Q))
    t_vec = [a - b for a, b in zip(mat_vec(w.Q, v.t), mat_vec(v.Q, w.t))]
    return AffineVectorField(q_mat, t_vec)


def pushforward(field: AffineVectorField, m, nonvanishing: NonvanishingSet
                ) -> AffineVectorField:
    """The image of the field under the linear map with matrix m:  (MQM^-1, Mt)."""
    inv = m.invert(nonvanishing)
    return AffineVectorField(mat_mul(m.matrix, mat_mul(field.Q, inv.matrix)),
                             mat_vec(m.matrix, field.t))


def origin_span_rank(fields: Sequence[AffineVectorField]) -> int:
    """Rank of the span of the values at the origin (generically in any moduli)."""
    rows = [list(f.t) for f in fields]
    rank = 0
    for col in range(4):
        pivot = None
        for r in range(rank, len(rows)):
            if not rows[r][col].is_zero():
                pivot = r
                break
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        for r in range(len(rows)):
            if r == rank or rows[r][col].is_zero():
                continue
            # cross-multiplied elimination: no division needed
            rows[r] = [prow[col] * rows[r][c] - rows[r][col] * prow[c] for c in range(4)]
        rank += 1
    return rank


class StructureConstants:
    """The table C[i][j][r] with [e_i, e_j] = sum_r C[i][j][r] e_r (0-based)."""

    def __init__(self, dim: int):
        self.dim = dim
        self._table: dict[tuple[int, int], list[RationalExpression]] = {}

    def set_bracket(self, i: int, j: int, coeffs: Sequence[RationalExpression]):
        if i == j:
            raise ValueError("diagonal brackets vanish identically")
        if i > j:
            i, j = j, i
            coeffs = [-c for c in coeffs]
        self._table[(i, j)] = [RationalExpression.coerce(c) for c in coeffs]

    def coefficient(self, i: int, j: int, r: int) -> RationalExpression:
        if i == j:
            return RationalExpression.zero()
        sign = 1
        if i > j:
            i, j = j, i
            sign = -1
        row = self._table.get((i, j))
        c = row[r] if row is not None else RationalExpression.zero()
        return -c if sign < 0 else c

    def pairs(self):
        return sorted(self._table)

    def __repr__(self):
        return f"StructureConstants(dim={self.dim}, brackets={len(self._table)})"


def _solve_in_span(columns: list[list[RationalExpression]],
                   rhs: list[RationalExpression],
                   nonvanishing: Optional[NonvanishingSet]
                   ) -> list[RationalExpression]:
    """Solve sum_r c_r * columns[r] = rhs in the 20-dimensional entry space.

    Rows are eliminated in their natural order (t1, t2, t3, u0, then the
    matrix rows), preferring rational pivots, then certified units.  Free
    coordinates are set to zero.  The returned coefficients satisfy the pivot
    rows exactly; the caller must check the residual on the others.
    """
    k = len(columns)
    n = len(rhs)
    rows = [[columns[r][e] for r in range(k)] + [rhs[e]] for e in range(n)]
    used: set[int] = set()
    pivots: list[tuple[int, int]] = []  # (unknown, row)
    for r in range(k):
        pivot_row = None
        for e in range(n):
            if e in used or rows[e][r].is_zero():
                continue
            if rows[e][r].is_constant():
                pivot_row = e
                break
        if pivot_row is None and nonvanishing is not None:
            for e in range(n):
                if e in used or rows[e][r].is_zero():
                    continue
                if nonvanishing.is_certified_unit(rows[e][r].num):
                    pivot_row = e
                    break
        if pivot_row is None:
            if any(e not in used and not rows[e][r].is_zero() for e in range(n)):
                raise CaseSplitRequired(
                    f"no admissible pivot for coefficient {r}; a case split would be needed")
            continue  # free coordinate
        used.add(pivot_row)
        pivots.append((r, pivot_row))
        piv = rows[pivot_row][r]
        for e in range(n):
            if e == pivot_row or rows[e][r].is_zero():
                continue
            factor = _divide(rows[e][r], piv, nonvanishing)
            rows[e] = [rows[e][c] - factor * rows[pivot_row][c] for c in range(k + 1)]
    coeffs: list[RationalExpression] = [RationalExpression.zero()] * k
    for r, e in reversed(pivots):
        acc = rows[e][k]
        for r2 in range(r + 1, k):
            if not rows[e][r2].is_zero():
                acc = acc - rows[e][r2] * coeffs[r2]
        coeffs[r] = _divide(acc, rows[e][r], nonvanishing)
    return coeffs


def _divide(num: RationalExpression, den: RationalExpression,
            nonvanishing: Optional[NonvanishingSet]) -> RationalExpression:
    if den.is_constant():
        return num / den.constant_value()
    if nonvanishing is None:
        raise CaseSplitRequired(f"division by uncertified {den}")
    return num.divide(den, nonvanishing)


def structure_constants(fields: Sequence[AffineVectorField],
                        nonvanishing: Optional[NonvanishingSet] = None,
                        allow_residual: bool = False):
    """Close the fields under bracket.

    Returns StructureConstants, or (StructureConstants, residuals) when
    allow_residual is set; residuals maps (i, j) to the part of [e_i, e_j]
    that the span could not absorb.  Without allow_residual a nonzero
    residual raises NotClosed.
    """
    k = len(fields)
    columns = [f.entries() for f in fields]
    sc = StructureConstants(k)
    residuals: dict[tuple[int, int], AffineVectorField] = {}
    for i in range(k):
        for j in range(i + 1, k):
            b = bracket(fields[i], fields[j])
            coeffs = _solve_in_span(columns, b.entries(), nonvanishing)
            recon = AffineVectorField.zero()
            for r, c in enumerate(coeffs):
                if not c.is_zero():
                    recon = recon + fields[r].scale(c)
            residual = b - recon
            if not residual.is_zero():
                if not allow_residual:
                    raise NotClosed(i, j, residual)
                residuals[(i, j)] = residual
            sc.set_bracket(i, j, coeffs)
    if allow_residual:
        return sc, residuals
    return sc


def jacobi_residuals(sc: StructureConstants) -> dict[tuple[int, int, int], list[RationalExpression]]:
    """For each i<j<k the vector (over r) of Jacobi-identity residuals.

    Identically zero exactly when the table is a Lie algebra.
    """
    out: dict[tuple[int, int, int], list[RationalExpression]] = {}
    n = sc.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                vec = []
                for r in range(n):
                    acc = RationalExpression.zero()
                    for s in range(n):
                        acc = acc + sc.coefficient(i, j, s) * sc.coefficient(s, k, r)
                        acc = acc + sc.coefficient(j, k, s) * sc.coefficient(s, i, r)
                        acc = acc + sc.coefficient(k, i, s) * sc.coefficient(s, j, r)
                    vec.append(acc)
                out[(i, j, k)] = vec
    return out


def tangency_residuals(graph: Jet, field: AffineVectorField, order: int
                       ) -> dict[tuple[int, int, int], RationalExpression]:
    """Nonzero coefficients, through the given order, of the tangency equation
    of the field along the graph.  Empty means tangent to that order."""
    eq = build_eqlf(graph, field, order)
    return {key: c for key, c in sorted(eq.coeffs.items()) if not c.is_zero()}
