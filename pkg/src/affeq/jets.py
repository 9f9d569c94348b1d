"""Truncated power-series jets and the two fundamental equations.

A `Jet` stores the coefficients of a series in x, y, z through a stated
truncation order; coefficients are `RationalExpression`s, so a jet may be
fully numeric (a concrete model) or symbolic in jet-coefficient and group
variables (a branch replay).  `build_eqfg` and `build_eqlf` assemble the two
equations everything else in the package is about:

    eqFG = -c.x - d*F + G(a.x + b*F)        (finite equivalence)
    eqLF = sum_i (T_i + A_i.x + B_i F) dF/dx_i - (U0 + C.x + D*F)

The first vanishes identically exactly when the linear map with block matrix
[[a, b], [c, d]] sends the graph of F into the graph of G; the second exactly
when the affine vector field with those twenty entries is tangent to the
graph of F.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence

from .algebra import (
    NonvanishingSet,
    Polynomial,
    PossiblyZeroDivision,
    RationalExpression,
    Variable,
    poly,
    var,
)

Key = tuple[int, int, int]

DEFAULT_ORDER = 7

_COORDS = ("x", "y", "z")


class TruncationError(ValueError):
    """A coefficient beyond the valid truncation order was requested."""


def _check_key(key) -> Key:
    if len(key) != 3 or any((not isinstance(e, int)) or e < 0 for e in key):
        raise ValueError(f"jet keys are triples of nonnegative integers, got {key!r}")
    return tuple(key)


class Jet:
    """Series in x, y, z known exactly through total degree `order`."""

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs: Mapping[Key, object] | Iterable[tuple[Key, object]] = ()):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        d: dict[Key, RationalExpression] = {}
        for key, val in items:
            key = _check_key(key)
            if sum(key) > order:
                continue
            val = RationalExpression.coerce(val)
            if not val.is_zero():
                d[key] = val
        self.order = order
        self.coeffs = d

    # -- constructors -----------------------------------------------------

    @staticmethod
    def zero(order: int) -> "Jet":
        return Jet(order)

    @staticmethod
    def from_polynomial(p: Polynomial, order: int) -> "Jet":
        """Read a polynomial in x, y, z as a jet."""
        xv, yv, zv = var("x"), var("y"), var("z")
        d: dict[Key, RationalExpression] = {}
        for m, c in p.terms():
            key = [0, 0, 0]
            for v, e in m.pairs:
                if v is xv:
                    key[0] = e
                elif v is yv:
                    key[1] = e
                elif v is zv:
                    key[2] = e
                else:
                    raise ValueError(f"not a polynomial in x, y, z: {p}")
            d[tuple(key)] = RationalExpression.coerce(c)
        return Jet(order, d)

    @staticmethod
    def coordinate(axis: int, order: int) -> "Jet":
        key = [0, 0, 0]
        key[axis] = 1
        return Jet(order, {tuple(key): RationalExpression.one()})

    # -- inspection ---------------------------------------------------------

    def coefficient(self, key) -> RationalExpression:
        key = _check_key(key)
        if sum(key) > self.order:
            raise TruncationError(
                f"coefficient {key} lies beyond truncation order {self.order}")
        return self.coeffs.get(key, RationalExpression.zero())

    def terms(self):
        return iter(self.coeffs.items())

    def support(self) -> list[Key]:
        return sorted(self.coeffs.keys())

    def is_zero(self) -> bool:
        return not self.coeffs

    def lowest_degree(self) -> int:
        return min((sum(k) for k in self.coeffs), default=self.order + 1)

    def variables(self):
        out = set()
        for c in self.coeffs.values():
            out |= c.variables()
        return out

    # -- linear structure ------------------------------------------------

    def truncate(self, order: int) -> "Jet":
        if order >= self.order:
            if order == self.order:
                return self
            raise TruncationError(f"cannot extend a jet of order {self.order} to {order}")
        return Jet(order, self.coeffs)

    def __add__(self, other: "Jet") -> "Jet":
        if not isinstance(other, Jet):
            return NotImplemented
        order = min(self.order, other.order)
        d = {k: v for k, v in self.coeffs.items() if sum(k) <= order}
        for k, v in other.coeffs.items():
            if sum(k) > order:
                continue
            s = d.get(k)
            s = v if s is None else s + v
            if s.is_zero():
                d.pop(k, None)
            else:
                d[k] = s
        out = Jet.__new__(Jet)
        out.order = order
        out.coeffs = d
        return out

    def __neg__(self) -> "Jet":
        out = Jet.__new__(Jet)
        out.order = self.order
        out.coeffs = {k: -v for k, v in self.coeffs.items()}
        return out

    def __sub__(self, other: "Jet") -> "Jet":
        if not isinstance(other, Jet):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "Jet":
        c = RationalExpression.coerce(c)
        if c.is_zero():
            return Jet(self.order)
        out = Jet.__new__(Jet)
        out.order = self.order
        out.coeffs = {k: v * c for k, v in self.coeffs.items()}
        return out

    # -- multiplication and composition -----------------------------------

    def __mul__(self, other: "Jet") -> "Jet":
        if not isinstance(other, Jet):
            return NotImplemented
        return jet_multiply(self, other)

    def __pow__(self, k: int) -> "Jet":
        if not isinstance(k, int) or k < 0:
            raise ValueError("jet powers must be nonnegative integers")
        out = Jet(self.order, {(0, 0, 0): RationalExpression.one()})
        base = self
        while k:
            if k & 1:
                out = jet_multiply(out, base)
            k >>= 1
            if k:
                base = jet_multiply(base, base)
        return out

    def compose(self, args: Sequence["Jet"]) -> "Jet":
        return jet_compose(self, args)

    def differentiate(self, axis: int) -> "Jet":
        """Partial derivative along coordinate axis 0, 1 or 2; drops the order by one."""
        if self.order == 0:
            raise TruncationError("cannot differentiate a jet of order 0")
        d: dict[Key, RationalExpression] = {}
        for key, c in self.coeffs.items():
            e = key[axis]
            if not e:
                continue
            nk = list(key)
            nk[axis] = e - 1
            d[tuple(nk)] = c * e
        return Jet(self.order - 1, d)

    # -- coefficient-level operations ---------------------------------------

    def substitute(self, mapping: Mapping[Variable, object],
                   nonvanishing: Optional[NonvanishingSet] = None) -> "Jet":
        d: dict[Key, RationalExpression] = {}
        for k, c in self.coeffs.items():
            s = c.substitute(mapping, nonvanishing)
            if not s.is_zero():
                d[k] = s
        out = Jet.__new__(Jet)
        out.order = self.order
        out.coeffs = d
        return out

    def equals_through(self, other: "Jet", order: int) -> bool:
        if order > min(self.order, other.order):
            raise TruncationError("comparison order exceeds a truncation order")
        keys = {k for k in self.coeffs if sum(k) <= order}
        keys |= {k for k in other.coeffs if sum(k) <= order}
        return all(self.coefficient(k).rf_equal(other.coefficient(k)) for k in keys)

    def __str__(self):
        if not self.coeffs:
            return f"0 (order {self.order})"
        bits = []
        for k in self.support():
            mono = "*".join(f"{n}^{e}" if e > 1 else n
                            for n, e in zip(_COORDS, k) if e) or "1"
            bits.append(f"({self.coeffs[k]})*{mono}")
        return " + ".join(bits) + f"  (order {self.order})"

    def __repr__(self):
        return f"Jet(order={self.order}, terms={len(self.coeffs)})"


def jet_multiply(f: Jet, g: Jet) -> Jet:
    order = min(f.order, g.order)
    d: dict[Key, RationalExpression] = {}
    for ka, ca in f.coeffs.items():
        da = sum(ka)
        if da > order:
            continue
        for kb, cb in g.coeffs.items():
            if da + sum(kb) > order:
                continue
            key = (ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2])
            prod = ca * cb
            s = d.get(key)
            s = prod if s is None else s + prod
            if s.is_zero():
                d.pop(key, None)
            else:
                d[key] = s
    out = Jet.__new__(Jet)
    out.order = order
    out.coeffs = d
    return out


def jet_compose(f: Jet, args: Sequence[Jet]) -> Jet:
    """f(args[0], args[1], args[2]) for argument jets with no constant term."""
    if len(args) != 3:
        raise ValueError("composition needs three argument jets")
    order = min([f.order] + [a.order for a in args])
    for a in args:
        if (0, 0, 0) in a.coeffs:
            raise ValueError("composition arguments must have zero constant term")
    args = [a if a.order == order else a.truncate(order) for a in args]
    pows: list[dict[int, Jet]] = [{0: Jet(order, {(0, 0, 0): RationalExpression.one()})}
                                  for _ in range(3)]

    def power(axis: int, e: int) -> Jet:
        cache = pows[axis]
        have = max(cache)
        while have < e:
            cache[have + 1] = jet_multiply(cache[have], args[axis])
            have += 1
        return cache[e]

    out = Jet(order)
    xy_cache: dict[tuple[int, int], Jet] = {}
    for key, c in f.coeffs.items():
        if sum(key) > order:
            continue
        i, j, k = key
        xy = xy_cache.get((i, j))
        if xy is None:
            xy = jet_multiply(power(0, i), power(1, j))
            xy_cache[(i, j)] = xy
        term = jet_multiply(xy, power(2, k)).scale(c)
        out = out + term
    return out


def coefficient_of(jet: Jet, key) -> RationalExpression:
    return jet.coefficient(key)


class HypersurfaceGraph(Jet):
    """A jet with neither constant nor linear part: the graph u = F(x, y, z)."""

    def __init__(self, order, coeffs=()):
        super().__init__(order, coeffs)
        low = self.lowest_degree()
        if low < 2:
            raise ValueError("a hypersurface graph has no constant or linear terms")

    @staticmethod
    def symbolic(order: int, letter: str = "F") -> "HypersurfaceGraph":
        d = {}
        for n in range(2, order + 1):
            for i in range(n + 1):
                for j in range(n - i + 1):
                    k = n - i - j
                    d[(i, j, k)] = RationalExpression.coerce(
                        poly(var(f"{letter}[{i},{j},{k}]")))
        return HypersurfaceGraph(order, d)


# ---------------------------------------------------------------------------
# Small exact matrix helpers (entries are RationalExpressions)

def _re(obj) -> RationalExpression:
    return RationalExpression.coerce(obj)


def mat_mul(A, B):
    n, m, p = len(A), len(B), len(B[0])
    return [[sum((A[i][k] * B[k][j] for k in range(m)), RationalExpression.zero())
             for j in range(p)] for i in range(n)]


def mat_vec(A, v):
    return [sum((A[i][k] * v[k] for k in range(len(v))), RationalExpression.zero())
            for i in range(len(A))]


def mat_sub(A, B):
    return [[A[i][j] - B[i][j] for j in range(len(A[0]))] for i in range(len(A))]


def mat_det(A) -> RationalExpression:
    n = len(A)
    if n == 0:
        return RationalExpression.one()
    if n == 1:
        return A[0][0]
    out = RationalExpression.zero()
    for j in range(n):
        if A[0][j].is_zero():
            continue
        minor = [row[:j] + row[j + 1:] for row in A[1:]]
        term = A[0][j] * mat_det(minor)
        out = out + (term if j % 2 == 0 else -term)
    return out


def mat_identity(n):
    return [[RationalExpression.one() if i == j else RationalExpression.zero()
             for j in range(n)] for i in range(n)]


def _adjugate(A):
    n = len(A)
    cof = [[None] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            minor = [row[:j] + row[j + 1:] for k, row in enumerate(A) if k != i]
            d = mat_det(minor)
            cof[i][j] = d if (i + j) % 2 == 0 else -d
    return [[cof[j][i] for j in range(n)] for i in range(n)]  # transpose


# ---------------------------------------------------------------------------
# Affine transformations (the finite group side)

class AffineTransformation:
    """A linear map of x, y, z, u given by a 4x4 matrix of rational expressions.

    Block reading: x~_i = sum_j a_ij x_j + b_i u  (rows 0..2),
                   u~   = sum_j c_j  x_j + d   u  (row 3).
    """

    __slots__ = ("matrix",)

    def __init__(self, matrix):
        if len(matrix) != 4 or any(len(row) != 4 for row in matrix):
            raise ValueError("expected a 4x4 matrix")
        self.matrix = [[_re(e) for e in row] for row in matrix]

    @staticmethod
    def group_symbolic() -> "AffineTransformation":
        rows = []
        for i in (1, 2, 3):
            rows.append([poly(var(f"a[{i},{j}]")) for j in (1, 2, 3)] + [poly(var(f"b[{i}]"))])
        rows.append([poly(var(f"c[{j}]")) for j in (1, 2, 3)] + [poly(var("d"))])
        return AffineTransformation(rows)

    @staticmethod
    def identity() -> "AffineTransformation":
        return AffineTransformation(mat_identity(4))

    def det(self) -> RationalExpression:
        return mat_det(self.matrix)

    def compose(self, other: "AffineTransformation") -> "AffineTransformation":
        """self after other (matrix product self.matrix @ other.matrix)."""
        return AffineTransformation(mat_mul(self.matrix, other.matrix))

    def invert(self, nonvanishing: NonvanishingSet) -> "AffineTransformation":
        det = self.det()
        if det.is_zero():
            raise PossiblyZeroDivision("transformation is singular")
        adj = _adjugate(self.matrix)
        inv_det = RationalExpression.one().divide(det, nonvanishing)
        return AffineTransformation([[e * inv_det for e in row] for row in adj])

    def substitute(self, mapping, nonvanishing=None) -> "AffineTransformation":
        return AffineTransformation(
            [[e.substitute(mapping, nonvanishing) for e in row] for row in self.matrix])

    def is_identity(self) -> bool:
        ident = mat_identity(4)
        return all(self.matrix[i][j].rf_equal(ident[i][j])
                   for i in range(4) for j in range(4))

    def __repr__(self):
        rows = "; ".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.matrix)
        return f"AffineTransformation({rows})"


def affine_compose(m1: AffineTransformation, m2: AffineTransformation) -> AffineTransformation:
    return m1.compose(m2)


def affine_invert(m: AffineTransformation, nonvanishing: NonvanishingSet) -> AffineTransformation:
    return m.invert(nonvanishing)


# ---------------------------------------------------------------------------
# Affine vector fields (the infinitesimal side)

class AffineVectorField:
    """An affine field on R^4: twenty scalar entries (Q, t).

    Q is 4x4 with block reading [[A, B], [C, D]]; t = (T1, T2, T3, U0) is the
    value at the origin.  The field is  sum_i (t_i + (Q x)_i) d/dx_i  with
    x4 = u.
    """

    __slots__ = ("Q", "t")

    def __init__(self, Q, t):
        if len(Q) != 4 or any(len(row) != 4 for row in Q) or len(t) != 4:
            raise ValueError("expected a 4x4 matrix and a 4-vector")
        self.Q = [[_re(e) for e in row] for row in Q]
        self.t = [_re(e) for e in t]

    @staticmethod
    def group_symbolic() -> "AffineVectorField":
        rows = []
        for i in (1, 2, 3):
            rows.append([poly(var(f"A[{i},{j}]")) for j in (1, 2, 3)] + [poly(var(f"B[{i}]"))])
        rows.append([poly(var(f"C[{j}]")) for j in (1, 2, 3)] + [poly(var("D"))])
        t = [poly(var("T[1]")), poly(var("T[2]")), poly(var("T[3]")), poly(var("U0"))]
        return AffineVectorField(rows, t)

    @staticmethod
    def zero() -> "AffineVectorField":
        zero = RationalExpression.zero()
        return AffineVectorField([[zero] * 4 for _ in range(4)], [zero] * 4)

    def entries(self) -> list[RationalExpression]:
        """The twenty scalars in a fixed order: t then Q row by row."""
        out = list(self.t)
        for row in self.Q:
            out.extend(row)
        return out

    def is_zero(self) -> bool:
        return all(e.is_zero() for e in self.entries())

    def add(self, other: "AffineVectorField") -> "AffineVectorField":
        return AffineVectorField(
            [[self.Q[i][j] + other.Q[i][j] for j in range(4)] for i in range(4)],
            [self.t[i] + other.t[i] for i in range(4)])

    def scale(self, c) -> "AffineVectorField":
        c = _re(c)
        return AffineVectorField([[e * c for e in row] for row in self.Q],
                                 [e * c for e in self.t])

    def __add__(self, other):
        if not isinstance(other, AffineVectorField):
            return NotImplemented
        return self.add(other)

    def __sub__(self, other):
        if not isinstance(other, AffineVectorField):
            return NotImplemented
        return self.add(other.scale(-1))

    def substitute(self, mapping, nonvanishing=None) -> "AffineVectorField":
        return AffineVectorField(
            [[e.substitute(mapping, nonvanishing) for e in row] for row in self.Q],
            [e.substitute(mapping, nonvanishing) for e in self.t])

    def value_at_origin(self) -> list[RationalExpression]:
        return list(self.t)

    def rf_equal(self, other: "AffineVectorField") -> bool:
        return all(a.rf_equal(b) for a, b in zip(self.entries(), other.entries()))

    def __repr__(self):
        return f"AffineVectorField(t={[str(e) for e in self.t]})"


# ---------------------------------------------------------------------------
# The two fundamental equations

def build_eqfg(F: Jet, G: Jet, M: AffineTransformation, order: Optional[int] = None) -> Jet:
    """The jet of  -c.x - d*F + G(a.x + b*F)  through the given order.

    Vanishing through order n certifies that M maps the order-n jet of the
    graph of F into the graph of G.
    """
    target = min(F.order, G.order)
    if order is not None:
        target = min(target, order)
    Ft = F if F.order == target else F.truncate(target)
    Gt = G if G.order == target else G.truncate(target)
    args = []
    for i in range(3):
        arg = Jet(target, {
            (1, 0, 0): M.matrix[i][0],
            (0, 1, 0): M.matrix[i][1],
            (0, 0, 1): M.matrix[i][2],
        })
        b = M.matrix[i][3]
        if not b.is_zero():
            arg = arg + Ft.scale(b)
        args.append(arg)
    eq = jet_compose(Gt, args)
    lhs = Jet(target, {
        (1, 0, 0): M.matrix[3][0],
        (0, 1, 0): M.matrix[3][1],
        (0, 0, 1): M.matrix[3][2],
    }) + Ft.scale(M.matrix[3][3])
    return eq - lhs


def build_eqlf(F: Jet, L: AffineVectorField, order: Optional[int] = None) -> Jet:
    """The jet of  sum_i (T_i + A_i.x + B_i F) dF/dx_i - (U0 + C.x + D F).

    Valid through F.order - 1: the order-m coefficient involves order-(m+1)
    coefficients of F.
    """
    target = F.order - 1
    if order is not None:
        if order > target:
            raise TruncationError(
                f"eqLF through order {order} needs F through order {order + 1}")
        target = order
    out = Jet(target)
    for i in range(3):
        coeff = Jet(target, {
            (0, 0, 0): L.t[i],
            (1, 0, 0): L.Q[i][0],
            (0, 1, 0): L.Q[i][1],
            (0, 0, 1): L.Q[i][2],
        })
        b = L.Q[i][3]
        if not b.is_zero():
            coeff = coeff + F.truncate(target).scale(b)
        out = out + jet_multiply(coeff, F.differentiate(i))
    rhs = Jet(target, {
        (0, 0, 0): L.t[3],
        (1, 0, 0): L.Q[3][0],
        (0, 1, 0): L.Q[3][1],
        (0, 0, 1): L.Q[3][2],
    }) + F.truncate(target).scale(L.Q[3][3])
    return out - rhs


# ---------------------------------------------------------------------------
# The x <-> y involution

def _swap_name(v: Variable) -> Variable:
    """The image of one variable under the x <-> y relabeling."""
    name = v.name
    if name == "x":
        return var("y")
    if name == "y":
        return var("x")
    if "[" not in name:
        return v
    letter, rest = name.split("[", 1)
    idx = [int(s) for s in rest[:-1].split(",")]
    if letter in ("F", "G"):
        return var(f"{letter}[{idx[1]},{idx[0]},{idx[2]}]")
    swap1 = {1: 2, 2: 1, 3: 3}
    if letter in ("b", "c", "T", "B", "C"):
        return var(f"{letter}[{swap1[idx[0]]}]")
    if letter in ("a", "A"):
        return var(f"{letter}[{swap1[idx[0]]},{swap1[idx[1]]}]")
    return v


def _swap_mapping(variables) -> dict[Variable, Polynomial]:
    out = {}
    for v in variables:
        w = _swap_name(v)
        if w is not v:
            out[v] = poly(w)
    return out


def swap_xy(obj):
    """Relabel x <-> y: jet keys, matrix rows/columns 1 and 2, and all
    indexed variables inside coefficients."""
    if isinstance(obj, Jet):
        d = {}
        for (i, j, k), c in obj.coeffs.items():
            mapping = _swap_mapping(c.variables())
            d[(j, i, k)] = c.substitute(mapping) if mapping else c
        if isinstance(obj, HypersurfaceGraph):
            return HypersurfaceGraph(obj.order, d)
        return Jet(obj.order, d)
    perm = [1, 0, 2, 3]
    if isinstance(obj, AffineTransformation):
        m = [[obj.matrix[perm[i]][perm[j]] for j in range(4)] for i in range(4)]
        return AffineTransformation(
            [[_swap_entry(e) for e in row] for row in m])
    if isinstance(obj, AffineVectorField):
        q = [[_swap_entry(obj.Q[perm[i]][perm[j]]) for j in range(4)] for i in range(4)]
        t = [_swap_entry(obj.t[perm[i]]) for i in range(4)]
        return AffineVectorField(q, t)
    if isinstance(obj, (Polynomial, RationalExpression)):
        e = RationalExpression.coerce(obj)
        mapping = _swap_mapping(e.variables())
        return e.substitute(mapping) if mapping else e
    raise TypeError(f"cannot swap x and y on {type(obj).__name__}")


def _swap_entry(e: RationalExpression) -> RationalExpression:
    mapping = _swap_mapping(e.variables())
    return e.substitute(mapping) if mapping else e
