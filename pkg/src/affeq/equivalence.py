"""Branch replay machinery: states, assignments, and linear representations.

A `BranchState` tracks the progressive reduction of the equivalence problem:
the two symbolic graphs F and G, the group matrix, the symbolic affine field,
an ordered list of assignments (with their composed substitution), and the
set of nonvanishing certificates.  Scripts drive it with a small step
vocabulary (assign / certify / solve_fg / solve_lf / force_lf / stabilize /
derive_representation); every solve is an exact linear solve whose pivot has
to be a nonzero rational or a certified unit, and every assignment to a group
coordinate is checked to be compatible with the identity transformation, so a
replayed script can never wander off the connected component of the identity.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Collection, Iterable, Mapping, Optional, Sequence

from .algebra import (
    Monomial,
    NonvanishingSet,
    NotLinearInVariable,
    Polynomial,
    PossiblyZeroDivision,
    RationalExpression,
    Variable,
    poly,
    var,
)
from .jets import (
    AffineTransformation,
    AffineVectorField,
    HypersurfaceGraph,
    Jet,
    Key,
    build_eqfg,
    build_eqlf,
    mat_det,
    _adjugate,
)


class ReductionError(ValueError):
    """A branch script step could not be carried out as stated."""


class StabilizationError(ReductionError):
    """Equations that should have vanished identically did not."""

    def __init__(self, order: int, residuals: dict):
        lines = ", ".join(f"{k}: {v}" for k, v in sorted(residuals.items()))
        super().__init__(f"order-{order} residuals remain: {lines}")
        self.order = order
        self.residuals = residuals


# -- variable classification -------------------------------------------------

_GROUP_CLASSES = (1, 2, 3, 4)          # a, b, c, d
_FIELD_CLASSES = (5, 6, 7, 8, 9, 10)   # T, A, B, C, D, U0


def is_group_variable(v: Variable) -> bool:
    return v.sort_key[0] in _GROUP_CLASSES


def is_field_variable(v: Variable) -> bool:
    return v.sort_key[0] in _FIELD_CLASSES


def is_jet_variable(v: Variable, letter: Optional[str] = None) -> bool:
    cls = v.sort_key[0]
    if letter == "F":
        return cls == 12
    if letter == "G":
        return cls == 13
    return cls in (12, 13)


def group_identity_value(v: Variable) -> Fraction:
    cls = v.sort_key[0]
    if cls == 1:  # a[i,j]
        return Fraction(1) if v.sort_key[1] == v.sort_key[2] else Fraction(0)
    if cls in (2, 3):  # b, c
        return Fraction(0)
    if cls == 4:  # d
        return Fraction(1)
    raise ValueError(f"{v} is not a group coordinate")


def _identity_mapping(variables) -> dict[Variable, object]:
    """Group coordinates at the identity; G jet values collapse onto F."""
    out: dict[Variable, object] = {}
    for v in variables:
        if is_group_variable(v):
            out[v] = group_identity_value(v)
        elif is_jet_variable(v, "G"):
            i, j, k = v.sort_key[1], v.sort_key[2], v.sort_key[3]
            out[v] = poly(var(f"F[{i},{j},{k}]"))
    return out


def mirror_to_g(e: RationalExpression) -> RationalExpression:
    """Rename every F jet coefficient in e to the matching G coefficient."""
    mapping = {}
    for v in e.variables():
        if is_jet_variable(v, "F"):
            i, j, k = v.sort_key[1:]
            mapping[v] = poly(var(f"G[{i},{j},{k}]"))
    return e.substitute(mapping) if mapping else e


def strip_certified(e: RationalExpression, nonvanishing: NonvanishingSet
                    ) -> RationalExpression:
    """Divide certified factors out of the numerator: the zero set is unchanged."""
    num = e.num
    if num.is_zero():
        return e
    changed = False
    again = True
    while again:
        again = False
        for f in nonvanishing:
            while num.divisible_by(f):
                num = num.exact_divide(f)
                changed = again = True
    if not changed:
        return e
    return RationalExpression(num, e.den)


# -- exact linear solving -----------------------------------------------------

def solve_linear_system(equations: Sequence[RationalExpression],
                        unknowns: Sequence[Variable],
                        nonvanishing: NonvanishingSet
                        ) -> dict[Variable, RationalExpression]:
    """Solve a square linear system exactly by the adjugate formula.

    The equations must be jointly affine-linear in the unknowns and their
    coefficient determinant must be a certified unit.
    """
    k = len(unknowns)
    if len(equations) != k:
        raise ReductionError(f"{len(equations)} equations for {k} unknowns")
    unknown_set = set(unknowns)
    rows: list[list[RationalExpression]] = []
    rhs: list[RationalExpression] = []
    for e in equations:
        for f, _ in e.den:
            if f.variables() & unknown_set:
                raise NotLinearInVariable(f"unknown occurs in denominator of {e}")
        buckets = e.num.collect(unknown_set)
        row = [RationalExpression.zero()] * k
        r0 = RationalExpression.zero()
        for mono, coeff_poly in buckets.items():
            ce = RationalExpression(coeff_poly, e.den)
            if mono.is_one():
                r0 = ce
            elif mono.degree == 1:
                row[unknowns.index(mono.pairs[0][0])] = ce
            else:
                raise NotLinearInVariable(
                    f"equation is not linear in the unknowns: {e}")
        rows.append(row)
        rhs.append(-r0)
    det = mat_det(rows)
    if det.is_zero():
        raise ReductionError("singular linear system")
    adj = _adjugate(rows)
    out: dict[Variable, RationalExpression] = {}
    for i, u in enumerate(unknowns):
        num = RationalExpression.zero()
        for j in range(k):
            num = num + adj[i][j] * rhs[j]
        out[u] = num.divide(det, nonvanishing)
    return out


# -- linear representations ----------------------------------------------------

class LinearRepresentation:
    """G-coefficients at the label keys as a matrix acting on the F-coefficients."""

    def __init__(self, labels: Sequence[Key], matrix: Sequence[Sequence[RationalExpression]]):
        self.labels = [tuple(k) for k in labels]
        n = len(self.labels)
        if len(matrix) != n or any(len(row) != n for row in matrix):
            raise ValueError("representation matrix must be square over the labels")
        self.matrix = [[RationalExpression.coerce(e) for e in row] for row in matrix]

    def entry(self, r: int, c: int) -> RationalExpression:
        return self.matrix[r][c]

    def dimension(self) -> int:
        return len(self.labels)

    def group_variables(self) -> set[Variable]:
        out: set[Variable] = set()
        for row in self.matrix:
            for e in row:
                out |= e.variables()
        return out

    def is_identity_at_identity(self) -> bool:
        mapping = None
        for r, row in enumerate(self.matrix):
            for c, e in enumerate(row):
                if mapping is None or not set(e.variables()) <= set(mapping):
                    mapping = _identity_mapping(e.variables())
                val = e.substitute(mapping)
                want = Fraction(1) if r == c else Fraction(0)
                if not val.rf_equal(RationalExpression.coerce(want)):
                    return False
        return True

    def substitute(self, mapping, nonvanishing=None) -> "LinearRepresentation":
        return LinearRepresentation(
            self.labels,
            [[e.substitute(mapping, nonvanishing) for e in row] for row in self.matrix])

    def compose(self, other: "LinearRepresentation") -> "LinearRepresentation":
        if self.labels != other.labels:
            raise ValueError("label mismatch")
        n = len(self.labels)
        prod = [[sum((self.matrix[i][k] * other.matrix[k][j] for k in range(n)),
                     RationalExpression.zero()) for j in range(n)] for i in range(n)]
        return LinearRepresentation(self.labels, prod)

    def rf_equal(self, other: "LinearRepresentation") -> bool:
        if self.labels != other.labels:
            return False
        n = len(self.labels)
        return all(self.matrix[i][j].rf_equal(other.matrix[i][j])
                   for i in range(n) for j in range(n))

    def determinant(self) -> RationalExpression:
        return mat_det(self.matrix)

    def __repr__(self):
        return f"LinearRepresentation(labels={self.labels})"


class IsotropyReduction:
    """The outcome of a full branch replay: final state plus representation."""

    def __init__(self, branch_id: str, state: "BranchState",
                 representation: Optional[LinearRepresentation]):
        self.branch_id = branch_id
        self.state = state
        self.representation = representation

    def __repr__(self):
        return f"IsotropyReduction({self.branch_id!r})"


# -- the branch state ----------------------------------------------------------

class BranchState:
    """The working state of one branch of the reduction."""

    def __init__(self, order: int):
        self.order = order
        self.F: Jet = HypersurfaceGraph.symbolic(order, "F")
        self.G: Jet = HypersurfaceGraph.symbolic(order, "G")
        self.M: AffineTransformation = AffineTransformation.group_symbolic()
        self.L: AffineVectorField = AffineVectorField.group_symbolic()
        self.nonvanishing = NonvanishingSet()
        self.subs: dict[Variable, RationalExpression] = {}
        self.assignments: list[tuple[Variable, RationalExpression, bool]] = []
        self.field_subs: dict[Variable, RationalExpression] = {}
        self.field_assignments: list[tuple[Variable, RationalExpression]] = []
        self._eqfg_cache: dict[int, Jet] = {}
        self._eqlf_cache: dict[int, Jet] = {}

    def copy(self) -> "BranchState":
        """A fork of this state; children of one branch share the parent replay."""
        out = BranchState.__new__(BranchState)
        out.order = self.order
        out.F, out.G, out.M, out.L = self.F, self.G, self.M, self.L
        out.nonvanishing = self.nonvanishing.copy()
        out.subs = dict(self.subs)
        out.assignments = list(self.assignments)
        out.field_subs = dict(self.field_subs)
        out.field_assignments = list(self.field_assignments)
        out._eqfg_cache = dict(self._eqfg_cache)
        out._eqlf_cache = dict(self._eqlf_cache)
        return out

    # -- equation access ---------------------------------------------------

    def eqfg_jet(self, n: int) -> Jet:
        jet = self._eqfg_cache.get(n)
        if jet is None:
            if n > self.order:
                raise ReductionError(
                    f"equation order {n} exceeds working truncation {self.order}")
            jet = build_eqfg(self.F, self.G, self.M, order=n)
            self._eqfg_cache[n] = jet
        return jet

    def eqlf_jet(self, n: int) -> Jet:
        jet = self._eqlf_cache.get(n)
        if jet is None:
            if n > self.order - 1:
                raise ReductionError(
                    f"tangency order {n} needs truncation {n + 1}, have {self.order}")
            jet = build_eqlf(self.F, self.L, order=n)
            self._eqlf_cache[n] = jet
        return jet

    def eqfg_coefficient(self, key) -> RationalExpression:
        return self.eqfg_jet(sum(key)).coefficient(key)

    def eqlf_coefficient(self, key) -> RationalExpression:
        return self.eqlf_jet(sum(key)).coefficient(key)

    # -- certificates --------------------------------------------------------

    def certify(self, p) -> None:
        p = RationalExpression.coerce(p)
        if p.den:
            raise ReductionError("certify expects a polynomial")
        hit = p.num.substitute(self.subs)
        if isinstance(hit, RationalExpression):
            if hit.is_zero():
                raise ReductionError(f"cannot certify {p.num}: it vanished under the state")
            self.nonvanishing.certify(hit.num)
        else:
            if hit.is_zero():
                raise ReductionError(f"cannot certify {p.num}: it vanished under the state")
            if not hit.is_constant():
                self.nonvanishing.certify(hit)

    # -- assignments ----------------------------------------------------------

    def assign(self, v: Variable, rhs, mirror: bool = True,
               substitute_rhs: bool = True) -> None:
        """Record v := rhs and push it through the whole state.

        Group coordinates must agree with the identity transformation when all
        group variables take their identity values (and G collapses onto F):
        that is what keeps the replay on the identity component.
        """
        rhs = RationalExpression.coerce(rhs)
        if v in self.subs:
            raise ReductionError(f"{v} was already assigned")
        if is_field_variable(v):
            raise ReductionError("field entries go through solve_lf, not assign")
        if substitute_rhs and (rhs.variables() & set(self.subs)):
            rhs = rhs.substitute(self.subs, self.nonvanishing)
        if v in rhs.variables():
            raise ReductionError(f"{v} occurs in its own assignment")
        if is_group_variable(v):
            ident = _identity_mapping(rhs.variables() | {v})
            try:
                at_identity = rhs.substitute(ident)
            except PossiblyZeroDivision:
                raise ReductionError(
                    f"{v} := {rhs} is singular at the identity") from None
            if not at_identity.rf_equal(RationalExpression.coerce(group_identity_value(v))):
                raise ReductionError(
                    f"{v} := {rhs} is incompatible with the identity component "
                    f"(value at identity: {at_identity})")
        mapping: dict[Variable, RationalExpression] = {v: rhs}
        self.assignments.append((v, rhs, False))
        if mirror and is_jet_variable(v, "F"):
            i, j, k = v.sort_key[1:]
            gv = var(f"G[{i},{j},{k}]")
            if gv not in self.subs:
                g_rhs = mirror_to_g(rhs)
                if g_rhs.variables() & set(self.subs):
                    g_rhs = g_rhs.substitute(self.subs, self.nonvanishing)
                mapping[gv] = g_rhs
                self.assignments.append((gv, g_rhs, True))
        self._apply(mapping)

    def _apply(self, mapping: dict[Variable, RationalExpression]) -> None:
        nv = self.nonvanishing
        # keep every certificate alive in its substituted form
        for f in list(nv):
            if f.variables() & set(mapping):
                img = f.substitute(mapping)
                img = img if isinstance(img, RationalExpression) else RationalExpression.coerce(img)
                if img.is_zero():
                    raise ReductionError(
                        f"assignment contradicts the certificate {f} != 0")
                if not img.num.is_constant():
                    nv.certify(img.num)
        for w in list(self.subs):
            val = self.subs[w]
            if val.variables() & set(mapping):
                self.subs[w] = val.substitute(mapping, nv)
        for w, val in mapping.items():
            self.subs[w] = val
        for w in list(self.field_subs):
            val = self.field_subs[w]
            if val.variables() & set(mapping):
                self.field_subs[w] = val.substitute(mapping, nv)
        self.F = self.F.substitute(mapping, nv)
        self.G = self.G.substitute(mapping, nv)
        self.M = self.M.substitute(mapping, nv)
        self.L = self.L.substitute(mapping, nv)
        self._eqfg_cache = {n: jet.substitute(mapping, nv)
                            for n, jet in self._eqfg_cache.items()}
        self._eqlf_cache = {n: jet.substitute(mapping, nv)
                            for n, jet in self._eqlf_cache.items()}

    # -- solving steps -----------------------------------------------------------

    def solve_fg(self, key, v: Variable) -> RationalExpression:
        """Solve the eqFG coefficient at `key` for v and record the assignment."""
        e = strip_certified(self.eqfg_coefficient(key), self.nonvanishing)
        if e.is_zero():
            raise ReductionError(f"equation at {key} already vanished")
        rhs = e.solve_linear(v, self.nonvanishing)
        self.assign(v, rhs, substitute_rhs=False)
        return rhs

    def solve_fg_system(self, pairs: Sequence[tuple[Variable, Key]]
                        ) -> dict[Variable, RationalExpression]:
        """Solve coupled eqFG coefficients simultaneously for group variables."""
        gvars = [v for v, _ in pairs]
        eqs = [strip_certified(self.eqfg_coefficient(k), self.nonvanishing)
               for _, k in pairs]
        sol = solve_linear_system(eqs, gvars, self.nonvanishing)
        for v in gvars:
            self.assign(v, sol[v], substitute_rhs=False)
        return sol

    def solve_lf(self, key, v: Variable) -> RationalExpression:
        """Solve the eqLF coefficient at `key` for a field entry."""
        if not is_field_variable(v):
            raise ReductionError(f"{v} is not a field entry")
        if v in self.field_subs:
            raise ReductionError(f"{v} was already solved")
        e = strip_certified(self.eqlf_coefficient(key), self.nonvanishing)
        rhs = e.solve_linear(v, self.nonvanishing)
        mapping = {v: rhs}
        for w in list(self.field_subs):
            val = self.field_subs[w]
            if v in val.variables():
                self.field_subs[w] = val.substitute(mapping, self.nonvanishing)
        self.field_subs[v] = rhs
        self.field_assignments.append((v, rhs))
        self.L = self.L.substitute(mapping, self.nonvanishing)
        self._eqlf_cache = {n: jet.substitute(mapping, self.nonvanishing)
                            for n, jet in self._eqlf_cache.items()}
        return rhs

    _T_SLOTS = {1: "T[1]", 2: "T[2]", 3: "T[3]"}

    def force_lf(self, key, t_slot: int, v: Variable) -> RationalExpression:
        """Use homogeneity: the eqLF coefficient at `key` must by now be a pure
        combination of T1, T2, T3; its T_{t_slot} coefficient must vanish for
        every tangent field, which pins down the jet coefficient v."""
        e = self.eqlf_coefficient(key)
        bad = [w for w in e.variables() if is_field_variable(w)
               and w.name not in ("T[1]", "T[2]", "T[3]")]
        if bad:
            raise ReductionError(
                f"equation at {key} still involves {sorted(str(b) for b in bad)}")
        t = var(self._T_SLOTS[t_slot])
        if e.num.degree_in(t) > 1 or any(t in f.variables() for f, _ in e.den):
            raise ReductionError(f"equation at {key} is not linear in {t}")
        coeff = RationalExpression(e.num.coefficient_of_power(t, 1), e.den)
        coeff = strip_certified(coeff, self.nonvanishing)
        if coeff.is_zero():
            raise ReductionError(f"T[{t_slot}] coefficient at {key} already vanished")
        rhs = coeff.solve_linear(v, self.nonvanishing)
        self.assign(v, rhs, substitute_rhs=False)
        return rhs

    def force_order(self, n: int, allow_residual: bool = False,
                    keep: Collection[Variable] = ()
                    ) -> list[tuple[Variable, RationalExpression]]:
        """Force every order-n eqLF equation, slot by slot, solving in each
        slot for the lowest-indexed order-(n+1) jet coefficient that still
        works.  Used for the routine orders where no branching is left: every
        equation is a pure T-combination and all slot coefficients must vanish
        identically.  Only the new, order-(n+1) coefficients are fair game —
        lower-order ones are invariants of the branch and must stay free.

        With allow_residual, equations whose coefficients involve only
        lower-order invariants are left standing and returned alongside the
        forced assignments as (done, leftover); they constrain the symmetry
        parameters rather than the jet.  Coefficients in `keep` are never
        solved for — pass the labels of the representation about to be
        derived so they survive as the new branch invariants."""
        keep = set(keep)
        done: list[tuple[Variable, RationalExpression]] = []
        progress = True
        while progress:
            progress = False
            for key in sorted(self.eqlf_jet(n).coeffs):
                if sum(key) != n:
                    continue
                for slot in (1, 2, 3):
                    e = self.eqlf_coefficient(key)
                    if e.is_zero():
                        break
                    candidates = sorted(
                        (w for w in e.variables()
                         if is_jet_variable(w, "F") and w not in self.subs
                         and w not in keep
                         and sum(w.sort_key[1:]) == n + 1),
                        key=lambda w: w.sort_key)
                    for w in candidates:
                        try:
                            rhs = self.force_lf(key, slot, w)
                        except (ReductionError, PossiblyZeroDivision,
                                NotLinearInVariable):
                            continue
                        done.append((w, rhs))
                        progress = True
                        break
        leftover = {key: e for key in sorted(self.eqlf_jet(n).coeffs)
                    if sum(key) == n and not (e := self.eqlf_coefficient(key)).is_zero()}
        if allow_residual:
            return done, leftover
        if leftover:
            raise StabilizationError(n, leftover)
        return done

    # -- stabilization and representations -------------------------------------

    def stabilization_residuals(self, n: int) -> dict[Key, RationalExpression]:
        """Nonzero eqFG coefficients in total degree n."""
        jet = self.eqfg_jet(n)
        return {k: c for k, c in sorted(jet.coeffs.items())
                if sum(k) == n and not c.is_zero()}

    def check_stabilize(self, n: int) -> None:
        residuals = self.stabilization_residuals(n)
        if residuals:
            raise StabilizationError(n, residuals)

    def derive_representation(self, n: int, labels: Sequence[Key],
                              normalize_with: Sequence[tuple[Variable, Key]] = ()
                              ) -> LinearRepresentation:
        """Solve the order-n equations for the G-coefficients at the labels.

        First the group coordinates in `normalize_with` are fixed by the
        equations at their paired keys (a simultaneous linear solve — the
        pairs may couple).  The equations at the label keys are then solved
        for the label G-coefficients, every other order-n equation must
        vanish identically, and the solution must be linear homogeneous in
        the label F-coefficients: its coefficient matrix is the result.
        """
        labels = [tuple(k) for k in labels]
        used_keys = set(labels)
        if normalize_with:
            gvars = [v for v, _ in normalize_with]
            keys = [tuple(k) for _, k in normalize_with]
            used_keys |= set(keys)
            eqs = [strip_certified(self.eqfg_coefficient(k), self.nonvanishing)
                   for k in keys]
            sol = solve_linear_system(eqs, gvars, self.nonvanishing)
            for v in gvars:
                self.assign(v, sol[v], substitute_rhs=False)
        g_unknowns = [var(f"G[{i},{j},{k}]") for (i, j, k) in labels]
        for gv in g_unknowns:
            if gv in self.subs:
                raise ReductionError(f"label coefficient {gv} was already assigned")
        eqs = [strip_certified(self.eqfg_coefficient(k), self.nonvanishing)
               for k in labels]
        sol = solve_linear_system(eqs, g_unknowns, self.nonvanishing)
        # every other equation of this order has to be identically zero once
        # the solved label coefficients are substituted back in
        residuals = {}
        for k, c in self.stabilization_residuals(n).items():
            if k in used_keys:
                continue
            if c.variables() & set(sol):
                c = c.substitute(sol, self.nonvanishing)
            if not c.is_zero():
                residuals[k] = c
        if residuals:
            raise StabilizationError(n, residuals)
        f_labels = [var(f"F[{i},{j},{k}]") for (i, j, k) in labels]
        matrix: list[list[RationalExpression]] = []
        for r, gv in enumerate(g_unknowns):
            expr = sol[gv]
            buckets = expr.num.collect(set(f_labels))
            row = [RationalExpression.zero()] * len(labels)
            for mono, coeff_poly in buckets.items():
                if mono.is_one():
                    if not coeff_poly.is_zero():
                        raise ReductionError(
                            f"{gv} has an affine part: {expr}")
                    continue
                if mono.degree != 1:
                    raise ReductionError(f"{gv} is not linear in the labels: {expr}")
                c = mono.pairs[0][0]
                if c not in f_labels:
                    raise ReductionError(
                        f"{gv} depends on non-label coefficient {c}: {expr}")
                row[f_labels.index(c)] = RationalExpression(coeff_poly, expr.den)
            stray = {w for w in expr.variables()
                     if is_jet_variable(w) and w not in f_labels}
            if stray:
                raise ReductionError(
                    f"{gv} depends on {sorted(str(s) for s in stray)}: {expr}")
            matrix.append(row)
        rep = LinearRepresentation(labels, matrix)
        if not rep.is_identity_at_identity():
            raise ReductionError("representation is not the identity at the identity")
        return rep


# -- coefficient-space vector fields --------------------------------------------

class CoefficientSpaceField:
    """A vector field on the space of label coefficients.

    components[v] is the v-component, a polynomial in the label coefficients.
    """

    def __init__(self, labels: Sequence[Variable], components: Mapping[Variable, Polynomial]):
        self.labels = list(labels)
        self.components = {v: poly(components.get(v, Polynomial.zero()))
                           for v in self.labels}

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.components.values())

    def component_matrix(self) -> list[list[Polynomial]]:
        """Rows: this field's components; columns follow the label order."""
        return [[self.components[v]] for v in self.labels]

    def __repr__(self):
        inner = ", ".join(f"{v}: {p}" for v, p in self.components.items())
        return f"CoefficientSpaceField({inner})"


def representation_generators(rep: LinearRepresentation,
                              curves: Sequence[Mapping[Variable, object]]
                              ) -> list[CoefficientSpaceField]:
    """Differentiate the representation along one-parameter subgroup curves.

    Each curve substitutes the group variables by polynomials in eps that
    pass through the identity at eps = 0; the derivative at 0 is an
    infinitesimal generator, returned as a field on the label space.  The
    derivative of num/den is taken by the quotient rule at eps = 0, where the
    denominator is a nonzero rational, so no division certificates are needed.
    """
    eps = var("eps")
    zero_eps = {eps: Fraction(0)}
    f_labels = [var(f"F[{i},{j},{k}]") for (i, j, k) in rep.labels]
    out = []
    for curve in curves:
        mapping = {}
        for v, val in curve.items():
            val = val.as_polynomial() if isinstance(val, RationalExpression) else poly(val)
            mapping[v] = val
        components: dict[Variable, Polynomial] = {}
        for r in range(rep.dimension()):
            acc = Polynomial.zero()
            for c in range(rep.dimension()):
                entry = rep.entry(r, c)
                n_img = entry.num.substitute(mapping)
                d_img = entry.den_product().substitute(mapping)
                if isinstance(n_img, RationalExpression) or isinstance(d_img, RationalExpression):
                    raise ReductionError("curves must substitute polynomials")
                bad = (n_img.variables() | d_img.variables()) - {eps}
                if bad:
                    raise ReductionError(
                        f"curve leaves {sorted(str(b) for b in bad)} free in an entry")
                n0 = n_img.substitute(zero_eps).constant_value()
                n1 = n_img.differentiate(eps).substitute(zero_eps).constant_value()
                d0 = d_img.substitute(zero_eps).constant_value()
                d1 = d_img.differentiate(eps).substitute(zero_eps).constant_value()
                if d0 == 0:
                    raise ReductionError("curve denominator vanishes at eps = 0")
                dv = (n1 * d0 - n0 * d1) / (d0 * d0)
                if dv:
                    acc = acc + poly(f_labels[c]) * dv
            components[f_labels[r]] = acc
        out.append(CoefficientSpaceField(f_labels, components))
    return out


def minor_rank_ideal(fields: Sequence[CoefficientSpaceField], size: int
                     ) -> list[Polynomial]:
    """All size x size minors of the matrix whose rows are the fields'
    component vectors — the locus where the span has rank < size."""
    if not fields:
        return []
    labels = fields[0].labels
    rows = [[f.components[v] for v in labels] for f in fields]
    from itertools import combinations

    minors = []
    for rsel in combinations(range(len(rows)), size):
        for csel in combinations(range(len(labels)), size):
            sub = [[RationalExpression.coerce(rows[r][c]) for c in csel] for r in rsel]
            d = mat_det(sub)
            if not d.is_zero():
                minors.append(d.num)
    return minors


# -- the square-root certificate for the circle case ------------------------------

def case_c2_certificate() -> dict[str, bool]:
    """Exact certificate that the rotation normalization in the circle case
    exists: with S = alpha^2 + beta^2 and w standing for alpha*sqrt(S)
    (so w^2 = alpha^4 + alpha^2 beta^2), the choice cc^2 = (S +/- w)/(2S)
    satisfies 4 cc^2 (1 - cc^2) = beta^2/S and (1 - 2 cc^2)^2 = alpha^2/S.
    """
    alpha, beta, w = poly(var("alpha")), poly(var("beta")), poly(var("w"))
    s = alpha ** 2 + beta ** 2
    relation = w ** 2 - alpha ** 4 - alpha ** 2 * beta ** 2
    out: dict[str, bool] = {}
    for sign, tag in ((1, "plus"), (-1, "minus")):
        t = RationalExpression((s + w * sign) / 2, [(s, 1)])
        expr1 = t * (RationalExpression.one() - t) * 4 - RationalExpression(beta ** 2, [(s, 1)])
        expr2 = (RationalExpression.one() - t * 2) ** 2 - RationalExpression(alpha ** 2, [(s, 1)])
        out[f"double_angle_{tag}"] = expr1.num.divisible_by(relation) or expr1.num.is_zero()
        out[f"cos_square_{tag}"] = expr2.num.divisible_by(relation) or expr2.num.is_zero()
    return out
