"""Exact sparse multivariate arithmetic over the rationals.

Everything downstream (jets, branch replays, Groebner bases) runs on the
four types implemented here: interned `Variable`s, exponent-vector
`Monomial`s, sparse `Polynomial`s with `fractions.Fraction` coefficients,
and `RationalExpression`s whose denominators are kept as explicit lists of
(factor, multiplicity) pairs.  There is deliberately no floating point and
no multivariate gcd: the only simplification ever attempted is exact trial
division, and a polynomial may only be divided by once a `NonvanishingSet`
can certify it away from zero.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

Scalar = Union[int, Fraction]


class NotDivisible(ArithmeticError):
    """Exact polynomial division failed: the quotient does not exist."""


class PossiblyZeroDivision(ArithmeticError):
    """An operation would divide by something not certified nonvanishing."""


class NotLinearInVariable(ValueError):
    """solve_linear was handed an expression that is not degree 1 in the unknown."""


# --------------------------------------------------------------------------
# Variables
#
# The variable universe is closed: coordinates, group-matrix entries,
# vector-field entries, jet coefficients and a small stock of auxiliary
# names.  Each variable carries a sort key (class, i, j, k); smaller keys
# are *larger* in every monomial order, so coordinates dominate group
# entries, which dominate field entries, which dominate jet coefficients.

_FIXED_KEYS = {
    "x": (0, 0, 0, 0),
    "y": (0, 1, 0, 0),
    "z": (0, 2, 0, 0),
    "u": (0, 3, 0, 0),
    "d": (4, 0, 0, 0),
    "D": (9, 0, 0, 0),
    "U0": (10, 0, 0, 0),
    "Lam": (11, 0, 0, 0),
    "Phi": (11, 1, 0, 0),
    "Psi": (11, 2, 0, 0),
    "eps": (11, 3, 0, 0),
    "alpha": (11, 4, 0, 0),
    "beta": (11, 5, 0, 0),
    "cc": (11, 6, 0, 0),
    "ss": (11, 7, 0, 0),
    "w": (11, 8, 0, 0),
}

# letter -> (class id, number of indices, (low, high) bound per index)
_INDEXED_KEYS = {
    "a": (1, 2, (1, 3)),
    "b": (2, 1, (1, 3)),
    "c": (3, 1, (1, 3)),
    "T": (5, 1, (1, 3)),
    "A": (6, 2, (1, 3)),
    "B": (7, 1, (1, 3)),
    "C": (8, 1, (1, 3)),
    "F": (12, 3, (0, 64)),
    "G": (13, 3, (0, 64)),
}

_NAME_RE = re.compile(r"^([A-Za-z]+[A-Za-z0-9]*)(?:\[([0-9]+(?:,[0-9]+)*)\])?$")


class Variable:
    """An interned symbol.  Identity equality; totally ordered by sort key."""

    __slots__ = ("name", "sort_key", "_hash")

    def __init__(self, name: str, sort_key: tuple):
        self.name = name
        self.sort_key = sort_key
        self._hash = hash(name)

    def __repr__(self):
        return self.name

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Variable"):
        return self.sort_key < other.sort_key

    def as_poly(self) -> "Polynomial":
        return Polynomial.variable(self)


_REGISTRY: dict[str, Variable] = {}


def _sort_key_for(name: str) -> tuple:
    key = _FIXED_KEYS.get(name)
    if key is not None:
        return key
    m = _NAME_RE.match(name)
    if m and m.group(2) is not None:
        letter, idx_str = m.group(1), m.group(2)
        info = _INDEXED_KEYS.get(letter)
        if info is not None:
            cls, arity, (lo, hi) = info
            idx = tuple(int(s) for s in idx_str.split(","))
            if len(idx) == arity and all(lo <= i <= hi for i in idx):
                return (cls,) + idx + (0,) * (3 - arity)
    raise ValueError(f"unknown variable: {name!r}")


def var(name: str) -> Variable:
    """Return the interned variable with this name, creating it on demand."""
    v = _REGISTRY.get(name)
    if v is None:
        v = Variable(name, _sort_key_for(name))
        _REGISTRY[name] = v
    return v


def jet_var(letter: str, i: int, j: int, k: int) -> Variable:
    """The jet-coefficient variable F[i,j,k] or G[i,j,k]."""
    if letter not in ("F", "G"):
        raise ValueError("jet coefficients are F or G")
    return var(f"{letter}[{i},{j},{k}]")


X, Y, Z, U = var("x"), var("y"), var("z"), var("u")


# --------------------------------------------------------------------------
# Monomials

class Monomial:
    """A power product, stored as (variable, exponent) pairs, largest variable first."""

    __slots__ = ("pairs", "degree", "_hash")

    def __init__(self, pairs: Iterable[tuple[Variable, int]]):
        ps = [(v, e) for v, e in pairs if e]
        ps.sort(key=lambda p: p[0].sort_key)
        for v, e in ps:
            if e < 0:
                raise ValueError("negative exponent in monomial")
        self.pairs = tuple(ps)
        self.degree = sum(e for _, e in ps)
        self._hash = hash(self.pairs)

    @staticmethod
    def one() -> "Monomial":
        return _MONO_ONE

    def __hash__(self):
        return self._hash

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.pairs == other.pairs

    def is_one(self) -> bool:
        return not self.pairs

    def exponent(self, v: Variable) -> int:
        for w, e in self.pairs:
            if w is v:
                return e
        return 0

    def variables(self):
        return [v for v, _ in self.pairs]

    def mul(self, other: "Monomial") -> "Monomial":
        if not self.pairs:
            return other
        if not other.pairs:
            return self
        merged: dict[Variable, int] = dict(self.pairs)
        for v, e in other.pairs:
            merged[v] = merged.get(v, 0) + e
        return Monomial(merged.items())

    def divides(self, other: "Monomial") -> bool:
        if self.degree > other.degree:
            return False
        oth = dict(other.pairs)
        return all(oth.get(v, 0) >= e for v, e in self.pairs)

    def divide(self, other: "Monomial") -> "Monomial":
        """self / other, raising NotDivisible if any exponent would go negative."""
        out = dict(self.pairs)
        for v, e in other.pairs:
            ne = out.get(v, 0) - e
            if ne < 0:
                raise NotDivisible(f"{other} does not divide {self}")
            if ne == 0:
                out.pop(v, None)
            else:
                out[v] = ne
        return Monomial(out.items())

    def lcm(self, other: "Monomial") -> "Monomial":
        out = dict(self.pairs)
        for v, e in other.pairs:
            if out.get(v, 0) < e:
                out[v] = e
        return Monomial(out.items())

    def coprime_with(self, other: "Monomial") -> bool:
        vs = {v for v, _ in self.pairs}
        return all(v not in vs for v, _ in other.pairs)

    def __str__(self):
        if not self.pairs:
            return "1"
        bits = []
        for v, e in self.pairs:
            bits.append(v.name if e == 1 else f"{v.name}^{e}")
        return "*".join(bits)

    def __repr__(self):
        return f"Monomial({self})"


_MONO_ONE = Monomial(())


# --------------------------------------------------------------------------
# Monomial orders

class MonomialOrder:
    """Total order on monomials.  compare(a, b) returns +1, 0 or -1."""

    def compare(self, a: Monomial, b: Monomial) -> int:
        raise NotImplementedError

    def max(self, monomials: Iterable[Monomial]) -> Monomial:
        best = None
        for m in monomials:
            if best is None or self.compare(m, best) > 0:
                best = m
        if best is None:
            raise ValueError("max of no monomials")
        return best

    def sorted(self, monomials: Iterable[Monomial], reverse: bool = False):
        import functools

        return sorted(monomials, key=functools.cmp_to_key(self.compare), reverse=reverse)


def _lex_compare(pa, pb) -> int:
    # Walk both pair lists largest-variable-first; the first variable where
    # the exponents differ decides, larger exponent winning.
    ia = ib = 0
    while ia < len(pa) or ib < len(pb):
        if ia < len(pa) and ib < len(pb):
            va, ea = pa[ia]
            vb, eb = pb[ib]
            if va is vb:
                if ea != eb:
                    return 1 if ea > eb else -1
                ia += 1
                ib += 1
            elif va.sort_key < vb.sort_key:
                return 1  # a has positive exponent on a larger variable
            else:
                return -1
        elif ia < len(pa):
            return 1
        else:
            return -1
    return 0


def _revlex_tiebreak(pa, pb) -> int:
    # Both sides have the same restricted degree.  Find the smallest
    # variable where the exponents differ; the smaller exponent wins.
    ia, ib = len(pa) - 1, len(pb) - 1
    while ia >= 0 or ib >= 0:
        if ia >= 0 and ib >= 0:
            va, ea = pa[ia]
            vb, eb = pb[ib]
            if va is vb:
                if ea != eb:
                    return -1 if ea > eb else 1
                ia -= 1
                ib -= 1
            elif va.sort_key > vb.sort_key:
                return -1  # a alone has a positive exponent on the smallest variable
            else:
                return 1
        elif ia >= 0:
            return -1
        else:
            return 1
    return 0


class DegRevLex(MonomialOrder):
    """Degree, ties broken reverse-lexicographically (the default order)."""

    def compare(self, a: Monomial, b: Monomial) -> int:
        if a.degree != b.degree:
            return 1 if a.degree > b.degree else -1
        return _revlex_tiebreak(a.pairs, b.pairs)

    def __repr__(self):
        return "degrevlex"


class Lex(MonomialOrder):
    def compare(self, a: Monomial, b: Monomial) -> int:
        return _lex_compare(a.pairs, b.pairs)

    def __repr__(self):
        return "lex"


class BlockOrder(MonomialOrder):
    """Eliminination order: degrevlex on the front block, then on the rest.

    Any monomial involving a front variable is larger than any monomial
    free of them, which is what makes `elimination_ideal` work.
    """

    def __init__(self, front: Iterable[Variable]):
        self.front = frozenset(front)

    def compare(self, a: Monomial, b: Monomial) -> int:
        fa = [(v, e) for v, e in a.pairs if v in self.front]
        fb = [(v, e) for v, e in b.pairs if v in self.front]
        da = sum(e for _, e in fa)
        db = sum(e for _, e in fb)
        if da != db:
            return 1 if da > db else -1
        c = _revlex_tiebreak(fa, fb)
        if c:
            return c
        ra = [(v, e) for v, e in a.pairs if v not in self.front]
        rb = [(v, e) for v, e in b.pairs if v not in self.front]
        da = sum(e for _, e in ra)
        db = sum(e for _, e in rb)
        if da != db:
            return 1 if da > db else -1
        return _revlex_tiebreak(ra, rb)

    def __repr__(self):
        names = ",".join(sorted(v.name for v in self.front))
        return f"block({names})"


DEGREVLEX = DegRevLex()
LEX = Lex()


def elimination_order(front: Iterable[Variable]) -> BlockOrder:
    return BlockOrder(front)


# --------------------------------------------------------------------------
# Polynomials

def _coerce_scalar(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, int):
        return Fraction(c)
    raise TypeError(f"not a rational scalar: {c!r}")


class Polynomial:
    """Sparse multivariate polynomial with Fraction coefficients.

    Immutable once constructed; zero coefficients are dropped on the way in.
    """

    __slots__ = ("_terms", "_hash", "_str")

    def __init__(self, terms: Mapping[Monomial, Fraction] | Iterable[tuple[Monomial, Fraction]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        d: dict[Monomial, Fraction] = {}
        for m, c in items:
            c = _coerce_scalar(c)
            if c:
                prev = d.get(m)
                if prev is None:
                    d[m] = c
                else:
                    s = prev + c
                    if s:
                        d[m] = s
                    else:
                        del d[m]
        self._terms = d
        self._hash = None
        self._str = None

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero() -> "Polynomial":
        return _POLY_ZERO

    @staticmethod
    def one() -> "Polynomial":
        return _POLY_ONE

    @staticmethod
    def constant(c) -> "Polynomial":
        return Polynomial({_MONO_ONE: _coerce_scalar(c)})

    @staticmethod
    def variable(v: Variable) -> "Polynomial":
        return Polynomial({Monomial(((v, 1),)): Fraction(1)})

    @staticmethod
    def _coerce(obj) -> "Polynomial":
        if isinstance(obj, Polynomial):
            return obj
        if isinstance(obj, Variable):
            return Polynomial.variable(obj)
        if isinstance(obj, (int, Fraction)):
            return Polynomial.constant(obj)
        if isinstance(obj, RationalExpression):
            if obj.den:
                raise TypeError("rational expression with denominator is not a polynomial")
            return obj.num
        raise TypeError(f"cannot coerce {obj!r} to Polynomial")

    # -- inspection ---------------------------------------------------

    def terms(self) -> Iterator[tuple[Monomial, Fraction]]:
        return iter(self._terms.items())

    def monomials(self):
        return self._terms.keys()

    def coefficient(self, m: Monomial) -> Fraction:
        return self._terms.get(m, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return self._terms == {_MONO_ONE: Fraction(1)}

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and _MONO_ONE in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"not a constant: {self}")
        return self._terms.get(_MONO_ONE, Fraction(0))

    def __len__(self):
        return len(self._terms)

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((m.degree for m in self._terms), default=-1)

    def degree_in(self, v: Variable) -> int:
        if not self._terms:
            return -1
        return max(m.exponent(v) for m in self._terms)

    def variables(self) -> set[Variable]:
        out: set[Variable] = set()
        for m in self._terms:
            out.update(m.variables())
        return out

    def leading(self, order: MonomialOrder = DEGREVLEX) -> tuple[Monomial, Fraction]:
        m = order.max(self._terms.keys())
        return m, self._terms[m]

    # -- arithmetic ---------------------------------------------------

    def __add__(self, other):
        try:
            other = Polynomial._coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        d = dict(self._terms)
        for m, c in other._terms.items():
            s = d.get(m, _F0) + c
            if s:
                d[m] = s
            else:
                d.pop(m, None)
        return Polynomial._raw(d)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = Polynomial._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coerce_scalar(other)
            if not c:
                return _POLY_ZERO
            return Polynomial._raw({m: k * c for m, k in self._terms.items()})
        try:
            other = Polynomial._coerce(other)
        except TypeError:
            return NotImplemented
        if not self._terms or not other._terms:
            return _POLY_ZERO
        # iterate over the shorter operand's terms in the outer loop
        a, b = (self._terms, other._terms)
        if len(a) > len(b):
            a, b = b, a
        d: dict[Monomial, Fraction] = {}
        for ma, ca in a.items():
            for mb, cb in b.items():
                m = ma.mul(mb)
                s = d.get(m, _F0) + ca * cb
                if s:
                    d[m] = s
                else:
                    d.pop(m, None)
        return Polynomial._raw(d)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("polynomial powers must be nonnegative integers")
        result = _POLY_ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            c = _coerce_scalar(other)
            if not c:
                raise ZeroDivisionError("division of polynomial by zero scalar")
            return self * (Fraction(1) / c)
        return NotImplemented  # polynomial/polynomial must go through exact_divide

    @staticmethod
    def _raw(d: dict) -> "Polynomial":
        p = Polynomial.__new__(Polynomial)
        p._terms = d
        p._hash = None
        p._str = None
        return p

    # -- equality / hashing --------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_constant() and self._terms.get(_MONO_ONE, _F0) == other
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    # -- content and division -------------------------------------------

    def content(self, order: MonomialOrder = DEGREVLEX) -> Fraction:
        """The positive rational c with self = c * primitive, negated when the
        leading coefficient is negative.  content(0) = 0."""
        if not self._terms:
            return _F0
        num_g = 0
        den_l = 1
        for c in self._terms.values():
            num_g = gcd(num_g, c.numerator)
            den_l = lcm(den_l, c.denominator)
        c = Fraction(num_g, den_l)
        if self.leading(order)[1] < 0:
            c = -c
        return c

    def primitive_part(self, order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        if not self._terms:
            return self
        c = self.content(order)
        if c == 1:
            return self
        inv = Fraction(1) / c
        return Polynomial._raw({m: k * inv for m, k in self._terms.items()})

    def exact_divide(self, divisor: "Polynomial", order: MonomialOrder = DEGREVLEX) -> "Polynomial":
        """Exact quotient self/divisor; raises NotDivisible when none exists."""
        divisor = Polynomial._coerce(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("exact_divide by zero polynomial")
        if divisor.is_constant():
            return self / divisor.constant_value()
        if not self._terms:
            return _POLY_ZERO
        lt_m, lt_c = divisor.leading(order)
        rem = dict(self._terms)
        quot: dict[Monomial, Fraction] = {}
        while rem:
            m = order.max(rem.keys())
            c = rem[m]
            try:
                q = m.divide(lt_m)
            except NotDivisible:
                raise NotDivisible(f"({divisor}) does not divide ({self})") from None
            qc = c / lt_c
            quot[q] = quot.get(q, _F0) + qc
            for dm, dc in divisor._terms.items():
                key = q.mul(dm)
                s = rem.get(key, _F0) - qc * dc
                if s:
                    rem[key] = s
                else:
                    rem.pop(key, None)
        return Polynomial._raw(quot)

    def divisible_by(self, divisor: "Polynomial") -> bool:
        try:
            self.exact_divide(divisor)
            return True
        except NotDivisible:
            return False

    # -- calculus, substitution, collection ------------------------------

    def differentiate(self, v: Variable) -> "Polynomial":
        d: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            e = m.exponent(v)
            if not e:
                continue
            pairs = [(w, k) for w, k in m.pairs if w is not v]
            if e > 1:
                pairs.append((v, e - 1))
            nm = Monomial(pairs)
            s = d.get(nm, _F0) + c * e
            if s:
                d[nm] = s
            else:
                d.pop(nm, None)
        return Polynomial._raw(d)

    def substitute(self, mapping: Mapping[Variable, object]):
        """Substitute values for variables.

        Values may be scalars, Variables or Polynomials (the result is then a
        Polynomial), or RationalExpressions (the result is then a
        RationalExpression).
        """
        relevant = {}
        my_vars = self.variables()
        rational = False
        for v, val in mapping.items():
            if v not in my_vars:
                continue
            if isinstance(val, RationalExpression):
                if val.den:
                    rational = True
                    relevant[v] = val
                else:
                    relevant[v] = val.num
            else:
                relevant[v] = Polynomial._coerce(val)
        if not relevant:
            return self
        if rational:
            relevant = {v: RationalExpression.coerce(val) for v, val in relevant.items()}
            return self._substitute_rational(relevant)
        out = _POLY_ZERO
        pow_cache: dict[tuple[Variable, int], Polynomial] = {}
        for m, c in self._terms.items():
            untouched = [(v, e) for v, e in m.pairs if v not in relevant]
            acc = Polynomial({Monomial(untouched): c})
            for v, e in m.pairs:
                val = relevant.get(v)
                if val is None:
                    continue
                p = pow_cache.get((v, e))
                if p is None:
                    p = val ** e
                    pow_cache[(v, e)] = p
                acc = acc * p
            out = out + acc
        return out

    def _substitute_rational(self, relevant) -> "RationalExpression":
        out = RationalExpression.zero()
        pow_cache: dict[tuple[Variable, int], RationalExpression] = {}
        for m, c in self._terms.items():
            untouched = [(v, e) for v, e in m.pairs if v not in relevant]
            acc = RationalExpression.from_polynomial(Polynomial({Monomial(untouched): c}))
            for v, e in m.pairs:
                val = relevant.get(v)
                if val is None:
                    continue
                p = pow_cache.get((v, e))
                if p is None:
                    p = val ** e
                    pow_cache[(v, e)] = p
                acc = acc * p
            out = out + acc
        return out

    def collect(self, vars: Iterable[Variable]) -> dict[Monomial, "Polynomial"]:
        """Write self as a sum over monomials in `vars` with coefficients in the rest."""
        vs = set(vars)
        out: dict[Monomial, dict[Monomial, Fraction]] = {}
        for m, c in self._terms.items():
            inside = [(v, e) for v, e in m.pairs if v in vs]
            outside = [(v, e) for v, e in m.pairs if v not in vs]
            key = Monomial(inside)
            rest = Monomial(outside)
            bucket = out.setdefault(key, {})
            bucket[rest] = bucket.get(rest, _F0) + c
        return {k: Polynomial._raw({m: c for m, c in d.items() if c}) for k, d in out.items()
                if any(d.values())}

    def coefficient_of_power(self, v: Variable, k: int) -> "Polynomial":
        """The coefficient of v**k, a polynomial in the remaining variables."""
        d: dict[Monomial, Fraction] = {}
        for m, c in self._terms.items():
            if m.exponent(v) == k:
                d[Monomial([(w, e) for w, e in m.pairs if w is not v])] = c
        return Polynomial._raw(d)

    # -- printing --------------------------------------------------------

    def __str__(self):
        if self._str is not None:
            return self._str
        if not self._terms:
            self._str = "0"
            return self._str
        monos = DEGREVLEX.sorted(self._terms.keys(), reverse=True)
        bits: list[str] = []
        for m in monos:
            c = self._terms[m]
            mag = abs(c)
            if m.is_one():
                body = str(mag)
            elif mag == 1:
                body = str(m)
            else:
                body = f"{mag}*{m}"
            if not bits:
                bits.append(body if c > 0 else f"-{body}")
            else:
                bits.append(f"+ {body}" if c > 0 else f"- {body}")
        self._str = " ".join(bits)
        return self._str

    def __repr__(self):
        return f"Polynomial({self})"


_F0 = Fraction(0)
_POLY_ZERO = Polynomial()
_POLY_ONE = Polynomial.constant(1)


def poly(obj) -> Polynomial:
    """Coerce a scalar, Variable or Polynomial to a Polynomial."""
    return Polynomial._coerce(obj)


# --------------------------------------------------------------------------
# Nonvanishing certificates

class NonvanishingSet:
    """A set of polynomials certified to be nonvanishing on the current locus.

    A polynomial is a *certified unit* when it is a nonzero rational multiple
    of a product of certified factors; only certified units may ever be
    divided by.  Factors are stored in primitive positive-leading-coefficient
    form, so certification is insensitive to scaling.
    """

    def __init__(self, factors: Iterable = ()):
        self._factors: dict[Polynomial, None] = {}
        for f in factors:
            self.certify(f)

    def certify(self, p) -> Polynomial:
        p = Polynomial._coerce(p)
        if p.is_zero():
            raise ValueError("cannot certify the zero polynomial as nonvanishing")
        if p.is_constant():
            return _POLY_ONE
        prim = p.primitive_part()
        self._factors.setdefault(prim, None)
        return prim

    def factors(self) -> list[Polynomial]:
        return list(self._factors)

    def copy(self) -> "NonvanishingSet":
        out = NonvanishingSet()
        out._factors = dict(self._factors)
        return out

    def __contains__(self, p) -> bool:
        p = Polynomial._coerce(p)
        return p.primitive_part() in self._factors

    def __iter__(self):
        return iter(self._factors)

    def __len__(self):
        return len(self._factors)

    def _search(self, prim: Polynomial, counts: dict[Polynomial, int]) -> bool:
        if prim.is_one():
            return True
        for f in self._factors:
            if f.degree() > prim.degree():
                continue
            try:
                q = prim.exact_divide(f)
            except NotDivisible:
                continue
            counts[f] = counts.get(f, 0) + 1
            if self._search(q, counts):
                return True
            counts[f] -= 1
            if not counts[f]:
                del counts[f]
        return False

    def factor_unit(self, p) -> tuple[Fraction, tuple[tuple[Polynomial, int], ...]]:
        """Factor p as content * prod(certified ** multiplicity).

        Raises PossiblyZeroDivision when p is not a certified unit.
        """
        p = Polynomial._coerce(p)
        if p.is_zero():
            raise PossiblyZeroDivision("zero is never a unit")
        c = p.content()
        prim = p.primitive_part()
        counts: dict[Polynomial, int] = {}
        if not self._search(prim, counts):
            raise PossiblyZeroDivision(f"not certified nonvanishing: {p}")
        den = tuple(sorted(counts.items(), key=lambda fc: str(fc[0])))
        return c, den

    def is_certified_unit(self, p) -> bool:
        try:
            self.factor_unit(p)
            return True
        except PossiblyZeroDivision:
            return False

    def __repr__(self):
        inner = ", ".join(str(f) for f in self._factors)
        return f"NonvanishingSet({{{inner}}})"


# --------------------------------------------------------------------------
# Rational expressions

def _merge_max(d1, d2):
    out = dict(d1)
    for f, m in d2:
        if out.get(f, 0) < m:
            out[f] = m
    return out


class RationalExpression:
    """numerator / product of (factor, multiplicity) pairs.

    Denominator factors are primitive with positive leading coefficient;
    rational content lives in the numerator.  The representation is not
    canonical (no gcd is ever computed) — use rf_equal for semantic equality.
    """

    __slots__ = ("num", "den", "_str")

    def __init__(self, num, den: Iterable[tuple[Polynomial, int]] = ()):
        num = Polynomial._coerce(num)
        clean: dict[Polynomial, int] = {}
        for f, m in den:
            if m < 0:
                raise ValueError("negative multiplicity in denominator")
            if m == 0:
                continue
            f = Polynomial._coerce(f)
            if f.is_zero():
                raise ZeroDivisionError("zero factor in denominator")
            if f.is_constant():
                num = num / (f.constant_value() ** m)
                continue
            c = f.content()
            if c != 1:
                num = num / (c ** m)
                f = f.primitive_part()
            clean[f] = clean.get(f, 0) + m
        if num.is_zero():
            clean = {}
        else:
            for f in list(clean):
                m = clean[f]
                while m > 0:
                    try:
                        num = num.exact_divide(f)
                        m -= 1
                    except NotDivisible:
                        break
                if m:
                    clean[f] = m
                else:
                    del clean[f]
        self.num = num
        self.den = tuple(sorted(clean.items(), key=lambda fm: str(fm[0])))
        self._str = None

    # -- constructors ---------------------------------------------------

    @staticmethod
    def zero() -> "RationalExpression":
        return _RE_ZERO

    @staticmethod
    def one() -> "RationalExpression":
        return _RE_ONE

    @staticmethod
    def from_polynomial(p) -> "RationalExpression":
        return RationalExpression(p)

    @staticmethod
    def coerce(obj) -> "RationalExpression":
        if isinstance(obj, RationalExpression):
            return obj
        return RationalExpression(Polynomial._coerce(obj))

    # -- inspection -------------------------------------------------------

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_polynomial(self) -> bool:
        return not self.den

    def as_polynomial(self) -> Polynomial:
        if self.den:
            raise ValueError(f"has a denominator: {self}")
        return self.num

    def is_constant(self) -> bool:
        return not self.den and self.num.is_constant()

    def constant_value(self) -> Fraction:
        return self.as_polynomial().constant_value()

    def variables(self) -> set[Variable]:
        out = self.num.variables()
        for f, _ in self.den:
            out |= f.variables()
        return out

    def den_product(self) -> Polynomial:
        out = _POLY_ONE
        for f, m in self.den:
            out = out * f ** m
        return out

    def reduced(self) -> "RationalExpression":
        """Cancel denominator factors that exactly divide the numerator."""
        if not self.den:
            return self
        if self.num.is_zero():
            return _RE_ZERO
        num = self.num
        den: list[tuple[Polynomial, int]] = []
        changed = False
        for f, m in self.den:
            while m > 0:
                try:
                    num = num.exact_divide(f)
                    m -= 1
                    changed = True
                except NotDivisible:
                    break
            if m:
                den.append((f, m))
        if not changed:
            return self
        out = RationalExpression.__new__(RationalExpression)
        out.num = num
        out.den = tuple(den)
        out._str = None
        return out

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        try:
            other = RationalExpression.coerce(other)
        except TypeError:
            return NotImplemented
        if other.is_zero():
            return self
        if self.is_zero():
            return other
        if self.den == other.den:
            num = self.num + other.num
            out = RationalExpression.__new__(RationalExpression)
            out.num = num
            out.den = () if num.is_zero() else self.den
            out._str = None
            return out.reduced()
        merged = _merge_max(dict(self.den), other.den)
        n1 = self.num
        for f, m in merged.items():
            have = dict(self.den).get(f, 0)
            if m > have:
                n1 = n1 * f ** (m - have)
        n2 = other.num
        for f, m in merged.items():
            have = dict(other.den).get(f, 0)
            if m > have:
                n2 = n2 * f ** (m - have)
        out = RationalExpression.__new__(RationalExpression)
        num = n1 + n2
        out.num = num
        out.den = () if num.is_zero() else tuple(sorted(merged.items(), key=lambda fm: str(fm[0])))
        out._str = None
        return out.reduced()

    __radd__ = __add__

    def __neg__(self):
        out = RationalExpression.__new__(RationalExpression)
        out.num = -self.num
        out.den = self.den
        out._str = None
        return out

    def __sub__(self, other):
        try:
            other = RationalExpression.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = RationalExpression.coerce(other)
        except TypeError:
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return _RE_ZERO
        merged = dict(self.den)
        for f, m in other.den:
            merged[f] = merged.get(f, 0) + m
        out = RationalExpression.__new__(RationalExpression)
        out.num = self.num * other.num
        out.den = tuple(sorted(merged.items(), key=lambda fm: str(fm[0])))
        out._str = None
        return out.reduced()

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("rational-expression powers must be nonnegative integers")
        if k == 0:
            return _RE_ONE
        out = RationalExpression.__new__(RationalExpression)
        out.num = self.num ** k
        out.den = tuple((f, m * k) for f, m in self.den)
        out._str = None
        return out.reduced()

    def __truediv__(self, other):
        # Unrestricted division requires a certificate; only scalars pass here.
        if isinstance(other, (int, Fraction)):
            c = _coerce_scalar(other)
            if not c:
                raise ZeroDivisionError("division by zero scalar")
            return self * (Fraction(1) / c)
        raise TypeError("use .divide(other, nonvanishing) for non-scalar division")

    def divide(self, other, nonvanishing: NonvanishingSet) -> "RationalExpression":
        """self / other, allowed only when other's numerator is a certified unit."""
        other = RationalExpression.coerce(other)
        if other.is_zero():
            raise PossiblyZeroDivision("division by zero")
        if other.num.is_constant():
            c = other.num.constant_value()
            inv_den = _POLY_ONE
            for f, m in other.den:
                inv_den = inv_den * f ** m
            return self * RationalExpression(inv_den / c)
        if nonvanishing is None:
            raise PossiblyZeroDivision(f"no certificates available for: {other.num}")
        c, factors = nonvanishing.factor_unit(other.num)
        flip = _POLY_ONE
        for f, m in other.den:
            flip = flip * f ** m
        out = self * RationalExpression(flip / c)
        merged = dict(out.den)
        for f, m in factors:
            merged[f] = merged.get(f, 0) + m
        res = RationalExpression.__new__(RationalExpression)
        res.num = out.num
        res.den = tuple(sorted(merged.items(), key=lambda fm: str(fm[0])))
        res._str = None
        return res.reduced()

    # -- comparisons ---------------------------------------------------------

    def rf_equal(self, other) -> bool:
        """Semantic equality by cross-multiplication."""
        other = RationalExpression.coerce(other)
        if self.den == other.den:
            return self.num == other.num
        return self.num * other.den_product() == other.num * self.den_product()

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, Polynomial, Variable)):
            return self.rf_equal(RationalExpression.coerce(other))
        if not isinstance(other, RationalExpression):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        return hash((self.num, self.den))

    # -- calculus, substitution, solving --------------------------------------

    def differentiate(self, v: Variable) -> "RationalExpression":
        # d(n * prod f_i^-m_i) = n_v prod f_i^-m_i - n * sum_i m_i f_{i,v} f_i^-(m_i+1) prod_{j!=i} f_j^-m_j
        out = RationalExpression(self.num.differentiate(v), self.den)
        for i, (f, m) in enumerate(self.den):
            fv = f.differentiate(v)
            if fv.is_zero():
                continue
            den = list(self.den)
            den[i] = (f, m + 1)
            out = out + RationalExpression(-(self.num * fv * m), den)
        return out.reduced()

    def substitute(self, mapping: Mapping[Variable, object],
                   nonvanishing: Optional[NonvanishingSet] = None) -> "RationalExpression":
        """Substitute into numerator and denominator.

        A denominator factor whose variables are touched must substitute to a
        certified unit, otherwise PossiblyZeroDivision is raised.
        """
        touched = set(mapping)
        num_sub = RationalExpression.coerce(self.num.substitute(mapping))
        if not self.den:
            return num_sub
        out = num_sub
        untouched: dict[Polynomial, int] = {}
        for f, m in self.den:
            if not (f.variables() & touched):
                untouched[f] = untouched.get(f, 0) + m
                continue
            f_sub = RationalExpression.coerce(f.substitute(mapping))
            for _ in range(m):
                out = out.divide(f_sub, nonvanishing)
        if untouched:
            merged = dict(out.den)
            for f, m in untouched.items():
                merged[f] = merged.get(f, 0) + m
            res = RationalExpression.__new__(RationalExpression)
            res.num = out.num
            res.den = tuple(sorted(merged.items(), key=lambda fm: str(fm[0])))
            res._str = None
            return res.reduced()
        return out

    def solve_linear(self, v: Variable, nonvanishing: Optional[NonvanishingSet] = None
                     ) -> "RationalExpression":
        """Solve self == 0 for v, which must appear to degree exactly 1.

        The coefficient of v must be a certified unit (or a nonzero scalar);
        the denominator of self is nonvanishing by construction and drops out.
        """
        for f, _ in self.den:
            if v in f.variables():
                raise NotLinearInVariable(f"{v} occurs in a denominator of {self}")
        deg = self.num.degree_in(v)
        if deg != 1:
            raise NotLinearInVariable(f"degree of {v} in numerator is {deg}")
        n1 = self.num.coefficient_of_power(v, 1)
        n0 = self.num.coefficient_of_power(v, 0)
        if n1.is_constant():
            return RationalExpression(-n0 / n1.constant_value())
        if nonvanishing is None:
            raise PossiblyZeroDivision(f"pivot not certified: {n1}")
        c, factors = nonvanishing.factor_unit(n1)
        return RationalExpression(-n0 / c, factors).reduced()

    # -- printing ----------------------------------------------------------

    def __str__(self):
        if self._str is not None:
            return self._str
        if not self.den:
            self._str = str(self.num)
            return self._str
        parts = []
        for f, m in self.den:
            base = str(f)
            if len(f) > 1 or m > 1:
                base = f"({base})"
            parts.append(base if m == 1 else f"{base}^{m}")
        self._str = f"({self.num})/({'*'.join(parts)})"
        return self._str

    def __repr__(self):
        return f"RationalExpression({self})"


_RE_ZERO = RationalExpression(_POLY_ZERO)
_RE_ONE = RationalExpression(_POLY_ONE)


def rf_equal(e1, e2) -> bool:
    """Cross-multiplied equality of two rational expressions (or coercibles)."""
    return RationalExpression.coerce(e1).rf_equal(RationalExpression.coerce(e2))
