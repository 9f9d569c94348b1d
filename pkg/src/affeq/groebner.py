"""Buchberger's algorithm and ideal-membership utilities.

Bases are kept with primitive integer coefficients and positive leading
coefficient, and `buchberger` returns the *reduced* basis sorted by leading
monomial, so equal ideals produce identical lists.  Pair selection is the
normal strategy (smallest lcm first) with the coprime and chain criteria.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence

from .algebra import (
    DEGREVLEX,
    Monomial,
    MonomialOrder,
    Polynomial,
    Variable,
    elimination_order,
    var,
)


def spoly(f: Polynomial, g: Polynomial, order: MonomialOrder = DEGREVLEX) -> Polynomial:
    mf, cf = f.leading(order)
    mg, cg = g.leading(order)
    l = mf.lcm(mg)
    return f * (Fraction(1) / cf) * Polynomial({l.divide(mf): Fraction(1)}) \
        - g * (Fraction(1) / cg) * Polynomial({l.divide(mg): Fraction(1)})


def normal_form(p: Polynomial, basis: Sequence[Polynomial],
                order: MonomialOrder = DEGREVLEX) -> Polynomial:
    """Remainder of p on full division by basis (zero iff p reduces to zero)."""
    reducers = [(g.leading(order), g) for g in basis if not g.is_zero()]
    if not reducers:
        return p
    work = dict(p.terms())
    rem: dict[Monomial, Fraction] = {}
    while work:
        m = order.max(work.keys())
        c = work.pop(m)
        for (ltm, ltc), g in reducers:
            if ltm.divides(m):
                q = m.divide(ltm)
                qc = c / ltc
                for gm, gc in g.terms():
                    key = q.mul(gm)
                    if key == m:
                        continue  # cancels against the popped term
                    s = work.get(key, Fraction(0)) - qc * gc
                    if s:
                        work[key] = s
                    else:
                        work.pop(key, None)
                break
        else:
            rem[m] = c
    return Polynomial(rem)


def _autoreduce(basis: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    basis = [g.primitive_part(order) for g in basis if not g.is_zero()]
    if not basis:
        return []
    # drop generators whose leading term another one divides
    lts = [g.leading(order)[0] for g in basis]
    keep: list[Polynomial] = []
    for i, g in enumerate(basis):
        mi = lts[i]
        dominated = False
        for j, mj in enumerate(lts):
            if i == j:
                continue
            if mj.divides(mi) and not (mi == mj and j > i):
                dominated = True
                break
        if not dominated:
            keep.append(g)
    # tail-reduce every survivor against the others
    out: list[Polynomial] = []
    for i, g in enumerate(keep):
        others = keep[:i] + keep[i + 1:]
        r = normal_form(g, others, order)
        if not r.is_zero():
            out.append(r.primitive_part(order))
    import functools

    out.sort(key=functools.cmp_to_key(lambda a, b: order.compare(a.leading(order)[0],
                                                                 b.leading(order)[0])))
    return out


def buchberger(gens: Iterable[Polynomial], order: MonomialOrder = DEGREVLEX) -> list[Polynomial]:
    """The reduced Groebner basis of the ideal generated by gens."""
    basis = [g.primitive_part(order) for g in gens if not g.is_zero()]
    if not basis:
        return []
    lts = [g.leading(order)[0] for g in basis]
    pairs: dict[tuple[int, int], Monomial] = {}
    done: set[tuple[int, int]] = set()
    for i in range(len(basis)):
        for j in range(i):
            pairs[(j, i)] = lts[j].lcm(lts[i])

    def chain_skips(i: int, j: int, l: Monomial) -> bool:
        if lts[i].coprime_with(lts[j]):
            return True
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if lts[k].divides(l) and (min(i, k), max(i, k)) in done \
                    and (min(j, k), max(j, k)) in done:
                return True
        return False

    while pairs:
        (i, j), l = min(pairs.items(), key=lambda kv: (kv[1].degree, str(kv[1])))
        del pairs[(i, j)]
        done.add((i, j))
        if chain_skips(i, j, l):
            continue
        s = spoly(basis[i], basis[j], order)
        r = normal_form(s, basis, order)
        if r.is_zero():
            continue
        r = r.primitive_part(order)
        basis.append(r)
        lts.append(r.leading(order)[0])
        n = len(basis) - 1
        for k in range(n):
            pairs[(k, n)] = lts[k].lcm(lts[n])
    return _autoreduce(basis, order)


def is_groebner_basis(basis: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX) -> bool:
    """Every S-polynomial reduces to zero — handy as a property check."""
    basis = [g for g in basis if not g.is_zero()]
    for i in range(len(basis)):
        for j in range(i):
            if basis[i].leading(order)[0].coprime_with(basis[j].leading(order)[0]):
                continue
            if not normal_form(spoly(basis[i], basis[j], order), basis, order).is_zero():
                return False
    return True


def member(p: Polynomial, gens: Sequence[Polynomial],
           order: MonomialOrder = DEGREVLEX,
           basis: Optional[Sequence[Polynomial]] = None) -> bool:
    """Is p in the ideal generated by gens?  Pass basis= to reuse a Groebner basis."""
    if basis is None:
        basis = buchberger(gens, order)
    return normal_form(p, basis, order).is_zero()


def elimination_ideal(gens: Sequence[Polynomial], eliminate: Sequence[Variable]) -> list[Polynomial]:
    """Generators of the ideal's intersection with the subring without `eliminate`.

    Returned as a reduced degrevlex basis of the elimination ideal.
    """
    front = set(eliminate)
    gb = buchberger(gens, elimination_order(front))
    kept = [g for g in gb if not (g.variables() & front)]
    return buchberger(kept, DEGREVLEX)


def radical_member(p: Polynomial, gens: Sequence[Polynomial]) -> bool:
    """Is some power of p in the ideal?  (Adjoin 1 - w*p and test 1.)"""
    w = var("w")
    if w in p.variables() or any(w in g.variables() for g in gens):
        raise ValueError("the auxiliary variable w is reserved for radical tests")
    one_minus_wp = Polynomial.one() - Polynomial.variable(w) * p
    gb = buchberger(list(gens) + [one_minus_wp], DEGREVLEX)
    return any(g.is_constant() for g in gb)


def ideal_equal(gens1: Sequence[Polynomial], gens2: Sequence[Polynomial],
                order: MonomialOrder = DEGREVLEX) -> bool:
    """Equality of ideals via identical reduced bases."""
    return buchberger(gens1, order) == buchberger(gens2, order)
