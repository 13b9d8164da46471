# src/groebner/buchberger.py
"""
Buchberger's algorithm with the Gebauer-Moeller pair criteria, normal forms
and the Buchberger criterion as a predicate.

Pair selection is the normal strategy (smallest lcm degree first) with ties
broken by lexicographic comparison of the lcm exponent vectors, so traces and
results are reproducible.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from sortedcontainers import SortedDict, SortedList

from src.core.config import get_config
from src.core.errors import DegenerateInputError, ResourceLimitError, RingMismatchError
from src.core.polynomial import Polynomial
from src.core.ring import (
    MonomialOrder,
    RingDescriptor,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    monomial_quotient,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced basis: monic, sorted ascending by leading monomial. Empty for the zero ideal."""

    ring: RingDescriptor
    polys: tuple[Polynomial, ...]

    @property
    def order(self) -> MonomialOrder:
        return self.ring.order

    def is_unit(self) -> bool:
        return len(self.polys) == 1 and self.polys[0].is_constant()

    def leading_monomials(self) -> list[tuple[int, ...]]:
        return [p.lm for p in self.polys]

    def reduce(self, f: Polynomial) -> Polynomial:
        return normal_form(f.change_ring(self.ring), self.polys)


def _prepare(polys: Sequence[Polynomial], order: MonomialOrder | None, ring: RingDescriptor | None):
    if ring is None:
        if not polys:
            raise DegenerateInputError("an empty generator list needs an explicit ring")
        ring = polys[0].ring
    ring = ring.base
    for p in polys:
        if p.ring.variables != ring.variables or p.ring.characteristic != ring.characteristic:
            raise RingMismatchError(f"{p} is not in {ring}")
    if order is not None and order != ring.order:
        ring = ring.with_order(order).base
    return ring, [p.change_ring(ring) for p in polys]


# --- 约化 ---
def _reduce(f: Polynomial, divisors: Sequence[Polynomial], track: bool, max_terms: int | None):
    ring = f.ring
    p = ring.characteristic
    work = SortedDict(ring.key, f.terms)
    remainder: dict = {}
    quotients = [dict() for _ in divisors] if track else None
    leads = [(g.lm, g.lc, g.terms[1:]) for g in divisors]
    while work:
        mono, c = work.popitem()
        for idx, (gm, gc, rest) in enumerate(leads):
            if not monomial_divides(gm, mono):
                continue
            q = monomial_quotient(mono, gm)
            factor = ring.divide(c, gc)
            if track:
                slot = quotients[idx]
                slot[q] = slot.get(q, 0) + factor
            for m, a in rest:
                mm = monomial_mul(m, q)
                v = work.get(mm, 0) - factor * a
                if p:
                    v = ring.coerce(v)
                if v:
                    work[mm] = v
                else:
                    work.pop(mm, None)
            if max_terms is not None and len(work) > max_terms:
                raise ResourceLimitError(f"intermediate polynomial exceeded {max_terms} terms")
            break
        else:
            remainder[mono] = c
    rem = Polynomial._from_dict(ring, remainder)
    if not track:
        return rem, None
    return rem, [Polynomial._from_dict(ring, q) for q in quotients]


def normal_form(f: Polynomial, G: Sequence[Polynomial]) -> Polynomial:
    """
    Remainder of multivariate division of f by G (divisors tried in list order).
    No term of the result is divisible by a leading monomial of G.
    """
    divisors = [g for g in G if g]
    for g in divisors:
        if g.ring != f.ring:
            raise RingMismatchError("normal_form operands must share ring and order")
    rem, _ = _reduce(f, divisors, False, None)
    return rem


def reduce_with_quotients(f: Polynomial, G: Sequence[Polynomial]) -> tuple[list[Polynomial], Polynomial]:
    """f = sum(q_i * G[i]) + r, with r the normal form of f. Zero divisors get zero quotients."""
    idx = [i for i, g in enumerate(G) if g]
    rem, qs = _reduce(f, [G[i] for i in idx], True, None)
    quotients = [Polynomial.zero(f.ring) for _ in G]
    for i, q in zip(idx, qs):
        quotients[i] = q
    return quotients, rem


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    ring = f.ring
    lcm = monomial_lcm(f.lm, g.lm)
    left = f.mul_term(monomial_quotient(lcm, f.lm), ring.divide(Fraction(1), f.lc))
    right = g.mul_term(monomial_quotient(lcm, g.lm), ring.divide(Fraction(1), g.lc))
    return left - right


def _coprime(a, b) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


# --- Buchberger ---
def groebner_basis(gens: Sequence[Polynomial], order: MonomialOrder | None = None, *,
                   ring: RingDescriptor | None = None, max_pairs: int | None = None,
                   max_terms: int | None = None) -> GroebnerBasis:
    """
    Reduced Groebner basis of the ideal generated by ``gens``.

    Exceeding ``max_pairs`` processed S-pairs or ``max_terms`` terms in one
    intermediate polynomial raises ResourceLimitError.
    """
    cfg = get_config()
    max_pairs = cfg.max_pairs if max_pairs is None else max_pairs
    max_terms = cfg.max_terms if max_terms is None else max_terms
    ring, polys = _prepare(gens, order, ring)

    polys = [p.monic() for p in polys if p]
    if not polys:
        return GroebnerBasis(ring, ())
    if any(p.is_constant() for p in polys):
        return GroebnerBasis(ring, (Polynomial.one(ring),))

    # 先做初始互约化 (与 sympy 的 _buchberger 一样)
    f1 = sorted(set(polys), key=lambda p: ring.key(p.lm))
    while True:
        f = f1
        f1 = []
        for i, p in enumerate(f):
            r, _ = _reduce(p, f[:i], False, max_terms)
            if r:
                f1.append(r.monic())
        f1 = sorted(set(f1), key=lambda p: ring.key(p.lm))
        if f1 == f:
            break
    if any(p.is_constant() for p in f1):
        return GroebnerBasis(ring, (Polynomial.one(ring),))

    basis: list[Polynomial] = []
    lookup: dict[Polynomial, int] = {}
    G: list[int] = []
    CP = SortedList(key=lambda pair: _pair_key(basis, pair))

    def add(h: Polynomial) -> int:
        if h not in lookup:
            lookup[h] = len(basis)
            basis.append(h)
        return lookup[h]

    def update(ih: int) -> None:
        nonlocal G
        mh = basis[ih].lm
        C = list(G)
        D: list[tuple[int, int]] = []
        while C:
            ig = C.pop(0)
            mg = basis[ig].lm
            lcm_hg = monomial_lcm(mh, mg)

            def lcm_divides(ip: int) -> bool:
                return monomial_divides(monomial_lcm(mh, basis[ip].lm), lcm_hg)

            if _coprime(mh, mg) or (
                not any(lcm_divides(ipx) for ipx in C) and not any(lcm_divides(pr[1]) for pr in D)
            ):
                D.append((ih, ig))
        E = [(a, b) for a, b in D if not _coprime(mh, basis[b].lm)]

        # 过滤旧的临界对
        stale = []
        for ig1, ig2 in CP:
            mg1, mg2 = basis[ig1].lm, basis[ig2].lm
            lcm12 = monomial_lcm(mg1, mg2)
            if monomial_divides(mh, lcm12) and monomial_lcm(mg1, mh) != lcm12 and monomial_lcm(mg2, mh) != lcm12:
                stale.append((ig1, ig2))
        for pair in stale:
            CP.remove(pair)
        for pair in E:
            CP.add(pair)
        G = [ig for ig in G if not monomial_divides(mh, basis[ig].lm)] + [ih]

    for p in f1:
        update(add(p))

    processed = 0
    while CP:
        ig1, ig2 = CP.pop(0)
        processed += 1
        if processed > max_pairs:
            raise ResourceLimitError(f"Buchberger exceeded {max_pairs} S-pairs in {ring}")
        s = s_polynomial(basis[ig1], basis[ig2])
        h, _ = _reduce(s, [basis[i] for i in G], False, max_terms)
        if not h:
            continue
        h = h.monic()
        if h.is_constant():
            logger.debug(f"unit ideal detected after {processed} pairs")
            return GroebnerBasis(ring, (Polynomial.one(ring),))
        update(add(h))

    logger.debug(f"Buchberger: {processed} pairs processed, {len(G)} basis elements before reduction")
    return GroebnerBasis(ring, tuple(_interreduce([basis[i] for i in G], max_terms)))


def _pair_key(basis: list[Polynomial], pair: tuple[int, int]):
    lcm = monomial_lcm(basis[pair[0]].lm, basis[pair[1]].lm)
    return (sum(lcm), lcm, pair)


def _interreduce(G: list[Polynomial], max_terms: int | None) -> list[Polynomial]:
    """Minimal basis -> reduced basis, monic and sorted ascending by leading monomial."""
    ring = G[0].ring
    minimal = [g for g in G if not any(h is not g and monomial_divides(h.lm, g.lm) and h.lm != g.lm for h in G)]
    # 去掉领头单项式相同的重复项
    seen, unique = set(), []
    for g in sorted(minimal, key=lambda p: ring.key(p.lm)):
        if g.lm not in seen:
            seen.add(g.lm)
            unique.append(g)
    reduced = []
    for i, g in enumerate(unique):
        others = unique[:i] + unique[i + 1:]
        r, _ = _reduce(g, others, False, max_terms)
        reduced.append(r.monic())
    return sorted(reduced, key=lambda p: ring.key(p.lm))


def is_groebner_basis(G: Sequence[Polynomial], order: MonomialOrder | None = None) -> bool:
    """Buchberger criterion: every S-polynomial of G reduces to zero modulo G."""
    ring, polys = _prepare(G, order, None)
    polys = [p for p in polys if p]
    if not polys:
        raise DegenerateInputError("is_groebner_basis needs a nonempty list")
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            if _coprime(polys[i].lm, polys[j].lm):
                continue
            if normal_form(s_polynomial(polys[i], polys[j]), polys):
                logger.debug(f"S-polynomial of pair ({i}, {j}) does not reduce to zero")
                return False
    return True


def tracked_groebner_basis(gens: Sequence[Polynomial], *, max_pairs: int | None = None,
                           max_terms: int | None = None) -> tuple[list[Polynomial], list[list[Polynomial]]]:
    """
    A (non-reduced) Groebner basis of (gens) in the ring's order together with
    cofactor rows: ``basis[k] == sum(rows[k][j] * gens[j])``.
    """
    cfg = get_config()
    max_pairs = cfg.max_pairs if max_pairs is None else max_pairs
    max_terms = cfg.max_terms if max_terms is None else max_terms
    ring = gens[0].ring
    zero = Polynomial.zero(ring)
    q = len(gens)

    basis: list[Polynomial] = []
    rows: list[list[Polynomial]] = []
    for j, g in enumerate(gens):
        if g:
            basis.append(g)
            rows.append([Polynomial.one(ring) if k == j else zero for k in range(q)])

    pairs = SortedList(key=lambda pair: _pair_key(basis, pair))
    for j in range(len(basis)):
        for i in range(j):
            pairs.add((i, j))

    processed = 0
    while pairs:
        i, j = pairs.pop(0)
        processed += 1
        if processed > max_pairs:
            raise ResourceLimitError(f"tracked Buchberger exceeded {max_pairs} S-pairs")
        fi, fj = basis[i], basis[j]
        if _coprime(fi.lm, fj.lm):
            continue
        lcm = monomial_lcm(fi.lm, fj.lm)
        ui = (monomial_quotient(lcm, fi.lm), ring.divide(Fraction(1), fi.lc))
        uj = (monomial_quotient(lcm, fj.lm), ring.divide(Fraction(1), fj.lc))
        s = fi.mul_term(*ui) - fj.mul_term(*uj)
        row = [a.mul_term(*ui) - b.mul_term(*uj) for a, b in zip(rows[i], rows[j])]
        quotients, r = reduce_with_quotients(s, basis)
        if not r:
            continue
        for k, qk in enumerate(quotients):
            if qk:
                row = [x - qk * y for x, y in zip(row, rows[k])]
        basis.append(r)
        rows.append(row)
        new = len(basis) - 1
        for k in range(new):
            pairs.add((k, new))
    logger.debug(f"tracked Buchberger: {len(basis)} elements, {processed} pairs")
    return basis, rows
