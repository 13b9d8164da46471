# src/ideals/calculus.py
"""
Ideal calculus on IdealHandle: sum, product, power, membership, equality,
intersection, colon, saturation and the determinant-trick ideal IM : M.

In a quotient ring every operation adjoins the relations to its operands, so
the results are the preimages in the polynomial ring of the answers in S/rel.
"""
from __future__ import annotations

import logging
from typing import Sequence

from src.core.errors import DegenerateInputError, RingMismatchError
from src.core.polynomial import Polynomial
from src.core.ring import RingDescriptor
from src.groebner.elimination import eliminate_polys
from src.ideals.handle import IdealHandle

logger = logging.getLogger(__name__)


def _same_ring(I: IdealHandle, J: IdealHandle) -> RingDescriptor:
    if I.ring != J.ring:
        raise RingMismatchError(f"ideals live in different rings: {I.ring} vs {J.ring}")
    return I.ring


def _dedupe(polys) -> list[Polynomial]:
    seen, out = set(), []
    for p in polys:
        if not p:
            continue
        q = p.primitive()
        if q not in seen:
            seen.add(q)
            out.append(q)
    return out


# --- 和 / 积 / 幂 ---
def ideal_sum(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    ring = _same_ring(I, J)
    return IdealHandle(ring, list(I.gens) + list(J.gens))


def ideal_product(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    ring = _same_ring(I, J)
    return IdealHandle(ring, _dedupe(f * g for f in I.gens for g in J.gens))


def ideal_power(I: IdealHandle, n: int) -> IdealHandle:
    if n < 0:
        raise DegenerateInputError(f"ideal power needs n >= 0, got {n}")
    result = IdealHandle.unit(I.ring)
    for _ in range(n):
        result = ideal_product(result, I)
    return result


def is_member(f: Polynomial, I: IdealHandle) -> bool:
    return I.contains(f)


def ideals_equal(I: IdealHandle, J: IdealHandle) -> bool:
    _same_ring(I, J)
    return I.equals(J)


def contains_ideal(I: IdealHandle, J: IdealHandle) -> bool:
    """J ⊆ I."""
    return I.contains_ideal(J)


def ideal_algebra(I: IdealHandle, J: IdealHandle | None, op: str, *, n: int | None = None,
                  f: Polynomial | None = None):
    """
    Dispatcher over ``sum | product | power | member | equal``.

    ``power`` uses ``n`` and ignores J; ``member`` tests ``f`` against I.
    """
    if op == "sum":
        return ideal_sum(I, J)
    if op == "product":
        return ideal_product(I, J)
    if op == "power":
        if n is None:
            raise DegenerateInputError("power needs an exponent n")
        return ideal_power(I, n)
    if op == "member":
        if f is None:
            raise DegenerateInputError("member needs a polynomial f")
        return is_member(f, I)
    if op == "equal":
        return ideals_equal(I, J)
    raise DegenerateInputError(f"unknown ideal operation '{op}'")


# --- 交 ---
def _intersect_polys(A: Sequence[Polynomial], B: Sequence[Polynomial], ring: RingDescriptor) -> list[Polynomial]:
    """(A) ∩ (B) in the base ring, by eliminating t from t*A + (1-t)*B."""
    base = ring.base
    if not A or not B:
        return []
    (t_name,) = base.fresh_names(["t"])
    ext = RingDescriptor((t_name,) + base.variables, base.characteristic, base.order)
    t = Polynomial.variable(ext, t_name)
    one_minus_t = Polynomial.one(ext) - t
    gens = [t * a.change_ring(ext) for a in A] + [one_minus_t * b.change_ring(ext) for b in B]
    return eliminate_polys(gens, ext, [t_name], base)


def intersect(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    ring = _same_ring(I, J)
    if I.is_unit():
        return J
    if J.is_unit():
        return I
    return IdealHandle(ring, _intersect_polys(I.adjoined(), J.adjoined(), ring))


# --- 商理想 ---
def colon_element(I: IdealHandle, g: Polynomial) -> IdealHandle:
    """I : g = ((I + rel) ∩ (g)) / g."""
    ring = I.ring
    if not g:
        raise DegenerateInputError("colon by the zero polynomial")
    if I.contains(g):
        return IdealHandle.unit(ring)
    common = _intersect_polys(I.adjoined(), [g], ring)
    return IdealHandle(ring, [h.exact_quotient(g) for h in common])


def colon(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    """I : J as the intersection of I : g over the generators g of J."""
    ring = _same_ring(I, J)
    divisors = [g for g in J.gens if not I.contains(g)]
    if not divisors:
        return IdealHandle.unit(ring)
    result = None
    for g in divisors:
        part = colon_element(I, g)
        result = part if result is None else intersect(result, part)
    logger.debug(f"colon: {len(I.gens)} gens over {len(J.gens)} gens -> {len(result.gb.polys)} basis elements")
    return result


def saturate(I: IdealHandle, J: IdealHandle) -> IdealHandle:
    """I : J^∞, the point where the chain I : J^k stops growing."""
    _same_ring(I, J)
    if not J.gens:
        raise DegenerateInputError("saturation by the zero ideal")
    current = I
    steps = 0
    while True:
        nxt = colon(current, J)
        steps += 1
        if nxt.equals(current):
            logger.debug(f"saturation stabilized after {steps} colon steps")
            return current
        current = nxt


def determinant_trick(I: IdealHandle, M: IdealHandle) -> IdealHandle:
    """IM : M, which lies inside the integral closure of I whenever M is faithful."""
    return colon(ideal_product(I, M), M)
