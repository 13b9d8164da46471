# src/ideals/radical.py
"""Radical membership (Rabinowitsch), zero-dimensional radicals, radical candidate checks."""
from __future__ import annotations

import logging

from src.core.errors import DimensionError, RingMismatchError
from src.core.models import RadicalCheck, RadicalStatus
from src.core.polynomial import Polynomial, squarefree_part
from src.core.ring import RingDescriptor
from src.groebner.buchberger import groebner_basis
from src.groebner.elimination import eliminate_polys
from src.ideals.dimension import dimension
from src.ideals.handle import IdealHandle

logger = logging.getLogger(__name__)


def radical_membership(f: Polynomial, I: IdealHandle) -> bool:
    """f ∈ √I  iff  1 ∈ I + (1 - z*f) with z a fresh variable."""
    base = I.ring.base
    if f.ring != base:
        raise RingMismatchError(f"{f} is not in {I.ring}")
    if not f:
        return True
    (z_name,) = base.fresh_names(["z"])
    ext = RingDescriptor(base.variables + (z_name,), base.characteristic, base.order)
    z = Polynomial.variable(ext, z_name)
    gens = [g.change_ring(ext) for g in I.adjoined()]
    gens.append(Polynomial.one(ext) - z * f.change_ring(ext))
    return groebner_basis(gens, ring=ext).is_unit()


def radical_zero_dim(I: IdealHandle) -> IdealHandle:
    """
    √I for zero-dimensional I over Q: adjoin the squarefree part of the minimal
    polynomial of each variable (found by eliminating all the others).
    """
    I.ring.require_char_zero("zero-dimensional radical")
    d = dimension(I)
    if d != 0:
        raise DimensionError(f"radical_zero_dim needs a zero-dimensional ideal, got dimension {d}")
    base = I.ring.base
    extra = []
    for v in base.variables:
        target = base.with_variables([v], keep_relations=False)
        others = [w for w in base.variables if w != v]
        univariate = eliminate_polys(I.adjoined(), base, others, target)
        # 零维: 消元理想是主理想 (约化基只有一个元素)
        g = univariate[0]
        sf = squarefree_part(g).change_ring(base)
        if sf != g.monic().change_ring(base):
            logger.debug(f"minimal polynomial of {v}: {g} -> squarefree part {sf}")
        extra.append(sf)
    return IdealHandle(I.ring, list(I.gens) + extra)


def verify_radical_candidate(I: IdealHandle, C: IdealHandle) -> RadicalCheck:
    """
    I ⊆ C and every generator of C lies in √I. Passing does not certify that C
    itself is radical.
    """
    if I.ring != C.ring:
        raise RingMismatchError("radical candidate lives in a different ring")
    for g in I.gens:
        if not C.contains(g):
            return RadicalCheck(status=RadicalStatus.REFUTED, offending=str(g.primitive()),
                                reason="generator of the ideal is not in the candidate")
    for c in C.gens:
        if not radical_membership(c, I):
            return RadicalCheck(status=RadicalStatus.REFUTED, offending=str(c.primitive()),
                                reason="candidate generator is not in the radical")
    return RadicalCheck(status=RadicalStatus.VERIFIED_PARTIAL)
