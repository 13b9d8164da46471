# src/groebner/elimination.py
"""Elimination of variables through a block order with the eliminated block first."""
from __future__ import annotations

import logging
from typing import TYPE_CHECKING, Sequence

from src.core.errors import DegenerateInputError
from src.core.polynomial import Polynomial
from src.core.ring import MonomialOrder, RingDescriptor
from src.groebner.buchberger import groebner_basis

if TYPE_CHECKING:
    from src.ideals.handle import IdealHandle

logger = logging.getLogger(__name__)


def eliminate_polys(gens: Sequence[Polynomial], ring: RingDescriptor, eliminated: Sequence[str],
                    target: RingDescriptor) -> list[Polynomial]:
    """
    Generators of (gens) ∩ k[target variables], as polynomials of ``target``.

    ``ring`` is the ambient base ring of ``gens``; every variable of ``ring``
    must appear either in ``eliminated`` or in ``target``.
    """
    ring = ring.base
    eliminated = list(eliminated)
    kept = [v for v in ring.variables if v not in eliminated]
    missing = [v for v in kept if v not in target.variables]
    if missing:
        raise DegenerateInputError(f"variables {missing} are neither kept nor eliminated")
    if not eliminated:
        return [g.change_ring(target) for g in gens if g]

    work_ring = RingDescriptor(tuple(eliminated) + tuple(kept), ring.characteristic,
                               MonomialOrder("block", len(eliminated)))
    gb = groebner_basis([g.change_ring(work_ring) for g in gens], ring=work_ring)
    n = len(eliminated)
    survivors = [p for p in gb.polys if not any(any(m[:n]) for m, _ in p.terms)]
    logger.debug(f"eliminated {eliminated}: {len(gb.polys)} basis elements, {len(survivors)} survive")
    return [p.change_ring(target) for p in survivors]


def eliminate(ideal: "IdealHandle", keep: Sequence[str]) -> "IdealHandle":
    """I ∩ k[keep]; relations of a quotient ring are adjoined and those living in k[keep] are kept."""
    from src.ideals.handle import IdealHandle

    ring = ideal.ring
    for name in keep:
        ring.index(name)
    keep_ordered = [v for v in ring.variables if v in set(keep)]
    eliminated = [v for v in ring.variables if v not in set(keep)]
    target = ring.with_variables(keep_ordered)
    gens = eliminate_polys(ideal.adjoined(), ring, eliminated, target.base)
    return IdealHandle(target, gens)
