# src/ideals/dimension.py
from __future__ import annotations

import logging
from itertools import combinations

from src.core.errors import PreconditionError
from src.ideals.handle import IdealHandle

logger = logging.getLogger(__name__)


def dimension(I: IdealHandle) -> int:
    """
    Krull dimension of R/I: the size of the largest set S of variables such that
    no leading monomial of the Groebner basis is supported inside S. The unit
    ideal has dimension -1. Relations are adjoined.
    """
    if I._dim is not None:
        return I._dim
    gb = I.gb
    if gb.is_unit():
        I._dim = -1
        return -1
    n = I.ring.nvars
    supports = {frozenset(i for i, e in enumerate(m) if e) for m in gb.leading_monomials()}
    # 只保留极小支撑集
    minimal = [s for s in supports if not any(t < s for t in supports)]
    for size in range(n, -1, -1):
        for subset in combinations(range(n), size):
            chosen = set(subset)
            if not any(s <= chosen for s in minimal):
                I._dim = size
                logger.debug(f"dim = {size}, independent set {[I.ring.variables[i] for i in subset]}")
                return size
    I._dim = 0
    return 0


def height(I: IdealHandle) -> int:
    """#vars - dim; the unit ideal gets #vars by convention."""
    if I.ring.is_quotient:
        raise PreconditionError("height is only computed in polynomial rings without relations")
    d = dimension(I)
    if d < 0:
        return I.ring.nvars
    return I.ring.nvars - d
