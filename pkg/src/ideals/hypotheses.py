# src/ideals/hypotheses.py
"""Unmixedness (J : (J : I) with a random complete intersection J) and the generic-CI Fitting test."""
from __future__ import annotations

import logging
import random

from src.core.config import get_config
from src.core.errors import PreconditionError
from src.core.polynomial import Polynomial
from src.ideals.calculus import colon
from src.ideals.dimension import height
from src.ideals.handle import IdealHandle
from src.ideals.syzygy import fitting_ideal, syzygy_matrix

logger = logging.getLogger(__name__)


def _require_polynomial_ring(I: IdealHandle, what: str) -> None:
    if I.ring.is_quotient:
        raise PreconditionError(f"{what} is only implemented over polynomial rings")


def random_complete_intersection(I: IdealHandle, m: int, rng: random.Random, bound: int) -> IdealHandle:
    """m random combinations of the generators with coefficients in ±{1..bound}."""
    coefficients = [c for c in range(-bound, bound + 1) if c]
    combos = []
    for _ in range(m):
        acc = Polynomial.zero(I.ring)
        for g in I.gens:
            acc = acc + g.scale(rng.choice(coefficients))
        combos.append(acc)
    return IdealHandle(I.ring, combos)


def is_unmixed(I: IdealHandle, seed: int | None = None, *, attempts: int | None = None,
               bound: int | None = None) -> bool:
    """
    I = J : (J : I) for a complete intersection J ⊆ I of the same height m.
    Deterministic for a fixed seed.
    """
    _require_polynomial_ring(I, "is_unmixed")
    cfg = get_config()
    seed = cfg.default_seed if seed is None else seed
    attempts = cfg.unmixed_attempts if attempts is None else attempts
    bound = cfg.unmixed_coefficient_bound if bound is None else bound
    if I.is_unit() or not I.gens:
        return True
    m = height(I)
    rng = random.Random(seed)
    for attempt in range(1, attempts + 1):
        J = random_complete_intersection(I, m, rng, bound)
        if len(J.gens) < m or height(J) != m:
            logger.debug(f"attempt {attempt}: combination is not a height-{m} complete intersection")
            continue
        logger.debug(f"height-{m} complete intersection found on attempt {attempt}")
        return I.equals(colon(J, colon(J, I)))
    raise PreconditionError(f"no height-{m} complete intersection found in {attempts} attempts")


def is_generically_ci(I: IdealHandle) -> bool:
    """height(I_{q-m}(φ)) >= m + 1 for a presentation φ of the q generators; a unit Fitting ideal passes."""
    _require_polynomial_ring(I, "is_generically_ci")
    if I.is_unit() or not I.gens:
        return True
    gens = list(I.gens)
    q = len(gens)
    m = height(I)
    k = q - m
    if k <= 0:
        return True
    phi = syzygy_matrix(gens)
    F = fitting_ideal(phi, k)
    if F.is_unit():
        return True
    h = height(F)
    logger.debug(f"generic CI: q={q}, m={m}, height of I_{k}(phi) = {h}")
    return h >= m + 1
