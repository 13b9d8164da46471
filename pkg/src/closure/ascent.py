# src/closure/ascent.py
"""Growing integral elements (H = I : C) and the ascending closure chain."""
from __future__ import annotations

import logging
from dataclasses import dataclass, field

from src.core.errors import PreconditionError
from src.core.models import AscentStatus
from src.ideals.calculus import colon, ideal_power, ideal_product
from src.ideals.handle import IdealHandle
from src.ideals.hypotheses import is_generically_ci, is_unmixed

logger = logging.getLogger(__name__)


@dataclass
class AscentResult:
    """Strictly ascending chain starting at the input ideal; every step was certified H² = IH."""

    chain: list[IdealHandle] = field(default_factory=list)
    status: AscentStatus = AscentStatus.MAX_ROUNDS
    detail: str | None = None

    @property
    def last(self) -> IdealHandle:
        return self.chain[-1]


def growth_step(I: IdealHandle, radI: IdealHandle) -> dict[str, IdealHandle]:
    """L, B = IL : L², C = √I : B and H = I : C, without any hypothesis gate."""
    from src.closure.criteria import generic_socle

    L = generic_socle(I, radI)
    B = colon(ideal_product(I, L), ideal_power(L, 2))
    if B.equals(radI):
        return {"L": L, "B": B, "C": IdealHandle.unit(I.ring), "H": I}
    C = colon(radI, B)
    H = colon(I, C)
    return {"L": L, "B": B, "C": C, "H": H}


def grow_integral_elements(I: IdealHandle, radI: IdealHandle, seed: int | None = None) -> tuple[IdealHandle, bool]:
    """
    H = I : C with C = √I : (IL : L²). Requires I unmixed and generically a
    complete intersection; ``certified`` is H² == IH.
    """
    if not is_unmixed(I, seed):
        raise PreconditionError("grow_integral_elements needs an unmixed ideal")
    if not is_generically_ci(I):
        raise PreconditionError("grow_integral_elements needs an ideal that is generically a complete intersection")
    H = growth_step(I, radI)["H"]
    certified = ideal_power(H, 2).equals(ideal_product(I, H))
    if not I.contains_ideal(H):
        logger.info(f"grew {len(H.gb.polys)} generators beyond I, certified={certified}")
    return H, certified


def closure_ascent(I: IdealHandle, radI: IdealHandle, max_rounds: int = 5, seed: int | None = None) -> AscentResult:
    """
    Replace I by H while H ⊋ I and H stays unmixed. The first round runs the
    full hypothesis gate; later rounds only re-check unmixedness.
    """
    result = AscentResult(chain=[I])
    if max_rounds <= 0:
        return result
    current = I
    for round_no in range(1, max_rounds + 1):
        if round_no == 1:
            H, certified = grow_integral_elements(current, radI, seed)
        else:
            H = growth_step(current, radI)["H"]
            certified = ideal_power(H, 2).equals(ideal_product(current, H))
        if H.equals(current):
            result.status = AscentStatus.FIXED_POINT
            return result
        if not certified:
            result.status = AscentStatus.PARTIAL
            result.detail = f"round {round_no}: H^2 != IH"
            return result
        result.chain.append(H)
        logger.debug(f"ascent round {round_no}: {H.render()}")
        if not is_unmixed(H, seed):
            result.status = AscentStatus.PARTIAL
            result.detail = f"round {round_no}: the new ideal is mixed"
            return result
        current = H
    result.status = AscentStatus.MAX_ROUNDS
    return result
