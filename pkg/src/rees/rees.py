# src/rees/rees.py
"""
Rees algebra presentations, reductions, the colon ascent J : 𝔪^k, the power
closure consistency check for codimension-two complete intersections and the
Jacobian normality criterion for hypersurfaces.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Sequence

from src.core.config import get_config
from src.core.errors import DegenerateInputError, DimensionError, PreconditionError, RefutedRadicalError
from src.core.models import RadicalStatus
from src.core.polynomial import Polynomial
from src.core.ring import RingDescriptor
from src.groebner.elimination import eliminate
from src.ideals.calculus import colon, ideal_power, ideal_product
from src.ideals.dimension import dimension, height
from src.ideals.handle import IdealHandle
from src.ideals.radical import verify_radical_candidate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReesPresentation:
    """R[T_1..T_n] / Q ≅ R[It] for I = (a_1..a_n)."""

    base_ring: RingDescriptor
    generators: tuple[Polynomial, ...]
    t_name: str
    T_names: tuple[str, ...]
    ideal: IdealHandle

    @property
    def ring(self) -> RingDescriptor:
        return self.ideal.ring

    def degree_one_part(self) -> list[Polynomial]:
        """Generators of Q that are linear in the T variables (the syzygies of the a_i)."""
        idx = [self.ring.index(name) for name in self.T_names]
        out = []
        for q in self.ideal.gb.polys:
            if all(sum(m[i] for i in idx) == 1 for m, _ in q.terms):
                out.append(q)
        return out


def rees_presentation(I: IdealHandle) -> ReesPresentation:
    """Q = (T_i - a_i t) ∩ R[T], verified by substitution."""
    gens = list(I.gens)
    if not gens:
        raise DegenerateInputError("the Rees algebra of the zero ideal is not presented")
    ring = I.ring
    names = ring.fresh_names([f"T{i + 1}" for i in range(len(gens))] + ["t"])
    T_names, t_name = tuple(names[:-1]), names[-1]
    ext = ring.with_variables(ring.variables + T_names + (t_name,))
    t = Polynomial.variable(ext, t_name)
    K = IdealHandle(ext, [Polynomial.variable(ext, T) - a.change_ring(ext) * t for T, a in zip(T_names, gens)])
    Q = eliminate(K, list(ring.variables + T_names))
    presentation = ReesPresentation(ring, tuple(gens), t_name, T_names, Q)
    if not verify_rees_presentation(presentation):
        raise ArithmeticError("Rees presentation failed the substitution check")
    logger.info(f"Rees presentation of {len(gens)} generators: {len(Q.gb.polys)} relations")
    return presentation


def verify_rees_presentation(P: ReesPresentation) -> bool:
    """Every generator of Q maps to 0 in R[t] under T_i -> a_i t."""
    Rt = P.base_ring.with_variables(P.base_ring.variables + (P.t_name,))
    t = Polynomial.variable(Rt, P.t_name)
    images = {T: a.change_ring(Rt) * t for T, a in zip(P.T_names, P.generators)}
    relations = IdealHandle.zero(Rt)
    for q in P.ideal.gens:
        if P.t_name in q.support_variables():
            return False
        if not relations.contains(q.substitute(images, target=Rt)):
            return False
    return True


def kernel_of_ring_map(targets: Sequence[Polynomial], ring: RingDescriptor | None = None) -> IdealHandle:
    """Kernel of k[T_1..T_n] -> R, T_i -> f_i."""
    if not targets:
        raise DegenerateInputError("kernel_of_ring_map needs at least one target")
    ring = ring or targets[0].ring
    ring.require_char_zero("kernel of a ring map")
    T_names = tuple(ring.fresh_names([f"T{i + 1}" for i in range(len(targets))]))
    ext = ring.with_variables(ring.variables + T_names)
    K = IdealHandle(ext, [Polynomial.variable(ext, T) - f.change_ring(ext) for T, f in zip(T_names, targets)])
    kernel = eliminate(K, list(T_names))
    logger.info(f"kernel of a map from {len(targets)} variables: {len(kernel.gb.polys)} generators")
    return kernel


def is_reduction(J: IdealHandle, I: IdealHandle, rmax: int | None = None) -> int | None:
    """Smallest r <= rmax with I^(r+1) == J I^r, or None."""
    rmax = get_config().rmax if rmax is None else rmax
    if not I.contains_ideal(J):
        raise PreconditionError("is_reduction needs J contained in I")
    power_r = IdealHandle.unit(I.ring)
    for r in range(rmax + 1):
        power_next = ideal_product(power_r, I)
        if power_next.equals(ideal_product(J, power_r)):
            return r
        power_r = power_next
    return None


def colon_ascent_chain(J: IdealHandle, radJ: IdealHandle, kmax: int | None = None) -> list[tuple[IdealHandle, bool]]:
    """I_k = J : (√J)^k for k = 1..kmax, each paired with I_k² == J I_k."""
    kmax = get_config().kmax if kmax is None else kmax
    check = verify_radical_candidate(J, radJ)
    if check.status == RadicalStatus.REFUTED:
        raise RefutedRadicalError(f"radical candidate refuted: {check.reason}", offending=check.offending)
    chain: list[tuple[IdealHandle, bool]] = []
    previous = J
    for k in range(1, kmax + 1):
        Ik = colon(J, ideal_power(radJ, k))
        if not Ik.contains_ideal(previous):
            raise ArithmeticError(f"colon chain is not ascending at k={k}")
        ok = ideal_power(Ik, 2).equals(ideal_product(J, Ik))
        logger.debug(f"I_{k}: {Ik.render()}, reduction {ok}")
        chain.append((Ik, ok))
        previous = Ik
    return chain


def power_closure_check(a: Polynomial, b: Polynomial, Jbar: IdealHandle, nmax: int | None = None) -> bool:
    """(a, b)^(n-1) Jbar == Jbar^n for n = 2..nmax."""
    nmax = get_config().nmax if nmax is None else nmax
    ab = IdealHandle(Jbar.ring, [a, b])
    h = height(ab)
    if h != 2:
        raise DimensionError(f"(a, b) must have height 2, got {h}")
    if not Jbar.contains_ideal(ab):
        raise PreconditionError("(a, b) is not contained in the given closure")
    for n in range(2, nmax + 1):
        lhs = ideal_product(ideal_power(ab, n - 1), Jbar)
        if not lhs.equals(ideal_power(Jbar, n)):
            logger.info(f"power closure equality fails at n={n}")
            return False
    return True


def hypersurface_normality(g: Polynomial, assert_irreducible: bool = True) -> bool:
    """
    Serre's criterion for k[x]/(g): normal iff the singular locus has codimension
    at least 2, i.e. dim((g) + partials) <= dim((g)) - 2. Irreducibility of g is
    the caller's responsibility.
    """
    ring = g.ring
    ring.require_char_zero("hypersurface normality")
    if g.is_constant():
        raise DegenerateInputError("hypersurface normality needs a nonconstant polynomial")
    if not assert_irreducible:
        raise PreconditionError("hypersurface normality needs g asserted irreducible")
    G = IdealHandle(ring, [g])
    singular = IdealHandle(ring, [g] + [g.derivative(v) for v in ring.variables])
    d1, d2 = dimension(G), dimension(singular)
    logger.info(f"hypersurface of dimension {d1}, singular locus of dimension {d2}")
    return d2 <= d1 - 2
