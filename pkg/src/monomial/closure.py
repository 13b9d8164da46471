# src/monomial/closure.py
from __future__ import annotations

import logging
from itertools import combinations_with_replacement, product

from src.core.config import get_config
from src.core.errors import DegenerateInputError, NotMonomialError
from src.core.polynomial import Polynomial
from src.core.ring import Monomial, monomial_divides
from src.ideals.handle import IdealHandle
from src.monomial.newton import NewtonPolyhedron, np_membership

logger = logging.getLogger(__name__)


def monomial_exponents(I: IdealHandle) -> list[Monomial] | None:
    """Exponent vectors of the reduced Groebner basis when every element is a single term, else None."""
    polys = I.gb.polys
    if not all(p.is_monomial() for p in polys):
        return None
    return [p.lm for p in polys]


def is_monomial_ideal(I: IdealHandle) -> bool:
    return monomial_exponents(I) is not None


def is_binomial_ideal(I: IdealHandle) -> bool:
    """Every element of the reduced Groebner basis has at most two terms."""
    return all(len(p.terms) <= 2 for p in I.gb.polys)


def monomial_integral_closure(I: IdealHandle) -> IdealHandle:
    """
    Integral closure of a monomial ideal: the monomials whose exponent lies in
    the Newton polyhedron, kept divisibility-minimal.

    Every minimal element a of the closure satisfies a_j <= max_i v_ij: if a_j
    exceeded that bound, lowering a_j by one keeps Σλ_i v_i <= a for the same
    weights, so a would not be minimal. Enumerating that box is therefore enough.
    """
    exps = monomial_exponents(I)
    if exps is None:
        raise NotMonomialError("monomial_integral_closure needs a monomial ideal")
    ring = I.ring
    if not exps:
        return IdealHandle.zero(ring)
    if any(not any(v) for v in exps):
        return IdealHandle.unit(ring)
    NP = NewtonPolyhedron(tuple(exps))
    bounds = [max(v[j] for v in exps) for j in range(ring.nvars)]
    members = []
    for a in product(*(range(b + 1) for b in bounds)):
        if any(monomial_divides(v, a) for v in exps) or np_membership(a, NP):
            members.append(a)
    minimal = [a for a in members if not any(b != a and monomial_divides(b, a) for b in members)]
    logger.debug(f"box of {len(members)} closure members, {len(minimal)} minimal")
    return IdealHandle(ring, [Polynomial.monomial(ring, a) for a in minimal])


def brute_force_oracle(a: Monomial, I: IdealHandle, K: int | None = None) -> bool:
    """
    True when k*a dominates a sum of k generator exponents for some k <= K,
    i.e. x^(ka) ∈ I^k, which certifies x^a in the integral closure.
    """
    K = get_config().oracle_k if K is None else K
    if K < 1:
        raise DegenerateInputError(f"oracle bound must be at least 1, got {K}")
    exps = monomial_exponents(I)
    if exps is None:
        raise NotMonomialError("brute_force_oracle needs a monomial ideal")
    if len(a) != I.ring.nvars:
        raise DegenerateInputError(f"vector {tuple(a)} does not fit {I.ring}")
    for k in range(1, K + 1):
        target = tuple(k * e for e in a)
        for combo in combinations_with_replacement(range(len(exps)), k):
            total = [0] * len(a)
            for i in combo:
                for j, e in enumerate(exps[i]):
                    total[j] += e
            if monomial_divides(tuple(total), target):
                return True
    return False
