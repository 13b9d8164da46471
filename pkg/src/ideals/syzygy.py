# src/ideals/syzygy.py
"""First syzygies by Schreyer lifting, and Fitting ideals of presentation matrices."""
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Sequence

from src.core.errors import DegenerateInputError
from src.core.matrix import PolyMatrix, minors
from src.core.polynomial import Polynomial
from src.core.ring import RingDescriptor, monomial_lcm, monomial_quotient
from src.groebner.buchberger import reduce_with_quotients, tracked_groebner_basis
from src.ideals.handle import IdealHandle

logger = logging.getLogger(__name__)


def _combine(ring: RingDescriptor, sigma: Sequence[Polynomial], rows: Sequence[Sequence[Polynomial]], q: int):
    """Rewrite a relation on the basis (coefficients sigma) as a relation on the inputs."""
    out = [Polynomial.zero(ring) for _ in range(q)]
    for s, row in zip(sigma, rows):
        if not s:
            continue
        for j in range(q):
            if row[j]:
                out[j] = out[j] + s * row[j]
    return out


def syzygy_matrix(gens: Sequence[Polynomial]) -> PolyMatrix:
    """
    q x p matrix whose columns generate the syzygies of ``gens``.

    Columns come from the S-pair relations of a tracked Groebner basis, pulled
    back to the inputs, plus one column per input expressing it through the
    basis. Zero columns and repeated columns are dropped.
    """
    if not gens:
        raise DegenerateInputError("syzygy_matrix needs at least one generator")
    if any(not g for g in gens):
        raise DegenerateInputError("syzygy_matrix needs nonzero generators")
    ring = gens[0].ring
    q = len(gens)
    basis, rows = tracked_groebner_basis(list(gens))
    columns: list[list[Polynomial]] = []

    def keep(col: list[Polynomial]) -> None:
        if any(col) and col not in columns:
            columns.append(col)

    n = len(basis)
    for i in range(n):
        for j in range(i + 1, n):
            fi, fj = basis[i], basis[j]
            lcm = monomial_lcm(fi.lm, fj.lm)
            ui = (monomial_quotient(lcm, fi.lm), ring.divide(Fraction(1), fi.lc))
            uj = (monomial_quotient(lcm, fj.lm), ring.divide(Fraction(1), fj.lc))
            s = fi.mul_term(*ui) - fj.mul_term(*uj)
            quotients, r = reduce_with_quotients(s, basis)
            if r:
                raise ArithmeticError("tracked basis is not a Groebner basis")
            sigma = [-qk for qk in quotients]
            sigma[i] = sigma[i] + Polynomial.monomial(ring, ui[0], ui[1])
            sigma[j] = sigma[j] - Polynomial.monomial(ring, uj[0], uj[1])
            keep(_combine(ring, sigma, rows, q))

    for j, g in enumerate(gens):
        quotients, r = reduce_with_quotients(g, basis)
        if r:
            raise ArithmeticError("input generator does not reduce to zero modulo its own basis")
        col = [-x for x in _combine(ring, quotients, rows, q)]
        col[j] = col[j] + 1
        keep(col)

    M = PolyMatrix.from_columns(ring, q, columns) if columns else PolyMatrix(ring, q, 0, [])
    check = M.left_multiply(list(gens))
    if any(check):
        raise ArithmeticError("syzygy check gens * M = 0 failed")
    logger.debug(f"syzygies of {q} generators: {M.cols} columns")
    return M


def fitting_ideal(M: PolyMatrix, k: int) -> IdealHandle:
    """I_k(M), the ideal of k x k minors; I_0 = (1)."""
    if k < 0 or k > min(M.rows, M.cols):
        raise DegenerateInputError(f"Fitting index {k} out of range for a {M.rows}x{M.cols} matrix")
    if k == 0:
        return IdealHandle.unit(M.ring)
    distinct = sorted({m.primitive(): None for m in minors(M, k)},
                      key=lambda p: (p.total_degree(), len(p.terms), str(p)))
    # 逐个加入: 已在理想中的子式直接跳过, 只在理想变大时重算 Groebner 基
    ideal = IdealHandle(M.ring, [])
    for m in distinct:
        if ideal.gens and ideal.contains(m):
            continue
        ideal = ideal.with_gens(list(ideal.gens) + [m])
        if ideal.is_unit():
            break
    logger.debug(f"I_{k}: {len(distinct)} distinct minors, {len(ideal.gens)} kept")
    return ideal
