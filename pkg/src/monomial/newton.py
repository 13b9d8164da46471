# src/monomial/newton.py
"""
Newton polyhedron membership, decided exactly.

a ∈ NP(v_1..v_k)  iff  there are λ_i >= 0 with Σλ_i = 1 and Σλ_i v_i <= a.
The primary procedure is a phase-one simplex over Fractions with Bland's rule;
Fourier-Motzkin elimination is kept as an independent cross-check.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from src.core.errors import DegenerateInputError
from src.core.ring import Monomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NewtonPolyhedron:
    generators: tuple[Monomial, ...]

    def __post_init__(self):
        gens = tuple(tuple(int(e) for e in v) for v in self.generators)
        object.__setattr__(self, "generators", gens)
        if not gens:
            raise DegenerateInputError("a Newton polyhedron needs at least one exponent vector")
        n = len(gens[0])
        if any(len(v) != n or min(v, default=0) < 0 for v in gens):
            raise DegenerateInputError("exponent vectors must be non-negative and of equal length")

    @property
    def dim(self) -> int:
        return len(self.generators[0])

    def __contains__(self, a: Sequence[int]) -> bool:
        return np_membership(tuple(a), self)


def _check(a: Sequence[int], NP: NewtonPolyhedron) -> None:
    if len(a) != NP.dim:
        raise DegenerateInputError(f"vector {tuple(a)} has length {len(a)}, expected {NP.dim}")


# ::SIMPLEX:: - 第一阶段单纯形, Bland 规则 (无循环)
def _phase_one(A: list[list[Fraction]], b: list[Fraction]) -> list[Fraction] | None:
    """A feasible x >= 0 with Ax = b (b >= 0), or None."""
    m, N = len(A), len(A[0])
    width = N + m
    T = [list(row) + [Fraction(int(i == r)) for i in range(m)] + [b[r]] for r, row in enumerate(A)]
    basis = [N + r for r in range(m)]
    cost = [-sum((T[r][j] for r in range(m)), Fraction(0)) if j < N else Fraction(0) for j in range(width)]
    cost.append(-sum(b, Fraction(0)))

    while True:
        entering = next((j for j in range(width) if cost[j] < 0), None)
        if entering is None:
            break
        candidates = [r for r in range(m) if T[r][entering] > 0]
        if not candidates:
            break
        leave = min(candidates, key=lambda r: (T[r][-1] / T[r][entering], basis[r]))
        pivot = T[leave][entering]
        T[leave] = [x / pivot for x in T[leave]]
        for r in range(m):
            if r != leave and T[r][entering]:
                factor = T[r][entering]
                T[r] = [x - factor * y for x, y in zip(T[r], T[leave])]
        factor = cost[entering]
        cost = [x - factor * y for x, y in zip(cost, T[leave])]
        basis[leave] = entering

    if cost[-1] != 0:
        return None
    x = [Fraction(0)] * width
    for r, j in enumerate(basis):
        x[j] = T[r][-1]
    return x[:N]


def membership_certificate(a: Sequence[int], NP: NewtonPolyhedron) -> list[Fraction] | None:
    """Convex weights λ with Σλ_i v_i <= a, or None when a is outside the polyhedron."""
    _check(a, NP)
    k, n = len(NP.generators), NP.dim
    # 变量: λ_1..λ_k, 松弛变量 s_1..s_n
    A = []
    for j in range(n):
        A.append([Fraction(v[j]) for v in NP.generators] + [Fraction(int(i == j)) for i in range(n)])
    A.append([Fraction(1)] * k + [Fraction(0)] * n)
    b = [Fraction(e) for e in a] + [Fraction(1)]
    x = _phase_one(A, b)
    return None if x is None else x[:k]


def np_membership(a: Sequence[int], NP: NewtonPolyhedron) -> bool:
    return membership_certificate(a, NP) is not None


# ::FOURIER_MOTZKIN:: - 交叉验证
def np_membership_fm(a: Sequence[int], NP: NewtonPolyhedron) -> bool:
    """Same question as np_membership, by eliminating the weights one at a time."""
    _check(a, NP)
    k = len(NP.generators)
    rows: list[tuple[tuple[Fraction, ...], Fraction]] = []

    def unit(i: int, sign: int) -> tuple[Fraction, ...]:
        return tuple(Fraction(sign if t == i else 0) for t in range(k))

    for i in range(k):
        rows.append((unit(i, -1), Fraction(0)))
    rows.append((tuple(Fraction(1) for _ in range(k)), Fraction(1)))
    rows.append((tuple(Fraction(-1) for _ in range(k)), Fraction(-1)))
    for j in range(NP.dim):
        rows.append((tuple(Fraction(v[j]) for v in NP.generators), Fraction(a[j])))

    for var in range(k):
        pos = [r for r in rows if r[0][var] > 0]
        neg = [r for r in rows if r[0][var] < 0]
        rest = [r for r in rows if r[0][var] == 0]
        combined = set(rest)
        for cp, bp in pos:
            for cn, bn in neg:
                wp, wn = -cn[var], cp[var]
                coeffs = tuple(wp * x + wn * y for x, y in zip(cp, cn))
                row = _normalize(coeffs, wp * bp + wn * bn)
                if row is False:
                    return False
                if row is not None:
                    combined.add(row)
        rows = list(combined)
    return True


def _normalize(coeffs: tuple[Fraction, ...], rhs: Fraction):
    """Scale so the first nonzero coefficient is ±1; None for 0 <= c (c >= 0), False for 0 <= c < 0."""
    lead = next((c for c in coeffs if c), None)
    if lead is None:
        return None if rhs >= 0 else False
    scale = abs(lead)
    return tuple(c / scale for c in coeffs), rhs / scale
