# src/core/polynomial.py
"""
Canonical sparse multivariate polynomials over Q (or GF(p)).

Terms are stored as ``(monomial, coefficient)`` pairs sorted strictly
descending in the ring's monomial order; zero coefficients never appear, so
two equal polynomials always have identical term tuples and identical text.
"""
from __future__ import annotations

import logging
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Mapping

from src.core.errors import DegenerateInputError, RingMismatchError
from src.core.ring import (
    Monomial,
    RingDescriptor,
    monomial_divides,
    monomial_mul,
    monomial_quotient,
)

logger = logging.getLogger(__name__)

Coefficient = int | Fraction


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring: RingDescriptor, terms: Mapping[Monomial, Coefficient] | Iterable[tuple[Monomial, Coefficient]] = ()):
        ring = ring.base
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Monomial, Fraction] = {}
        n = ring.nvars
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != n or any(e < 0 for e in mono):
                raise DegenerateInputError(f"exponent vector {mono} does not fit ring {ring}")
            acc[mono] = acc.get(mono, 0) + coeff
        self.ring = ring
        self.terms = _canonical_terms(ring, acc)
        self._hash = None

    @classmethod
    def _from_dict(cls, ring: RingDescriptor, acc: dict) -> "Polynomial":
        """Fast path: ``acc`` already holds valid monomials of ``ring`` (a base ring)."""
        poly = object.__new__(cls)
        poly.ring = ring
        poly.terms = _canonical_terms(ring, acc)
        poly._hash = None
        return poly

    @classmethod
    def _from_sorted(cls, ring: RingDescriptor, terms: tuple) -> "Polynomial":
        poly = object.__new__(cls)
        poly.ring = ring
        poly.terms = terms
        poly._hash = None
        return poly

    # --- 构造器 ---
    @classmethod
    def zero(cls, ring: RingDescriptor) -> "Polynomial":
        return cls._from_sorted(ring.base, ())

    @classmethod
    def constant(cls, ring: RingDescriptor, c: Coefficient) -> "Polynomial":
        ring = ring.base
        return cls._from_dict(ring, {(0,) * ring.nvars: c})

    @classmethod
    def one(cls, ring: RingDescriptor) -> "Polynomial":
        return cls.constant(ring, 1)

    @classmethod
    def variable(cls, ring: RingDescriptor, name: str) -> "Polynomial":
        ring = ring.base
        i = ring.index(name)
        mono = tuple(1 if j == i else 0 for j in range(ring.nvars))
        return cls._from_sorted(ring, ((mono, Fraction(1)),))

    @classmethod
    def monomial(cls, ring: RingDescriptor, exponents: Monomial, coeff: Coefficient = 1) -> "Polynomial":
        return cls(ring, {tuple(exponents): coeff})

    # --- 基本查询 ---
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and not any(self.terms[0][0]))

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    @property
    def lm(self) -> Monomial:
        return self.terms[0][0]

    @property
    def lc(self) -> Fraction:
        return self.terms[0][1]

    @property
    def lt(self) -> tuple[Monomial, Fraction]:
        return self.terms[0]

    def total_degree(self) -> int:
        return max((sum(m) for m, _ in self.terms), default=-1)

    def support_variables(self) -> list[str]:
        used = [False] * self.ring.nvars
        for mono, _ in self.terms:
            for i, e in enumerate(mono):
                if e:
                    used[i] = True
        return [v for v, u in zip(self.ring.variables, used) if u]

    def as_dict(self) -> dict[Monomial, Fraction]:
        return dict(self.terms)

    def _check(self, other: "Polynomial") -> None:
        if other.ring != self.ring:
            raise RingMismatchError(f"ring mismatch: {self.ring} vs {other.ring}")

    def _lift(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ring, other)
        return NotImplemented

    # --- 算术 ---
    def __add__(self, other) -> "Polynomial":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        for mono, c in other.terms:
            acc[mono] = acc.get(mono, 0) + c
        return Polynomial._from_dict(self.ring, acc)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._from_dict(self.ring, {m: -c for m, c in self.terms})

    def __sub__(self, other) -> "Polynomial":
        other = self._lift(other)
        if other is NotImplemented:
            return other
        acc = dict(self.terms)
        for mono, c in other.terms:
            acc[mono] = acc.get(mono, 0) - c
        return Polynomial._from_dict(self.ring, acc)

    def __rsub__(self, other) -> "Polynomial":
        return (-self) + other

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms:
            for m2, c2 in other.terms:
                mono = tuple(a + b for a, b in zip(m1, m2))
                acc[mono] = acc.get(mono, 0) + c1 * c2
        return Polynomial._from_dict(self.ring, acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if not isinstance(n, int) or n < 0:
            raise DegenerateInputError(f"exponent must be a non-negative integer, got {n}")
        result = Polynomial.one(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def scale(self, c: Coefficient) -> "Polynomial":
        c = self.ring.coerce(c)
        if not c:
            return Polynomial.zero(self.ring)
        if self.ring.characteristic:
            return Polynomial._from_dict(self.ring, {m: a * c for m, a in self.terms})
        return Polynomial._from_sorted(self.ring, tuple((m, a * c) for m, a in self.terms))

    def mul_term(self, mono: Monomial, coeff: Coefficient) -> "Polynomial":
        """self * coeff * x^mono; term order is preserved by monomial multiplication."""
        coeff = self.ring.coerce(coeff)
        if not coeff:
            return Polynomial.zero(self.ring)
        if self.ring.characteristic:
            return Polynomial._from_dict(self.ring, {monomial_mul(m, mono): a * coeff for m, a in self.terms})
        return Polynomial._from_sorted(
            self.ring, tuple((monomial_mul(m, mono), a * coeff) for m, a in self.terms)
        )

    def monic(self) -> "Polynomial":
        if not self.terms:
            return self
        return self.scale(self.ring.divide(Fraction(1), self.lc))

    def primitive(self) -> "Polynomial":
        """Integer coefficients, content 1, positive leading coefficient (char 0).

        In characteristic p this is the monic form.
        """
        if not self.terms:
            return self
        if self.ring.characteristic:
            return self.monic()
        denom = lcm(*(c.denominator for _, c in self.terms))
        ints = [c.numerator * (denom // c.denominator) for _, c in self.terms]
        content = gcd(*ints)
        if ints[0] < 0:
            content = -content
        return Polynomial._from_sorted(
            self.ring, tuple((m, Fraction(v // content)) for (m, _), v in zip(self.terms, ints))
        )

    def derivative(self, name: str) -> "Polynomial":
        self.ring.require_char_zero("partial derivative")
        i = self.ring.index(name)
        acc = {}
        for mono, c in self.terms:
            e = mono[i]
            if e:
                acc[mono[:i] + (e - 1,) + mono[i + 1:]] = c * e
        return Polynomial._from_dict(self.ring, acc)

    def exact_quotient(self, g: "Polynomial") -> "Polynomial":
        """self / g when g divides self; raises ArithmeticError otherwise."""
        self._check(g)
        if g.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        ring = self.ring
        gm, gc = g.lt
        rest = g.terms[1:]
        work = dict(self.terms)
        quotient: dict[Monomial, Fraction] = {}
        key = ring.key
        while work:
            mono = max(work, key=key)
            c = work.pop(mono)
            if not monomial_divides(gm, mono):
                raise ArithmeticError(f"{g} does not divide {self}")
            q = monomial_quotient(mono, gm)
            factor = ring.divide(c, gc)
            quotient[q] = factor
            for m, a in rest:
                mm = monomial_mul(m, q)
                v = ring.coerce(work.get(mm, 0) - factor * a)
                if v:
                    work[mm] = v
                else:
                    work.pop(mm, None)
        return Polynomial._from_dict(ring, quotient)

    # --- 换环 / 代换 ---
    def change_ring(self, ring: RingDescriptor) -> "Polynomial":
        """Rewrite in ``ring`` by matching variable names; unused variables may disappear."""
        ring = ring.base
        if ring == self.ring:
            return self
        positions = []
        for i, name in enumerate(self.ring.variables):
            positions.append(ring.variables.index(name) if name in ring.variables else -1)
        acc = {}
        n = ring.nvars
        for mono, c in self.terms:
            new = [0] * n
            for i, e in enumerate(mono):
                if e:
                    j = positions[i]
                    if j < 0:
                        raise RingMismatchError(
                            f"variable '{self.ring.variables[i]}' of {self} is missing from {ring}"
                        )
                    new[j] = e
            acc[tuple(new)] = ring.coerce(c)
        return Polynomial._from_dict(ring, acc)

    def substitute(self, mapping: Mapping[str, "Polynomial"], target: RingDescriptor | None = None) -> "Polynomial":
        """Replace variables by polynomials of ``target`` (default: this ring); unmapped variables map to themselves."""
        target = (target or self.ring).base
        for name in mapping:
            self.ring.index(name)
        images = []
        for name in self.ring.variables:
            if name in mapping:
                image = mapping[name]
                if image.ring != target:
                    raise RingMismatchError(f"image of '{name}' is not in {target}")
            else:
                image = Polynomial.variable(target, name)
            images.append(image)
        result = Polynomial.zero(target)
        power_cache: dict[tuple[int, int], Polynomial] = {}
        for mono, c in self.terms:
            term = Polynomial.constant(target, c)
            for i, e in enumerate(mono):
                if e:
                    key = (i, e)
                    if key not in power_cache:
                        power_cache[key] = images[i] ** e
                    term = term * power_cache[key]
            result = result + term
        return result

    # --- 比较 / 输出 ---
    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Polynomial.constant(self.ring, other).terms
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring.variables, self.terms))
        return self._hash

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = self.ring.variables
        parts = []
        for idx, (mono, c) in enumerate(self.terms):
            factors = [name if e == 1 else f"{name}^{e}" for name, e in zip(names, mono) if e]
            negative = c < 0
            mag = -c if negative else c
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = f"{mag}*" + "*".join(factors)
            if idx == 0:
                parts.append(("-" if negative else "") + body)
            else:
                parts.append(("-" if negative else "+") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"


def _canonical_terms(ring: RingDescriptor, acc: dict) -> tuple:
    p = ring.characteristic
    if p:
        items = [(m, Fraction(int(Fraction(c).numerator * pow(Fraction(c).denominator, -1, p)) % p))
                 for m, c in acc.items()]
        items = [(m, c) for m, c in items if c]
    else:
        items = [(m, c if isinstance(c, Fraction) else Fraction(c)) for m, c in acc.items() if c]
    items.sort(key=lambda t: ring.key(t[0]), reverse=True)
    return tuple(items)


# --- 多项式运算 ---
def poly_algebra(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    """add | sub | mul on two polynomials of the same ring."""
    f._check(g)
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise DegenerateInputError(f"unknown polynomial operation '{op}'")


def partial_derivative(f: Polynomial, variable: str) -> Polynomial:
    return f.derivative(variable)


def substitute_linear(f: Polynomial, mapping: Mapping[str, Polynomial], target: RingDescriptor | None = None) -> Polynomial:
    """Linear change of variables: every image must have total degree at most 1."""
    for name, image in mapping.items():
        if image.total_degree() > 1:
            raise DegenerateInputError(f"image of '{name}' is not linear: {image}")
    return f.substitute(mapping, target)


# --- 一元多项式 gcd / 无平方部分 ---
def univariate_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic gcd of two polynomials in (at most) one common variable."""
    f._check(g)
    if len(set(f.support_variables()) | set(g.support_variables())) > 1:
        raise DegenerateInputError("univariate_gcd needs polynomials in a single variable")
    a, b = f, g
    while b:
        a, b = b, _univariate_remainder(a, b)
    return a.monic()


def _univariate_remainder(a: Polynomial, b: Polynomial) -> Polynomial:
    ring = a.ring
    bm, bc = b.lt
    r = a
    while r and monomial_divides(bm, r.lm):
        m, c = r.lt
        r = r - b.mul_term(monomial_quotient(m, bm), ring.divide(c, bc))
    return r


def squarefree_part(f: Polynomial) -> Polynomial:
    """f / gcd(f, f') for a univariate f (characteristic 0)."""
    f.ring.require_char_zero("squarefree part")
    variables = f.support_variables()
    if not variables:
        return f.monic()
    g = univariate_gcd(f, f.derivative(variables[0]))
    return f.exact_quotient(g).monic()
