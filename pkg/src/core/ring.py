# src/core/ring.py
"""
Rings, monomial orders and exponent-vector helpers.

A monomial is a plain tuple of non-negative ints, one entry per ring variable.
Orders are expressed as sort keys: a larger key means a larger monomial.
"""
from __future__ import annotations

import logging
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import TYPE_CHECKING, Iterable, Sequence

from src.core.errors import CharacteristicError, DegenerateInputError, RingMismatchError

if TYPE_CHECKING:
    from src.core.polynomial import Polynomial

logger = logging.getLogger(__name__)

Monomial = tuple[int, ...]

_ORDER_RE = re.compile(r"^\s*(grevlex|lex|block\(\s*(\d+)\s*\))\s*$")


# --- 单项式工具函数 ---
def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a | b."""
    return all(x <= y for x, y in zip(a, b))


def monomial_quotient(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def _grevlex_key(m: Monomial) -> tuple:
    return (sum(m), tuple(-e for e in reversed(m)))


@dataclass(frozen=True)
class MonomialOrder:
    """grevlex | lex | block(k): grevlex on the first k variables, ties broken by grevlex on the rest."""

    kind: str = "grevlex"
    block: int = 0

    def __post_init__(self):
        if self.kind not in ("grevlex", "lex", "block"):
            raise DegenerateInputError(f"unknown monomial order '{self.kind}'")
        if self.kind == "block" and self.block < 0:
            raise DegenerateInputError("block size must be non-negative")

    @classmethod
    def parse(cls, spec: str) -> "MonomialOrder":
        match = _ORDER_RE.match(spec)
        if not match:
            raise DegenerateInputError(f"unknown monomial order '{spec}'")
        if match.group(2) is not None:
            return cls("block", int(match.group(2)))
        return cls(match.group(1))

    def key(self, m: Monomial) -> tuple:
        if self.kind == "lex":
            return m
        if self.kind == "grevlex":
            return _grevlex_key(m)
        k = self.block
        return (_grevlex_key(m[:k]), _grevlex_key(m[k:]))

    def __str__(self) -> str:
        return f"block({self.block})" if self.kind == "block" else self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")


@dataclass(frozen=True)
class RingDescriptor:
    """
    k[variables] / (relations), k = Q (characteristic 0) or GF(p).

    Polynomials always live in the *base* ring (no relations); the relations
    only matter to ideal computations, which adjoin them to every operand.
    """

    variables: tuple[str, ...]
    characteristic: int = 0
    order: MonomialOrder = GREVLEX
    relations: tuple["Polynomial", ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "variables", tuple(self.variables))
        object.__setattr__(self, "relations", tuple(self.relations))
        if not self.variables:
            raise DegenerateInputError("a ring needs at least one variable")
        if len(set(self.variables)) != len(self.variables):
            raise DegenerateInputError(f"duplicate variable names in {list(self.variables)}")
        if self.characteristic < 0 or (self.characteristic and not _is_prime(self.characteristic)):
            raise DegenerateInputError(f"characteristic must be 0 or a prime, got {self.characteristic}")
        if self.order.kind == "block" and self.order.block > len(self.variables):
            raise DegenerateInputError("block size exceeds the number of variables")
        for rel in self.relations:
            if rel.ring != self.base:
                raise RingMismatchError("relations must be polynomials over the base ring")

    # --- 基本属性 ---
    @property
    def nvars(self) -> int:
        return len(self.variables)

    @cached_property
    def base(self) -> "RingDescriptor":
        """The same polynomial ring with the quotient relations dropped."""
        if not self.relations:
            return self
        return RingDescriptor(self.variables, self.characteristic, self.order)

    @property
    def is_quotient(self) -> bool:
        return bool(self.relations)

    def index(self, name: str) -> int:
        try:
            return self.variables.index(name)
        except ValueError:
            raise DegenerateInputError(f"unknown variable '{name}' in ring {self}") from None

    def key(self, m: Monomial) -> tuple:
        return self.order.key(m)

    # --- 系数域运算 ---
    def coerce(self, c) -> Fraction:
        value = c if isinstance(c, Fraction) else Fraction(c)
        p = self.characteristic
        if p:
            if value.denominator % p == 0:
                raise ZeroDivisionError(f"{value} is not defined in GF({p})")
            return Fraction(value.numerator * pow(value.denominator, -1, p) % p)
        return value

    def divide(self, a: Fraction, b: Fraction) -> Fraction:
        p = self.characteristic
        if p:
            return Fraction(int(a) * pow(int(b), -1, p) % p)
        return a / b

    def require_char_zero(self, what: str) -> None:
        if self.characteristic:
            raise CharacteristicError(f"{what} is only supported in characteristic 0 (ring has characteristic {self.characteristic})")

    # --- 环的构造 ---
    def with_order(self, order: MonomialOrder) -> "RingDescriptor":
        if order == self.order:
            return self
        rels = ()
        ring = RingDescriptor(self.variables, self.characteristic, order)
        if self.relations:
            rels = tuple(r.change_ring(ring) for r in self.relations)
            ring = RingDescriptor(self.variables, self.characteristic, order, rels)
        return ring

    def with_relations(self, relations: Iterable["Polynomial"]) -> "RingDescriptor":
        return RingDescriptor(self.variables, self.characteristic, self.order, tuple(relations))

    def with_variables(self, variables: Sequence[str], order: MonomialOrder | None = None,
                       keep_relations: bool = True) -> "RingDescriptor":
        """
        A ring on a new variable list. Relations that only involve variables present
        in the new ring are carried over (rewritten); the others are dropped.
        """
        ring = RingDescriptor(tuple(variables), self.characteristic, order or self.order)
        if not keep_relations or not self.relations:
            return ring
        names = set(variables)
        kept = [r.change_ring(ring) for r in self.relations if set(r.support_variables()) <= names]
        return ring.with_relations(kept) if kept else ring

    def fresh_names(self, stems: Sequence[str]) -> list[str]:
        """New variable names based on ``stems`` that do not clash with this ring."""
        taken = set(self.variables)
        names = []
        for stem in stems:
            name, n = stem, 0
            while name in taken:
                n += 1
                name = f"{stem}_{n}"
            taken.add(name)
            names.append(name)
        return names

    def __str__(self) -> str:
        field_name = "Q" if self.characteristic == 0 else f"GF({self.characteristic})"
        text = f"{field_name}[{','.join(self.variables)}] order={self.order}"
        if self.relations:
            text += " rel=" + ", ".join(str(r) for r in self.relations)
        return text


def polynomial_ring(variables: str | Sequence[str], characteristic: int = 0,
                    order: str | MonomialOrder = "grevlex") -> RingDescriptor:
    """Convenience constructor: ``polynomial_ring("x,y,z")``."""
    if isinstance(variables, str):
        variables = [v.strip() for v in variables.split(",") if v.strip()]
    if isinstance(order, str):
        order = MonomialOrder.parse(order)
    return RingDescriptor(tuple(variables), characteristic, order)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True
