# src/ideals/handle.py
from __future__ import annotations

import logging
import threading
from typing import Iterable

from src.core.errors import RingMismatchError
from src.core.polynomial import Polynomial
from src.core.ring import RingDescriptor
from src.groebner.buchberger import GroebnerBasis, groebner_basis

logger = logging.getLogger(__name__)


class IdealHandle:
    """
    An ideal given by generators in a (possibly quotient) ring.

    The Groebner basis in the ring's order is computed on first use and then
    never changes. In a quotient ring the relations are adjoined to the
    generators for every computation; ``gens`` holds only the user generators.
    """

    def __init__(self, ring: RingDescriptor, gens: Iterable[Polynomial] = ()):
        base = ring.base
        kept: list[Polynomial] = []
        for g in gens:
            if g.ring.variables != base.variables or g.ring.characteristic != base.characteristic:
                raise RingMismatchError(f"generator {g} is not in {ring}")
            g = g.change_ring(base)
            if g and g not in kept:
                kept.append(g)
        self.ring = ring
        self.gens: tuple[Polynomial, ...] = tuple(kept)
        self._gb: GroebnerBasis | None = None
        self._dim: int | None = None
        self._lock = threading.Lock()

    # --- 构造器 ---
    @classmethod
    def unit(cls, ring: RingDescriptor) -> "IdealHandle":
        return cls(ring, [Polynomial.one(ring)])

    @classmethod
    def zero(cls, ring: RingDescriptor) -> "IdealHandle":
        return cls(ring, [])

    def with_gens(self, gens: Iterable[Polynomial]) -> "IdealHandle":
        return IdealHandle(self.ring, gens)

    # --- Groebner 基 ---
    def adjoined(self) -> list[Polynomial]:
        return list(self.gens) + [r for r in self.ring.relations if r not in self.gens]

    @property
    def gb(self) -> GroebnerBasis:
        if self._gb is None:
            with self._lock:
                if self._gb is None:
                    self._gb = groebner_basis(self.adjoined(), ring=self.ring.base)
        return self._gb

    def reduce(self, f: Polynomial) -> Polynomial:
        """Normal form of f modulo the ideal (plus relations)."""
        self._check_poly(f)
        return self.gb.reduce(f)

    # --- 谓词 ---
    def is_unit(self) -> bool:
        return self.gb.is_unit()

    def is_zero(self) -> bool:
        """Zero in the ring: every generator lies in the relation ideal."""
        if not self.ring.is_quotient:
            return not self.gens
        rel = IdealHandle(self.ring, [])
        return all(not rel.reduce(g) for g in self.gens)

    def contains(self, f: Polynomial) -> bool:
        return not self.reduce(f)

    __contains__ = contains

    def contains_ideal(self, other: "IdealHandle") -> bool:
        self._check_ring(other)
        return all(self.contains(g) for g in other.gens)

    def equals(self, other: "IdealHandle") -> bool:
        self._check_ring(other)
        return self.gb.polys == other.gb.polys

    def render(self) -> list[str]:
        """Canonical text: the reduced Groebner basis, primitive, ascending by leading monomial."""
        return [str(p.primitive()) for p in self.gb.polys]

    def _check_ring(self, other: "IdealHandle") -> None:
        if other.ring != self.ring:
            raise RingMismatchError(f"ideals live in different rings: {self.ring} vs {other.ring}")

    def _check_poly(self, f: Polynomial) -> None:
        if f.ring != self.ring.base:
            raise RingMismatchError(f"{f} is not in {self.ring}")

    def __repr__(self) -> str:
        return f"IdealHandle({', '.join(str(g) for g in self.gens) or '0'})"
