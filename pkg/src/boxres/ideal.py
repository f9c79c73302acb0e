"""Monomial ideals stored by their minimal generators.

Every constructor minimalizes eagerly, and generators are kept sorted in
the global monomial order so iteration is deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from pathlib import Path
from typing import Iterable, Optional, Sequence

from .monomial import (
    CyclicInterval,
    DegreeError,
    DimensionError,
    Monomial,
    borel_leq,
    cyclic_shift,
    divides,
    lcm,
    monomials_of_degree,
)


class NotBorelError(ValueError):
    """Raised when a construction needs a (Q_i-)Borel ideal and did not get one."""


def minimalize(gens: Iterable[Monomial]) -> tuple[Monomial, ...]:
    """Drop every generator divisible by a different one."""
    uniq = sorted(set(gens))
    keep = []
    for g in uniq:
        # uniq is degree-sorted, so only earlier elements can divide g
        if not any(divides(h, g) for h in keep):
            keep.append(g)
    return tuple(keep)


@dataclass(frozen=True)
class MonomialIdeal:
    n: int
    gens: tuple[Monomial, ...]

    def __post_init__(self):
        for g in self.gens:
            if g.n != self.n:
                raise DimensionError(f"generator {g} not in {self.n} variables")
        object.__setattr__(self, "gens", minimalize(self.gens))

    @classmethod
    def of(cls, gens: Iterable[Monomial], n: Optional[int] = None) -> "MonomialIdeal":
        gens = list(gens)
        if n is None:
            if not gens:
                raise ValueError("cannot infer n from an empty generator list")
            n = gens[0].n
        return cls(n, tuple(gens))

    @property
    def degree(self) -> Optional[int]:
        """Common generator degree, or None when not equigenerated."""
        degs = {g.degree for g in self.gens}
        return degs.pop() if len(degs) == 1 else None

    def __len__(self) -> int:
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def contains(self, f: Monomial) -> bool:
        return any(divides(g, f) for g in self.gens)

    __contains__ = contains

    def shift(self, k: int) -> "MonomialIdeal":
        return MonomialIdeal(self.n, tuple(cyclic_shift(g, k) for g in self.gens))

    def lcm(self) -> Monomial:
        acc = Monomial.one(self.n)
        for g in self.gens:
            acc = lcm(acc, g)
        return acc

    def __repr__(self) -> str:
        return "MonomialIdeal(" + ", ".join(g.pretty() for g in self.gens) + ")"


def power_ideal(n: int, d: int) -> MonomialIdeal:
    """``(x_1, ..., x_n)^d``."""
    if n < 2 or d < 1:
        raise ValueError("power_ideal needs n >= 2 and d >= 1")
    return MonomialIdeal(n, tuple(monomials_of_degree(n, d)))


def borel_closure(gens: Iterable[Monomial], i: int = 1) -> MonomialIdeal:
    """Smallest ``Q_i``-Borel ideal containing ``gens`` (equigenerated input)."""
    gens = list(gens)
    if not gens:
        raise ValueError("empty generator set")
    degs = {g.degree for g in gens}
    if len(degs) != 1:
        raise DegreeError("borel_closure needs equigenerated input")
    n, d = gens[0].n, degs.pop()
    found = [f for f in monomials_of_degree(n, d) if any(borel_leq(f, g, i) for g in gens)]
    return MonomialIdeal(n, tuple(found))


def is_qborel(I: MonomialIdeal, i: int = 1) -> bool:
    """Closed under every single elementary ``Q_i``-Borel move ``x_{j+1} -> x_j``.

    Elementary moves along the covering relations of ``Q_i`` generate all
    ``Q_i``-Borel moves, so checking them on generators suffices.
    """
    n = I.n
    order = [(i - 1 + t) % n for t in range(n)]
    for g in I.gens:
        e = list(g.exponents)
        for lo, hi in zip(order, order[1:]):
            if e[hi]:
                moved = e.copy()
                moved[hi] -= 1
                moved[lo] += 1
                if not I.contains(Monomial(tuple(moved))):
                    return False
    return True


def prime_ideal(interval: CyclicInterval) -> MonomialIdeal:
    """``m_[i,j] = (x_s : s in [i,j])``."""
    return MonomialIdeal(interval.n, tuple(Monomial.var(interval.n, s) for s in interval))


def product_ideal(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    if A.n != B.n:
        raise DimensionError("ideals over different rings")
    return MonomialIdeal(A.n, tuple(a * b for a, b in product(A.gens, B.gens)))


def cyclic_prime_product(intervals: Sequence[CyclicInterval]) -> MonomialIdeal:
    """Product of the prime ideals ``m_[i,j]`` over the given cyclic intervals."""
    if not intervals:
        raise ValueError("need at least one interval")
    acc = prime_ideal(intervals[0])
    for iv in intervals[1:]:
        acc = product_ideal(acc, prime_ideal(iv))
    return acc


def ideal_Ii(n: int, i: int) -> MonomialIdeal:
    """``I_i = Borel_{Q_i}(x_1 ... x_n)``."""
    return borel_closure([Monomial((1,) * n)], i)


def ideal_J(n: int) -> MonomialIdeal:
    """``J = m_[1,2] m_[2,3] ... m_[n,1]``, the ideal of the star of ``x_1...x_n``."""
    if n < 2:
        raise ValueError("n >= 2 required")
    return cyclic_prime_product([CyclicInterval(j, j % n + 1, n) for j in range(1, n + 1)])


def p_ideal(n: int, start: int, stop: int) -> MonomialIdeal:
    """``p_[start, stop] = m_[s,s] m_[s,s+1] ... m_[s,stop]`` for cyclic start/stop."""
    length = (stop - start) % n + 1
    return cyclic_prime_product([CyclicInterval(start, (start - 1 + t) % n + 1, n) for t in range(length)])


def remove_generator(I: MonomialIdeal, f: Monomial) -> MonomialIdeal:
    if f not in I.gens:
        raise ValueError(f"{f} is not a minimal generator")
    if I.degree is None:
        # a non-equigenerated ideal may need new generators; out of scope
        raise DegreeError("remove_generator is only defined for equigenerated ideals")
    return MonomialIdeal(I.n, tuple(g for g in I.gens if g != f))


def intersect(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    if A.n != B.n:
        raise DimensionError("ideals over different rings")
    return MonomialIdeal(A.n, tuple(lcm(a, b) for a, b in product(A.gens, B.gens)))


def ideal_sum(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    if A.n != B.n:
        raise DimensionError("ideals over different rings")
    return MonomialIdeal(A.n, A.gens + B.gens)


def read_generators(path: str | Path) -> MonomialIdeal:
    """One exponent list per line; blank lines and ``#`` comments ignored."""
    gens = []
    for line in Path(path).read_text().splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        gens.append(Monomial.parse(line))
    return MonomialIdeal.of(gens)


def write_generators(I: MonomialIdeal, path: str | Path) -> None:
    Path(path).write_text("".join(g.text() + "\n" for g in I.gens))
