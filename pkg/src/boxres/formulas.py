"""Closed-form Betti numbers and face counts, exact integers only."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .ideal import MonomialIdeal, NotBorelError, is_qborel
from .resolution import BettiTable


class FormulaTable(BettiTable):
    def __init__(self, entries, provenance: str):
        super().__init__(entries, provenance)


def _max_index(g) -> int:
    return max(g.support())


def ek_betti(I: MonomialIdeal) -> FormulaTable:
    """Eliahou-Kervaire count: ``beta_{p,p+q} = sum_{deg g = q} C(max(g) - 1, p)``."""
    if not is_qborel(I, 1):
        raise NotBorelError("Eliahou-Kervaire counts need a Borel ideal")
    entries: dict = {}
    for g in I.gens:
        q = g.degree
        top = _max_index(g) - 1
        for p in range(top + 1):
            entries[(p, p + q)] = entries.get((p, p + q), 0) + comb(top, p)
    return FormulaTable(entries, "eliahou-kervaire")


def gamma_p(n: int, p: int) -> int:
    """Number of ``p``-dimensional faces of the star that contain ``x_1 ... x_n``."""
    return comb(n, p) if 0 <= p <= n - 1 else 0


def beta_J(n: int, p: int) -> int:
    """``beta_{p,p+n}(J)`` by inclusion-exclusion over the boxes of the star."""
    if not 0 <= p <= n - 1:
        return 0
    total = 0
    for ell in range(1, n + 1):
        c = comb(n - ell, p)
        if n - ell - p < 0:
            # 2^{negative} only ever meets a vanishing binomial
            assert c == 0
            continue
        total += (-1) ** (ell + 1) * 2 ** (n - ell - p) * comb(n, ell) * c
    return total


def beta_I_power(n: int, p: int) -> int:
    """``beta_{p,p+n}`` of ``(x_1..x_n)^n``."""
    return sum(comb(i - 1, p) * comb(n + i - 2, n - 1) for i in range(p + 1, n + 1))


def betti_J(n: int) -> FormulaTable:
    return FormulaTable({(p, p + n): beta_J(n, p) for p in range(n)}, "J")


def betti_Jhat(n: int) -> FormulaTable:
    entries = {(p, p + n): beta_J(n, p) - gamma_p(n, p) for p in range(n)}
    entries[(n - 1, 2 * n)] = entries.get((n - 1, 2 * n), 0) + 1
    return FormulaTable(entries, "J-hat")


def betti_I_power(n: int) -> FormulaTable:
    return FormulaTable({(p, p + n): beta_I_power(n, p) for p in range(n)}, "I")


def betti_Ihat(n: int) -> FormulaTable:
    entries = {(p, p + n): beta_I_power(n, p) - gamma_p(n, p) for p in range(n)}
    entries[(n - 1, 2 * n)] = entries.get((n - 1, 2 * n), 0) + 1
    return FormulaTable(entries, "I-hat")


def gamma_table(n: int) -> FormulaTable:
    """The faces through ``m`` as a table: dimension ``p``, label degree ``n + p``."""
    return FormulaTable({(p, p + n): gamma_p(n, p) for p in range(n)}, "gamma")


def star_f_vector(n: int) -> tuple[int, ...]:
    return tuple(comb(n, d) * (2 ** (n - d) - 1) for d in range(n))


def star_hat_f_vector(n: int) -> tuple[int, ...]:
    return tuple(comb(n, d) * (2 ** (n - d) - 2) for d in range(n - 1)) + (1,)


TABLES = {
    "J": betti_J,
    "J-hat": betti_Jhat,
    "I": betti_I_power,
    "I-hat": betti_Ihat,
    "gamma": gamma_table,
}
