"""Exact monomial arithmetic on exponent vectors.

Monomials carry their number of variables ``n``; mixing monomials of
different ``n`` raises :class:`DimensionError`.  Variable and poset
indices in the public functions are 1-based (``x_1 .. x_n``); everything
below that boundary works 0-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Sequence

_LETTERS = "abcdefghijklmnopqrstuvwxyz"


class DimensionError(ValueError):
    """Raised when monomials over different numbers of variables meet."""


class DegreeError(ValueError):
    """Raised when an operation needs equal (or specific) degrees."""


@total_ordering
@dataclass(frozen=True, eq=True)
class Monomial:
    """A monomial ``x^e`` in ``n = len(exponents)`` variables.

    Monomials are ordered by total degree, then lexicographically by
    exponent vector.  That order is used as the tie-breaker everywhere a
    canonical choice is needed.
    """

    exponents: tuple[int, ...]

    def __post_init__(self):
        exps = tuple(int(e) for e in self.exponents)
        if len(exps) < 2:
            raise DimensionError("monomials live in at least two variables")
        if any(e < 0 for e in exps):
            raise ValueError(f"negative exponent in {exps}")
        object.__setattr__(self, "exponents", exps)

    @classmethod
    def one(cls, n: int) -> "Monomial":
        return cls((0,) * n)

    @classmethod
    def var(cls, n: int, j: int, power: int = 1) -> "Monomial":
        """``x_j^power`` with 1-based ``j``."""
        e = [0] * n
        e[j - 1] = power
        return cls(tuple(e))

    @classmethod
    def from_indices(cls, n: int, indices: Iterable[int]) -> "Monomial":
        """Product of ``x_j`` over the 1-based indices given (with repetition)."""
        e = [0] * n
        for j in indices:
            e[j - 1] += 1
        return cls(tuple(e))

    @classmethod
    def parse(cls, text: str) -> "Monomial":
        """Parse the whitespace separated exponent list form, e.g. ``"2 1 0"``."""
        parts = text.replace(",", " ").split()
        if not parts:
            raise ValueError("empty monomial text")
        return cls(tuple(int(p) for p in parts))

    @property
    def n(self) -> int:
        return len(self.exponents)

    @property
    def degree(self) -> int:
        return sum(self.exponents)

    def sort_key(self):
        return (self.degree, self.exponents)

    def __lt__(self, other: "Monomial") -> bool:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __getitem__(self, j: int) -> int:
        return self.exponents[j]

    def __mul__(self, other: "Monomial") -> "Monomial":
        _check_n(self, other)
        return Monomial(tuple(a + b for a, b in zip(self.exponents, other.exponents)))

    def __truediv__(self, other: "Monomial") -> "Monomial":
        _check_n(self, other)
        if not divides(other, self):
            raise ValueError(f"{other} does not divide {self}")
        return Monomial(tuple(a - b for a, b in zip(self.exponents, other.exponents)))

    def __pow__(self, k: int) -> "Monomial":
        return Monomial(tuple(k * a for a in self.exponents))

    def indices(self) -> tuple[int, ...]:
        """Sorted 1-based index sequence ``i_1 <= ... <= i_d`` of the factorization."""
        out = []
        for j, e in enumerate(self.exponents):
            out.extend([j + 1] * e)
        return tuple(out)

    def support(self) -> tuple[int, ...]:
        return tuple(j + 1 for j, e in enumerate(self.exponents) if e)

    def text(self) -> str:
        return " ".join(str(e) for e in self.exponents)

    def pretty(self) -> str:
        """Letter form such as ``a^2b``; uses ``x1 x2 ..`` past 26 variables."""
        if self.degree == 0:
            return "1"
        out = []
        for j, e in enumerate(self.exponents):
            if not e:
                continue
            name = _LETTERS[j] if self.n <= len(_LETTERS) else f"x{j + 1}"
            out.append(name if e == 1 else f"{name}^{e}")
        return "".join(out)

    def __repr__(self) -> str:
        return f"Monomial({self.pretty()})"


def _check_n(a: Monomial, b: Monomial) -> None:
    if a.n != b.n:
        raise DimensionError(f"monomials in {a.n} and {b.n} variables")


def parse_pretty(text: str, n: int) -> Monomial:
    """Parse letter notation like ``"a^2bc"`` (test and fixture helper)."""
    e = [0] * n
    k = 0
    text = text.replace(" ", "")
    while k < len(text):
        ch = text[k]
        j = _LETTERS.index(ch)
        if j >= n:
            raise DimensionError(f"variable {ch!r} outside {n} variables")
        k += 1
        power = 1
        if k < len(text) and text[k] == "^":
            k += 1
            start = k
            while k < len(text) and text[k].isdigit():
                k += 1
            power = int(text[start:k])
        e[j] += power
    return Monomial(tuple(e))


def lcm(a: Monomial, b: Monomial) -> Monomial:
    _check_n(a, b)
    return Monomial(tuple(max(x, y) for x, y in zip(a.exponents, b.exponents)))


def gcd(a: Monomial, b: Monomial) -> Monomial:
    _check_n(a, b)
    return Monomial(tuple(min(x, y) for x, y in zip(a.exponents, b.exponents)))


def lcm_all(monos: Iterable[Monomial]) -> Monomial:
    it = iter(monos)
    try:
        acc = next(it)
    except StopIteration:
        raise ValueError("lcm of an empty family") from None
    for m in it:
        acc = lcm(acc, m)
    return acc


def divides(a: Monomial, b: Monomial) -> bool:
    _check_n(a, b)
    return all(x <= y for x, y in zip(a.exponents, b.exponents))


def cyclic_shift(f: Monomial, k: int) -> Monomial:
    """Apply ``sigma^k`` where ``sigma = (1 2 ... n)`` sends ``x_j`` to ``x_{j+1}``."""
    n = f.n
    k %= n
    return Monomial(tuple(f.exponents[(j - k) % n] for j in range(n)))


def borel_leq(f: Monomial, g: Monomial, i: int = 1) -> bool:
    """``f <= g`` in the Borel order of the cyclic chain ``Q_i``."""
    _check_n(f, g)
    if f.degree != g.degree:
        raise DegreeError(f"Borel order compares equal degrees, got {f.degree} and {g.degree}")
    ff = cyclic_shift(f, -(i - 1)).indices()
    gg = cyclic_shift(g, -(i - 1)).indices()
    return all(a <= b for a, b in zip(ff, gg))


@dataclass(frozen=True)
class CyclicInterval:
    """The cyclic interval ``[i, j] = {i, i+1, ..., j}`` taken mod ``n`` (1-based)."""

    i: int
    j: int
    n: int

    def __post_init__(self):
        if self.n < 1 or not (1 <= self.i <= self.n and 1 <= self.j <= self.n):
            raise ValueError(f"bad cyclic interval [{self.i},{self.j}] mod {self.n}")

    def __len__(self) -> int:
        return (self.j - self.i) % self.n + 1

    def elements(self) -> tuple[int, ...]:
        return tuple((self.i - 1 + t) % self.n + 1 for t in range(len(self)))

    def __iter__(self):
        return iter(self.elements())

    def __contains__(self, s: int) -> bool:
        return s in self.elements()

    def monomial(self) -> Monomial:
        """``m_[i,j]``, the product of the variables in the interval."""
        return Monomial.from_indices(self.n, self.elements())

    def shift(self, k: int) -> "CyclicInterval":
        return CyclicInterval((self.i - 1 + k) % self.n + 1, (self.j - 1 + k) % self.n + 1, self.n)


def delta(f: Monomial, i: int, s: int) -> int:
    """Sum of ``e_j - 1`` over the cyclic interval ``[i, s]``."""
    return sum(f.exponents[j - 1] - 1 for j in CyclicInterval(i, s, f.n))


def in_Ii(f: Monomial, i: int) -> bool:
    """Membership of a degree-``n`` monomial in ``I_i = Borel_{Q_i}(x_1...x_n)``."""
    if f.degree != f.n:
        raise DegreeError(f"expected degree {f.n}, got {f.degree}")
    return all(delta(f, i, s) >= 0 for s in range(1, f.n + 1))


def monomials_of_degree(n: int, d: int) -> list[Monomial]:
    """All monomials of degree ``d`` in ``n`` variables, in the global order."""
    out: list[Monomial] = []

    def rec(prefix: list[int], left: int, slots: int) -> None:
        if slots == 1:
            out.append(Monomial(tuple(prefix + [left])))
            return
        for e in range(left, -1, -1):
            rec(prefix + [e], left - e, slots - 1)

    rec([], d, n)
    return sorted(out)


def divisors(alpha: Monomial) -> list[Monomial]:
    """Every monomial dividing ``alpha``, sorted."""
    from itertools import product

    return sorted(Monomial(e) for e in product(*(range(a + 1) for a in alpha.exponents)))


def sorted_unique(monos: Sequence[Monomial]) -> tuple[Monomial, ...]:
    return tuple(sorted(set(monos)))
