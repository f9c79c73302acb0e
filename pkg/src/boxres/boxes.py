"""Boxes (products of simplices on variable sets) and the complex of boxes."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Optional, Sequence

from .cellcomplex import Key, LabelledComplex, from_face_data, make_key
from .ideal import MonomialIdeal, NotBorelError, is_qborel
from .monomial import Monomial, cyclic_shift


@dataclass(frozen=True)
class BoxFace:
    """``F_1 x ... x F_k`` with each ``F_t`` a nonempty set of 1-based variable indices.

    A vertex picks one variable per factor; its label is the product of the
    picks.  ``origin`` records the generator and poset index a box came from
    and takes no part in equality.
    """

    n: int
    factors: tuple[tuple[int, ...], ...]
    origin: Optional[tuple[Monomial, int]] = field(default=None, compare=False)

    def __post_init__(self):
        facs = tuple(tuple(sorted(set(f))) for f in self.factors)
        for f in facs:
            if not f or not all(1 <= j <= self.n for j in f):
                raise ValueError(f"bad factor {f} for n={self.n}")
        object.__setattr__(self, "factors", facs)

    @property
    def dim(self) -> int:
        return sum(len(f) - 1 for f in self.factors)

    def vertex_tuples(self) -> list[tuple[int, ...]]:
        return list(product(*self.factors))

    def vertex_labels(self) -> list[Monomial]:
        return [Monomial.from_indices(self.n, t) for t in self.vertex_tuples()]

    def key(self) -> Key:
        return make_key(self.vertex_labels())

    def is_admissible(self) -> bool:
        labels = self.vertex_labels()
        return len(set(labels)) == len(labels)

    def facets(self) -> list["BoxFace"]:
        out = []
        for t, f in enumerate(self.factors):
            if len(f) < 2:
                continue
            for drop in f:
                facs = list(self.factors)
                facs[t] = tuple(j for j in f if j != drop)
                out.append(BoxFace(self.n, tuple(facs), self.origin))
        return out

    def faces(self) -> list["BoxFace"]:
        """All faces: products of nonempty subsets of the factors."""
        choices = [
            [tuple(c) for r in range(1, len(f) + 1) for c in combinations(f, r)] for f in self.factors
        ]
        return [BoxFace(self.n, tuple(p), self.origin) for p in product(*choices)]

    def times(self, other: "BoxFace") -> "BoxFace":
        return BoxFace(self.n, self.factors + other.factors)

    def shift(self, k: int) -> "BoxFace":
        return BoxFace(self.n, tuple(tuple((j - 1 + k) % self.n + 1 for j in f) for f in self.factors), self.origin)


def is_admissible(b: BoxFace) -> bool:
    return b.is_admissible()


def gamma_box(f: Monomial, i: int = 1) -> BoxFace:
    """The box ``Gamma(f)`` for the chain ``Q_i``.

    After rotating ``x_i`` to ``x_1``, ``f = x_{i_1}...x_{i_d}`` with
    ``i_1 <= ... <= i_d`` gives ``D[1,i_1] x D[i_1,i_2] x ... x D[i_{d-1},i_d]``.
    """
    if f.degree < 1:
        raise ValueError("Gamma needs a monomial of positive degree")
    n = f.n
    idx = cyclic_shift(f, -(i - 1)).indices()
    ends = (1,) + idx
    facs = tuple(tuple(range(a, b + 1)) for a, b in zip(ends, idx))
    return BoxFace(n, facs, (f, i)).shift(i - 1)


def complex_from_boxes(n: int, boxes: Iterable[BoxFace], variant: str = "") -> LabelledComplex:
    """Polytopal complex generated by the given admissible boxes."""
    entries: dict[Key, frozenset] = {}
    for box in boxes:
        if not box.is_admissible():
            raise ValueError(f"inadmissible box {box.factors}")
        for face in box.faces():
            k = face.key()
            if k in entries:
                continue
            entries[k] = frozenset(g.key() for g in face.facets())
    return from_face_data(n, entries.items(), variant)


def gamma(f: Monomial, i: int = 1) -> LabelledComplex:
    return complex_from_boxes(f.n, [gamma_box(f, i)], f"box-complex({i})")


def box_complex(I: MonomialIdeal, i: int = 1, variant: Optional[str] = None) -> LabelledComplex:
    """Complex of boxes of an equigenerated ``Q_i``-Borel ideal."""
    if I.degree is None:
        raise NotBorelError("complex of boxes needs an equigenerated ideal")
    if not is_qborel(I, i):
        raise NotBorelError(f"ideal is not Q_{i}-Borel")
    return complex_from_boxes(I.n, [gamma_box(g, i) for g in I.gens], variant or f"box-complex({i})")


def product_box_complex(n: int, factor_boxes: Sequence[Sequence[BoxFace]], variant: str = "") -> LabelledComplex:
    """Product of box complexes in disjoint variables, given by their generating boxes."""
    boxes = []
    for combo in product(*factor_boxes):
        acc = combo[0]
        for b in combo[1:]:
            acc = acc.times(b)
        boxes.append(acc)
    return complex_from_boxes(n, boxes, variant)
