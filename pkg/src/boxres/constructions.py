"""Builders for the symmetric complexes around ``m = x_1 ... x_n``.

``X_i`` is the complex of boxes of ``I_i``; ``X`` is their union and
resolves ``(x_1..x_n)^n``.  ``Y`` is the star of ``m`` in ``X``, ``Y-hat``
collapses it to one cell, and ``X-hat`` glues ``Y-hat`` to the ``X_i``
with ``m`` deleted; it resolves the pinched power ideal.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence

from .boxes import BoxFace, box_complex, complex_from_boxes, gamma_box, product_box_complex
from .cellcomplex import (
    ComplexError,
    Key,
    LabelledComplex,
    collapse_star,
    from_face_data,
    intersection,
    make_key,
    union_all,
)
from .ideal import MonomialIdeal, borel_closure, ideal_Ii
from .monomial import CyclicInterval, Monomial, divides, parse_pretty

VARIANTS = ("power", "pinched", "star", "star-hat", "box-complex", "product")


def center(n: int) -> Monomial:
    return Monomial((1,) * n)


def _check_n(n: int) -> None:
    if n < 2:
        raise ValueError("n >= 2 required")


def build_Xi(n: int, i: int) -> LabelledComplex:
    _check_n(n)
    if not 1 <= i <= n:
        raise ValueError(f"poset index {i} outside 1..{n}")
    return box_complex(ideal_Ii(n, i), i, variant="box-complex")


def build_X(n: int) -> LabelledComplex:
    _check_n(n)
    return union_all([build_Xi(n, i) for i in range(1, n + 1)], "power")


def _star_faces(n: int):
    """Faces ``F_1 x ... x F_n``, ``F_j`` a nonempty subset of ``{x_{j-1}, x_j}``, some ``F_i = {x_i}``."""
    options = []
    for j in range(1, n + 1):
        prev = (j - 2) % n + 1
        options.append([(prev,), (j,), tuple(sorted((prev, j)))])

    def labels(facs):
        return make_key(Monomial.from_indices(n, t) for t in product(*facs))

    entries = {}
    for facs in product(*options):
        if not any(facs[i] == (i + 1,) for i in range(n)):
            continue
        sub = []
        for t, f in enumerate(facs):
            if len(f) == 2:
                for keep in f:
                    sub.append(labels(facs[:t] + ((keep,),) + facs[t + 1 :]))
        vk = labels(facs)
        if len(vk) != 2 ** sum(len(f) == 2 for f in facs):
            raise ComplexError("star face with repeated vertex labels")
        entries[vk] = sub
    return entries.items()


def build_Y(n: int) -> LabelledComplex:
    """The star of ``m``, built from its product description and cross-checked
    against the union of the boxes ``Gamma_{Q_i}(m)``."""
    _check_n(n)
    direct = from_face_data(n, _star_faces(n), "star")
    m = center(n)
    boxes = complex_from_boxes(n, [gamma_box(m, i) for i in range(1, n + 1)], "star")
    if direct.face_keys() != boxes.face_keys() or direct != boxes:
        raise ComplexError("two constructions of the star disagree")
    return direct


def build_Yhat(n: int) -> LabelledComplex:
    return collapse_star(build_Y(n), center(n), "star-hat")


def build_Xhat(n: int, validate: bool = True) -> LabelledComplex:
    _check_n(n)
    m = center(n)
    parts = [build_Yhat(n)] + [build_Xi(n, i).delete_star(m) for i in range(1, n + 1)]
    out = union_all(parts, "pinched")
    if validate and n == 3:
        bad = pinched_table_mismatches(out)
        if bad:
            raise ComplexError(f"n=3 pinched complex disagrees with the reference table at {bad}")
    return out


def interval_boxes(n: int, i: int, j: int) -> list[BoxFace]:
    """Generating boxes of ``Gamma_[i,j]``, the complex of boxes of ``Borel_{Q_i}(m_[i,j])``."""
    gens = borel_closure([CyclicInterval(i, j, n).monomial()], i)
    return [gamma_box(g, i) for g in gens]


def build_interval_complex(n: int, i: int, j: int) -> LabelledComplex:
    return complex_from_boxes(n, interval_boxes(n, i, j), f"box-complex[{i},{j}]")


def _check_indices(n: int, indices: Sequence[int]) -> tuple[int, ...]:
    idx = tuple(indices)
    if not idx or list(idx) != sorted(set(idx)) or not all(1 <= i <= n for i in idx):
        raise ValueError(f"indices must be strictly increasing in 1..{n}, got {indices}")
    return idx


def build_product_complex(n: int, indices: Sequence[int]) -> LabelledComplex:
    """``Gamma_[i_1,i_2-1] x Gamma_[i_2,i_3-1] x ... x Gamma_[i_l,i_1-1]``."""
    idx = _check_indices(n, indices)
    factors = []
    for t, start in enumerate(idx):
        nxt = idx[(t + 1) % len(idx)]
        stop = (nxt - 2) % n + 1
        factors.append(interval_boxes(n, start, stop))
    return product_box_complex(n, factors, "product")


def box_intersection(n: int, indices: Sequence[int]) -> LabelledComplex:
    """Intersection of the ``X_{i_j}``, face sets compared by vertex key."""
    idx = _check_indices(n, indices)
    acc = build_Xi(n, idx[0])
    for i in idx[1:]:
        acc = intersection(acc, build_Xi(n, i))
    return acc


def unique_m_facet(n: int, alpha: Monomial) -> BoxFace:
    """The box ``prod_{x_i^2 | alpha} {x_i, x_i+1} x prod_{x_i^2 not | alpha} {x_i+1}``."""
    m = center(n)
    if alpha.n != n or not divides(m, alpha) or divides(m * m, alpha):
        raise ValueError("need m | alpha and m^2 not dividing alpha")
    facs = []
    for i in range(1, n + 1):
        nxt = i % n + 1
        facs.append((i, nxt) if alpha.exponents[i - 1] >= 2 else (nxt,))
    return BoxFace(n, tuple(facs))


def maximal_faces_containing(X: LabelledComplex, v: Monomial) -> list:
    """Inclusion-maximal faces of ``X`` having ``v`` as a vertex."""
    around = [f for f in X if v in f.key]
    sets = [set(f.key) for f in around]
    return [f for f, s in zip(around, sets) if not any(s < t for t in sets)]


# --------------------------------------------------------- reference table
# X-hat_{<=alpha} for n = 3, a hand-computed reference.  Each entry
# lists the maximal faces by vertex labels.

PINCHED_TABLE_N3 = {
    "abc": [],
    "a^2bc": [["a^2b", "a^2c"]],
    "a^2b^2c": [["a^2c", "a^2b"], ["a^2b", "ab^2"], ["ab^2", "b^2c"]],
    "a^3bc": [["a^3", "a^2b", "a^2c"]],
    "a^3b^2c": [["a^3", "a^2b", "a^2c"], ["a^2b", "ab^2"], ["ab^2", "b^2c"]],
    # the path stops at bc^2: b^2c does not divide alpha
    "a^3bc^2": [["a^3", "a^2b", "a^2c"], ["a^2c", "ac^2"], ["ac^2", "bc^2"]],
    "a^3b^3c": [["a^3", "a^2b", "a^2c"], ["a^2b", "ab^2"], ["ab^2", "b^3", "b^2c"]],
}


def reference_subcomplex(alpha_text: str) -> frozenset:
    """All face keys generated by the listed maximal faces (simplices here)."""
    from itertools import combinations

    keys = set()
    for face in PINCHED_TABLE_N3[alpha_text]:
        verts = [parse_pretty(v, 3) for v in face]
        for r in range(1, len(verts) + 1):
            for sub in combinations(verts, r):
                keys.add(make_key(sub))
    return frozenset(keys)


def pinched_table_mismatches(Xhat3: LabelledComplex) -> list[str]:
    bad = []
    for alpha_text in PINCHED_TABLE_N3:
        alpha = parse_pretty(alpha_text, 3)
        if Xhat3.restrict_leq(alpha).face_keys() != reference_subcomplex(alpha_text):
            bad.append(alpha_text)
    return bad


# --------------------------------------------------------- variants


@dataclass(frozen=True)
class ComplexVariant:
    tag: str
    n: int
    perm: int = 1
    indices: tuple[int, ...] = ()

    def __post_init__(self):
        if self.tag not in VARIANTS:
            raise ValueError(f"unknown object {self.tag!r}; choose from {', '.join(VARIANTS)}")
        _check_n(self.n)

    def build(self) -> LabelledComplex:
        n = self.n
        if self.tag == "power":
            return build_X(n)
        if self.tag == "pinched":
            return build_Xhat(n)
        if self.tag == "star":
            return build_Y(n)
        if self.tag == "star-hat":
            return build_Yhat(n)
        if self.tag == "box-complex":
            return build_Xi(n, self.perm)
        return build_product_complex(n, self.indices or tuple(range(1, n + 1)))

    def ideal(self) -> MonomialIdeal:
        """The ideal the built complex is meant to resolve (vertex labels)."""
        return MonomialIdeal.of(self.build().vertices(), self.n)
