"""Labelled polytopal complexes embedded by exponent vectors.

A face is identified by its sorted vertex labels (the complexes here are
embedded, with distinct vertex labels, so vertex sets determine faces).
Incidence signs are computed geometrically and exactly: a facet ``G`` of
``F`` gets the sign of the determinant comparing ``[outward, basis(G)]``
with ``basis(F)`` inside the affine hull of ``F``.
"""

from __future__ import annotations

import json
from collections import defaultdict, deque
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterable, Mapping, Optional, Sequence

from .linalg import bareiss_det, bareiss_rank
from .monomial import DimensionError, Monomial, divides, lcm, lcm_all

Key = tuple  # tuple[Monomial, ...], sorted in the global monomial order


class ComplexError(ValueError):
    """Inconsistent complex data (closure, geometry, orientation, collisions)."""


def make_key(vertices: Iterable[Monomial]) -> Key:
    key = tuple(sorted(set(vertices)))
    if not key:
        raise ComplexError("a face needs at least one vertex")
    return key


def key_id(key: Key) -> str:
    return ";".join(v.text() for v in key)


def parse_id(text: str) -> Key:
    return make_key(Monomial.parse(part) for part in text.split(";"))


@dataclass(frozen=True)
class Face:
    key: Key
    dim: int
    label: Monomial
    boundary: tuple = ()  # ((facet key, +1/-1), ...) sorted by facet key

    @property
    def vertices(self) -> Key:
        return self.key

    @property
    def id(self) -> str:
        return key_id(self.key)

    def contains_vertex(self, v: Monomial) -> bool:
        return v in self.key


# ---------------------------------------------------------------- geometry


def _sub(a: Sequence[int], b: Sequence[int]) -> list[int]:
    return [x - y for x, y in zip(a, b)]


def oriented_basis(key: Key) -> list[list[int]]:
    """Differences from the least vertex to the first affinely independent others."""
    base = key[0].exponents
    basis: list[list[int]] = []
    for v in key[1:]:
        cand = basis + [_sub(v.exponents, base)]
        if bareiss_rank(cand) == len(cand):
            basis = cand
    return basis


def _chart(basis: list[list[int]]) -> tuple[tuple[int, ...], int]:
    """Coordinates on which ``basis`` restricts to an invertible square matrix."""
    d = len(basis)
    if d == 0:
        return (), 1
    n = len(basis[0])
    for rows in combinations(range(n), d):
        det = bareiss_det([[vec[r] for vec in basis] for r in rows])
        if det:
            return rows, (1 if det > 0 else -1)
    raise ComplexError("degenerate basis")


@lru_cache(maxsize=None)
def _frame(key: Key):
    basis = oriented_basis(key)
    rows, chart_sign = _chart(basis)
    n = key[0].n
    sums = tuple(sum(v.exponents[c] for v in key) for c in range(n))
    return basis, rows, chart_sign, sums


def geometric_sign(facet: Key, face: Key) -> int:
    """Orientation sign of ``facet`` in the boundary of ``face`` (outward first)."""
    bf, rows, chart_sign, sum_f = _frame(face)
    bg, _, _, sum_g = _frame(facet)
    if len(bg) != len(bf) - 1:
        raise ComplexError("facet dimension mismatch")
    # positive multiple of centroid(facet) - centroid(face)
    outward = [len(face) * g - len(facet) * f for g, f in zip(sum_g, sum_f)]
    cols = [outward] + bg
    det = bareiss_det([[vec[r] for vec in cols] for r in rows])
    if det == 0:
        raise ComplexError(f"facet {key_id(facet)} not a facet of {key_id(face)}")
    return chart_sign * (1 if det > 0 else -1)


# ---------------------------------------------------------------- complexes


class LabelledComplex:
    """A closed family of labelled faces keyed by vertex set."""

    def __init__(self, n: int, faces: Mapping[Key, Face], variant: str = "", check: bool = True):
        if n < 2:
            raise DimensionError("complexes need n >= 2")
        self.n = n
        self.variant = variant
        self._faces: dict[Key, Face] = dict(sorted(faces.items(), key=lambda kv: (kv[1].dim, kv[0])))
        if check:
            self.check_closure()

    # -- access
    @property
    def faces(self) -> Mapping[Key, Face]:
        return self._faces

    def __len__(self) -> int:
        return len(self._faces)

    def __contains__(self, key) -> bool:
        return key in self._faces

    def __getitem__(self, key) -> Face:
        return self._faces[key]

    def __iter__(self):
        return iter(self._faces.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, LabelledComplex):
            return NotImplemented
        return self.n == other.n and self._faces == other._faces

    def face_keys(self) -> frozenset:
        return frozenset(self._faces)

    def vertices(self) -> list[Monomial]:
        return [f.key[0] for f in self._faces.values() if f.dim == 0]

    @property
    def dim(self) -> int:
        return max((f.dim for f in self._faces.values()), default=-1)

    def faces_of_dim(self, d: int) -> list[Face]:
        return [f for f in self._faces.values() if f.dim == d]

    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dim + 1)
        for f in self._faces.values():
            counts[f.dim] += 1
        return tuple(counts)

    def label_lcm(self) -> Monomial:
        return lcm_all(f.label for f in self._faces.values()) if self._faces else Monomial.one(self.n)

    def maximal_faces(self) -> list[Face]:
        covered = {g for f in self._faces.values() for g, _ in f.boundary}
        return [f for k, f in self._faces.items() if k not in covered]

    def with_variant(self, variant: str) -> "LabelledComplex":
        return LabelledComplex(self.n, self._faces, variant, check=False)

    def __repr__(self) -> str:
        return f"LabelledComplex(n={self.n}, variant={self.variant!r}, f={self.f_vector()})"

    # -- validation
    def check_closure(self) -> None:
        for f in self._faces.values():
            for g, s in f.boundary:
                if g not in self._faces:
                    raise ComplexError(f"facet {key_id(g)} of {f.id} missing")
                if s not in (1, -1):
                    raise ComplexError(f"bad sign {s}")
                h = self._faces[g]
                if h.dim != f.dim - 1 or not set(g) <= set(f.key):
                    raise ComplexError(f"{key_id(g)} cannot be a facet of {f.id}")
            if f.dim == 0 and (f.boundary or len(f.key) != 1):
                raise ComplexError(f"bad vertex {f.id}")
            if f.dim > 0 and not f.boundary:
                raise ComplexError(f"face {f.id} has empty boundary")

    def check_labels(self) -> None:
        for f in self._faces.values():
            if f.label != lcm_all(f.key):
                raise ComplexError(f"label of {f.id} is not the lcm of its vertices")
            for g, _ in f.boundary:
                if not divides(self._faces[g].label, f.label):
                    raise ComplexError("label monotonicity violated")

    def check_geometry(self) -> None:
        from .linalg import affine_rank

        for f in self._faces.values():
            if affine_rank([v.exponents for v in f.key]) != f.dim:
                raise ComplexError(f"face {f.id} does not span dimension {f.dim}")

    def boundary_squared_violations(self) -> list[tuple[Key, Key, int]]:
        """``(G, F, total)`` for codimension-2 pairs whose signed paths do not cancel.

        Vertices additionally bound the empty face with sign +1, so edges are
        checked too.
        """
        bad = []
        for f in self._faces.values():
            if f.dim < 1:
                continue
            acc: dict[Key, int] = defaultdict(int)
            for h, s1 in f.boundary:
                hf = self._faces[h]
                if hf.dim == 0:
                    acc[()] += s1
                for g, s2 in hf.boundary:
                    acc[g] += s1 * s2
            bad.extend((g, f.key, t) for g, t in acc.items() if t)
        return bad

    def check_boundary_squared(self) -> None:
        bad = self.boundary_squared_violations()
        if bad:
            g, f, t = bad[0]
            raise ComplexError(f"boundary of boundary nonzero at ({key_id(g) if g else '{}'}, {key_id(f)}): {t}")

    def validate(self) -> None:
        self.check_closure()
        self.check_labels()
        self.check_geometry()
        self.check_boundary_squared()

    # -- operations
    def restrict(self, keep) -> "LabelledComplex":
        return LabelledComplex(self.n, {k: f for k, f in self._faces.items() if keep(f)}, self.variant, check=False)

    def restrict_leq(self, alpha: Monomial) -> "LabelledComplex":
        """Faces whose label divides ``alpha``."""
        if alpha.n != self.n:
            raise DimensionError("multidegree in the wrong number of variables")
        return self.restrict(lambda f: divides(f.label, alpha))

    def restrict_lt(self, alpha: Monomial) -> "LabelledComplex":
        """Faces whose label strictly divides ``alpha``."""
        if alpha.n != self.n:
            raise DimensionError("multidegree in the wrong number of variables")
        return self.restrict(lambda f: divides(f.label, alpha) and f.label != alpha)

    def delete_star(self, v: Monomial) -> "LabelledComplex":
        """Remove every face having ``v`` as a vertex."""
        if (v,) not in self._faces:
            raise ComplexError(f"{v} is not a vertex")
        return self.restrict(lambda f: v not in f.key)

    def shift(self, k: int) -> "LabelledComplex":
        """Relabel variables by ``sigma^k``; orientations are recomputed geometrically."""
        from .monomial import cyclic_shift

        def sh(key):
            return make_key(cyclic_shift(v, k) for v in key)

        entries = [(sh(f.key), [sh(g) for g, _ in f.boundary]) for f in self._faces.values()]
        return from_face_data(self.n, entries, self.variant)

    # -- serialization
    def to_json(self, differentials: bool = False) -> str:
        faces = sorted(self._faces.values(), key=lambda f: (f.dim, f.id))
        doc = {
            "n": self.n,
            "variant": self.variant,
            "faces": [
                {
                    "id": f.id,
                    "dim": f.dim,
                    "vertices": [list(v.exponents) for v in f.key],
                    "label": list(f.label.exponents),
                    "boundary": [{"id": key_id(g), "sign": s} for g, s in sorted(f.boundary, key=lambda b: key_id(b[0]))],
                }
                for f in faces
            ],
        }
        if differentials:
            from .resolution import free_complex

            doc["differentials"] = free_complex(self).to_json_obj()
        return json.dumps(doc, indent=1, sort_keys=False) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "LabelledComplex":
        try:
            doc = json.loads(text)
            n = int(doc["n"])
            faces = {}
            for entry in doc["faces"]:
                key = make_key(Monomial(tuple(v)) for v in entry["vertices"])
                if key_id(key) != entry["id"]:
                    raise ComplexError(f"face id {entry['id']} does not match its vertices")
                boundary = tuple(sorted((parse_id(b["id"]), int(b["sign"])) for b in entry["boundary"]))
                faces[key] = Face(key, int(entry["dim"]), Monomial(tuple(entry["label"])), boundary)
        except (KeyError, TypeError, ValueError) as exc:
            if isinstance(exc, ComplexError):
                raise
            raise ComplexError(f"malformed complex document: {exc}") from exc
        out = cls(n, faces, doc.get("variant", ""))
        out.check_labels()
        return out


def empty_complex(n: int, variant: str = "") -> LabelledComplex:
    return LabelledComplex(n, {}, variant)


def from_face_data(n: int, entries: Iterable[tuple[Key, Sequence[Key]]], variant: str = "") -> LabelledComplex:
    """Build a complex from ``(vertex key, facet keys)`` pairs, computing labels and signs.

    Repeated keys must repeat the same facet set.
    """
    facets_of: dict[Key, frozenset] = {}
    for key, facets in entries:
        fs = frozenset(facets)
        old = facets_of.get(key)
        if old is not None and old != fs:
            raise ComplexError(f"face {key_id(key)} listed with two different facet sets")
        facets_of[key] = fs
    dims: dict[Key, int] = {}

    def dim_of(key: Key) -> int:
        if key not in dims:
            fs = facets_of[key]
            dims[key] = 0 if not fs else 1 + dim_of(next(iter(fs)))
        return dims[key]

    faces = {}
    for key, fs in facets_of.items():
        d = dim_of(key)
        for g in fs:
            if g not in facets_of:
                raise ComplexError(f"facet {key_id(g)} of {key_id(key)} not generated")
        boundary = tuple(sorted((g, geometric_sign(g, key)) for g in fs))
        faces[key] = Face(key, d, lcm_all(key), boundary)
    return LabelledComplex(n, faces, variant)


def union(A: LabelledComplex, B: LabelledComplex, variant: Optional[str] = None) -> LabelledComplex:
    if A.n != B.n:
        raise DimensionError("complexes in different dimensions")
    faces = dict(A.faces)
    for k, f in B.faces.items():
        old = faces.get(k)
        if old is not None and (old.dim != f.dim or {g for g, _ in old.boundary} != {g for g, _ in f.boundary}):
            raise ComplexError(f"inconsistent shared face {f.id}")
        if old is not None and old.boundary != f.boundary:
            # same cell, different orientation convention: keep the canonical geometric one
            faces[k] = Face(k, f.dim, f.label, tuple(sorted((g, geometric_sign(g, k)) for g, _ in f.boundary)))
        else:
            faces[k] = f
    return LabelledComplex(A.n, faces, A.variant if variant is None else variant)


def union_all(parts: Sequence[LabelledComplex], variant: str = "") -> LabelledComplex:
    acc = parts[0]
    for p in parts[1:]:
        acc = union(acc, p)
    return acc.with_variant(variant)


def intersection(A: LabelledComplex, B: LabelledComplex, variant: Optional[str] = None) -> LabelledComplex:
    if A.n != B.n:
        raise DimensionError("complexes in different dimensions")
    faces = {k: f for k, f in A.faces.items() if k in B.faces}
    return LabelledComplex(A.n, faces, A.variant if variant is None else variant)


def f_vector(X: LabelledComplex) -> tuple[int, ...]:
    return X.f_vector()


def restrict_leq(X: LabelledComplex, alpha: Monomial) -> LabelledComplex:
    return X.restrict_leq(alpha)


def restrict_lt(X: LabelledComplex, alpha: Monomial) -> LabelledComplex:
    return X.restrict_lt(alpha)


def delete_star(X: LabelledComplex, v: Monomial) -> LabelledComplex:
    return X.delete_star(v)


def propagate_top_orientation(boundary: LabelledComplex, top_dim: int) -> dict[Key, int]:
    """Coefficients ``s_H`` on the top faces of a pseudomanifold making ``sum s_H d(H)`` vanish.

    The lexicographically least facet is oriented +1 and signs spread over
    shared ridges.  Ridges of 0-dimensional facets are the empty face.
    """
    facets = [f for f in boundary if f.dim == top_dim - 1]
    if not facets:
        raise ComplexError("nothing to orient")
    ridges: dict[Key, list[tuple[Key, int]]] = defaultdict(list)
    for h in facets:
        if h.dim == 0:
            ridges[()].append((h.key, 1))
        for g, s in h.boundary:
            ridges[g].append((h.key, s))
    for g, inc in ridges.items():
        if len(inc) != 2:
            raise ComplexError(f"ridge {key_id(g) if g else '{}'} lies in {len(inc)} facets; not a sphere")
    coef = {facets[0].key: 1}
    adj: dict[Key, list[tuple[Key, int, int]]] = defaultdict(list)
    for g, ((h1, s1), (h2, s2)) in ridges.items():
        adj[h1].append((h2, s1, s2))
        adj[h2].append((h1, s2, s1))
    queue = deque([facets[0].key])
    while queue:
        h = queue.popleft()
        for other, s_here, s_there in adj[h]:
            # coef[h]*s_here + coef[other]*s_there == 0
            want = -coef[h] * s_here * s_there
            if other in coef:
                if coef[other] != want:
                    raise ComplexError("orientation constraint unsatisfiable")
            else:
                coef[other] = want
                queue.append(other)
    if len(coef) != len(facets):
        raise ComplexError("boundary is disconnected")
    return coef


def collapse_star(Y: LabelledComplex, m: Monomial, variant: str = "star-hat") -> LabelledComplex:
    """Replace the star of ``m`` by one top cell spanned by the remaining vertices."""
    from .homology import FieldSpec, reduced_homology

    if (m,) not in Y:
        raise ComplexError(f"{m} is not a vertex")
    top = Y.dim
    for f in Y.maximal_faces():
        if m not in f.key:
            raise ComplexError("not a star: a facet misses the centre")
    rest = Y.delete_star(m)
    hom = reduced_homology(rest, FieldSpec(32003))
    sphere = [0] * (top + 1)
    sphere[top] = 1  # index d+1 holds degree d; sphere of dimension top-1
    if list(hom) != sphere:
        raise ComplexError(f"boundary is not a homology sphere: {hom}")
    coef = propagate_top_orientation(rest, top)
    key = make_key(rest.vertices())
    from .linalg import affine_rank

    if affine_rank([v.exponents for v in key]) != top:
        raise ComplexError("collapsed cell has wrong dimension")
    cell = Face(key, top, lcm_all(key), tuple(sorted(coef.items())))
    faces = dict(rest.faces)
    faces[key] = cell
    return LabelledComplex(Y.n, faces, variant)
