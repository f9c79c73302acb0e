"""Exact reduced homology, the acyclicity sweep, and the upper-Koszul Betti oracle."""

from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional, Sequence

from .cellcomplex import LabelledComplex
from .ideal import MonomialIdeal
from .linalg import is_prime, rank
from .monomial import Monomial, divides, divisors, lcm

DEFAULT_CHARACTERISTIC = 32003


@dataclass(frozen=True)
class FieldSpec:
    characteristic: int = DEFAULT_CHARACTERISTIC

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not is_prime(c):
            raise ValueError(f"characteristic must be 0 or prime, got {c}")

    def __str__(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


def as_field(k) -> FieldSpec:
    if isinstance(k, FieldSpec):
        return k
    return FieldSpec(DEFAULT_CHARACTERISTIC if k is None else int(k))


def chain_homology(cells_by_dim: Sequence[int], boundaries: Sequence[Sequence[Sequence[int]]], k: FieldSpec) -> list[int]:
    """Homology dimensions of ``C_top -> ... -> C_0`` given ranks and dense differentials.

    ``boundaries[d]`` is the matrix of ``C_d -> C_{d-1}`` (``boundaries[0]``
    unused).  Returns dims in degrees ``0..len(cells_by_dim)-1``.
    """
    top = len(cells_by_dim)
    ranks = [0] * (top + 1)
    for d in range(1, top):
        ranks[d] = rank(boundaries[d], k.characteristic)
    return [cells_by_dim[d] - ranks[d] - ranks[d + 1] for d in range(top)]


def reduced_homology(X: LabelledComplex, k=None) -> tuple[int, ...]:
    """Reduced homology dims in degrees ``-1 .. dim X`` (entry 0 is degree -1).

    The empty face sits in degree -1, so the empty complex has ``H~_{-1} = 1``.
    """
    k = as_field(k)
    top = X.dim
    layers: list[list] = [[()]] + [[f.key for f in X.faces_of_dim(d)] for d in range(top + 1)]
    index = [{key: r for r, key in enumerate(layer)} for layer in layers]
    mats: list = [None]
    for shifted in range(1, top + 2):
        d = shifted - 1
        rows, cols = layers[shifted - 1], layers[shifted]
        mat = [[0] * len(cols) for _ in rows]
        for c, key in enumerate(cols):
            face = X[key]
            if d == 0:
                mat[0][c] = 1
            for g, s in face.boundary:
                mat[index[shifted - 1][g]][c] = s
        mats.append(mat)
    sizes = [len(layer) for layer in layers]
    return tuple(chain_homology(sizes, mats, k))


def is_acyclic(X: LabelledComplex, k=None) -> bool:
    """Empty, or with vanishing reduced homology."""
    if len(X) == 0:
        return True
    return not any(reduced_homology(X, k))


def lcm_closure(monos: Iterable[Monomial]) -> list[Monomial]:
    """All lcms of nonempty subsets, sorted."""
    closure: set[Monomial] = set()
    for g in monos:
        new = {lcm(g, x) for x in closure}
        new.add(g)
        closure |= new
    return sorted(closure)


@dataclass
class SweepReport:
    checked: int
    failures: list = field(default_factory=list)  # [(alpha, homology tuple)]
    lattice_size: int = 0
    field: str = ""

    @property
    def ok(self) -> bool:
        return not self.failures

    def lines(self) -> list[str]:
        out = []
        for alpha, hom in self.failures:
            for deg, dim in enumerate(hom, start=-1):
                if dim:
                    out.append(f"ALPHA {alpha.text()} H~{deg}={dim}")
        out.append(f"checked={self.checked} failures={len(self.failures)}")
        return out


def thread_count(threads: Optional[int] = None) -> int:
    if threads is not None:
        return max(1, int(threads))
    env = os.environ.get("BOXRES_THREADS")
    return max(1, int(env)) if env else 1


def acyclicity_sweep(X: LabelledComplex, k=None, exhaustive: bool = False, threads: Optional[int] = None) -> SweepReport:
    """Check that every label restriction ``X_{<=alpha}`` is acyclic.

    ``alpha`` ranges over the lcm-closure of the vertex labels, or over all
    divisors of the overall label lcm when ``exhaustive`` is set.
    """
    k = as_field(k)
    lattice = lcm_closure(X.vertices())
    alphas = divisors(X.label_lcm()) if exhaustive and len(X) else lattice
    faces = list(X)
    groups: dict[frozenset, list[Monomial]] = defaultdict(list)
    for alpha in alphas:
        keep = frozenset(f.key for f in faces if divides(f.label, alpha))
        groups[keep].append(alpha)
    work = list(groups.items())

    def profile(keep: frozenset):
        if not keep:
            return None
        return reduced_homology(X.restrict(lambda f: f.key in keep), k)

    nthreads = thread_count(threads)
    if nthreads > 1:
        with ThreadPoolExecutor(nthreads) as pool:
            homs = list(pool.map(lambda item: profile(item[0]), work))
    else:
        homs = [profile(keep) for keep, _ in work]
    failures = []
    for (keep, group), hom in zip(work, homs):
        if hom is not None and any(hom):
            failures.extend((alpha, hom) for alpha in group)
    failures.sort(key=lambda fh: fh[0])
    return SweepReport(len(alphas), failures, len(lattice), str(k))


# ------------------------------------------------------------------ oracle


def simplicial_reduced_homology(faces: Sequence[tuple[int, ...]], k: FieldSpec) -> tuple[int, ...]:
    """Reduced homology of an abstract simplicial complex given by all its faces (incl. ``()``).

    Degrees ``-1 .. max dim``; the void complex (no faces at all) returns ``()``.
    """
    if not faces:
        return ()
    by_dim: dict[int, list] = defaultdict(list)
    for f in faces:
        by_dim[len(f) - 1].append(tuple(sorted(f)))
    top = max(by_dim)
    layers = [sorted(by_dim[d]) for d in range(-1, top + 1)]
    index = [{f: r for r, f in enumerate(layer)} for layer in layers]
    mats: list = [None]
    for shifted in range(1, len(layers)):
        rows, cols = layers[shifted - 1], layers[shifted]
        mat = [[0] * len(cols) for _ in rows]
        for c, simplex in enumerate(cols):
            for t in range(len(simplex)):
                sub = simplex[:t] + simplex[t + 1 :]
                mat[index[shifted - 1][sub]][c] = -1 if t % 2 else 1
        mats.append(mat)
    return tuple(chain_homology([len(layer) for layer in layers], mats, k))


def upper_koszul_complex(I: MonomialIdeal, alpha: Monomial) -> list[tuple[int, ...]]:
    """``K^alpha(I)``: subsets ``W`` of the support with ``alpha / x_W`` in ``I``."""
    supp = [j for j, e in enumerate(alpha.exponents) if e]
    out = []
    for r in range(len(supp) + 1):
        for W in combinations(supp, r):
            e = list(alpha.exponents)
            for j in W:
                e[j] -= 1
            if I.contains(Monomial(tuple(e))):
                out.append(W)
    return out


def koszul_betti_oracle(I: MonomialIdeal, k=None):
    """Graded Betti numbers of ``I`` from ``beta_{i,alpha} = dim H~_{i-1}(K^alpha(I))``."""
    from .resolution import BettiTable

    k = as_field(k)
    if not I.gens:
        raise ValueError("the zero ideal has no resolution")
    entries: dict[tuple[int, int], int] = defaultdict(int)
    for alpha in lcm_closure(I.gens):
        hom = simplicial_reduced_homology(upper_koszul_complex(I, alpha), k)
        for deg, dim in enumerate(hom, start=-1):
            if dim:
                entries[(deg + 1, alpha.degree)] += dim
    return BettiTable(dict(entries))
