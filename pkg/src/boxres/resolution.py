"""Free complexes read off labelled complexes, minimality, and Betti tables.

Tables follow the ideal convention: homological degree ``p`` counts
``p``-dimensional faces, so ``p = 0`` is the generators.  The resolution of
``S/I`` is the same complex shifted up by one with ``S`` prepended.
"""

from __future__ import annotations

import csv
import io
from collections import defaultdict
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .cellcomplex import Key, LabelledComplex, key_id
from .homology import SweepReport, acyclicity_sweep
from .monomial import Monomial


class NotCertifiedError(RuntimeError):
    """The complex failed d^2 = 0, minimality, or the acyclicity sweep."""


@dataclass(frozen=True)
class Entry:
    row: int  # index of G among (p-1)-faces
    col: int  # index of F among p-faces
    sign: int
    quotient: Monomial  # label(F) / label(G)


@dataclass
class FreeComplex:
    ranks: tuple[int, ...]
    basis: list  # per degree: list of face keys
    basis_degrees: list  # per degree: list of Monomial internal degrees
    differentials: dict  # p -> list[Entry] for d_p : F_p -> F_{p-1}

    def entries(self):
        for p in sorted(self.differentials):
            for e in self.differentials[p]:
                yield p, e

    def composition_violations(self) -> list:
        """Pairs ``(p, G, F)`` where ``d_{p-1} d_p`` has a surviving monomial term."""
        bad = []
        for p in sorted(self.differentials):
            if p - 1 not in self.differentials:
                continue
            into: dict[int, list[Entry]] = defaultdict(list)
            for e in self.differentials[p - 1]:
                into[e.col].append(e)
            acc: dict[tuple[int, int, Monomial], int] = defaultdict(int)
            for e in self.differentials[p]:
                for e2 in into[e.row]:
                    acc[(e2.row, e.col, e.quotient * e2.quotient)] += e.sign * e2.sign
            bad.extend((p, r, c) for (r, c, _), t in acc.items() if t)
        return bad

    def check_d_squared(self) -> None:
        bad = self.composition_violations()
        if bad:
            raise NotCertifiedError(f"d^2 != 0 at {bad[:3]}")

    def unit_entries(self) -> list:
        return [(p, e) for p, e in self.entries() if e.quotient.degree == 0]

    def to_json_obj(self) -> dict:
        out = {}
        for p in sorted(self.differentials):
            out[str(p)] = [
                {
                    "row": key_id(self.basis[p - 1][e.row]),
                    "col": key_id(self.basis[p][e.col]),
                    "sign": e.sign,
                    "quotient": list(e.quotient.exponents),
                }
                for e in self.differentials[p]
            ]
        return out


def free_complex(X: LabelledComplex, check: bool = True) -> FreeComplex:
    """Basis = faces, ``d(F) = sum sign(G,F) * label(F)/label(G) * G``."""
    top = X.dim
    basis = [[f.key for f in X.faces_of_dim(d)] for d in range(top + 1)]
    index = [{k: r for r, k in enumerate(b)} for b in basis]
    degrees = [[X[k].label for k in b] for b in basis]
    diffs = {}
    for p in range(1, top + 1):
        entries = []
        for c, key in enumerate(basis[p]):
            face = X[key]
            for g, s in face.boundary:
                entries.append(Entry(index[p - 1][g], c, s, face.label / X[g].label))
        diffs[p] = entries
    fc = FreeComplex(tuple(len(b) for b in basis), basis, degrees, diffs)
    if check:
        fc.check_d_squared()
    return fc


def is_minimal(F: FreeComplex) -> bool:
    return not F.unit_entries()


@dataclass
class BettiTable:
    entries: dict = field(default_factory=dict)  # (p, q) -> count, zeros dropped
    provenance: str = ""

    def __post_init__(self):
        clean = {}
        for (p, q), v in self.entries.items():
            if v < 0:
                raise ValueError(f"negative Betti number at {(p, q)}")
            if v:
                clean[(int(p), int(q))] = int(v)
        self.entries = dict(sorted(clean.items()))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BettiTable):
            return NotImplemented
        return self.entries == other.entries

    def __getitem__(self, pq) -> int:
        return self.entries.get(tuple(pq), 0)

    def total(self, p: int) -> int:
        return sum(v for (pp, _), v in self.entries.items() if pp == p)

    def totals(self) -> tuple[int, ...]:
        if not self.entries:
            return ()
        top = max(p for p, _ in self.entries)
        return tuple(self.total(p) for p in range(top + 1))

    def strand(self, shift: int) -> tuple[int, ...]:
        """``beta_{p, p+shift}`` for ``p = 0 .. max p``."""
        if not self.entries:
            return ()
        top = max(p for p, _ in self.entries)
        return tuple(self[(p, p + shift)] for p in range(top + 1))

    def euler(self) -> int:
        return sum((-1) ** p * v for (p, _), v in self.entries.items())

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["p", "q", "beta"])
        for (p, q), v in self.entries.items():
            w.writerow([p, q, v])
        return buf.getvalue()

    @classmethod
    def from_csv(cls, text: str) -> "BettiTable":
        rows = [r for r in csv.reader(io.StringIO(text)) if r and not r[0].startswith("#")]
        if not rows or [c.strip() for c in rows[0]] != ["p", "q", "beta"]:
            raise ValueError("Betti CSV must start with header p,q,beta")
        return cls({(int(p), int(q)): int(b) for p, q, b in rows[1:]})

    def diff(self, other: "BettiTable") -> list[tuple[int, int, int, int]]:
        """``(p, q, expected=self, actual=other)`` rows that disagree."""
        keys = sorted(set(self.entries) | set(other.entries))
        return [(p, q, self[(p, q)], other[(p, q)]) for p, q in keys if self[(p, q)] != other[(p, q)]]


def betti_counts(X: LabelledComplex) -> BettiTable:
    """Faces counted by (dimension, label degree), no certification."""
    counts: dict = defaultdict(int)
    for f in X:
        counts[(f.dim, f.label.degree)] += 1
    return BettiTable(dict(counts))


@dataclass
class Certificate:
    d_squared_ok: bool
    minimal: bool
    sweep: SweepReport

    @property
    def ok(self) -> bool:
        return self.d_squared_ok and self.minimal and self.sweep.ok


def certify(X: LabelledComplex, k=None, exhaustive: bool = False, threads: Optional[int] = None) -> Certificate:
    fc = free_complex(X, check=False)
    return Certificate(not fc.composition_violations(), is_minimal(fc), acyclicity_sweep(X, k, exhaustive, threads))


def betti_from_complex(X: LabelledComplex, k=None, certificate: Optional[Certificate] = None) -> BettiTable:
    """Betti table of the ideal minimally resolved by ``X``; refuses uncertified input."""
    cert = certificate if certificate is not None else certify(X, k)
    if not cert.ok:
        raise NotCertifiedError(
            f"complex not certified: d2_ok={cert.d_squared_ok} minimal={cert.minimal} "
            f"sweep_failures={len(cert.sweep.failures)}"
        )
    return betti_counts(X)


def read_betti_csv(path: str | Path) -> BettiTable:
    return BettiTable.from_csv(Path(path).read_text())
