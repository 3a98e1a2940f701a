"""Exact rational sparse linear algebra: rank, kernels, and subspace lattice ops.

No floating point anywhere.  Rows are kept as integer sparse dicts (denominators
cleared, gcd stripped, sign normalised) and row updates are fraction-free, so
coefficient growth stays tame; `fractions.Fraction` appears only at the API
boundary.  All values are immutable once built and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd
from typing import Hashable, Iterable, Mapping, Sequence

IntRow = dict[int, int]


def _normalize_int_row(row: IntRow) -> IntRow:
    """Strip content and make the leading (smallest-index) entry positive."""
    row = {c: v for c, v in row.items() if v}
    if not row:
        return row
    g = 0
    for v in row.values():
        g = gcd(g, abs(v))
    lead = min(row)
    if row[lead] < 0:
        g = -g
    if g not in (0, 1):
        row = {c: v // g for c, v in row.items()}
    return row


def _to_int_row(row: Mapping[int, Fraction | int]) -> IntRow:
    """Clear denominators and normalise."""
    lcm = 1
    for v in row.values():
        f = Fraction(v)
        if f:
            lcm = lcm * f.denominator // gcd(lcm, f.denominator)
    out: IntRow = {}
    for c, v in row.items():
        f = Fraction(v)
        if f:
            out[c] = int(f * lcm)
    return _normalize_int_row(out)


def _eliminate(row: IntRow, pivot_row: IntRow, col: int) -> IntRow:
    """Fraction-free combination cancelling `col`: p[col]*row - row[col]*pivot."""
    a = row.get(col, 0)
    if not a:
        return row
    b = pivot_row[col]
    out = {c: b * v for c, v in row.items()}
    for c, v in pivot_row.items():
        w = out.get(c, 0) - a * v
        if w:
            out[c] = w
        else:
            out.pop(c, None)
    return _normalize_int_row(out)


class Echelon:
    """Incrementally built reduced row echelon form over the integers."""

    def __init__(self, rows: Iterable[Mapping[int, Fraction | int]] = ()):
        self.pivots: dict[int, IntRow] = {}
        for row in rows:
            self.add(row)

    def reduce(self, row: Mapping[int, Fraction | int]) -> IntRow:
        """Residue of a vector modulo the current row space."""
        r = _to_int_row(row)
        # repeatedly cancel the leading entry; pivots are kept fully reduced
        while r:
            lead = min(r)
            piv = self.pivots.get(lead)
            if piv is None:
                return r
            r = _eliminate(r, piv, lead)
        return r

    def add(self, row: Mapping[int, Fraction | int]) -> bool:
        """Insert a vector; returns True if it enlarged the span."""
        r = self.reduce(row)
        if not r:
            return False
        lead = min(r)
        for c, piv in list(self.pivots.items()):
            if lead in piv:
                self.pivots[c] = _eliminate(piv, r, lead)
        self.pivots[lead] = r
        return True

    def contains(self, row: Mapping[int, Fraction | int]) -> bool:
        return not self.reduce(row)

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def basis_rows(self) -> list[IntRow]:
        return [self.pivots[c] for c in sorted(self.pivots)]


def rank_of_rows(rows: Iterable[Mapping[int, Fraction | int]]) -> int:
    return Echelon(rows).rank


def kernel_of_rows(
    rows: Iterable[Mapping[int, Fraction | int]], ncols: int
) -> list[IntRow]:
    """Basis of {x : row . x = 0 for every row}, columns indexed 0..ncols-1."""
    ech = Echelon(rows)
    pivots = ech.pivots
    free_cols = [c for c in range(ncols) if c not in pivots]
    out: list[IntRow] = []
    for f in free_cols:
        # common multiple of the pivot entries touching column f
        scale = 1
        touching = []
        for p, row in pivots.items():
            a = row.get(f, 0)
            if a:
                touching.append((p, row))
                scale = scale * row[p] // gcd(scale, row[p])
        vec: IntRow = {f: scale}
        for p, row in touching:
            vec[p] = -row[f] * (scale // row[p])
        out.append(_normalize_int_row(vec))
    return out


def solve_columns(
    columns: Sequence[Mapping[int, Fraction | int]], target: Mapping[int, Fraction | int]
) -> list[Fraction] | None:
    """Exact x with sum_j x_j * columns[j] = target, or None if inconsistent."""
    # eliminate on rows of [columns | target] seen as a system over the column index
    aug: list[dict[int, Fraction]] = []
    row_index: dict[int, int] = {}
    ncols = len(columns)
    for j, col in enumerate(columns):
        for r, v in col.items():
            if r not in row_index:
                row_index[r] = len(aug)
                aug.append({})
            aug[row_index[r]][j] = aug[row_index[r]].get(j, Fraction(0)) + Fraction(v)
    for r, v in target.items():
        if r not in row_index:
            row_index[r] = len(aug)
            aug.append({})
        aug[row_index[r]][ncols] = Fraction(v)
    ech = Echelon(aug)
    if ncols in ech.pivots:
        return None
    # pivot rows are fully reduced, so each determines its variable directly
    sol = [Fraction(0)] * ncols
    for c, row in ech.pivots.items():
        sol[c] = Fraction(row.get(ncols, 0), row[c])
    return sol


@dataclass(frozen=True)
class LabeledVector:
    """Sparse exact vector over an ordered opaque label basis."""

    basis_labels: tuple[Hashable, ...]
    entries: dict[Hashable, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        known = set(self.basis_labels)
        for k, v in self.entries.items():
            if k not in known:
                raise ValueError(f"entry label {k!r} not among the basis labels")
            f = Fraction(v)
            if f:
                clean[k] = f
        object.__setattr__(self, "entries", clean)

    def __getitem__(self, label) -> Fraction:
        return self.entries.get(label, Fraction(0))

    def is_zero(self) -> bool:
        return not self.entries


class RationalMatrix:
    """Exact rational matrix with labelled rows and columns, immutable once built."""

    def __init__(
        self,
        row_labels: Sequence[Hashable],
        col_labels: Sequence[Hashable],
        entries: Mapping[tuple[int, int], Fraction | int],
    ):
        self.row_labels = tuple(row_labels)
        self.col_labels = tuple(col_labels)
        ent: dict[tuple[int, int], Fraction] = {}
        for (i, j), v in entries.items():
            if not 0 <= i < len(self.row_labels) or not 0 <= j < len(self.col_labels):
                raise ValueError(f"entry position {(i, j)} out of range")
            f = Fraction(v)
            if f:
                ent[(i, j)] = f
        self.entries = ent

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.row_labels), len(self.col_labels))

    def row(self, i: int) -> dict[int, Fraction]:
        return {j: v for (r, j), v in self.entries.items() if r == i}

    def column(self, j: int) -> dict[int, Fraction]:
        return {i: v for (i, c), v in self.entries.items() if c == j}

    def rows(self) -> list[dict[int, Fraction]]:
        out: list[dict[int, Fraction]] = [dict() for _ in self.row_labels]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(
            self.col_labels, self.row_labels, {(j, i): v for (i, j), v in self.entries.items()}
        )

    def rank(self) -> int:
        return rank_of_rows(self.rows())

    def kernel_basis(self) -> list[LabeledVector]:
        """Basis of the right kernel, one LabeledVector per free column."""
        vecs = kernel_of_rows(self.rows(), len(self.col_labels))
        return [
            LabeledVector(
                self.col_labels,
                {self.col_labels[c]: Fraction(v) for c, v in vec.items()},
            )
            for vec in vecs
        ]

    def apply(self, vec: Mapping[int, Fraction | int]) -> dict[int, Fraction]:
        """Matrix-vector product on column-indexed sparse input."""
        out: dict[int, Fraction] = {}
        for (i, j), v in self.entries.items():
            a = vec.get(j)
            if a:
                out[i] = out.get(i, Fraction(0)) + v * Fraction(a)
        return {i: v for i, v in out.items() if v}


@dataclass(frozen=True)
class Subspace:
    """Row space of exact vectors over a fixed ordered label basis (canonical RREF)."""

    labels: tuple[Hashable, ...]
    rows: tuple[tuple[tuple[int, int], ...], ...]  # canonical reduced rows

    @staticmethod
    def from_vectors(
        labels: Sequence[Hashable], vectors: Iterable[Mapping[Hashable, Fraction | int]]
    ) -> "Subspace":
        index = {l: i for i, l in enumerate(labels)}
        ech = Echelon()
        for v in vectors:
            ech.add({index[k]: val for k, val in v.items()})
        rows = tuple(tuple(sorted(r.items())) for r in ech.basis_rows())
        return Subspace(tuple(labels), rows)

    def _echelon(self) -> Echelon:
        ech = Echelon()
        for r in self.rows:
            ech.add(dict(r))
        return ech

    @property
    def dim(self) -> int:
        return len(self.rows)

    def basis_vectors(self) -> list[dict[Hashable, Fraction]]:
        return [{self.labels[c]: Fraction(v) for c, v in r} for r in self.rows]

    def contains_vector(self, v: Mapping[Hashable, Fraction | int]) -> bool:
        index = {l: i for i, l in enumerate(self.labels)}
        return self._echelon().contains({index[k]: val for k, val in v.items()})

    def contains(self, other: "Subspace") -> bool:
        if self.labels != other.labels:
            raise ValueError("subspaces live over different ambient bases")
        ech = self._echelon()
        return all(ech.contains(dict(r)) for r in other.rows)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Subspace)
            and self.labels == other.labels
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.labels, self.rows))

    def annihilator_rows(self) -> list[IntRow]:
        return kernel_of_rows([dict(r) for r in self.rows], len(self.labels))

    def intersect(self, other: "Subspace") -> "Subspace":
        """Exact intersection via the double annihilator."""
        if self.labels != other.labels:
            raise ValueError("subspaces live over different ambient bases")
        ann = self.annihilator_rows() + other.annihilator_rows()
        vecs = kernel_of_rows(ann, len(self.labels))
        return Subspace.from_vectors(
            self.labels, [{self.labels[c]: Fraction(v) for c, v in vec.items()} for vec in vecs]
        )

    def add(self, other: "Subspace") -> "Subspace":
        if self.labels != other.labels:
            raise ValueError("subspaces live over different ambient bases")
        return Subspace.from_vectors(self.labels, self.basis_vectors() + other.basis_vectors())


def intersect(spaces: Sequence[Subspace]) -> Subspace:
    """Intersection of finitely many subspaces of one ambient space."""
    if not spaces:
        raise ValueError("need at least one subspace to intersect")
    out = spaces[0]
    for s in spaces[1:]:
        out = out.intersect(s)
    return out


def membership(space: Subspace, v: Mapping[Hashable, Fraction | int]) -> bool:
    return space.contains_vector(v)


def is_subspace(a: Subspace, b: Subspace) -> bool:
    """True iff a is contained in b."""
    return b.contains(a)


def rational_to_str(x: Fraction | int) -> str:
    f = Fraction(x)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def rational_from_str(s: str) -> Fraction:
    return Fraction(s)
