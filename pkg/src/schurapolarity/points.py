"""Flag points: the structured-rank-1 tensors, their duals, and random sampling."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import product

from .combinatorics import Partition, column_structure, conjugate
from .linalg import Echelon, Subspace, kernel_of_rows
from .spaces import AmbientElement, wedge_of_vectors

Vector = dict[int, Fraction]


def _as_vector(row) -> Vector:
    return {j: Fraction(v) for j, v in enumerate(row, start=1) if Fraction(v)}


@dataclass(frozen=True)
class FlagPoint:
    """Nested subspaces of Q^n with dimensions matching the column structure.

    `subspaces[i]` is a tuple of generator rows (each a length-n tuple of
    rationals) spanning the i-th smallest space; spaces are listed smallest
    first and must be strictly nested with the exact dimensions h_1 < ... < h_s
    prescribed by the shape.
    """

    n: int
    lam: Partition
    subspaces: tuple[tuple[tuple[Fraction, ...], ...], ...]

    def __post_init__(self):
        cs = column_structure(self.lam)
        dims = cs.heights
        if len(self.lam) >= self.n:
            raise ValueError("shape length must be smaller than n")
        if len(self.subspaces) != len(dims):
            raise ValueError(f"expected {len(dims)} nested subspaces, got {len(self.subspaces)}")
        norm = tuple(
            tuple(tuple(Fraction(x) for x in row) for row in space) for space in self.subspaces
        )
        object.__setattr__(self, "subspaces", norm)
        prev: Echelon | None = None
        for space, want in zip(norm, dims):
            ech = Echelon()
            for row in space:
                ech.add(_as_vector(row))
            if ech.rank != want:
                raise ValueError(f"subspace has rank {ech.rank}, expected {want}")
            if prev is not None:
                for r in prev.basis_rows():
                    if not ech.contains(dict(r)):
                        raise ValueError("subspaces are not nested")
            prev = ech

    def dimensions(self) -> tuple[int, ...]:
        return column_structure(self.lam).heights

    def generator_vectors(self, i: int) -> list[Vector]:
        """Sparse 1-based generator rows of the i-th smallest subspace."""
        return [_as_vector(row) for row in self.subspaces[i]]

    def subspace_basis(self, i: int) -> Subspace:
        labels = tuple(range(1, self.n + 1))
        return Subspace.from_vectors(labels, self.generator_vectors(i))


def adapted_basis(point: FlagPoint) -> list[Vector]:
    """Vectors v_1..v_{h_s} whose first h_i entries span the i-th subspace.

    Built by extending a reduced basis of each subspace by the next one; the
    choice is deterministic but carries the usual scalar ambiguity, so callers
    compare results projectively or through ranks.
    """
    ech = Echelon()
    out: list[Vector] = []
    for i in range(len(point.subspaces)):
        for row in point.generator_vectors(i):
            if ech.add(row):
                out.append(row)
    return out


def flag_tensor(point: FlagPoint) -> AmbientElement:
    """The rank-1 tensor of the flag: per column, a wedge of adapted vectors."""
    vecs = adapted_basis(point)
    lamc = conjugate(point.lam)
    wedges: dict[int, dict] = {}
    key_parts = []
    for height in lamc.parts:
        if height not in wedges:
            wedges[height] = wedge_of_vectors(vecs[:height], point.n)
        key_parts.append(wedges[height])
    terms: dict = {}
    for combo in product(*[sorted(w.items()) for w in key_parts]):
        key = tuple(k for k, _ in combo)
        coeff = Fraction(1)
        for _, c in combo:
            coeff *= c
        acc = terms.get(key, 0) + coeff
        if acc:
            terms[key] = acc
        else:
            terms.pop(key, None)
    return AmbientElement(point.lam, point.n, terms)


def coordinate_flag_point(lam: Partition, n: int) -> FlagPoint:
    """The flag <e_1> in <e_1,e_2> in ... with the dimensions required by lam."""
    dims = column_structure(lam).heights
    spaces = tuple(
        tuple(tuple(Fraction(1 if j == i else 0) for j in range(1, n + 1)) for i in range(1, h + 1))
        for h in dims
    )
    return FlagPoint(n, lam, spaces)


def highest_weight_vector(lam: Partition, n: int) -> AmbientElement:
    """Flag tensor of the coordinate flag; spans the unique top weight line."""
    if len(lam) >= n:
        raise ValueError("shape length must be smaller than n")
    return flag_tensor(coordinate_flag_point(lam, n))


def annihilator_chain(point: FlagPoint) -> list[Subspace]:
    """Exact annihilators W_i^perp as dual coordinate subspaces, reverse-nested."""
    labels = tuple(range(1, point.n + 1))
    out = []
    for i in range(len(point.subspaces)):
        rows = [
            {j - 1: v for j, v in vec.items()} for vec in point.generator_vectors(i)
        ]
        kernel = kernel_of_rows(rows, point.n)
        out.append(
            Subspace.from_vectors(
                labels, [{c + 1: Fraction(v) for c, v in vec.items()} for vec in kernel]
            )
        )
    return out


def random_flag_point(lam: Partition, n: int, seed: int) -> FlagPoint:
    """Deterministic pseudo-random flag with small integer generators."""
    if len(lam) >= n:
        raise ValueError("shape length must be smaller than n")
    dims = column_structure(lam).heights
    top = dims[-1]
    rng = random.Random(seed)
    while True:
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(top)]
        ech = Echelon()
        ok = True
        for row in rows:
            if not ech.add({j: v for j, v in enumerate(row) if v}):
                ok = False
                break
        if ok:
            break
    spaces = tuple(
        tuple(tuple(Fraction(x) for x in row) for row in rows[:h]) for h in dims
    )
    return FlagPoint(n, lam, spaces)
