"""Decision procedures: decomposition membership, the structured-rank lower
bound, Grassmannian rank-1 tests, and the second-secant classifier for
flags of a line inside a k-plane."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .apolarity import catalecticant_rank, image_generator
from .combinatorics import Partition, SkewShape, column_structure
from .linalg import Subspace, intersect, is_subspace, solve_columns
from .points import FlagPoint, flag_tensor
from .spaces import (
    AmbientElement,
    ambient_key_index,
    element_coordinates,
    membership,
    schur_basis,
    schur_basis_labels,
)


def _top_pairing_vector(f: AmbientElement) -> dict:
    """Pairings of f against every dual basis filling of its own shape."""
    labels = schur_basis_labels(f.lam, f.n)
    out = {}
    for label, el in zip(labels, schur_basis(f.lam, f.n)):
        total = Fraction(0)
        small, big = (f.terms, el.terms) if len(f.terms) <= len(el.terms) else (el.terms, f.terms)
        for k, v in small.items():
            w = big.get(k)
            if w:
                total += Fraction(v) * Fraction(w)
        if total:
            out[label] = total
    return out


def top_apolar_piece(f: AmbientElement) -> Subspace:
    """Hyperplane (f^perp) in top degree, over the dual filling labels."""
    labels = schur_basis_labels(f.lam, f.n)
    row = _top_pairing_vector(f)
    index = {lab: i for i, lab in enumerate(labels)}
    from .linalg import kernel_of_rows

    kernel = kernel_of_rows([{index[k]: v for k, v in row.items()}], len(labels))
    return Subspace.from_vectors(
        labels, [{labels[c]: Fraction(v) for c, v in vec.items()} for vec in kernel]
    )


def decomposition_membership(f: AmbientElement, points) -> bool:
    """True iff f lies in the span of the flag tensors of the given points.

    Decided in top degree: the intersected apolar hyperplanes of the points
    must be contained in the apolar hyperplane of f.
    """
    points = list(points)
    if not points:
        raise ValueError("need at least one point")
    for p in points:
        if p.lam != f.lam or p.n != f.n:
            raise ValueError("point shape does not match the element")
    if f.is_zero():
        return True
    pieces = [top_apolar_piece(flag_tensor(p)) for p in points]
    return is_subspace(intersect(pieces), top_apolar_piece(f))


def solve_coefficients(f: AmbientElement, points) -> list[Fraction] | None:
    """Exact coefficients with f = sum c_i * flag_tensor(p_i), None if impossible."""
    points = list(points)
    idx = ambient_key_index(SkewShape(f.lam), f.n)
    cols = [element_coordinates(flag_tensor(p), idx) for p in points]
    return solve_columns(cols, element_coordinates(f, idx))


@dataclass(frozen=True)
class LowerBoundResult:
    bound: int
    stage_ranks: tuple[int, ...]


def lower_bound_trace(f: AmbientElement) -> LowerBoundResult:
    """Catalecticant peeling: rank of the half-column map per stage.

    At each stage the map removing half of the maximal-height columns is
    tested; rank above 1 stops with that rank as the bound, rank 1 lets the
    full-strip map's single image generator carry the recursion one level down.
    """
    if f.is_zero():
        raise ValueError("lower bound of the zero element is undefined")
    if f.dual:
        raise ValueError("expected a primal element")
    t = f
    ranks: list[int] = []
    while t.lam.parts:
        cs = column_structure(t.lam)
        n_s = cs.heights[-1]
        d_s = cs.multiplicities[-1]
        half = Partition(((d_s + 1) // 2,) * n_s)
        r = catalecticant_rank(t, half)
        ranks.append(r)
        if r > 1:
            return LowerBoundResult(r, tuple(ranks))
        t = image_generator(t, Partition((d_s,) * n_s))
    return LowerBoundResult(1, tuple(ranks))


def lambda_rank_lower_bound(f: AmbientElement) -> int:
    return lower_bound_trace(f).bound


def grassmann_rank1_test(f: AmbientElement) -> bool:
    """Rank-1 test for rectangular shapes via the half-column catalecticant."""
    cs = column_structure(f.lam)
    if len(cs.heights) != 1:
        raise ValueError("rank-1 test needs a rectangular shape")
    if f.is_zero():
        raise ValueError("zero element")
    k = cs.heights[0]
    d = cs.multiplicities[0]
    return catalecticant_rank(f, Partition((((d + 1) // 2),) * k)) == 1


def flag_line_shape(k: int) -> Partition:
    return Partition((2,) + (1,) * (k - 1))


def tangent_space_basis(k: int, n: int) -> list[AmbientElement]:
    """Spanning set of the tangent cone at the top weight point of F(1,k;n).

    Three families: the point itself; wedges with one leg replaced by a new
    direction; and the symmetric mixing of the line slot with a new direction.
    Cardinality is kn - k^2 + k.
    """
    if not 1 < k < n:
        raise ValueError("need 1 < k < n")
    lam = flag_line_shape(k)
    out: list[AmbientElement] = []
    base = tuple(range(1, k + 1))
    out.append(AmbientElement(lam, n, {(base, (1,)): Fraction(1)}))
    for i in range(2, k + 1):
        for h in range(k + 1, n + 1):
            idxs = tuple(x for x in base if x != i) + (h,)
            sign = Fraction(-1 if (k - i) % 2 else 1)
            out.append(AmbientElement(lam, n, {(idxs, (1,)): sign}))
    for h in range(2, n + 1):
        terms: dict = {}
        terms[(base, (h,))] = Fraction(1)
        if h > k:
            second = tuple(range(2, k + 1)) + (h,)
            terms[(second, (1,))] = Fraction(-1 if (k - 1) % 2 else 1)
        out.append(AmbientElement(lam, n, terms))
    return out


@dataclass(frozen=True)
class OrbitData:
    """Invariants of a two-flag configuration: dim V cap W and line equality."""

    h: int
    lines_equal: bool


class Sigma2Unclassified(ValueError):
    """The computed rank triple matches no classification row."""


@dataclass(frozen=True)
class Sigma2Verdict:
    border_rank_class: str  # "rank1" | "border2" | "border_ge_3"
    rank: int | None
    orbit_data: OrbitData | None
    rank_triple: tuple[int, int, int]
    caveat: bool = False

    def __post_init__(self):
        if (self.rank is not None) != (self.border_rank_class != "border_ge_3"):
            raise ValueError("rank must be present exactly when the class is not border_ge_3")
        if (self.orbit_data is not None) != (self.rank == 2):
            raise ValueError("orbit data must be present exactly when rank is 2")


def classify_sigma2(t: AmbientElement, k: int, n: int) -> Sigma2Verdict:
    """Rank of an element of border rank at most 2, from three catalecticant ranks.

    Verdicts follow the secant-orbit tables exactly; the rank-1 verdict needs
    the full triple (1,k,k), and equal-line rank-2 orbits are recognised by
    r2 = r3 = 2k-h even though their first rank degenerates to 1 (the caveat
    flag records that the border-rank-2 presumption is load-bearing there).
    """
    if k < 2:
        raise ValueError("k must be at least 2 (k=1 is the classical symmetric case)")
    if not k < n:
        raise ValueError("need k < n")
    lam = flag_line_shape(k)
    if t.lam != lam or t.n != n:
        raise ValueError(f"element is not in the shape-{list(lam.parts)} module over n={n}")
    if t.is_zero():
        raise ValueError("zero element")
    if not membership(lam, t):
        raise ValueError("element does not lie in the module")
    r1 = catalecticant_rank(t, Partition((1,) * k))
    r2 = catalecticant_rank(t, Partition((1,)))
    r3 = catalecticant_rank(t, Partition((2,)))
    triple = (r1, r2, r3)
    if triple == (1, k, k):
        return Sigma2Verdict("rank1", 1, None, triple)
    if r1 >= 3:
        return Sigma2Verdict("border_ge_3", None, None, triple)
    if r1 == 2 and (r2, r3) == (k + 2, 2 * k + 1):
        return Sigma2Verdict("border2", 3, None, triple)
    if r1 == 2 and (r2, r3) == (k + 1, 2 * k - 1):
        return Sigma2Verdict("border2", 2, OrbitData(k - 1, False), triple)
    if r1 == 2 and r3 == 2 * k and 0 <= 2 * k - r2 <= k - 2:
        return Sigma2Verdict("border2", 2, OrbitData(2 * k - r2, False), triple)
    if r1 in (1, 2) and r2 == r3 and 1 <= 2 * k - r2 <= k - 2:
        return Sigma2Verdict("border2", 2, OrbitData(2 * k - r2, True), triple, caveat=(r1 == 1))
    raise Sigma2Unclassified(
        f"rank triple {triple} matches no secant-orbit row for k={k} (outside sigma_2?)"
    )


def two_flag_invariants(p: FlagPoint, q: FlagPoint) -> OrbitData:
    """Exact dim(V cap W) and line equality of two flag points of F(1,k;n)."""
    vp = p.subspace_basis(1)
    wq = q.subspace_basis(1)
    h = vp.intersect(wq).dim
    lines = p.subspace_basis(0).intersect(q.subspace_basis(0)).dim == 1
    return OrbitData(h, lines)
