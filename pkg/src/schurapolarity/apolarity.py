"""Skew-symmetric and Schur apolarity contractions, catalecticants, apolar pieces.

The contraction pairs each column of a module element against the matching
column of a dual element by the determinant pairing; on sorted wedge monomials
that reduces to a signed interior product, and everything else follows by
bilinearity.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .combinatorics import Partition, SkewShape, Tableau, conjugate
from .linalg import RationalMatrix, Subspace, solve_columns
from .spaces import (
    AmbientElement,
    SkewAmbientElement,
    ambient_key_index,
    element_coordinates,
    make_element,
    schur_basis,
    schur_basis_labels,
    skew_schur_basis,
    zero_element,
)

WedgeMonomial = tuple[int, ...]


def _contract_monomial(big: WedgeMonomial, small: WedgeMonomial) -> tuple[WedgeMonomial, int] | None:
    """Interior product of a sorted wedge monomial by a sorted dual monomial.

    Returns (remaining monomial, sign) with the sign of the permutation that
    moves the contracted positions to the front keeping internal orders, or
    None when the dual indices are not all present.
    """
    positions = []
    it = 0
    for j in small:
        while it < len(big) and big[it] < j:
            it += 1
        if it >= len(big) or big[it] != j:
            return None
        positions.append(it)
        it += 1
    sign = 1
    for rank, pos in enumerate(positions):
        if (pos - rank) % 2:
            sign = -sign
    rest = tuple(x for i, x in enumerate(big) if i not in set(positions))
    return rest, sign


def skew_apolarity(
    t: dict[WedgeMonomial, Fraction], s: dict[WedgeMonomial, Fraction]
) -> dict[WedgeMonomial, Fraction]:
    """Contraction wedge^k V (x) wedge^h V* -> wedge^{k-h} V on sparse wedge coordinates."""
    out: dict[WedgeMonomial, Fraction] = {}
    for big, cb in t.items():
        for small, cs in s.items():
            if len(small) > len(big):
                raise ValueError("dual degree exceeds primal degree")
            hit = _contract_monomial(big, small)
            if hit is None:
                continue
            rest, sign = hit
            acc = out.get(rest, 0) + sign * cb * cs
            if acc:
                out[rest] = acc
            else:
                out.pop(rest, None)
    return out


def schur_apolarity(f: AmbientElement, g: AmbientElement):
    """Columnwise contraction S_lam V (x) S_mu V* -> S_{lam/mu} V.

    Returns the zero scalar element when mu does not fit inside lam.
    """
    if f.n != g.n:
        raise ValueError("elements live over different n")
    if f.dual or not g.dual:
        raise ValueError("schur_apolarity takes a primal element and a dual element")
    lam, mu = f.lam, g.lam
    if not lam.contains(mu):
        return zero_element(Partition(), f.n)
    shape = SkewShape(lam, mu)
    muc = conjugate(mu)
    ncols_mu = len(muc)
    terms: dict = {}
    for fkey, cf in f.terms.items():
        for gkey, cg in g.terms.items():
            coeff = cf * cg
            cols = []
            sign = 1
            dead = False
            for c, col in enumerate(fkey):
                if c < ncols_mu:
                    hit = _contract_monomial(col, gkey[c])
                    if hit is None:
                        dead = True
                        break
                    rest, s = hit
                    sign *= s
                    cols.append(rest)
                else:
                    cols.append(col)
            if dead:
                continue
            key = tuple(cols)
            acc = terms.get(key, 0) + sign * coeff
            if acc:
                terms[key] = acc
            else:
                terms.pop(key, None)
    return make_element(shape, f.n, terms)


@dataclass(frozen=True)
class CatalecticantMatrix:
    """Matrix of the contraction-by-f map S_mu V* -> S_{lam/mu} V.

    Columns are indexed by the semistandard fillings of mu (dual module basis);
    rows by the semistandard skew fillings of lam/mu (skew module basis).
    """

    f_shape: Partition
    mu: Partition
    n: int
    matrix: RationalMatrix

    def rank(self) -> int:
        return self.matrix.rank()

    def kernel(self) -> Subspace:
        vecs = self.matrix.kernel_basis()
        return Subspace.from_vectors(self.matrix.col_labels, [v.entries for v in vecs])

    @property
    def shape(self) -> tuple[int, int]:
        return self.matrix.shape


def catalecticant(f: AmbientElement, mu: Partition) -> CatalecticantMatrix:
    """Catalecticant matrix of f against the degree-mu dual module."""
    if f.is_zero():
        raise ValueError("catalecticant of the zero element is undefined")
    if f.dual:
        raise ValueError("catalecticant expects a primal element")
    if len(mu) >= f.n:
        raise ValueError("length of mu must be smaller than n")
    lam, n = f.lam, f.n
    col_labels = schur_basis_labels(mu, n)
    duals = schur_basis(mu, n, dual=True)
    if lam.contains(mu):
        shape = SkewShape(lam, mu)
        skew_basis = skew_schur_basis(shape, n)
        row_labels = tuple(t for t, _ in skew_basis)
        idx = ambient_key_index(shape, n)
        basis_cols = [element_coordinates(el, idx) for _, el in skew_basis]
        entries: dict[tuple[int, int], Fraction] = {}
        for j, g in enumerate(duals):
            image = schur_apolarity(f, g)
            target = element_coordinates(image, idx)
            coords = solve_columns(basis_cols, target)
            if coords is None:
                raise RuntimeError("contraction image escaped the skew module span")
            for i, v in enumerate(coords):
                if v:
                    entries[(i, j)] = v
        matrix = RationalMatrix(row_labels, col_labels, entries)
    else:
        matrix = RationalMatrix((), col_labels, {})
    return CatalecticantMatrix(lam, mu, n, matrix)


def catalecticant_rank(f: AmbientElement, mu: Partition) -> int:
    return catalecticant(f, mu).rank()


def apolar_piece(f: AmbientElement, mu: Partition) -> Subspace:
    """Kernel of the degree-mu catalecticant, over the dual filling labels."""
    return catalecticant(f, mu).kernel()


def apolar_contains(f: AmbientElement, g: AmbientElement) -> bool:
    """True iff the dual element g kills f under the contraction."""
    return schur_apolarity(f, g).is_zero()


def image_generator(f: AmbientElement, mu: Partition):
    """Generator of the image of a rank-1 catalecticant.

    When mu strips whole maximal-height columns (mu = (e^{n_s})), the result is
    re-expressed as a straight-shape element by dropping the emptied columns.
    """
    if f.is_zero():
        raise ValueError("zero element has no image generator")
    lam, n = f.lam, f.n
    if not lam.contains(mu):
        raise ValueError("mu does not fit inside the shape of f")
    duals = schur_basis(mu, n, dual=True)
    generator = None
    images = []
    for g in duals:
        image = schur_apolarity(f, g)
        if not image.is_zero():
            images.append(image)
            if generator is None:
                generator = image
    if generator is None:
        raise ValueError("catalecticant image is zero")
    for other in images:
        if not generator.proportional_to(other):
            raise ValueError("catalecticant image has rank > 1")
    lamc, muc = conjugate(lam), conjugate(mu)
    stripped = len([c for c in range(len(muc)) if muc.part(c + 1) == lamc.part(c + 1)])
    if muc.parts == lamc.parts[: len(muc)]:
        # mu removed its columns entirely: identify with the straight shape
        rest_cols = lamc.parts[len(muc) :]
        new_lam = conjugate(Partition(rest_cols))
        terms = {}
        for key, v in generator.terms.items():
            assert all(key[c] == () for c in range(len(muc)))
            terms[key[len(muc) :]] = v
        return AmbientElement(new_lam, n, terms)
    return generator


def strip_identification(element: SkewAmbientElement) -> AmbientElement:
    """Identify S_{lam/(e^{n_s})} with the straight shape lacking those columns."""
    shape = element.shape
    muc = conjugate(shape.inner)
    lamc = conjugate(shape.outer)
    if muc.parts != lamc.parts[: len(muc)]:
        raise ValueError("inner shape does not strip whole columns")
    new_lam = conjugate(Partition(lamc.parts[len(muc) :]))
    terms = {key[len(muc) :]: v for key, v in element.terms.items()}
    return AmbientElement(new_lam, element.n, terms, dual=element.dual)
