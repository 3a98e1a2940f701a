"""Multiplication maps on dual modules, flag-point ideals, and their degree pieces.

The product of two dual module elements routed through a Littlewood-Richardson
filling T is computed in four moves: read both factors as tuples of row
monomials, scatter the second factor's letters into the skew cells via the cell
bijection of T, merge rows, and apply the target Young symmetrizer.  Everything
is exact; matrices of the maps are cached per shape triple and reused across
points.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from itertools import combinations_with_replacement, permutations, product

from .apolarity import apolar_piece, schur_apolarity
from .combinatorics import (
    Partition,
    SkewShape,
    Tableau,
    column_first_cells,
    column_structure,
    conjugate,
    lr_tableaux,
    sigma_map,
)
from .linalg import Echelon, Subspace, solve_columns
from .points import FlagPoint, annihilator_chain, flag_tensor
from .spaces import (
    AmbientElement,
    _perms_with_parity,
    _position_groups,
    ambient_key_index,
    ambient_to_word,
    element_coordinates,
    membership,
    schur_basis,
    zero_element,
)


def _c_image_ambient(nu: Partition, word_terms: dict, n: int) -> dict:
    """Wedge coordinates of the Young symmetrizer image of a word tensor.

    Reading the column-sorted representative after c_nu = b . a collapses to:
    sum over raw row permutations, then sort each column with its sign (words
    repeating a letter inside a column die).
    """
    rows_groups, _ = _position_groups(SkewShape(nu))
    nuc = conjugate(nu)
    ncols = len(nuc)
    col_of_pos: list[tuple[int, int]] = []  # position -> (column, slot)
    counts = [0] * ncols
    for i, j in column_first_cells(nu):
        col_of_pos.append((j - 1, counts[j - 1]))
        counts[j - 1] += 1
    out: dict = {}
    perm_sets = [[p for p, _ in _perms_with_parity(len(grp))] for grp in rows_groups]
    for word, coeff in word_terms.items():
        for choice in product(*perm_sets):
            permuted = list(word)
            for grp, perm in zip(rows_groups, choice):
                for slot, src in enumerate(perm):
                    permuted[grp[slot]] = word[grp[src]]
            cols: list[list[int]] = [[] for _ in range(ncols)]
            for pos, letter in enumerate(permuted):
                cols[col_of_pos[pos][0]].append(letter)
            sign = 1
            dead = False
            key_cols = []
            for seq in cols:
                if len(set(seq)) != len(seq):
                    dead = True
                    break
                inv = sum(
                    1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j]
                )
                if inv % 2:
                    sign = -sign
                key_cols.append(tuple(sorted(seq)))
            if dead:
                continue
            key = tuple(key_cols)
            acc = out.get(key, 0) + sign * coeff
            if acc:
                out[key] = acc
            else:
                out.pop(key, None)
    return out


def multiplication_map(
    lam: Partition,
    mu: Partition,
    nu: Partition,
    t: Tableau,
    g: AmbientElement,
    h: AmbientElement,
) -> AmbientElement:
    """Product of g and h landing in the nu module, routed through the filling t.

    Both factors are expanded to word tensors; the first occupies the cells of
    its own diagram inside nu, the second is scattered into the skew cells by
    the cell bijection of t, and the target Young symmetrizer is applied.  The
    map is equivariant by construction and the (projectively unique) routed
    projection the staged definition describes.
    """
    if t.shape != SkewShape(nu, lam) or Partition(t.content()) != mu:
        raise ValueError("tableau does not have shape nu/lam and content mu")
    if t not in lr_tableaux(SkewShape(nu, lam), mu):
        raise ValueError("tableau is not a Littlewood-Richardson filling")
    if g.lam != lam or h.lam != mu or g.n != h.n or g.dual != h.dual:
        raise ValueError("factor shapes do not match the map")
    if g.is_zero() or h.is_zero():
        return zero_element(nu, g.n, dual=g.dual)
    routing = sigma_map(t)  # skew cell -> mu cell
    nu_pos = {cell: k for k, cell in enumerate(column_first_cells(nu))}
    g_slot = [nu_pos[cell] for cell in column_first_cells(lam)]
    mu_to_skew = {mu_cell: skew_cell for skew_cell, mu_cell in routing.items()}
    h_slot = [nu_pos[mu_to_skew[cell]] for cell in column_first_cells(mu)]
    g_words = ambient_to_word(g)
    h_words = ambient_to_word(h)
    combined: dict = {}
    for gw, cg in g_words.terms.items():
        for hw, ch in h_words.terms.items():
            word = [0] * nu.size
            for slot, letter in zip(g_slot, gw):
                word[slot] = letter
            for slot, letter in zip(h_slot, hw):
                word[slot] = letter
            key = tuple(word)
            acc = combined.get(key, 0) + cg * ch
            if acc:
                combined[key] = acc
            else:
                combined.pop(key, None)
    terms = _c_image_ambient(nu, combined, g.n)
    return AmbientElement(nu, g.n, terms, dual=g.dual)


@cache
def _basis_coordinate_columns(lam: Partition, n: int):
    idx = ambient_key_index(SkewShape(lam), n)
    return [element_coordinates(el, idx) for el in schur_basis(lam, n)]


def express_in_schur_basis(element: AmbientElement) -> list[Fraction]:
    """Coordinates of a module element in the canonical filling basis."""
    idx = ambient_key_index(SkewShape(element.lam), element.n)
    coords = solve_columns(
        _basis_coordinate_columns(element.lam, element.n), element_coordinates(element, idx)
    )
    if coords is None:
        raise ValueError("element does not lie in the module")
    return coords


@cache
def multiplication_matrix(
    lam: Partition, mu: Partition, nu: Partition, t: Tableau, n: int
) -> dict[tuple[int, int], dict[int, Fraction]]:
    """Ambient coordinates of every basis product, keyed (lam index, mu index)."""
    idx = ambient_key_index(SkewShape(nu), n)
    lam_basis = schur_basis(lam, n)
    mu_basis = schur_basis(mu, n)
    out: dict[tuple[int, int], dict[int, Fraction]] = {}
    for a, g in enumerate(lam_basis):
        for b, h in enumerate(mu_basis):
            image = multiplication_map(lam, mu, nu, t, g, h)
            if not image.is_zero():
                out[(a, b)] = element_coordinates(image, idx)
    return out


def _subdiagrams(nu: Partition) -> list[Partition]:
    """All partitions contained in nu, the empty one excluded."""
    out: list[Partition] = []

    def rec(prefix: list[int], row: int, prev: int):
        if prefix:
            out.append(Partition(tuple(prefix)))
        if row > len(nu):
            return
        for p in range(1, min(nu.part(row), prev) + 1):
            rec(prefix + [p], row + 1, p)

    for p in range(1, nu.part(1) + 1):
        rec([p], 2, p)
    # rec only extends downward from each starting first row; collect uniques
    seen = {}
    for q in out:
        seen[q.parts] = q
    return sorted(seen.values(), key=lambda q: (q.size, q.parts))


def generator_degrees(lam: Partition) -> list[int]:
    """Symmetric powers attached to the annihilators, smallest subspace last."""
    cs = column_structure(lam)
    s = len(cs.heights)
    return [1 + sum(cs.multiplicities[i + 1 :]) for i in range(s)]


def generator_space(point: FlagPoint, i: int) -> list[AmbientElement]:
    """Basis of Sym^{m_i} W_i^perp as dual elements of the one-row module."""
    m = generator_degrees(point.lam)[i]
    ann = annihilator_chain(point)[i]
    vectors = ann.basis_vectors()
    out = []
    for combo in combinations_with_replacement(range(len(vectors)), m):
        poly: dict[tuple[int, ...], Fraction] = {(): Fraction(1)}
        for vi in combo:
            nxt: dict[tuple[int, ...], Fraction] = {}
            for mon, c in poly.items():
                for j, v in vectors[vi].items():
                    key = tuple(sorted(mon + (j,)))
                    acc = nxt.get(key, 0) + c * v
                    if acc:
                        nxt[key] = acc
                    else:
                        nxt.pop(key, None)
            poly = nxt
        terms: dict = {}
        for mon, c in poly.items():
            for word in set(permutations(mon)):
                terms[tuple((x,) for x in word)] = c
        out.append(AmbientElement(Partition((m,)), point.n, terms, dual=True))
    return out


class IdealPiece:
    """Degree-nu piece of the ideal attached to one or more flag points."""

    def __init__(self, points: tuple[FlagPoint, ...], nu: Partition, subspace: Subspace, n: int):
        self.points = points
        self.nu = nu
        self.subspace = subspace
        self.n = n

    @property
    def dim(self) -> int:
        return self.subspace.dim

    def basis_elements(self) -> list[AmbientElement]:
        index = ambient_key_index(SkewShape(self.nu), self.n)
        reverse = {i: key for key, i in index.items()}
        out = []
        for vec in self.subspace.basis_vectors():
            out.append(
                AmbientElement(self.nu, self.n, {reverse[i]: v for i, v in vec.items()}, dual=True)
            )
        return out


def _ambient_labels(nu: Partition, n: int) -> tuple[int, ...]:
    return tuple(range(len(ambient_key_index(SkewShape(nu), n))))


def ideal_piece(point: FlagPoint, nu: Partition, iterate: bool = True) -> IdealPiece:
    """Span of all products of the point's generators landing in degree nu.

    With iterate=True the span closes over products of every smaller ideal
    piece with every module; with iterate=False only one-hop products of the
    generator spaces are taken.
    """
    if len(nu) >= point.n:
        raise ValueError("length of nu must be smaller than n")
    n = point.n
    degrees = generator_degrees(point.lam)
    seeds: dict[Partition, list[dict[int, Fraction]]] = {}
    for i, m in enumerate(degrees):
        shape = Partition((m,))
        idx = ambient_key_index(SkewShape(shape), n)
        seeds.setdefault(shape, [])
        for el in generator_space(point, i):
            seeds[shape].append(element_coordinates(el, idx))

    memo: dict[Partition, Echelon] = {}

    def piece(kappa: Partition) -> Echelon:
        if kappa in memo:
            return memo[kappa]
        ech = Echelon()
        memo[kappa] = ech
        for vec in seeds.get(kappa, []):
            ech.add(vec)
        sources = _subdiagrams(kappa)
        for kp in sources:
            if kp == kappa:
                continue
            if iterate:
                src = piece(kp)
                src_vectors = [dict(r) for r in src.basis_rows()]
            else:
                if kp not in seeds:
                    continue
                src_vectors = seeds[kp]
            if not src_vectors:
                continue
            rest = kappa.size - kp.size
            if rest <= 0:
                continue
            for mu in _subdiagrams(kappa):
                if mu.size != rest or len(mu) >= n:
                    continue
                tabs = lr_tableaux(SkewShape(kappa, kp), mu)
                if not tabs:
                    continue
                coords = [
                    solve_columns(_basis_coordinate_columns(kp, n), vec) for vec in src_vectors
                ]
                mu_dim = len(schur_basis(mu, n))
                for t in tabs:
                    mat = multiplication_matrix(kp, mu, kappa, t, n)
                    for cvec in coords:
                        for b in range(mu_dim):
                            image: dict[int, Fraction] = {}
                            for a, ca in enumerate(cvec):
                                if not ca:
                                    continue
                                col = mat.get((a, b))
                                if not col:
                                    continue
                                for r, v in col.items():
                                    acc = image.get(r, 0) + ca * v
                                    if acc:
                                        image[r] = acc
                                    else:
                                        image.pop(r, None)
                            if image:
                                ech.add(image)
        return ech

    ech = piece(nu)
    labels = _ambient_labels(nu, n)
    sub = Subspace.from_vectors(
        labels, [{c: Fraction(v) for c, v in r.items()} for r in ech.basis_rows()]
    )
    return IdealPiece((point,), nu, sub, n)


def ideal_intersection(points, nu: Partition, iterate: bool = True) -> IdealPiece:
    """Exact intersection of the per-point degree-nu ideal pieces."""
    points = tuple(points)
    if not points:
        raise ValueError("need at least one point")
    pieces = [ideal_piece(p, nu, iterate=iterate) for p in points]
    sub = pieces[0].subspace
    for piece in pieces[1:]:
        sub = sub.intersect(piece.subspace)
    return IdealPiece(points, nu, sub, points[0].n)


def apolar_piece_ambient(f: AmbientElement, mu: Partition) -> Subspace:
    """Kernel of the degree-mu catalecticant, in ambient dual coordinates."""
    kernel = apolar_piece(f, mu)
    idx = ambient_key_index(SkewShape(mu), f.n)
    basis_cols = _basis_coordinate_columns(mu, f.n)
    label_pos = {lab: i for i, lab in enumerate(kernel.labels)}
    vectors = []
    for vec in kernel.basis_vectors():
        coords: dict[int, Fraction] = {}
        for lab, c in vec.items():
            col = basis_cols[label_pos[lab]]
            for r, v in col.items():
                acc = coords.get(r, 0) + c * v
                if acc:
                    coords[r] = acc
                else:
                    coords.pop(r, None)
        vectors.append(coords)
    return Subspace.from_vectors(_ambient_labels(mu, f.n), vectors)


def verify_top_degree(point: FlagPoint) -> bool:
    """Check the top-degree ideal piece equals the top apolar piece exactly."""
    lam = point.lam
    ideal = ideal_piece(point, lam, iterate=True).subspace
    apolar = apolar_piece_ambient(flag_tensor(point), lam)
    return ideal.contains(apolar) and apolar.contains(ideal)


def kills_point(g: AmbientElement, point: FlagPoint) -> bool:
    return schur_apolarity(flag_tensor(point), g).is_zero()
