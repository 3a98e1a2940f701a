"""Concrete Schur and skew Schur modules inside wedge-tensor spaces.

A shape with column heights h_1 >= h_2 >= ... embeds its module into
wedge^{h_1} V (x) wedge^{h_2} V (x) ...; elements are stored sparsely, keyed by
one strictly increasing index tuple per column.  Word tensors (elements of
V^{(x) d}) carry their factors in the fixed column-first cell order of the
shape, so the two pictures convert back and forth losslessly.

Scalar conventions: symmetrizers are raw integer-coefficient sums with no
normalisation, and converting a column-antisymmetric word tensor to wedge
coordinates reads off the coefficient of the column-sorted representative, so
the word/wedge round trip is the identity.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cache
from itertools import combinations, permutations, product

from .combinatorics import (
    Partition,
    SkewShape,
    Tableau,
    as_skew,
    column_first_cells,
    conjugate,
    enumerate_sstd,
    schur_dimension,
    standard_filling,
)
from .linalg import Echelon

WedgeKey = tuple[tuple[int, ...], ...]
Terms = dict


def _clean(terms: dict) -> dict:
    return {k: v for k, v in terms.items() if v}


class WordTensor:
    """Sparse element of V^{(x) d} over the basis e_1..e_n."""

    def __init__(self, d: int, n: int, terms: dict[tuple[int, ...], Fraction] | None = None):
        self.d = d
        self.n = n
        self.terms = _clean(dict(terms or {}))
        for key in self.terms:
            if len(key) != d or any(not 1 <= i <= n for i in key):
                raise ValueError(f"bad word {key} for d={d}, n={n}")

    def __eq__(self, other):
        return (
            isinstance(other, WordTensor)
            and (self.d, self.n) == (other.d, other.n)
            and self.terms == other.terms
        )

    def is_zero(self) -> bool:
        return not self.terms

    def scaled(self, c) -> "WordTensor":
        c = Fraction(c)
        return WordTensor(self.d, self.n, {k: v * c for k, v in self.terms.items()})

    def __add__(self, other: "WordTensor") -> "WordTensor":
        if (self.d, self.n) != (other.d, other.n):
            raise ValueError("word tensor size mismatch")
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return WordTensor(self.d, self.n, out)

    def __repr__(self):
        return f"WordTensor(d={self.d}, n={self.n}, {len(self.terms)} terms)"


class _WedgeTensor:
    """Shared core of straight and skew wedge-tensor elements."""

    def __init__(self, shape: SkewShape, n: int, terms=None, dual: bool = False):
        self.shape = shape
        self.n = n
        self.dual = bool(dual)
        self.terms: dict[WedgeKey, Fraction] = _clean(dict(terms or {}))
        lens = shape.column_lengths()
        for key in self.terms:
            if len(key) != len(lens):
                raise ValueError(f"key {key} has {len(key)} columns, expected {len(lens)}")
            for col, want in zip(key, lens):
                if len(col) != want or any(not 1 <= i <= n for i in col):
                    raise ValueError(f"bad column {col} in key {key} (length {want}, n={n})")
                if any(a >= b for a, b in zip(col, col[1:])):
                    raise ValueError(f"column {col} not strictly increasing")

    def is_zero(self) -> bool:
        return not self.terms

    def _binop_check(self, other):
        if type(self) is not type(other) or (self.shape, self.n, self.dual) != (
            other.shape,
            other.n,
            other.dual,
        ):
            raise ValueError("element space mismatch")

    def __add__(self, other):
        self._binop_check(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            w = out.get(k, 0) + v
            if w:
                out[k] = w
            else:
                out.pop(k, None)
        return self._with_terms(out)

    def __sub__(self, other):
        return self + other.scaled(-1)

    def scaled(self, c):
        c = Fraction(c)
        return self._with_terms({k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        return (
            type(self) is type(other)
            and (self.shape, self.n, self.dual) == (other.shape, other.n, other.dual)
            and self.terms == other.terms
        )

    def proportional_to(self, other) -> bool:
        """Projective equality: equal up to one nonzero scalar."""
        self._binop_check(other)
        if self.is_zero() or other.is_zero():
            return self.is_zero() and other.is_zero()
        if set(self.terms) != set(other.terms):
            return False
        key = next(iter(self.terms))
        ratio = Fraction(other.terms[key]) / Fraction(self.terms[key])
        return all(Fraction(v) * ratio == Fraction(other.terms[k]) for k, v in self.terms.items())

    def coordinates(self) -> dict[WedgeKey, Fraction]:
        return dict(self.terms)

    def sorted_terms(self) -> list[tuple[WedgeKey, Fraction]]:
        return sorted(self.terms.items())


class AmbientElement(_WedgeTensor):
    """Element of the wedge-tensor ambient of a straight shape lam."""

    def __init__(self, lam: Partition, n: int, terms=None, dual: bool = False):
        super().__init__(SkewShape(lam), n, terms, dual)
        self.lam = lam

    def _with_terms(self, terms):
        return AmbientElement(self.lam, self.n, terms, self.dual)

    def __repr__(self):
        star = "*" if self.dual else ""
        return f"AmbientElement({list(self.lam.parts)}{star}, n={self.n}, {len(self.terms)} terms)"


class SkewAmbientElement(_WedgeTensor):
    """Element of the wedge-tensor ambient of a skew shape."""

    def __init__(self, shape: SkewShape, n: int, terms=None, dual: bool = False):
        super().__init__(shape, n, terms, dual)

    def _with_terms(self, terms):
        return SkewAmbientElement(self.shape, self.n, terms, self.dual)

    def __repr__(self):
        star = "*" if self.dual else ""
        return f"SkewAmbientElement({self.shape!r}{star}, n={self.n}, {len(self.terms)} terms)"


def make_element(shape: Partition | SkewShape, n: int, terms=None, dual: bool = False):
    skew = as_skew(shape)
    if skew.is_straight:
        return AmbientElement(skew.outer, n, terms, dual)
    return SkewAmbientElement(skew, n, terms, dual)


@cache
def _perms_with_parity(k: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    out = []
    for perm in permutations(range(k)):
        inv = sum(1 for i in range(k) for j in range(i + 1, k) if perm[i] > perm[j])
        out.append((perm, -1 if inv % 2 else 1))
    return tuple(out)


@cache
def _position_groups(shape: SkewShape) -> tuple[tuple[tuple[int, ...], ...], tuple[tuple[int, ...], ...]]:
    """Positions (in column-first order) grouped by absolute row and by column.

    Every row of the outer shape and every column up to its width appears,
    possibly as an empty group (skew shapes can have fully erased rows/columns).
    """
    cells = column_first_cells(shape)
    rows: dict[int, list[int]] = {}
    cols: dict[int, list[int]] = {}
    for pos, (i, j) in enumerate(cells):
        rows.setdefault(i, []).append(pos)
        cols.setdefault(j, []).append(pos)
    width = shape.outer.parts[0] if shape.outer else 0
    row_groups = tuple(tuple(rows.get(i, ())) for i in range(1, len(shape.outer) + 1))
    col_groups = tuple(tuple(cols.get(j, ())) for j in range(1, width + 1))
    return row_groups, col_groups


def _symmetrize(w: WordTensor, groups, signed: bool) -> WordTensor:
    terms = dict(w.terms)
    for group in groups:
        k = len(group)
        if k <= 1:
            continue
        new: dict[tuple[int, ...], Fraction] = {}
        for word, coeff in terms.items():
            for perm, parity in _perms_with_parity(k):
                out = list(word)
                for slot, src in enumerate(perm):
                    out[group[slot]] = word[group[src]]
                key = tuple(out)
                c = coeff * parity if signed else coeff
                acc = new.get(key, 0) + c
                if acc:
                    new[key] = acc
                else:
                    new.pop(key, None)
        terms = new
    return WordTensor(w.d, w.n, terms)


def _check_word_size(shape: Partition | SkewShape, w: WordTensor):
    skew = as_skew(shape)
    if w.d != skew.size:
        raise ValueError(f"word tensor degree {w.d} does not match |shape| = {skew.size}")


def a_lambda(shape: Partition | SkewShape, w: WordTensor) -> WordTensor:
    """Row symmetrization over the cells of the fixed standard filling."""
    _check_word_size(shape, w)
    rows, _ = _position_groups(as_skew(shape))
    return _symmetrize(w, rows, signed=False)


def b_lambda(shape: Partition | SkewShape, w: WordTensor) -> WordTensor:
    """Column antisymmetrization over the cells of the fixed standard filling."""
    _check_word_size(shape, w)
    _, cols = _position_groups(as_skew(shape))
    return _symmetrize(w, cols, signed=True)


def young_symmetrizer(shape: Partition | SkewShape, w: WordTensor) -> WordTensor:
    """Raw Young symmetrizer b . a, no normalisation divisor."""
    return b_lambda(shape, a_lambda(shape, w))


def skew_symmetrizer(shape: SkewShape, w: WordTensor) -> WordTensor:
    return young_symmetrizer(shape, w)


def _sort_with_sign(seq: tuple[int, ...]) -> tuple[tuple[int, ...], int] | None:
    """Sorted tuple and permutation sign; None when a letter repeats."""
    if len(set(seq)) != len(seq):
        return None
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return tuple(sorted(seq)), (-1 if inv % 2 else 1)


def _column_blocks(shape: SkewShape) -> tuple[tuple[int, ...], ...]:
    _, cols = _position_groups(shape)
    return cols


def word_to_ambient(shape: Partition | SkewShape, w: WordTensor, dual: bool = False):
    """Read a column-antisymmetric word tensor off as wedge coordinates.

    The coefficient of each wedge monomial is the coefficient of its
    column-sorted representative word; antisymmetry of every column block is
    verified (signed accumulation must be prod(column length!) times the read).
    """
    _check_word_size(shape, w)
    skew = as_skew(shape)
    cols = _column_blocks(skew)
    heights = skew.column_lengths()
    ncols = len(heights)
    fact = 1
    for h in heights:
        for i in range(2, h + 1):
            fact *= i

    direct: dict[WedgeKey, Fraction] = {}
    accum: dict[WedgeKey, Fraction] = {}
    for word, coeff in w.terms.items():
        key_cols = []
        sign = 1
        sorted_rep = True
        for block in cols:
            seq = tuple(word[p] for p in block)
            ss = _sort_with_sign(seq)
            if ss is None:
                raise ValueError(f"word {word} repeats a letter inside a column block")
            col_key, s = ss
            if seq != col_key:
                sorted_rep = False
            key_cols.append(col_key)
            sign *= s
        key = tuple(key_cols)
        accum[key] = accum.get(key, 0) + sign * coeff
        if sorted_rep:
            direct[key] = direct.get(key, 0) + coeff
    direct = _clean(direct)
    accum = _clean(accum)
    if accum != {k: v * fact for k, v in direct.items()}:
        raise ValueError("word tensor is not antisymmetric in its column blocks")
    assert ncols == len(cols)
    return make_element(skew, w.n, direct, dual=dual)


def ambient_to_word(element) -> WordTensor:
    """Expand each wedge monomial as the full signed sum over column orderings."""
    skew = element.shape
    cols = _column_blocks(skew)
    d = skew.size
    out: dict[tuple[int, ...], Fraction] = {}
    for key, coeff in element.terms.items():
        options_per_col = []
        for col_letters in key:
            opts = []
            for perm, parity in _perms_with_parity(len(col_letters)):
                opts.append((tuple(col_letters[i] for i in perm), parity))
            options_per_col.append(opts)
        for choice in product(*options_per_col):
            word = [0] * d
            sign = 1
            for block, (letters, parity) in zip(cols, choice):
                sign *= parity
                for p, letter in zip(block, letters):
                    word[p] = letter
            k = tuple(word)
            acc = out.get(k, 0) + sign * coeff
            if acc:
                out[k] = acc
            else:
                out.pop(k, None)
    return WordTensor(d, element.n, out)


def word_for_filling(shape: Partition | SkewShape, filling: Tableau) -> tuple[int, ...]:
    """Letters of a filling read in column-first cell order (the word v_{(T0,S)})."""
    return filling.column_word()


def basis_element(lam: Partition, filling: Tableau, n: int, dual: bool = False) -> AmbientElement:
    """Young symmetrizer image of the word carried by a semistandard filling."""
    if not filling.shape.is_straight or filling.shape.outer != lam:
        raise ValueError("filling shape does not match the module shape")
    if not filling.is_semistandard():
        raise ValueError("basis elements are indexed by semistandard fillings")
    if any(x > n for row in filling.rows for x in row):
        raise ValueError(f"filling entries exceed n={n}")
    w = WordTensor(lam.size, n, {filling.column_word(): Fraction(1)})
    return word_to_ambient(lam, young_symmetrizer(lam, w), dual=dual)


@cache
def _schur_basis_cached(lam: Partition, n: int) -> tuple[tuple[Tableau, AmbientElement], ...]:
    out = []
    for t in enumerate_sstd(lam, n):
        out.append((t, basis_element(lam, t, n)))
    if len(out) != schur_dimension(lam, n):
        raise RuntimeError(f"basis size mismatch for {lam}, n={n}")
    return tuple(out)


def schur_basis(lam: Partition, n: int, dual: bool = False) -> tuple[AmbientElement, ...]:
    """Canonically ordered module basis (semistandard fillings, column-word order)."""
    if dual:
        return tuple(
            AmbientElement(lam, n, el.terms, dual=True) for _, el in _schur_basis_cached(lam, n)
        )
    return tuple(el for _, el in _schur_basis_cached(lam, n))


def schur_basis_labels(lam: Partition, n: int) -> tuple[Tableau, ...]:
    return tuple(t for t, _ in _schur_basis_cached(lam, n))


@cache
def ambient_key_index(shape: SkewShape, n: int) -> dict[WedgeKey, int]:
    """Deterministic index of all wedge monomial keys of the ambient space."""
    heights = shape.column_lengths()
    pools = [tuple(combinations(range(1, n + 1), h)) for h in heights]
    return {key: i for i, key in enumerate(product(*pools))}


def element_coordinates(element, index: dict[WedgeKey, int] | None = None) -> dict[int, Fraction]:
    idx = index if index is not None else ambient_key_index(element.shape, element.n)
    return {idx[k]: v for k, v in element.terms.items()}


@cache
def _span_echelon(lam: Partition, n: int) -> Echelon:
    idx = ambient_key_index(SkewShape(lam), n)
    ech = Echelon()
    for _, el in _schur_basis_cached(lam, n):
        ech.add(element_coordinates(el, idx))
    return ech


def membership(lam: Partition, element: AmbientElement) -> bool:
    """True iff the element lies in the span of the module basis."""
    if element.lam != lam:
        raise ValueError("shape mismatch")
    return _span_echelon(lam, element.n).contains(
        element_coordinates(element, ambient_key_index(SkewShape(lam), element.n))
    )


@cache
def _skew_basis_cached(shape: SkewShape, n: int) -> tuple[tuple[Tableau, SkewAmbientElement], ...]:
    out = []
    idx = ambient_key_index(shape, n)
    ech = Echelon()
    for t in enumerate_sstd(shape, n):
        w = WordTensor(shape.size, n, {t.column_word(): Fraction(1)})
        el = word_to_ambient(shape, skew_symmetrizer(shape, w))
        if el.is_zero():
            raise RuntimeError(f"skew symmetrizer killed the filling {t}")
        if not ech.add(element_coordinates(el, idx)):
            raise RuntimeError(f"skew basis candidates are dependent at {t}")
        out.append((t, el))
    return tuple(out)


def skew_schur_basis(shape: SkewShape, n: int) -> tuple[tuple[Tableau, SkewAmbientElement], ...]:
    """Semistandard-filling basis of the skew module, canonically ordered."""
    return _skew_basis_cached(shape, n)


@cache
def _skew_span_echelon(shape: SkewShape, n: int) -> Echelon:
    idx = ambient_key_index(shape, n)
    ech = Echelon()
    for _, el in _skew_basis_cached(shape, n):
        ech.add(element_coordinates(el, idx))
    return ech


def skew_membership(shape: SkewShape, element: SkewAmbientElement) -> bool:
    if element.shape != shape:
        raise ValueError("shape mismatch")
    if shape.is_straight:
        return _span_echelon(shape.outer, element.n).contains(
            element_coordinates(element, ambient_key_index(shape, element.n))
        )
    return _skew_span_echelon(shape, element.n).contains(
        element_coordinates(element, ambient_key_index(shape, element.n))
    )


def highest_weight_filling(lam: Partition) -> Tableau:
    """Semistandard filling whose i-th row holds only the letter i."""
    rows = tuple(tuple(i for _ in range(p)) for i, p in enumerate(lam.parts, start=1))
    return Tableau(SkewShape(lam), rows)


@cache
def _minor_table(g: tuple[tuple[Fraction, ...], ...], k: int) -> dict:
    """All k x k minors of g, keyed (rows, cols) with 1-based sorted tuples."""
    n = len(g)
    out = {}
    for rows in combinations(range(1, n + 1), k):
        for cols in combinations(range(1, n + 1), k):
            out[(rows, cols)] = _det([[g[i - 1][j - 1] for j in cols] for i in rows])
    return out


def _det(m: list[list[Fraction]]) -> Fraction:
    k = len(m)
    if k == 0:
        return Fraction(1)
    if k == 1:
        return Fraction(m[0][0])
    total = Fraction(0)
    for perm, parity in _perms_with_parity(k):
        prodv = Fraction(parity)
        for i, j in enumerate(perm):
            prodv *= m[i][j]
            if not prodv:
                break
        total += prodv
    return total


def matrix_as_key(g) -> tuple[tuple[Fraction, ...], ...]:
    return tuple(tuple(Fraction(x) for x in row) for row in g)


def apply_matrix(g, element):
    """Factor-wise action of an n x n matrix: each wedge leg maps by its minors."""
    gk = matrix_as_key(g)
    if len(gk) != element.n:
        raise ValueError("matrix size does not match n")
    out: dict[WedgeKey, Fraction] = {}
    tables = {}
    for key, coeff in element.terms.items():
        partial = [((), Fraction(1))]
        for col in key:
            k = len(col)
            if k not in tables:
                tables[k] = _minor_table(gk, k)
            table = tables[k]
            nxt = []
            for prefix, c in partial:
                for rows in combinations(range(1, element.n + 1), k):
                    d = table[(rows, col)]
                    if d:
                        nxt.append((prefix + (rows,), c * d))
            partial = nxt
        for cols, c in partial:
            acc = out.get(cols, 0) + c * coeff
            if acc:
                out[cols] = acc
            else:
                out.pop(cols, None)
    return element._with_terms(out)


def wedge_of_vectors(vectors: list[dict[int, Fraction]], n: int) -> dict[tuple[int, ...], Fraction]:
    """Coordinates of v_1 ^ ... ^ v_k in the sorted wedge monomial basis."""
    k = len(vectors)
    out: dict[tuple[int, ...], Fraction] = {}
    for idxs in combinations(range(1, n + 1), k):
        d = _det([[vectors[i].get(j, Fraction(0)) for j in idxs] for i in range(k)])
        if d:
            out[idxs] = d
    return out


def full_pairing(f: AmbientElement, g: AmbientElement) -> Fraction:
    """Determinant pairing of a primal element against a dual one, same shape."""
    if f.lam != g.lam or f.n != g.n or f.dual == g.dual:
        raise ValueError("full pairing needs one primal and one dual element of one shape")
    total = Fraction(0)
    small, big = (f.terms, g.terms) if len(f.terms) <= len(g.terms) else (g.terms, f.terms)
    for k, v in small.items():
        w = big.get(k)
        if w:
            total += Fraction(v) * Fraction(w)
    return total


def zero_element(shape: Partition | SkewShape, n: int, dual: bool = False):
    return make_element(shape, n, {}, dual=dual)


def scalar_element(value, n: int, dual: bool = False) -> AmbientElement:
    """Element of the trivial module (empty shape): the ground field."""
    v = Fraction(value)
    return AmbientElement(Partition(), n, {(): v} if v else {}, dual=dual)
