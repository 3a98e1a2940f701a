"""Partitions, skew shapes, tableaux, words, and Littlewood-Richardson data.

Everything here is an immutable value; enumeration results are cached and the
caches are safe to populate from concurrent callers (worst case a result is
computed twice).

Conventions, fixed once for the whole package:
  * cells are addressed 1-based as (row, column);
  * the canonical order on tableaux of a common shape is lexicographic on the
    column reading word (columns left to right, each top to bottom);
  * the fixed standard filling of a shape is column-first: 1,2,... poured down
    column 1, then column 2, and so on.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from math import comb

Cell = tuple[int, int]


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers (possibly empty)."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        for i, p in enumerate(parts):
            if p < 1:
                raise ValueError(f"partition parts must be positive: {parts}")
            if i + 1 < len(parts) and parts[i + 1] > p:
                raise ValueError(f"partition parts must weakly decrease: {parts}")

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self):
        return bool(self.parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """Row length at 1-based row i, 0 beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    def contains(self, other: "Partition") -> bool:
        return all(other.part(i) <= self.part(i) for i in range(1, len(other) + 1))

    def cells(self) -> list[Cell]:
        return [(i, j) for i, p in enumerate(self.parts, start=1) for j in range(1, p + 1)]

    def __repr__(self):
        return f"Partition({list(self.parts)})"


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram; an involution."""
    if not lam:
        return Partition()
    return Partition(tuple(sum(1 for p in lam.parts if p >= j) for j in range(1, lam.parts[0] + 1)))


@dataclass(frozen=True)
class SkewShape:
    """A skew diagram outer/inner; inner empty means a straight shape."""

    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise ValueError(f"inner {self.inner} does not fit inside outer {self.outer}")

    @property
    def is_straight(self) -> bool:
        return not self.inner

    @property
    def size(self) -> int:
        return self.outer.size - self.inner.size

    def cells(self) -> list[Cell]:
        return [
            (i, j)
            for i in range(1, len(self.outer) + 1)
            for j in range(self.inner.part(i) + 1, self.outer.part(i) + 1)
        ]

    def column_lengths(self) -> tuple[int, ...]:
        """Cells per column, over all columns of the outer shape."""
        oc, ic = conjugate(self.outer), conjugate(self.inner)
        return tuple(oc.part(c) - ic.part(c) for c in range(1, len(oc) + 1))

    def __repr__(self):
        if self.is_straight:
            return f"SkewShape({list(self.outer.parts)})"
        return f"SkewShape({list(self.outer.parts)}/{list(self.inner.parts)})"


def as_skew(shape: Partition | SkewShape) -> SkewShape:
    return shape if isinstance(shape, SkewShape) else SkewShape(shape)


def column_first_cells(shape: Partition | SkewShape) -> tuple[Cell, ...]:
    """Cells in the fixed column-first order (column by column, top to bottom)."""
    skew = as_skew(shape)
    width = skew.outer.parts[0] if skew.outer else 0
    out: list[Cell] = []
    for c in range(1, width + 1):
        for i in range(1, len(skew.outer) + 1):
            if skew.inner.part(i) < c <= skew.outer.part(i):
                out.append((i, c))
    return tuple(out)


@dataclass(frozen=True)
class Tableau:
    """A filling of a (possibly skew) shape; row i stores only its present cells."""

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        expected = tuple(
            self.shape.outer.part(i) - self.shape.inner.part(i)
            for i in range(1, len(self.shape.outer) + 1)
        )
        if tuple(len(r) for r in self.rows) != expected:
            raise ValueError(f"row lengths {self.rows} do not match shape {self.shape}")
        object.__setattr__(self, "rows", tuple(tuple(int(x) for x in r) for r in self.rows))

    def entry(self, i: int, j: int) -> int:
        """Entry at absolute cell (i, j), 1-based."""
        off = self.shape.inner.part(i)
        return self.rows[i - 1][j - 1 - off]

    def content(self) -> tuple[int, ...]:
        """Multiplicity of each letter 1..max; need not be a partition."""
        if not any(self.rows):
            return ()
        top = max(max(r) for r in self.rows if r)
        counts = [0] * top
        for r in self.rows:
            for x in r:
                counts[x - 1] += 1
        return tuple(counts)

    def is_semistandard(self) -> bool:
        for i in range(1, len(self.shape.outer) + 1):
            for j in range(self.shape.inner.part(i) + 1, self.shape.outer.part(i) + 1):
                if j > self.shape.inner.part(i) + 1 and self.entry(i, j) < self.entry(i, j - 1):
                    return False
                if i > 1 and self.shape.inner.part(i - 1) < j <= self.shape.outer.part(i - 1):
                    if self.entry(i, j) <= self.entry(i - 1, j):
                        return False
        return True

    def is_standard(self) -> bool:
        if not self.is_semistandard():
            return False
        entries = sorted(x for r in self.rows for x in r)
        if entries != list(range(1, self.shape.size + 1)):
            return False
        for r in self.rows:
            if any(a >= b for a, b in zip(r, r[1:])):
                return False
        return True

    def column_word(self) -> tuple[int, ...]:
        """Entries in column-first cell order; the canonical sort key."""
        return tuple(self.entry(i, j) for i, j in column_first_cells(self.shape))

    def __repr__(self):
        return f"Tableau({self.shape!r}, {[list(r) for r in self.rows]})"


def tableau(outer, rows, inner=()) -> Tableau:
    """Convenience constructor from plain sequences."""
    return Tableau(SkewShape(Partition(tuple(outer)), Partition(tuple(inner))), tuple(tuple(r) for r in rows))


@dataclass(frozen=True)
class Word:
    """A finite string of positive integers."""

    letters: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(x) for x in self.letters))
        if any(x < 1 for x in self.letters):
            raise ValueError(f"word letters must be positive: {self.letters}")

    def __iter__(self):
        return iter(self.letters)

    def __len__(self):
        return len(self.letters)

    def content(self) -> tuple[int, ...]:
        if not self.letters:
            return ()
        counts = [0] * max(self.letters)
        for x in self.letters:
            counts[x - 1] += 1
        return tuple(counts)


def word_of(t: Tableau) -> Word:
    """Reading word: rows from the bottom up, each left to right."""
    letters: list[int] = []
    for r in reversed(t.rows):
        letters.extend(r)
    return Word(tuple(letters))


def is_yamanouchi(w: Word) -> bool:
    """True iff every suffix of the reversed word has #(i+1) <= #i for all i."""
    counts: dict[int, int] = {}
    for x in reversed(w.letters):
        counts[x] = counts.get(x, 0) + 1
        if counts[x] > counts.get(x - 1, 0) and x > 1:
            return False
    return True


def alpha(t: Tableau) -> Word:
    """Row-record word of a standard straight tableau, reversed; always a Y-word."""
    if not t.shape.is_straight or not t.is_standard():
        raise ValueError("alpha requires a standard tableau of straight shape")
    rows_of = {}
    for i, row in enumerate(t.rows, start=1):
        for x in row:
            rows_of[x] = i
    seq = [rows_of[l] for l in range(1, t.shape.size + 1)]
    return Word(tuple(reversed(seq)))


def beta(w: Word) -> Tableau:
    """Inverse of alpha: the standard tableau whose l-th entry sits in row rev(w)[l]."""
    if not is_yamanouchi(w):
        raise ValueError(f"beta requires a Yamanouchi word, got {w.letters}")
    rev = tuple(reversed(w.letters))
    nrows = max(rev) if rev else 0
    rows: list[list[int]] = [[] for _ in range(nrows)]
    for pos, i in enumerate(rev, start=1):
        rows[i - 1].append(pos)
    shape = Partition(tuple(len(r) for r in rows))
    return Tableau(SkewShape(shape), tuple(tuple(r) for r in rows))


def _conjugate_standard(t: Tableau) -> Tableau:
    """Transpose a standard straight tableau as a grid of values."""
    lam = t.shape.outer
    lamc = conjugate(lam)
    rows = tuple(
        tuple(t.entry(i, j) for i in range(1, lamc.part(j) + 1)) for j in range(1, len(lamc) + 1)
    )
    return Tableau(SkewShape(lamc), rows)


def _fill_by_reading_word(shape: SkewShape, letters: tuple[int, ...]) -> Tableau:
    """Place a word into a skew shape in reading order (bottom row first)."""
    if len(letters) != shape.size:
        raise ValueError("word length does not match shape size")
    rows: list[list[int]] = []
    pos = 0
    for i in reversed(range(1, len(shape.outer) + 1)):
        width = shape.outer.part(i) - shape.inner.part(i)
        rows.append(list(letters[pos : pos + width]))
        pos += width
    rows.reverse()
    return Tableau(shape, tuple(tuple(r) for r in rows))


def is_lr_tableau(t: Tableau) -> bool:
    """Littlewood-Richardson: semistandard with Yamanouchi reading word."""
    return t.is_semistandard() and is_yamanouchi(word_of(t))


def tprime(t: Tableau) -> Tableau:
    """Companion filling with reading word alpha(beta(word)') on the same shape."""
    if not is_lr_tableau(t):
        raise ValueError("tprime requires a Littlewood-Richardson skew tableau")
    wprime = alpha(_conjugate_standard(beta(word_of(t))))
    return _fill_by_reading_word(t.shape, wprime.letters)


def sigma_map(t: Tableau) -> dict[Cell, Cell]:
    """Cell bijection shape -> content diagram, (i,j) |-> (T(i,j), T'(i,j))."""
    tp = tprime(t)
    mu = Partition(t.content())
    out = {(i, j): (t.entry(i, j), tp.entry(i, j)) for i, j in t.shape.cells()}
    if sorted(out.values()) != sorted(mu.cells()):
        raise ValueError(f"sigma map of {t} is not a bijection onto the cells of {mu}")
    return out


@cache
def enumerate_sstd(shape: Partition | SkewShape, max_entry: int) -> tuple[Tableau, ...]:
    """All semistandard fillings with entries in 1..max_entry, canonically ordered."""
    skew = as_skew(shape)
    cells = skew.cells()
    found: list[Tableau] = []

    def grid_rows(assign: dict[Cell, int]) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(assign[(i, j)] for j in range(skew.inner.part(i) + 1, skew.outer.part(i) + 1))
            for i in range(1, len(skew.outer) + 1)
        )

    def backtrack(k: int, assign: dict[Cell, int]):
        if k == len(cells):
            found.append(Tableau(skew, grid_rows(assign)))
            return
        i, j = cells[k]
        lo = 1
        if (i, j - 1) in assign:
            lo = max(lo, assign[(i, j - 1)])
        if (i - 1, j) in assign:
            lo = max(lo, assign[(i - 1, j)] + 1)
        for v in range(lo, max_entry + 1):
            assign[(i, j)] = v
            backtrack(k + 1, assign)
        assign.pop((i, j), None)

    if max_entry >= 1:
        backtrack(0, {})
    found.sort(key=lambda t: t.column_word())
    return tuple(found)


@cache
def enumerate_std(shape: Partition) -> tuple[Tableau, ...]:
    """All standard tableaux of a straight shape, canonically ordered."""
    d = shape.size
    out = [
        t
        for t in enumerate_sstd(SkewShape(shape), d)
        if t.is_standard()
    ]
    return tuple(sorted(out, key=lambda t: t.column_word()))


@cache
def standard_filling(shape: Partition | SkewShape) -> Tableau:
    """The fixed column-first standard filling (1,2,... down successive columns)."""
    skew = as_skew(shape)
    assign = {cell: pos for pos, cell in enumerate(column_first_cells(skew), start=1)}
    rows = tuple(
        tuple(assign[(i, j)] for j in range(skew.inner.part(i) + 1, skew.outer.part(i) + 1))
        for i in range(1, len(skew.outer) + 1)
    )
    return Tableau(skew, rows)


@cache
def lr_tableaux(shape: SkewShape, content: Partition) -> tuple[Tableau, ...]:
    """All LR skew tableaux of the given shape and content, canonically ordered."""
    if content.size != shape.size:
        return ()
    cells = shape.cells()
    remaining = list(content.parts)
    found: list[Tableau] = []

    def grid_rows(assign: dict[Cell, int]) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(assign[(i, j)] for j in range(shape.inner.part(i) + 1, shape.outer.part(i) + 1))
            for i in range(1, len(shape.outer) + 1)
        )

    def backtrack(k: int, assign: dict[Cell, int]):
        if k == len(cells):
            t = Tableau(shape, grid_rows(assign))
            if is_yamanouchi(word_of(t)):
                found.append(t)
            return
        i, j = cells[k]
        lo = 1
        if (i, j - 1) in assign:
            lo = max(lo, assign[(i, j - 1)])
        if (i - 1, j) in assign:
            lo = max(lo, assign[(i - 1, j)] + 1)
        for v in range(lo, len(remaining) + 1):
            if remaining[v - 1] == 0:
                continue
            remaining[v - 1] -= 1
            assign[(i, j)] = v
            backtrack(k + 1, assign)
            assign.pop((i, j), None)
            remaining[v - 1] += 1

    backtrack(0, {})
    found.sort(key=lambda t: t.column_word())
    return tuple(found)


def lr_coefficient(lam: Partition, mu: Partition, nu: Partition) -> int:
    """Multiplicity of the nu module inside the lambda (x) mu product."""
    if nu.size != lam.size + mu.size:
        return 0
    if not (nu.contains(lam) and nu.contains(mu)):
        return 0
    return len(lr_tableaux(SkewShape(nu, lam), mu))


@dataclass(frozen=True)
class ColumnStructure:
    """Distinct column heights n_1 < ... < n_s with column multiplicities d_i."""

    heights: tuple[int, ...]
    multiplicities: tuple[int, ...]

    def partition(self) -> Partition:
        cols: list[int] = []
        for h, d in sorted(zip(self.heights, self.multiplicities), reverse=True):
            cols.extend([h] * d)
        return conjugate(Partition(tuple(cols)))


def column_structure(lam: Partition) -> ColumnStructure:
    """Group the columns of lam by height, shortest first."""
    if not lam:
        return ColumnStructure((), ())
    heights: list[int] = []
    mults: list[int] = []
    for h in conjugate(lam).parts:
        if heights and heights[-1] == h:
            mults[-1] += 1
        else:
            heights.append(h)
            mults.append(1)
    heights.reverse()
    mults.reverse()
    return ColumnStructure(tuple(heights), tuple(mults))


def mu_e(lam: Partition, e: int) -> Partition:
    """lam with its first e maximal-height columns removed."""
    cs = column_structure(lam)
    if not cs.heights:
        raise ValueError("mu_e of the empty partition is undefined")
    if not 1 <= e <= cs.multiplicities[-1]:
        raise ValueError(f"e={e} out of range 1..{cs.multiplicities[-1]}")
    cols = list(conjugate(lam).parts)
    return conjugate(Partition(tuple(cols[e:])))


@cache
def schur_dimension(lam: Partition, n: int) -> int:
    """Number of semistandard fillings with entries <= n (hook content formula)."""
    if len(lam) > n:
        return 0
    if not lam:
        return 1
    lamc = conjugate(lam)
    value = Fraction(1)
    for i, j in lam.cells():
        hook = (lam.part(i) - j) + (lamc.part(j) - i) + 1
        value *= Fraction(n + j - i, hook)
    assert value.denominator == 1
    return int(value)


def hook_length_count(lam: Partition) -> int:
    """Number of standard tableaux (hook length formula)."""
    if not lam:
        return 1
    lamc = conjugate(lam)
    num = 1
    for k in range(2, lam.size + 1):
        num *= k
    den = 1
    for i, j in lam.cells():
        den *= (lam.part(i) - j) + (lamc.part(j) - i) + 1
    return num // den


def binomial(n: int, k: int) -> int:
    return comb(n, k)
