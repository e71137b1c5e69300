"""Standard Young tableaux on straight, skew, and block-diagonal shapes."""
from __future__ import annotations

from typing import Iterator

from .shapes import (
    BlockShape,
    Cell,
    Partition,
    Shape,
    b_composition,
    shape_cells,
)


class BoundExceeded(ValueError):
    """Enumeration requested past the configured size bound."""


class ShapeNotOneRowBlocks(ValueError):
    """The word bijection needs every block to be a single row."""


class Tableau:
    """A standard filling of a shape; immutable by convention.

    `values[i]` is the entry in `shape.cells[i]` (cells in row-major order).
    """

    __slots__ = ("shape", "values", "_pos", "_hash")

    def __init__(self, shape: Shape, values, check: bool = True):
        self.shape = shape
        self.values = tuple(values)
        pos = [None] * len(self.values)
        cells = shape_cells(shape)
        if len(cells) != len(self.values):
            raise ValueError("value count does not match shape size")
        for cell, v in zip(cells, self.values):
            if not (1 <= v <= len(cells)) or pos[v - 1] is not None:
                raise ValueError(f"values must be a bijection onto 1..{len(cells)}")
            pos[v - 1] = cell
        self._pos = tuple(pos)
        self._hash = None
        if check and not self._is_standard():
            raise ValueError(f"filling is not standard: {self.values}")

    def _is_standard(self) -> bool:
        at = self.cell_values()
        for (r, c), v in at.items():
            left = at.get((r, c - 1))
            up = at.get((r - 1, c))
            if (left is not None and left >= v) or (up is not None and up >= v):
                return False
        return True

    @property
    def n(self) -> int:
        return len(self.values)

    def pos(self, v: int) -> Cell:
        """Absolute (row, col) of a value."""
        return self._pos[v - 1]

    def row_of(self, v: int) -> int:
        return self._pos[v - 1][0]

    def at(self, r: int, c: int) -> int | None:
        """Entry at an absolute cell, or None if the cell is not filled."""
        try:
            i = shape_cells(self.shape).index((r, c))
        except ValueError:
            return None
        return self.values[i]

    def cell_values(self) -> dict[Cell, int]:
        return dict(zip(shape_cells(self.shape), self.values))

    def rows(self) -> list[list[int]]:
        """Filled entries grouped by absolute row, left to right."""
        out: dict[int, list[int]] = {}
        for (r, _), v in zip(shape_cells(self.shape), self.values):
            out.setdefault(r, []).append(v)
        return [out[r] for r in sorted(out)]

    def row_reading_word(self) -> tuple[int, ...]:
        """Rows bottom to top, each left to right."""
        rows = self.rows()
        return tuple(v for row in reversed(rows) for v in row)

    def descent_set(self) -> frozenset[int]:
        """Values i with i+1 in a strictly lower (absolute) row."""
        return frozenset(
            i for i in range(1, self.n)
            if self._pos[i][0] > self._pos[i - 1][0]
        )

    def maj(self) -> int:
        return sum(self.descent_set())

    def des(self) -> int:
        return len(self.descent_set())

    def relabel(self, perm: dict[int, int]) -> "Tableau":
        """Apply a value permutation (cell of v receives perm(v))."""
        return Tableau(self.shape, tuple(perm.get(v, v) for v in self.values), check=True)

    def relabel_unchecked(self, perm: dict[int, int]) -> "Tableau | None":
        """Like relabel but returns None if the result is not standard."""
        try:
            return Tableau(self.shape, tuple(perm.get(v, v) for v in self.values), check=True)
        except ValueError:
            return None

    def transpose(self) -> "Tableau":
        if not isinstance(self.shape, Partition):
            raise ValueError("transpose is implemented for straight shapes only")
        conj = self.shape.conjugate()
        at = self.cell_values()
        return Tableau(conj, tuple(at[(c, r)] for r, c in conj.cells), check=False)

    def to_text(self) -> str:
        return "/".join(",".join(str(v) for v in row) for row in self.rows())

    def to_json(self) -> dict:
        return {"shape": str(self.shape), "rows": self.rows()}

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Tableau)
            and self.values == other.values
            and shape_cells(self.shape) == shape_cells(other.shape)
        )

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((shape_cells(self.shape), self.values))
        return self._hash

    def __repr__(self) -> str:
        return f"Tableau({self.to_text()})"


def from_rows(rows: list[list[int]]) -> Tableau:
    """Build a straight-shape tableau from its rows."""
    shape = Partition(len(r) for r in rows)
    return Tableau(shape, tuple(v for row in rows for v in row))


def parse_tableau(text: str) -> Tableau:
    return from_rows([[int(v) for v in row.split(",")] for row in text.split("/")])


def descent_set(t: Tableau) -> frozenset[int]:
    return t.descent_set()


def enumerate_tableaux(shape: Shape, limit: int = 20) -> Iterator[Tableau]:
    """Stream every standard filling exactly once, in the deterministic
    order given by value-ascending backtracking with cells tried row-major."""
    cells = shape_cells(shape)
    n = len(cells)
    if n > limit:
        raise BoundExceeded(f"shape has {n} cells, bound is {limit}")
    if n == 0:
        yield Tableau(shape, ())
        return
    index = {cell: i for i, cell in enumerate(cells)}
    north = tuple(index.get((r - 1, c), -1) for r, c in cells)
    west = tuple(index.get((r, c - 1), -1) for r, c in cells)
    values = [0] * n

    def rec(v: int) -> Iterator[Tableau]:
        if v > n:
            yield Tableau(shape, values, check=False)
            return
        for i in range(n):
            if values[i] == 0 \
                    and (north[i] < 0 or values[north[i]]) \
                    and (west[i] < 0 or values[west[i]]):
                values[i] = v
                yield from rec(v + 1)
                values[i] = 0

    yield from rec(1)


def count_tableaux(shape: Shape, limit: int = 20) -> int:
    return sum(1 for _ in enumerate_tableaux(shape, limit))


def to_word(t: Tableau) -> tuple[int, ...]:
    """The descent-preserving bijection onto words: for a shape whose blocks
    are single rows, letter i is the block of value i counted bottom-up."""
    shape = t.shape
    if not isinstance(shape, BlockShape) or any(len(b) > 1 for b in shape.blocks):
        raise ShapeNotOneRowBlocks(f"{shape} is not a one-row block shape")
    m = shape.m
    return tuple(m - shape.block_of_cell(t.pos(v)) + 1 for v in range(1, t.n + 1))


def word_descent_set(word) -> frozenset[int]:
    return frozenset(i for i in range(1, len(word)) if word[i - 1] > word[i])


def word_inv(word) -> int:
    return sum(
        1
        for i in range(len(word))
        for j in range(i + 1, len(word))
        if word[i] > word[j]
    )


# ---------------------------------------------------------------------------
# extremal tableaux


def _outer_vertical_strip(p: Partition) -> list[Cell]:
    """Row-end cells (r, p_r), one per row: the outermost maximal vertical strip."""
    return [(r, p.part(r)) for r in range(1, len(p) + 1)]


def _outer_horizontal_strip(p: Partition) -> list[Cell]:
    """Column-end cells, one per column: the outermost maximal horizontal strip."""
    conj = p.conjugate()
    return [(conj.part(c), c) for c in range(1, len(conj) + 1)]


def maxmaj_tableau(p: Partition) -> Tableau:
    """Fill successive outermost maximal vertical strips with the largest
    remaining values, bottom to top within each strip."""
    if not p:
        raise ValueError("shape must be nonempty")
    fill: dict[Cell, int] = {}
    rows = list(p.parts)
    v = p.n
    while any(rows):
        cur = Partition(rows)
        for cell in sorted(_outer_vertical_strip(cur), key=lambda rc: -rc[0]):
            fill[cell] = v
            v -= 1
            rows[cell[0] - 1] -= 1
    return Tableau(p, tuple(fill[c] for c in p.cells))


def minmaj_tableau(p: Partition) -> Tableau:
    """Fill successive outermost maximal horizontal strips with the largest
    remaining values, right to left within each strip."""
    if not p:
        raise ValueError("shape must be nonempty")
    fill: dict[Cell, int] = {}
    rows = list(p.parts)
    v = p.n
    while any(rows):
        cur = Partition(rows)
        for cell in sorted(_outer_horizontal_strip(cur), key=lambda rc: -rc[1]):
            fill[cell] = v
            v -= 1
            rows[cell[0] - 1] -= 1
    return Tableau(p, tuple(fill[c] for c in p.cells))


def exceptional_set(p: Partition) -> frozenset[Tableau]:
    """Tableaux excluded from the maj-increment map: always the max-maj
    tableau; for rectangles also the min-maj tableau; for rectangles with
    at least two rows and columns also the unique tableau of major index
    two below the maximum, obtained from max-maj by cycling 2..length+1."""
    out = {maxmaj_tableau(p)}
    if p.is_rectangle():
        out.add(minmaj_tableau(p))
    if p.is_big_rectangle():
        ell = len(p)
        cyc = {i: i + 1 for i in range(2, ell + 1)}
        cyc[ell + 1] = 2
        out.add(maxmaj_tableau(p).relabel(cyc))
    return frozenset(out)


# ---------------------------------------------------------------------------
# canonical orbit representatives


class DNotDividingM(ValueError):
    """The rotation order d must divide the number of blocks m."""


class OrbitRep:
    """The rotation orbit of a block shape, with canonical-member tests.

    Rotating a filled sequence by m/d moves the block holding the largest
    entry by m/d positions, so a tableau is the canonical representative of
    its orbit exactly when that block index is at most m/d.
    """

    __slots__ = ("blocks", "d", "m", "orbit")

    def __init__(self, blocks: BlockShape, d: int):
        if d <= 0 or blocks.m % d:
            raise DNotDividingM(f"d={d} does not divide m={blocks.m}")
        self.blocks = blocks
        self.d = d
        self.m = blocks.m
        self.orbit = blocks.orbit(d)
        assert d % len(self.orbit) == 0

    def size(self) -> int:
        return len(self.orbit)

    def is_canonical(self, t: Tableau) -> bool:
        shape = t.shape
        if not isinstance(shape, BlockShape) or shape.blocks not in {
            s.blocks for s in self.orbit
        }:
            raise ValueError("tableau shape is not in this orbit")
        return t.n == 0 or shape.block_of_cell(t.pos(t.n)) <= self.m // self.d

    def canonical_count(self, limit: int = 20) -> int:
        return sum(1 for _ in canonical_orbit_tableaux(self.blocks, self.d, limit))


def canonical_orbit_tableaux(
    blocks: BlockShape, d: int, limit: int = 20
) -> Iterator[tuple[Tableau, int]]:
    """Stream the canonical representatives among the tableaux of all shapes
    in the rotation orbit, each paired with b(alpha) of its shape.

    A tableau is canonical when the block index holding the largest entry is
    minimal within its rotation orbit; rotating by m/d shifts that index by
    m/d mod m, so the canonical ones are exactly those with index <= m/d.
    """
    m = blocks.m
    if d <= 0 or m % d:
        raise DNotDividingM(f"d={d} does not divide m={m}")
    step = m // d
    for mu in blocks.orbit(d):
        ba = b_composition(mu.alpha())
        for t in enumerate_tableaux(mu, limit):
            if t.n == 0 or mu.block_of_cell(t.pos(t.n)) <= step:
                yield t, ba
