"""Integer partitions, skew diagrams, and block-diagonal skew diagrams.

Cells are 1-based (row, col) pairs in English notation throughout.  All
shape types are immutable value objects and hash/compare structurally.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

Cell = tuple[int, int]


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive integers (possibly empty)."""

    parts: tuple[int, ...] = ()

    def __init__(self, parts=()):
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __str__(self) -> str:
        return ",".join(str(p) for p in self.parts)

    def part(self, i: int) -> int:
        """Row length lambda_i with 1-based i; 0 beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        return tuple((r, c) for r, p in enumerate(self.parts, 1) for c in range(1, p + 1))

    def conjugate(self) -> "Partition":
        if not self.parts:
            return Partition()
        cols = [0] * self.parts[0]
        for p in self.parts:
            for j in range(p):
                cols[j] += 1
        return Partition(cols)

    def contains(self, other: "Partition") -> bool:
        return all(self.part(i) >= other.part(i) for i in range(1, len(other) + 1))

    def arm(self, cell: Cell) -> int:
        r, c = cell
        return self.part(r) - c

    def leg(self, cell: Cell) -> int:
        r, c = cell
        return self.conjugate().part(c) - r

    def is_rectangle(self) -> bool:
        return len(set(self.parts)) <= 1

    def is_big_rectangle(self) -> bool:
        """Rectangle with at least two rows and two columns."""
        return self.is_rectangle() and len(self.parts) >= 2 and self.parts[0] >= 2

    def add_cell(self, cell: Cell) -> "Partition":
        r, c = cell
        rows = list(self.parts)
        if r == len(rows) + 1:
            rows.append(0)
        if not (1 <= r <= len(rows)) or rows[r - 1] + 1 != c:
            raise ValueError(f"{cell} is not an addable cell of {self}")
        rows[r - 1] += 1
        return Partition(rows)


def hook_lengths(p: Partition) -> dict[Cell, int]:
    """Hook length arm + leg + 1 for every cell of the diagram."""
    conj = p.conjugate()
    return {
        (r, c): (p.part(r) - c) + (conj.part(c) - r) + 1
        for r, c in p.cells
    }


def hook_multiset(p: Partition) -> tuple[int, ...]:
    return tuple(sorted(hook_lengths(p).values()))


def b_statistic(p: Partition) -> int:
    """b(lambda) = sum (i-1) lambda_i, the minimum major index on SYT(lambda)."""
    return sum((i - 1) * part for i, part in enumerate(p.parts, 1))


def b_composition(alpha) -> int:
    """b(alpha) = sum (i-1) alpha_i for a (weak) composition."""
    alpha = tuple(alpha)
    if any(a < 0 for a in alpha):
        raise ValueError(f"composition entries must be nonnegative: {alpha}")
    return sum((i - 1) * a for i, a in enumerate(alpha, 1))


def corners_and_notches(p: Partition) -> tuple[tuple[Cell, ...], tuple[Cell, ...]]:
    """Corners are cells with hook length 1; notches are (i,j) outside the
    diagram with both (i-1,j) and (i,j-1) inside."""
    hooks = hook_lengths(p)
    corners = tuple(sorted(c for c, h in hooks.items() if h == 1))
    notches = tuple(
        (i + 1, p.part(i + 1) + 1)
        for i in range(1, len(p.parts))
        if p.part(i) > p.part(i + 1)
    )
    return corners, notches


@dataclass(frozen=True)
class SkewShape:
    """A pair inner <= outer of partitions; cells are the set difference."""

    outer: Partition
    inner: Partition

    def __post_init__(self):
        if not self.outer.contains(self.inner):
            raise ValueError(f"{self.inner} not contained in {self.outer}")

    @property
    def n(self) -> int:
        return self.outer.n - self.inner.n

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        return tuple(
            (r, c)
            for r in range(1, len(self.outer) + 1)
            for c in range(self.inner.part(r) + 1, self.outer.part(r) + 1)
        )

    def max_row_length(self) -> int:
        return max((self.outer.part(r) - self.inner.part(r) for r in range(1, len(self.outer) + 1)), default=0)

    def max_col_length(self) -> int:
        oc, ic = self.outer.conjugate(), self.inner.conjugate()
        return max((oc.part(c) - ic.part(c) for c in range(1, len(oc) + 1)), default=0)

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"


@dataclass(frozen=True)
class BlockShape:
    """Block diagonal skew shape: partitions translated so that the blocks
    occupy disjoint rows and columns, listed top to bottom.

    Empty blocks are legal; they occupy no rows or columns but keep their
    index in the sequence.
    """

    blocks: tuple[Partition, ...]

    def __init__(self, blocks):
        object.__setattr__(self, "blocks", tuple(
            b if isinstance(b, Partition) else Partition(b) for b in blocks
        ))

    @property
    def m(self) -> int:
        return len(self.blocks)

    @property
    def n(self) -> int:
        return sum(b.n for b in self.blocks)

    def alpha(self) -> tuple[int, ...]:
        """Sequence of block sizes |lambda^(1)|, ..., |lambda^(m)|."""
        return tuple(b.n for b in self.blocks)

    def b_alpha(self) -> int:
        return b_composition(self.alpha())

    @cached_property
    def _offsets(self) -> tuple[tuple[int, int], ...]:
        # Row offset of block j: total length of blocks above; column
        # offset: total width of blocks below.
        offs = []
        for j in range(len(self.blocks)):
            row_off = sum(len(b) for b in self.blocks[:j])
            col_off = sum(b.part(1) for b in self.blocks[j + 1:])
            offs.append((row_off, col_off))
        return tuple(offs)

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        return tuple(sorted(c for cells in block_coordinates(self) for c in cells))

    def block_of_cell(self, cell: Cell) -> int:
        """1-based index of the block containing an absolute cell."""
        for j, cells in enumerate(block_coordinates(self), 1):
            if cell in cells:
                return j
        raise KeyError(cell)

    def rotate(self, steps: int) -> "BlockShape":
        """Right-rotate the block sequence by `steps` positions."""
        s = steps % len(self.blocks)
        return BlockShape(self.blocks[-s:] + self.blocks[:-s]) if s else self

    def orbit(self, d: int) -> tuple["BlockShape", ...]:
        """Distinct shapes under the d rotations by multiples of m/d."""
        if d <= 0 or self.m % d:
            raise ValueError(f"d={d} must divide m={self.m}")
        step = self.m // d
        seen, out = set(), []
        for j in range(d):
            s = self.rotate(j * step)
            if s.blocks not in seen:
                seen.add(s.blocks)
                out.append(s)
        return tuple(out)

    def hook_sum(self) -> int:
        return sum(sum(hook_lengths(b).values()) for b in self.blocks)

    def b_blocks(self) -> int:
        """Sum of b(lambda^(i)) over the blocks."""
        return sum(b_statistic(b) for b in self.blocks)

    def b_blocks_conjugate(self) -> int:
        return sum(b_statistic(b.conjugate()) for b in self.blocks)

    def as_skew(self) -> SkewShape:
        rows: dict[int, tuple[int, int]] = {}
        for cells in block_coordinates(self):
            for r, c in cells:
                lo, hi = rows.get(r, (c, c))
                rows[r] = (min(lo, c), max(hi, c))
        nrows = max(rows, default=0)
        outer = [rows[r][1] for r in range(1, nrows + 1)]
        inner = [rows[r][0] - 1 for r in range(1, nrows + 1)]
        return SkewShape(Partition(outer), Partition(inner))

    def __str__(self) -> str:
        return "|".join(str(b) for b in self.blocks)


def block_coordinates(bs: BlockShape) -> list[list[Cell]]:
    """Absolute cells of each block, in block order."""
    out = []
    for (row_off, col_off), b in zip(bs._offsets, bs.blocks):
        out.append([(row_off + r, col_off + c) for r, c in b.cells])
    return out


Shape = Partition | SkewShape | BlockShape


def shape_cells(shape: Shape) -> tuple[Cell, ...]:
    return shape.cells


def shape_size(shape: Shape) -> int:
    return shape.n


def parse_partition(text: str) -> Partition:
    """Parse "6,3,3" (empty string is the empty partition)."""
    text = text.strip()
    if not text:
        return Partition()
    return Partition(int(tok) for tok in text.split(","))


def parse_blocks(text: str) -> BlockShape:
    """Parse "3,2|1,1|3"; an empty token is an empty block ("|3,3")."""
    return BlockShape(parse_partition(tok) for tok in text.split("|"))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse-lexicographic order."""
    if n < 0:
        return
    if n == 0:
        yield Partition()
        return
    if max_part is None:
        max_part = n
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + rest.parts)
