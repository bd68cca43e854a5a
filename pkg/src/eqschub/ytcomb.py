"""Pivot subsets, box partitions, Bruhat order, tableaux, fixed-point weights.

Conventions used throughout: for a k-element pivot subset I of {1..n} the
attached partition is lambda_j = (n-k) - i_j + j, so the subset {1..k} carries
the full (n-k)^k box (the point class) and {n-k+1..n} carries the empty
partition (the fundamental class).  Componentwise comparison of subsets then
matches reverse containment of partitions: J <= I iff lambda(J) contains
lambda(I).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .exactalg import EqschubError, LinearForm


class DoesNotFitBox(EqschubError):
    """Partition does not fit inside the k x (n-k) box."""


@dataclass(frozen=True)
class GrassmannianShape:
    """Ambient data for Gr(k, n): k-planes in n-space."""

    n: int
    k: int

    def __post_init__(self):
        if not 1 <= self.k <= self.n - 1:
            raise ValueError(f"need 1 <= k <= n-1, got k={self.k}, n={self.n}")

    @property
    def box_width(self) -> int:
        return self.n - self.k

    @property
    def dimension(self) -> int:
        return self.k * (self.n - self.k)

    def subsets(self) -> list["PivotSubset"]:
        """All pivot subsets in lexicographic order."""
        return [PivotSubset(c) for c in combinations(range(1, self.n + 1), self.k)]

    def partitions(self) -> list["Partition"]:
        """All partitions in the box, sorted by weight then by parts."""
        lams = [subset_to_partition(I, self) for I in self.subsets()]
        return sorted(lams, key=lambda p: (p.weight, p.parts))


@dataclass(frozen=True)
class PivotSubset:
    """A strictly increasing k-tuple of row indices in {1..n}."""

    elements: tuple[int, ...]

    def __post_init__(self):
        elems = tuple(self.elements)
        object.__setattr__(self, "elements", elems)
        if any(not isinstance(i, int) or i < 1 for i in elems):
            raise ValueError(f"pivot entries must be positive integers: {elems}")
        if any(a >= b for a, b in zip(elems, elems[1:])):
            raise ValueError(f"pivot entries must strictly increase: {elems}")

    @classmethod
    def of(cls, it) -> "PivotSubset":
        if isinstance(it, PivotSubset):
            return it
        return cls(tuple(sorted(it)))

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def missing(self, n: int) -> tuple[int, ...]:
        inside = set(self.elements)
        return tuple(j for j in range(1, n + 1) if j not in inside)

    def reflected(self, n: int) -> "PivotSubset":
        """The image under i -> n+1-i."""
        return PivotSubset(tuple(sorted(n + 1 - i for i in self.elements)))

    def __str__(self) -> str:
        return "{" + ",".join(str(i) for i in self.elements) + "}"


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing positive parts; trailing zeros are trimmed."""

    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(self.parts)
        object.__setattr__(self, "parts", parts)
        if any(not isinstance(p, int) or p <= 0 for p in parts):
            raise ValueError(f"parts must be positive integers: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must weakly decrease: {parts}")

    @classmethod
    def of(cls, it) -> "Partition":
        if isinstance(it, Partition):
            return it
        parts = list(it)
        while parts and parts[-1] == 0:
            parts.pop()
        return cls(tuple(parts))

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def padded(self, rows: int) -> tuple[int, ...]:
        return self.parts + (0,) * (rows - len(self.parts))

    def fits(self, shape: GrassmannianShape) -> bool:
        if len(self.parts) > shape.k:
            return False
        return not self.parts or self.parts[0] <= shape.box_width

    def contains(self, other: "Partition") -> bool:
        """Diagram containment: other is a subdiagram of self."""
        if len(other.parts) > len(self.parts):
            return False
        return all(o <= s for o, s in zip(other.parts, self.parts))

    def box_complement(self, shape: GrassmannianShape) -> "Partition":
        """The 180-degree rotated complement inside the k x (n-k) box."""
        if not self.fits(shape):
            raise DoesNotFitBox(f"{self} does not fit in {shape.k} x {shape.box_width}")
        w = shape.box_width
        padded = self.padded(shape.k)
        return Partition.of(w - padded[i] for i in range(shape.k - 1, -1, -1))

    def __str__(self) -> str:
        if not self.parts:
            return "0"
        return ",".join(str(p) for p in self.parts)


@dataclass(frozen=True)
class Tableau:
    """A filling of a partition diagram, one tuple per row."""

    rows: tuple[tuple[int, ...], ...]

    @property
    def shape(self) -> Partition:
        return Partition.of(len(r) for r in self.rows)

    def entry(self, i: int, j: int) -> int:
        """Entry in row i, column j (both 1-indexed)."""
        return self.rows[i - 1][j - 1]

    def row_word(self) -> tuple[int, ...]:
        return tuple(v for row in self.rows for v in row)

    def __str__(self) -> str:
        return "\n".join(" ".join(str(v) for v in row) for row in self.rows)


def as_partition(value) -> Partition:
    return Partition.of(value)


def as_subset(value) -> PivotSubset:
    return PivotSubset.of(value)


def _check_subset(I: PivotSubset, shape: GrassmannianShape) -> PivotSubset:
    I = as_subset(I)
    if len(I.elements) != shape.k:
        raise ValueError(f"{I} is not a {shape.k}-element subset")
    if I.elements and I.elements[-1] > shape.n:
        raise ValueError(f"{I} is not contained in {{1..{shape.n}}}")
    return I


def subset_to_partition(I, shape: GrassmannianShape) -> Partition:
    """The partition whose j-th row has (n-k) - i_j + j boxes."""
    I = _check_subset(I, shape)
    w = shape.box_width
    return Partition.of(w - i + j for j, i in enumerate(I.elements, start=1))


def partition_to_subset(lam, shape: GrassmannianShape) -> PivotSubset:
    """Inverse of subset_to_partition: i_j = (n-k) + j - lambda_j."""
    lam = as_partition(lam)
    if not lam.fits(shape):
        raise DoesNotFitBox(f"{lam} does not fit in {shape.k} x {shape.box_width}")
    w = shape.box_width
    padded = lam.padded(shape.k)
    return PivotSubset(tuple(w + j - padded[j - 1] for j in range(1, shape.k + 1)))


def bruhat_leq(J, I) -> bool:
    """Componentwise comparison j_1 <= i_1, ..., j_k <= i_k."""
    J = as_subset(J)
    I = as_subset(I)
    if len(J.elements) != len(I.elements):
        raise ValueError("subsets must have the same size")
    return all(a <= b for a, b in zip(J.elements, I.elements))


def ssyt_enumerate(lam, k: int) -> list[Tableau]:
    """All semistandard tableaux of the given shape with entries in {1..k}.

    Rows weakly increase, columns strictly increase.  The list comes out in
    lexicographic order of the row-reading word.
    """
    lam = as_partition(lam)
    if k < 0:
        raise ValueError("entry bound must be nonnegative")
    parts = lam.parts
    if not parts:
        return [Tableau(())]
    grid = [[0] * width for width in parts]
    boxes = [(i, j) for i, width in enumerate(parts) for j in range(width)]
    out: list[Tableau] = []

    def fill(pos: int):
        if pos == len(boxes):
            out.append(Tableau(tuple(tuple(row) for row in grid)))
            return
        i, j = boxes[pos]
        lo = 1
        if j > 0:
            lo = grid[i][j - 1]
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for v in range(lo, k + 1):
            grid[i][j] = v
            fill(pos + 1)
        grid[i][j] = 0

    fill(0)
    return out


def tangent_weights(I, shape: GrassmannianShape) -> list[LinearForm]:
    """Weights t_j - t_i at the fixed point, for i inside and j outside I."""
    I = _check_subset(I, shape)
    outside = I.missing(shape.n)
    return [LinearForm.weight(j, i) for i in I.elements for j in outside]


def cell_weights(I, shape: GrassmannianShape) -> list[LinearForm]:
    """The tangent weights t_j - t_i with i > j (along the cell)."""
    I = _check_subset(I, shape)
    outside = I.missing(shape.n)
    return [LinearForm.weight(j, i) for i in I.elements for j in outside if i > j]


def normal_weights(I, shape: GrassmannianShape) -> list[LinearForm]:
    """The tangent weights t_j - t_i with i < j (normal to the cell closure)."""
    I = _check_subset(I, shape)
    outside = I.missing(shape.n)
    return [LinearForm.weight(j, i) for i in I.elements for j in outside if i < j]
