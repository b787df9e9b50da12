"""Core data model: colourings of K_n, monochromatic paths, path covers.

Vertices are the integers 1..n.  A colouring assigns every unordered pair
{u, v} one of two colours, red or blue.  Internally the colouring keeps one
integer bitmask per vertex and per colour (bit i set means vertex i+1 is a
neighbour in that colour), which makes common-neighbour queries single AND
operations and keeps induced-subgraph extraction cheap.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Sequence


class MonopathError(Exception):
    """Base class for all package errors."""


class InvalidEdge(MonopathError):
    """Raised when an edge query names a loop or an out-of-range vertex."""


class GuardFailed(MonopathError):
    """Raised when a construction cannot certify its target bound."""


class Colour(enum.Enum):
    RED = "R"
    BLUE = "B"

    @property
    def complement(self) -> "Colour":
        return Colour.BLUE if self is Colour.RED else Colour.RED

    def __repr__(self) -> str:  # keeps reprs short in traces
        return self.name


RED = Colour.RED
BLUE = Colour.BLUE


def iter_edges(n: int) -> Iterator[tuple[int, int]]:
    """Edges of K_n in row-major order: (1,2), (1,3), ..., (1,n), (2,3), ..."""
    for u in range(1, n + 1):
        for v in range(u + 1, n + 1):
            yield (u, v)


def edge_count(n: int) -> int:
    return n * (n - 1) // 2


def _bit(v: int) -> int:
    # vertex v <-> bit v-1
    return 1 << (v - 1)


class Colouring:
    """A 2-edge-colouring of the complete graph on vertices 1..n.

    Immutable by convention: all mutating-style operations return a new
    instance.  Equality and hashing look at (n, red adjacency) only, since
    the blue masks are determined.
    """

    __slots__ = ("n", "_red", "_blue")

    def __init__(self, n: int, red_masks: Sequence[int]):
        if n < 1:
            raise ValueError(f"need n >= 1, got {n}")
        if len(red_masks) != n:
            raise ValueError(f"expected {n} masks, got {len(red_masks)}")
        full = (1 << n) - 1
        self.n = n
        self._red = tuple(red_masks)
        self._blue = tuple((full & ~m & ~_bit(v + 1)) for v, m in enumerate(red_masks))
        for v in range(1, n + 1):
            m = self._red[v - 1]
            if m & _bit(v):
                raise ValueError(f"vertex {v}: red mask contains a loop")
            if m & ~full:
                raise ValueError(f"vertex {v}: red mask exceeds vertex range")
        for u, v in iter_edges(n):
            if bool(self._red[u - 1] & _bit(v)) != bool(self._red[v - 1] & _bit(u)):
                raise ValueError(f"asymmetric red adjacency at ({u}, {v})")

    @classmethod
    def _trusted(cls, n: int, red_masks: Sequence[int]) -> "Colouring":
        # constructors that build symmetric loop-free masks skip revalidation;
        # anything user-supplied must go through __init__
        self = object.__new__(cls)
        full = (1 << n) - 1
        self.n = n
        self._red = tuple(red_masks)
        self._blue = tuple((full & ~m & ~_bit(v + 1)) for v, m in enumerate(self._red))
        return self

    @classmethod
    def from_edge_bits(cls, n: int, red_bits: Iterable[bool]) -> "Colouring":
        """Build from booleans in iter_edges order (True = red)."""
        if n < 1:
            raise ValueError(f"need n >= 1, got {n}")
        bits = list(red_bits)
        if len(bits) != edge_count(n):
            raise ValueError(f"expected {edge_count(n)} edge bits, got {len(bits)}")
        # bytearray rows instead of int |= per edge: growing-int churn is
        # quadratic in n per row and dominates everything at n in the thousands
        rows = [bytearray((n + 7) >> 3) for _ in range(n)]
        i = 0
        for u in range(1, n + 1):
            ub_idx, ub_bit = (u - 1) >> 3, 1 << ((u - 1) & 7)
            row_u = rows[u - 1]
            for v in range(u + 1, n + 1):
                if bits[i]:
                    row_u[(v - 1) >> 3] |= 1 << ((v - 1) & 7)
                    rows[v - 1][ub_idx] |= ub_bit
                i += 1
        return cls._trusted(n, [int.from_bytes(r, "little") for r in rows])

    @classmethod
    def from_function(cls, n: int, fn: Callable[[int, int], Colour]) -> "Colouring":
        return cls.from_edge_bits(n, (fn(u, v) is RED for u, v in iter_edges(n)))

    @classmethod
    def monochromatic(cls, n: int, colour: Colour) -> "Colouring":
        if n < 1:
            raise ValueError(f"need n >= 1, got {n}")
        full = (1 << n) - 1
        if colour is RED:
            return cls._trusted(n, [full & ~_bit(v) for v in range(1, n + 1)])
        return cls._trusted(n, [0] * n)

    def colour(self, u: int, v: int) -> Colour:
        if u == v:
            raise InvalidEdge(f"loop at vertex {u}")
        for w in (u, v):
            if not 1 <= w <= self.n:
                raise InvalidEdge(f"vertex {w} outside 1..{self.n}")
        return RED if self._red[u - 1] & _bit(v) else BLUE

    def mask(self, v: int, colour: Colour) -> int:
        """Neighbourhood of v in the given colour, as a bitmask."""
        if not 1 <= v <= self.n:
            raise InvalidEdge(f"vertex {v} outside 1..{self.n}")
        return self._red[v - 1] if colour is RED else self._blue[v - 1]

    def degree(self, v: int, colour: Colour) -> int:
        return self.mask(v, colour).bit_count()

    def flipped(self) -> "Colouring":
        """The colouring with red and blue exchanged."""
        return Colouring._trusted(self.n, self._blue)

    def with_edge(self, u: int, v: int, colour: Colour) -> "Colouring":
        """A copy with one edge recoloured."""
        self.colour(u, v)  # validates the pair
        masks = list(self._red)
        if colour is RED:
            masks[u - 1] |= _bit(v)
            masks[v - 1] |= _bit(u)
        else:
            masks[u - 1] &= ~_bit(v)
            masks[v - 1] &= ~_bit(u)
        return Colouring._trusted(self.n, masks)

    def induced(self, keep: Iterable[int]) -> tuple["Colouring", dict[int, int]]:
        """Induced sub-colouring on `keep`, relabelled 1..k in sorted order.

        Returns the new colouring and the map new-label -> old-label.
        """
        old = sorted(set(keep))
        if not old:
            raise ValueError("cannot induce on an empty vertex set")
        for v in old:
            if not 1 <= v <= self.n:
                raise InvalidEdge(f"vertex {v} outside 1..{self.n}")
        masks = []
        for v in old:
            m, packed = self._red[v - 1], 0
            for i, w in enumerate(old):
                if m & _bit(w):
                    packed |= 1 << i
            masks.append(packed)
        sub = Colouring._trusted(len(old), masks)
        return sub, {i + 1: v for i, v in enumerate(old)}

    def edge_bits(self) -> list[bool]:
        return [self._red[u - 1] & _bit(v) != 0 for u, v in iter_edges(self.n)]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Colouring):
            return NotImplemented
        return self.n == other.n and self._red == other._red

    def __hash__(self) -> int:
        return hash((self.n, self._red))

    def __repr__(self) -> str:
        return f"Colouring(n={self.n})"


def colour_of(g: Colouring, u: int, v: int) -> Colour:
    return g.colour(u, v)


@dataclass(frozen=True)
class Path:
    """A vertex-sequence path carrying a colour label.

    A single vertex is a path of length 0; the empty path is permitted as a
    degenerate value but never appears in a valid cover.
    """

    vertices: tuple[int, ...]
    colour: Colour

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))

    @property
    def length(self) -> int:
        """Edge count."""
        return max(0, len(self.vertices) - 1)

    def reversed(self) -> "Path":
        return Path(self.vertices[::-1], self.colour)

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class PathCover:
    """A family of paths, all labelled with one colour, over vertices 1..n."""

    colour: Colour
    paths: tuple[Path, ...]
    n: int

    def __post_init__(self):
        object.__setattr__(self, "paths", tuple(self.paths))

    @property
    def size(self) -> int:
        return len(self.paths)


class FailureKind(enum.Enum):
    NONE = "None"
    MISSING_VERTEX = "MissingVertex"
    DUPLICATE_VERTEX_IN_PATH = "DuplicateVertexInPath"
    WRONG_COLOUR_EDGE = "WrongColourEdge"
    COLOUR_MISMATCH_ACROSS_PATHS = "ColourMismatchAcrossPaths"
    OUT_OF_RANGE_VERTEX = "OutOfRangeVertex"


@dataclass(frozen=True)
class CoverReport:
    valid: bool
    failure_kind: FailureKind = FailureKind.NONE
    detail: object = None


def validate_cover(g: Colouring, cover: PathCover) -> CoverReport:
    """Check that `cover` is a valid same-colour path cover of g.

    Paths may share vertices; only repetition inside one path is illegal.
    Scan order is deterministic: paths in cover order; within a path the
    colour label is checked first, then vertices in sequence order (range,
    duplication, then the edge arriving at that vertex).  Coverage of all of
    1..n is checked last, reporting the lowest missing vertex.
    """
    covered: set[int] = set()
    for idx, p in enumerate(cover.paths):
        if p.colour is not cover.colour:
            return CoverReport(False, FailureKind.COLOUR_MISMATCH_ACROSS_PATHS, idx)
        in_path: set[int] = set()
        prev: int | None = None
        for v in p.vertices:
            if not 1 <= v <= g.n:
                return CoverReport(False, FailureKind.OUT_OF_RANGE_VERTEX, v)
            if v in in_path:
                return CoverReport(False, FailureKind.DUPLICATE_VERTEX_IN_PATH, v)
            in_path.add(v)
            if prev is not None and g.colour(prev, v) is not cover.colour:
                return CoverReport(False, FailureKind.WRONG_COLOUR_EDGE, (prev, v))
            prev = v
        covered |= in_path
    for v in range(1, g.n + 1):
        if v not in covered:
            return CoverReport(False, FailureKind.MISSING_VERTEX, v)
    return CoverReport(True)
