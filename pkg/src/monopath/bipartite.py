"""Bipartite path machinery.

Three constructions drive everything downstream: an alternating path
covering all of Y under a mean-degree condition, an iterated stripping of
such paths that covers Y and most of X, and a full cover of X and Y by at
most ceil(|X|/(|Y|+1)) paths under a degree-class condition.  A bipartite
path Ramsey routine rounds out the set.

Paths in a cover may share vertices, and the full-cover construction relies
on that: Y is kept whole while X shrinks, so later paths revisit Y.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .core import BLUE, RED, Colour, Colouring, MonopathError, Path


class EmptyY(MonopathError):
    pass


class SidesTooSmall(MonopathError):
    pass


class EqualLengths(MonopathError):
    pass


class CannotCertify(MonopathError):
    """Neither target length was certified and exact search is infeasible."""


class PreconditionViolated(MonopathError):
    def __init__(self, condition: str, witness=None):
        self.condition = condition
        self.witness = witness
        msg = condition if witness is None else f"{condition} (witness: {witness})"
        super().__init__(msg)


@dataclass(frozen=True, eq=False)
class BipartiteView:
    """One colour class of the edges between two disjoint vertex sets.

    `adjacency[y]` is the subset of X joined to y in the chosen colour.
    Pairs absent from the adjacency are implicitly the opposite colour, which
    is what ramsey_path reads.  `m` is the slack parameter of the stripping
    decomposition and is ignored by the other operations.
    """

    X: tuple[int, ...]
    Y: tuple[int, ...]
    adjacency: Mapping[int, frozenset[int]]
    m: int = 0
    colour: Colour = RED

    def __post_init__(self):
        xs = tuple(sorted(set(self.X)))
        ys = tuple(sorted(set(self.Y)))
        if set(xs) & set(ys):
            raise ValueError("X and Y must be disjoint")
        if self.m < 0:
            raise ValueError("m must be non-negative")
        adj = {}
        for y in ys:
            nbrs = frozenset(self.adjacency.get(y, frozenset()))
            if not nbrs <= set(xs):
                raise ValueError(f"adjacency of {y} leaves X")
            adj[y] = nbrs
        extra = set(self.adjacency) - set(ys)
        if extra:
            raise ValueError(f"adjacency keyed by non-Y vertices: {sorted(extra)}")
        object.__setattr__(self, "X", xs)
        object.__setattr__(self, "Y", ys)
        object.__setattr__(self, "adjacency", adj)

    @classmethod
    def from_colouring(
        cls,
        g: Colouring,
        xs: Iterable[int],
        ys: Iterable[int],
        colour: Colour = RED,
        m: int = 0,
    ) -> "BipartiteView":
        xs = sorted(set(xs))
        ys = sorted(set(ys))
        xmask = 0
        for x in xs:
            xmask |= 1 << (x - 1)
        adj = {}
        for y in ys:
            mm = g.mask(y, colour) & xmask
            adj[y] = frozenset(_bits(mm))
        return cls(tuple(xs), tuple(ys), adj, m=m, colour=colour)

    def degree(self, y: int) -> int:
        return len(self.adjacency[y])

    def restrict_x(self, keep: Iterable[int]) -> "BipartiteView":
        alive = set(keep)
        return BipartiteView(
            tuple(sorted(alive)),
            self.Y,
            {y: self.adjacency[y] & alive for y in self.Y},
            m=self.m,
            colour=self.colour,
        )


def _bits(mask: int):
    while mask:
        b = mask & -mask
        yield b.bit_length()
        mask ^= b


@dataclass(frozen=True)
class DegreeClasses:
    x0: tuple[int, ...]
    x1: tuple[int, ...]
    y0: tuple[int, ...]
    y1: tuple[int, ...]

    @classmethod
    def from_view(cls, v: BipartiteView) -> "DegreeClasses":
        ny = len(v.Y)
        xdeg = {x: 0 for x in v.X}
        for y in v.Y:
            for x in v.adjacency[y]:
                xdeg[x] += 1
        x0 = tuple(x for x in v.X if xdeg[x] == ny)
        x1 = tuple(x for x in v.X if xdeg[x] != ny)
        nx = len(v.X)
        y0 = tuple(y for y in v.Y if len(v.adjacency[y]) == nx)
        y1 = tuple(y for y in v.Y if len(v.adjacency[y]) != nx)
        return cls(x0, x1, y0, y1)


@dataclass(frozen=True)
class RamseyOutcome:
    colour: Colour
    path: Path


def long_path(v: BipartiteView) -> Path:
    """An alternating path on exactly 2|Y| vertices covering all of Y.

    Requires 2*deg(y) >= |X| + |Y| for every y (exact comparison).  Built
    x1 y1 x2 y2 ... by taking, before each y after the first, the lowest
    unused common neighbour of it and its predecessor; the degree condition
    leaves at least |Y| - i choices at step i, so the pool is never empty.
    """
    if not v.Y:
        raise EmptyY("Y is empty")
    total = len(v.X) + len(v.Y)
    for y in v.Y:
        if 2 * v.degree(y) < total:
            raise PreconditionViolated("2*deg(y) >= |X| + |Y|", witness=y)
    used: set[int] = set()
    verts: list[int] = []
    prev = None
    for y in v.Y:
        pool = v.adjacency[y] if prev is None else v.adjacency[prev] & v.adjacency[y]
        pool = pool - used
        assert pool, "degree bound guarantees a fresh common neighbour"
        x = min(pool)
        used.add(x)
        verts.append(x)
        verts.append(y)
        prev = y
    return Path(tuple(verts), v.colour)


def decompose(v: BipartiteView) -> tuple[Path, ...]:
    """Strip alternating paths until at most |Y| + 2m X-vertices remain.

    Requires |X| >= |Y| + 2m and deg(y) >= |X| - m for every y.  Each pass
    covers all of Y and removes exactly |Y| X-vertices, so at most
    floor(|X|/|Y|) paths are produced.
    """
    if not v.Y:
        raise PreconditionViolated("Y nonempty")
    if len(v.X) < len(v.Y) + 2 * v.m:
        raise PreconditionViolated("|X| >= |Y| + 2m")
    floor_deg = len(v.X) - v.m
    for y in v.Y:
        if v.degree(y) < floor_deg:
            raise PreconditionViolated("deg(y) >= |X| - m", witness=y)
    paths: list[Path] = []
    alive = set(v.X)
    limit = len(v.Y) + 2 * v.m
    while len(alive) > limit:
        p = long_path(v.restrict_x(alive))
        paths.append(p)
        alive -= set(p.vertices)
    return tuple(paths)


def _interleave_xy(xs: list[int], ys: list[int], colour: Colour) -> Path:
    # x1 y1 x2 y2 ... xk with len(ys) == len(xs) - 1
    assert len(ys) == len(xs) - 1
    verts: list[int] = []
    for i, x in enumerate(xs):
        verts.append(x)
        if i < len(ys):
            verts.append(ys[i])
    return Path(tuple(verts), colour)


def _complete_chunks(
    xs: list[int], ys: list[int], colour: Colour, cover_y: bool
) -> list[Path]:
    """Cover xs (and ys, if asked) of a complete bipartite graph with
    ceil(|xs|/(|ys|+1)) paths; chunks after the first reuse the lowest ys."""
    step = len(ys) + 1
    out: list[Path] = []
    for i in range(0, len(xs), step):
        chunk = xs[i : i + step]
        if cover_y and i == 0:
            # first chunk is full (caller guarantees |xs| > |ys|) and
            # threads every y exactly once
            assert len(chunk) == step
            out.append(_interleave_xy(chunk, ys, colour))
        else:
            out.append(_interleave_xy(chunk, ys[: len(chunk) - 1], colour))
    return out


def decompose_full(v: BipartiteView) -> tuple[Path, ...]:
    """Cover all of X and Y with at most ceil(|X|/(|Y|+1)) paths.

    Needs (i) |X| > |Y| and (ii) X1 = Y1 = 0, or |X0|*|Y0| > 2*|X1|*|Y1|
    with Y0 nonempty (cross-multiplied to dodge the empty-class quotients).

    Each round builds P through X0 and all of Y1, then Q through all of Y0,
    preferring X1-vertices and topping up from X0 so the concatenation
    always retires exactly |Y| + 1 X-vertices; that exact count is what
    makes the ceiling bound close under the recursion.
    """
    if not v.X and not v.Y:
        raise PreconditionViolated("nonempty")
    if len(v.X) <= len(v.Y):
        raise PreconditionViolated("(i) |X| > |Y|")
    cl = DegreeClasses.from_view(v)
    if cl.x1 or cl.y1:
        if not cl.y0:
            raise PreconditionViolated("(ii) |X0|*|Y0| > 2*|X1|*|Y1|")
        if len(cl.x0) * len(cl.y0) <= 2 * len(cl.x1) * len(cl.y1):
            raise PreconditionViolated("(ii) |X0|*|Y0| > 2*|X1|*|Y1|")

    ys = list(v.Y)
    x0_all = set(cl.x0)  # x-classes are fixed: Y never shrinks
    adj = v.adjacency
    paths: list[Path] = []
    alive = set(v.X)
    cover_y = True
    while alive:
        x0a = sorted(alive & x0_all)
        x1a = sorted(alive - x0_all)
        if not x1a:
            # every remaining x sees all of Y: plain chunking finishes
            paths.extend(_complete_chunks(sorted(alive), ys, v.colour, cover_y))
            return tuple(paths)
        y0a = [y for y in ys if alive <= adj[y]]
        y1a = [y for y in ys if not alive <= adj[y]]
        assert y0a and y1a, "deficient x forces a deficient y and vice versa"
        assert len(x0a) >= len(y1a) + 1, "(i)+(ii) guarantee enough full-degree x"

        p_xs = x0a[: len(y1a) + 1]
        q_from_x1 = x1a[: min(len(y0a), len(x1a))]
        spare = [x for x in x0a if x not in set(p_xs)]
        q_xs = q_from_x1 + spare[: len(y0a) - len(q_from_x1)]
        assert len(q_xs) == len(y0a)
        r_verts = list(_interleave_xy(p_xs, y1a, v.colour).vertices)
        for y, x in zip(y0a, q_xs):
            r_verts.append(y)
            r_verts.append(x)
        paths.append(Path(tuple(r_verts), v.colour))
        alive -= set(p_xs) | set(q_xs)
        cover_y = False  # R covered all of Y

        if not alive:
            return tuple(paths)
        x1_next = sorted(alive - x0_all)
        if not x1_next or len(alive) > len(ys):
            continue  # complete finish or recursion, both handled above
        # |X'| <= |Y| with a deficient x left: close with one more path
        y0n = [y for y in ys if alive <= adj[y]]
        x0n = sorted(alive & x0_all)
        assert len(y0n) > len(x1_next) and x0n
        q2_ys = y0n[: len(x1_next) + 1]
        q2: list[int] = []
        for i, x in enumerate(x1_next):
            q2.append(q2_ys[i])
            q2.append(x)
        q2.append(q2_ys[-1])
        taken = set(q2_ys)
        p2_ys = [y for y in ys if y not in taken][: len(x0n) - 1]
        r2 = list(_interleave_xy(x0n, p2_ys, v.colour).vertices) + q2
        paths.append(Path(tuple(r2), v.colour))
        return tuple(paths)
    return tuple(paths)


# --- bipartite path Ramsey -------------------------------------------------

RAMSEY_EXACT_THRESHOLD = 14


def _vertex_masks(v: BipartiteView) -> tuple[dict[int, int], dict[int, int]]:
    """Per-vertex partner masks in view colour and its complement."""
    xmask = 0
    for x in v.X:
        xmask |= 1 << (x - 1)
    ymask = 0
    for y in v.Y:
        ymask |= 1 << (y - 1)
    main: dict[int, int] = {x: 0 for x in v.X}
    for y in v.Y:
        my = 0
        for x in v.adjacency[y]:
            my |= 1 << (x - 1)
            main[x] |= 1 << (y - 1)
        main[y] = my
    other = {}
    for x in v.X:
        other[x] = ymask & ~main[x]
    for y in v.Y:
        other[y] = xmask & ~main[y]
    return main, other


def _grow_rotate(adj: dict[int, int], start: int) -> list[int]:
    """Grow a path greedily from `start`, with lookahead rotations.

    A rotation is applied only when the resulting new endpoint can extend
    immediately, so the path never stops growing until genuinely stuck at
    both ends.
    """
    path = [start]
    used = 1 << (start - 1)
    flipped_once = False
    while True:
        tail = path[-1]
        cand = adj[tail] & ~used
        if cand:
            w = (cand & -cand).bit_length()
            path.append(w)
            used |= 1 << (w - 1)
            flipped_once = False
            continue
        rotated = False
        on_path = adj[tail] & used
        for i in range(len(path) - 2):
            if not on_path & (1 << (path[i] - 1)):
                continue
            pivot = path[i + 1]
            if adj[pivot] & ~used:
                path = path[: i + 1] + path[i + 1 :][::-1]
                rotated = True
                break
        if rotated:
            continue
        if not flipped_once:
            path.reverse()
            flipped_once = True
            continue
        return path


def _best_greedy(adj: dict[int, int], verts: list[int]) -> list[int]:
    starts = [v for v in verts if adj[v]]
    if not starts:
        return [verts[0]] if verts else []
    return _grow_rotate(adj, starts[0])


def _exact_path(
    adj: dict[int, int], verts: list[int], target_edges: int
) -> list[int] | None:
    """A path with exactly target_edges edges, or None if none exists.

    Depth-first with early exit; failed (endpoint, visited) states are
    memoised, which keeps the search tractable on the small sides this is
    meant for.
    """
    if target_edges <= 0:
        return [verts[0]] if verts else None
    dead: set[tuple[int, int]] = set()
    stack: list[int] = []

    def dfs(last: int, mask: int, edges: int) -> bool:
        if edges == target_edges:
            return True
        key = (last, mask)
        if key in dead:
            return False
        cand = adj[last] & ~mask
        while cand:
            b = cand & -cand
            cand ^= b
            w = b.bit_length()
            stack.append(w)
            if dfs(w, mask | b, edges + 1):
                return True
            stack.pop()
        dead.add(key)
        return False

    for s in verts:
        stack.append(s)
        if dfs(s, 1 << (s - 1), 0):
            return list(stack)
        stack.pop()
    return None


def ramsey_path(
    v: BipartiteView, k: int, l: int, *, exact_threshold: int = RAMSEY_EXACT_THRESHOLD
) -> RamseyOutcome:
    """A view-colour path with >= k edges or a complement path with >= l.

    The view is read as a complete bipartite graph: listed pairs carry the
    view colour, missing pairs the complement.  Requires k != l and both
    sides at least ceil((k+l)/2); under those hypotheses one of the two
    targets always exists.

    Small instances (both sides <= exact_threshold) are solved by exact
    search.  Larger ones try greedy grow-and-rotate on both colours first;
    exact search above the threshold is not feasible, so if the greedy pass
    certifies neither target, CannotCertify is raised for the caller to
    handle.
    """
    if k == l:
        raise EqualLengths(f"k = l = {k}")
    need = -(-(k + l) // 2)
    if min(len(v.X), len(v.Y)) < need:
        raise SidesTooSmall(
            f"sides ({len(v.X)}, {len(v.Y)}) below ceil((k+l)/2) = {need}"
        )
    main_adj, other_adj = _vertex_masks(v)
    verts = sorted(v.X + v.Y)
    small = max(len(v.X), len(v.Y)) <= exact_threshold
    main_colour = v.colour
    other_colour = v.colour.complement

    if not small:
        gm = _best_greedy(main_adj, verts)
        if len(gm) - 1 >= k:
            return RamseyOutcome(main_colour, Path(tuple(gm), main_colour))
        go = _best_greedy(other_adj, verts)
        if len(go) - 1 >= l:
            return RamseyOutcome(other_colour, Path(tuple(go), other_colour))
        raise CannotCertify(
            f"greedy paths reached {len(gm) - 1}/{k} and {len(go) - 1}/{l} edges"
        )

    # exact regime: search the colour closer to its target first
    gm = _best_greedy(main_adj, verts)
    go = _best_greedy(other_adj, verts)
    if len(gm) - 1 >= k:
        return RamseyOutcome(main_colour, Path(tuple(gm), main_colour))
    if len(go) - 1 >= l:
        return RamseyOutcome(other_colour, Path(tuple(go), other_colour))
    deficit_main = (k - (len(gm) - 1)) / k if k > 0 else 0.0
    deficit_other = (l - (len(go) - 1)) / l if l > 0 else 0.0
    order = [(main_adj, k, main_colour), (other_adj, l, other_colour)]
    if deficit_other < deficit_main:
        order.reverse()
    for adj, target, colour in order:
        found = _exact_path(adj, verts, target)
        if found is not None:
            return RamseyOutcome(colour, Path(tuple(found), colour))
    raise RuntimeError("no path of either target length; hypothesis violated")
