"""Whole-graph constructions: the two-path cover, the extension/rotation
engine standing in for "longest path", and the long-path structure finder.

The structure finder returns one of two certificates: a near-spanning path
whose outside vertices all have small same-colour degree into it, or a
reduction witness (a vertex set coverable by few paths of both colours).
Everything runs internally with the long path relabelled blue; outputs are
mapped back before returning.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import arith
from .bipartite import BipartiteView, PreconditionViolated, decompose, ramsey_path
from .bipartite import CannotCertify, EqualLengths, SidesTooSmall
from .core import BLUE, RED, Colour, Colouring, GuardFailed, Path


@dataclass(frozen=True)
class TwoPathCover:
    red: Path
    blue: Path


def two_path_cover(g: Colouring) -> TwoPathCover:
    """A red path and a blue path, vertex-disjoint, covering all of [n].

    Classical incremental insertion: each new vertex either extends one of
    the two paths at its active endpoint, or the endpoint edge between the
    paths lets one endpoint migrate so the new vertex fits.
    """
    red: list[int] = []
    blue: list[int] = []
    for v in range(1, g.n + 1):
        if red and g.colour(red[-1], v) is RED:
            red.append(v)
        elif blue and g.colour(blue[-1], v) is BLUE:
            blue.append(v)
        elif not red:
            red.append(v)
        elif not blue:
            blue.append(v)
        else:
            x, y = red[-1], blue[-1]
            # here xv is blue and yv is red, so the xy edge decides
            if g.colour(x, y) is RED:
                blue.pop()
                red.append(y)
                red.append(v)
            else:
                red.pop()
                blue.append(x)
                blue.append(v)
    return TwoPathCover(Path(tuple(red), RED), Path(tuple(blue), BLUE))


def maximal_path(g: Colouring, gamma: Colour, seed_path: Path | None = None) -> Path:
    """Extend a path at both ends until no same-colour edge leaves it."""
    if seed_path is not None and len(seed_path.vertices) > 0:
        verts = list(seed_path.vertices)
    else:
        verts = [1]
    used = 0
    for v in verts:
        used |= 1 << (v - 1)
    grown = True
    while grown:
        grown = False
        cand = g.mask(verts[-1], gamma) & ~used
        if cand:
            w = (cand & -cand).bit_length()
            verts.append(w)
            used |= 1 << (w - 1)
            grown = True
            continue
        cand = g.mask(verts[0], gamma) & ~used
        if cand:
            w = (cand & -cand).bit_length()
            verts.insert(0, w)
            used |= 1 << (w - 1)
            grown = True
    return Path(tuple(verts), gamma)


@dataclass(frozen=True)
class LongerPath:
    path: Path


@dataclass(frozen=True)
class RedCliqueCertificate:
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class SmallDegree:
    degree: int


def rotate_or_extend(
    g: Colouring, path: Path, y: int, degree_bound: int | float | None = None
):
    """One step of the rotation argument for an outside vertex y.

    With B the same-colour neighbours of y on the path: an endpoint in B or
    two consecutive members extend the path directly; a same-colour chord
    between two predecessors of B allows the detour surgery.  Failing all
    that, the predecessors form an opposite-colour clique, returned as a
    certificate when |B| exceeds degree_bound, else SmallDegree(|B|).
    """
    p = list(path.vertices)
    gamma = path.colour
    if y in set(p):
        raise ValueError(f"{y} already on the path")
    pm = 0
    for v in p:
        pm |= 1 << (v - 1)
    bmask = g.mask(y, gamma) & pm
    if not bmask:
        return SmallDegree(0)
    if bmask & (1 << (p[0] - 1)):
        return LongerPath(Path((y, *p), gamma))
    if bmask & (1 << (p[-1] - 1)):
        return LongerPath(Path((*p, y), gamma))
    pos = {v: i for i, v in enumerate(p)}
    bpos = sorted(pos[b.bit_length()] for b in _single_bits(bmask))
    for a, b in zip(bpos, bpos[1:]):
        if b == a + 1:
            return LongerPath(Path((*p[: a + 1], y, *p[a + 1 :]), gamma))
    preds = [i - 1 for i in bpos]
    for ai in range(len(preds)):
        pa = p[preds[ai]]
        for bi in range(ai + 1, len(preds)):
            if g.colour(pa, p[preds[bi]]) is gamma:
                i, j = preds[ai], preds[bi]
                verts = (*p[: i + 1], *p[i + 1 : j + 1][::-1], y, *p[j + 1 :])
                return LongerPath(Path(verts, gamma))
    if degree_bound is not None and len(bpos) > degree_bound:
        return RedCliqueCertificate(tuple(sorted(p[i] for i in preds)))
    return SmallDegree(len(bpos))


def _single_bits(mask: int):
    while mask:
        b = mask & -mask
        yield b
        mask ^= b


def refine_path(
    g: Colouring, gamma: Colour, seed_path: Path | None = None, bound=None
):
    """Grow and rotate until every outside vertex is a dead end.

    Returns (path, outcome) where outcome is a RedCliqueCertificate or, when
    all outside vertices come back SmallDegree, a dict of their degrees.
    """
    p = maximal_path(g, gamma, seed_path)
    while True:
        used = set(p.vertices)
        degs: dict[int, int] = {}
        improved = False
        for y in range(1, g.n + 1):
            if y in used:
                continue
            res = rotate_or_extend(g, p, y, bound)
            if isinstance(res, LongerPath):
                p = maximal_path(g, gamma, res.path)
                improved = True
                break
            if isinstance(res, RedCliqueCertificate):
                return p, res
            degs[y] = res.degree
        if not improved:
            return p, degs


@dataclass(frozen=True)
class LongPathStructure:
    path: Path
    gamma: Colour
    Y: tuple[int, ...]
    degree_bound: float
    y_degrees: dict[int, int]


@dataclass(frozen=True)
class ReductionWitness:
    S: tuple[int, ...]
    red_paths: tuple[Path, ...]
    blue_paths: tuple[Path, ...]

    @property
    def k(self) -> int:
        return max(len(self.red_paths), len(self.blue_paths))


def _greedy_bipartite_path(g: Colouring, colour: Colour, a_side, b_side) -> list[int]:
    """Greedy grow-and-rotate path probe restricted to edges between the sides."""
    amask = bmask = 0
    for v in a_side:
        amask |= 1 << (v - 1)
    for v in b_side:
        bmask |= 1 << (v - 1)
    adj = {}
    for v in a_side:
        adj[v] = g.mask(v, colour) & bmask
    for v in b_side:
        adj[v] = g.mask(v, colour) & amask
    verts = sorted(adj)
    starts = [v for v in verts if adj[v]]
    if not starts:
        return [verts[0]] if verts else []
    path = [starts[0]]
    used = 1 << (starts[0] - 1)
    flipped = False
    while True:
        cand = adj[path[-1]] & ~used
        if cand:
            w = (cand & -cand).bit_length()
            path.append(w)
            used |= 1 << (w - 1)
            flipped = False
            continue
        on_path = adj[path[-1]] & used
        rotated = False
        for i in range(len(path) - 2):
            if on_path & (1 << (path[i] - 1)) and adj[path[i + 1]] & ~used:
                path = path[: i + 1] + path[i + 1 :][::-1]
                rotated = True
                break
        if rotated:
            continue
        if not flipped:
            path.reverse()
            flipped = True
            continue
        return path


def find_long_path_structure(g: Colouring, c1: float, c2: float):
    """Run the long-path pipeline; return LongPathStructure or ReductionWitness.

    Raises GuardFailed when no branch can close its arithmetic (small n with
    large constants); callers fall back to unconditional strategies.
    """
    n = g.n
    dp = Fraction(c1) - Fraction(c2) + 1  # the recurring C1 - C2 + 1 factor
    if dp < 1:
        raise ValueError("need c1 >= c2")
    bound_float = float(2 * dp) * n ** 0.5

    tpc = two_path_cover(g)
    if len(tpc.blue.vertices) >= len(tpc.red.vertices):
        base, flipped = tpc.blue, False
        g2 = g
    else:
        base, flipped = tpc.red, True
        g2 = g.flipped()
    # from here the working colouring g2 has a blue path >= floor(n/2)

    def structure(path: Path, y_degs: dict[int, int]) -> LongPathStructure:
        gamma = RED if flipped else BLUE
        outside = tuple(sorted(set(range(1, n + 1)) - set(path.vertices)))
        return LongPathStructure(
            Path(path.vertices, gamma), gamma, outside, bound_float, dict(y_degs)
        )

    def witness(s, red2, blue2) -> ReductionWitness:
        if flipped:
            red2, blue2 = blue2, red2
        return ReductionWitness(
            tuple(sorted(s)),
            tuple(Path(p.vertices, RED) for p in red2),
            tuple(Path(p.vertices, BLUE) for p in blue2),
        )

    if len(base.vertices) == n:
        return structure(Path(base.vertices, BLUE), {})

    half = n // 2
    q = base.vertices[:half]
    qset = set(q)
    w = [v for v in range(1, n + 1) if v not in qset][:half]
    t = arith.ceil_of_coeff_sqrt(2 * dp, n)  # witness size target

    probe = _greedy_bipartite_path(g2, RED, q, w)
    s = sorted(set(probe) & qset)
    if len(s) >= t and len(probe) > 1:
        return witness(s, [Path(tuple(probe), RED)], [Path(q, BLUE)])

    seed = None
    k_red = 2 * t - 1
    l_blue = 2 * half - k_red - 1
    if 1 <= k_red and 1 <= l_blue and k_red != l_blue:
        view = BipartiteView.from_colouring(g2, q, w, colour=RED)
        try:
            out = ramsey_path(view, k_red, l_blue)
            if out.colour is RED:
                s = sorted(set(out.path.vertices) & qset)
                if len(s) >= t:
                    return witness(s, [out.path], [Path(q, BLUE)])
            else:
                seed = out.path
        except (SidesTooSmall, EqualLengths, CannotCertify):
            pass

    bound_int = arith.floor_of_coeff_sqrt(2 * dp, n)
    p, outcome = refine_path(g2, BLUE, seed, bound_int)
    if isinstance(outcome, RedCliqueCertificate):
        d = outcome.vertices
        return witness(d, [Path(d, RED)], [p])

    y = sorted(set(range(1, n + 1)) - set(p.vertices))
    if arith.le_sqrt_plus_quartic(len(y), n, 8 * dp):
        return structure(p, outcome)

    # outside set too big for the structure: strip red paths through it and
    # hand the covered part back as a witness
    m = arith.ceil_of_coeff_sqrt(2 * dp, n)
    view = BipartiteView.from_colouring(g2, p.vertices, y, colour=RED, m=m)
    try:
        red_paths = decompose(view)
    except PreconditionViolated as exc:
        raise GuardFailed(f"stripping step unavailable: {exc}") from exc
    if not red_paths:
        raise GuardFailed("stripping step produced no paths")
    covered: set[int] = set()
    for rp in red_paths:
        covered |= set(rp.vertices)
    s = sorted(covered & set(p.vertices))
    if not s:
        raise GuardFailed("stripping step covered no path vertices")
    return witness(s, list(red_paths), [p])
