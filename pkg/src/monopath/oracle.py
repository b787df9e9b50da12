"""Exact minimum same-colour path covers for small n.

Subset dynamic programming: an endpoint table marks every vertex set spanned
by a single path of the working colour, and a top-down set-cover recursion
over maximal traceable sets gives the minimum number of paths.  Since cover
paths may share vertices, any path can be replaced by a maximal traceable
superset, so restricting the recursion to maximal sets loses nothing.
"""

from __future__ import annotations

from .core import RED, Colour, Colouring, MonopathError, Path, PathCover

DEFAULT_ORACLE_THRESHOLD = 14


class TooLarge(MonopathError):
    """Instance exceeds the subset-DP resource guard."""


def _guard(n: int, threshold: int) -> None:
    if n > threshold:
        raise TooLarge(f"n={n} exceeds oracle threshold {threshold}")


def _ends_table(g: Colouring, gamma: Colour) -> tuple[list[int], list[int]]:
    """ends[mask] = bitmask of vertices ending some gamma-path spanning mask."""
    n = g.n
    adj = [g.mask(v, gamma) for v in range(1, n + 1)]
    ends = [0] * (1 << n)
    for i in range(n):
        ends[1 << i] = 1 << i
    for m in range(1, 1 << n):
        e = ends[m]
        if not e:
            continue
        while e:
            xbit = e & -e
            e ^= xbit
            ext = adj[xbit.bit_length() - 1] & ~m
            while ext:
                wbit = ext & -ext
                ext ^= wbit
                ends[m | wbit] |= wbit
    return ends, adj


def _spanning_path(ends: list[int], adj: list[int], mask: int) -> list[int]:
    """Walk one witness path back out of the endpoint table, lowest ids first."""
    ebit = ends[mask] & -ends[mask]
    cur = ebit.bit_length()
    out = [cur]
    m = mask
    while m != 1 << (cur - 1):
        m2 = m & ~(1 << (cur - 1))
        cand = adj[cur - 1] & m2
        nxt = 0
        while cand:
            b = cand & -cand
            cand ^= b
            if ends[m2] & b:
                nxt = b
                break
        assert nxt, "endpoint table inconsistent"
        cur = nxt.bit_length()
        out.append(cur)
        m = m2
    return out


def _vertices(mask: int) -> list[int]:
    out = []
    while mask:
        b = mask & -mask
        mask ^= b
        out.append(b.bit_length())
    return out


class TraceableFamily:
    """All vertex subsets spanned by a single path of one colour."""

    def __init__(self, g: Colouring, gamma: Colour, threshold: int):
        _guard(g.n, threshold)
        self.colour = gamma
        self.n = g.n
        self._ends, self._adj = _ends_table(g, gamma)
        self.sets = frozenset(
            frozenset(_vertices(m)) for m in range(1, 1 << g.n) if self._ends[m]
        )

    def __contains__(self, subset) -> bool:
        return frozenset(subset) in self.sets

    def witness_path(self, subset) -> Path:
        mask = 0
        for v in subset:
            if not 1 <= v <= self.n:
                raise ValueError(f"vertex {v} outside 1..{self.n}")
            mask |= 1 << (v - 1)
        if not mask or not self._ends[mask]:
            raise ValueError(f"{sorted(subset)} is not traceable")
        return Path(tuple(_spanning_path(self._ends, self._adj, mask)), self.colour)


def traceable_sets(
    g: Colouring, gamma: Colour, threshold: int = DEFAULT_ORACLE_THRESHOLD
) -> TraceableFamily:
    return TraceableFamily(g, gamma, threshold)


def _maximal_masks(ends: list[int], n: int) -> list[int]:
    """Traceable masks with no traceable strict superset, ascending."""
    size = 1 << n
    anysup = [1 if ends[m] else 0 for m in range(size)]
    for i in range(n):
        bit = 1 << i
        for m in range(size):
            if not m & bit and anysup[m | bit]:
                anysup[m] = 1
    out = []
    for m in range(1, size):
        if not ends[m]:
            continue
        if all(m & (1 << i) or not anysup[m | (1 << i)] for i in range(n)):
            out.append(m)
    return out


def min_cover_colour(
    g: Colouring, gamma: Colour, threshold: int = DEFAULT_ORACLE_THRESHOLD
) -> tuple[int, PathCover]:
    """Minimum number of gamma-paths whose union covers [n], with a witness."""
    _guard(g.n, threshold)
    n = g.n
    ends, adj = _ends_table(g, gamma)
    full = (1 << n) - 1
    if ends[full]:
        p = Path(tuple(_spanning_path(ends, adj, full)), gamma)
        return 1, PathCover(gamma, (p,), n)

    maximal = _maximal_masks(ends, n)
    by_v: list[list[int]] = [[] for _ in range(n)]
    for w in maximal:
        for v in _vertices(w):
            by_v[v - 1].append(w)

    memo: dict[int, int] = {0: 0}
    choice: dict[int, int] = {}

    def cost(s: int) -> int:
        got = memo.get(s)
        if got is not None:
            return got
        v = (s & -s).bit_length() - 1
        best = None
        seen = set()
        for w in by_v[v]:
            t = s & ~w
            if t in seen:
                continue
            seen.add(t)
            c = cost(t) + 1
            if best is None or c < best[0]:
                best = (c, w)
        assert best is not None, "singletons are always traceable"
        memo[s] = best[0]
        choice[s] = best[1]
        return best[0]

    value = cost(full)
    paths = []
    s = full
    while s:
        w = choice[s]
        paths.append(Path(tuple(_spanning_path(ends, adj, w)), gamma))
        s &= ~w
    return value, PathCover(gamma, tuple(paths), n)


class OracleResult:
    def __init__(self, value: int, colour: Colour, witness: PathCover):
        self.value = value
        self.colour = colour
        self.witness = witness

    def __repr__(self):
        return f"OracleResult(value={self.value}, colour={self.colour!r})"


def exact_f(g: Colouring, threshold: int = DEFAULT_ORACLE_THRESHOLD) -> OracleResult:
    """min over both colours of min_cover_colour; Red wins ties."""
    _guard(g.n, threshold)
    red_v, red_c = min_cover_colour(g, RED, threshold)
    blue_v, blue_c = min_cover_colour(g, RED.complement, threshold)
    if blue_v < red_v:
        return OracleResult(blue_v, RED.complement, blue_c)
    return OracleResult(red_v, RED, red_c)
