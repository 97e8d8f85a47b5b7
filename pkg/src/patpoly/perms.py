"""Permutations, pattern containment, avoidance classes, and diagram symmetries.

Permutations are tuples of the integers 1..n in one-line notation.  The diagram
of a permutation a is the point set {(i, a_i)} in Cartesian coordinates, with
(1,1) at the bottom left.  Patterns may carry vincular adjacency marks: mark g
for g >= 1 requires positions g and g+1 of an occurrence to be adjacent in the
host, and mark 0 (the empty-prefix marker) requires the occurrence to start at
position 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .errors import ParseError

Perm = tuple[int, ...]


def parse_perm(s: str) -> Perm:
    """Parse a digit string (n <= 9) or comma-separated word.

    >>> parse_perm("2413")
    (2, 4, 1, 3)
    >>> parse_perm("10,2,3,4,5,6,7,8,9,1")[0]
    10
    """
    s = s.strip()
    if "," in s:
        word = tuple(int(t) for t in s.split(","))
    else:
        if not s.isdigit():
            raise ParseError(f"not a permutation string: {s!r}")
        word = tuple(int(ch) for ch in s)
    if sorted(word) != list(range(1, len(word) + 1)):
        raise ParseError(f"not a permutation of 1..n: {s!r}")
    return word


def format_perm(p: Perm) -> str:
    if len(p) <= 9:
        return "".join(str(a) for a in p)
    return ",".join(str(a) for a in p)


def standardize(word: Sequence[int]) -> Perm:
    """Relabel a sequence of distinct numbers to a permutation of 1..k.

    >>> standardize((4, 7, 2))
    (2, 3, 1)
    """
    order = sorted(word)
    rank = {v: i + 1 for i, v in enumerate(order)}
    return tuple(rank[v] for v in word)


@dataclass(frozen=True)
class Pattern:
    """A pattern word together with its vincular adjacency marks."""

    word: Perm
    marks: frozenset[int] = frozenset()

    def __post_init__(self):
        k = len(self.word)
        if sorted(self.word) != list(range(1, k + 1)):
            raise ParseError(f"pattern word not a permutation: {self.word}")
        if any(g < 0 or g >= k for g in self.marks):
            raise ParseError(f"marks out of range for pattern {self.word}: {sorted(self.marks)}")

    @property
    def classical(self) -> bool:
        return not self.marks


PatternLike = "Pattern | Perm | str"


def as_pattern(p) -> Pattern:
    if isinstance(p, Pattern):
        return p
    if isinstance(p, str):
        return Pattern(parse_perm(p))
    if isinstance(p, tuple) and p and isinstance(p[0], int):
        return Pattern(p)
    if isinstance(p, tuple) and len(p) == 2:
        word, marks = p
        return Pattern(tuple(word), frozenset(marks))
    raise ParseError(f"cannot interpret pattern: {p!r}")


def occurrences(sigma: Perm, pattern) -> Iterator[tuple[int, ...]]:
    """Yield the 0-based position tuples of all occurrences of the pattern."""
    pat = as_pattern(pattern)
    pi = pat.word
    k = len(pi)
    n = len(sigma)
    if k > n:
        return
    start_fixed = 0 in pat.marks

    def extend(positions: list[int]) -> Iterator[tuple[int, ...]]:
        j = len(positions)
        if j == k:
            yield tuple(positions)
            return
        if j == 0:
            first_range = range(1) if start_fixed else range(n - k + 1)
            for p in first_range:
                positions.append(p)
                yield from extend(positions)
                positions.pop()
            return
        prev = positions[-1]
        if (j) in pat.marks:  # gap j joins letters j and j+1 of the pattern
            candidates = range(prev + 1, prev + 2)
        else:
            candidates = range(prev + 1, n - (k - j) + 1)
        for p in candidates:
            # prefix must stay order-isomorphic to the pattern prefix
            ok = True
            for q, pos in enumerate(positions):
                if (sigma[pos] < sigma[p]) != (pi[q] < pi[j]):
                    ok = False
                    break
            if ok:
                positions.append(p)
                yield from extend(positions)
                positions.pop()

    yield from extend([])


def contains_pattern(sigma: Perm, pattern) -> bool:
    """True iff some (mark-respecting) subsequence of sigma standardizes to the pattern."""
    return next(occurrences(sigma, pattern), None) is not None


def count_vincular(sigma: Perm, pattern) -> int:
    """Number of occurrences respecting the pattern's adjacency marks."""
    return sum(1 for _ in occurrences(sigma, pattern))


def avoids(sigma: Perm, patterns: Iterable) -> bool:
    return not any(contains_pattern(sigma, p) for p in patterns)


def avoidance_class(n: int, patterns: Iterable) -> list[Perm]:
    """All sigma in S_n avoiding every pattern, in lexicographic order.

    Backtracks over prefixes; a prefix is pruned as soon as it contains a
    pattern, which is sound because occurrences persist under extension.
    """
    pats = [as_pattern(p) for p in patterns]
    out: list[Perm] = []
    prefix: list[int] = []
    used = [False] * (n + 1)

    def bad(p: Pattern) -> bool:
        # only occurrences ending at the last placed letter are new
        word = tuple(prefix)
        for occ in occurrences(word, p):
            if occ[-1] == len(word) - 1:
                return True
        return False

    def rec():
        if prefix and any(bad(p) for p in pats):
            return
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in range(1, n + 1):
            if not used[v]:
                used[v] = True
                prefix.append(v)
                rec()
                prefix.pop()
                used[v] = False

    rec()
    return out


# Marked patterns whose avoidance characterizes up-down (alternating) words:
# a_1 < a_2 plus no three consecutive monotone letters.
ALTERNATING_PATTERNS = (
    Pattern((2, 1), frozenset({0, 1})),
    Pattern((1, 2, 3), frozenset({1, 2})),
    Pattern((3, 2, 1), frozenset({1, 2})),
)


def alternating_avoidance(n: int, patterns: Iterable) -> list[Perm]:
    """Up-down permutations of length n avoiding the given patterns."""
    pats = list(ALTERNATING_PATTERNS) + [as_pattern(p) for p in patterns]
    return avoidance_class(n, pats)


# --- dihedral action on diagrams -------------------------------------------

DIHEDRAL = ("R0", "R90", "R180", "R270", "r0", "r1", "r-1", "rinf")


def _transform_point(f: str, x: int, y: int, n: int) -> tuple[int, int]:
    m = n + 1
    if f == "R0":
        return x, y
    if f == "R90":
        return m - y, x
    if f == "R180":
        return m - x, m - y
    if f == "R270":
        return y, m - x
    if f == "r0":  # horizontal axis: complement
        return x, m - y
    if f == "rinf":  # vertical axis: reversal
        return m - x, y
    if f == "r1":  # main diagonal: inverse
        return y, x
    if f == "r-1":  # antidiagonal
        return m - y, m - x
    raise ParseError(f"unknown dihedral element: {f}")


def dihedral_apply(f: str, p: Perm) -> Perm:
    """Image of the diagram of p under the dihedral element, read back as a word.

    >>> dihedral_apply("rinf", (1, 2, 3))
    (3, 2, 1)
    >>> dihedral_apply("r0", (2, 6, 4, 1, 7, 5, 3))
    (6, 2, 4, 7, 1, 3, 5)
    """
    n = len(p)
    points = sorted(_transform_point(f, i + 1, a, n) for i, a in enumerate(p))
    return tuple(y for _, y in points)


def dihedral_apply_set(f: str, patterns: Iterable[Perm]) -> frozenset[Perm]:
    return frozenset(dihedral_apply(f, p) for p in patterns)


# --- grid classes ----------------------------------------------------------


def is_griddable(sigma: Perm, A: Sequence[Sequence[int]]):
    """Decide A-griddability; returns (ok, witness) with witness cut lines.

    A has k rows (horizontal bands, top band first) and l columns.  The witness
    is (vertical_cuts, horizontal_cuts): positions c with the cut drawn after
    position/value c, listed increasing.
    """
    k = len(A)
    l = len(A[0])
    if any(len(row) != l for row in A):
        raise ParseError("grid matrix not rectangular")
    n = len(sigma)

    def cell_ok(entries: list[int], sign: int) -> bool:
        if sign == 0:
            return not entries
        if len(entries) <= 1:
            return True
        if sign == 1:
            return all(a < b for a, b in zip(entries, entries[1:]))
        return all(a > b for a, b in zip(entries, entries[1:]))

    for vcuts in itertools.combinations_with_replacement(range(n + 1), l - 1):
        col_edges = (0,) + vcuts + (n,)
        for hcuts in itertools.combinations_with_replacement(range(n + 1), k - 1):
            row_edges = (0,) + hcuts + (n,)
            ok = True
            for i in range(k):
                # band i counted from the top: values in (lo, hi]
                hi = n - row_edges[i]
                lo = n - row_edges[i + 1]
                for j in range(l):
                    entries = [
                        sigma[x]
                        for x in range(col_edges[j], col_edges[j + 1])
                        if lo < sigma[x] <= hi
                    ]
                    if not cell_ok(entries, A[i][j]):
                        ok = False
                        break
                if not ok:
                    break
            if ok:
                return True, (vcuts, hcuts)
    return False, None


# --- statistics and weak order ---------------------------------------------


@dataclass(frozen=True)
class PermStats:
    inv_set: frozenset[tuple[int, int]]
    invv_set: frozenset[tuple[int, int]]
    des_set: frozenset[int]

    @property
    def inv(self) -> int:
        return len(self.inv_set)

    def des_decreasing(self) -> tuple[int, ...]:
        """Descent set written as a decreasing tuple (a shifted shape)."""
        return tuple(sorted(self.des_set, reverse=True))


def stats(sigma: Perm) -> PermStats:
    """Position inversions Inv, value inversions Invv, and descents Des.

    Inv(sigma) = {(i,j) : i<j, sigma_i > sigma_j} on 1-based positions;
    Invv(sigma) = {(sigma_j, sigma_i) : (i,j) in Inv} as value pairs (a,b), a<b.
    """
    n = len(sigma)
    inv = set()
    invv = set()
    for i in range(n):
        for j in range(i + 1, n):
            if sigma[i] > sigma[j]:
                inv.add((i + 1, j + 1))
                invv.add((sigma[j], sigma[i]))
    des = frozenset(i + 1 for i in range(n - 1) if sigma[i] > sigma[i + 1])
    return PermStats(frozenset(inv), frozenset(invv), des)


def inv(sigma: Perm) -> int:
    return stats(sigma).inv


def inv_set(sigma: Perm) -> frozenset[tuple[int, int]]:
    return stats(sigma).inv_set


def invv_set(sigma: Perm) -> frozenset[tuple[int, int]]:
    return stats(sigma).invv_set


def descents(sigma: Perm) -> frozenset[int]:
    return stats(sigma).des_set


def weak_covers(sigma: Perm, side: str) -> list[Perm]:
    """Covers of sigma in the chosen weak order (inversion count +1).

    Right covers multiply by s_i on the right (swap adjacent positions);
    left covers multiply on the left (swap adjacent values).
    """
    n = len(sigma)
    out = []
    if side == "right":
        for i in range(n - 1):
            if sigma[i] < sigma[i + 1]:
                tau = list(sigma)
                tau[i], tau[i + 1] = tau[i + 1], tau[i]
                out.append(tuple(tau))
    elif side == "left":
        pos = {v: i for i, v in enumerate(sigma)}
        for v in range(1, n):
            if pos[v] < pos[v + 1]:
                tau = list(sigma)
                tau[pos[v]], tau[pos[v + 1]] = v + 1, v
                out.append(tuple(tau))
    else:
        raise ParseError(f"side must be 'left' or 'right', got {side!r}")
    return sorted(out)


def inverse(sigma: Perm) -> Perm:
    out = [0] * len(sigma)
    for i, v in enumerate(sigma):
        out[v - 1] = i + 1
    return tuple(out)


def prefix_minima(sigma: Perm) -> tuple[int, ...]:
    """mu_i = min of the first i letters, for i = 1..n."""
    out = []
    cur = sigma[0]
    for a in sigma:
        cur = min(cur, a)
        out.append(cur)
    return tuple(out)


# --- serialization ----------------------------------------------------------


def pattern_to_json(p: Pattern):
    d = {"word": format_perm(p.word)}
    if p.marks:
        d["vincular"] = sorted(p.marks)
    return d


def pattern_from_json(d) -> Pattern:
    return Pattern(parse_perm(d["word"]), frozenset(d.get("vincular", ())))
