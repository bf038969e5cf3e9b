"""Partitions, configurations, tableaux and Gelfand-Tsetlin patterns.

Conventions used throughout the package:

* letters (spins) and nodes are 1-based integers;
* a partition is a tuple of weakly decreasing non-negative ints; trailing
  zeros are kept only where a U(n) label needs exactly ``n`` entries;
* a tableau is a tuple of rows, each a tuple of ints;
* a :class:`GTPattern` stores its rows top (length ``n``) to bottom
  (length 1), and ``m(i, j)`` addresses entry ``i`` of the row of length
  ``j``, both 1-based.
"""
from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod
from typing import Iterator, Sequence

Partition = tuple
Composition = tuple
Configuration = tuple
Tableau = tuple

__all__ = [
    "GTPattern",
    "strip_zeros",
    "pad",
    "validate_betweenness",
    "tableau_from_gt",
    "gt_from_tableau",
    "weight",
    "shape",
    "dominance_leq",
    "kostka",
    "semistandard_tableaux",
    "dim_irrep",
    "partial_hook",
    "orbit_enumerate",
    "orbit_size",
    "enumerate_gt_patterns",
    "enumerate_syt",
    "partitions",
    "compositions",
    "is_semistandard",
    "is_standard",
    "parse_tableau",
    "format_tableau",
    "standardize",
]


@dataclass(frozen=True)
class GTPattern:
    rows: tuple  # rows[0] has length n, rows[-1] has length 1

    def __post_init__(self):
        rows = tuple(tuple(int(v) for v in r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        n = len(rows)
        for idx, r in enumerate(rows):
            if len(r) != n - idx:
                raise ValueError(f"malformed GT pattern: row {idx} has length {len(r)}, expected {n - idx}")

    @classmethod
    def zero(cls, n: int) -> "GTPattern":
        return cls(tuple((0,) * j for j in range(n, 0, -1)))

    @classmethod
    def parse(cls, text: str) -> "GTPattern":
        """Parse the compact ``"310/21/1"`` form (single-digit entries)."""
        return cls(tuple(tuple(int(c) for c in part) for part in text.split("/")))

    @property
    def n(self) -> int:
        return len(self.rows)

    def row(self, j: int) -> tuple:
        """Row of length ``j`` (the U(j) label)."""
        return self.rows[self.n - j]

    @property
    def top(self) -> tuple:
        return self.rows[0] if self.rows else ()

    def m(self, i: int, j: int) -> int:
        return self.rows[self.n - j][i - 1]

    def hook(self, i: int, j: int) -> int:
        return self.rows[self.n - j][i - 1] + j - i

    def is_valid(self) -> bool:
        return validate_betweenness(self)

    def row_sums(self) -> tuple:
        """Sums of rows of length 1..n."""
        return tuple(sum(self.row(j)) for j in range(1, self.n + 1))

    def to_json(self) -> list:
        return [list(r) for r in self.rows]

    def __str__(self) -> str:
        sep = "," if any(v > 9 for r in self.rows for v in r) else ""
        return "/".join(sep.join(str(v) for v in r) for r in self.rows)


def strip_zeros(p: Sequence[int]) -> tuple:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def pad(p: Sequence[int], n: int) -> tuple:
    p = strip_zeros(p)
    if len(p) > n:
        raise ValueError(f"partition {p} has more than {n} parts")
    return p + (0,) * (n - len(p))


def validate_betweenness(p: GTPattern) -> bool:
    for idx in range(p.n - 1):
        upper, lower = p.rows[idx], p.rows[idx + 1]
        for i, v in enumerate(lower):
            if not (upper[i] >= v >= upper[i + 1]):
                return False
    return all(v >= 0 for r in p.rows for v in r)


def tableau_from_gt(p: GTPattern) -> Tableau:
    n = p.n
    rows = []
    for i in range(1, n + 1):
        row = []
        for k in range(i, n + 1):
            occ = p.m(i, k) - (p.m(i, k - 1) if i < k else 0)
            row.extend([k] * occ)
        if row:
            rows.append(tuple(row))
    return tuple(rows)


def gt_from_tableau(t: Tableau, n: int) -> GTPattern:
    if any(v > n or v < 1 for r in t for v in r):
        raise ValueError(f"tableau {format_tableau(t)} has letters outside 1..{n}")
    if len(t) > n:
        raise ValueError(f"tableau {format_tableau(t)} has more than {n} rows")
    rows = []
    for j in range(n, 0, -1):
        rows.append(tuple(sum(1 for v in t[i - 1] if v <= j) if i <= len(t) else 0
                          for i in range(1, j + 1)))
    return GTPattern(tuple(rows))


def weight(t, n: int | None = None) -> Composition:
    """Letter multiplicities of a configuration or a tableau."""
    letters = [v for r in t for v in r] if t and isinstance(t[0], tuple) else list(t)
    top = max(letters, default=0)
    n = top if n is None else n
    if top > n:
        raise ValueError(f"letter {top} exceeds n={n}")
    return tuple(letters.count(k) for k in range(1, n + 1))


def shape(t: Tableau) -> Partition:
    return tuple(len(r) for r in t)


def dominance_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff ``mu`` is dominated by ``lam`` (``lam`` dominates ``mu``)."""
    if sum(mu) != sum(lam):
        raise ValueError(f"dominance needs equal sizes: {sum(mu)} != {sum(lam)}")
    width = max(len(mu), len(lam))
    a = list(lam) + [0] * (width - len(lam))
    b = list(mu) + [0] * (width - len(mu))
    sa = sb = 0
    for x, y in zip(a, b):
        sa += x
        sb += y
        if sa < sb:
            return False
    return True


def semistandard_tableaux(lam: Sequence[int], mu: Sequence[int]) -> list:
    """All semistandard tableaux of shape ``lam`` and weight ``mu``.

    Cell-by-cell backtracking in row-reading order; independent of the GT
    pattern machinery so it can serve as a cross-check.
    """
    lam = strip_zeros(lam)
    if sum(lam) != sum(mu):
        raise ValueError(f"shape {lam} and weight {tuple(mu)} have different sizes")
    remaining = list(mu)
    n = len(remaining)
    grid = [[0] * r for r in lam]
    cells = [(i, j) for i, r in enumerate(lam) for j in range(r)]
    out = []

    def fill(c: int):
        if c == len(cells):
            out.append(tuple(tuple(r) for r in grid))
            return
        i, j = cells[c]
        lo = 1
        if j > 0:
            lo = max(lo, grid[i][j - 1])
        if i > 0:
            lo = max(lo, grid[i - 1][j] + 1)
        for k in range(lo, n + 1):
            if remaining[k - 1]:
                remaining[k - 1] -= 1
                grid[i][j] = k
                fill(c + 1)
                remaining[k - 1] += 1
        grid[i][j] = 0

    fill(0)
    return out


def kostka(lam: Sequence[int], mu: Sequence[int]) -> int:
    return len(semistandard_tableaux(lam, mu))


def dim_irrep(lam: Sequence[int], n: int) -> int:
    top = pad(lam, n)
    hooks = [top[i - 1] + n - i for i in range(1, n + 1)]
    num = prod(hooks[a] - hooks[b] for a in range(n) for b in range(a + 1, n))
    den = prod(factorial(k) for k in range(1, n))
    return num // den


def partial_hook(p: GTPattern, i: int, j: int) -> int:
    if not (1 <= i <= j <= p.n):
        raise IndexError(f"partial hook index ({i},{j}) out of range for n={p.n}")
    return p.hook(i, j)


def orbit_size(mu: Sequence[int]) -> int:
    return factorial(sum(mu)) // prod(factorial(m) for m in mu)


def orbit_enumerate(mu: Sequence[int]) -> list:
    """All distinct arrangements of ``1^mu_1 2^mu_2 ...`` in lexicographic order."""
    remaining = list(mu)
    total = sum(remaining)
    out = []
    word = []

    def rec():
        if len(word) == total:
            out.append(tuple(word))
            return
        for k, c in enumerate(remaining):
            if c:
                remaining[k] -= 1
                word.append(k + 1)
                rec()
                word.pop()
                remaining[k] += 1

    rec()
    return out


def enumerate_gt_patterns(lam: Sequence[int], n: int, row_sums: Sequence[int] | None = None) -> list:
    """All betweenness-valid patterns with top row ``lam``.

    ``row_sums`` (sums of rows of length 1..n-1) optionally restricts to a
    fixed weight.
    """
    top = pad(lam, n)
    out = []

    def rec(rows: list):
        upper = rows[-1]
        j = len(upper) - 1
        if j == 0:
            out.append(GTPattern(tuple(rows)))
            return
        target = None if row_sums is None else row_sums[j - 1]
        row: list = []

        def choose(i: int, acc: int):
            if i == j:
                if target is None or acc == target:
                    rec(rows + [tuple(row)])
                return
            for v in range(upper[i + 1], upper[i] + 1):
                row.append(v)
                choose(i + 1, acc + v)
                row.pop()

        choose(0, 0)

    rec([top])
    return out


def enumerate_syt(lam: Sequence[int]) -> list:
    """Standard tableaux of shape ``lam`` in lexicographic order of their rows."""
    lam = strip_zeros(lam)
    N = sum(lam)
    grid = [[0] * r for r in lam]
    out = []

    def cells_for(letter: int, filled: list):
        # outer corners of the filled shape that stay inside lam
        for i in range(len(lam)):
            j = filled[i]
            if j < lam[i] and (i == 0 or filled[i - 1] > j):
                yield i, j

    filled = [0] * len(lam)

    def rec(letter: int):
        if letter > N:
            out.append(tuple(tuple(r) for r in grid))
            return
        for i, j in list(cells_for(letter, filled)):
            grid[i][j] = letter
            filled[i] += 1
            rec(letter + 1)
            filled[i] -= 1
            grid[i][j] = 0

    rec(1)
    return sorted(out)


def partitions(N: int, max_parts: int | None = None) -> list:
    """Partitions of ``N`` with at most ``max_parts`` parts, reverse lexicographic."""
    max_parts = N if max_parts is None else max_parts
    out = []

    def rec(rest: int, cap: int, acc: list):
        if rest == 0:
            out.append(tuple(acc))
            return
        if len(acc) == max_parts:
            return
        for v in range(min(rest, cap), 0, -1):
            acc.append(v)
            rec(rest - v, v, acc)
            acc.pop()

    rec(N, N, [])
    return out


def compositions(N: int, n: int) -> list:
    """Weak compositions of ``N`` into exactly ``n`` parts, lexicographic."""
    if n == 0:
        return [()] if N == 0 else []
    if n == 1:
        return [(N,)]
    return [(a,) + rest for a in range(N + 1) for rest in compositions(N - a, n - 1)]


def is_semistandard(t: Tableau) -> bool:
    if list(shape(t)) != sorted(shape(t), reverse=True):
        return False
    for i, r in enumerate(t):
        if any(a > b for a, b in zip(r, r[1:])):
            return False
        if i and any(t[i - 1][j] >= r[j] for j in range(len(r))):
            return False
    return True


def is_standard(y: Tableau) -> bool:
    letters = sorted(v for r in y for v in r)
    if letters != list(range(1, len(letters) + 1)):
        return False
    return is_semistandard(y) and all(a < b for r in y for a, b in zip(r, r[1:]))


def parse_tableau(text: str) -> Tableau:
    """Parse ``"123/2"`` or, for multi-digit letters, ``"1,2,10/3"``."""
    text = text.strip()
    if not text:
        return ()
    rows = text.split("/")
    if "," in text:
        return tuple(tuple(int(v) for v in r.split(",") if v) for r in rows)
    return tuple(tuple(int(c) for c in r) for r in rows)


def format_tableau(t: Tableau) -> str:
    sep = "," if any(v > 9 for r in t for v in r) else ""
    return "/".join(sep.join(str(v) for v in r) for r in t)


def standardize(t: Tableau) -> Tableau:
    """Relabel equal letters left to right by consecutive integers 1..N."""
    cells = sorted(((v, j, i) for i, r in enumerate(t) for j, v in enumerate(r)))
    grid = [list(r) for r in t]
    for label, (_, j, i) in enumerate(cells, start=1):
        grid[i][j] = label
    return tuple(tuple(r) for r in grid)
