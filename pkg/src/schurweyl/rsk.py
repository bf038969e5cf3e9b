"""Robinson-Schensted-Knuth correspondence carried out on GT patterns.

The insertion triangle has ``n`` rows (one per spin letter) and encodes the
Weyl tableau; the recording triangle has ``N`` rows (one per node) and
encodes the standard Young tableau.  Their top rows agree up to trailing
zeros.
"""
from __future__ import annotations

from dataclasses import dataclass

from .young import (
    GTPattern,
    format_tableau,
    gt_from_tableau,
    is_standard,
    shape,
    strip_zeros,
    tableau_from_gt,
    validate_betweenness,
)

__all__ = [
    "DoubleGTPattern",
    "BubblingPath",
    "RSKError",
    "schensted_insert_gt",
    "rsk_forward",
    "rsk_inverse",
    "shape_sequence",
    "render_diamond",
]


class RSKError(ValueError):
    pass


BubblingPath = tuple  # ((row j, position tau_j), ...) for j = k..n


@dataclass(frozen=True)
class DoubleGTPattern:
    recording: GTPattern
    insertion: GTPattern

    def __post_init__(self):
        if strip_zeros(self.recording.top) != strip_zeros(self.insertion.top):
            raise RSKError(
                f"top rows differ: {self.recording.top} vs {self.insertion.top}")

    @property
    def shape(self) -> tuple:
        return strip_zeros(self.insertion.top)

    def tableaux(self) -> tuple:
        """``(t, y)``: the Weyl tableau and the standard Young tableau."""
        return tableau_from_gt(self.insertion), tableau_from_gt(self.recording)

    def to_json(self) -> dict:
        # recording listed as printed: its bottom row (length 1) first
        return {
            "recording": [list(r) for r in reversed(self.recording.rows)],
            "insertion": self.insertion.to_json(),
        }

    @classmethod
    def from_json(cls, data: dict) -> "DoubleGTPattern":
        rec = GTPattern(tuple(tuple(r) for r in reversed(data["recording"])))
        ins = GTPattern(tuple(tuple(r) for r in data["insertion"]))
        return cls(rec, ins)


def _bubble(rows: list, n: int, j: int, i: int) -> list:
    """Raise ``m_ij`` and propagate the increment up to row ``n``.

    ``rows`` is indexed so that ``rows[n - j]`` is the row of length ``j``;
    it is modified in place.  Returns the bubbling path.
    """
    path = [(j, i)]
    rows[n - j][i - 1] += 1
    while j < n:
        cur = rows[n - j][i - 1]
        above = rows[n - j - 1]
        if cur > above[i - 1]:
            above[i - 1] += 1
        else:
            above[i] += 1
            i += 1
        j += 1
        path.append((j, i))
    return path


def schensted_insert_gt(p: GTPattern, k: int) -> tuple[GTPattern, BubblingPath]:
    if not 1 <= k <= p.n:
        raise ValueError(f"letter {k} outside 1..{p.n}")
    rows = [list(r) for r in p.rows]
    path = _bubble(rows, p.n, k, 1)
    return GTPattern(tuple(tuple(r) for r in rows)), tuple(path)


def rsk_forward(f, n: int) -> DoubleGTPattern:
    f = tuple(f)
    N = len(f)
    if any(not 1 <= k <= n for k in f):
        raise ValueError(f"configuration {f} has letters outside 1..{n}")
    ins = [list(r) for r in GTPattern.zero(n).rows]
    rec = [list(r) for r in GTPattern.zero(N).rows]
    for node, k in enumerate(f, start=1):
        path = _bubble(ins, n, k, 1)
        grown_row = path[-1][1]
        _bubble(rec, N, node, grown_row)
    return DoubleGTPattern(
        GTPattern(tuple(tuple(r) for r in rec)),
        GTPattern(tuple(tuple(r) for r in ins)),
    )


def _unbubble(rows: list, n: int, i: int) -> int:
    """Remove one box from row ``i`` of the top row; return the ejected letter."""
    j, b = n, i
    while True:
        if j < b:
            raise RSKError("insertion triangle is inconsistent with the recording triangle")
        cur = rows[n - j][b - 1]
        below = rows[n - j + 1][b - 1] if b <= j - 1 else 0
        holds_letter_j = cur > below
        rows[n - j][b - 1] -= 1
        if rows[n - j][b - 1] < 0:
            raise RSKError("negative entry while reversing insertion")
        if holds_letter_j:
            if b == 1:
                return j
            b -= 1
        j -= 1
        if j == 0:
            raise RSKError("reverse bubbling fell off the pattern")


def rsk_inverse(d: DoubleGTPattern) -> tuple:
    rec, ins = d.recording, d.insertion
    if not (validate_betweenness(rec) and validate_betweenness(ins)):
        raise RSKError("double pattern violates betweenness")
    N, n = rec.n, ins.n
    y = tableau_from_gt(rec)
    if sum(shape(y)) != N or not is_standard(y):
        raise RSKError("recording triangle is not a standard tableau on 1..N")
    rows = [list(r) for r in ins.rows]
    out = [0] * N
    for node in range(N, 0, -1):
        upper = rec.row(node)
        lower = rec.row(node - 1) + (0,) if node > 1 else (0,)
        grown = [i for i in range(node) if upper[i] != lower[i]]
        i = grown[0] + 1
        if i > n:
            raise RSKError(f"node {node} sits in row {i} > n={n}")
        out[node - 1] = _unbubble(rows, n, i)
    if any(v for r in rows for v in r):
        raise RSKError("insertion triangle not exhausted")
    return tuple(out)


def shape_sequence(t, y) -> list:
    """Shapes of ``y`` restricted to ``1..j`` for ``j = 1..N``."""
    if shape(t) != shape(y):
        raise ValueError(f"shape mismatch: {format_tableau(t)} vs {format_tableau(y)}")
    N = sum(shape(y))
    return [strip_zeros(tuple(sum(1 for v in r if v <= j) for r in y)) for j in range(1, N + 1)]


def render_diamond(d: DoubleGTPattern) -> str:
    """Text diamond: recording rows (reflected) above, insertion rows below."""
    rec_rows = list(reversed(d.recording.rows))
    ins_rows = list(d.insertion.rows)
    width = max(d.recording.n, d.insertion.n)
    top = list(d.insertion.top) + [0] * (width - d.insertion.n)
    lines = [r for r in rec_rows[:-1]] + [tuple(top)] + ins_rows[1:]
    cell = max(len(str(v)) for r in lines for v in r)
    total = width * (cell + 3)
    out = []
    for r in lines:
        out.append("   ".join(f"{v:>{cell}}" for v in r).center(total).rstrip())
    return "\n".join(out)


def tableaux_to_double(t, y, n: int) -> DoubleGTPattern:
    N = sum(shape(y))
    return DoubleGTPattern(gt_from_tableau(y, N), gt_from_tableau(t, n))
