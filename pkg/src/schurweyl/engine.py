"""Schur-Weyl amplitudes as interference sums over a coupling graph.

For a configuration ``f`` and a label ``(lambda, t, y)`` the graph has one
level per node.  Level ``j`` holds the GT patterns reachable by inserting
``f(1..j)`` whose top row is the shape of ``y`` restricted to ``1..j``;
every edge carries a fundamental tensor-operator matrix element.  The
amplitude ``<f|lambda t y>`` is the sum over source-to-sink paths of the
product of edge weights, evaluated level by level.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .operator import TauChain, tensor_op_ratio
from .rsk import shape_sequence
from .surd import ONE, ZERO, SurdSum, surd_sqrt_of_rational
from .young import (
    GTPattern,
    enumerate_syt,
    format_tableau,
    gt_from_tableau,
    is_semistandard,
    is_standard,
    orbit_enumerate,
    pad,
    partitions,
    semistandard_tableaux,
    shape,
    strip_zeros,
    weight,
)

__all__ = [
    "SchurWeylLabel",
    "CouplingGraph",
    "SchurWeylState",
    "insertion_candidates",
    "build_graph",
    "amplitude",
    "expand_state",
    "labels_for_weight",
    "verify_unitarity",
    "UnitarityReport",
]


@dataclass(frozen=True)
class SchurWeylLabel:
    lam: tuple
    t: tuple
    y: tuple
    n: int = 0

    def __post_init__(self):
        lam = strip_zeros(self.lam)
        object.__setattr__(self, "lam", lam)
        if shape(self.t) != lam or shape(self.y) != lam:
            raise ValueError(
                f"shapes of t={format_tableau(self.t)} and y={format_tableau(self.y)} must equal {lam}")
        if not is_semistandard(self.t):
            raise ValueError(f"t={format_tableau(self.t)} is not semistandard")
        if not is_standard(self.y):
            raise ValueError(f"y={format_tableau(self.y)} is not standard")
        top = max((v for r in self.t for v in r), default=1)
        n = self.n or max(top, len(lam), 1)
        if top > n or len(lam) > n:
            raise ValueError(f"t={format_tableau(self.t)} does not fit U({n})")
        object.__setattr__(self, "n", n)

    @property
    def N(self) -> int:
        return sum(self.lam)

    @property
    def mu(self) -> tuple:
        return weight(self.t, self.n)

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "t": format_tableau(self.t),
                "y": format_tableau(self.y), "n": self.n}


@dataclass(frozen=True)
class Edge:
    source: GTPattern
    target: GTPattern
    weight: SurdSum
    letter: int
    chain: TauChain


@dataclass
class CouplingGraph:
    config: tuple
    label: SchurWeylLabel
    levels: list = field(default_factory=list)  # levels[j]: list of GTPattern
    edges: list = field(default_factory=list)   # edges[j-1]: edges into level j

    @property
    def source(self) -> GTPattern:
        return self.levels[0][0]

    @property
    def sink(self) -> GTPattern | None:
        return self.levels[-1][0] if len(self.levels) == len(self.config) + 1 and self.levels[-1] else None

    def vertex_count(self) -> int:
        return sum(len(v) for v in self.levels)

    def evaluate(self) -> SurdSum:
        """Forward accumulation: vertex value = sum(edge weight * source value)."""
        if self.sink is None:
            return ZERO
        value = {self.source: ONE}
        for level in self.edges:
            nxt: dict = {}
            for e in level:
                if e.source in value:
                    nxt[e.target] = nxt.get(e.target, ZERO) + e.weight * value[e.source]
            value = nxt
        return value.get(self.sink, ZERO)

    def paths(self) -> Iterator[list]:
        """Every source-to-sink path as a list of edges (exponential; small graphs only)."""
        if self.sink is None:
            return
        out_edges: dict = {}
        for j, level in enumerate(self.edges):
            for e in level:
                out_edges.setdefault((j, e.source), []).append(e)

        def walk(j: int, v: GTPattern, acc: list):
            if j == len(self.edges):
                if v == self.sink:
                    yield list(acc)
                return
            for e in out_edges.get((j, v), ()):
                acc.append(e)
                yield from walk(j + 1, e.target, acc)
                acc.pop()

        yield from walk(0, self.source, [])

    def path_sum(self) -> SurdSum:
        total = ZERO
        for path in self.paths():
            prod = ONE
            for e in path:
                prod = prod * e.weight
            total = total + prod
        return total

    def to_json(self) -> dict:
        return {
            "levels": [[v.to_json() for v in level] for level in self.levels],
            "edges": [
                [{"level": j + 1, "source": e.source.to_json(), "target": e.target.to_json(),
                  "letter": e.letter, "tau": list(e.chain.positions),
                  "weight": e.weight.to_json()} for e in level]
                for j, level in enumerate(self.edges)
            ],
        }

    def render(self) -> str:
        lines = []
        for j, level in enumerate(self.levels):
            tops = "(" + ",".join(map(str, strip_zeros(level[0].top))) + ")" if level else "-"
            lines.append(f"level {j}  shape {tops}: " + "  ".join(str(v) for v in level))
            if j < len(self.edges):
                for e in self.edges[j]:
                    lines.append(f"    {e.source} --{e.letter}[tau={''.join(map(str, e.chain.positions))}]--> "
                                 f"{e.target}   {e.weight}")
        return "\n".join(lines)


@dataclass
class SchurWeylState:
    label: SchurWeylLabel
    mu: tuple
    amplitudes: dict  # configuration -> SurdSum (or float for the float oracle)

    def nonzero(self) -> dict:
        return {f: a for f, a in self.amplitudes.items() if a}

    def norm_squared(self):
        total = ZERO
        for a in self.amplitudes.values():
            total = total + a * a
        return total

    def to_json(self) -> dict:
        def value(a):
            return a.to_json() if isinstance(a, SurdSum) else {"float": float(a)}

        return {
            "lambda": list(self.label.lam),
            "t": format_tableau(self.label.t),
            "y": format_tableau(self.label.y),
            "mu": list(self.mu),
            "amplitudes": [{"config": list(f), "value": value(a)}
                           for f, a in self.amplitudes.items()],
        }


def _new_box_row(prev: Sequence[int], cur: Sequence[int]) -> int:
    rows = [i for i, (a, b) in enumerate(zip(prev, cur)) if a != b]
    if len(rows) != 1 or cur[rows[0]] != prev[rows[0]] + 1:
        raise ValueError(f"{tuple(cur)} does not cover {tuple(prev)} by one box")
    return rows[0] + 1


def insertion_candidates(p: GTPattern, k: int, target_shape: Sequence[int],
                         bound: GTPattern | None = None) -> list:
    """Legal single-node insertions of letter ``k`` reaching ``target_shape``.

    ``bound``, when given, discards candidates exceeding it entrywise; since
    entries only grow along the graph, such vertices can never reach it.
    """
    n = p.n
    target = pad(target_shape, n)
    tau_top = _new_box_row(p.top, target)
    rows = [list(r) for r in p.rows]
    out = []
    taus: list = []

    def rec(j: int):
        row = rows[n - j]
        below = rows[n - j + 1] if j > 1 else ()
        choices = (tau_top,) if j == n else range(1, j + 1)
        for tau in choices:
            row[tau - 1] += 1
            ok = tau == 1 or row[tau - 2] >= row[tau - 1]
            # rows below j are final by now, so interlacing with row j-1 is decidable
            ok = ok and all(row[i] >= below[i] >= row[i + 1] for i in range(j - 1))
            if ok and bound is not None:
                ok = row[tau - 1] <= bound.rows[n - j][tau - 1]
            if ok:
                taus.append(tau)
                if j == n:
                    out.append((GTPattern(tuple(tuple(r) for r in rows)), TauChain(k, tuple(taus))))
                else:
                    rec(j + 1)
                taus.pop()
            row[tau - 1] -= 1

    rec(k)
    return out


def _edge_weight(p: GTPattern, k: int, chain: TauChain, cache: dict) -> SurdSum:
    key = (p, chain)
    w = cache.get(key)
    if w is None:
        sign, ratio = tensor_op_ratio(p, k, chain)
        w = surd_sqrt_of_rational(ratio, sign)
        cache[key] = w
    return w


def _check_config(f: Sequence[int], label: SchurWeylLabel) -> tuple:
    f = tuple(int(v) for v in f)
    if len(f) != label.N:
        raise ValueError(f"configuration has {len(f)} nodes, label has {label.N}")
    if any(not 1 <= v <= label.n for v in f):
        raise ValueError(f"configuration {f} has letters outside 1..{label.n}")
    return f


def build_graph(f: Sequence[int], label: SchurWeylLabel) -> CouplingGraph:
    f = _check_config(f, label)
    n = label.n
    shapes = shape_sequence(label.t, label.y)
    final = gt_from_tableau(label.t, n)
    graph = CouplingGraph(config=f, label=label, levels=[[GTPattern.zero(n)]])
    cache: dict = {}
    for j, k in enumerate(f, start=1):
        level: dict = {}
        edges = []
        for p in graph.levels[-1]:
            for q, chain in insertion_candidates(p, k, shapes[j - 1], bound=final):
                edges.append(Edge(p, q, _edge_weight(p, k, chain, cache), k, chain))
                level.setdefault(q, None)
        graph.levels.append(list(level))
        graph.edges.append(edges)
        if not level:
            break
    return graph


def amplitude(f: Sequence[int], label: SchurWeylLabel) -> SurdSum:
    """``<f | lambda t y>`` by level-wise dynamic programming."""
    f = _check_config(f, label)
    if weight(f, label.n) != label.mu:
        return ZERO
    n = label.n
    shapes = shape_sequence(label.t, label.y)
    final = gt_from_tableau(label.t, n)
    value = {GTPattern.zero(n): ONE}
    cache: dict = {}
    for j, k in enumerate(f, start=1):
        nxt: dict = {}
        for p, a in value.items():
            for q, chain in insertion_candidates(p, k, shapes[j - 1], bound=final):
                w = _edge_weight(p, k, chain, cache)
                if w:
                    nxt[q] = nxt.get(q, ZERO) + w * a
        value = {q: a for q, a in nxt.items() if a}
        if not value:
            return ZERO
    return value.get(final, ZERO)


def expand_state(label: SchurWeylLabel) -> SchurWeylState:
    """Amplitudes over the whole orbit of ``weight(t)``, zeros included.

    Configurations sharing a prefix share their partial DP, so the orbit is
    walked as a prefix tree in lexicographic order.
    """
    n = label.n
    mu = label.mu
    shapes = shape_sequence(label.t, label.y)
    final = gt_from_tableau(label.t, n)
    N = label.N
    amps: dict = {}
    cache: dict = {}
    remaining = list(mu)
    word: list = []

    def rec(value: dict):
        j = len(word)
        if j == N:
            amps[tuple(word)] = value.get(final, ZERO)
            return
        for k in range(1, n + 1):
            if not remaining[k - 1]:
                continue
            remaining[k - 1] -= 1
            word.append(k)
            nxt: dict = {}
            for p, a in value.items():
                for q, chain in insertion_candidates(p, k, shapes[j], bound=final):
                    w = _edge_weight(p, k, chain, cache)
                    if w:
                        nxt[q] = nxt.get(q, ZERO) + w * a
            nxt = {q: a for q, a in nxt.items() if a}
            if nxt:
                rec(nxt)
            else:
                _fill_zero(j + 1)
            word.pop()
            remaining[k - 1] += 1

    def _fill_zero(depth: int):
        # every completion of the current prefix has amplitude 0
        if depth == N:
            amps[tuple(word)] = ZERO
            return
        for k in range(1, n + 1):
            if remaining[k - 1]:
                remaining[k - 1] -= 1
                word.append(k)
                _fill_zero(depth + 1)
                word.pop()
                remaining[k - 1] += 1

    rec({GTPattern.zero(n): ONE})
    return SchurWeylState(label=label, mu=mu, amplitudes=amps)


def labels_for_weight(mu: Sequence[int], n: int | None = None) -> list:
    """All labels ``(lambda, t, y)`` with ``weight(t) = mu``, in a fixed order."""
    mu = tuple(mu)
    n = len(mu) if n is None else n
    N = sum(mu)
    out = []
    for lam in partitions(N, n):
        for t in semistandard_tableaux(lam, mu):
            for y in enumerate_syt(lam):
                out.append(SchurWeylLabel(lam, t, y, n))
    return out


@dataclass
class UnitarityReport:
    mu: tuple
    n: int
    size: int
    label_count: int
    exact: bool
    max_deviation: float
    unitary: bool
    labels: list = field(default_factory=list)
    orbit: list = field(default_factory=list)
    matrix: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"mu": list(self.mu), "n": self.n, "orbit_size": self.size,
                "labels": self.label_count, "exact": self.exact,
                "max_deviation": self.max_deviation, "unitary": self.unitary}


def verify_unitarity(mu: Sequence[int], n: int | None = None, exact: bool = True) -> UnitarityReport:
    """Assemble the label-by-orbit amplitude matrix and test ``U U^T = I``."""
    mu = tuple(mu)
    n = len(mu) if n is None else n
    mu = mu + (0,) * (n - len(mu))
    orbit = orbit_enumerate(mu)
    labels = labels_for_weight(mu, n)
    matrix = []
    for lab in labels:
        st = expand_state(lab)
        matrix.append([st.amplitudes[f] for f in orbit])
    size = len(orbit)
    square = len(labels) == size
    dev = 0.0
    ok = square
    if exact:
        sparse = [[(c, a) for c, a in enumerate(row) if a] for row in matrix]
        dense = [dict(r) for r in sparse]
        for a in range(len(labels)):
            for b in range(a, len(labels)):
                s = ZERO
                other = dense[b]
                for c, v in sparse[a]:
                    w = other.get(c)
                    if w is not None:
                        s = s + v * w
                target = ONE if a == b else ZERO
                if s != target:
                    ok = False
                    dev = max(dev, abs(float(s - target)))
    else:
        import numpy as np

        U = np.array([[float(v) for v in row] for row in matrix])
        if square:
            dev = float(np.max(np.abs(U @ U.T - np.eye(size)))) if size else 0.0
            ok = dev < 1e-12
    return UnitarityReport(mu=mu, n=n, size=size, label_count=len(labels), exact=exact,
                           max_deviation=dev, unitary=ok, labels=labels, orbit=orbit,
                           matrix=matrix)
