"""Reference Schur-Weyl states by projection over the whole symmetric group.

Builds Young's orthogonal form of the irreps of S_N and evaluates

    |lambda t y>  ~  sum_sigma  Delta_{y, y_t}(sigma) |f0 o sigma^-1>

by visiting all N! permutations.  Deliberately factorial: it exists to
cross-check the graph method on small systems, and refuses to run beyond a
configurable budget.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .engine import SchurWeylLabel, SchurWeylState
from .surd import ONE, ZERO, SurdSum, surd_sqrt_of_rational
from .young import enumerate_syt, orbit_enumerate, standardize, strip_zeros

__all__ = [
    "DEFAULT_BUDGET",
    "FactorialBudgetExceeded",
    "PermutationRep",
    "young_orthogonal_rep",
    "rep_of_permutation",
    "reduced_word",
    "reference_state",
    "reference_vector",
    "budget_from_env",
    "check_budget",
]

DEFAULT_BUDGET = 8


class FactorialBudgetExceeded(RuntimeError):
    pass


def budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    raw = os.environ.get("SW_BUDGET")
    if raw is None or raw == "":
        return default
    try:
        return int(raw)
    except ValueError:
        raise ValueError(f"SW_BUDGET must be an integer, got {raw!r}") from None


def _content_positions(y) -> dict:
    # letter -> content (column - row)
    return {v: j - i for i, r in enumerate(y) for j, v in enumerate(r)}


def _swap(y, a: int, b: int):
    return tuple(tuple(b if v == a else a if v == b else v for v in r) for r in y)


@dataclass
class PermutationRep:
    lam: tuple
    basis: list            # SYT(lambda) in lexicographic order
    index: dict            # tableau -> basis position
    generators: dict       # i -> {column: [(row, SurdSum), ...]} for s_i = (i, i+1)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def matrix(self, i: int, exact: bool = True):
        """Dense matrix of ``s_i`` (SurdSum entries, or floats)."""
        d = self.dim
        if exact:
            m = [[ZERO] * d for _ in range(d)]
        else:
            m = np.zeros((d, d))
        for col, entries in self.generators[i].items():
            for row, v in entries:
                m[row][col] = v if exact else float(v)
        return m


def young_orthogonal_rep(lam: Sequence[int], N: int | None = None) -> PermutationRep:
    lam = strip_zeros(lam)
    N = sum(lam) if N is None else N
    if sum(lam) != N:
        raise ValueError(f"partition {lam} is not a partition of {N}")
    basis = enumerate_syt(lam)
    index = {y: k for k, y in enumerate(basis)}
    gens = {}
    for i in range(1, N):
        cols = {}
        for y, col in index.items():
            c = _content_positions(y)
            d = c[i + 1] - c[i]
            entries = [(col, SurdSum.rational(Fraction(1, d)))]
            if abs(d) > 1:
                other = index[_swap(y, i, i + 1)]
                entries.append((other, surd_sqrt_of_rational(1 - Fraction(1, d * d))))
            cols[col] = entries
        gens[i] = cols
    return PermutationRep(lam, basis, index, gens)


def reduced_word(sigma: Sequence[int]) -> list:
    """Adjacent transpositions ``[i1, i2, ...]`` with ``sigma = s_i1 s_i2 ...``.

    ``sigma`` is in one-line notation on ``1..N``.
    """
    w = list(sigma)
    word = []
    # bubble sort: sigma * s_i swaps positions i, i+1 of the one-line form
    changed = True
    while changed:
        changed = False
        for i in range(len(w) - 1):
            if w[i] > w[i + 1]:
                w[i], w[i + 1] = w[i + 1], w[i]
                word.append(i + 1)
                changed = True
    # sigma * s_a * s_b * ... = id  =>  sigma = ... s_b s_a
    return word[::-1]


def _row_times_gen(row: list, rep: PermutationRep, i: int, zero) -> list:
    out = [zero] * rep.dim
    for col, entries in rep.generators[i].items():
        acc = zero
        for r, v in entries:
            if row[r]:
                acc = acc + row[r] * v
        out[col] = acc
    return out


def rep_of_permutation(rep: PermutationRep, sigma: Sequence[int], exact: bool = True):
    """Matrix of ``sigma`` as a product of generator matrices along a reduced word."""
    d = rep.dim
    if exact:
        m = [[ONE if a == b else ZERO for b in range(d)] for a in range(d)]
        for i in reduced_word(sigma):
            m = [_row_times_gen(r, rep, i, ZERO) for r in m]
        return m
    m = np.eye(d)
    for i in reduced_word(sigma):
        m = m @ rep.matrix(i, exact=False)
    return m


def check_budget(N: int, budget: int | None):
    budget = budget_from_env() if budget is None else budget
    if N > budget:
        raise FactorialBudgetExceeded(
            f"the symmetric-group projection needs N! = {math.factorial(N)} permutation terms "
            f"for N={N}; the factorial budget allows N <= {budget} (raise --budget or SW_BUDGET)")


def reference_vector(label: SchurWeylLabel, budget: int | None = None, exact: bool = True,
                     f0: Sequence[int] | None = None, y_ref=None) -> dict:
    """Unnormalized projection ``sum_sigma Delta_{y,y_ref}(sigma) |f0 o sigma^-1>``.

    Defaults: ``f0`` is the weakly increasing configuration of weight
    ``weight(t)``, ``y_ref`` the standardization of ``t``.  With these
    choices the U(j) content of the first ``mu_1+...+mu_j`` nodes matches the
    GT rows of ``t``, so the projection lands on the requested state.
    """
    N = label.N
    check_budget(N, budget)
    mu = label.mu
    if f0 is None:
        f0 = tuple(k for k, m in enumerate(mu, start=1) for _ in range(m))
    f0 = tuple(f0)
    y_ref = standardize(label.t) if y_ref is None else y_ref
    rep = young_orthogonal_rep(label.lam, N)
    zero, one = (ZERO, ONE) if exact else (0.0, 1.0)
    gens = rep.generators if exact else {
        i: {c: [(r, float(v)) for r, v in e] for c, e in cols.items()}
        for i, cols in rep.generators.items()}
    row_y = rep.index[label.y]
    col_ref = rep.index[y_ref]
    d = rep.dim

    def times_gen(row, i):
        out = [zero] * d
        for col, entries in gens[i].items():
            acc = zero
            for r, v in entries:
                if row[r]:
                    acc = acc + row[r] * v
            out[col] = acc
        return out

    # breadth-first over S_N: Delta(sigma s_i) = Delta(sigma) Delta(s_i); only row y is tracked
    identity = tuple(range(N))
    start = [one if k == row_y else zero for k in range(d)]
    seen = {identity: start}
    frontier = [identity]
    while frontier:
        nxt = []
        for sigma in frontier:
            row = seen[sigma]
            for i in range(1, N):
                tau = list(sigma)
                tau[i - 1], tau[i] = tau[i], tau[i - 1]
                tau = tuple(tau)
                if tau not in seen:
                    seen[tau] = times_gen(row, i)
                    nxt.append(tau)
        frontier = nxt
    vec: dict = {}
    for sigma, row in seen.items():
        coeff = row[col_ref]
        if not coeff:
            continue
        # (f0 o sigma^-1)(x) = f0(sigma^-1(x)); sigma is 0-based one-line
        g = [0] * N
        for x, sx in enumerate(sigma):
            g[sx] = f0[x]
        g = tuple(g)
        vec[g] = vec.get(g, zero) + coeff
    return vec


def reference_state(label: SchurWeylLabel, budget: int | None = None, exact: bool = True,
                **kwargs) -> SchurWeylState:
    """Normalized reference state on the orbit of ``weight(t)``.

    Exact when the squared norm of the projection is rational (then every
    amplitude stays a surd); otherwise amplitudes are floats.  The global
    sign makes the lexicographically first nonzero amplitude positive.
    """
    vec = reference_vector(label, budget=budget, exact=exact, **kwargs)
    orbit = orbit_enumerate(label.mu)
    zero = ZERO if exact else 0.0
    raw = [vec.get(f, zero) for f in orbit]
    first = next((a for a in raw if a), None)
    if first is None:
        raise ArithmeticError("projection vanished; reference tableau has no overlap")
    if exact:
        norm2 = ZERO
        for a in raw:
            norm2 = norm2 + a * a
        sign = 1 if first.sign() > 0 else -1
        if norm2.is_rational():
            inv = surd_sqrt_of_rational(1 / norm2.as_rational(), sign)
            amps = {f: a * inv for f, a in zip(orbit, raw)}
            return SchurWeylState(label=label, mu=label.mu, amplitudes=amps)
        raw = [float(a) for a in raw]
        first = float(first)
    scale = math.copysign(1.0, first) / math.sqrt(math.fsum(a * a for a in raw))
    return SchurWeylState(label=label, mu=label.mu,
                          amplitudes={f: float(a) * scale for f, a in zip(orbit, raw)})
