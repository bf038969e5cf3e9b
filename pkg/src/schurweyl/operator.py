"""Matrix elements of the fundamental U(n) tensor operators in the GT basis.

Adding one node in spin state ``k`` to a pattern raises one entry in each
row ``k..n``; the chosen positions form a :class:`TauChain`.  The matrix
element is a product of square roots of rational numbers built from the
partial hooks ``p_ij = m_ij + j - i`` of the ket (pre-insertion) pattern.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .surd import SurdSum, surd_sqrt_of_rational
from .young import GTPattern, validate_betweenness

__all__ = ["TauChain", "IllegalChain", "apply_chain", "tensor_op_element", "tensor_op_ratio"]


class IllegalChain(ValueError):
    """Raised when a chain of increments breaks betweenness."""


@dataclass(frozen=True)
class TauChain:
    """Positions ``tau_j`` (1-based) raised in rows ``j = start..start+len-1``."""

    start: int
    positions: tuple

    def __getitem__(self, j: int) -> int:
        if not self.start <= j < self.start + len(self.positions):
            raise KeyError(j)
        return self.positions[j - self.start]

    @property
    def stop(self) -> int:
        return self.start + len(self.positions) - 1

    def as_dict(self) -> dict:
        return {self.start + d: t for d, t in enumerate(self.positions)}


def apply_chain(ket: GTPattern, chain: TauChain) -> GTPattern:
    n = ket.n
    if chain.stop != n:
        raise IllegalChain(f"chain must reach row {n}, stops at {chain.stop}")
    rows = [list(r) for r in ket.rows]
    for j, tau in chain.as_dict().items():
        if not 1 <= tau <= j:
            raise IllegalChain(f"tau_{j}={tau} outside 1..{j}")
        rows[n - j][tau - 1] += 1
    bra = GTPattern(tuple(tuple(r) for r in rows))
    if not validate_betweenness(bra):
        raise IllegalChain(f"raising {chain.as_dict()} in {ket} breaks betweenness")
    return bra


def tensor_op_ratio(ket: GTPattern, k: int, chain: TauChain) -> tuple[int, Fraction]:
    """Sign and squared magnitude of the matrix element (no legality check)."""
    hooks = {j: [None] + [ket.hook(i, j) for i in range(1, j + 1)] for j in range(1, ket.n + 1)}
    sign = 1
    ratio = Fraction(1)
    for j in range(k + 1, ket.n + 1):
        a, b = chain[j - 1], chain[j]
        if a < b:
            sign = -sign
        hj, hl = hooks[j], hooks[j - 1]
        num = den = 1
        for i in range(1, j):
            if i != a:
                num *= hj[b] - hl[i]
                den *= hl[a] - hl[i] + 1
        for i in range(1, j + 1):
            if i != b:
                num *= hl[a] - hj[i] + 1
                den *= hj[b] - hj[i]
        ratio *= Fraction(abs(num), abs(den))
    if k > 1:
        hk, hl = hooks[k], hooks[k - 1]
        c = chain[k]
        num = den = 1
        for i in range(1, k):
            num *= hk[c] - hl[i]
        for i in range(1, k + 1):
            if i != c:
                den *= hk[c] - hk[i]
        ratio *= Fraction(abs(num), abs(den))
    return sign, ratio


def tensor_op_element(ket: GTPattern, k: int, chain: TauChain) -> SurdSum:
    if chain.start != k:
        raise IllegalChain(f"chain starts at row {chain.start}, letter is {k}")
    apply_chain(ket, chain)
    sign, ratio = tensor_op_ratio(ket, k, chain)
    return surd_sqrt_of_rational(ratio, sign)
