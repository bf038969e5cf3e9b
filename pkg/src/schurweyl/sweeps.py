"""Verification sweeps and timing runs shared by the CLI and the test-suite."""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import product

from .engine import SchurWeylLabel, amplitude, expand_state, labels_for_weight, verify_unitarity
from .oracle import (
    FactorialBudgetExceeded,
    budget_from_env,
    check_budget,
    reference_vector,
    reference_state,
)
from .rsk import rsk_forward, rsk_inverse
from .surd import SurdSum
from .young import (
    compositions,
    dominance_leq,
    enumerate_syt,
    kostka,
    orbit_size,
    partitions,
)

__all__ = [
    "StageResult",
    "rsk_bijectivity",
    "counting_identity",
    "unitarity_sweep",
    "oracle_sweep",
    "states_agree",
    "verify_all",
    "homogeneous_case",
    "bench_rows",
]


@dataclass
class StageResult:
    name: str
    passed: bool
    checked: int = 0
    skipped: bool = False
    detail: str = ""
    failures: list = field(default_factory=list)

    def to_json(self) -> dict:
        return {"stage": self.name, "passed": self.passed, "skipped": self.skipped,
                "checked": self.checked, "detail": self.detail,
                "failures": self.failures[:20]}

    def line(self) -> str:
        status = "SKIP" if self.skipped else ("PASS" if self.passed else "FAIL")
        return f"[{status}] {self.name}: {self.checked} checked. {self.detail}".rstrip()


def rsk_bijectivity(N: int, n: int, max_words: int = 300_000) -> StageResult:
    total = n ** N
    if total > max_words:
        return StageResult("rsk-bijectivity", True, skipped=True,
                           detail=f"{total} words exceed the cap of {max_words}")
    images = set()
    fails = []
    for f in product(range(1, n + 1), repeat=N):
        d = rsk_forward(f, n)
        if rsk_inverse(d) != f:
            fails.append(list(f))
        images.add(d)
    ok = not fails and len(images) == total
    return StageResult("rsk-bijectivity", ok, checked=total,
                       detail=f"{len(images)} distinct double patterns", failures=fails)


def counting_identity(N: int, n: int) -> StageResult:
    fails = []
    mus = compositions(N, n)
    for mu in mus:
        total = sum(kostka(lam, mu) * len(enumerate_syt(lam))
                    for lam in partitions(N, n) if dominance_leq(sorted(mu, reverse=True), lam))
        if total != orbit_size(mu):
            fails.append({"mu": list(mu), "orbit": orbit_size(mu), "sum": total})
    return StageResult("counting-identity", not fails, checked=len(mus), failures=fails)


def unitarity_sweep(N: int, n: int, max_orbit: int = 200, exact: bool = True) -> StageResult:
    fails = []
    full = partial = 0
    worst = 0.0
    for mu in compositions(N, n):
        if orbit_size(mu) <= max_orbit:
            rep = verify_unitarity(mu, n, exact=exact)
            full += 1
            worst = max(worst, rep.max_deviation)
            if not rep.unitary:
                fails.append(rep.to_json())
        else:
            # too large for the full Gram matrix: check normalization of a few labels
            for lab in labels_for_weight(mu, n)[:4]:
                partial += 1
                nrm = expand_state(lab).norm_squared()
                if nrm != 1:
                    fails.append({"mu": list(mu), "label": lab.to_json(), "norm2": str(nrm)})
    detail = f"{full} orbits fully unitary-checked, {partial} states norm-checked; max deviation {worst:.3g}"
    return StageResult("unitarity", not fails, checked=full + partial, detail=detail, failures=fails)


def states_agree(graph_state, ref_state, tol: float = 1e-10) -> tuple[bool, bool, float]:
    """Compare two states up to one global sign; return ``(ok, exact, deviation)``."""
    keys = list(graph_state.amplitudes)
    a = [graph_state.amplitudes[f] for f in keys]
    b = [ref_state.amplitudes.get(f, 0) for f in keys]
    if all(isinstance(v, SurdSum) for v in a + b):
        same = all(x == y for x, y in zip(a, b))
        flipped = all(x == -y for x, y in zip(a, b))
        dev = 0.0 if (same or flipped) else min(
            max(abs(float(x) - float(y)) for x, y in zip(a, b)),
            max(abs(float(x) + float(y)) for x, y in zip(a, b)))
        return same or flipped, True, dev
    fa = [float(x) for x in a]
    fb = [float(y) for y in b]
    dev = min(max(abs(x - y) for x, y in zip(fa, fb)), max(abs(x + y) for x, y in zip(fa, fb)))
    return dev < tol, False, dev


def oracle_sweep(N: int, n: int, budget: int | None = None) -> StageResult:
    budget = budget_from_env() if budget is None else budget
    try:
        check_budget(N, budget)
    except FactorialBudgetExceeded as exc:
        return StageResult("oracle-equivalence", True, skipped=True, detail=f"refused: {exc}")
    fails = []
    count = exact_count = 0
    worst = 0.0
    for mu in compositions(N, n):
        for lab in labels_for_weight(mu, n):
            ok, exact, dev = states_agree(expand_state(lab), reference_state(lab, budget=budget))
            count += 1
            exact_count += exact
            worst = max(worst, dev)
            if not ok:
                fails.append({"label": lab.to_json(), "deviation": dev})
    return StageResult("oracle-equivalence", not fails, checked=count,
                       detail=f"{exact_count} compared exactly; max deviation {worst:.3g}",
                       failures=fails)


def verify_all(N: int, n: int, budget: int | None = None, max_orbit: int = 200) -> list:
    return [
        rsk_bijectivity(N, n),
        counting_identity(N, n),
        unitarity_sweep(N, n, max_orbit=max_orbit),
        oracle_sweep(N, n, budget=budget),
    ]


def homogeneous_case(N: int, n: int) -> tuple:
    """Periodic configuration ``1 2 .. n 1 2 ..`` and the label RSK assigns it."""
    f = tuple(j % n + 1 for j in range(N))
    t, y = rsk_forward(f, n).tableaux()
    return f, SchurWeylLabel(tuple(len(r) for r in t), t, y, n)


def _best_time(fn, repeats: int) -> float:
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_rows(Ns, n: int, budget: int | None = None, repeats: int = 3) -> list:
    budget = budget_from_env() if budget is None else budget
    rows = []
    for N in Ns:
        f, lab = homogeneous_case(N, n)
        value = amplitude(f, lab)
        graph_s = _best_time(lambda: amplitude(f, lab), repeats)
        if N <= budget:
            oracle_s = _best_time(lambda: reference_vector(lab, budget=budget, exact=False),
                                  1 if N >= 7 else repeats)
            oracle = f"{oracle_s:.6f}"
        else:
            oracle = "refused"
        rows.append({"N": N, "n": n, "lambda": "-".join(map(str, lab.lam)),
                     "graph_seconds": f"{graph_s:.6f}", "oracle_seconds": oracle,
                     "amplitude": f"{float(value):.12g}"})
    return rows
