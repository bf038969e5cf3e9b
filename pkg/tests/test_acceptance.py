"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line."""
import math
import time
from fractions import Fraction
from itertools import product

import numpy as np
import pytest

from schurweyl.cli import main
from schurweyl.engine import SchurWeylLabel, amplitude, build_graph, expand_state, labels_for_weight
from schurweyl.oracle import DEFAULT_BUDGET, FactorialBudgetExceeded, reference_state
from schurweyl.rsk import rsk_forward, rsk_inverse, schensted_insert_gt
from schurweyl.surd import SurdSum
from schurweyl.sweeps import counting_identity, homogeneous_case, states_agree, unitarity_sweep
from schurweyl.young import GTPattern, compositions

G = GTPattern.parse
LABEL = SchurWeylLabel((3, 1), ((1, 2, 3), (2,)), ((1, 3, 4), (2,)), 3)


def r3(num, den):
    return SurdSum({3: Fraction(num, den)})


@pytest.fixture
def report(capsys):
    def _report(k, ok, detail=""):
        with capsys.disabled():
            print(f"\n[{'PASS' if ok else 'FAIL'}] criterion {k}: {detail}")
        assert ok, detail
    return _report


def test_criterion_1_worked_state(report, capsys):
    expected = {
        (1, 3, 2, 2): r3(1, 6), (1, 2, 2, 3): r3(1, 4), (1, 2, 3, 2): r3(1, 4),
        (2, 1, 2, 3): r3(-1, 4), (3, 1, 2, 2): r3(-1, 6), (2, 1, 3, 2): r3(-1, 4),
        (2, 3, 1, 2): r3(-1, 12), (3, 2, 1, 2): r3(1, 12), (2, 3, 2, 1): r3(-1, 12),
        (3, 2, 2, 1): r3(1, 12),
    }
    t0 = time.perf_counter()
    code = main(["state", "--lambda", "3,1", "--t", "123/2", "--y", "134/2", "--format", "json"])
    capsys.readouterr()
    state = expand_state(LABEL)
    elapsed = time.perf_counter() - t0
    ok = code == 0 and state.nonzero() == expected and elapsed < 1.0
    report(1, ok, f"10 exact amplitudes match, {elapsed:.3f} s")


def test_criterion_2_path_factors(report):
    g = build_graph((1, 3, 2, 2), LABEL)
    paths = {tuple(e.weight for e in p[1:]) for p in g.paths()}
    h = SurdSum({2: Fraction(1, 2)})
    want = {(h, h, r3(1, 12)), (h, SurdSum({6: Fraction(1, 6)}), SurdSum.rational(Fraction(3, 4)))}
    total = g.path_sum()
    ok = paths == want and total == r3(1, 6) and g.evaluate() == total
    report(2, ok, f"two paths, sum = {total}")


def test_criterion_3_rsk_fidelity(report):
    d = rsk_forward((3, 1, 2, 3, 2), 5)
    ok = d.to_json() == {
        "recording": [[1], [1, 1], [2, 1, 0], [3, 1, 0, 0], [3, 2, 0, 0, 0]],
        "insertion": [[3, 2, 0, 0, 0], [3, 2, 0, 0], [3, 2, 0], [3, 0], [1]],
    }
    ok = ok and d.tableaux() == (((1, 2, 2), (3, 3)), ((1, 3, 4), (2, 5)))
    ins, _ = schensted_insert_gt(G("74210/5220/520/20/2"), 2)
    ok = ok and ins == G("74310/5320/530/30/2")
    report(3, ok, "double pattern, tableaux and insertion example reproduced")


def test_criterion_4_bijectivity(report):
    t0 = time.perf_counter()
    ok = True
    counts = []
    for N, n in ((5, 3), (6, 2)):
        images = set()
        for f in product(range(1, n + 1), repeat=N):
            d = rsk_forward(f, n)
            ok = ok and rsk_inverse(d) == f
            images.add(d)
        counts.append(len(images))
        ok = ok and len(images) == n ** N
    elapsed = time.perf_counter() - t0
    report(4, ok and elapsed < 5.0, f"{counts[0]} + {counts[1]} words round-trip, {elapsed:.2f} s")


def test_criterion_5_unitarity(report):
    t0 = time.perf_counter()
    results = [unitarity_sweep(N, 3, max_orbit=10 ** 6, exact=True) for N in range(1, 7)]
    elapsed = time.perf_counter() - t0
    ok = all(r.passed for r in results) and elapsed < 300
    orbits = sum(len(compositions(N, 3)) for N in range(1, 7))
    report(5, ok, f"{orbits} orbits exactly unitary, {elapsed:.1f} s")


def test_criterion_6_oracle_equivalence(report):
    count = exact = 0
    worst = 0.0
    ok = True
    for n in (1, 2, 3):
        for N in range(1, 6):
            for mu in compositions(N, n):
                for lab in labels_for_weight(mu, n):
                    agree, was_exact, dev = states_agree(expand_state(lab), reference_state(lab))
                    ok = ok and agree and dev < 1e-10
                    count += 1
                    exact += was_exact
                    worst = max(worst, dev)
    report(6, ok, f"{count} labels agree, {exact} exactly, max deviation {worst:.2g}")


def test_criterion_7_counting_identity(report):
    results = [counting_identity(N, n) for N in range(1, 7) for n in (1, 2, 3)]
    checked = sum(r.checked for r in results)
    report(7, all(r.passed for r in results), f"{checked} weights checked")


def test_criterion_8_scaling(report):
    def best(f, lab, reps=5):
        out = float("inf")
        for _ in range(reps):
            t0 = time.perf_counter()
            amplitude(f, lab)
            out = min(out, time.perf_counter() - t0)
        return out

    f50, lab50 = homogeneous_case(50, 3)
    t0 = time.perf_counter()
    amplitude(f50, lab50)
    t50 = time.perf_counter() - t0

    Ns = [10, 20, 30, 40, 50]
    times = [best(*homogeneous_case(N, 3)) for N in Ns]
    slope = np.polyfit(np.log(Ns), np.log(times), 1)[0]

    _, lab10 = homogeneous_case(10, 3)
    try:
        reference_state(lab10, budget=DEFAULT_BUDGET)
        refused = False
    except FactorialBudgetExceeded as exc:
        refused = str(math.factorial(10)) in str(exc)

    ok = t50 < 1.0 and slope < 2.0 and refused
    report(8, ok, f"N=50 in {t50:.4f} s, log-log slope {slope:.2f}, oracle at N=10 refused={refused}")
