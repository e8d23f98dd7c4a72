"""Exit criteria. Each test prints one PASS/FAIL line (also collected into the
terminal summary); run this file directly for the lines alone."""
import time
from fractions import Fraction

import pytest

from mtasep.chain import _stationary, ChainSpec, Convention, simulate, stationary_exact, tv_distance
from mtasep.formulas import (
    binomial_identity_sides,
    inhom_partition_value,
    inhom_sorted_probability,
    inhom_sorted_value,
    sorted_bracket_formula,
)
from mtasep.mlq import _count_all, bracket, count_all, partition_function
from mtasep.verify import run_suite
from mtasep.words import cyclic_shifts, sorted_word, strict_types

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # run as a script
    ACCEPTANCE_LINES = []

MC_SEED = 1
MC_STEPS = 10**6
MC_TV = 0.02
INHOM_TYPE = (1, 1, 1)
INHOM_RATES = (Fraction(1), Fraction(2))
INHOM_TOL = 0.03


@pytest.fixture(autouse=True)
def cold_caches():
    _count_all.cache_clear()
    _stationary.cache_clear()


def types_upto(n):
    for k in range(1, n + 1):
        yield from strict_types(k)


def report(number, name, passed, detail=""):
    line = f"[{'PASS' if passed else 'FAIL'}] criterion {number:>2}: {name}" + (f" ({detail})" if detail else "")
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert passed, line


def timed(fn):
    t0 = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t0


def test_01_bracket_table():
    counts, secs = timed(lambda: count_all((1, 1, 1, 1)))
    table = {(1, 2, 3, 4): 9, (1, 2, 4, 3): 3, (1, 3, 2, 4): 3, (1, 3, 4, 2): 3, (1, 4, 2, 3): 5, (1, 4, 3, 2): 1}
    ok = all(counts[v] == val for u, val in table.items() for v in cyclic_shifts(u))
    ok = ok and len(counts) == 24 and sum(counts.values()) == 96 and secs < 1
    report(1, "bracket table for type (1,1,1,1), total 96", ok, f"{secs:.3f}s")


def test_02_ferrari_martin():
    res, secs = timed(lambda: run_suite("ferrari-martin", 5))
    report(2, "pi(u) = [u]/Z_m for all strict types n <= 5", res.passed and secs < 120,
           f"{res.checks} words, {secs:.2f}s" + (f", {res.counterexample}" if res.counterexample else ""))


def test_03_sorted_word_product():
    def run():
        bad = []
        for m in types_upto(6):
            if sorted_bracket_formula(m) != bracket(sorted_word(m)):
                bad.append(m)
        return bad

    bad, secs = timed(run)
    lam = sorted_bracket_formula((1,) * 6) == bracket((1, 2, 3, 4, 5, 6)) == 2500
    report(3, "sorted-word product formula, all strict types n <= 6", not bad and lam and secs < 300,
           f"[123456] = 2500, {secs:.2f}s" + (f", failing {bad}" if bad else ""))


def test_04_projection():
    res = run_suite("lemma1", 5)
    report(4, "merging the top letter preserves marginals, n <= 5", res.passed, f"{res.checks} checks")


def test_05_symmetries():
    cyc = run_suite("cyclic", 5)
    rev = run_suite("reversal", 5)
    report(5, "cyclic invariance of [u], reverse-complement invariance of pi, n <= 5",
           cyc.passed and rev.passed, f"{cyc.checks} + {rev.checks} checks")


def test_06_beta_alpha_bijection():
    res = run_suite("ba-aa", 5)
    report(6, "r(r-1)w -> (r-1)(r-1)w map is a bijection onto the target MLQs, n <= 5", res.passed,
           f"{res.checks} checks" + (f", {res.counterexample}" if res.counterexample else ""))


def test_07_suffix_machinery():
    eb = run_suite("eb-sum", 5)
    sc = run_suite("scaling", 5)
    report(7, "g-counts, sum over E_b, C(s+b,s) scaling, n <= 5, b <= n-s-1", eb.passed and sc.passed,
           f"{eb.checks} + {sc.checks} checks")


def test_08_binomial_identity():
    def run():
        return all(
            binomial_identity_sides(n, b, s)[0] == binomial_identity_sides(n, b, s)[1]
            for n in range(1, 15) for s in range(n) for b in range(n - s)
        )

    ok, secs = timed(run)
    report(8, "binomial identity for 0 <= s+b < n <= 14", ok and secs < 1, f"{secs:.3f}s")


def test_09_inhomogeneous_reduction():
    ok = all(
        inhom_sorted_value(m, (1,) * len(m)) == sorted_bracket_formula(m)
        and inhom_partition_value(m, (1,) * len(m)) == partition_function(m)
        for m in types_upto(6)
    )
    report(9, "inhomogeneous formulas reduce at v = 1, n <= 6", ok)


def test_10_order_invariance():
    res, secs = timed(lambda: run_suite("order-invariance", 6))
    report(10, "pi_m(sorted word) invariant under permuting m, n <= 6", res.passed, f"{secs:.2f}s")


def test_11a_monte_carlo():
    m = (1, 1, 1, 1)
    spec = ChainSpec(m)
    counts, secs = timed(lambda: simulate(spec, sorted_word(m), MC_STEPS, MC_SEED))
    tv = float(tv_distance(counts, stationary_exact(spec)))
    report(11, f"Monte Carlo TV <= {MC_TV} for (1,1,1,1), 1e6 steps, seed {MC_SEED}",
           tv <= MC_TV and secs < 10, f"TV {tv:.5f}, {secs:.2f}s")


def test_11b_inhomogeneous_convention():
    target = float(inhom_sorted_probability(INHOM_TYPE, INHOM_RATES))
    w0 = sorted_word(INHOM_TYPE)
    matches = {}
    for conv in Convention:
        spec = ChainSpec(INHOM_TYPE, INHOM_RATES, conv)
        counts = simulate(spec, w0, MC_STEPS, MC_SEED)
        freq = counts.get(w0, 0) / (MC_STEPS + 1)
        matches[conv.value] = (abs(freq - target), abs(freq - target) <= INHOM_TOL)
    matching = [c for c, (_, ok) in matches.items() if ok]
    detail = ", ".join(f"{c}: |diff| {d:.4f}" for c, (d, _) in matches.items())
    report(11, f"inhomogeneous sorted-word frequency vs closed form, matching convention: {','.join(matching) or 'none'}",
           bool(matching), f"rates x=(1,2), target {target:.4f}; {detail}")


if __name__ == "__main__":
    import sys

    sys.exit(pytest.main([__file__, "-q", "-s"]))
