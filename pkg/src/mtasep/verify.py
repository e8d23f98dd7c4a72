"""Exhaustive checks of the stationary-distribution identities over all small types.

Each suite walks every strict type with n <= nmax and stops at the first
counterexample. ``run_suite(name, nmax)`` returns a :class:`CheckResult`.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from typing import Callable, Iterator

from .chain import stationary_exact
from .errors import DEFAULT_CAP
from .formulas import (
    binom,
    binomial_identity_sides,
    chained_sorted_bracket,
    inhom_partition_value,
    inhom_sorted_value,
    scaled_bracket_prediction,
    sorted_bracket_formula,
)
from .mlq import (
    beta_alpha_backward,
    beta_alpha_forward,
    bottom_word,
    bracket,
    count_all,
    enumerate_mlqs,
    partition_function,
)
from .words import (
    Word,
    collapse_nontrailing,
    cyclic_shifts,
    enumerate_suffixes,
    format_type,
    format_word,
    merge_top,
    reverse_complement,
    sorted_suffix,
    sorted_word,
    strict_types,
    words_of_type,
)


@dataclass
class CheckResult:
    suite: str
    statement: str
    nmax: int
    passed: bool = True
    checks: int = 0
    counterexample: str | None = None
    seconds: float = 0.0
    notes: dict = field(default_factory=dict)

    def to_dict(self, timing: bool = False) -> dict:
        d = {
            "suite": self.suite,
            "statement": self.statement,
            "nmax": self.nmax,
            "passed": self.passed,
            "checks": self.checks,
            "counterexample": self.counterexample,
        }
        if self.notes:
            d["notes"] = self.notes
        if timing:
            d["seconds"] = round(self.seconds, 3)
        return d

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        out = f"{status} {self.suite} (n<={self.nmax}, {self.checks} checks): {self.statement}"
        if self.counterexample:
            out += f"\n  counterexample: {self.counterexample}"
        return out


class _Fail(Exception):
    pass


def _types(nmax: int, nmin: int = 1) -> Iterator[tuple[int, ...]]:
    for n in range(nmin, nmax + 1):
        yield from strict_types(n)


def _w(w) -> str:
    return format_word(w)


def _ferrari_martin(res: CheckResult, nmax: int, cap: int):
    for m in _types(nmax):
        exact = stationary_exact(m, cap=cap)
        z = partition_function(m)
        counts = count_all(m)
        for u in words_of_type(m):
            res.checks += 1
            if exact[u] != Fraction(counts.get(u, 0), z):
                raise _Fail(f"type {format_type(m)}, word {_w(u)}: pi={exact[u]}, [u]/Z={counts.get(u, 0)}/{z}")


def _lemma1(res: CheckResult, nmax: int, cap: int):
    for m in _types(nmax):
        if len(m) < 2:
            continue
        merged = m[:-2] + (m[-2] + m[-1],)
        pi, pi2 = stationary_exact(m, cap=cap), stationary_exact(merged, cap=cap)
        sums: dict[Word, Fraction] = {}
        for u, p in pi.entries.items():
            v = merge_top(u)
            sums[v] = sums.get(v, Fraction(0)) + p
        for v in words_of_type(merged):
            res.checks += 1
            if sums.get(v, 0) != pi2[v]:
                raise _Fail(f"type {format_type(m)}, merged word {_w(v)}: sum={sums.get(v, 0)}, pi'={pi2[v]}")


def _cyclic(res: CheckResult, nmax: int, cap: int):
    for m in _types(nmax):
        counts = count_all(m)
        for u in words_of_type(m):
            for v in cyclic_shifts(u):
                res.checks += 1
                if counts.get(u, 0) != counts.get(v, 0):
                    raise _Fail(f"[{_w(u)}]={counts.get(u, 0)} but [{_w(v)}]={counts.get(v, 0)}")


def _reversal(res: CheckResult, nmax: int, cap: int):
    for m in _types(nmax):
        r = len(m)
        pi, pi_rev = stationary_exact(m, cap=cap), stationary_exact(m[::-1], cap=cap)
        for w in words_of_type(m):
            w2 = reverse_complement(w, r)
            res.checks += 1
            if pi[w] != pi_rev[w2]:
                raise _Fail(f"pi({_w(w)})={pi[w]} but pi({_w(w2)})={pi_rev[w2]}")


def _ba_aa(res: CheckResult, nmax: int, cap: int):
    for m in _types(nmax, nmin=2):
        r = len(m)
        if r < 2:
            continue
        target_type = m[:-2] + (m[-2] + 1, m[-1] - 1)
        domain = [q for q in enumerate_mlqs(m) if bottom_word(q)[:2] == (r, r - 1)]
        target = {q for q in enumerate_mlqs(target_type, relaxed=True) if bottom_word(q)[:2] == (r - 1, r - 1)}
        images = set()
        for q in domain:
            res.checks += 1
            img = beta_alpha_forward(q)
            u, u2 = bottom_word(q), bottom_word(img)
            if u2 != (r - 1,) + u[1:]:
                raise _Fail(f"type {format_type(m)}: image of an MLQ for {_w(u)} represents {_w(u2)}")
            if beta_alpha_backward(img) != q:
                raise _Fail(f"type {format_type(m)}: backward(forward(q)) != q for {_w(u)}")
            images.add(img)
        if len(images) != len(domain):
            raise _Fail(f"type {format_type(m)}: forward map is not injective")
        if images != target:
            raise _Fail(f"type {format_type(m)}: image has {len(images)} MLQs, target set has {len(target)}")
        seen = set()
        for q in domain:
            u = bottom_word(q)
            if u in seen:
                continue
            seen.add(u)
            res.checks += 1
            lhs, rhs = bracket(u), bracket((r - 1,) + u[1:], r=r)
            if lhs != rhs:
                raise _Fail(f"[{_w(u)}]={lhs} but [{_w((r - 1,) + u[1:])}]={rhs}")


def _eb_setups(nmax: int):
    """(n, r, u) with u a strict word on 1..r-2 and at least one slot left for the suffix."""
    for n in range(2, nmax + 1):
        for r in range(2, n + 2):
            if r == 2:
                yield n, r, ()
                continue
            for s in range(r - 2, n):
                for mu in strict_types(s):
                    if len(mu) == r - 2:
                        for u in words_of_type(mu):
                            yield n, r, u


def _eb_sum(res: CheckResult, nmax: int, cap: int):
    # g-statistic counts, by length of the suffix alone
    for length in range(1, nmax + 1):
        for b in range(length):
            by_k: dict[int, int] = {}
            for v in enumerate_suffixes(length, b, 2):
                f, g = collapse_nontrailing(v, 2)
                if f != sorted_suffix(length, g, 2):
                    raise _Fail(f"f({_w(v)})={_w(f)} is not e^({g})")
                by_k[g] = by_k.get(g, 0) + 1
            for k in range(b + 1):
                res.checks += 1
                if by_k.get(k, 0) != binom(length - k - 1, b - k):
                    raise _Fail(f"length {length}, b={b}, k={k}: {by_k.get(k, 0)} suffixes, formula {binom(length - k - 1, b - k)}")
    for n, r, u in _eb_setups(nmax):
        s = len(u)
        e0 = u + sorted_suffix(n - s, 0, r)
        base = bracket(e0)
        for b in range(n - s):
            total = 0
            for v in enumerate_suffixes(n - s, b, r):
                uv = u + v
                val = bracket(uv)
                total += val
                res.checks += 1
                fv, _ = collapse_nontrailing(v, r)
                if val != bracket(u + fv):
                    raise _Fail(f"[{_w(uv)}]={val} but [{_w(u + fv)}]={bracket(u + fv)}")
            res.checks += 1
            if total != binom(n, b) * base:
                raise _Fail(f"u={_w(u) or '()'}, n={n}, b={b}: sum={total}, C(n,b)[ue0]={binom(n, b) * base}")


def _scaling(res: CheckResult, nmax: int, cap: int):
    for n, r, u in _eb_setups(nmax):
        s = len(u)
        base = bracket(u + sorted_suffix(n - s, 0, r))
        for b in range(n - s):
            res.checks += 1
            got = bracket(u + sorted_suffix(n - s, b, r))
            if got != scaled_bracket_prediction(base, s, b):
                raise _Fail(f"[{_w(u + sorted_suffix(n - s, b, r))}]={got}, predicted {scaled_bracket_prediction(base, s, b)}")


def _binomial(res: CheckResult, nmax: int, cap: int):
    for n in range(1, nmax + 1):
        for s in range(n):
            for b in range(n - s):
                res.checks += 1
                lhs, rhs = binomial_identity_sides(n, b, s)
                if lhs != rhs:
                    raise _Fail(f"n={n}, b={b}, s={s}: {lhs} != {rhs}")


def _theorem_finish(res: CheckResult, nmax: int, cap: int):
    for m in _types(nmax):
        res.checks += 1
        w = sorted_word(m)
        got, formula, chained = bracket(w), sorted_bracket_formula(m), chained_sorted_bracket(m)
        if not got == formula == chained:
            raise _Fail(f"type {format_type(m)}: [{_w(w)}]={got}, product={formula}, chained={chained}")


def _inhom_reduce(res: CheckResult, nmax: int, cap: int):
    for m in _types(nmax):
        ones = (1,) * len(m)
        res.checks += 1
        sv, zv = inhom_sorted_value(m, ones), inhom_partition_value(m, ones)
        if sv != sorted_bracket_formula(m) or zv != partition_function(m):
            raise _Fail(f"type {format_type(m)}: sorted {sv} vs {sorted_bracket_formula(m)}, Z {zv} vs {partition_function(m)}")


def _order_invariance(res: CheckResult, nmax: int, cap: int):
    seen = set()
    for m in _types(nmax):
        key = tuple(sorted(m))
        if key in seen:
            continue
        seen.add(key)
        perms = sorted(set(permutations(m)))
        values = {p: stationary_exact(p, cap=cap)[sorted_word(p)] for p in perms}
        res.checks += len(perms)
        if len(set(values.values())) != 1:
            raise _Fail("; ".join(f"{format_type(p)}: {v}" for p, v in values.items()))


SUITES: dict[str, tuple[str, Callable]] = {
    "ferrari-martin": ("pi(u) = [u] / Z_m for every word u", _ferrari_martin),
    "lemma1": ("merging the top letter pushes pi_m forward onto pi_m'", _lemma1),
    "cyclic": ("[u] = [u'] for every cyclic shift u' of u", _cyclic),
    "reversal": ("pi(w) = pi(w'), w' = reversed complement of w", _reversal),
    "ba-aa": ("forward map is a bijection, [r(r-1)w] = [(r-1)(r-1)w]", _ba_aa),
    "eb-sum": ("#{v in E_b: g(v)=k} = C(n-s-k-1, b-k); [uv] = [uf(v)]; sum_v [uv] = C(n,b)[ue0]", _eb_sum),
    "scaling": ("[u e^(b)] = C(s+b, s) [u e^(0)]", _scaling),
    "binomial": ("C(n,b) = sum_k C(n-s-k-1, b-k) C(s+k, s) for s+b < n", _binomial),
    "theorem-finish": ("[1^m_1..r^m_r] = prod_{i=2}^{r-1} C(n-m_i, m_1+..+m_{i-1})", _theorem_finish),
    "inhom-reduce": ("inhomogeneous sorted value and Z reduce to [sorted] and Z_m at v = 1", _inhom_reduce),
    "order-invariance": ("pi_m(sorted word) does not depend on the order of m", _order_invariance),
}


def run_suite(name: str, nmax: int, cap: int = DEFAULT_CAP) -> CheckResult:
    statement, fn = SUITES[name]
    res = CheckResult(name, statement, nmax)
    t0 = time.perf_counter()
    try:
        fn(res, nmax, cap)
    except _Fail as e:
        res.passed = False
        res.counterexample = str(e)
    res.seconds = time.perf_counter() - t0
    return res


def run_all(nmax: int, cap: int = DEFAULT_CAP) -> list[CheckResult]:
    return [run_suite(name, nmax, cap) for name in SUITES]
