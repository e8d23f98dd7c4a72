"""The multispecies TASEP on a ring: transitions, exact stationary law, simulation.

At each step a uniform position i is chosen; if its letter is strictly smaller
than the letter cyclically to its left, the two swap. With rates, the swap is
accepted with probability x_c / max(x) (uniformization), so the discrete chain
has the same stationary law as the continuous-time one.
"""
from __future__ import annotations

import csv
import enum
import io
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial, lcm, prod
from typing import Sequence

import numpy as np

from .errors import DEFAULT_CAP, SolverError, StateCapExceeded
from .mlq import count_all, partition_function
from .words import TypeVector, Word, as_word, check_type, format_type, format_word, type_of, words_of_type

RNG_ALGORITHM = "numpy-philox4x64-10:positions=Philox(seed),accept=Philox(seed).jumped(1),chunk=65536"
_CHUNK = 1 << 16


class Convention(enum.Enum):
    """Which letter's class sets the rate of a swap.

    JUMPER_CLASS: the smaller letter c (the one moving left) swaps at rate x_c.
    BLOCKER_CLASS: the larger letter c it overtakes sets rate x_{c-1}.
    """

    JUMPER_CLASS = "jumper"
    BLOCKER_CLASS = "blocker"


@dataclass(frozen=True)
class ChainSpec:
    m: TypeVector
    rates: tuple[Fraction, ...] | None = None
    convention: Convention = Convention.JUMPER_CLASS

    def __post_init__(self):
        object.__setattr__(self, "m", check_type(self.m))
        if self.rates is not None:
            rates = tuple(Fraction(x) for x in self.rates)
            if len(rates) != len(self.m) - 1:
                raise ValueError(f"type {self.m} needs {len(self.m) - 1} rates, got {len(rates)}")
            if any(x <= 0 for x in rates):
                raise ValueError("rates must be positive")
            object.__setattr__(self, "rates", rates)
        object.__setattr__(self, "convention", Convention(self.convention))

    @property
    def n(self) -> int:
        return sum(self.m)

    @property
    def homogeneous(self) -> bool:
        return self.rates is None or len(set(self.rates)) <= 1

    def acceptance(self, left: int, right: int) -> Fraction:
        """Probability that a proposed swap of ``left, right`` (right < left) goes through."""
        if self.rates is None:
            return Fraction(1)
        if self.convention is Convention.JUMPER_CLASS:
            x = self.rates[right - 1]
        else:
            x = self.rates[left - 2]
        return x / max(self.rates)


def num_states(m: Sequence[int]) -> int:
    return factorial(sum(m)) // prod(factorial(k) for k in m)


def transitions(w: Sequence[int], spec: ChainSpec | None = None) -> tuple[list[tuple[Word, Fraction]], Fraction]:
    """Outgoing moves of ``w`` as ``(target, probability)`` pairs, plus the loop probability.

    One entry per cyclic descent, so the list may in principle repeat a target.
    """
    w = as_word(w)
    n = len(w)
    moves = []
    for i in range(n):
        left = (i - 1) % n
        if w[i] < w[left]:
            v = list(w)
            v[i], v[left] = v[left], v[i]
            p = Fraction(1, n) if spec is None else Fraction(1, n) * spec.acceptance(w[left], w[i])
            moves.append((tuple(v), p))
    return moves, 1 - sum((p for _, p in moves), Fraction(0))


def transition_matrix(spec: ChainSpec, cap: int = DEFAULT_CAP) -> tuple[list[Word], list[dict[int, Fraction]]]:
    """Sparse row-stochastic matrix over the words of type ``spec.m``.

    Returns the states (lexicographic) and, per state, a dict mapping target
    indices to probabilities; repeated targets are summed.
    """
    count = num_states(spec.m)
    if count > cap:
        raise StateCapExceeded(f"type {spec.m} has {count} states, cap is {cap}")
    states = list(words_of_type(spec.m))
    index = {w: i for i, w in enumerate(states)}
    rows = []
    for i, w in enumerate(states):
        moves, loop = transitions(w, spec)
        row: dict[int, Fraction] = {}
        if loop:
            row[i] = loop
        for v, p in moves:
            j = index[v]
            row[j] = row.get(j, Fraction(0)) + p
        rows.append(row)
    return states, rows


def dense(rows: list[dict[int, Fraction]]) -> list[list[Fraction]]:
    n = len(rows)
    return [[row.get(j, Fraction(0)) for j in range(n)] for row in rows]


def solve_sparse(equations: list[dict[int, Fraction]], rhs: list[Fraction], nvars: int) -> list[Fraction]:
    """Exact sparse Gaussian elimination for a square system with a unique solution.

    Pivots are chosen to keep fill-in small: the shortest remaining equation,
    and within it the variable appearing in the fewest remaining equations.
    """
    eqs = [dict(e) for e in equations]
    b = list(rhs)
    live = set(range(len(eqs)))
    where: dict[int, set[int]] = {v: set() for v in range(nvars)}
    for k, e in enumerate(eqs):
        for v in e:
            where[v].add(k)
    pivots: list[tuple[int, int]] = []
    while live:
        k = min(live, key=lambda k: (len(eqs[k]), k))
        e = eqs[k]
        if not e:
            if b[k] != 0:
                raise SolverError("inconsistent stationary system")
            live.discard(k)
            continue
        var = min(e, key=lambda v: (len(where[v]), v))
        live.discard(k)
        for v in e:
            where[v].discard(k)
        pv = e[var]
        for k2 in list(where[var]):
            e2 = eqs[k2]
            factor = e2[var] / pv
            for v, c in e.items():
                new = e2.get(v, 0) - factor * c
                if new:
                    if v not in e2:
                        where[v].add(k2)
                    e2[v] = new
                elif v in e2:
                    del e2[v]
                    where[v].discard(k2)
            b[k2] -= factor * b[k]
        pivots.append((k, var))
    if len(pivots) != nvars:
        raise SolverError(f"stationary system has rank {len(pivots)} < {nvars}")
    x: list[Fraction | None] = [None] * nvars
    for k, var in reversed(pivots):
        e = eqs[k]
        acc = b[k] - sum(c * x[v] for v, c in e.items() if v != var)
        x[var] = acc / e[var]
    return x


@dataclass
class StationaryTable:
    m: TypeVector
    entries: dict[Word, Fraction]
    rates: tuple[Fraction, ...] | None = None
    method: str = "exact"

    def __getitem__(self, w) -> Fraction:
        return self.entries[tuple(w)]

    @property
    def Z(self) -> int:
        """Common denominator used for export: the MLQ count for homogeneous chains."""
        if self.rates is None or len(set(self.rates)) <= 1:
            z = partition_function(self.m)
            if all((p * z).denominator == 1 for p in self.entries.values()):
                return z
        return lcm(*(p.denominator for p in self.entries.values()))

    def as_strings(self) -> dict[str, str]:
        z = self.Z
        return {format_word(w): f"{p * z}/{z}" for w, p in sorted(self.entries.items())}

    def to_dict(self) -> dict:
        d = {"type": format_type(self.m), "n": sum(self.m), "Z": str(self.Z), "entries": self.as_strings()}
        if self.rates is not None:
            d["rates"] = [str(x) for x in self.rates]
        return d

    def to_json(self, **kw) -> str:
        return json.dumps(self.to_dict(), **kw)

    def to_csv(self) -> str:
        z = self.Z
        buf = io.StringIO()
        out = csv.writer(buf, lineterminator="\n")
        out.writerow(["word", "probability_num", "probability_den"])
        for w, p in sorted(self.entries.items()):
            out.writerow([format_word(w), p * z, z])
        return buf.getvalue()

    @classmethod
    def from_json(cls, s: str) -> "StationaryTable":
        from .words import parse_type, parse_word

        d = json.loads(s)
        entries = {parse_word(w): Fraction(p) for w, p in d["entries"].items()}
        rates = tuple(Fraction(x) for x in d["rates"]) if "rates" in d else None
        return cls(parse_type(d["type"]), entries, rates)


@lru_cache(maxsize=512)
def _stationary(spec: ChainSpec, cap: int) -> tuple[tuple[Word, Fraction], ...]:
    states, rows = transition_matrix(spec, cap)
    N = len(states)
    # column equations of pi P = pi, i.e. sum_v pi_v P(v,u) - pi_u = 0
    eqs: list[dict[int, Fraction]] = [dict() for _ in range(N)]
    for v, row in enumerate(rows):
        for u, p in row.items():
            eqs[u][v] = eqs[u].get(v, 0) + p
    for u in range(N):
        c = eqs[u].get(u, 0) - 1
        if c:
            eqs[u][u] = c
        else:
            eqs[u].pop(u, None)
    # one balance equation is redundant; replace it by pi_0 = 1 and normalise afterwards
    eqs[-1] = {0: Fraction(1)}
    rhs = [Fraction(0)] * N
    rhs[-1] = Fraction(1)
    x = solve_sparse(eqs, rhs, N)
    total = sum(x)
    if total == 0 or any(p < 0 for p in x):
        raise SolverError(f"stationary solve for {spec.m} produced a non-probability vector")
    return tuple((w, p / total) for w, p in zip(states, x))


def stationary_exact(spec: ChainSpec | Sequence[int], cap: int = DEFAULT_CAP) -> StationaryTable:
    """Exact stationary distribution by sparse rational elimination.

    Accepts a bare type vector for the homogeneous chain. Inhomogeneous specs
    are solved the same way.
    """
    if not isinstance(spec, ChainSpec):
        spec = ChainSpec(tuple(spec))
    return StationaryTable(spec.m, dict(_stationary(spec, cap)), spec.rates, "exact")


def stationary_mlq(m: Sequence[int], budget: int | None = None) -> StationaryTable:
    """pi(u) = [u] / Z_m from MLQ counts."""
    m = check_type(m)
    z = partition_function(m)
    counts = count_all(m, budget=budget)
    entries = {w: Fraction(counts.get(w, 0), z) for w in words_of_type(m)}
    return StationaryTable(m, entries, None, "mlq")


def balance_defects(table: StationaryTable) -> dict[Word, Fraction]:
    """Words where k * pi(u) != sum over v -> u of pi(v), with the difference.

    k is the number of moves out of u. Only meaningful for the homogeneous
    chain, where every move has the same probability.
    """
    incoming: dict[Word, Fraction] = {w: Fraction(0) for w in table.entries}
    out_degree = {}
    for v, p in table.entries.items():
        moves, _ = transitions(v)
        out_degree[v] = len(moves)
        for u, _ in moves:
            incoming[u] += p
    return {
        u: out_degree[u] * table.entries[u] - incoming[u]
        for u in table.entries
        if out_degree[u] * table.entries[u] != incoming[u]
    }


def simulate(spec: ChainSpec, start: Sequence[int], steps: int, seed: int) -> dict[Word, int]:
    """Visit counts of a single trajectory, the start state included (steps + 1 visits).

    Positions come from ``Philox(seed)``, acceptance uniforms (rates only)
    from the jumped stream, both drawn in fixed chunks; see ``RNG_ALGORITHM``.
    """
    start = as_word(start)
    if type_of(start) != spec.m:
        raise ValueError(f"start word {format_word(start)} does not have type {spec.m}")
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    n = spec.n
    pos_rng = np.random.Generator(np.random.Philox(seed))
    acc_rng = np.random.Generator(np.random.Philox(seed).jumped(1))
    homogeneous = spec.rates is None

    ids: dict[Word, int] = {}
    words: list[Word] = []
    table: list[list[tuple[int, float]] | None] = []

    def intern(w):
        i = ids.get(w)
        if i is None:
            i = ids[w] = len(words)
            words.append(w)
            table.append(None)
        return i

    def row(i):
        w = words[i]
        out = []
        for p in range(n):
            left = (p - 1) % n
            if w[p] < w[left]:
                v = list(w)
                v[p], v[left] = v[left], v[p]
                out.append((intern(tuple(v)), float(spec.acceptance(w[left], w[p]))))
            else:
                out.append((i, 0.0))
        table[i] = out
        return out

    cur = intern(start)
    counts: dict[int, int] = {cur: 1}
    done = 0
    while done < steps:
        k = min(_CHUNK, steps - done)
        positions = pos_rng.integers(0, n, size=k).tolist()
        if homogeneous:
            for p in positions:
                r = table[cur] or row(cur)
                cur = r[p][0]
                counts[cur] = counts.get(cur, 0) + 1
        else:
            uniforms = acc_rng.random(size=k).tolist()
            for p, u in zip(positions, uniforms):
                r = table[cur] or row(cur)
                nxt, a = r[p]
                if u < a:
                    cur = nxt
                counts[cur] = counts.get(cur, 0) + 1
        done += k
    return {words[i]: c for i, c in sorted(counts.items(), key=lambda kv: words[kv[0]])}


def tv_distance(empirical: dict[Word, int], exact: StationaryTable) -> Fraction:
    """Total-variation distance between normalised visit counts and an exact table, as a fraction."""
    total = sum(empirical.values())
    keys = set(empirical) | set(exact.entries)
    return sum(
        (abs(Fraction(empirical.get(w, 0), total) - exact.entries.get(w, Fraction(0))) for w in keys),
        Fraction(0),
    ) / 2
