"""Words, type vectors and the word-level maps used by the TASEP and MLQ code.

A word is a tuple of positive ints. A type vector is a tuple ``(m_1, ..., m_r)``
of letter multiplicities. Strict types have every entry positive; relaxed types
may additionally end in zeros and are only accepted where a caller asks for
them explicitly (``relaxed=True``).
"""
from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterator, Sequence

Word = tuple[int, ...]
TypeVector = tuple[int, ...]


def as_word(letters: Sequence[int]) -> Word:
    w = tuple(int(x) for x in letters)
    if not w:
        raise ValueError("empty word")
    if min(w) < 1:
        raise ValueError(f"letters must be >= 1, got {w}")
    return w


def check_type(m: Sequence[int], relaxed: bool = False) -> TypeVector:
    """Validate a type vector and return it as a tuple.

    Interior zeros are always rejected. Trailing zeros are accepted only when
    ``relaxed`` is set, and the first entry must be positive either way.
    """
    m = tuple(int(x) for x in m)
    if not m:
        raise ValueError("empty type vector")
    if any(x < 0 for x in m):
        raise ValueError(f"negative multiplicity in {m}")
    last = len(m)
    while relaxed and last > 1 and m[last - 1] == 0:
        last -= 1
    if any(x == 0 for x in m[:last]):
        raise ValueError(f"zero multiplicity in {m}" + ("" if relaxed else " (strict mode)"))
    return m


def type_of(w: Sequence[int]) -> TypeVector:
    """Multiplicities of 1..max(w); letters that do not occur give 0 entries."""
    w = as_word(w)
    c = Counter(w)
    return tuple(c.get(i, 0) for i in range(1, max(w) + 1))


def is_strict_word(w: Sequence[int]) -> bool:
    return all(type_of(w))


def sorted_word(m: Sequence[int]) -> Word:
    m = check_type(m)
    return tuple(i for i, k in enumerate(m, start=1) for _ in range(k))


def words_of_type(m: Sequence[int], relaxed: bool = False) -> Iterator[Word]:
    """All words with multiplicities ``m``, in lexicographic order."""
    m = check_type(m, relaxed=relaxed)
    counts = list(m)
    n = sum(counts)
    buf = [0] * n

    def rec(pos):
        if pos == n:
            yield tuple(buf)
            return
        for i, k in enumerate(counts):
            if k:
                counts[i] -= 1
                buf[pos] = i + 1
                yield from rec(pos + 1)
                counts[i] += 1

    yield from rec(0)


def strict_types(n: int) -> Iterator[TypeVector]:
    """Every strict type vector with entries summing to n (compositions of n)."""
    if n < 1:
        return
    for k in range(n):
        for cuts in combinations(range(1, n), k):
            edges = (0,) + cuts + (n,)
            yield tuple(b - a for a, b in zip(edges, edges[1:]))


def cyclic_shifts(w: Sequence[int]) -> list[Word]:
    w = tuple(w)
    return [w[i:] + w[:i] for i in range(len(w))]


def canonical_rotation(w: Sequence[int]) -> Word:
    return min(cyclic_shifts(w))


def merge_top(w: Sequence[int], relaxed: bool = False) -> Word:
    """Replace every occurrence of the largest letter r by r - 1."""
    w = as_word(w)
    r = max(w)
    if r < 2:
        raise ValueError("nothing to merge: word only uses the letter 1")
    if not relaxed:
        check_type(type_of(w))
    return tuple(r - 1 if x == r else x for x in w)


def reverse_complement(w: Sequence[int], r: int) -> Word:
    w = as_word(w)
    if max(w) > r:
        raise ValueError(f"letter {max(w)} exceeds r={r}")
    return tuple(r + 1 - x for x in reversed(w))


def enumerate_suffixes(length: int, b: int, r: int) -> Iterator[Word]:
    """All two-letter words of the given length with ``b`` copies of r and the rest r - 1.

    Order: by the positions of the r's, lexicographically; the sorted word
    (all r's at the end) comes last.
    """
    if r < 2:
        raise ValueError("need r >= 2 to have two letters")
    if not 0 <= b <= length:
        raise ValueError(f"b={b} outside 0..{length}")
    alpha, beta = r - 1, r
    for pos in combinations(range(length), b):
        v = [alpha] * length
        for p in pos:
            v[p] = beta
        yield tuple(v)


def sorted_suffix(length: int, b: int, r: int) -> Word:
    return (r - 1,) * (length - b) + (r,) * b


def collapse_nontrailing(v: Sequence[int], r: int) -> tuple[Word, int]:
    """Turn every non-trailing r into r - 1; return the result and its count of r's."""
    v = tuple(v)
    alpha, beta = r - 1, r
    if any(x not in (alpha, beta) for x in v):
        raise ValueError(f"{v} is not a word over {{{alpha}, {beta}}}")
    k = 0
    while k < len(v) and v[len(v) - 1 - k] == beta:
        k += 1
    return (alpha,) * (len(v) - k) + (beta,) * k, k


# serialization

def format_word(w: Sequence[int]) -> str:
    if all(x <= 9 for x in w):
        return "".join(str(x) for x in w)
    if len(w) == 1:
        return f"{w[0]},"  # keeps "10," apart from the word "10"
    return ",".join(str(x) for x in w)


def parse_word(s: str) -> Word:
    s = s.strip()
    if "," in s:
        return as_word(int(x) for x in s.split(",") if x.strip())
    if not s.isdigit():
        raise ValueError(f"cannot parse word {s!r}")
    return as_word(int(c) for c in s)


def format_type(m: Sequence[int]) -> str:
    return ",".join(str(x) for x in m)


def parse_type(s: str, relaxed: bool = False) -> TypeVector:
    try:
        m = [int(x) for x in s.split(",")]
    except ValueError:
        raise ValueError(f"cannot parse type vector {s!r}") from None
    return check_type(m, relaxed=relaxed)
