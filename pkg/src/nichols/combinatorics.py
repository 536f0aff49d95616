"""
Permutations, positive braid words and q-combinatorics.

Permutations are tuples in one-line notation on {1..k}.  Products compose
right to left: (p*q)(x) = p(q(x)).  The adjacent transposition tau_i swaps
i and i+1, and a word [i1, ..., il] stands for tau_i1 * ... * tau_il.
"""

from __future__ import annotations

from itertools import combinations, permutations

from .errors import InternalMismatch


def identity(k: int) -> tuple:
    return tuple(range(1, k + 1))


def is_permutation(p) -> bool:
    return sorted(p) == list(range(1, len(p) + 1))


def compose(p, q) -> tuple:
    """(p*q)(x) = p(q(x))."""
    return tuple(p[x - 1] for x in q)


def inverse(p) -> tuple:
    out = [0] * len(p)
    for i, v in enumerate(p, 1):
        out[v - 1] = i
    return tuple(out)


def transposition(k: int, i: int) -> tuple:
    p = list(range(1, k + 1))
    p[i - 1], p[i] = p[i], p[i - 1]
    return tuple(p)


def inversions(p) -> int:
    n = len(p)
    return sum(1 for a in range(n) for b in range(a + 1, n) if p[a] > p[b])


def word_to_permutation(word, k: int) -> tuple:
    p = identity(k)
    for i in word:
        # right multiplication by tau_i swaps the entries in positions i, i+1
        p = list(p)
        p[i - 1], p[i] = p[i], p[i - 1]
        p = tuple(p)
    return p


def reduced_word(p) -> list:
    """A reduced expression for p.

    Sorts the one-line notation by repeatedly carrying the largest misplaced
    value to the right with adjacent swaps; the swap positions, read
    backwards, form the word.
    """
    cur = list(p)
    swaps = []
    for value in range(len(cur), 0, -1):
        pos = cur.index(value)
        while pos < value - 1:
            cur[pos], cur[pos + 1] = cur[pos + 1], cur[pos]
            swaps.append(pos + 1)
            pos += 1
    return swaps[::-1]


def matsumoto_lift(p) -> list:
    """Positive braid word of the Matsumoto section (a reduced word of p)."""
    return reduced_word(p)


def all_reduced_words(p) -> list:
    """Every reduced expression of p, by exhaustive descent (small k only)."""
    k = len(p)
    if inversions(p) == 0:
        return [[]]
    out = []
    for i in range(1, k):
        # right descent: p(i) > p(i+1) means p = p' * tau_i with |p'| = |p| - 1
        if p[i - 1] > p[i]:
            q = list(p)
            q[i - 1], q[i] = q[i], q[i - 1]
            for w in all_reduced_words(tuple(q)):
                out.append(w + [i])
    return sorted(out)


def enumerate_sym(k: int):
    for p in permutations(range(1, k + 1)):
        yield tuple(p)


def enumerate_shuffles(i: int, j: int):
    """The (i, j)-shuffles: tau(1) < ... < tau(i) and tau(i+1) < ... < tau(i+j)."""
    n = i + j
    for first in combinations(range(1, n + 1), i):
        rest = [x for x in range(1, n + 1) if x not in first]
        yield tuple(first) + tuple(rest)


# --- q-numbers ---------------------------------------------------------------

def _one(q):
    return q ** 0


def q_int(n: int, q):
    """(n)_q = 1 + q + ... + q^(n-1)."""
    total = _one(q) * 0
    power = _one(q)
    for _ in range(n):
        total = total + power
        power = power * q
    return total


def q_factorial(n: int, q):
    out = _one(q)
    for i in range(1, n + 1):
        out = out * q_int(i, q)
    return out


def q_binomial(n: int, k: int, q):
    """Gaussian binomial by the Pascal recurrence; zero outside 0 <= k <= n."""
    if k < 0 or k > n or n < 0:
        return _one(q) * 0
    row = [_one(q)]
    for m in range(1, n + 1):
        new = [_one(q)] * (m + 1)
        for r in range(1, m):
            new[r] = row[r - 1] + (q ** r) * row[r]
        row = new
    return row[k]


def gauss_generating_function(k: int, q):
    """Sum over S_k of q^inversions, cross-checked against prod (i)_q."""
    brute = _one(q) * 0
    for p in enumerate_sym(k):
        brute = brute + q ** inversions(p)
    prod = q_factorial(k, q)
    if brute != prod:
        raise InternalMismatch(f"inversion generating function disagrees at k={k}")
    return prod
