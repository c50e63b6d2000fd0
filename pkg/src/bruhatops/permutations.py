"""
Permutations of {1..n} in one-line notation.

A permutation is a plain tuple of the integers 1..n.  Positions, simple
reflection indices and transposition indices are all 1-based, matching the
usual combinatorics conventions; only raw Python indexing inside function
bodies is 0-based.

Right multiplication acts on positions (w * s_i swaps the entries at
positions i and i+1), left multiplication acts on values (s_i * w swaps the
values i and i+1 wherever they sit).

>>> length((3, 1, 2))
2
>>> lehmer_code((3, 1, 2))
(2, 0)
>>> inverse((2, 3, 1))
(3, 1, 2)
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable

Permutation = tuple[int, ...]

__all__ = [
    "Permutation",
    "validated",
    "identity",
    "longest_element",
    "length",
    "lehmer_code",
    "inverse",
    "w0_times",
    "right_multiply_simple",
    "right_multiply_transposition",
    "left_multiply_simple",
    "weak_covers_up",
    "strong_covers_up",
    "permutations_by_rank",
    "permutations_of_rank",
    "num_inversions_max",
    "to_string",
    "parse",
]


def validated(w: Iterable[int]) -> Permutation:
    """Return ``w`` as a tuple, checking it is a permutation of 1..n.

    >>> validated([2, 1, 3])
    (2, 1, 3)
    >>> validated((1, 1, 2))
    Traceback (most recent call last):
        ...
    ValueError: not a permutation of 1..3: (1, 1, 2)
    """
    word = tuple(w)
    n = len(word)
    if n == 0 or sorted(word) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {word}")
    return word


def identity(n: int) -> Permutation:
    """The identity permutation of S_n."""
    if n < 1:
        raise ValueError(f"n must be positive: {n}")
    return tuple(range(1, n + 1))


def longest_element(n: int) -> Permutation:
    """The order-reversing permutation n, n-1, ..., 1 (the unique top element).

    >>> longest_element(4)
    (4, 3, 2, 1)
    """
    if n < 1:
        raise ValueError(f"n must be positive: {n}")
    return tuple(range(n, 0, -1))


def num_inversions_max(n: int) -> int:
    """Largest possible inversion count in S_n, i.e. n choose 2."""
    return n * (n - 1) // 2


def length(w: Iterable[int]) -> int:
    """Coxeter length = number of inversions (i < j with w_i > w_j).

    >>> length((1, 2, 3))
    0
    >>> length((3, 2, 1))
    3
    """
    word = validated(w)
    return sum(
        1
        for i in range(len(word))
        for j in range(i + 1, len(word))
        if word[i] > word[j]
    )


def lehmer_code(w: Iterable[int]) -> tuple[int, ...]:
    """Lehmer code: c_i = #{j > i : w_j < w_i}, truncated to length n-1.

    The last entry c_n is always 0 and is dropped, so the code of w in S_n
    is a vector of length n-1 bounded by the staircase (n-1, n-2, ..., 1).

    >>> lehmer_code((3, 1, 2))
    (2, 0)
    >>> lehmer_code((1, 2, 3))
    (0, 0)
    """
    word = validated(w)
    n = len(word)
    return tuple(
        sum(1 for j in range(i + 1, n) if word[j] < word[i]) for i in range(n - 1)
    )


def inverse(w: Iterable[int]) -> Permutation:
    """Group inverse: the value at position w_i is i.

    >>> inverse((2, 3, 1))
    (3, 1, 2)
    >>> inverse(inverse((4, 1, 3, 2)))
    (4, 1, 3, 2)
    """
    word = validated(w)
    out = [0] * len(word)
    for pos, val in enumerate(word, start=1):
        out[val - 1] = pos
    return tuple(out)


def w0_times(w: Iterable[int]) -> Permutation:
    """Left-multiply by the longest element: every value k becomes n+1-k.

    >>> w0_times((1, 3, 2))
    (3, 1, 2)
    """
    word = validated(w)
    n = len(word)
    return tuple(n + 1 - v for v in word)


def right_multiply_simple(w: Iterable[int], i: int) -> Permutation:
    """w * s_i: swap the entries at positions i and i+1 (1-based).

    >>> right_multiply_simple((1, 2, 3), 1)
    (2, 1, 3)
    """
    word = validated(w)
    if not 1 <= i <= len(word) - 1:
        raise ValueError(f"simple index out of range: {i}")
    out = list(word)
    out[i - 1], out[i] = out[i], out[i - 1]
    return tuple(out)


def right_multiply_transposition(w: Iterable[int], i: int, j: int) -> Permutation:
    """w * t_ij: swap the entries at positions i < j (1-based).

    >>> right_multiply_transposition((2, 1, 3), 1, 3)
    (3, 1, 2)
    """
    word = validated(w)
    if not 1 <= i < j <= len(word):
        raise ValueError(f"transposition indices out of range: ({i}, {j})")
    out = list(word)
    out[i - 1], out[j - 1] = out[j - 1], out[i - 1]
    return tuple(out)


def left_multiply_simple(w: Iterable[int], i: int) -> Permutation:
    """s_i * w: swap the values i and i+1 wherever they occur.

    >>> left_multiply_simple((3, 1, 2), 1)
    (3, 2, 1)
    """
    word = validated(w)
    if not 1 <= i <= len(word) - 1:
        raise ValueError(f"simple index out of range: {i}")
    swap = {i: i + 1, i + 1: i}
    return tuple(swap.get(v, v) for v in word)


def weak_covers_up(w: Iterable[int]) -> set[tuple[Permutation, int]]:
    """All weak-order covers w < w*s_i, as pairs (w*s_i, i).

    A right multiplication by s_i goes up exactly at the ascents of w
    (positions i with w_i < w_{i+1}).

    >>> sorted(weak_covers_up((1, 2, 3)))
    [((1, 3, 2), 2), ((2, 1, 3), 1)]
    """
    word = validated(w)
    return {
        (right_multiply_simple(word, i), i)
        for i in range(1, len(word))
        if word[i - 1] < word[i]
    }


def strong_covers_up(w: Iterable[int]) -> set[tuple[Permutation, int, int]]:
    """All strong-order covers w < w*t_ij, as triples (w*t_ij, i, j).

    w * t_ij covers w exactly when w_i < w_j and no intermediate position
    holds a value strictly between them.

    >>> sorted(strong_covers_up((2, 1, 3)))
    [((2, 3, 1), 2, 3), ((3, 1, 2), 1, 3)]
    """
    word = validated(w)
    n = len(word)
    covers = set()
    for i in range(1, n):
        for j in range(i + 1, n + 1):
            a, b = word[i - 1], word[j - 1]
            if a < b and not any(a < word[k] < b for k in range(i, j - 1)):
                covers.add((right_multiply_transposition(word, i, j), i, j))
    return covers


@lru_cache(maxsize=None)
def permutations_by_rank(n: int) -> tuple[tuple[Permutation, ...], ...]:
    """All of S_n stratified by length; each stratum sorted lexicographically.

    >>> permutations_by_rank(3)[1]
    ((1, 3, 2), (2, 1, 3))
    """
    if n < 1:
        raise ValueError(f"n must be positive: {n}")
    ranks: list[list[Permutation]] = [[] for _ in range(num_inversions_max(n) + 1)]
    # itertools.permutations emits words in lex order, keeping strata sorted.
    for word in itertools.permutations(range(1, n + 1)):
        ranks[length(word)].append(word)
    return tuple(tuple(stratum) for stratum in ranks)


def permutations_of_rank(n: int, k: int) -> list[Permutation]:
    """All w in S_n with length k, in lex order.

    >>> permutations_of_rank(3, 1)
    [(1, 3, 2), (2, 1, 3)]
    """
    strata = permutations_by_rank(n)
    if not 0 <= k < len(strata):
        raise ValueError(f"rank out of range for S_{n}: {k}")
    return list(strata[k])


def to_string(w: Iterable[int]) -> str:
    """One-line string form: digits for n <= 9, comma-separated otherwise.

    >>> to_string((3, 1, 2))
    '312'
    """
    word = validated(w)
    if len(word) <= 9:
        return "".join(map(str, word))
    return ",".join(map(str, word))


def parse(text: str) -> Permutation:
    """Inverse of :func:`to_string`; accepts either encoding.

    >>> parse("312")
    (3, 1, 2)
    >>> parse("10,2,3,4,5,6,7,8,9,1")[0]
    10
    """
    stripped = text.strip()
    parts = stripped.split(",") if "," in stripped else list(stripped)
    try:
        word = tuple(int(p) for p in parts)
    except ValueError:
        raise ValueError(f"cannot parse permutation: {text!r}") from None
    return validated(word)


if __name__ == "__main__":
    import doctest

    doctest.testmod()
