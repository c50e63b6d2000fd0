"""
Exact integer linear algebra: dense matrices over Python ints, determinants,
Smith normal form, and the Smith-form prediction for layer matrices of the
weighted Bruhat orders.

Everything here is exact; no floating point anywhere.  A matrix is a plain
list of rows of ints.  Smith invariants are returned as a tuple of
nonnegative integers b_1 | b_2 | ... of length min(rows, cols) -- the
diagonal of the Smith form with the surrounding zero padding trimmed away,
so rank-deficient matrices show trailing zeros.
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

IntMatrix = list[list[int]]

__all__ = [
    "IntMatrix",
    "identity_matrix",
    "matmul",
    "transpose",
    "determinant",
    "snf",
    "snf_via_minor_gcd",
    "divisibility_normalize",
    "mahonian_numbers",
    "rank_size",
    "predicted_snf",
    "verify_snf_theorem",
    "matrix_to_json",
    "snf_to_json",
    "MINOR_GCD_SIZE_BOUND",
]

# snf_via_minor_gcd enumerates all k x k minors; past this size the count
# explodes combinatorially, so refuse rather than hang.
MINOR_GCD_SIZE_BOUND = 8


def identity_matrix(k: int) -> IntMatrix:
    return [[1 if i == j else 0 for j in range(k)] for i in range(k)]


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact product; shapes must agree."""
    if a and b and len(a[0]) != len(b):
        raise ValueError(f"shape mismatch: {len(a)}x{len(a[0])} times {len(b)}x{len(b[0])}")
    cols = len(b[0]) if b else 0
    out = [[0] * cols for _ in a]
    for i, row in enumerate(a):
        out_i = out[i]
        for k, aik in enumerate(row):
            if aik:
                b_k = b[k]
                for j in range(cols):
                    out_i[j] += aik * b_k[j]
    return out


def transpose(a: IntMatrix) -> IntMatrix:
    return [list(col) for col in zip(*a)] if a else []


def determinant(mat: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    n = len(mat)
    if any(len(row) != n for row in mat):
        raise ValueError("determinant requires a square matrix")
    if n == 0:
        return 1
    a = [list(row) for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Bareiss update: division by the previous pivot is exact.
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def divisibility_normalize(diag: list[int] | tuple[int, ...]) -> tuple[int, ...]:
    """Smith invariants of a diagonal matrix.

    Repeatedly replaces adjacent pairs (a, b) violating a | b with
    (gcd, lcm); both operations are realizable by unimodular row/column
    moves, and the sweep converges to the unique divisibility chain.
    """
    d = [abs(x) for x in diag]
    changed = True
    while changed:
        changed = False
        for i in range(len(d) - 1):
            x, y = d[i], d[i + 1]
            if y == 0 or (x != 0 and y % x == 0):
                continue
            g = math.gcd(x, y)
            d[i], d[i + 1] = g, 0 if g == 0 else x * y // g
            changed = True
    return tuple(d)


def snf(mat: IntMatrix) -> tuple[int, ...]:
    """Smith invariants b_1 | b_2 | ... of an integer matrix.

    Elimination with minimal-absolute-value pivoting: the smallest nonzero
    entry of the trailing submatrix is moved to the pivot slot, its row and
    column are reduced, and any nonzero remainder (strictly smaller than the
    pivot) becomes the new pivot, so each round terminates.  A final
    divisibility repair on the diagonal yields the canonical chain.
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    if any(len(row) != cols for row in mat):
        raise ValueError("ragged matrix")
    size = min(rows, cols)
    a = [list(row) for row in mat]
    diag: list[int] = []
    for t in range(size):
        best: tuple[int, int] | None = None
        for i in range(t, rows):
            for j in range(t, cols):
                v = a[i][j]
                if v and (best is None or abs(v) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            diag.extend([0] * (size - t))
            break
        bi, bj = best
        if bi != t:
            a[t], a[bi] = a[bi], a[t]
        if bj != t:
            for row in a:
                row[t], row[bj] = row[bj], row[t]
        while True:
            swapped = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    q = a[i][t] // a[t][t]
                    if q:
                        row_i, row_t = a[i], a[t]
                        for j in range(t, cols):
                            row_i[j] -= q * row_t[j]
                    if a[i][t]:
                        # remainder is strictly smaller: promote it to pivot
                        a[t], a[i] = a[i], a[t]
                        swapped = True
            if swapped:
                continue
            for j in range(t + 1, cols):
                if a[t][j]:
                    q = a[t][j] // a[t][t]
                    if q:
                        for i in range(t, rows):
                            a[i][j] -= q * a[i][t]
                    if a[t][j]:
                        for i in range(rows):
                            a[i][t], a[i][j] = a[i][j], a[i][t]
                        swapped = True
            if not swapped:
                break
        diag.append(abs(a[t][t]))
    return divisibility_normalize(diag)


def snf_via_minor_gcd(mat: IntMatrix, bound: int = MINOR_GCD_SIZE_BOUND) -> tuple[int, ...]:
    """Smith invariants via determinantal divisors; independent oracle.

    d_k = gcd of all k x k minors, b_k = d_k / d_{k-1}.  Exponential in the
    matrix size, hence the hard size bound.
    """
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    if any(len(row) != cols for row in mat):
        raise ValueError("ragged matrix")
    size = min(rows, cols)
    if size > bound:
        raise ValueError(f"matrix too large for the minor-gcd route: min dim {size} > {bound}")
    out: list[int] = []
    d_prev = 1
    for k in range(1, size + 1):
        if d_prev == 0:
            out.append(0)
            continue
        g = 0
        done = False
        for rsel in itertools.combinations(range(rows), k):
            for csel in itertools.combinations(range(cols), k):
                sub = [[mat[i][j] for j in csel] for i in rsel]
                g = math.gcd(g, determinant(sub))
                if g == d_prev:
                    # every k-minor is a Z-combination of (k-1)-minors, so
                    # the gcd can never drop below d_{k-1}: stop early
                    done = True
                    break
            if done:
                break
        out.append(0 if g == 0 else g // d_prev)
        d_prev = g
    return tuple(out)


@lru_cache(maxsize=None)
def mahonian_numbers(n: int) -> tuple[int, ...]:
    """Sizes of the length strata of S_n: coefficients of [n]_q!.

    >>> mahonian_numbers(4)
    (1, 3, 5, 6, 5, 3, 1)
    """
    if n < 1:
        raise ValueError(f"n must be positive: {n}")
    coeffs = [1]
    for m in range(2, n + 1):
        nxt = [0] * (len(coeffs) + m - 1)
        for shift in range(m):
            for k, c in enumerate(coeffs):
                nxt[k + shift] += c
        coeffs = nxt
    return tuple(coeffs)


def rank_size(n: int, k: int) -> int:
    """Number of permutations in S_n with exactly k inversions."""
    sizes = mahonian_numbers(n)
    if not 0 <= k < len(sizes):
        raise ValueError(f"rank out of range for S_{n}: {k}")
    return sizes[k]


def _check_layer_pair(n: int, low: int, high: int) -> int:
    top = n * (n - 1) // 2
    if not (0 <= low < high <= top):
        raise ValueError(f"need 0 <= l < l' <= {top}, got ({low}, {high})")
    if low + high > top:
        raise ValueError(f"need l + l' <= {top}, got {low} + {high}")
    return top


def predicted_snf(n: int, low: int, high: int) -> tuple[int, ...]:
    """Predicted Smith invariants for the four rank-(low, high) layer maps.

    Diagonal model: for i = 0..low there are rank_size(n,i) - rank_size(n,i-1)
    entries equal to C(high-i, low-i); its Smith chain scaled by (high-low)!.
    """
    _check_layer_pair(n, low, high)
    entries: list[int] = []
    for i in range(low + 1):
        count = rank_size(n, i) - (rank_size(n, i - 1) if i > 0 else 0)
        entries.extend([math.comb(high - i, low - i)] * count)
    scale = math.factorial(high - low)
    return tuple(scale * b for b in divisibility_normalize(entries))


def verify_snf_theorem(n: int, low: int, high: int) -> dict:
    """Check that all four layer matrices share the predicted Smith form.

    The four: the raising composite over ranks [low, high] and over the
    complementary ranks [N-high, N-low], and the lowering composite over the
    same two windows, all in the padded Schubert basis (equivalently, layer
    matrices of the strong/code-weighted and weak/index-weighted diagrams).
    """
    from .hasse import build_hasse, layer_matrix  # local import avoids a module cycle

    top = _check_layer_pair(n, low, high)
    expected = predicted_snf(n, low, high)
    strong = build_hasse(n, "strong", "code")
    weak = build_hasse(n, "weak", "nabla")
    windows = [
        ("delta", strong, low, high),
        ("delta", strong, top - high, top - low),
        ("nabla", weak, low, high),
        ("nabla", weak, top - high, top - low),
    ]
    failures = []
    for label, diagram, a, b in windows:
        got = snf(layer_matrix(diagram, a, b))
        if got != expected:
            failures.append(
                {
                    "witness": f"{label}[{a},{b}]",
                    "expected": [str(x) for x in expected],
                    "actual": [str(x) for x in got],
                }
            )
    return {
        "suite": "snf",
        "n": n,
        "from": low,
        "to": high,
        "predicted": [str(x) for x in expected],
        "checked": len(windows),
        "failures": failures,
    }


def matrix_to_json(mat: IntMatrix) -> list[list[str]]:
    """Decimal-string encoding, lossless for arbitrarily large entries."""
    return [[str(x) for x in row] for row in mat]


def snf_to_json(invariants: tuple[int, ...]) -> dict:
    return {
        "invariants": [str(b) for b in invariants],
        "rank": sum(1 for b in invariants if b),
    }
