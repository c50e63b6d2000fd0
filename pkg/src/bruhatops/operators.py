"""
Layer matrices of the raising/lowering differential operators, and the
verification suites tying them to the weighted Bruhat orders.

All layer matrices follow one convention: rows are indexed by the LOWER
rank, columns by the UPPER rank (lex order on permutations, lex-descending
on monomial exponents), and the entry at (x, y) is the coefficient tying x
to y across the composite, regardless of the direction the operator moves.
Under that convention, the single-step matrix of the raising operator in
the padded Schubert basis is exactly the code-weighted strong-order layer,
and the lowering operator's is the index-weighted weak-order layer.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from .hasse import build_hasse, layer_matrix, weighted_path_count
from .permutations import (
    Permutation,
    identity as identity_perm,
    length,
    longest_element,
    num_inversions_max,
    permutations_by_rank,
    to_string,
    w0_times,
)
from .schubert import (
    apply_delta,
    apply_nabla,
    expand_in_padded_schubert_basis,
    basis_matrix,
    basis_matrix_inverse,
    monomials_of_rank,
    padded_schubert,
    principal_specialization,
    schubert,
    staircase,
)
from .snf import IntMatrix, identity_matrix, matmul, transpose

__all__ = [
    "OperatorSpec",
    "differential_layer_matrix",
    "verify_nabla_theorem",
    "verify_delta_theorem",
    "commutator_check",
    "verify_path_identities",
    "verify_macdonald",
    "transpose_duality_check",
    "nabla_action_chunk",
    "delta_action_chunk",
    "path_identities_chunk",
    "macdonald_chunk",
    "OPERATORS",
    "BASES",
]

OPERATORS = ("nabla", "delta")
BASES = ("monomial", "padded-schubert")


@dataclass(frozen=True)
class OperatorSpec:
    """Which operator, in which basis, on which symmetric group."""

    operator: str
    basis: str
    n: int

    def __post_init__(self) -> None:
        if self.operator not in OPERATORS:
            raise ValueError(f"unknown operator: {self.operator!r}")
        if self.basis not in BASES:
            raise ValueError(f"unknown basis: {self.basis!r}")
        if self.n < 1:
            raise ValueError(f"n must be positive: {self.n}")


@lru_cache(maxsize=None)
def _monomial_step(operator: str, n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Single step rank k -> k+1 in the monomial basis, rows = rank k.

    Raising sends alpha to alpha + e_i with factor rho_i - alpha_i; lowering
    sends beta to beta - e_i with factor beta_i.  Read against the fixed
    row/column convention both give the entry at (alpha, alpha + e_i).
    """
    rho = staircase(n)
    low = monomials_of_rank(n, k)
    high = monomials_of_rank(n, k + 1)
    col = {alpha: idx for idx, alpha in enumerate(high)}
    rows = []
    for alpha in low:
        vec = [0] * len(high)
        for idx, e in enumerate(alpha):
            if e < rho[idx]:
                shifted = alpha[:idx] + (e + 1,) + alpha[idx + 1 :]
                if operator == "delta":
                    vec[col[shifted]] = rho[idx] - e
                else:
                    vec[col[shifted]] = e + 1
        rows.append(tuple(vec))
    return tuple(rows)


def differential_layer_matrix(spec: OperatorSpec, low: int, high: int) -> IntMatrix:
    """Matrix of the (high - low)-fold operator composite between two ranks.

    Rows = rank ``low`` basis elements, columns = rank ``high``; equal ranks
    give the identity.  In the padded Schubert basis the monomial matrix is
    conjugated by the rank-wise change of basis.
    """
    top = num_inversions_max(spec.n)
    if not 0 <= low <= high <= top:
        raise ValueError(f"need 0 <= l <= l' <= {top}, got ({low}, {high})")
    mono = identity_matrix(len(monomials_of_rank(spec.n, low)))
    for k in range(low, high):
        mono = matmul(mono, [list(r) for r in _monomial_step(spec.operator, spec.n, k)])
    if spec.basis == "monomial":
        return mono
    s_low = [list(r) for r in basis_matrix(spec.n, low)]
    s_high = [list(r) for r in basis_matrix(spec.n, high)]
    if spec.operator == "delta":
        inv_high = [list(r) for r in basis_matrix_inverse(spec.n, high)]
        return matmul(matmul(s_low, mono), inv_high)
    inv_low = [list(r) for r in basis_matrix_inverse(spec.n, low)]
    return matmul(matmul(transpose(inv_low), mono), transpose(s_high))


def _padded_step(operator: str, n: int, k: int) -> IntMatrix:
    return differential_layer_matrix(OperatorSpec(operator, "padded-schubert", n), k, k + 1)


def nabla_action_chunk(n: int, perms: list[Permutation]) -> tuple[int, bool, list[dict]]:
    """Per-permutation comparisons for :func:`verify_nabla_theorem`; exposed
    separately so callers can fan chunks out over processes."""
    weak = build_hasse(n, "weak", "nabla")
    into: dict[Permutation, dict[Permutation, int]] = {}
    for src, dst, wt in weak.edges:
        into.setdefault(dst, {})[src] = wt
    failures = []
    checked = 0
    unit_reading_ok = True
    for w in perms:
        expected = into.get(w, {})
        actual = expand_in_padded_schubert_basis(apply_nabla(padded_schubert(w)))
        checked += len(expected)
        if any(c != 1 for c in actual.values()):
            unit_reading_ok = False
        if actual != expected:
            failures.append(
                {
                    "witness": to_string(w),
                    "expected": {to_string(u): str(c) for u, c in sorted(expected.items())},
                    "actual": {to_string(u): str(c) for u, c in sorted(actual.items())},
                }
            )
    return checked, unit_reading_ok, failures


def verify_nabla_theorem(n: int) -> dict:
    """Expand nabla of every padded Schubert polynomial and compare with the
    index-weighted weak-order covers going down.

    Also records whether the weight-free reading (all coefficients 1) would
    survive; it fails as soon as a cover by s_i with i >= 2 appears.
    """
    perms = [w for stratum in permutations_by_rank(n) for w in stratum]
    checked, unit_reading_ok, failures = nabla_action_chunk(n, perms)
    return {
        "suite": "nabla-action",
        "n": n,
        "weight_convention": "cover by s_i carries coefficient i",
        "unit_weight_reading_consistent": unit_reading_ok,
        "checked": checked,
        "failures": failures,
    }


def delta_action_chunk(n: int, perms: list[Permutation]) -> tuple[int, list[dict]]:
    """Per-permutation comparisons for :func:`verify_delta_theorem`."""
    strong = build_hasse(n, "strong", "code")
    outof: dict[Permutation, dict[Permutation, int]] = {}
    for src, dst, wt in strong.edges:
        outof.setdefault(src, {})[dst] = wt
    failures = []
    checked = 0
    for w in perms:
        expected = outof.get(w, {})
        actual = expand_in_padded_schubert_basis(apply_delta(padded_schubert(w)))
        checked += len(expected)
        if actual != expected:
            failures.append(
                {
                    "witness": to_string(w),
                    "expected": {to_string(u): str(c) for u, c in sorted(expected.items())},
                    "actual": {to_string(u): str(c) for u, c in sorted(actual.items())},
                }
            )
    return checked, failures


def verify_delta_theorem(n: int) -> dict:
    """Expand delta of every padded Schubert polynomial and compare with the
    code-weighted strong-order covers going up."""
    perms = [w for stratum in permutations_by_rank(n) for w in stratum]
    checked, failures = delta_action_chunk(n, perms)
    return {
        "suite": "delta-action",
        "n": n,
        "checked": checked,
        "failures": failures,
    }


def commutator_check(n: int) -> bool:
    """[delta, nabla] must act on rank k as the scalar 2k - N.

    Assembled from single-step layer matrices in the padded Schubert basis:
    with D_k the raising step out of rank k and V_k the lowering step back
    from rank k+1 (both stored rows=lower), the commutator on rank k is
    D_{k-1}^T V_{k-1} - V_k D_k^T acting on coordinate columns.
    """
    top = num_inversions_max(n)
    sizes = [len(s) for s in permutations_by_rank(n)]
    for k in range(top + 1):
        acc = [[0] * sizes[k] for _ in range(sizes[k])]
        if k > 0:
            up = _padded_step("delta", n, k - 1)
            down = _padded_step("nabla", n, k - 1)
            for i, row in enumerate(matmul(transpose(up), down)):
                for j, v in enumerate(row):
                    acc[i][j] += v
        if k < top:
            up = _padded_step("delta", n, k)
            down = _padded_step("nabla", n, k)
            for i, row in enumerate(matmul(down, transpose(up))):
                for j, v in enumerate(row):
                    acc[i][j] -= v
        want = 2 * k - top
        for i in range(sizes[k]):
            for j in range(sizes[k]):
                if acc[i][j] != (want if i == j else 0):
                    return False
    return True


def _five_way_failures(n: int, u: Permutation, strong, weak) -> list[dict]:
    """Exact comparisons for one permutation; divisions are cross-multiplied."""
    top = num_inversions_max(n)
    w0 = longest_element(n)
    eps = identity_perm(n)
    lu = length(u)
    spec = principal_specialization(schubert(u))
    co_fact = math.factorial(top - lu)
    fact = math.factorial(lu)
    values = {
        "raising count u to top over (N-l)!": (weighted_path_count(strong, u, w0), co_fact),
        "lowering count bottom to u over l!": (weighted_path_count(weak, eps, u), fact),
        "raising count bottom to w0*u over (N-l)!": (
            weighted_path_count(strong, eps, w0_times(u)),
            co_fact,
        ),
        "lowering count w0*u to top over l!": (
            weighted_path_count(weak, w0_times(u), w0),
            fact,
        ),
    }
    failures = []
    for label, (count, denom) in values.items():
        if count != spec * denom:
            failures.append(
                {
                    "witness": f"{to_string(u)}: {label}",
                    "expected": str(spec * denom),
                    "actual": str(count),
                }
            )
    return failures


def path_identities_chunk(n: int, perms: list[Permutation]) -> list[dict]:
    """Per-permutation comparisons for :func:`verify_path_identities`."""
    strong = build_hasse(n, "strong", "code")
    weak = build_hasse(n, "weak", "nabla")
    failures = []
    for u in perms:
        failures.extend(_five_way_failures(n, u, strong, weak))
    return failures


def verify_path_identities(n: int) -> dict:
    """All four weighted path counts against the principal specialization,
    for every permutation of S_n."""
    perms = [w for stratum in permutations_by_rank(n) for w in stratum]
    failures = path_identities_chunk(n, perms)
    return {
        "suite": "path-identities",
        "n": n,
        "permutations": len(perms),
        "checked": 4 * len(perms),
        "failures": failures,
    }


def macdonald_chunk(n: int, perms: list[Permutation]) -> tuple[int, list[dict]]:
    """Per-permutation comparisons for :func:`verify_macdonald`."""
    weak = build_hasse(n, "weak", "nabla")
    eps = identity_perm(n)
    failures = []
    checked = 0
    for u in perms:
        checked += 1
        expected = math.factorial(length(u)) * principal_specialization(schubert(u))
        got = weighted_path_count(weak, eps, u)
        if got != expected:
            failures.append(
                {
                    "witness": to_string(u),
                    "expected": str(expected),
                    "actual": str(got),
                }
            )
    return checked, failures


def verify_macdonald(n: int) -> dict:
    """Weighted chain count from the identity equals l(u)! times the
    principal specialization of the Schubert polynomial, for every u."""
    perms = [w for stratum in permutations_by_rank(n) for w in stratum]
    checked, failures = macdonald_chunk(n, perms)
    return {"suite": "macdonald", "n": n, "checked": checked, "failures": failures}


def transpose_duality_check(n: int, low: int, high: int) -> bool:
    """Two mirror dualities between the windows [low, high] and
    [N-high, N-low].

    In the monomial basis the raising composite over the complementary
    window is the transpose of the lowering composite under the exponent
    complement alpha -> rho - alpha; in the padded Schubert basis the two
    raising composites are transposes under the relabeling w -> w0*w.
    """
    top = num_inversions_max(n)
    if not (0 <= low <= high <= top):
        raise ValueError(f"need 0 <= l <= l' <= {top}, got ({low}, {high})")
    rho = staircase(n)

    nab = differential_layer_matrix(OperatorSpec("nabla", "monomial", n), low, high)
    dl = differential_layer_matrix(
        OperatorSpec("delta", "monomial", n), top - high, top - low
    )
    lo_monos = monomials_of_rank(n, low)
    hi_monos = monomials_of_rank(n, high)
    co_lo = {m: i for i, m in enumerate(monomials_of_rank(n, top - high))}
    co_hi = {m: i for i, m in enumerate(monomials_of_rank(n, top - low))}
    for a, alpha in enumerate(lo_monos):
        for b, beta in enumerate(hi_monos):
            r = co_lo[tuple(x - y for x, y in zip(rho, beta))]
            c = co_hi[tuple(x - y for x, y in zip(rho, alpha))]
            if nab[a][b] != dl[r][c]:
                return False

    pad_lo = differential_layer_matrix(OperatorSpec("delta", "padded-schubert", n), low, high)
    pad_hi = differential_layer_matrix(
        OperatorSpec("delta", "padded-schubert", n), top - high, top - low
    )
    from .permutations import permutations_of_rank

    lo_perms = permutations_of_rank(n, low)
    hi_perms = permutations_of_rank(n, high)
    co_lo_p = {w: i for i, w in enumerate(permutations_of_rank(n, top - high))}
    co_hi_p = {w: i for i, w in enumerate(permutations_of_rank(n, top - low))}
    for a, u in enumerate(lo_perms):
        for b, v in enumerate(hi_perms):
            if pad_lo[a][b] != pad_hi[co_lo_p[w0_times(v)]][co_hi_p[w0_times(u)]]:
                return False
    return True
