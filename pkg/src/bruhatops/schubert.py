"""
Schubert polynomials via divided differences, their padded (bihomogeneous)
form, and the raising/lowering differential operators acting on the padded
span.

Conventions.  ``schubert(w)`` follows the recursion in which the divided
difference acts by LEFT multiplication: the top polynomial is
x1^{n-1} x2^{n-2} ... x_{n-1}, and for a left descent i of w,
schubert(s_i * w) = N_i(schubert(w)).  The common convention from the
Schubert-calculus literature is obtained through the group inverse,
``schubert_standard(w) = schubert(inverse(w))``; principal specializations
agree between the two conventions.

Padding makes every polynomial bihomogeneous: the monomial x^alpha becomes
x^alpha * y^(rho - alpha) with rho the staircase (n-1, ..., 1).  Storage
stays keyed by alpha alone; the y-exponent is implicit.  On this span the
lowering operator nabla = sum_i y_i d/dx_i sends alpha to alpha - e_i with
coefficient alpha_i, and the raising operator delta = sum_i x_i d/dy_i
sends alpha to alpha + e_i with coefficient rho_i - alpha_i.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Mapping

from .permutations import (
    Permutation,
    inverse,
    left_multiply_simple,
    length,
    longest_element,
    num_inversions_max,
    permutations_by_rank,
    permutations_of_rank,
    validated,
)

Exponent = tuple[int, ...]

__all__ = [
    "IntPolynomial",
    "PaddedPolynomial",
    "staircase",
    "divided_difference",
    "schubert",
    "schubert_standard",
    "principal_specialization",
    "pad",
    "unpad",
    "apply_nabla",
    "apply_delta",
    "expand_in_padded_schubert_basis",
    "monomials_of_rank",
    "basis_matrix",
    "basis_matrix_inverse",
]


def staircase(n: int) -> Exponent:
    """The componentwise exponent ceiling (n-1, n-2, ..., 1); empty for n=1."""
    if n < 1:
        raise ValueError(f"n must be positive: {n}")
    return tuple(range(n - 1, 0, -1))


def _clean(n: int, items: Iterable[tuple[Exponent, int]]) -> dict[Exponent, int]:
    terms: dict[Exponent, int] = {}
    for alpha, coeff in items:
        key = tuple(alpha)
        if len(key) != n - 1:
            raise ValueError(f"exponent vector of length {len(key)}, expected {n - 1}")
        if any(e < 0 for e in key):
            raise ValueError(f"negative exponent: {key}")
        c = terms.get(key, 0) + coeff
        if c:
            terms[key] = c
        elif key in terms:
            del terms[key]
    return terms


class IntPolynomial:
    """Sparse integer polynomial in x_1..x_{n-1}, keyed by exponent vector."""

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        if n < 1:
            raise ValueError(f"n must be positive: {n}")
        self.n = n
        items = terms.items() if isinstance(terms, Mapping) else terms
        self.terms = _clean(n, items)

    @classmethod
    def zero(cls, n: int) -> "IntPolynomial":
        return cls(n)

    @classmethod
    def monomial(cls, n: int, alpha: Exponent, coeff: int = 1) -> "IntPolynomial":
        return cls(n, [(tuple(alpha), coeff)])

    @classmethod
    def one(cls, n: int) -> "IntPolynomial":
        return cls.monomial(n, (0,) * (n - 1))

    def _binop(self, other: "IntPolynomial", sign: int) -> "IntPolynomial":
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"mixed variable counts: {self.n} vs {other.n}")
        merged = dict(self.terms)
        for alpha, c in other.terms.items():
            v = merged.get(alpha, 0) + sign * c
            if v:
                merged[alpha] = v
            elif alpha in merged:
                del merged[alpha]
        out = IntPolynomial.__new__(IntPolynomial)
        out.n = self.n
        out.terms = merged
        return out

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self._binop(other, 1)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self._binop(other, -1)

    def scaled(self, c: int) -> "IntPolynomial":
        return IntPolynomial(self.n, {a: c * v for a, v in self.terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, IntPolynomial)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def homogeneous_degree(self) -> int | None:
        """Common total degree of all terms, or None if mixed; 0 for zero."""
        degrees = {sum(a) for a in self.terms}
        if not degrees:
            return 0
        if len(degrees) > 1:
            return None
        return degrees.pop()

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def __str__(self) -> str:
        return _poly_string(self.sorted_terms(), None)

    def __repr__(self) -> str:
        return f"IntPolynomial({self.n}, {dict(self.sorted_terms())!r})"


class PaddedPolynomial:
    """Bihomogeneous form: the stored key alpha stands for x^alpha y^(rho-alpha).

    Every exponent vector must fit under the staircase, otherwise the
    implicit y-exponent would go negative.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms: Mapping[Exponent, int] | Iterable[tuple[Exponent, int]] = ()):
        if n < 1:
            raise ValueError(f"n must be positive: {n}")
        self.n = n
        items = terms.items() if isinstance(terms, Mapping) else terms
        cleaned = _clean(n, items)
        rho = staircase(n)
        for alpha in cleaned:
            if any(a > r for a, r in zip(alpha, rho)):
                raise ValueError(f"exponent {alpha} exceeds the staircase {rho}")
        self.terms = cleaned

    @classmethod
    def zero(cls, n: int) -> "PaddedPolynomial":
        return cls(n)

    def _binop(self, other: "PaddedPolynomial", sign: int) -> "PaddedPolynomial":
        if not isinstance(other, PaddedPolynomial):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"mixed variable counts: {self.n} vs {other.n}")
        merged = dict(self.terms)
        for alpha, c in other.terms.items():
            v = merged.get(alpha, 0) + sign * c
            if v:
                merged[alpha] = v
            elif alpha in merged:
                del merged[alpha]
        out = PaddedPolynomial.__new__(PaddedPolynomial)
        out.n = self.n
        out.terms = merged
        return out

    def __add__(self, other: "PaddedPolynomial") -> "PaddedPolynomial":
        return self._binop(other, 1)

    def __sub__(self, other: "PaddedPolynomial") -> "PaddedPolynomial":
        return self._binop(other, -1)

    def scaled(self, c: int) -> "PaddedPolynomial":
        return PaddedPolynomial(self.n, {a: c * v for a, v in self.terms.items()})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, PaddedPolynomial)
            and self.n == other.n
            and self.terms == other.terms
        )

    def __hash__(self) -> int:
        return hash((self.n, frozenset(self.terms.items())))

    def x_degree(self) -> int | None:
        """Common |alpha| over all terms (the rank), None if mixed, 0 if zero."""
        degrees = {sum(a) for a in self.terms}
        if not degrees:
            return 0
        if len(degrees) > 1:
            return None
        return degrees.pop()

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def __str__(self) -> str:
        return _poly_string(self.sorted_terms(), staircase(self.n))

    def __repr__(self) -> str:
        return f"PaddedPolynomial({self.n}, {dict(self.sorted_terms())!r})"


def _poly_string(terms: list[tuple[Exponent, int]], rho: Exponent | None) -> str:
    if not terms:
        return "0"
    rendered: list[str] = []
    for alpha, coeff in terms:
        parts = []
        for idx, e in enumerate(alpha, start=1):
            if e == 1:
                parts.append(f"x{idx}")
            elif e > 1:
                parts.append(f"x{idx}^{e}")
        if rho is not None:
            for idx, (e, cap) in enumerate(zip(alpha, rho), start=1):
                b = cap - e
                if b == 1:
                    parts.append(f"y{idx}")
                elif b > 1:
                    parts.append(f"y{idx}^{b}")
        mag = abs(coeff)
        if not parts:
            body = str(mag)
        elif mag == 1:
            body = "*".join(parts)
        else:
            body = f"{mag}*" + "*".join(parts)
        rendered.append(("- " if coeff < 0 else "+ ") + body)
    first = rendered[0]
    out = ("-" + first[2:]) if first.startswith("- ") else first[2:]
    for piece in rendered[1:]:
        out += " " + piece
    return out


def divided_difference(i: int, p: IntPolynomial) -> IntPolynomial:
    """Newton divided difference N_i(p) = (p - s_i(p)) / (x_i - x_{i+1}).

    For i = n-1, the missing variable x_n participates with exponent 0 via a
    temporary extra slot.  The quotient is produced by synthetic division;
    the numerator is antisymmetric in x_i, x_{i+1}, so a nonzero remainder
    can only mean an arithmetic bug and raises immediately.
    """
    n = p.n
    if not 1 <= i <= n - 1:
        raise ValueError(f"divided difference index out of range: {i}")
    width = n - 1 if i < n - 1 else n
    pos = i - 1  # 0-based slot of x_i

    num: dict[Exponent, int] = {}
    for alpha, c in p.terms.items():
        a = alpha + (0,) * (width - len(alpha))
        num[a] = num.get(a, 0) + c
        swapped = list(a)
        swapped[pos], swapped[pos + 1] = swapped[pos + 1], swapped[pos]
        b = tuple(swapped)
        num[b] = num.get(b, 0) - c
    num = {a: c for a, c in num.items() if c}

    quo: dict[Exponent, int] = {}
    while num:
        # cancel the term with the largest x_i exponent first
        a = max(num, key=lambda t: (t[pos], t))
        if a[pos] == 0:
            raise ArithmeticError("nonzero remainder in divided difference")
        c = num.pop(a)
        q = list(a)
        q[pos] -= 1
        qt = tuple(q)
        quo[qt] = quo.get(qt, 0) + c
        # subtracting c * x^q * (x_i - x_{i+1}) reintroduces the x_{i+1} half
        q[pos + 1] += 1
        rt = tuple(q)
        rc = num.get(rt, 0) + c
        if rc:
            num[rt] = rc
        elif rt in num:
            del num[rt]

    if width > n - 1:
        for alpha in quo:
            if alpha[-1]:
                raise ValueError("quotient does not lie in x_1..x_{n-1}")
        quo = {alpha[:-1]: c for alpha, c in quo.items()}
    return IntPolynomial(n, quo)


@lru_cache(maxsize=None)
def _schubert_table(n: int) -> dict[Permutation, IntPolynomial]:
    """All Schubert polynomials of S_n, filled downward from the staircase
    monomial at the longest element by left-descent divided differences."""
    top = longest_element(n)
    table: dict[Permutation, IntPolynomial] = {
        top: IntPolynomial.monomial(n, staircase(n))
    }
    strata = permutations_by_rank(n)
    for k in range(len(strata) - 2, -1, -1):
        for w in strata[k]:
            inv_w = inverse(w)
            # any left ascent i (value i sits before i+1) yields a parent
            i = next(a for a in range(1, n) if inv_w[a - 1] < inv_w[a])
            parent = left_multiply_simple(w, i)
            table[w] = divided_difference(i, table[parent])
    return table


def schubert(w: Permutation) -> IntPolynomial:
    """Schubert polynomial of w in the left-multiplication convention.

    >>> str(schubert((3, 2, 1)))
    'x1^2*x2'
    >>> str(schubert((1, 3, 2)))
    'x1 + x2'
    """
    word = validated(w)
    return _schubert_table(len(word))[word]


def schubert_standard(w: Permutation) -> IntPolynomial:
    """Schubert polynomial in the common literature convention.

    Bridged through the group inverse; the monomial x^code(w) appears with
    coefficient 1.

    >>> str(schubert_standard((2, 3, 1)))
    'x1*x2'
    """
    return schubert(inverse(validated(w)))


def principal_specialization(p: IntPolynomial) -> int:
    """Evaluate at x_1 = ... = x_{n-1} = 1 (sum of coefficients)."""
    return sum(p.terms.values())


def pad(p: IntPolynomial) -> PaddedPolynomial:
    """x^alpha -> x^alpha y^(rho - alpha) on every term.

    Requires every exponent to fit under the staircase.
    """
    return PaddedPolynomial(p.n, p.terms)


def unpad(p: PaddedPolynomial) -> IntPolynomial:
    """Forget the y-part; inverse of :func:`pad` on its image."""
    return IntPolynomial(p.n, p.terms)


@lru_cache(maxsize=None)
def padded_schubert(w: Permutation) -> PaddedPolynomial:
    """pad(schubert(w)); cached since the operator suites hit it repeatedly."""
    return pad(schubert(w))


def apply_nabla(p: PaddedPolynomial) -> PaddedPolynomial:
    """Lowering operator sum_i y_i d/dx_i: alpha -> alpha - e_i, factor alpha_i."""
    n = p.n
    out: dict[Exponent, int] = {}
    for alpha, c in p.terms.items():
        for idx, e in enumerate(alpha):
            if e:
                shifted = alpha[:idx] + (e - 1,) + alpha[idx + 1 :]
                v = out.get(shifted, 0) + c * e
                if v:
                    out[shifted] = v
                elif shifted in out:
                    del out[shifted]
    return PaddedPolynomial(n, out)


def apply_delta(p: PaddedPolynomial) -> PaddedPolynomial:
    """Raising operator sum_i x_i d/dy_i: alpha -> alpha + e_i, factor rho_i - alpha_i."""
    n = p.n
    rho = staircase(n)
    out: dict[Exponent, int] = {}
    for alpha, c in p.terms.items():
        for idx, e in enumerate(alpha):
            room = rho[idx] - e
            if room:
                shifted = alpha[:idx] + (e + 1,) + alpha[idx + 1 :]
                v = out.get(shifted, 0) + c * room
                if v:
                    out[shifted] = v
                elif shifted in out:
                    del out[shifted]
    return PaddedPolynomial(n, out)


@lru_cache(maxsize=None)
def monomials_of_rank(n: int, k: int) -> tuple[Exponent, ...]:
    """Exponent vectors under the staircase with |alpha| = k, lex-descending."""
    if not 0 <= k <= num_inversions_max(n):
        raise ValueError(f"rank out of range for S_{n}: {k}")
    rho = staircase(n)
    out = [
        alpha
        for alpha in product(*[range(cap, -1, -1) for cap in rho])
        if sum(alpha) == k
    ]
    if n == 1:
        out = [()] if k == 0 else []
    return tuple(out)


@lru_cache(maxsize=None)
def basis_matrix(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Rank-k change of basis: rows = permutations of length k (lex), columns
    = staircase monomials of rank k (lex-descending); entry = coefficient of
    the monomial in the padded Schubert polynomial.  Unimodular."""
    perms = permutations_of_rank(n, k)
    monos = monomials_of_rank(n, k)
    col = {alpha: idx for idx, alpha in enumerate(monos)}
    rows = []
    for w in perms:
        vec = [0] * len(monos)
        for alpha, c in schubert(w).terms.items():
            vec[col[alpha]] = c
        rows.append(tuple(vec))
    return tuple(rows)


@lru_cache(maxsize=None)
def basis_matrix_inverse(n: int, k: int) -> tuple[tuple[int, ...], ...]:
    """Exact inverse of :func:`basis_matrix`; integral by unimodularity."""
    base = basis_matrix(n, k)
    size = len(base)
    aug = [
        [Fraction(v) for v in row] + [Fraction(int(i == j)) for j in range(size)]
        for i, row in enumerate(base)
    ]
    for col in range(size):
        pivot = next((r for r in range(col, size) if aug[r][col]), None)
        if pivot is None:
            raise ArithmeticError("change-of-basis matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [v * inv for v in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [a - factor * b for a, b in zip(aug[r], aug[col])]
    out = []
    for row in aug:
        tail = row[size:]
        if any(v.denominator != 1 for v in tail):
            raise ArithmeticError("change-of-basis inverse is not integral")
        out.append(tuple(int(v) for v in tail))
    return tuple(out)


def expand_in_padded_schubert_basis(p: PaddedPolynomial) -> dict[Permutation, int]:
    """Integer coordinates of a rank-homogeneous polynomial in the padded
    Schubert basis; {} for zero, ValueError when ranks are mixed."""
    if not p.terms:
        return {}
    k = p.x_degree()
    if k is None:
        raise ValueError("polynomial mixes ranks; expansion needs a single x-degree")
    n = p.n
    monos = monomials_of_rank(n, k)
    col = {alpha: idx for idx, alpha in enumerate(monos)}
    vec = [0] * len(monos)
    for alpha, c in p.terms.items():
        vec[col[alpha]] = c
    inv = basis_matrix_inverse(n, k)
    perms = permutations_of_rank(n, k)
    # coords = (S^{-1})^T v, since rows of S hold the basis polynomials
    out: dict[Permutation, int] = {}
    for widx, w in enumerate(perms):
        c = sum(inv[a][widx] * vec[a] for a in range(len(monos)) if vec[a])
        if c:
            out[w] = c
    return out


if __name__ == "__main__":
    import doctest

    doctest.testmod()
