"""
Weak and strong Bruhat orders on S_n as weighted, rank-stratified Hasse
diagrams, with exact weighted path counting.

Three nontrivial weight systems on cover edges:

* ``nabla``  (weak order):   the cover w -> w*s_i carries weight i;
* ``code``   (strong order): the cover w -> w*t_ij carries the Manhattan
  distance between the Lehmer codes of its endpoints (always odd);
* ``chevalley`` (strong order): the cover by t_ij carries weight j - i;

plus ``unit`` weights on either order.  The weighted count m(u, v) sums the
product of edge weights over all saturated chains from u to v; with every
system above, the count from the identity to the longest element is N! for
N = n(n-1)/2.
"""

from __future__ import annotations

from functools import lru_cache

from .permutations import (
    Permutation,
    lehmer_code,
    length,
    longest_element,
    num_inversions_max,
    permutations_by_rank,
    right_multiply_simple,
    right_multiply_transposition,
    strong_covers_up,
    to_string,
    validated,
    w0_times,
    weak_covers_up,
)
from .snf import IntMatrix, identity_matrix, matmul

__all__ = [
    "WeightedHasseDiagram",
    "nabla_weight",
    "code_weight",
    "chevalley_weight",
    "build_hasse",
    "weighted_path_count",
    "layer_matrix",
    "w0_symmetry_check",
    "diagram_to_json",
    "diagram_to_dot",
    "ORDERS",
    "WEIGHT_SYSTEMS",
]

ORDERS = ("weak", "strong")
WEIGHT_SYSTEMS = ("nabla", "code", "chevalley", "unit")
_COMPATIBLE = {"weak": {"nabla", "unit"}, "strong": {"code", "chevalley", "unit"}}


def nabla_weight(w: Permutation, i: int) -> int:
    """Weight of the weak cover w -> w*s_i: the simple index i itself."""
    word = validated(w)
    if not 1 <= i <= len(word) - 1:
        raise ValueError(f"simple index out of range: {i}")
    if word[i - 1] > word[i]:
        raise ValueError(f"{to_string(word)} -> {to_string(word)}*s_{i} is not a cover")
    return i


def code_weight(w: Permutation, i: int, j: int) -> int:
    """Weight of the strong cover w -> w*t_ij: Manhattan distance of codes.

    The two Lehmer codes differ only in the swap positions (position j
    drops out when j = n), so the distance is a positive odd number.
    """
    word = validated(w)
    upper = right_multiply_transposition(word, i, j)
    if length(upper) != length(word) + 1:
        raise ValueError(f"{to_string(word)} -> {to_string(upper)} is not a strong cover")
    a, b = lehmer_code(word), lehmer_code(upper)
    return sum(abs(x - y) for x, y in zip(a, b))


def chevalley_weight(i: int, j: int) -> int:
    """Chevalley weight of a cover by the transposition t_ij: j - i."""
    if not 1 <= i < j:
        raise ValueError(f"need 1 <= i < j, got ({i}, {j})")
    return j - i


class WeightedHasseDiagram:
    """A rank-stratified weighted cover graph; immutable after construction.

    ``ranks[k]`` lists the permutations of length k in lex order; ``edges``
    holds (lower, upper, weight) triples sorted by (rank, lower, upper).
    """

    __slots__ = ("n", "order", "weights", "ranks", "edges", "_pos", "_steps")

    def __init__(
        self,
        n: int,
        order: str,
        weights: str,
        ranks: tuple[tuple[Permutation, ...], ...],
        edges: tuple[tuple[Permutation, Permutation, int], ...],
    ):
        self.n = n
        self.order = order
        self.weights = weights
        self.ranks = ranks
        self.edges = edges
        self._pos: dict[Permutation, tuple[int, int]] = {
            w: (k, idx) for k, stratum in enumerate(ranks) for idx, w in enumerate(stratum)
        }
        # per-rank index-level edge lists drive all path DP and layer matrices
        self._steps: list[list[tuple[int, int, int]]] = [[] for _ in range(len(ranks) - 1)]
        for src, dst, wt in edges:
            k, si = self._pos[src]
            _, di = self._pos[dst]
            self._steps[k].append((si, di, wt))

    @property
    def top_rank(self) -> int:
        return len(self.ranks) - 1

    def rank_of(self, w: Permutation) -> int:
        word = validated(w)
        if word not in self._pos:
            raise ValueError(f"not a vertex of this diagram: {to_string(word)}")
        return self._pos[word][0]

    def step_matrix(self, k: int) -> IntMatrix:
        """Dense weight matrix from rank k to rank k+1."""
        if not 0 <= k < self.top_rank:
            raise ValueError(f"rank out of range: {k}")
        out = [[0] * len(self.ranks[k + 1]) for _ in self.ranks[k]]
        for si, di, wt in self._steps[k]:
            out[si][di] = wt
        return out

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return (
            f"WeightedHasseDiagram(n={self.n}, order={self.order!r}, "
            f"weights={self.weights!r}, {len(self.edges)} edges)"
        )


@lru_cache(maxsize=None)
def build_hasse(n: int, order: str, weights: str) -> WeightedHasseDiagram:
    """Construct the full weighted cover diagram of S_n.

    Raises ValueError on an unknown order/weight tag or an incompatible
    pairing (nabla weights need the weak order; code and chevalley weights
    need the strong order).  Diagrams are cached and shared; treat them as
    read-only.
    """
    if order not in ORDERS:
        raise ValueError(f"unknown order: {order!r}")
    if weights not in WEIGHT_SYSTEMS:
        raise ValueError(f"unknown weight system: {weights!r}")
    if weights not in _COMPATIBLE[order]:
        raise ValueError(f"weight system {weights!r} is incompatible with the {order} order")
    ranks = permutations_by_rank(n)
    edges: list[tuple[Permutation, Permutation, int]] = []
    for stratum in ranks[:-1]:
        for w in stratum:
            if order == "weak":
                for upper, i in sorted(weak_covers_up(w)):
                    wt = i if weights == "nabla" else 1
                    edges.append((w, upper, wt))
            else:
                for upper, i, j in sorted(strong_covers_up(w)):
                    if weights == "code":
                        wt = code_weight(w, i, j)
                    elif weights == "chevalley":
                        wt = j - i
                    else:
                        wt = 1
                    edges.append((w, upper, wt))
    edges.sort(key=lambda e: (length(e[0]), e[0], e[1]))
    return WeightedHasseDiagram(n, order, weights, ranks, tuple(edges))


def weighted_path_count(g: WeightedHasseDiagram, u: Permutation, v: Permutation) -> int:
    """Sum over saturated chains u = x_0 < x_1 < ... < x_m = v of the
    product of edge weights; 0 when v is not reachable, 1 when u = v."""
    ku = g.rank_of(u)
    kv = g.rank_of(v)
    if ku > kv:
        return 0
    cur = [0] * len(g.ranks[ku])
    cur[g._pos[validated(u)][1]] = 1
    for k in range(ku, kv):
        nxt = [0] * len(g.ranks[k + 1])
        for si, di, wt in g._steps[k]:
            if cur[si]:
                nxt[di] += cur[si] * wt
        cur = nxt
    return cur[g._pos[validated(v)][1]]


def layer_matrix(g: WeightedHasseDiagram, low: int, high: int) -> IntMatrix:
    """Matrix of weighted path counts between two ranks.

    Rows are indexed by the rank-``low`` permutations, columns by the
    rank-``high`` ones, both in lex order; entry (x, y) is m(x, y).  Equal
    ranks give the identity.  Factorizes through every intermediate rank.
    """
    if not 0 <= low <= high <= g.top_rank:
        raise ValueError(f"need 0 <= l <= l' <= {g.top_rank}, got ({low}, {high})")
    out = identity_matrix(len(g.ranks[low]))
    for k in range(low, high):
        out = matmul(out, g.step_matrix(k))
    return out


def w0_symmetry_check(g: WeightedHasseDiagram) -> tuple[bool, dict | None]:
    """Check the flip symmetry: (u -> w, c) is an edge iff (w0*w -> w0*u, c) is.

    Returns (True, None) or (False, first counterexample) with the edge
    whose mirror is missing or carries a different weight.
    """
    table = {(src, dst): wt for src, dst, wt in g.edges}
    for src, dst, wt in g.edges:
        mirror = (w0_times(dst), w0_times(src))
        got = table.get(mirror)
        if got != wt:
            return False, {
                "edge": f"{to_string(src)}->{to_string(dst)}",
                "weight": str(wt),
                "mirror": f"{to_string(mirror[0])}->{to_string(mirror[1])}",
                "mirror_weight": "missing" if got is None else str(got),
            }
    return True, None


def diagram_to_json(g: WeightedHasseDiagram) -> dict:
    """JSON-ready dict; weights are decimal strings."""
    return {
        "n": g.n,
        "order": g.order,
        "weights": g.weights,
        "ranks": [[to_string(w) for w in stratum] for stratum in g.ranks],
        "edges": [[to_string(src), to_string(dst), str(wt)] for src, dst, wt in g.edges],
    }


def diagram_to_dot(g: WeightedHasseDiagram) -> str:
    """Graphviz source: vertices by one-line notation, edges labeled by
    weight, each rank pinned to its own level."""
    lines = [
        f'digraph "{g.order}_{g.weights}_S{g.n}" {{',
        "  rankdir=BT;",
        "  node [shape=plaintext];",
    ]
    for src, dst, wt in g.edges:
        lines.append(f'  "{to_string(src)}" -> "{to_string(dst)}" [label="{wt}"];')
    for stratum in g.ranks:
        members = "; ".join(f'"{to_string(w)}"' for w in stratum)
        lines.append(f"  {{ rank=same; {members}; }}")
    lines.append("}")
    return "\n".join(lines) + "\n"
