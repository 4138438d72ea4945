"""Cohomology of ordered configuration spaces of the plane, modeled by
the Orlik-Solomon algebra of the braid arrangement.

Degree-one generators are classes w[a,b] = w[b,a] indexed by unordered
pairs; a monomial is a wedge of generators.  The no-broken-circuit (NBC)
basis consists of monomials whose second indices are strictly increasing,
and every product rewrites into it through the quadratic relation

    w[a,c] ^ w[b,c] = w[a,b] ^ w[b,c] - w[a,b] ^ w[a,c]      (a < b < c)

together with anticommutativity and square-zero.  Symmetric groups act by
relabeling points; everything downstream (characters, decompositions,
coinvariant maps) is exact.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .characters import ClassFunction, IrrDecomposition, decompose
from .errors import ConsistencyError, DomainError
from .linalg import IntRowBasis
from .partitions import Partition, check_partition, class_size, partitions

Edge = tuple  # (a, b) with 1 <= a < b
Monomial = tuple  # edges with strictly increasing second indices


def normalize_edge(a: int, b: int) -> Edge:
    """Canonical form of the generator on the pair {a, b}."""
    if a == b or a < 1 or b < 1:
        raise DomainError(f"generator needs two distinct positive points, got {(a, b)}")
    return (a, b) if a < b else (b, a)


@lru_cache(maxsize=None)
def nbc_basis(n: int, k: int) -> tuple[Monomial, ...]:
    """All degree-k NBC monomials on n points, in lexicographic order.

    Counting second indices shows there are e_k(1, 2, ..., n-1) of them;
    out-of-range k just gives the empty basis.
    """
    if k < 0 or k > max(n - 1, 0):
        return ()
    out = []
    for seconds in itertools.combinations(range(2, n + 1), k):
        for firsts in itertools.product(*(range(1, b) for b in seconds)):
            out.append(tuple(zip(firsts, seconds)))
    return tuple(out)


@lru_cache(maxsize=None)
def _basis_index(n: int, k: int) -> dict[Monomial, int]:
    return {mono: j for j, mono in enumerate(nbc_basis(n, k))}


def betti(n: int, k: int) -> int:
    """dim of the degree-k cohomology on n points."""
    return len(nbc_basis(n, k))


def _canonical_sort(edges: tuple) -> tuple[int, tuple | None]:
    # Sort by (second, first), one sign flip per adjacent swap of the
    # degree-one factors; a repeated factor kills the product.
    lst = list(edges)
    sign = 1
    for i in range(1, len(lst)):
        j = i
        while j > 0 and (lst[j][1], lst[j][0]) < (lst[j - 1][1], lst[j - 1][0]):
            lst[j - 1], lst[j] = lst[j], lst[j - 1]
            sign = -sign
            j -= 1
    for i in range(len(lst) - 1):
        if lst[i] == lst[i + 1]:
            return 0, None
    return sign, tuple(lst)


@lru_cache(maxsize=None)
def _straighten(edges: tuple) -> tuple[tuple[Monomial, int], ...]:
    """Expand a wedge of generators in the NBC basis.

    Worklist rewriting: each step fires the quadratic relation on the
    leftmost adjacent pair sharing a second index.  The relation replaces
    a second index c by some b < c, so the multiset of second indices
    strictly decreases (compared as a sorted sequence) and the rewriting
    terminates.
    """
    result: dict[Monomial, int] = {}
    stack = [(1, edges)]
    while stack:
        coeff, mono = stack.pop()
        sign, srt = _canonical_sort(mono)
        if sign == 0:
            continue
        coeff *= sign
        clash = next(
            (t for t in range(len(srt) - 1) if srt[t][1] == srt[t + 1][1]), None
        )
        if clash is None:
            val = result.get(srt, 0) + coeff
            if val:
                result[srt] = val
            else:
                del result[srt]
            continue
        (a, c), (b, _) = srt[clash], srt[clash + 1]
        head, tail = srt[:clash], srt[clash + 2 :]
        stack.append((coeff, head + ((a, b), (b, c)) + tail))
        stack.append((-coeff, head + ((a, b), (a, c)) + tail))
    return tuple(sorted(result.items()))


@dataclass(frozen=True)
class OSElement:
    """Sparse exact vector in one graded piece of the algebra."""

    n: int
    degree: int
    coeffs: dict

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, OSElement)
            and (self.n, self.degree) == (other.n, other.degree)
            and self.coeffs == other.coeffs
        )


def straighten(edges, n: int) -> OSElement:
    """NBC expansion of the wedge of the given generators inside the
    algebra on n points."""
    normed = tuple(normalize_edge(a, b) for a, b in edges)
    for a, b in normed:
        if b > n:
            raise DomainError(f"generator {(a, b)} does not fit on {n} points")
    coeffs = {m: Fraction(c) for m, c in _straighten(normed)}
    return OSElement(n, len(normed), coeffs)


def check_permutation(perm) -> tuple[int, ...]:
    p = tuple(int(x) for x in perm)
    if sorted(p) != list(range(1, len(p) + 1)):
        raise DomainError(f"not a permutation of 1..{len(p)}: {p!r}")
    return p


def _apply_perm(perm, mono: Monomial) -> tuple[tuple[Monomial, int], ...]:
    mapped = tuple(normalize_edge(perm[a - 1], perm[b - 1]) for a, b in mono)
    return _straighten(mapped)


def action_columns(perm, k: int) -> list[dict[int, int]]:
    """Sparse columns of the permutation action on the degree-k basis."""
    perm = check_permutation(perm)
    n = len(perm)
    index = _basis_index(n, k)
    cols = []
    for mono in nbc_basis(n, k):
        cols.append({index[m]: c for m, c in _apply_perm(perm, mono)})
    return cols


def action_matrix(perm, k: int):
    """Dense matrix of the permutation acting on the degree-k basis."""
    perm = check_permutation(perm)
    dim = betti(len(perm), k)
    mat = [[0] * dim for _ in range(dim)]
    for j, col in enumerate(action_columns(perm, k)):
        for i, v in col.items():
            mat[i][j] = v
    return mat


def class_representative(mu: Partition) -> tuple[int, ...]:
    """A permutation with the given cycle type, cycles on consecutive
    blocks of points."""
    mu = check_partition(mu)
    perm: list[int] = []
    start = 1
    for part in mu:
        perm.extend(range(start + 1, start + part))
        perm.append(start)
        start += part
    return tuple(perm)


@lru_cache(maxsize=None)
def character(n: int, k: int) -> ClassFunction:
    """Character of S_n on the degree-k cohomology, one trace per class."""
    basis = nbc_basis(n, k)
    values = {}
    for mu in partitions(n):
        perm = class_representative(mu)
        trace = 0
        for mono in basis:
            for image, coeff in _apply_perm(perm, mono):
                if image == mono:
                    trace += coeff
                    break
        values[mu] = trace
    return ClassFunction(n, values)


@lru_cache(maxsize=None)
def decomposition(n: int, k: int) -> IrrDecomposition:
    """Irreducible decomposition of the degree-k cohomology; a non-integer
    multiplicity would mean the action matrices are broken."""
    return decompose(character(n, k))


def fi_map(n: int, k: int):
    """Dense matrix of the inclusion-induced map from level n to level
    n+1: each NBC monomial goes to the same monomial one level up."""
    src = nbc_basis(n, k)
    index = _basis_index(n + 1, k)
    mat = [[0] * len(src) for _ in range(betti(n + 1, k))]
    for j, mono in enumerate(src):
        mat[index[mono]][j] = 1
    return mat


# ---------------------------------------------------------------------------
# Coinvariant maps.  Over the rationals coinvariants under a subgroup are
# identified with invariants; the image of the (scaled) averaging projector
# is spanned by the orbit sums of the basis monomials, and scaling the
# projector by the group order keeps every vector integral without
# changing any rank verdict.


class _OrbitSummer:
    """Sums a vector over the subgroup permuting points first..n.

    Built as a chain of coset sums: the sum over the group on m points is
    (identity + transpositions into the new point) applied to the sum over
    m-1 points, so only O(m^2) sparse column maps are ever needed.
    """

    def __init__(self, n: int, k: int, first: int):
        self.levels = []
        for new_point in range(first + 1, n + 1):
            level = []
            for t in range(first, new_point):
                perm = list(range(1, n + 1))
                perm[t - 1], perm[new_point - 1] = perm[new_point - 1], perm[t - 1]
                level.append(action_columns(tuple(perm), k))
            self.levels.append(level)

    @staticmethod
    def _apply(cols, vec: dict[int, int]) -> dict[int, int]:
        out: dict[int, int] = {}
        for j, c in vec.items():
            for i, e in cols[j].items():
                val = out.get(i, 0) + c * e
                if val:
                    out[i] = val
                else:
                    del out[i]
        return out

    def sum_over_group(self, vec: dict[int, int]) -> dict[int, int]:
        v = dict(vec)
        for level in self.levels:
            acc = dict(v)
            for cols in level:
                for i, val in self._apply(cols, v).items():
                    new = acc.get(i, 0) + val
                    if new:
                        acc[i] = new
                    else:
                        del acc[i]
            v = acc
        return v


def invariant_dimension(n: int, a: int, k: int) -> int:
    """dim of the subspace fixed by the subgroup permuting the last n-a
    points, by averaging the character over that subgroup."""
    if not 0 <= a <= n:
        raise DomainError(f"need 0 <= a <= {n}, got a={a}")
    chi = character(n, k)
    b = n - a
    total = Fraction(0)
    for mu2 in partitions(b):
        merged = tuple(sorted(mu2 + (1,) * a, reverse=True))
        total += class_size(mu2) * Fraction(chi.values[merged])
    d = total / factorial(b)
    if d.denominator != 1:
        raise ConsistencyError(f"invariant dimension came out as {d}")
    return int(d)


def _invariant_rows(n: int, a: int, k: int, target: int) -> list[list[int]]:
    """Integer basis of the invariants at level n, from orbit sums of
    basis monomials; stops as soon as the known dimension is reached."""
    dim = betti(n, k)
    if target == 0:
        return []
    summer = _OrbitSummer(n, k, a + 1)
    rows = IntRowBasis(dim)
    for j in range(dim):
        vec = summer.sum_over_group({j: 1})
        dense = [0] * dim
        for i, v in vec.items():
            dense[i] = v
        rows.insert(dense)
        if rows.rank == target:
            return rows.rows
    raise ConsistencyError(
        f"orbit sums span {rows.rank} dimensions, expected {target} "
        f"(n={n}, a={a}, k={k})"
    )


@dataclass(frozen=True)
class CoinvariantReport:
    n: int
    a: int
    degree: int
    injective: bool
    surjective: bool
    dims: tuple[int, int]

    def to_mapping(self) -> dict:
        return {
            "n": self.n,
            "a": self.a,
            "degree": self.degree,
            "injective": self.injective,
            "surjective": self.surjective,
            "dims": list(self.dims),
        }


def coinvariant_report(n: int, a: int, k: int) -> CoinvariantReport:
    """Exact-rank verdict on the coinvariant map from level n to level
    n+1 with respect to the subgroups permuting all but the first a
    points.

    The map is the inclusion of NBC monomials followed by the (scaled)
    averaging projector at level n+1, restricted to the invariants at
    level n; injectivity and surjectivity are decided by integer rank.
    """
    if not 0 <= a <= n:
        raise DomainError(f"need 0 <= a <= {n}, got a={a}")
    d_src = invariant_dimension(n, a, k)
    d_dst = invariant_dimension(n + 1, a, k)
    src_rows = _invariant_rows(n, a, k, d_src)

    dim_dst = betti(n + 1, k)
    index_dst = _basis_index(n + 1, k)
    src_basis = nbc_basis(n, k)
    summer = _OrbitSummer(n + 1, k, a + 1)
    image = IntRowBasis(dim_dst)
    for row in src_rows:
        pushed = {index_dst[src_basis[j]]: v for j, v in enumerate(row) if v}
        averaged = summer.sum_over_group(pushed)
        dense = [0] * dim_dst
        for i, v in averaged.items():
            dense[i] = v
        image.insert(dense)
    rank = image.rank
    return CoinvariantReport(
        n=n,
        a=a,
        degree=k,
        injective=rank == d_src,
        surjective=rank == d_dst,
        dims=(d_src, d_dst),
    )
