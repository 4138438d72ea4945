"""Induction products, the free building-block modules M(lam) and M(m),
coinvariants, and graded Kunneth powers for product spaces and wreath
products with symmetric quotient."""

from __future__ import annotations

from fractions import Fraction
from math import comb, factorial

from .characters import (
    ClassFunction,
    IrrDecomposition,
    decompose,
    inner_product,
    irreducible_character,
)
from .errors import ConsistencyError, DomainError
from .fi_analysis import pad
from .partitions import (
    Partition,
    check_partition,
    class_size,
    cycle_counts,
    dimension,
    partitions,
)


def _cycle_splits(mu: Partition, a: int):
    """Split the cycle multiset of mu into a piece of total size a and its
    complement, weighting each split by the number of ways to pick the
    actual cycles: prod_l C(Z_l, j_l)."""
    lengths = sorted(cycle_counts(mu).items())

    def gen(idx, remaining, chosen, weight):
        if idx == len(lengths):
            if remaining == 0:
                yield weight, chosen
            return
        length, count = lengths[idx]
        for j in range(min(count, remaining // length) + 1):
            yield from gen(
                idx + 1,
                remaining - length * j,
                chosen + [(length, j)],
                weight * comb(count, j),
            )

    yield from gen(0, a, [], 1)


def induced_character(f: ClassFunction, g: ClassFunction) -> ClassFunction:
    """Character of Ind from S_a x S_b to S_{a+b} of f (x) g.

    The value at a class mu is the sum over ways to split the cycles of mu
    between the two factors, each split weighted by the number of cycle
    choices realizing it.
    """
    a, b = f.n, g.n
    n = a + b
    values = {}
    for mu in partitions(n):
        counts = cycle_counts(mu)
        total = 0
        for weight, chosen in _cycle_splits(mu, a):
            mu1 = tuple(
                sorted((l for l, j in chosen for _ in range(j)), reverse=True)
            )
            remaining = dict(counts)
            for l, j in chosen:
                remaining[l] -= j
            mu2 = tuple(
                sorted((l for l, c in remaining.items() for _ in range(c)), reverse=True)
            )
            total += weight * f.values[mu1] * g.values[mu2]
        values[mu] = total
    return ClassFunction(n, values)


def horizontal_strip_extensions(lam: Partition, n: int) -> list[Partition]:
    """Partitions mu of n with mu containing lam and mu/lam a horizontal
    strip (at most one added box per column), i.e. the interlacing
    condition mu_1 >= lam_1 >= mu_2 >= lam_2 >= ..."""
    lam = check_partition(lam)
    boxes = n - sum(lam)
    if boxes < 0:
        return []
    rows = list(lam) + [0]
    out: list[Partition] = []

    def build(i, remaining, prefix):
        if i == len(rows):
            if remaining == 0:
                out.append(tuple(p for p in prefix if p))
            return
        lo = rows[i]
        hi = min(rows[i - 1] if i > 0 else lo + remaining, lo + remaining)
        for v in range(lo, hi + 1):
            build(i + 1, remaining - (v - lo), prefix + [v])

    build(0, boxes, [])
    return sorted(out)


def m_module(lam: Partition, n: int) -> IrrDecomposition:
    """Level n of the free module induced from the irreducible of shape
    lam: zero below |lam|, and by the Pieri rule one copy of each
    horizontal-strip extension of lam above."""
    lam = check_partition(lam)
    if n < 0:
        raise DomainError(f"level must be nonnegative, got {n}")
    if n < sum(lam):
        return IrrDecomposition(n, {})
    return IrrDecomposition(n, {mu: 1 for mu in horizontal_strip_extensions(lam, n)})


def m_regular(m: int, n: int) -> IrrDecomposition:
    """Level n of the module induced from the full group algebra of S_m;
    its total dimension is n!/(n-m)! once n >= m."""
    if m < 0 or n < 0:
        raise DomainError("m and n must be nonnegative")
    out = IrrDecomposition(n, {})
    for lam in partitions(m):
        d = dimension(lam)
        block = m_module(lam, n)
        out = out + IrrDecomposition(n, {mu: d * c for mu, c in block.mult.items()})
    return out


def coinvariants_as_sa(V: IrrDecomposition, a: int) -> IrrDecomposition:
    """The S_a-module of coinvariants of V under the subgroup permuting
    the last n-a points.

    Over the rationals coinvariants agree with invariants, so the
    character is the average of V's character over that subgroup; the
    result is decomposed as an S_a-representation.
    """
    n = V.n
    if not 0 <= a <= n:
        raise DomainError(f"need 0 <= a <= {n}, got a={a}")
    b = n - a
    chi = V.character()
    values = {}
    for nu in partitions(a):
        total = Fraction(0)
        for mu2 in partitions(b):
            merged = tuple(sorted(nu + mu2, reverse=True))
            total += class_size(mu2) * Fraction(chi.values[merged])
        values[nu] = total / factorial(b)
    return decompose(ClassFunction(a, values))


def _cycle_trace_coeffs(graded_dims, length: int, cap: int) -> list[int]:
    # Trace of one length-l cycle on the l-fold graded tensor rotation, as
    # a polynomial in the total degree: a degree-g class contributes
    # (-1)**(g*(l-1)) dim H^g in degree g*l.  Odd-degree classes rotated
    # by an even-length cycle pick up the sign.
    coeffs = [0] * (cap + 1)
    for g, d in enumerate(graded_dims):
        deg = g * length
        if deg > cap:
            break
        sign = -1 if (g % 2 == 1 and length % 2 == 0) else 1
        coeffs[deg] += sign * d
    return coeffs


def _poly_mul(p: list[int], q: list[int], cap: int) -> list[int]:
    out = [0] * (cap + 1)
    for i, x in enumerate(p):
        if x:
            for j, y in enumerate(q):
                if i + j > cap:
                    break
                out[i + j] += x * y
    return out


def _check_graded_dims(graded_dims) -> tuple[int, ...]:
    dims = tuple(int(d) for d in graded_dims)
    if not dims or dims[0] != 1:
        raise DomainError(
            f"graded dimensions must start with 1 (connected space), got {dims!r}"
        )
    if any(d < 0 for d in dims):
        raise DomainError(f"graded dimensions must be nonnegative: {dims!r}")
    return dims


def kunneth_power(graded_dims, n: int, i: int) -> ClassFunction:
    """Character of S_n on total degree i of the n-fold graded tensor
    power of a space with the given Betti numbers.

    The trace at a permutation factors over its cycles; each cycle of
    length l contributes the signed trace polynomial from
    _cycle_trace_coeffs.  The sign rule was frozen against a basis-level
    brute force with explicit Koszul signs (see the test suite) and is the
    convention used throughout this package.
    """
    dims = _check_graded_dims(graded_dims)
    if n < 0 or i < 0:
        raise DomainError("n and i must be nonnegative")
    values = {}
    for mu in partitions(n):
        poly = [1] + [0] * i
        for length in mu:
            poly = _poly_mul(poly, _cycle_trace_coeffs(dims, length, i), i)
        values[mu] = poly[i]
    return ClassFunction(n, values)


def wreath_invariant_dim(graded_dims, n: int, i: int) -> int:
    """Dimension of the S_n-invariants in total degree i of the n-fold
    graded tensor power; equivalently the i-th Betti number of the wreath
    product of the underlying group with S_n."""
    chi = kunneth_power(graded_dims, n, i)
    total = sum(class_size(mu) * Fraction(v) for mu, v in chi.values.items())
    mult = Fraction(total, factorial(n))
    if mult.denominator != 1 or mult < 0:
        raise ConsistencyError(f"invariant dimension came out as {mult}")
    return int(mult)


def wreath_twisted_dim(graded_dims, lam: Partition, n: int, i: int) -> int:
    """Multiplicity of the irreducible with padded shape lam[n] in total
    degree i of the n-fold graded tensor power; by transfer this is the
    dimension of the wreath-product cohomology with coefficients twisted
    by that irreducible.  lam = () recovers wreath_invariant_dim."""
    mu = pad(check_partition(lam), n)
    chi = kunneth_power(graded_dims, n, i)
    mult = inner_product(chi, irreducible_character(mu))
    if mult.denominator != 1 or mult < 0:
        raise ConsistencyError(f"twisted multiplicity came out as {mult}")
    return int(mult)
