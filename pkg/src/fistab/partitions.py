"""Integer partitions, cycle types, and conjugacy-class data for S_n.

A partition is a plain tuple of weakly decreasing positive integers; the
empty tuple is the unique partition of 0.  Cycle types of conjugacy
classes reuse the same representation, with cycle-count statistics
computed on demand.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb, factorial

from .errors import DomainError

Partition = tuple


def check_partition(parts) -> Partition:
    """Validate ``parts`` as a partition and return it as a tuple."""
    p = tuple(int(x) for x in parts)
    if any(x <= 0 for x in p):
        raise DomainError(f"partition parts must be positive: {p!r}")
    if any(p[i] < p[i + 1] for i in range(len(p) - 1)):
        raise DomainError(f"partition parts must be weakly decreasing: {p!r}")
    return p


def parse_partition(text: str) -> Partition:
    """Parse a '3+2+1' style partition string; '' and '()' both denote the
    empty partition."""
    if text.strip() in ("", "()"):
        return ()
    try:
        parts = [int(s) for s in text.split("+") if s.strip() != ""]
    except ValueError as exc:
        raise DomainError(f"bad partition string {text!r}") from exc
    parts.sort(reverse=True)
    return check_partition(parts)


def format_partition(p: Partition) -> str:
    return "+".join(str(x) for x in p)


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[Partition, ...]:
    """All partitions of n, in lexicographic order.

    The order is fixed once and for all so that every table keyed by
    conjugacy classes is emitted deterministically.
    """
    if n < 0:
        raise DomainError(f"cannot partition a negative integer: {n}")

    def gen(remaining, bound):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, bound), 0, -1):
            for rest in gen(remaining - first, first):
                yield (first,) + rest

    return tuple(sorted(gen(n, n)))


def cycle_counts(mu: Partition) -> dict[int, int]:
    """Map cycle length l to the number of l-cycles in the class mu."""
    counts: dict[int, int] = {}
    for part in mu:
        counts[part] = counts.get(part, 0) + 1
    return counts


def centralizer_order(mu: Partition) -> int:
    """Order of the centralizer of a permutation with cycle type mu."""
    z = 1
    for length, count in cycle_counts(mu).items():
        z *= length**count * factorial(count)
    return z


def class_size(mu: Partition) -> int:
    """Number of permutations in S_n with cycle type mu (n = |mu|)."""
    mu = check_partition(mu)
    return factorial(sum(mu)) // centralizer_order(mu)


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram."""
    if not lam:
        return ()
    return tuple(sum(1 for part in lam if part > i) for i in range(lam[0]))


@lru_cache(maxsize=None)
def dimension(lam: Partition) -> int:
    """Dimension of the irreducible S_n-representation indexed by lam,
    via the hook length formula."""
    lam = check_partition(lam)
    conj = conjugate(lam)
    num = factorial(sum(lam))
    for i, row in enumerate(lam):
        for j in range(row):
            num //= row - j + conj[j] - i - 1
    return num


def binomial(n: int, k: int) -> int:
    """comb() extended to negative upper argument, so that binomial
    polynomials can be evaluated anywhere on the integers."""
    if k < 0:
        return 0
    if n < 0:
        return (-1) ** k * comb(-n + k - 1, k)
    return comb(n, k)
