"""Stability-bound arithmetic for first-quadrant spectral sequences of
finitely generated sequences of symmetric-group representations.

The inputs are two nonnegative rational constants controlling the
stability type of the starting page; the functions here propagate them
through later pages to the abutment, exactly, with a final ceiling to
integer degree bounds.  Negative intermediate values are clamped to zero
since degrees are nonnegative by definition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import DomainError


class StabilityType(NamedTuple):
    """Injectivity and surjectivity degree bounds of a sequence."""

    inj: int
    surj: int

    @property
    def stability_degree(self) -> int:
        return max(self.inj, self.surj)


@dataclass(frozen=True)
class BoundParams:
    """The page-level constants: injectivity degree <= beta*q and
    surjectivity degree <= alpha*p + beta*q on the starting page."""

    alpha: Fraction
    beta: Fraction

    def __init__(self, alpha, beta):
        object.__setattr__(self, "alpha", Fraction(alpha))
        object.__setattr__(self, "beta", Fraction(beta))
        if self.alpha < 0 or self.beta < 0:
            raise DomainError(f"constants must be nonnegative: {self}")

    def require_ratio(self) -> None:
        # The page-propagation argument needs 2*alpha <= beta.
        if 2 * self.alpha > self.beta:
            raise DomainError(
                f"page propagation requires 2*alpha <= beta, got "
                f"alpha={self.alpha}, beta={self.beta}"
            )

    def require_weak_ratio(self) -> None:
        # The generation-degree variant only needs alpha <= beta.
        if self.alpha > self.beta:
            raise DomainError(
                f"generation-degree bound requires alpha <= beta, got "
                f"alpha={self.alpha}, beta={self.beta}"
            )


def _clamp_ceil(x) -> int:
    return max(0, math.ceil(x))


def page_stability(params: BoundParams, pq: tuple[int, int], r: int) -> StabilityType:
    """Stability type of the (p, q) entry on page r >= 3:
    injectivity <= alpha*p + beta*q + (beta-alpha)*r + (alpha-2*beta),
    surjectivity <= alpha*p + beta*q."""
    params.require_ratio()
    p, q = pq
    if p < 0 or q < 0:
        raise DomainError(f"first-quadrant position required, got {(p, q)}")
    if r < 3:
        raise DomainError(f"page bounds start at r = 3, got r = {r}")
    a, b = params.alpha, params.beta
    inj = a * p + b * q + (b - a) * r + (a - 2 * b)
    surj = a * p + b * q
    return StabilityType(_clamp_ceil(inj), _clamp_ceil(surj))


def einfty_stability(params: BoundParams, i: int, p_filt: int) -> StabilityType:
    """Stability type of the filtration quotient in total degree i at
    filtration p_filt, read off the page where the entry freezes."""
    if not 0 <= p_filt <= i:
        raise DomainError(f"need 0 <= p_filt <= {i}, got {p_filt}")
    a, b = params.alpha, params.beta
    q = i - p_filt
    inj = a * p_filt + b * q + (b - a) * (i + 2) + (a - 2 * b)
    surj = a * p_filt + b * q
    return StabilityType(_clamp_ceil(inj), _clamp_ceil(surj))


def abutment_stability(
    params: BoundParams, i: int, degenerates_at: int | None = None
) -> StabilityType:
    """Stability type of total degree i of the abutment:
    ((2*beta - alpha)*i - alpha, beta*i).

    When the spectral sequence is known to degenerate at page r (pass
    degenerates_at=r), the sharper page-r bound is used instead:
    injectivity <= beta*i + (beta-alpha)*r + (alpha-2*beta).
    """
    params.require_ratio()
    if i < 0:
        raise DomainError(f"cohomological degree must be nonnegative, got {i}")
    a, b = params.alpha, params.beta
    if degenerates_at is None:
        inj = (2 * b - a) * i - a
    else:
        if degenerates_at < 3:
            raise DomainError("degeneration page must be at least 3")
        inj = b * i + (b - a) * degenerates_at + (a - 2 * b)
    return StabilityType(_clamp_ceil(inj), _clamp_ceil(b * i))


def fisharp_degree(params: BoundParams, i: int) -> int:
    """Generation-degree bound beta*i for the variant with injectivity
    degree forced to zero (partial-injection functoriality)."""
    params.require_weak_ratio()
    if i < 0:
        raise DomainError(f"cohomological degree must be nonnegative, got {i}")
    return _clamp_ceil(params.beta * i)


# ---------------------------------------------------------------------------
# The summary table: one row per family of spaces/groups.  Each row stores
# the printed headline bound N together with the weight and stability type
# its derivation rests on; derived_N = weight + max(inj, surj) and
# length <= weight + 1, char degree <= weight.

TABLE1_ROWS = (
    "config_surface_closed",
    "config_surface_boundary",
    "config_surface_open",
    "moduli",
    "pmod_surface_boundary",
    "pmod_highdim",
    "pmod_highdim_boundary",
    "bpdiff",
)


def _row_data(example: str, i: int) -> tuple[int, int, StabilityType]:
    """(table N, weight, stability type) for one row at degree i."""
    surfaces = BoundParams(1, 2)
    fibration_over_base = BoundParams(0, 2)
    high_dim = BoundParams(0, 1)
    if example == "config_surface_closed":
        # Degeneration at page 3 sharpens the injectivity bound.
        return 5 * i, 2 * i, abutment_stability(surfaces, i, degenerates_at=3)
    if example == "config_surface_open":
        return 5 * i, 2 * i, abutment_stability(surfaces, i)
    if example == "config_surface_boundary":
        return 4 * i, 2 * i, StabilityType(0, fisharp_degree(surfaces, i))
    if example == "moduli":
        return 6 * i, 2 * i, abutment_stability(fibration_over_base, i)
    if example == "pmod_surface_boundary":
        return 4 * i, 2 * i, StabilityType(0, fisharp_degree(fibration_over_base, i))
    if example == "pmod_highdim":
        return 3 * i, i, abutment_stability(high_dim, i)
    if example == "pmod_highdim_boundary":
        return 2 * i, i, StabilityType(0, fisharp_degree(high_dim, i))
    if example == "bpdiff":
        return 3 * i, i, abutment_stability(high_dim, i)
    raise DomainError(f"unknown table row {example!r}; choose from {TABLE1_ROWS}")


@dataclass(frozen=True)
class Table1Row:
    example: str
    i: int
    N: int
    length_bound: int
    char_degree_bound: int
    weight: int
    stability_type: StabilityType
    derived_N: int

    def to_mapping(self) -> dict:
        return {
            "row": self.example,
            "i": self.i,
            "N": self.N,
            "length": self.length_bound,
            "char_degree": self.char_degree_bound,
            "derived": {
                "weight": self.weight,
                "stability_type": list(self.stability_type),
                "N": self.derived_N,
            },
        }


def table1_row(example: str, i: int) -> Table1Row:
    """Headline bounds for one example family at cohomological degree i.

    N is the printed stable range; the derived block records the weight
    and stability type behind it.  For configuration spaces of surfaces
    the printed N = 5i is coarser than the derived value, and both are
    reported.
    """
    if i < 0:
        raise DomainError(f"cohomological degree must be nonnegative, got {i}")
    table_n, weight, stype = _row_data(example, i)
    return Table1Row(
        example=example,
        i=i,
        N=table_n,
        length_bound=weight + 1,
        char_degree_bound=weight,
        weight=weight,
        stability_type=stype,
        derived_N=weight + stype.stability_degree,
    )
