"""Three-state membership verdicts with signed margins.

Every domain classifier in this package returns a MembershipVerdict.  The
contract, uniformly:

  * region == INTERIOR  implies margin > tol,
  * region == OUTSIDE   implies margin < -tol,
  * otherwise the point is within the tol band of the boundary of the closure
    (region == CLOSURE_BOUNDARY), i.e. in the closure but not certified
    interior.

The margin is a signed slack of the binding inequality: positive inside,
negative outside, units depend on the domain (documented per classifier).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

DEFAULT_TOL = 1e-9

# Guard-band multiplier used whenever two independent criteria are compared:
# disagreements are only treated as errors if both margins clear this band.
BAND_FACTOR = 10.0


class Region(enum.Enum):
    INTERIOR = "Interior"
    CLOSURE_BOUNDARY = "ClosureBoundary"
    OUTSIDE = "Outside"

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return self.value


def classify_margin(margin: float, tol: float = DEFAULT_TOL) -> Region:
    """Map a signed margin to a region using the +-tol band."""
    if margin > tol:
        return Region.INTERIOR
    if margin < -tol:
        return Region.OUTSIDE
    return Region.CLOSURE_BOUNDARY


@dataclass(frozen=True)
class MembershipVerdict:
    region: Region
    margin: float
    tol: float = DEFAULT_TOL
    # True when the point sits on the Shilov boundary of the domain (only
    # meaningful for region == CLOSURE_BOUNDARY; classifiers that do not know
    # their Shilov boundary leave it None).
    shilov: bool | None = None
    # True when the classifier could not decide between boundary and interior
    # because an auxiliary quantity was itself in the tol band (hexablock
    # over a near-boundary base point).
    indeterminate: bool = False

    def __post_init__(self) -> None:
        if self.region is Region.INTERIOR and not (self.margin > self.tol):
            raise AssertionError(
                f"verdict invariant: Interior needs margin > tol, got {self.margin!r}")
        if self.region is Region.OUTSIDE and not (self.margin < -self.tol):
            raise AssertionError(
                f"verdict invariant: Outside needs margin < -tol, got {self.margin!r}")
        if self.shilov and self.region is Region.INTERIOR:
            raise AssertionError("verdict invariant: Shilov points are never interior")

    @property
    def in_closure(self) -> bool:
        return self.region is not Region.OUTSIDE

    @property
    def is_interior(self) -> bool:
        return self.region is Region.INTERIOR


def verdict_from_margin(margin: float, tol: float = DEFAULT_TOL, *,
                        shilov: bool | None = None,
                        indeterminate: bool = False) -> MembershipVerdict:
    region = classify_margin(margin, tol)
    return MembershipVerdict(region=region, margin=margin, tol=tol,
                             shilov=shilov, indeterminate=indeterminate)
