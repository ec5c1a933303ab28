"""The symmetrized bidisc: image of the open bidisc under (z, w) -> (z+w, zw).

Points are pairs (s, p) = (sum, product).  Two independent interior criteria
are evaluated on every call:

    (A)  |s - conj(s) p| < 1 - |p|^2
    (B)  2 |s - conj(s) p| + |s^2 - 4 p| < 4 - |s|^2

and the closure is the non-strict version.  Criterion (A) alone does not close
up correctly on |p| = 1 (it degenerates to the line s = conj(s) p, which
admits arbitrarily large |s|), so the reported margin carries the extra leg
2 - |s|:

    margin = min((1 - |p|^2) - |s - conj(s) p|, 2 - |s|).

For |p| < 1 the first term already forces |s| <= 1 + |p| < 2 when nonnegative,
so the second leg only bites on the torus |p| = 1 -- exactly where it must.

The distinguished (Shilov) boundary is the set |p| = 1, s = conj(s) p,
|s| <= 2; equivalently the closure points with |p| = 1.
"""

from __future__ import annotations

import cmath

from .errors import CriteriaDisagree, PreconditionViolation
from .verdict import (BAND_FACTOR, DEFAULT_TOL, MembershipVerdict, Region,
                      classify_margin, verdict_from_margin)


def _check_pair(pt) -> tuple[complex, complex]:
    if len(pt) != 2:
        raise PreconditionViolation(f"expected a pair (s, p), got {pt!r}")
    return complex(pt[0]), complex(pt[1])


def g2_margins(s: complex, p: complex) -> tuple[float, float]:
    """Signed slacks of criteria (A) and (B); positive iff strictly inside."""
    ca = (1.0 - abs(p) ** 2) - abs(s - s.conjugate() * p)
    cb = (4.0 - abs(s) ** 2) - (2.0 * abs(s - s.conjugate() * p) + abs(s * s - 4.0 * p))
    return ca, cb


def g2_classify(pt, tol: float = DEFAULT_TOL) -> MembershipVerdict:
    """Classify (s, p) against the open domain / its closure / outside.

    Margin units: criterion (A) slack capped by 2 - |s|.  Raises
    CriteriaDisagree if (A) and (B) classify differently with both slacks
    outside the 10*tol guard band.
    """
    s, p = _check_pair(pt)
    ca, cb = g2_margins(s, p)
    margin = min(ca, 2.0 - abs(s))
    ra = classify_margin(margin, tol)
    rb = classify_margin(cb, tol)
    if ra is not rb and abs(margin) > BAND_FACTOR * tol and abs(cb) > BAND_FACTOR * tol:
        raise CriteriaDisagree(
            f"bidisc criteria disagree at (s, p) = ({s!r}, {p!r}): "
            f"marginA {margin!r} -> {ra}, marginB {cb!r} -> {rb}")
    shilov = None
    if ra is Region.CLOSURE_BOUNDARY:
        shilov = bgamma_test((s, p), tol)
    return verdict_from_margin(margin, tol, shilov=shilov)


def g2_roots(pt) -> tuple[complex, complex]:
    """The two roots of t^2 - s t + p, ordered lexicographically by (Re, Im).

    Round trip: roots sum to s and multiply to p (checked to 1e-10).
    """
    s, p = _check_pair(pt)
    root = cmath.sqrt(s * s - 4.0 * p)
    l1 = (s + root) / 2.0
    l2 = (s - root) / 2.0
    if (l1.real, l1.imag) > (l2.real, l2.imag):
        l1, l2 = l2, l1
    scale = 1.0 + abs(s) + abs(p)
    if abs((l1 + l2) - s) > 1e-10 * scale or abs(l1 * l2 - p) > 1e-10 * scale:
        raise AssertionError(f"root round-trip failed for {pt!r}")
    return l1, l2


def bgamma_test(pt, tol: float = DEFAULT_TOL) -> bool:
    """Distinguished-boundary test: |p| = 1, s = conj(s) p, |s| <= 2."""
    s, p = _check_pair(pt)
    return (abs(abs(p) - 1.0) <= tol
            and abs(s - s.conjugate() * p) <= tol
            and abs(s) <= 2.0 + tol)


def bgamma_point(beta: complex, p: complex) -> tuple[complex, complex]:
    """Parametrize the distinguished boundary: (beta + conj(beta) p, p), |p| = 1.

    Valid for |beta| <= 1; used by samplers and tests.
    """
    beta = complex(beta)
    p = complex(p)
    if abs(abs(p) - 1.0) > 1e-12:
        raise PreconditionViolation(f"|p| must be 1, got {abs(p)!r}")
    return (beta + beta.conjugate() * p, p)


def g2_point(z: complex, w: complex) -> tuple[complex, complex]:
    """Symmetrization map: (z, w) -> (z + w, z w)."""
    z = complex(z)
    w = complex(w)
    return (z + w, z * w)
