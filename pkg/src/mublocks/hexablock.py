"""The hexablock: a Hartogs-type domain in C x (tetrablock) defined by

    sup_{z1, z2 in D} | a sqrt((1-|z1|^2)(1-|z2|^2)) / (1 - x1 z1 - x2 z2 + x3 z1 z2) | < 1,

together with the "normed" variant: the image of the open 2x2 operator ball
under A -> (a21, a11, a22, det A).

The supremum has a closed form.  Writing alpha(z1) = 1 - x1 z1 and
beta(z1) = x2 - x3 z1, the inner supremum over z2 of (1-|z2|^2)/|alpha -
beta z2|^2 equals 1/(|alpha|^2 - |beta|^2) (maximize the phase, then the
radius r2 = |beta|/|alpha|).  The outer problem over z1 reduces on rays to

    maximize (1 - r^2) / (c - 2 m r + d r^2),
    c = 1 - |x2|^2,  d = |x1|^2 - |x3|^2,  m = |x1 - conj(x2) x3|,

whose critical equation m r^2 - (c+d) r + m = 0 has exactly one root in
[0, 1), namely r* = 2m / ((c+d) + sqrt((c+d)^2 - 4 m^2)); membership of x in
the tetrablock guarantees c > 0 and c + d - 2m > 0, so the formula is total.
The spec'd product-grid optimizer is retained as psi_sup_grid -- the
independent numeric route the tests compare against.

The normed variant reduces to the four-coordinate domain: for a != 0,
(a, x1, x2, x3) is in it iff (x1, x2, x3, a + (x1 x2 - x3)/a) is interior
there (the matrix [[x1, (x1 x2 - x3)/a], [a, x2]] is the unique matrix over
the point); for a = 0 the exact rule is x3 = x1 x2 with both |x1|, |x2|
small enough.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .domain_f import f_classify
from .errors import (DenominatorNearZero, OptimizerNoConverge,
                     PreconditionViolation)
from .matrix2 import Matrix2, gram_report, operator_norm
from .optimize import nelder_mead
from .tetrablock import tetra_classify
from .verdict import (DEFAULT_TOL, MembershipVerdict, Region, classify_margin,
                      verdict_from_margin)

_EQ_TOL = 1e-12  # exact-equality band for x3 = x1 x2 in the a = 0 slice


def _check_quad(pt) -> tuple[complex, complex, complex, complex]:
    if len(pt) != 4:
        raise PreconditionViolation(f"expected (a, x1, x2, x3), got {pt!r}")
    return complex(pt[0]), complex(pt[1]), complex(pt[2]), complex(pt[3])


def pi_hexa(b: Matrix2) -> tuple[complex, complex, complex, complex]:
    """Coordinate projection (b21, b11, b22, det B)."""
    return (b.a21, b.a11, b.a22, b.det)


@dataclass(frozen=True)
class PsiProbe:
    z1: complex
    z2: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "z1", complex(self.z1))
        object.__setattr__(self, "z2", complex(self.z2))
        if abs(self.z1) >= 1.0 or abs(self.z2) >= 1.0:
            raise PreconditionViolation(
                f"probe must lie in the open bidisc, got {self!r}")


def psi_eval(q: PsiProbe, pt) -> complex:
    """Evaluate the fractional map at the probe.  Requires the tetrablock
    part strictly interior (then the denominator is bounded away from 0)."""
    a, x1, x2, x3 = _check_quad(pt)
    if not tetra_classify((x1, x2, x3)).is_interior:
        raise PreconditionViolation(
            f"(x1, x2, x3) must be interior in the tetrablock, got {pt!r}")
    den = 1.0 - x1 * q.z1 - x2 * q.z2 + x3 * q.z1 * q.z2
    if abs(den) < 1e-14:
        raise DenominatorNearZero(f"denominator {den!r} at probe {q!r}, point {pt!r}")
    num = a * math.sqrt((1.0 - abs(q.z1) ** 2) * (1.0 - abs(q.z2) ** 2))
    return num / den


def _sup_coeffs(x1: complex, x2: complex, x3: complex) -> tuple[float, float, float]:
    c = 1.0 - abs(x2) ** 2
    d = abs(x1) ** 2 - abs(x3) ** 2
    m = abs(x1 - x2.conjugate() * x3)
    return c, d, m


def psi_sup(pt, tol: float = 1e-8) -> float:
    """Supremum of |psi| over the open bidisc (closed form; tol unused).

    Exactly 0 when a = 0; exactly |a| at x = 0; linear in |a| throughout.
    """
    a, x1, x2, x3 = _check_quad(pt)
    if not tetra_classify((x1, x2, x3)).is_interior:
        raise PreconditionViolation(
            f"(x1, x2, x3) must be interior in the tetrablock, got {pt!r}")
    if a == 0:
        return 0.0
    c, d, m = _sup_coeffs(x1, x2, x3)
    if m == 0.0:
        return abs(a) / math.sqrt(c)
    disc = max((c + d) ** 2 - 4.0 * m * m, 0.0)
    rstar = 2.0 * m / ((c + d) + math.sqrt(disc))
    dmin = c - 2.0 * m * rstar + d * rstar * rstar
    if dmin <= 1e-300:
        return float("inf")
    return abs(a) * math.sqrt(max(1.0 - rstar * rstar, 0.0) / dmin)


def psi_sup_grid(pt, tol: float = 1e-7) -> float:
    """Independent numeric supremum: product polar grid (32 radii x 64 angles
    per disc, radii biased toward 0 -- the numerator dies at the torus), then
    Nelder-Mead refinement from the best 5 cells."""
    a, x1, x2, x3 = _check_quad(pt)
    if not tetra_classify((x1, x2, x3)).is_interior:
        raise PreconditionViolation(
            f"(x1, x2, x3) must be interior in the tetrablock, got {pt!r}")
    if a == 0:
        return 0.0
    am = abs(a)

    n_r, n_phi = 32, 64
    rr = ((np.arange(n_r) + 0.5) / n_r) ** 1.5
    ph = 2.0 * np.pi * np.arange(n_phi) / n_phi
    disc_pts = (rr[:, None] * np.exp(1j * ph)[None, :]).ravel()   # 2048 points
    w = (1.0 - np.abs(disc_pts) ** 2)

    best_vals: list[tuple[float, complex, complex]] = []
    chunk = 256
    for i0 in range(0, disc_pts.size, chunk):
        z1 = disc_pts[i0:i0 + chunk][:, None]
        den = np.abs(1.0 - x1 * z1 - x2 * disc_pts[None, :]
                     + x3 * z1 * disc_pts[None, :])
        num = am * np.sqrt(w[i0:i0 + chunk][:, None] * w[None, :])
        v = num / np.maximum(den, 1e-300)
        flat = int(np.argmax(v))
        r, cidx = divmod(flat, disc_pts.size)
        best_vals.append((float(v[r, cidx]), complex(z1[r, 0]), complex(disc_pts[cidx])))
    best_vals.sort(key=lambda t: -t[0])
    starts = best_vals[:5]

    def neg(qv) -> float:
        u1, v1, u2, v2 = qv
        r1sq = u1 * u1 + v1 * v1
        r2sq = u2 * u2 + v2 * v2
        if r1sq >= 1.0 or r2sq >= 1.0:
            return 0.0
        den = abs(1.0 - x1 * complex(u1, v1) - x2 * complex(u2, v2)
                  + x3 * complex(u1, v1) * complex(u2, v2))
        if den < 1e-300:
            return 0.0
        return -am * math.sqrt((1.0 - r1sq) * (1.0 - r2sq)) / den

    best = starts[0][0]
    fatol = max(tol * 1e-3, 1e-10 * max(1.0, best))
    for (_, z1s, z2s) in starts:
        x0 = [z1s.real, z1s.imag, z2s.real, z2s.imag]
        q, fq, _, ok = nelder_mead(neg, x0, step=0.03,
                                   xatol=tol * 1e-2, fatol=fatol, maxiter=2500)
        if not ok:
            q, fq, _, ok = nelder_mead(neg, q, step=tol * 100,
                                       xatol=tol * 1e-2, fatol=fatol, maxiter=2500)
            if not ok:
                raise OptimizerNoConverge(
                    f"grid supremum refinement stalled at {pt!r}, value {-fq!r}")
        best = max(best, -fq)
    return best


def hexa_classify(pt, tol: float = DEFAULT_TOL) -> MembershipVerdict:
    """Three-state verdict for the hexablock.

    Margin: min(tetrablock margin, 1 - sup).  On the a = 0 slice the rule is
    exactly the tetrablock verdict (no optimization).  When the tetrablock
    part sits inside the tol band the supremum is ill-defined; the verdict is
    then Outside if |a| > 1 + tol (the sup dominates |psi(0,0)| = |a|), and
    otherwise ClosureBoundary flagged indeterminate.
    """
    a, x1, x2, x3 = _check_quad(pt)
    tv = tetra_classify((x1, x2, x3), tol)
    if a == 0:
        return verdict_from_margin(tv.margin, tol,
                                   shilov=(shilov_h_test(pt, tol)
                                           if tv.region is Region.CLOSURE_BOUNDARY
                                           else None))
    if tv.region is Region.OUTSIDE:
        return verdict_from_margin(tv.margin, tol)
    if tv.region is Region.CLOSURE_BOUNDARY:
        if abs(a) > 1.0 + tol:
            return verdict_from_margin(min(tv.margin, 1.0 - abs(a)), tol)
        margin = min(tv.margin, max(-tol, min(tol, 1.0 - abs(a))))
        return MembershipVerdict(region=Region.CLOSURE_BOUNDARY, margin=margin,
                                 tol=tol, shilov=shilov_h_test(pt, tol),
                                 indeterminate=True)
    sup = psi_sup(pt)
    margin = tv.margin if sup == float("inf") else min(tv.margin, 1.0 - sup)
    if sup == float("inf"):
        margin = -1.0
    region = classify_margin(margin, tol)
    shilov = shilov_h_test(pt, tol) if region is Region.CLOSURE_BOUNDARY else None
    return verdict_from_margin(margin, tol, shilov=shilov)


def hexa_slice_a0(x1: complex, x2: complex, x3: complex,
                  tol: float = DEFAULT_TOL) -> bool:
    """Membership of (0, x1, x2, x3) in the open hexablock.

    The a = 0 slice is exactly the open tetrablock, so this is the
    no-optimization fast path of hexa_classify.
    """
    return hexa_classify((0.0, x1, x2, x3), tol).is_interior


@dataclass(frozen=True)
class HnVerdict:
    in_open: bool
    in_closure: bool
    in_interior_of_hn: bool


def hn_classify(pt, tol: float = DEFAULT_TOL) -> HnVerdict:
    """Membership in the normed variant (image of the open/closed ball).

    a != 0: reduce to the four-coordinate domain via the unique matrix
    [[x1, (x1 x2 - x3)/a], [a, x2]] over the point.  a = 0: exact slice rule.
    The interior of the closure-free set is its a != 0 part.
    """
    a, x1, x2, x3 = _check_quad(pt)
    if a == 0:
        fiber_ok = abs(x3 - x1 * x2) <= _EQ_TOL
        in_open = fiber_ok and tetra_classify((x1, x2, x3), tol).is_interior
        in_closure = fiber_ok and max(abs(x1), abs(x2)) <= 1.0 + tol
        return HnVerdict(in_open=in_open, in_closure=in_closure,
                         in_interior_of_hn=False)
    t = (x1 * x2 - x3) / a
    if not cmath.isfinite(t):
        return HnVerdict(in_open=False, in_closure=False, in_interior_of_hn=False)
    fv = f_classify((x1, x2, x3, a + t), tol)
    b = Matrix2(x1, t, a, x2)
    in_open = fv.is_interior
    in_closure = _norm_at_most_one(b, tol)
    return HnVerdict(in_open=in_open, in_closure=in_closure,
                     in_interior_of_hn=in_open)


def _norm_at_most_one(b: Matrix2, tol: float) -> bool:
    """||B|| <= 1 up to tol, safe at coincident singular values.

    The closed-form norm loses half its digits when the two singular values
    collide (a unitary is the worst case), so comparing it against 1 + tol
    rejects exact isometries.  Away from the unit sphere it is still the
    cheapest decisive test; on the sphere itself switch to positivity of
    I - B*B through its trace and determinant, which are polynomial in the
    entries and carry no cancellation beyond ordinary rounding.
    """
    nrm = operator_norm(b)
    if nrm > 1.0 + 1e-6:
        return False
    if nrm <= 1.0 - 1e-6:
        return True
    g = gram_report(b)
    return g.trace_gram >= -2.0 * tol and g.det_gram >= -tol


def shilov_h_test(pt, tol: float = DEFAULT_TOL) -> bool:
    """Distinguished-boundary test: in the closed normed variant with |x3| = 1."""
    a, x1, x2, x3 = _check_quad(pt)
    return (hn_classify(pt, tol).in_closure
            and abs(abs(x3) - 1.0) <= tol)
