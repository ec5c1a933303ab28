"""The four-coordinate image domain of the open 2x2 operator ball under

    A  ->  (a11, a22, det A, a12 + a21)   =: (x, a, p, s).

Membership has an exact algebraic characterization: with

    Q(x, a, p, s) = 1 - |a|^2 - |x|^2 + |p|^2 - |s|^2/2 - |s^2 - 4(ax-p)|/2

(the Gram determinant of any matrix over the point), the point lies in the
open domain iff (s, ax-p) is in the open symmetrized bidisc, |p| < 1 and
Q > 0; the closure replaces all three by their non-strict forms.  The matrix
route -- reconstruct B from the quadratic t^2 - s t + (ax - p) and test its
norm -- is implemented separately as an oracle; both must agree.

The domain is (1,1,2,1)-quasi-balanced, which gives the scaling lemma, the
Minkowski gauge, and the swap symmetry

    (x, a, p, s)  <->  (lambda1, lambda2, -p, a + x),

where lambda_i are the roots of t^2 - s t + (ax - p).

Distinguished boundary (three equivalent descriptions, all implemented):

    * parametrized: (e^{it}(x3+ix4), -e^{it}(x3-ix4), -e^{2it}, 2 e^{it} x2)
      over t real and (x2,x3,x4) in the closed unit 3-ball;
    * ball form: (conj(z), -eta z, -eta, w + conj(w) eta) with |z|^2+|w|^2 <= 1
      and |eta| = 1;
    * closed form: (x, a, p) on the distinguished boundary of the tetrablock,
      s + conj(s) p = 0, and |x|^2 + |s|^2/4 <= 1.

The closed form comes from eliminating w in s = w - conj(w) p: writing
p = e^{2it}, solvability forces Re(e^{-it} s) = 0, i.e. s + conj(s) p = 0,
and the solution set is w = s/2 + mu e^{it} (mu real), so the least |w| is
|s|/2.  The parametrization is a 2-to-1 cover; antipodal parameters give the
same point, and nothing else collides.
"""

from __future__ import annotations

import cmath
import math
import random
from dataclasses import dataclass

from .bidisc import g2_classify, g2_roots
from .errors import CriteriaDisagree, OptimizerNoConverge, PreconditionViolation
from .matrix2 import Matrix2, gram_det_from_coords, operator_norm
from .tetrablock import be_test
from .verdict import (BAND_FACTOR, DEFAULT_TOL, MembershipVerdict, Region,
                      classify_margin, verdict_from_margin)

# Bounding box for random sampling: the closure projects into the closed
# bidisc/tetrablock/pentablock hulls, so |x|, |a| <= 1, |p| <= 1, |s| <= 2;
# the box is padded to keep outside-dense noise in play.
SAMPLE_BOX = (2.5, 2.5, 1.5, 2.5)  # |x|, |a|, |p|, |s|


def _check_quad(pt) -> tuple[complex, complex, complex, complex]:
    if len(pt) != 4:
        raise PreconditionViolation(f"expected (x, a, p, s), got {pt!r}")
    return complex(pt[0]), complex(pt[1]), complex(pt[2]), complex(pt[3])


def pi_f(b: Matrix2) -> tuple[complex, complex, complex, complex]:
    """Coordinate projection (b11, b22, det B, b12 + b21)."""
    return (b.a11, b.a22, b.det, b.a12 + b.a21)


def q_value(pt) -> float:
    """The Gram-determinant invariant Q of a point (exact arithmetic)."""
    x, a, p, s = _check_quad(pt)
    return gram_det_from_coords(x, a, p, s)


def f_margins(pt, tol: float = DEFAULT_TOL) -> tuple[float, float, float]:
    """The three signed slacks: bidisc margin of (s, ax-p), 1 - |p|, Q."""
    x, a, p, s = _check_quad(pt)
    gv = g2_classify((s, a * x - p), tol)
    return (gv.margin, 1.0 - abs(p), gram_det_from_coords(x, a, p, s))


def f_classify(pt, tol: float = DEFAULT_TOL) -> MembershipVerdict:
    """Three-state membership verdict; margin = min of the three slacks."""
    m1, m2, m3 = f_margins(pt, tol)
    margin = min(m1, m2, m3)
    region = classify_margin(margin, tol)
    shilov = None
    if region is Region.CLOSURE_BOUNDARY:
        shilov = shilov_f_test(pt, tol)
    return verdict_from_margin(margin, tol, shilov=shilov)


def f_matrix_witness(pt) -> Matrix2:
    """A matrix over the point: off-diagonal entries are the roots of
    t^2 - s t + (ax - p).  The only other matrix over the point is the
    transpose, which has the same norm."""
    x, a, p, s = _check_quad(pt)
    b12, b21 = g2_roots((s, a * x - p))
    return Matrix2(x, b12, b21, a)


def f_classify_matrix_oracle(pt, tol: float = DEFAULT_TOL) -> MembershipVerdict:
    """Independent verdict via reconstruction: margin = 1 - ||B||.

    Must agree with f_classify outside the guard band; a disagreement raises
    CriteriaDisagree (bug sentinel, not a borderline-input condition).
    """
    b = f_matrix_witness(pt)
    margin = 1.0 - operator_norm(b)
    region = classify_margin(margin, tol)
    alg = f_classify(pt, tol)
    if (region is not alg.region
            and abs(margin) > BAND_FACTOR * tol
            and abs(alg.margin) > BAND_FACTOR * tol):
        raise CriteriaDisagree(
            f"matrix oracle disagrees with algebraic test at {pt!r}: "
            f"norm margin {margin!r} vs algebraic margin {alg.margin!r}")
    shilov = None
    if region is Region.CLOSURE_BOUNDARY:
        shilov = shilov_f_test(pt, tol)
    return verdict_from_margin(margin, tol, shilov=shilov)


def f_scale(pt, r: float):
    """Quasi-balanced inward scaling (r x, r a, r^2 p, r s), 0 < r < 1.

    Sends the closure into the open domain.
    """
    if not (isinstance(r, (int, float)) and 0.0 < r < 1.0):
        raise PreconditionViolation(f"scale factor must lie in (0, 1), got {r!r}")
    x, a, p, s = _check_quad(pt)
    return (r * x, r * a, r * r * p, r * s)


def f_rescale_by(pt, t: float):
    """(x/t, a/t, p/t^2, s/t) -- the gauge direction (no range restriction)."""
    x, a, p, s = _check_quad(pt)
    return (x / t, a / t, p / (t * t), s / t)


def minkowski_gauge(pt, tol: float = DEFAULT_TOL) -> float:
    """inf{t > 0 : (x/t, a/t, p/t^2, s/t) interior}, by bracketing bisection.

    0 at the origin; < 1 iff interior; 1 on distinguished-boundary points.
    """
    x, a, p, s = _check_quad(pt)
    if x == 0 and a == 0 and p == 0 and s == 0:
        return 0.0

    # Exact-sign membership (tol 0): the banded verdict would bias the
    # crossing by band^(1/k) at boundary points of tangency order k.
    def inside(t: float) -> bool:
        return f_classify(f_rescale_by(pt, t), 0.0).is_interior

    hi = 1.0
    for _ in range(60):
        if inside(hi):
            break
        hi *= 2.0
    else:
        raise OptimizerNoConverge(f"no interior bracket above for {pt!r}")
    lo = hi
    for _ in range(60):
        lo *= 0.5
        if not inside(lo):
            break
    else:
        raise OptimizerNoConverge(f"no exterior bracket below for {pt!r}")
    # invariant: inside(hi), not inside(lo); the inside set is an up-ray in t
    while hi - lo > tol * max(1.0, hi):
        mid = 0.5 * (lo + hi)
        if inside(mid):
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def f_swap(pt):
    """(x, a, p, s) -> (lambda1, lambda2, -p, a + x); preserves membership."""
    x, a, p, s = _check_quad(pt)
    l1, l2 = g2_roots((s, a * x - p))
    return (l1, l2, -p, a + x)


@dataclass(frozen=True)
class FRelations:
    g2: tuple[complex, complex]
    tetra: tuple[complex, complex, complex]
    penta: tuple[complex, complex, complex]


def f_relations(pt) -> FRelations:
    """The three coordinate projections carried by an interior point:
    (s, ax-p) in the bidisc domain, (x, a, p) in the tetrablock,
    (a, s, -p) in the pentablock."""
    x, a, p, s = _check_quad(pt)
    return FRelations(g2=(s, a * x - p), tetra=(x, a, p), penta=(a, s, -p))


def f_slice_s_zero(x1, x2, x3) -> bool:
    """Is (x1, x2, x3, 0) interior?  (Equivalent to tetrablock membership of
    (x1, x2, x3); the equivalence is property-tested, not enforced here.)"""
    return f_classify((complex(x1), complex(x2), complex(x3), 0.0)).is_interior


def f_slice_xa_zero(p, s) -> bool:
    """Is (0, 0, p, s) interior?  Dual-evaluated against (s, -p) in the open
    bidisc domain; raises CriteriaDisagree if the two routes split."""
    p = complex(p)
    s = complex(s)
    fv = f_classify((0.0, 0.0, p, s))
    gv = g2_classify((s, -p))
    if (fv.is_interior != gv.is_interior
            and abs(fv.margin) > BAND_FACTOR * DEFAULT_TOL
            and abs(gv.margin) > BAND_FACTOR * DEFAULT_TOL):
        raise CriteriaDisagree(
            f"slice x=a=0 routes disagree at (p, s) = ({p!r}, {s!r}): "
            f"four-coordinate margin {fv.margin!r} vs bidisc margin {gv.margin!r}")
    return fv.is_interior


# ---------------------------------------------------------------------------
# Distinguished boundary
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ShilovParamF:
    theta: float
    x2: float
    x3: float
    x4: float

    def __post_init__(self) -> None:
        r2 = self.x2 ** 2 + self.x3 ** 2 + self.x4 ** 2
        if r2 > 1.0 + 1e-12:
            raise PreconditionViolation(
                f"(x2, x3, x4) must lie in the closed unit 3-ball, |.|^2 = {r2!r}")


@dataclass(frozen=True)
class BallParamF:
    z: complex
    w: complex
    eta: complex

    def __post_init__(self) -> None:
        object.__setattr__(self, "z", complex(self.z))
        object.__setattr__(self, "w", complex(self.w))
        object.__setattr__(self, "eta", complex(self.eta))
        if abs(self.z) ** 2 + abs(self.w) ** 2 > 1.0 + 1e-12:
            raise PreconditionViolation("(z, w) must lie in the closed unit 2-ball")
        if abs(abs(self.eta) - 1.0) > 1e-12:
            raise PreconditionViolation(f"|eta| must be 1, got {abs(self.eta)!r}")


def shilov_f_test(pt, tol: float = DEFAULT_TOL) -> bool:
    """Closed-form distinguished-boundary test:

        (x, a, p) on the tetrablock distinguished boundary,
        s + conj(s) p = 0,  and  |x|^2 + |s|^2/4 <= 1.
    """
    x, a, p, s = _check_quad(pt)
    return (be_test((x, a, p), tol)
            and abs(s + s.conjugate() * p) <= tol
            and abs(x) ** 2 + abs(s) ** 2 / 4.0 <= 1.0 + tol)


def _shilov_point_from_omega(omega: complex, x2: float, x3: float, x4: float):
    """Boundary parametrization with omega = e^{i theta} passed explicitly.

    Negating all four arguments reproduces the same point bitwise (products of
    negated pairs are exact in IEEE arithmetic), which is what makes the
    two-to-one identification testable as exact equality.
    """
    return (omega * complex(x3, x4),
            -omega * complex(x3, -x4),
            -(omega * omega),
            2.0 * omega * x2)


def shilov_f_param(q: ShilovParamF):
    """(e^{it}(x3+ix4), -e^{it}(x3-ix4), -e^{2it}, 2 e^{it} x2)."""
    omega = cmath.exp(1j * q.theta)
    return _shilov_point_from_omega(omega, q.x2, q.x3, q.x4)


def shilov_f_from_ball(q: BallParamF):
    """(conj(z), -eta z, -eta, w + conj(w) eta)."""
    return (q.z.conjugate(),
            -q.eta * q.z,
            -q.eta,
            q.w + q.w.conjugate() * q.eta)


def shilov_f_double_cover(q: ShilovParamF, tol: float = DEFAULT_TOL) -> bool:
    """Check the two-to-one structure at q: the antipodal parameter gives the
    identical point (exact), while a nearby non-antipodal parameter gives a
    point farther than tol away."""
    omega = cmath.exp(1j * q.theta)
    p1 = _shilov_point_from_omega(omega, q.x2, q.x3, q.x4)
    p2 = _shilov_point_from_omega(-omega, -q.x2, -q.x3, -q.x4)
    exact = max(abs(u - v) for u, v in zip(p1, p2)) == 0.0

    shrink = 0.97
    dx = (0.011, -0.017, 0.013)
    qp = ShilovParamF(q.theta + 0.05,
                      shrink * q.x2 + dx[0],
                      shrink * q.x3 + dx[1],
                      shrink * q.x4 + dx[2])
    p3 = shilov_f_param(qp)
    distinct = max(abs(u - v) for u, v in zip(p1, p3)) > tol
    return exact and distinct


def sample_shilov_param_f(rng: random.Random) -> ShilovParamF:
    """Uniform-ish sample of the boundary parameters (angle x closed 3-ball)."""
    theta = rng.uniform(0.0, 2.0 * math.pi)
    g = [rng.gauss(0.0, 1.0) for _ in range(3)]
    nrm = math.sqrt(sum(v * v for v in g))
    while nrm < 1e-12:
        g = [rng.gauss(0.0, 1.0) for _ in range(3)]
        nrm = math.sqrt(sum(v * v for v in g))
    r = rng.random() ** (1.0 / 3.0)
    return ShilovParamF(theta, r * g[0] / nrm, r * g[1] / nrm, r * g[2] / nrm)


def sample_point_f(rng: random.Random):
    """Uniform box noise over the sampling box (outside-dense)."""
    bx, ba, bp, bs = SAMPLE_BOX

    def cdisc(radius: float) -> complex:
        return complex(rng.uniform(-radius, radius), rng.uniform(-radius, radius))

    return (cdisc(bx), cdisc(ba), cdisc(bp), cdisc(bs))
