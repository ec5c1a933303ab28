"""The Lie ball (Cartan type IV domain), the 2-proper squaring map on the
first coordinate, and the explicit linear-fractional-free biholomorphism onto
the four-coordinate matrix-image domain.

Two equivalent defining inequalities are evaluated on every call:

    (A)  sum |z_j|^2 < 1   and   2 sum |z_j|^2 - |sum z_j^2|^2 < 1
    (B)  sqrt((sum |z_j|^2)^2 - |sum z_j^2|^2)  <  1 - sum |z_j|^2

(B) squares to (A) given sum |z_j|^2 < 1; both are carried as a bug sentinel.

The distinguished boundary of the squared image (n = 4) is parametrized by

    (e^{2 i t} x1^2, e^{i t} x2, e^{i t} x3, e^{i t} x4),
    x real, x1^2 + x2^2 + x3^2 + x4^2 = 1,

and the map

    f(w) = (w3 + i w4, -w3 + i w4, -w2^2 - w3^2 - w4^2 - w1, 2 w2)

carries it onto the distinguished boundary of the target domain.  No inverse
of f is implemented anywhere; boundary matching is done by forward lattices
plus local refinement over the parameters.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .errors import CriteriaDisagree, PreconditionViolation
from .optimize import nelder_mead
from .verdict import (BAND_FACTOR, DEFAULT_TOL, MembershipVerdict,
                      classify_margin, verdict_from_margin)


def _coords(z) -> list[complex]:
    zs = [complex(v) for v in z]
    if len(zs) < 2:
        raise PreconditionViolation(f"need at least 2 coordinates, got {z!r}")
    return zs


def lie_ball_classify(z, tol: float = DEFAULT_TOL) -> MembershipVerdict:
    """Three-state verdict for the Lie ball in C^n (n >= 2).

    Margin: min(1 - sum|z|^2, 1 - (2 sum|z|^2 - |z bullet z|^2)).
    """
    zs = _coords(z)
    norm2 = sum(abs(v) ** 2 for v in zs)
    bullet = abs(sum(v * v for v in zs))
    ma = min(1.0 - norm2, 1.0 - (2.0 * norm2 - bullet * bullet))
    mb = (1.0 - norm2) - math.sqrt(max(norm2 * norm2 - bullet * bullet, 0.0))
    ra, rb = classify_margin(ma, tol), classify_margin(mb, tol)
    if ra is not rb and abs(ma) > BAND_FACTOR * tol and abs(mb) > BAND_FACTOR * tol:
        raise CriteriaDisagree(
            f"Lie-ball criteria disagree at {z!r}: {ma!r} vs {mb!r}")
    return verdict_from_margin(ma, tol)


def lambda_map(z):
    """(z1, z2, ..., zn) -> (z1^2, z2, ..., zn); identifies +-z1 exactly."""
    zs = _coords(z)
    return tuple([zs[0] * zs[0]] + zs[1:])


def biholo_f(w):
    """(w3 + i w4, -w3 + i w4, -w2^2 - w3^2 - w4^2 - w1, 2 w2)."""
    ws = _coords(w)
    if len(ws) != 4:
        raise PreconditionViolation(f"need exactly 4 coordinates, got {w!r}")
    w1, w2, w3, w4 = ws
    return (w3 + 1j * w4,
            -w3 + 1j * w4,
            -w2 * w2 - w3 * w3 - w4 * w4 - w1,
            2.0 * w2)


@dataclass(frozen=True)
class ShilovParamL4:
    theta: float
    x: tuple[float, float, float, float]

    def __post_init__(self) -> None:
        xs = tuple(float(v) for v in self.x)
        object.__setattr__(self, "x", xs)
        if len(xs) != 4:
            raise PreconditionViolation(f"x must have 4 entries, got {self.x!r}")
        r2 = sum(v * v for v in xs)
        if abs(r2 - 1.0) > 1e-12:
            raise PreconditionViolation(
                f"x must lie on the unit 3-sphere, |x|^2 = {r2!r}")


def shilov_l4_param(q: ShilovParamL4):
    """(e^{2 i t} x1^2, e^{i t} x2, e^{i t} x3, e^{i t} x4)."""
    w = cmath.exp(1j * q.theta)
    x1, x2, x3, x4 = q.x
    return (w * w * x1 * x1, w * x2, w * x3, w * x4)


def shilov_l4_lattice(n: int = 10_000):
    """Deterministic Fibonacci-type lattice on the boundary parameters.

    Hopf coordinates on S^3 (stratified in sin^2) crossed with three
    Kronecker rotations for the angles.  Returns float arrays
    (theta, x1, x2, x3, x4), each of length n, with x rows unit-normalized.
    """
    k = np.arange(n, dtype=float)
    u = (k + 0.5) / n
    eta = np.arcsin(np.sqrt(u))
    xi1 = 2.0 * np.pi * np.mod(k * (math.sqrt(2.0) - 1.0), 1.0)
    xi2 = 2.0 * np.pi * np.mod(k * (math.sqrt(3.0) - 1.0), 1.0)
    theta = 2.0 * np.pi * np.mod(k * (math.sqrt(5.0) - 1.0) / 2.0, 1.0)
    x1 = np.cos(eta) * np.cos(xi1)
    x2 = np.cos(eta) * np.sin(xi1)
    x3 = np.sin(eta) * np.cos(xi2)
    x4 = np.sin(eta) * np.sin(xi2)
    nrm = np.sqrt(x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4)
    return theta, x1 / nrm, x2 / nrm, x3 / nrm, x4 / nrm


def transported_lattice(n: int = 10_000):
    """biholo_f of the squared lattice, vectorized.

    Returns (params, points): params is the (theta, x1..x4) tuple of arrays,
    points is an (n, 4) complex array of boundary points of the target
    domain.
    """
    theta, x1, x2, x3, x4 = shilov_l4_lattice(n)
    w = np.exp(1j * theta)
    pts = np.empty((n, 4), dtype=complex)
    pts[:, 0] = w * (x3 + 1j * x4)
    pts[:, 1] = -w * (x3 - 1j * x4)
    pts[:, 2] = -(w * w)
    pts[:, 3] = 2.0 * w * x2
    return (theta, x1, x2, x3, x4), pts


def _image_from_params(theta: float, u1: float, u2: float, u3: float,
                       u4: float):
    """Transported boundary point for free parameters: (u1..u4) is an
    unnormalized direction projected onto the unit 3-sphere.  Unlike a radial
    clamp of (x2, x3, x4) into the ball, this chart is smooth everywhere away
    from u = 0, so local refinement does not stall when the optimum has a
    vanishing first sphere coordinate."""
    n = math.sqrt(u1 * u1 + u2 * u2 + u3 * u3 + u4 * u4)
    if n < 1e-12:
        return (complex("inf"), 0.0, 0.0, 0.0)
    y2, y3, y4 = u2 / n, u3 / n, u4 / n
    w = cmath.exp(1j * theta)
    return (w * complex(y3, y4),
            -w * complex(y3, -y4),
            -(w * w),
            2.0 * w * y2)


def nearest_transport_distance(target, lattice=None, n_grid: int = 10_000,
                               refine: bool = True) -> float:
    """Distance from `target` (a 4-tuple of complex) to the transported
    boundary set: lattice seed, then Nelder-Mead over the four parameters."""
    tgt = np.asarray([complex(v) for v in target])
    if len(tgt) != 4:
        raise PreconditionViolation(f"target must have 4 coordinates, got {target!r}")
    if lattice is None:
        lattice = transported_lattice(n_grid)
    (theta, x1, x2, x3, x4), pts = lattice
    d2 = np.abs(pts - tgt[None, :]) ** 2
    dist2 = d2.sum(axis=1)
    k = int(np.argmin(dist2))
    best = math.sqrt(float(dist2[k]))
    if not refine:
        return best

    def obj(q) -> float:
        img = _image_from_params(q[0], q[1], q[2], q[3], q[4])
        if img[0] == complex("inf"):
            return 1e6
        d = sum((img[i].real - tgt[i].real) ** 2
                + (img[i].imag - tgt[i].imag) ** 2 for i in range(4))
        n = math.sqrt(q[1] ** 2 + q[2] ** 2 + q[3] ** 2 + q[4] ** 2)
        # the image is scale-invariant in (u1..u4); pin the scale without
        # biasing the minimal distance (the extra term vanishes at n = 1)
        return d + 1e-3 * (n - 1.0) ** 2

    x0 = [float(theta[k]), float(x1[k]), float(x2[k]), float(x3[k]),
          float(x4[k])]
    q, fq, _, _ = nelder_mead(obj, x0, step=0.15, xatol=1e-12, fatol=1e-24,
                              maxiter=2000)
    q, fq, _, _ = nelder_mead(obj, list(q), step=0.01, xatol=1e-13,
                              fatol=1e-26, maxiter=2000)
    img = _image_from_params(q[0], q[1], q[2], q[3], q[4])
    refined = math.sqrt(sum(abs(img[i] - tgt[i]) ** 2 for i in range(4)))
    return min(best, refined)
