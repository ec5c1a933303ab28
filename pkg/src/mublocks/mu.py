"""Structured singular value on 2x2 matrices.

For a linear subspace E of M2(C),

    mu_E(A) = 1 / inf{ ||X|| : X in E, det(I - A X) = 0 },

equal to 0 when no X in E satisfies the constraint.  The constraint is one
polynomial equation in the basis coefficients c:

    det(I - A X(c)) = 1 - sum_i tr(A B_i) c_i + det(A) * det(X(c)),

with det(X(c)) quadratic in c via polarized determinants.  Exact paths: the
symbolic infeasibility test (all non-constant coefficients vanish), k = 1
(quadratic roots), and k = 4 (the structure is all of M2, so the infimum is
1/||A|| at a rank-one X).  For k = 2, 3 the variety is swept by unit vectors
w: det(I - A X) = 0 iff X(Aw) = w for some unit w, an affine constraint on c
whose minimum-norm solution F(w) is refined over w by seeded multistart
descent.  Since ||X|| >= 1/||A w|| >= 1/||A|| for any feasible pair, hitting
F = 1/||A|| at the top singular vector certifies global optimality and the
sweep stops early.
"""

from __future__ import annotations

import cmath
import math
import random
import time
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import (InfeasibleConstraint, OptimizerNoConverge,
                     PreconditionViolation)
from .matrix2 import Matrix2, operator_norm, spectral_radius
from .optimize import nelder_mead

_SEED_STARTS = 0x5EED
_RESIDUAL_TOL = 1e-7

E11 = Matrix2(1, 0, 0, 0)
E12 = Matrix2(0, 1, 0, 0)
E21 = Matrix2(0, 0, 1, 0)
E22 = Matrix2(0, 0, 0, 1)
IDENTITY = Matrix2.identity()


def _vec(b: Matrix2) -> np.ndarray:
    return np.array(b.entries(), dtype=complex)


@dataclass(frozen=True)
class Structure:
    """A complex-linear subspace of M2(C) given by an independent basis."""

    basis: tuple[Matrix2, ...]
    name: str = ""

    def __post_init__(self) -> None:
        basis = tuple(self.basis)
        object.__setattr__(self, "basis", basis)
        k = len(basis)
        if not 1 <= k <= 4:
            raise PreconditionViolation(f"basis length must be 1..4, got {k}")
        m = np.stack([_vec(b) for b in basis], axis=1)
        sv = np.linalg.svd(m, compute_uv=False)
        if sv[-1] <= 1e-10 * max(sv[0], 1e-300):
            raise PreconditionViolation(
                f"basis is linearly dependent (singular values {sv!r})")

    @property
    def k(self) -> int:
        return len(self.basis)

    def basis_matrix(self) -> np.ndarray:
        """4 x k complex matrix whose columns are the vectorized basis."""
        return np.stack([_vec(b) for b in self.basis], axis=1)

    def coeffs_of(self, a: Matrix2, tol: float = 1e-10) -> Optional[np.ndarray]:
        """Coefficients of `a` in the basis, or None if a is not in the span."""
        m = self.basis_matrix()
        c, _, _, _ = np.linalg.lstsq(m, _vec(a), rcond=None)
        scale = max(1.0, float(np.abs(_vec(a)).max()))
        if np.abs(m @ c - _vec(a)).max() > tol * scale:
            return None
        return c

    def contains_identity(self, tol: float = 1e-10) -> bool:
        return self.coeffs_of(IDENTITY, tol) is not None

    def element(self, c) -> Matrix2:
        x = Matrix2(0, 0, 0, 0)
        for ci, b in zip(c, self.basis):
            x = x + b.scale(complex(ci))
        return x


def e_theta(theta: float) -> Structure:
    """Span of E11, E22 and [[0, 1], [e^{i theta}, 0]]."""
    w = cmath.exp(1j * float(theta))
    return Structure((E11, E22, Matrix2(0, 1, w, 0)),
                     name=f"e_theta:{float(theta)!r}")


_PRESETS = {
    "scalar": lambda: Structure((IDENTITY,), name="scalar"),
    "diag": lambda: Structure((E11, E22), name="diag"),
    "upper": lambda: Structure((E11, E12, E22), name="upper"),
    "lower": lambda: Structure((E11, E21, E22), name="lower"),
    "full": lambda: Structure((E11, E12, E21, E22), name="full"),
    "skewdiag": lambda: Structure(
        (Matrix2(1, 0, 0, -1), E12, E21), name="skewdiag"),
}


def structure_from_name(name: str) -> Structure:
    """Resolve "scalar", "diag", "upper", "lower", "full", "skewdiag",
    or "e_theta:<float>"."""
    key = name.strip().lower()
    if key.startswith("e_theta:"):
        try:
            theta = float(key.split(":", 1)[1])
        except ValueError:
            raise KeyError(f"bad e_theta parameter in {name!r}") from None
        return e_theta(theta)
    if key in _PRESETS:
        return _PRESETS[key]()
    raise KeyError(f"unknown structure name {name!r}")


@dataclass(frozen=True)
class MuResult:
    value: float
    minimizer: Optional[Matrix2]
    status: str  # "Exact" | "Numeric" | "Infeasible"

    def __post_init__(self) -> None:
        if self.status not in ("Exact", "Numeric", "Infeasible"):
            raise PreconditionViolation(f"bad status {self.status!r}")
        infeasible = self.status == "Infeasible"
        if infeasible != (self.value == 0.0) or infeasible != (self.minimizer is None):
            raise PreconditionViolation(
                f"inconsistent result: {self.value!r}, {self.minimizer!r}, "
                f"{self.status!r}")


def _constraint_coeffs(a: Matrix2, basis):
    """det(I - A X(c)) = 1 + sum_i lin[i] c_i + sum_{i<=j} quad[(i,j)] c_i c_j."""
    k = len(basis)
    lin = [-(a @ b).trace for b in basis]
    da = a.det
    quad = {}
    for i in range(k):
        bi = basis[i]
        quad[(i, i)] = da * bi.det
        for j in range(i + 1, k):
            bj = basis[j]
            mixed = (bi.a11 * bj.a22 + bj.a11 * bi.a22
                     - bi.a12 * bj.a21 - bj.a12 * bi.a21)
            quad[(i, j)] = da * mixed
    return lin, quad


def _det_residual(a: Matrix2, x: Matrix2) -> float:
    m = Matrix2.identity() - (a @ x)
    return abs(m.det)


def _top_singular_pair(a: Matrix2):
    """(sigma_1, u_1, v_1) with A v1 = sigma_1 u1, from the 2x2 Hermitian A*A."""
    h = a.conj_transpose() @ a
    h11, h12 = h.a11.real, h.a12
    h22 = h.a22.real
    half = 0.5 * (h11 - h22)
    lam = 0.5 * (h11 + h22) + math.hypot(half, abs(h12))
    v_a = (h12, complex(lam - h11))
    v_b = (complex(lam - h22), h12.conjugate())
    na = abs(v_a[0]) ** 2 + abs(v_a[1]) ** 2
    nb = abs(v_b[0]) ** 2 + abs(v_b[1]) ** 2
    v = v_a if na >= nb else v_b
    n = math.sqrt(max(na, nb))
    if n < 1e-150:
        v, n = (1.0 + 0j, 0j), 1.0
    v1 = (v[0] / n, v[1] / n)
    s1 = math.sqrt(max(lam, 0.0))
    if s1 < 1e-150:
        return 0.0, (1.0 + 0j, 0j), v1
    av = a.apply(v1)
    u1 = (av[0] / s1, av[1] / s1)
    return s1, u1, v1


def _min_norm_on_affine(structure: Structure, m: np.ndarray, rhs: np.ndarray,
                        starts: int = 1, rng: Optional[random.Random] = None,
                        polish: bool = True):
    """Minimize the operator norm of X(c) over {c : m c = rhs}.

    Returns (norm, c) or raises InfeasibleConstraint when the affine set is
    empty.  The least-squares particular solution is polished by descent over
    the complex nullspace coordinates.  The norm is convex in c, but its
    minimum typically sits where the two singular values coincide — a kink —
    so with `polish` the simplex search is restarted at the incumbent with
    shrinking steps to recover the digits lost to stagnation.
    """
    c0, _, _, _ = np.linalg.lstsq(m, rhs, rcond=None)
    scale = max(1.0, float(np.abs(rhs).max()))
    if np.abs(m @ c0 - rhs).max() > 1e-9 * scale:
        raise InfeasibleConstraint("affine constraint set is empty")
    u, s, vh = np.linalg.svd(m)
    rank = int(np.sum(s > 1e-12 * max(float(s[0]), 1e-300)))
    null = vh[rank:].conj().T  # k x (k - rank)
    nd = null.shape[1]
    x0 = structure.element(c0)
    if nd == 0:
        return operator_norm(x0), c0
    null_mats = [structure.element(null[:, j]) for j in range(nd)]

    def norm_at(t) -> float:
        x = x0
        for j in range(nd):
            x = x + null_mats[j].scale(complex(t[2 * j], t[2 * j + 1]))
        return operator_norm(x)

    step = 0.5 * max(1.0, operator_norm(x0))
    best_t, best_f = [0.0] * (2 * nd), norm_at([0.0] * (2 * nd))
    trials = [[0.0] * (2 * nd)]
    if rng is not None:
        for _ in range(max(0, starts - 1)):
            trials.append([rng.gauss(0.0, step) for _ in range(2 * nd)])
    budget = 400 if polish else 150
    for t0 in trials:
        t, f, _, _ = nelder_mead(norm_at, t0, step=step, xatol=1e-11,
                                 fatol=1e-13 * max(1.0, best_f),
                                 maxiter=budget)
        if f < best_f:
            best_t, best_f = list(t), f
    if polish:
        for shrink in (1e-2, 1e-4):
            t, f, _, _ = nelder_mead(norm_at, best_t, step=step * shrink,
                                     xatol=1e-13, fatol=1e-15 * max(1.0, best_f),
                                     maxiter=400)
            if f < best_f:
                best_t, best_f = list(t), f
    c = np.array(c0, dtype=complex)
    for j in range(nd):
        c = c + null[:, j] * complex(best_t[2 * j], best_t[2 * j + 1])
    return best_f, c


def _inner_min_norm(a: Matrix2, structure: Structure, w, polish: bool = True):
    """F(w) = min{||X|| : X in E, X(Aw) = w} for a unit 2-vector w.

    Returns (F, c) or None when no element of E maps Aw to w.
    """
    aw = a.apply(w)
    if abs(aw[0]) + abs(aw[1]) < 1e-150:
        return None
    m = np.stack([np.array(b.apply(aw), dtype=complex) for b in structure.basis],
                 axis=1)
    rhs = np.array(w, dtype=complex)
    try:
        return _min_norm_on_affine(structure, m, rhs, polish=polish)
    except InfeasibleConstraint:
        return None


def _w_of(phi: float, psi: float):
    return (complex(math.cos(phi)), cmath.exp(1j * psi) * math.sin(phi))


def _quadratic_roots(m: complex, l: complex, q: complex):
    """Roots of m x^2 + l x + q = 0, cancellation-safe; [] when unsolvable."""
    if m == 0.0:
        if l == 0.0:
            return []
        return [-q / l]
    sq = cmath.sqrt(l * l - 4.0 * m * q)
    u = l + sq if abs(l + sq) >= abs(l - sq) else l - sq
    if u == 0.0:
        return [complex(0.0)]
    return [-u / (2.0 * m), -2.0 * q / u]


class _VarietyChart:
    """det(I - A X(c)) = 0 solved for coordinate `dep` as a function of the
    remaining coordinates: the constraint is quadratic in each variable."""

    def __init__(self, structure: Structure, lin, quad, dep: int):
        self.structure = structure
        self.lin = lin
        self.quad = quad
        self.dep = dep
        self.free = [i for i in range(structure.k) if i != dep]

    def _dep_poly(self, cf):
        lin, quad, dep = self.lin, self.quad, self.dep
        const = 1.0 + 0j
        for idx, i in enumerate(self.free):
            const += lin[i] * cf[idx]
        for ii, i in enumerate(self.free):
            for jj in range(ii, len(self.free)):
                j = self.free[jj]
                key = (i, j) if i <= j else (j, i)
                const += quad[key] * cf[ii] * cf[jj]
        l = lin[dep]
        for idx, i in enumerate(self.free):
            key = (i, dep) if i < dep else (dep, i)
            l += quad[key] * cf[idx]
        return quad[(dep, dep)], l, const

    def complete(self, t):
        """Full coefficient vectors on the variety above free coords t
        (real pairs), one per quadratic branch."""
        cf = [complex(t[2 * i], t[2 * i + 1]) for i in range(len(self.free))]
        out = []
        for root in _quadratic_roots(*self._dep_poly(cf)):
            c = [0j] * self.structure.k
            for idx, i in enumerate(self.free):
                c[i] = cf[idx]
            c[self.dep] = root
            out.append(c)
        return out

    def norm(self, t) -> float:
        best = math.inf
        for c in self.complete(t):
            best = min(best, operator_norm(self.structure.element(c)))
        return best


def _mu_numeric(a: Matrix2, structure: Structure, tol: float) -> MuResult:
    s1, _, v1 = _top_singular_pair(a)
    # certificate: any feasible X satisfies ||X|| >= 1/||A w|| >= 1/sigma_1.
    # If the top singular vector admits a feasible X with ||X|| within eps of
    # 1/sigma_1, then mu lies in [sigma_1/(1+eps), sigma_1] whatever the
    # structure, so sigma_1 is returned without descending on the variety.
    probe = _inner_min_norm(a, structure, v1)
    if probe is not None and probe[0] * s1 <= 1.0 + 1e-6:
        x = structure.element(probe[1])
        if _det_residual(a, x) <= _RESIDUAL_TOL * (1.0 + s1 * probe[0]) ** 2:
            status = "Exact" if probe[0] * s1 <= 1.0 + 1e-9 else "Numeric"
            return MuResult(value=s1, minimizer=x, status=status)

    lin, quad = _constraint_coeffs(a, structure.basis)
    k = structure.k
    scale0 = 1.0 / max(s1, 1e-150)
    rng = random.Random(_SEED_STARTS)
    charts = [_VarietyChart(structure, lin, quad, dep) for dep in range(k)]
    ndim = 2 * (k - 1)

    starts: list[tuple[int, list[float]]] = [(dep, [0.0] * ndim)
                                             for dep in range(k)]
    i = 0
    while len(starts) < 20:
        starts.append((i % k,
                       [rng.gauss(0.0, scale0) for _ in range(ndim)]))
        i += 1

    best_f, best_c, repeats = math.inf, None, 0
    for dep, t0 in starts:
        chart = charts[dep]
        t, f, _, _ = nelder_mead(chart.norm, t0, step=0.7 * scale0,
                                 xatol=1e-12 * scale0,
                                 fatol=1e-12 * scale0, maxiter=400)
        if not math.isfinite(f):
            continue
        if f < best_f * (1.0 - 1e-8):
            best_f, repeats = f, 0
            best_c = min(chart.complete(t),
                         key=lambda c: operator_norm(structure.element(c)))
        elif f <= best_f * (1.0 + 1e-8):
            repeats += 1
            if repeats >= 3:
                break
    if best_c is None:
        raise OptimizerNoConverge(
            f"no feasible point located on the constraint variety for {a!r}")
    # polish around the incumbent, once per chart
    for chart in charts:
        t0 = []
        for i2 in chart.free:
            t0 += [best_c[i2].real, best_c[i2].imag]
        t, f, _, _ = nelder_mead(chart.norm, t0, step=1e-3 * scale0,
                                 xatol=1e-13 * scale0, fatol=0.0, maxiter=300)
        if math.isfinite(f) and f < best_f:
            best_f = f
            best_c = min(chart.complete(t),
                         key=lambda c: operator_norm(structure.element(c)))
    x = structure.element(best_c)
    gscale = 1.0 + sum(abs(lv) * abs(cv) for lv, cv in zip(lin, best_c))
    gscale += sum(abs(qv) * abs(best_c[i2]) * abs(best_c[j2])
                  for (i2, j2), qv in quad.items())
    if _det_residual(a, x) > _RESIDUAL_TOL * gscale:
        raise OptimizerNoConverge(
            f"constraint residual {_det_residual(a, x)!r} exceeds tolerance")
    return MuResult(value=1.0 / best_f, minimizer=x, status="Numeric")


def mu_value(a: Matrix2, structure: Structure,
             tol: float = _RESIDUAL_TOL) -> MuResult:
    """Structured singular value of `a` relative to `structure`."""
    basis = structure.basis
    lin, quad = _constraint_coeffs(a, basis)
    if all(v == 0.0 for v in lin) and all(v == 0.0 for v in quad.values()):
        return MuResult(value=0.0, minimizer=None, status="Infeasible")

    k = structure.k
    if k == 1:
        b = basis[0]
        lc, qc = lin[0], quad[(0, 0)]
        if qc == 0.0:
            roots = [-1.0 / lc]
        else:
            # roots of qc c^2 + lc c + 1, cancellation-safe split
            sq = cmath.sqrt(lc * lc - 4.0 * qc)
            u = lc + sq if abs(lc + sq) >= abs(lc - sq) else lc - sq
            roots = [-u / (2.0 * qc), -2.0 / u]
        c = min(roots, key=abs)
        x = b.scale(c)
        return MuResult(value=1.0 / (abs(c) * operator_norm(b)), minimizer=x,
                        status="Exact")

    if k == 4:
        s1, u1, v1 = _top_singular_pair(a)
        if s1 <= 0.0:
            return MuResult(value=0.0, minimizer=None, status="Infeasible")
        x = Matrix2(v1[0] * u1[0].conjugate(), v1[0] * u1[1].conjugate(),
                    v1[1] * u1[0].conjugate(), v1[1] * u1[1].conjugate())
        x = x.scale(1.0 / s1)
        return MuResult(value=s1, minimizer=x, status="Exact")

    return _mu_numeric(a, structure, tol)


def mu_sandwich_check(a: Matrix2, structure: Structure,
                      tol: float = 1e-6) -> bool:
    """spectral_radius(A) <= mu(A) <= operator_norm(A), up to tol*scale.

    Requires the identity in the structure's span.
    """
    if not structure.contains_identity():
        raise PreconditionViolation(
            f"identity not in span of structure {structure.name!r}")
    mu = mu_value(a, structure).value
    r = spectral_radius(a)
    n = operator_norm(a)
    slack = tol * max(1.0, n)
    return r - slack <= mu <= n + slack


def rigidity_check(structure: Structure, u, v,
                   tol: float = 1e-6) -> Optional[Matrix2]:
    """Least-norm A in the structure with A u = v, if its norm is <= 1 + tol.

    u and v must be unit vectors.  The minimum is always >= 1; a returned
    matrix therefore has norm 1 up to tol.  None when the affine set is empty
    or the minimum exceeds 1 + tol.
    """
    uu = tuple(complex(t) for t in u)
    vv = tuple(complex(t) for t in v)
    if len(uu) != 2 or len(vv) != 2:
        raise PreconditionViolation("u, v must be 2-vectors")
    if abs(math.sqrt(abs(uu[0]) ** 2 + abs(uu[1]) ** 2) - 1.0) > 1e-12:
        raise PreconditionViolation(f"u is not a unit vector: {u!r}")
    if abs(math.sqrt(abs(vv[0]) ** 2 + abs(vv[1]) ** 2) - 1.0) > 1e-12:
        raise PreconditionViolation(f"v is not a unit vector: {v!r}")
    m = np.stack([np.array(b.apply(uu), dtype=complex) for b in structure.basis],
                 axis=1)
    rhs = np.array(vv, dtype=complex)
    try:
        norm, c = _min_norm_on_affine(structure, m, rhs, starts=10,
                                      rng=random.Random(_SEED_STARTS))
    except InfeasibleConstraint:
        return None
    if norm > 1.0 + tol:
        return None
    return structure.element(c)


def _cp1_grid(n: int, offset: float = 0.0):
    """n representative unit vectors in C^2, Fibonacci-spread over CP^1."""
    pts = []
    golden = (math.sqrt(5.0) - 1.0) / 2.0
    for i in range(n):
        phi = math.acos(math.sqrt((i + 0.5) / n))
        psi = 2.0 * math.pi * ((i * golden + offset) % 1.0)
        pts.append(_w_of(phi, psi))
    return pts


def rigidity_grid_pass(structure: Structure, n_side: int = 20,
                       tol: float = 1e-6) -> bool:
    """rigidity_check over an n x n grid of unit-vector pairs; True iff every
    pair admits a norm-one mapper."""
    us = _cp1_grid(n_side)
    vs = _cp1_grid(n_side, offset=0.37)
    for uu in us:
        for vv in vs:
            if rigidity_check(structure, uu, vv, tol) is None:
                return False
    return True


def _random_matrix(rng: random.Random, scale: float) -> Matrix2:
    return Matrix2(*(complex(rng.gauss(0, 1), rng.gauss(0, 1)) * scale
                     for _ in range(4)))


def mu_equals_norm_suite(structure: Structure, n_samples: int = 100,
                         seed: int = 7, tol: float = 1e-5):
    """Sample matrices over mixed scales and compare mu against the operator
    norm; also spot-check the unit-sphere mapping property on random vector
    pairs.  Returns a SuiteReport whose failures list is empty exactly when
    the structure is rigid on the sample."""
    from .verify import SuiteReport  # local import to avoid a module cycle

    t0 = time.perf_counter()
    rng = random.Random(seed)
    failures: list[str] = []
    samples: list[Matrix2] = [E12, E21]
    while len(samples) < n_samples:
        samples.append(_random_matrix(rng, 10.0 ** rng.uniform(-2.0, 2.0)))
    for i, a in enumerate(samples[:n_samples]):
        norm = operator_norm(a)
        mu = mu_value(a, structure).value
        if abs(mu - norm) > tol * max(norm, 1e-12):
            failures.append(
                f"kind=mu_vs_norm index={i} a={a!r} mu={mu:.17g} "
                f"norm={norm:.17g}")
    n_pairs = max(4, min(25, n_samples // 4))
    for j in range(n_pairs):
        uu = _unit_vector(rng)
        vv = _unit_vector(rng)
        if rigidity_check(structure, uu, vv, max(tol, 1e-6)) is None:
            failures.append(
                f"kind=rigidity index={j} u=({uu[0]:.17g},{uu[1]:.17g}) "
                f"v=({vv[0]:.17g},{vv[1]:.17g}) result=absent")
    return SuiteReport(
        suite=f"mu_equals_norm[{structure.name or 'anon'}]",
        n_samples=n_samples, seed=seed, tol=tol, failures=tuple(failures),
        band_excluded=0, elapsed=time.perf_counter() - t0)


def _unit_vector(rng: random.Random):
    g = [complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(2)]
    n = math.sqrt(sum(abs(t) ** 2 for t in g))
    while n < 1e-6:
        g = [complex(rng.gauss(0, 1), rng.gauss(0, 1)) for _ in range(2)]
        n = math.sqrt(sum(abs(t) ** 2 for t in g))
    return (g[0] / n, g[1] / n)


def f_mu_membership(pt, structure: Structure, tol: float = 1e-6) -> bool:
    """Whether pt lies in the image of the open mu-unit-ball under the
    four-coordinate projection: the fiber over pt is {B, B^t} for the
    reconstructed witness B, so membership is mu(B) < 1 or mu(B^t) < 1."""
    from .domain_f import f_matrix_witness  # local import: domain_f is a peer

    b = f_matrix_witness(pt)
    if mu_value(b, structure).value < 1.0 - tol:
        return True
    return mu_value(b.transpose(), structure).value < 1.0 - tol


@dataclass(frozen=True)
class SubspaceVerdict:
    kind: str  # "IsETheta" | "NotETheta"
    theta: Optional[float] = None

    def __post_init__(self) -> None:
        if self.kind not in ("IsETheta", "NotETheta"):
            raise PreconditionViolation(f"bad kind {self.kind!r}")
        if (self.kind == "IsETheta") != (self.theta is not None):
            raise PreconditionViolation("theta present iff IsETheta")


def classify_subspace(structure: Structure, tol: float = 1e-9) -> SubspaceVerdict:
    """Decide whether a 3-dimensional structure containing both diagonal
    cells is the twisted off-diagonal family, and recover its angle.

    Reduces the basis modulo the diagonal cells to one off-diagonal generator
    [[0, alpha], [beta, 0]] and tests |alpha| = |beta| != 0; the angle is
    arg(beta/alpha), normalized into [0, 2 pi).
    """
    if structure.k != 3:
        raise PreconditionViolation(
            f"need a 3-dimensional structure, got k={structure.k}")
    if structure.coeffs_of(E11) is None or structure.coeffs_of(E22) is None:
        raise PreconditionViolation(
            "structure does not contain both diagonal cells")
    off = np.stack([[b.a12, b.a21] for b in structure.basis]).astype(complex)
    u, s, vh = np.linalg.svd(off)
    scale = max(float(s[0]), 1e-300)
    if s[0] <= 1e-12:
        return SubspaceVerdict(kind="NotETheta")
    if len(s) > 1 and s[1] > 1e-9 * scale:
        raise PreconditionViolation(
            "off-diagonal part is not one-dimensional; basis invariant broken")
    alpha, beta = vh[0, 0], vh[0, 1]
    if abs(alpha) <= tol or abs(beta) <= tol:
        return SubspaceVerdict(kind="NotETheta")
    if abs(abs(alpha) - abs(beta)) > tol:
        return SubspaceVerdict(kind="NotETheta")
    theta = cmath.phase(beta / alpha) % (2.0 * math.pi)
    return SubspaceVerdict(kind="IsETheta", theta=theta)
