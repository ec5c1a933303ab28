import cmath
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from mublocks.errors import PreconditionViolation
from mublocks.matrix2 import Matrix2, contraction_from_rng, operator_norm
from mublocks.tetrablock import (be_point, be_test, pi_tetra, tetra_classify,
                                 tetra_margins)
from mublocks.verdict import Region
from oracles import tetra_closure_oracle

finite = st.floats(min_value=-2.0, max_value=2.0,
                   allow_nan=False, allow_infinity=False)
cplx = st.builds(complex, finite, finite)


@given(cplx, cplx, cplx)
@settings(max_examples=500, deadline=None)
def test_two_criteria_agree_in_sign(x1, x2, x3):
    """Both published criteria must call the strict interior identically."""
    ca, cb = tetra_margins(x1, x2, x3)
    if min(abs(ca), abs(cb)) <= 1e-9:
        return
    assert (ca > 0) == (cb > 0)


def test_images_of_contractions_are_interior():
    rng = random.Random(2)
    for _ in range(400):
        a = contraction_from_rng(rng)
        v = tetra_classify(pi_tetra(a))
        if v.margin <= 10 * v.tol:
            continue
        assert v.region is Region.INTERIOR


def test_completion_oracle_agreement():
    """Spot-check against the independent min-norm-completion search (slow,
    so few points; volume coverage lives in the verification suites)."""
    rng = random.Random(31)
    done = 0
    while done < 20:
        x = (complex(rng.gauss(0, .5), rng.gauss(0, .5)),
             complex(rng.gauss(0, .5), rng.gauss(0, .5)),
             complex(rng.gauss(0, .5), rng.gauss(0, .5)))
        v = tetra_classify(x)
        if abs(v.margin) < 2e-2:
            continue
        assert tetra_closure_oracle(*x, tol=1e-3) == v.region.value
        done += 1


def test_outside_guard_when_quadratic_flips():
    """(0, 0, x3) with |x3| >= 1 must classify outside: the quadratic slack
    1 - |x1|^2 - |x2|^2 + |x3|^2 - 2|x1 x2 - x3| alone turns positive again
    for large |x3| and needs the |x3| < 1 leg."""
    assert tetra_classify((0, 0, 2)).region is Region.OUTSIDE
    assert tetra_classify((0, 0, 1.0001)).region is Region.OUTSIDE
    assert tetra_classify((0, 0, -3j)).region is Region.OUTSIDE
    # the crash point found by randomized search: enormous coordinates
    pt = (5.057690747681 - 2.482245477j, -1.763569 + 7.043163j, 130.729 - 39.147j)
    v = tetra_classify(pt)
    assert v.region is Region.OUTSIDE
    assert v.margin < -100


def test_known_points():
    assert tetra_classify((0, 0, 0)).region is Region.INTERIOR
    assert tetra_classify((0, 7 / 8, 0)).region is Region.INTERIOR
    assert tetra_classify((1, 1, 1)).region is Region.CLOSURE_BOUNDARY
    assert tetra_classify((0.5, 0.5, 0.25)).region is Region.INTERIOR
    assert tetra_classify((1.2, 0, 0)).region is Region.OUTSIDE


@given(st.floats(0, 1), st.floats(0, 2 * math.pi), st.floats(0, 2 * math.pi))
@settings(max_examples=200, deadline=None)
def test_distinguished_boundary_parametrization(r2, ph2, ph3):
    x2 = cmath.rect(r2, ph2)
    x3 = cmath.rect(1.0, ph3)
    pt = be_point(x2, x3)
    assert be_test(pt, 1e-9)
    assert pt[0] == (x2.conjugate() * x3)
    v = tetra_classify(pt)
    assert v.region is Region.CLOSURE_BOUNDARY


def test_be_test_requires_all_three_conditions():
    assert not be_test((0, 0, 0), 1e-9)            # interior point
    assert be_test((0, 0, 1), 1e-9)                # x2 = 0 on the circle
    # x1 = conj(x2) x3 fails:
    assert not be_test((0.5, 0.1, 1), 1e-9)
    # |x3| != 1 fails:
    assert not be_test((0.05, 0.1, 0.5), 1e-9)
    # |x2| > 1 fails even with the first two satisfied:
    x2, x3 = 1.5, 1.0
    assert not be_test((x2 * x3, x2, x3), 1e-9)


def test_be_point_precondition():
    with pytest.raises(PreconditionViolation):
        be_point(1.5, 1.0)
    with pytest.raises(PreconditionViolation):
        be_point(0.5, 0.9)


def test_dimension_check():
    with pytest.raises(PreconditionViolation):
        tetra_classify((1, 2))
