"""Arithmetic laws of the quaternion layer."""

import math
import random

import pytest

from quatflow import (
    BASIS,
    I,
    J,
    K,
    ONE,
    Quaternion,
    ReducedPoint,
    conjugate,
    cross,
    inner,
    multiply,
    norm,
    sc,
    vec,
)


def random_quaternion(rng, span=2.0):
    return Quaternion(rng.uniform(-span, span), rng.uniform(-span, span),
                      rng.uniform(-span, span), rng.uniform(-span, span))


def test_basis_multiplication_table():
    # ij = k and cyclic; squares of the imaginary units are -1.
    assert I * J == K
    assert J * K == I
    assert K * I == J
    assert J * I == -K
    assert K * J == -I
    assert I * K == -J
    assert I * I == -ONE
    assert J * J == -ONE
    assert K * K == -ONE
    for e in BASIS:
        assert ONE * e == e
        assert e * ONE == e


def test_product_components_against_expanded_formula():
    p = Quaternion(1.0, 2.0, 3.0, 4.0)
    q = Quaternion(-2.0, 0.5, 1.5, -1.0)
    r = p * q
    a0, a1, a2, a3 = p.as_tuple()
    b0, b1, b2, b3 = q.as_tuple()
    assert r.q0 == a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3
    assert r.q1 == a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2
    assert r.q2 == a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1
    assert r.q3 == a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0


def test_associativity_random_triples():
    rng = random.Random(20240301)
    for _ in range(500):
        p = random_quaternion(rng)
        q = random_quaternion(rng)
        r = random_quaternion(rng)
        left = (p * q) * r
        right = p * (q * r)
        scale = max(1.0, left.norm())
        assert (left - right).norm() <= 1e-12 * scale


def test_conjugate_reverses_products():
    rng = random.Random(77)
    for _ in range(200):
        p = random_quaternion(rng)
        q = random_quaternion(rng)
        lhs = (p * q).conjugate()
        rhs = q.conjugate() * p.conjugate()
        assert (lhs - rhs).norm() <= 1e-12 * max(1.0, lhs.norm())


def test_norm_is_multiplicative():
    rng = random.Random(4242)
    for _ in range(500):
        p = random_quaternion(rng)
        q = random_quaternion(rng)
        assert math.isclose((p * q).norm(), p.norm() * q.norm(),
                            rel_tol=1e-12, abs_tol=1e-300)


def test_norm_squared_equals_self_conjugate_product():
    q = Quaternion(0.3, -1.2, 0.7, 2.1)
    prod = q * q.conjugate()
    assert math.isclose(prod.q0, q.norm_sq(), rel_tol=1e-14)
    assert prod.vector_part().norm() <= 1e-14


def test_scalar_vector_split():
    q = Quaternion(1.5, -0.5, 2.0, 3.0)
    assert sc(q) == 1.5
    assert vec(q) == Quaternion(0.0, -0.5, 2.0, 3.0)
    assert q.scalar_part() + 0.0 == 1.5
    assert q == vec(q) + Quaternion(sc(q))


def test_inner_product_matches_component_sum():
    p = Quaternion(1.0, 2.0, 3.0, 4.0)
    q = Quaternion(0.5, -1.0, 0.25, 2.0)
    expected = 1.0 * 0.5 + 2.0 * -1.0 + 3.0 * 0.25 + 4.0 * 2.0
    assert inner(p, q) == expected
    assert math.isclose(inner(q, q), q.norm_sq(), rel_tol=1e-15)


def test_scalar_multiplication_and_division():
    q = Quaternion(1.0, -2.0, 0.5, 4.0)
    assert 2.0 * q == q * 2.0
    assert (q / 2.0) * 2.0 == q
    with pytest.raises(ZeroDivisionError):
        q / 0.0


def test_reduced_frame_sandwich_identity():
    # q + iqi + jqj = -conj(q) holds exactly when the k slot vanishes;
    # a nonzero k slot leaves a residual of 2 q3 k.
    rng = random.Random(9090)
    for _ in range(100):
        q = Quaternion(rng.uniform(-2, 2), rng.uniform(-2, 2),
                       rng.uniform(-2, 2), 0.0)
        total = q + I * q * I + J * q * J
        assert (total - (-q.conjugate())).norm() == 0.0
        assert q.is_reduced()
    full = Quaternion(1.0, 2.0, 3.0, 4.0)
    gap = (full + I * full * I + J * full * J) - (-full.conjugate())
    assert gap == Quaternion(0.0, 0.0, 0.0, 2.0 * full.q3)
    assert not full.is_reduced()


def test_reduced_point_round_trip():
    p = ReducedPoint(1.0, -2.5, 0.75)
    q = p.to_quaternion()
    assert q == Quaternion(1.0, -2.5, 0.75, 0.0)
    assert ReducedPoint.from_quaternion(q) == p
    assert q.to_point() == p
    with pytest.raises(ValueError):
        ReducedPoint.from_quaternion(Quaternion(0.0, 0.0, 0.0, 1.0))
    with pytest.raises(ValueError):
        Quaternion(0.0, 0.0, 0.0, 1.0).to_point(tol=1e-12)


def test_reduced_point_vector_operations():
    a = ReducedPoint(1.0, 0.0, 0.0)
    b = ReducedPoint(0.0, 1.0, 0.0)
    assert a.cross(b) == ReducedPoint(0.0, 0.0, 1.0)
    assert b.cross(a) == ReducedPoint(0.0, 0.0, -1.0)
    assert a.dot(b) == 0.0
    assert (a + b).norm() == math.sqrt(2.0)
    assert (a - b).norm_sq() == 2.0
    assert (a * 3.0).x == 3.0
    assert a.distance_to(b) == math.sqrt(2.0)


def test_cross_of_random_vectors_is_orthogonal():
    rng = random.Random(55)
    for _ in range(100):
        a = ReducedPoint(rng.uniform(-1, 1), rng.uniform(-1, 1),
                         rng.uniform(-1, 1))
        b = ReducedPoint(rng.uniform(-1, 1), rng.uniform(-1, 1),
                         rng.uniform(-1, 1))
        c = cross(a, b)
        assert abs(c.dot(a)) <= 1e-14
        assert abs(c.dot(b)) <= 1e-14


def test_module_level_helpers_match_methods():
    p = Quaternion(0.1, 0.2, 0.3, 0.4)
    q = Quaternion(-1.0, 0.5, 0.0, 2.0)
    assert multiply(p, q) == p * q
    assert conjugate(p) == p.conjugate()
    assert norm(p) == p.norm()


def test_repr_round_trips_through_eval():
    q = Quaternion(1.0, -2.0, 0.5, 0.0)
    assert eval(repr(q), {"Quaternion": Quaternion}) == q
    p = ReducedPoint(0.25, -1.0, 3.0)
    assert eval(repr(p), {"ReducedPoint": ReducedPoint}) == p


def test_quaternion_hash_consistent_with_equality():
    a = Quaternion(1.0, 2.0, 3.0, 4.0)
    b = Quaternion(1.0, 2.0, 3.0, 4.0)
    assert a == b
    assert hash(a) == hash(b)
    assert len({a, b}) == 1
