from fractions import Fraction

import pytest

from horncalc import rng as rngmod
from horncalc.errors import DomainError, ShapeError
from horncalc.fields import QQ, SQRT5, PrimeField, Sqrt5, field_from_tag, is_prime
from horncalc.matrices import (
    Mat,
    det,
    inverse,
    kernel_basis,
    random_invertible,
    random_matrix,
    rank,
    rref,
    solve_exact,
)


class TestPrimality:
    def test_small(self):
        assert [n for n in range(2, 30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]

    def test_default_modulus(self):
        assert is_prime(2147483647)

    def test_composites(self):
        for n in (0, 1, 4, 561, 2147483647 * 3, 2 ** 31):
            assert not is_prime(n)

    def test_carmichael(self):
        assert not is_prime(341550071728321)


def _field_axioms(field, rng, samples=50):
    for _ in range(samples):
        a, b, c = (field.random(rng) for _ in range(3))
        assert field.add(field.add(a, b), c) == field.add(a, field.add(b, c))
        assert field.mul(field.mul(a, b), c) == field.mul(a, field.mul(b, c))
        assert field.mul(a, field.add(b, c)) == field.add(field.mul(a, b), field.mul(a, c))
        assert field.add(a, field.neg(a)) == field.zero
        if not field.is_zero(b):
            assert field.mul(field.div(a, b), b) == a


def test_field_axioms_all_fields():
    rng = rngmod.spawn(1, 0)
    _field_axioms(QQ, rng)
    _field_axioms(PrimeField(7), rng)
    _field_axioms(PrimeField(2147483647), rng)
    _field_axioms(SQRT5, rng)


def test_division_by_zero_rejected():
    with pytest.raises(ZeroDivisionError):
        QQ.div(QQ.one, QQ.zero)
    with pytest.raises(ZeroDivisionError):
        PrimeField(5).div(1, 0)
    with pytest.raises(ZeroDivisionError):
        SQRT5.div(SQRT5.one, SQRT5.zero)


def test_nonprime_modulus_rejected():
    with pytest.raises(DomainError):
        PrimeField(10)


class TestSqrt5:
    def test_inverse_by_conjugate(self):
        x = Sqrt5(Fraction(3, 2), Fraction(-1, 3))
        assert x * x.inverse() == Sqrt5(1)

    def test_sqrt5_squares_to_five(self):
        s5 = Sqrt5(0, 1)
        assert s5 * s5 == Sqrt5(5)

    def test_parse_format_roundtrip(self):
        for text in ("3", "-2/7", "1+2*s5", "-1/2-3/4*s5", "0+1*s5"):
            x = SQRT5.parse(text)
            assert SQRT5.parse(SQRT5.format(x)) == x

    def test_parse_garbage(self):
        with pytest.raises(DomainError):
            SQRT5.parse("s5+1")


def test_field_tags_roundtrip():
    for field in (QQ, SQRT5, PrimeField(101)):
        assert field_from_tag(field.to_json_tag()) == field


class TestRankKernel:
    def test_identity(self):
        m = Mat.identity(QQ, 4)
        assert rank(m) == 4
        assert kernel_basis(m) == []

    def test_zero(self):
        m = Mat.zeros(QQ, 3, 5)
        assert rank(m) == 0
        assert len(kernel_basis(m)) == 5

    def test_rank_one(self):
        m = Mat.from_ints(QQ, [[1, 2], [2, 4]])
        assert rank(m) == 1
        (v,) = kernel_basis(m)
        # spanned by (2, -1) up to scale
        assert v[0] * Fraction(-1) == v[1] * Fraction(2)

    def test_kernel_is_annihilated(self):
        rng = rngmod.spawn(2, 0)
        for field in (QQ, PrimeField(101), SQRT5):
            for _ in range(10):
                m = random_matrix(field, 4, 6, rng)
                vecs = kernel_basis(m)
                assert len(vecs) == 6 - rank(m)
                for v in vecs:
                    assert all(field.is_zero(x) for x in m.mul_vec(v))

    def test_empty_shapes(self):
        m = Mat(QQ, [], ncols=3)
        assert rank(m) == 0 and len(kernel_basis(m)) == 3
        m2 = Mat(QQ, [[], []], ncols=0)
        assert rank(m2) == 0 and kernel_basis(m2) == []

    def test_prime_fast_path_matches_generic_path(self):
        # machine-integer elimination vs the field-method loop, same field
        from horncalc.matrices import _rref_generic, _rref_prime

        rng = rngmod.spawn(3, 0)
        p = 97
        pf = PrimeField(p)
        for _ in range(30):
            ints = [[rng.randrange(p) for _ in range(5)] for _ in range(4)]
            rows_fast, piv_fast = _rref_prime(ints, 5, p)
            rows_gen, piv_gen = _rref_generic(ints, 5, pf)
            assert piv_fast == piv_gen
            assert [[x % p for x in row] for row in rows_fast] == [
                [x % p for x in row] for row in rows_gen
            ]


class TestInverseDetSolve:
    def test_inverse(self):
        rng = rngmod.spawn(4, 0)
        for field in (QQ, PrimeField(13)):
            m = random_invertible(field, 4, rng)
            assert m.mul(inverse(m)) == Mat.identity(field, 4)

    def test_singular_inverse_raises(self):
        with pytest.raises(DomainError):
            inverse(Mat.from_ints(QQ, [[1, 2], [2, 4]]))

    def test_det_values(self):
        assert det(Mat.from_ints(QQ, [[2, 0], [0, 3]])) == 6
        assert det(Mat.from_ints(QQ, [[0, 1], [1, 0]])) == -1
        assert det(Mat.from_ints(QQ, [[1, 2], [2, 4]])) == 0
        assert det(Mat(QQ, [], ncols=0)) == 1

    def test_det_multiplicative(self):
        rng = rngmod.spawn(5, 0)
        a = random_matrix(QQ, 3, 3, rng)
        b = random_matrix(QQ, 3, 3, rng)
        assert det(a.mul(b)) == det(a) * det(b)

    def test_solve(self):
        a = Mat.from_ints(QQ, [[1, 0], [1, 1], [0, 2]])
        x = Mat.from_ints(QQ, [[3], [5]])
        b = a.mul(x)
        assert solve_exact(a, b) == x

    def test_solve_inconsistent(self):
        a = Mat.from_ints(QQ, [[1], [0]])
        b = Mat.from_ints(QQ, [[0], [1]])
        with pytest.raises(DomainError):
            solve_exact(a, b)


def test_shape_errors():
    a = Mat.from_ints(QQ, [[1, 2]])
    b = Mat.from_ints(QQ, [[1, 2], [3, 4]])
    with pytest.raises(ShapeError):
        a.mul(a)
    with pytest.raises(ShapeError):
        a.hstack(b)
    with pytest.raises(ShapeError):
        Mat(QQ, [], ncols=None)
