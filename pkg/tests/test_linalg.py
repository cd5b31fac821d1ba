"""Exact linear algebra, formality analysis, characteristic polynomials."""

import pytest

from fractions import Fraction
from itertools import combinations

from matroid_forge.charpoly import (
    IntPolynomial,
    characteristic_polynomial,
    splits_over_integers,
)
from matroid_forge.errors import GroundSetMismatch, ValidationError, ZeroFunctional
from matroid_forge.linalg import (
    ExactMatrix,
    PrimeField,
    Rationals,
    RelationSpace,
    column_matroid,
    formalization,
    is_formal,
    kernel_basis,
    realizes,
    weight3_subspace,
)
from matroid_forge.matroid import Matroid, delete
from matroid_forge.minors import fano_matroid, non_fano_matroid


def uniform(rank, n):
    return Matroid.from_bases(n, combinations(range(n), rank))


# -- fields -------------------------------------------------------------------

def test_rationals_parse_and_reduce():
    q = Rationals()
    assert q.parse("3/6") == Fraction(1, 2)
    assert q.parse("-4") == Fraction(-4)
    assert q.add(q.parse("1/3"), q.parse("1/6")) == Fraction(1, 2)


def test_prime_field_arithmetic():
    gf5 = PrimeField(5)
    assert gf5.mul(2, 3) == 1
    assert gf5.inv(2) == 3
    assert gf5.parse("-1") == 4
    assert gf5.parse("1/2") == 3


def test_non_prime_field_rejected():
    with pytest.raises(ValueError):
        PrimeField(4)
    with pytest.raises(ValueError):
        PrimeField(1)


def test_field_equality():
    assert PrimeField(5) == PrimeField(5)
    assert PrimeField(5) != PrimeField(7)
    assert Rationals() == Rationals()


# -- matrices and kernels ------------------------------------------------------

def test_rref_and_rank():
    a = ExactMatrix.build(Rationals(), [[1, 2, 3], [2, 4, 6], [1, 0, 1]])
    assert a.rank() == 2
    reduced, pivots = a.rref()
    assert pivots == (0, 1)
    assert reduced.entries[0][0] == 1


def test_kernel_basis_small():
    a = ExactMatrix.build(Rationals(), [[1, 0, 1], [0, 1, 1]])
    ker = kernel_basis(a)
    assert ker.dim == 1
    assert ker.contains((Fraction(-2), Fraction(-2), Fraction(2)))
    assert not ker.contains((Fraction(1), Fraction(0), Fraction(0)))


def test_perp_is_involutive():
    space = RelationSpace.from_vectors(Rationals(), 3, [[1, 1, 0]])
    perp = space.perp()
    assert perp.dim == 2
    assert perp.perp().vectors == space.vectors


def test_zero_matrix_kernel_is_everything():
    a = ExactMatrix.build(Rationals(), [[0, 0, 0]])
    assert kernel_basis(a).dim == 3


# -- column matroids -----------------------------------------------------------

def test_fano_only_in_characteristic_two(fano_gf2, fano_gf3):
    assert column_matroid(fano_gf2) == fano_matroid()
    assert column_matroid(fano_gf3) == non_fano_matroid()


def test_rational_fano_columns_relax(fano_gf2):
    rational = ExactMatrix.build(
        Rationals(), [[int(x) for x in row] for row in fano_gf2.entries])
    assert column_matroid(rational) == non_fano_matroid()


def test_realizes_bundled(realization, rank3_matroid):
    assert realizes(realization, rank3_matroid)
    assert not realizes(realization, uniform(3, 13))


def test_realizes_checks_ground_set(realization):
    with pytest.raises(GroundSetMismatch):
        realizes(realization, uniform(2, 4))


# -- formality -----------------------------------------------------------------

def test_formal_pair(formal_matrix, informal_matrix):
    assert is_formal(formal_matrix)
    assert not is_formal(informal_matrix)
    assert weight3_subspace(informal_matrix).dim < kernel_basis(informal_matrix).dim


def test_formalization_ranks(formal_matrix, informal_matrix):
    assert formalization(formal_matrix).rank() == formal_matrix.rank() == 3
    assert formalization(informal_matrix).rank() == 4


def test_same_column_matroid_different_formality(
        formal_matrix, informal_matrix, rank3_matroid):
    from matroid_forge.matroid import are_isomorphic
    cm1 = column_matroid(formal_matrix)
    cm2 = column_matroid(informal_matrix)
    nine = delete(rank3_matroid, (9, 10, 11, 12))
    assert are_isomorphic(cm1, cm2) is not None
    assert are_isomorphic(cm1, nine) is not None


def test_weight3_contained_in_kernel(realization):
    assert weight3_subspace(realization).is_subspace_of(kernel_basis(realization))


def test_zero_column_rejected():
    a = ExactMatrix.build(Rationals(), [[1, 0], [0, 0]])
    with pytest.raises(ZeroFunctional):
        formalization(a)


# -- polynomials ----------------------------------------------------------------

def test_polynomial_text():
    p = IntPolynomial((-51, 63, -13, 1))
    assert str(p) == "t^3 - 13*t^2 + 63*t - 51"
    assert str(IntPolynomial((7,))) == "7"
    assert p.degree == 3 and p.is_monic
    assert p.coefficient(2) == -13 and p.coefficient(9) == 0


def test_polynomial_division():
    p = IntPolynomial((-8, 14, -7, 1))  # (t-1)(t-2)(t-4)
    quotient, remainder = p.divide_by_root(1)
    assert remainder == 0
    assert quotient.evaluate(2) == 0


def test_charpoly_of_plane_splits():
    chi = characteristic_polynomial(fano_matroid())
    assert chi.coeffs == (-8, 14, -7, 1)
    assert splits_over_integers(chi) == (1, 2, 4)


def test_charpoly_of_relaxation_has_double_root():
    chi = characteristic_polynomial(non_fano_matroid())
    assert chi.coeffs == (-9, 15, -7, 1)
    assert splits_over_integers(chi) == (1, 3, 3)


def test_charpoly_of_line():
    chi = characteristic_polynomial(uniform(2, 4))
    assert chi.coeffs == (3, -4, 1)
    assert splits_over_integers(chi) == (1, 3)


def test_charpoly_no_integer_split(rank3_matroid):
    chi = characteristic_polynomial(rank3_matroid)
    assert str(chi) == "t^3 - 13*t^2 + 63*t - 51"
    assert splits_over_integers(chi) is None
    assert chi.evaluate(1) == 0


def test_charpoly_requires_simple():
    parallel = Matroid.from_bases(3, [(0, 1), (0, 2)])
    with pytest.raises(ValidationError):
        characteristic_polynomial(parallel)


def test_splits_requires_monic():
    with pytest.raises(ValidationError):
        splits_over_integers(IntPolynomial((1, 2)))
