"""Axiom batteries over the whole corpus, plus detection of broken inputs."""

import pytest

from itertools import combinations

from matroid_forge import properties
from matroid_forge.matroid import Matroid, contract, simplify, truncation
from matroid_forge.minors import fano_matroid, non_fano_matroid


def uniform(rank, n):
    return Matroid.from_bases(n, combinations(range(n), rank))


@pytest.fixture(scope="module")
def small_corpus(rank4_matroid):
    simple, _ = simplify(contract(rank4_matroid, (6,)))
    return [fano_matroid(), non_fano_matroid(), uniform(2, 4),
            uniform(3, 3), simple]


def test_closure_axioms_exhaustive(small_corpus):
    for m in small_corpus:
        assert properties.closure_axiom_failures(m) == []


def test_rank_axioms_exhaustive(small_corpus):
    for m in small_corpus:
        assert properties.rank_axiom_failures(m) == []


def test_axioms_sampled_on_large(rank3_matroid, rank4_matroid):
    for m in (rank3_matroid, rank4_matroid):
        assert properties.closure_axiom_failures(m, samples=500) == []
        assert properties.rank_axiom_failures(m, samples=2000) == []


def test_exchange_exhaustive(small_corpus, rank3_matroid, rank4_matroid):
    for m in small_corpus + [rank3_matroid, rank4_matroid]:
        assert properties.exchange_failures(m) == []


def test_exchange_detects_non_matroid():
    fake = Matroid(4, 2, [0b0011, 0b1100], _validated=True)
    assert properties.exchange_failures(fake) != []


def test_closure_detects_non_matroid():
    fake = Matroid(4, 2, [0b0011, 0b1100], _validated=True)
    assert properties.closure_axiom_failures(fake) != []


def test_minor_commutation(rank3_matroid):
    assert properties.minor_commutation_failures(fano_matroid()) == []
    assert properties.minor_commutation_failures(rank3_matroid) == []


def test_erection_family_properties(erection_family):
    assert properties.erection_family_failures(erection_family) == []


def test_formalization_quotient_for_all_matrices(
        realization, formal_matrix, informal_matrix, fano_gf2, fano_gf3):
    for a in (realization, formal_matrix, informal_matrix, fano_gf2, fano_gf3):
        assert properties.formalization_quotient_failures(a) == []


def test_quotient_order(rank3_matroid, rank4_matroid):
    chain = [truncation(rank3_matroid), rank3_matroid, rank4_matroid]
    assert properties.quotient_order_failures(chain) == []
