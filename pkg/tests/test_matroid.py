"""Core matroid structure: construction, rank, closure, minors, maps."""

import pytest

from matroid_forge.errors import (
    EmptyGroundSet,
    FormatError,
    GroundSetMismatch,
    RankTooLow,
    ValidationError,
)
from matroid_forge.matroid import (
    Matroid,
    PointedMap,
    are_isomorphic,
    bases,
    closure_of,
    contract,
    delete,
    flats_at,
    is_quotient,
    is_weak_map_image,
    matroid_from_flats,
    rank_of,
    relabel,
    removal_map,
    simplify,
    truncation,
)
from matroid_forge.minors import fano_matroid, non_fano_matroid

from itertools import combinations


def uniform(rank, n):
    return Matroid.from_bases(n, combinations(range(n), rank))


# -- pointed maps -----------------------------------------------------------

def test_pointed_map_identity():
    pm = PointedMap.identity(4)
    assert pm.is_identity
    assert pm(2) == 2
    assert pm.apply_set([3, 0]) == (0, 3)


def test_pointed_map_rejects_repeats():
    with pytest.raises(ValidationError):
        PointedMap((0, 0, 1))


def test_removal_map_recovers_labels():
    back = removal_map(6, (1, 4))
    assert [back(i) for i in range(4)] == [0, 2, 3, 5]


# -- construction and validation -------------------------------------------

def test_empty_ground_set_rejected():
    with pytest.raises(EmptyGroundSet):
        Matroid(0, 0, [0])


def test_no_bases_rejected():
    with pytest.raises(ValidationError):
        Matroid(3, 2, [])


def test_mixed_cardinality_rejected():
    with pytest.raises(ValidationError):
        Matroid.from_bases(3, [(0,), (0, 1)])


def test_exchange_failure_rejected():
    # two disjoint pairs on four points fail basis exchange
    with pytest.raises(ValidationError):
        Matroid.from_bases(4, [(0, 1), (2, 3)])


def test_from_bases_infers_rank():
    m = uniform(2, 4)
    assert (m.n, m.rank) == (4, 2)
    assert len(m.basis_masks) == 6
    assert m.is_simple


# -- rank and closure on the seven-point plane ------------------------------

def test_fano_rank_and_closure():
    f = fano_matroid()
    assert f.rank == 3
    assert rank_of(f, (0, 1)) == 2
    assert closure_of(f, (0, 1)) == (0, 1, 5)
    assert rank_of(f, range(7)) == 3
    assert closure_of(f, ()) == ()


def test_fano_flats():
    f = fano_matroid()
    assert flats_at(f, 0) == ((),)
    assert flats_at(f, 1) == tuple((e,) for e in range(7))
    lines = flats_at(f, 2, min_size=3)
    assert len(lines) == 7
    assert (0, 1, 5) in lines
    assert flats_at(f, 3) == (tuple(range(7)),)


def test_bases_listing():
    f = fano_matroid()
    bs = bases(f)
    assert len(bs) == 28
    assert (0, 1, 2) in bs
    assert (0, 1, 5) not in bs


# -- deletion, contraction, simplification ----------------------------------

def test_delete_drops_lines():
    f = fano_matroid()
    d = delete(f, (6,))
    assert (d.n, d.rank) == (6, 3)
    # four of the seven lines avoid the deleted point
    assert len(d.basis_masks) == 20 - 4


def test_delete_everything_rejected():
    with pytest.raises(EmptyGroundSet):
        delete(uniform(2, 3), (0, 1, 2))


def test_contract_creates_parallel_pairs():
    f = fano_matroid()
    c = contract(f, (0,))
    assert (c.n, c.rank) == (6, 2)
    simple, pmap = simplify(c)
    assert simple.n == 3
    assert simple == uniform(2, 3)
    # the three lines through the contracted point collapse pairwise
    back = removal_map(7, (0,))
    classes = tuple(tuple(back(e) for e in cls) for cls in pmap.classes)
    assert classes == ((1, 5), (2, 4), (3, 6))


def test_simplify_of_simple_is_identity_map():
    f = fano_matroid()
    simple, pmap = simplify(f)
    assert simple == f
    assert pmap.is_identity


def test_truncation_of_plane_is_line():
    assert truncation(fano_matroid()) == uniform(2, 7)
    with pytest.raises(RankTooLow):
        truncation(uniform(1, 3))


# -- order relations ---------------------------------------------------------

def test_weak_map_and_quotient(rank3_matroid, rank4_matroid):
    assert is_weak_map_image(rank3_matroid, rank4_matroid)
    assert is_quotient(rank3_matroid, rank4_matroid)
    assert not is_weak_map_image(rank4_matroid, rank3_matroid)
    assert truncation(rank4_matroid) == rank3_matroid


def test_mismatched_ground_sets_rejected():
    with pytest.raises(GroundSetMismatch):
        is_weak_map_image(uniform(2, 4), uniform(2, 5))


# -- isomorphism -------------------------------------------------------------

def test_relabelled_plane_is_isomorphic():
    f = fano_matroid()
    perm = PointedMap((3, 1, 0, 2, 6, 4, 5))
    shuffled = relabel(f, perm)
    iso = are_isomorphic(f, shuffled)
    assert iso is not None
    assert relabel(f, iso) == shuffled


def test_equal_matroids_give_identity_iso():
    f = fano_matroid()
    iso = are_isomorphic(f, f)
    assert iso is not None and iso.is_identity


def test_plane_and_relaxation_not_isomorphic():
    assert are_isomorphic(fano_matroid(), non_fano_matroid()) is None


# -- construction from flats -------------------------------------------------

def test_flats_roundtrip_seven_lines():
    lines = flats_at(fano_matroid(), 2, min_size=3)
    rebuilt = matroid_from_flats(7, 3, [(2, L) for L in lines])
    assert rebuilt == fano_matroid()


def test_removed_line_relaxes_to_valid_matroid():
    # dropping one line from the seven-line plane's list just relaxes it
    lines = flats_at(fano_matroid(), 2, min_size=3)
    relaxed = matroid_from_flats(7, 3, [(2, L) for L in lines if L != (3, 4, 5)])
    assert relaxed == non_fano_matroid()


def test_missing_flat_detected(rank4_matroid):
    # dropping one plane from the rank-4 matroid's list breaks exchange
    spec = [(2, L) for L in flats_at(rank4_matroid, 2, min_size=3)]
    planes = flats_at(rank4_matroid, 3, min_size=4)
    spec += [(3, P) for P in planes[1:]]
    with pytest.raises(ValidationError):
        matroid_from_flats(13, 4, spec)


def test_overlapping_same_rank_flats_rejected():
    with pytest.raises(ValidationError):
        matroid_from_flats(5, 3, [(2, (0, 1, 2)), (2, (0, 1, 3))])


def test_out_of_range_flat_element_rejected():
    with pytest.raises(FormatError):
        matroid_from_flats(4, 3, [(2, (0, 1, 9))])


def test_free_matroid_from_no_flats():
    free = matroid_from_flats(4, 4, [])
    assert len(free.basis_masks) == 1
    assert free.rank == 4
