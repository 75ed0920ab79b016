import itertools

import pytest
from conftest import small_algebras
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbext import bits
from hilbext.algebra import SIG_HIL, enumerate_homomorphisms
from hilbext.errors import GuardExceeded, PreconditionError
from hilbext.filters import (
    all_filters,
    generate_filter,
    generate_filter_by_chains,
    is_filter,
    is_irreducible,
    is_irreducible_by_upper_bounds,
    is_order_ideal,
    preimage,
    principal_filter,
    separate,
    separate_element,
    spectrum,
)

ALGS = small_algebras(4)
ALGS5 = small_algebras(5)


def test_chain_filters(H3):
    assert all_filters(H3) == (0b100, 0b110, 0b111)
    X = spectrum(H3)
    assert X.filters == (0b100, 0b110)
    assert X.order.hasse_edges() == [(0, 1)]


def test_vee_filters(Hp):
    assert all_filters(Hp) == (0b100, 0b101, 0b110, 0b111)
    X = spectrum(Hp)
    assert X.filters == (0b101, 0b110)
    assert X.order.hasse_edges() == []


def test_generate_from_element(H3, Hp):
    assert generate_filter(H3, 0b010) == 0b110
    assert generate_filter(H3, 0b001) == 0b111
    assert generate_filter(Hp, 0b011) == 0b111
    assert generate_filter(Hp, 0) == 0b100


def test_whole_algebra_is_not_irreducible(H3):
    assert not is_irreducible(H3, H3.full)
    assert not is_irreducible_by_upper_bounds(H3, H3.full)


def test_non_filter_rejected(H3):
    assert not is_filter(H3, 0b010)
    with pytest.raises(PreconditionError):
        is_irreducible(H3, 0b010)


def test_filter_scan_guard(monkeypatch, H3):
    all_filters.cache_clear()
    monkeypatch.setenv("HILBEXT_MAX_FILTER_SCAN", "2")
    with pytest.raises(GuardExceeded):
        all_filters(H3)
    all_filters.cache_clear()


def test_order_ideals(H3, Hp):
    assert is_order_ideal(H3, 0b011)
    assert not is_order_ideal(H3, 0b010)
    assert not is_order_ideal(H3, 0)
    # x and y have no upper bound inside {x, y}
    assert not is_order_ideal(Hp, 0b011)


def test_separate(H3, Hp):
    assert separate(H3, 0b100, 0b011) == 0b100
    assert separate(H3, 0b100, 0b001) == 0b100
    assert separate_element(H3, 0b100, 0) == 0b100
    assert separate_element(H3, 0b110, 0) == 0b110
    assert separate_element(Hp, 0b100, 0) == 0b110


def test_separate_preconditions(H3):
    with pytest.raises(PreconditionError):
        separate(H3, 0b100, 0)
    with pytest.raises(PreconditionError):
        separate(H3, 0b010, 0b001)
    with pytest.raises(PreconditionError):
        separate(H3, 0b110, 0b011)
    with pytest.raises(PreconditionError):
        separate_element(H3, 0b110, 1)


@pytest.mark.parametrize("H", ALGS5, ids=lambda H: str(H.imp))
def test_generation_routes_agree(H):
    fils = all_filters(H)
    for X in range(1 << H.n):
        F = generate_filter(H, X)
        assert is_filter(H, F)
        assert F == generate_filter_by_chains(H, X)
        assert F == min((G for G in fils if G & X == X), key=bits.popcount)


@pytest.mark.parametrize("H", ALGS5, ids=lambda H: str(H.imp))
def test_irreducibility_routes_agree(H):
    for F in all_filters(H):
        assert is_irreducible(H, F) == is_irreducible_by_upper_bounds(H, F)


@pytest.mark.parametrize("H", ALGS5, ids=lambda H: str(H.imp))
def test_separation_for_every_ideal(H):
    for F in all_filters(H):
        for I in range(1, 1 << H.n):
            if is_order_ideal(H, I) and not F & I:
                P = separate(H, F, I)
                assert P in spectrum(H).filters and P & F == F and not P & I


def test_principal_filter(H3):
    assert principal_filter(H3, 1) == 0b110
    assert is_filter(H3, principal_filter(H3, 0))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(ALGS), st.sampled_from(ALGS), st.data())
def test_preimage_of_filter_is_filter(H, K, data):
    homs = enumerate_homomorphisms(H, K, SIG_HIL)
    h = data.draw(st.sampled_from(homs))
    F = data.draw(st.sampled_from(all_filters(K)))
    assert is_filter(H, preimage(h.map, F))


@settings(max_examples=80, deadline=None)
@given(st.sampled_from(ALGS5), st.data())
def test_filters_closed_under_intersection(H, data):
    fils = all_filters(H)
    F, G = data.draw(st.sampled_from(fils)), data.draw(st.sampled_from(fils))
    assert F & G in fils


def test_spectrum_is_an_inclusion_order():
    for H in ALGS5:
        X = spectrum(H)
        for i, j in itertools.product(range(X.size), repeat=2):
            assert X.order.leq[i][j] == (X.filters[i] & X.filters[j] == X.filters[i])
