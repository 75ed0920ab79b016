import itertools

import pytest
from conftest import chain3, small_algebras, vee
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from hilbext import bits
from hilbext.algebra import (
    SIG_HIL,
    SIG_HIL0,
    SIG_IS,
    FiniteHilbertAlgebra,
    FinitePoset,
    Homomorphism,
    UnaryMap,
    check_axioms,
    check_homomorphism,
    enumerate_algebras,
    enumerate_homomorphisms,
    enumerate_implicative_semilattices,
    enumerate_posets,
    join_table,
    natural_order,
    with_meet,
)
from hilbext.errors import AxiomViolation, GuardExceeded, MalformedTableError, PreconditionError

HILBERT_COUNTS = {1: 1, 2: 1, 3: 2, 4: 6, 5: 21}
BOUNDED_COUNTS = {1: 1, 2: 1, 3: 1, 4: 3, 5: 8}
POSET_COUNTS = {0: 1, 1: 1, 2: 2, 3: 5, 4: 16, 5: 63}


def test_chain_passes_bounded_class(H3):
    assert check_axioms(H3, "bounded_hilbert").ok
    assert check_axioms(H3, "hilbert").ok


def test_h2_is_hilbert():
    H2 = FiniteHilbertAlgebra(((1, 1), (0, 1)), 1)
    assert check_axioms(H2).ok


def test_broken_table_reports_h1():
    bad = FiniteHilbertAlgebra(((1, 0), (0, 1)), 1)
    report = check_axioms(bad)
    assert not report.ok
    assert "H1" in report.axioms_failed()


def test_zero_is_never_inferred(H3):
    report = check_axioms(H3.without_zero(), "bounded_hilbert")
    assert report.axioms_failed() == ["zero-declared"]


def test_meet_required_for_is(H3):
    assert check_axioms(H3, "is").axioms_failed() == ["meet-declared"]
    assert check_axioms(with_meet(H3), "bounded_is").ok


def test_wrong_meet_is_caught(H3):
    meet = ((0, 0, 0), (0, 1, 1), (0, 1, 1))
    report = check_axioms(FiniteHilbertAlgebra(H3.imp, 2, 0, meet), "is")
    assert "SL-order" in report.axioms_failed()


def test_heyting_upsets_class():
    H = with_meet(chain3())
    assert check_axioms(H, "heyting_upsets").ok
    assert with_meet(vee()) is None
    assert check_axioms(H.without_zero(), "heyting_upsets").axioms_failed() == ["zero-declared"]


def test_out_of_range_cell_is_malformed():
    with pytest.raises(MalformedTableError):
        FiniteHilbertAlgebra(((1, 1), (5, 1)), 1)
    with pytest.raises(MalformedTableError):
        FiniteHilbertAlgebra(((1, 1),), 0)
    with pytest.raises(MalformedTableError):
        FiniteHilbertAlgebra(((1, 1), (0, 1)), 2)


def test_natural_order_of_chain(H3):
    P = natural_order(H3)
    assert P.leq == ((True, True, True), (False, True, True), (False, False, True))
    assert P.maximum() == 2 and P.minimum() == 0


def test_natural_order_rejects_non_hilbert():
    with pytest.raises(AxiomViolation):
        natural_order(FiniteHilbertAlgebra(((1, 0), (0, 1)), 1))


def test_poset_validation():
    with pytest.raises(AxiomViolation):
        FinitePoset(((True, True), (True, True)))
    with pytest.raises(AxiomViolation):
        FinitePoset(((False,),))
    with pytest.raises(AxiomViolation):
        FinitePoset.from_pairs(2, [(0, 1), (1, 0)])
    assert FinitePoset.from_pairs(3, []).leq == FinitePoset.antichain(3).leq
    assert FinitePoset.from_pairs(3, [(0, 1), (1, 2)]).leq == FinitePoset.chain(3).leq


@pytest.mark.parametrize("n", sorted(POSET_COUNTS))
def test_poset_counts(n):
    assert len(enumerate_posets(n)) == POSET_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 6))
def test_algebra_counts(n):
    assert len(list(enumerate_algebras(n))) == HILBERT_COUNTS[n]
    assert len(list(enumerate_algebras(n, "bounded_hilbert"))) == BOUNDED_COUNTS[n]


@pytest.mark.parametrize("n", range(1, 5))
def test_enumeration_matches_table_scan(n):
    ours = {oracles.table_canon(H.imp, H.one) for H in enumerate_algebras(n)}
    assert ours == set(oracles.hilbert_tables_brute(n))


@pytest.mark.parametrize("n", range(1, 6))
def test_enumeration_matches_upset_families(n):
    ours = {oracles.table_canon(H.imp, H.one) for H in enumerate_algebras(n)}
    assert ours == set(oracles.hilbert_tables_by_upsets(n))


def test_representatives_are_canonical_and_valid():
    for H in small_algebras(5):
        assert check_axioms(H).ok
        assert H.one == 0
        assert H.canonical() == H


def test_enumeration_is_deterministic():
    a = [H.imp for H in enumerate_algebras(5)]
    b = [H.imp for H in enumerate_algebras(5)]
    assert a == b
    keys = [H.canonical_key()[0] for H in enumerate_algebras(5)]
    assert keys == sorted(keys)


def test_size_guard(monkeypatch):
    monkeypatch.setenv("HILBEXT_MAX_SIZE", "3")
    with pytest.raises(GuardExceeded):
        list(enumerate_algebras(4))
    assert len(list(enumerate_algebras(4, max_size=4))) == 6


def test_implicative_semilattice_counts():
    # finite implicative semilattices are the finite distributive lattices
    counts = [len(list(enumerate_implicative_semilattices(n))) for n in range(1, 6)]
    assert counts == [1, 1, 1, 2, 3]
    for A in enumerate_implicative_semilattices(4):
        assert check_axioms(A, "is").ok


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(small_algebras(5)), st.data())
def test_relabel_preserves_axioms_and_key(H, data):
    perm = data.draw(st.permutations(range(H.n)))
    G = H.relabel(perm)
    assert check_axioms(G).ok
    assert G.canonical_key()[0] == H.canonical_key()[0]
    assert G.canonical() == H


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(small_algebras(5)))
def test_natural_order_laws(H):
    R = range(H.n)
    for a, b in itertools.product(R, repeat=2):
        assert H.leq(a, H.imp[b][a])
        assert H.leq(a, H.imp[H.imp[a][b]][b])
    assert natural_order(H).maximum() == H.one


def test_join_table_exists_for_chain(H3):
    assert join_table(H3) == ((0, 1, 2), (1, 1, 2), (2, 2, 2))
    assert join_table(vee()) == ((0, 2, 2), (2, 1, 2), (2, 2, 2))


def test_homomorphism_checks(H3):
    H2 = FiniteHilbertAlgebra(((1, 1), (0, 1)), 1, 0)
    assert check_homomorphism(Homomorphism(H2, H3, (0, 2), SIG_HIL))
    assert check_homomorphism(Homomorphism(H2, H3, (1, 2), SIG_HIL))
    assert not check_homomorphism(Homomorphism(H2, H3, (1, 2), SIG_HIL0))
    assert not check_homomorphism(Homomorphism(H3, H2, (0, 0, 1), SIG_HIL))
    with pytest.raises(PreconditionError):
        check_homomorphism(Homomorphism(H2, H3, (0,), SIG_HIL))
    with pytest.raises(PreconditionError):
        check_homomorphism(Homomorphism(H2, H3, (0, 2), SIG_IS))


def test_enumerated_homs_match_filtered_scan():
    algs = small_algebras(3) + [vee()]
    for H, K in itertools.product(algs, repeat=2):
        scan = [
            m for m in itertools.product(range(K.n), repeat=H.n) if check_homomorphism(Homomorphism(H, K, m, SIG_HIL))
        ]
        assert [h.map for h in enumerate_homomorphisms(H, K)] == scan


def test_hom_guard(H3):
    with pytest.raises(GuardExceeded):
        enumerate_homomorphisms(H3, H3, max_maps=10)


def test_composition_of_homs(H3):
    H2 = FiniteHilbertAlgebra(((1, 1), (0, 1)), 1, 0)
    f = Homomorphism(H2, H3, (0, 2))
    g = Homomorphism(H3, H2, (0, 1, 1))
    assert check_homomorphism(g)
    assert f.then(g).map == (0, 1)


def test_unary_map_validation():
    assert UnaryMap((0, 1)).validate(2) == UnaryMap((0, 1))
    with pytest.raises(MalformedTableError):
        UnaryMap((0, 3)).validate(2)
    with pytest.raises(MalformedTableError):
        UnaryMap((0,)).validate(2)


def test_bits_helpers():
    m = bits.from_iter([0, 2, 5])
    assert bits.members(m) == [0, 2, 5]
    assert bits.popcount(m) == 3
    assert sorted([3, 4, 1, 8], key=bits.subset_key) == [1, 4, 8, 3]
    assert bits.fmt(m, "abcdef") == "{a,c,f}"
