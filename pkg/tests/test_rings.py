"""Ring constructors, distinguished subsets, ideals, radicals, predicates."""

import pytest

from nilgraph.errors import CapExceeded
from nilgraph.rings import (element_sets, enumerate_ideals, find_isomorphism,
                            make_matrix_ring, make_product, make_quotient_poly,
                            make_zmod, radicals, ring_properties)


def naive_nilpotent(ring, a, max_power=None):
    """Independent oracle: a^k by plain repeated multiplication."""
    k_max = max_power or ring.order + 1
    p = a
    for _ in range(k_max):
        if p == 0:
            return True
        p = ring.mul(p, a)
    return p == 0


def labels(ring, xs):
    return sorted(ring.label_of(x) for x in xs)


# --- constructors -----------------------------------------------------------

def test_zmod_smallest_ring():
    z2 = make_zmod(2)
    assert z2.order == 2
    assert z2.add(1, 1) == 0


def test_zmod_tables():
    z4 = make_zmod(4)
    assert z4.mul_table[2][2] == 0
    z6 = make_zmod(6)
    assert z6.mul_table[2][3] == 0
    assert z6.mul_table[4][3] == 0


def test_zmod_rejects_bad_modulus():
    with pytest.raises(ValueError):
        make_zmod(1)
    with pytest.raises(CapExceeded) as err:
        make_zmod(1000)
    assert "ring order cap" in str(err.value)


def test_product_componentwise():
    p = make_product(make_zmod(2), make_zmod(2))
    assert p.order == 4
    a = p.element_by_label("(1,0)")
    b = p.element_by_label("(0,1)")
    assert p.mul(a, b) == p.zero
    assert p.label_of(p.one) == "(1,1)"
    assert p.zero == 0 and p.one == 1


def test_product_crt_isomorphism():
    # Oracle: exhaustive bijection search plus the additive generator check.
    p = make_product(make_zmod(2), make_zmod(3))
    z6 = make_zmod(6)
    assert find_isomorphism(p, z6) is not None
    one = p.element_by_label("(1,1)")
    acc, seen = one, {one}
    for _ in range(5):
        acc = p.add(acc, one)
        seen.add(acc)
    assert len(seen) == 6  # (1,1) generates the additive group


def test_product_nilpotents():
    p = make_product(make_zmod(4), make_zmod(2))
    sets = element_sets(p)
    assert labels(p, sets.nil) == ["(0,0)", "(2,0)"]
    for x in sets.nil:
        assert naive_nilpotent(p, x)


def test_matrix_ring_construction():
    m = make_matrix_ring(make_zmod(2), 2)
    assert m.order == 16
    assert m.label_of(m.one) == "[[1,0],[0,1]]"
    e12 = m.element_by_label("[[0,1],[0,0]]")
    e21 = m.element_by_label("[[0,0],[1,0]]")
    e11 = m.element_by_label("[[1,0],[0,0]]")
    e22 = m.element_by_label("[[0,0],[0,1]]")
    assert m.mul(e12, e21) == e11
    assert m.mul(e21, e12) == e22


def test_matrix_ring_nilpotents():
    m = make_matrix_ring(make_zmod(2), 2)
    sets = element_sets(m)
    expected = {"[[0,0],[0,0]]", "[[0,1],[0,0]]", "[[0,0],[1,0]]", "[[1,1],[1,1]]"}
    assert set(labels(m, sets.nil)) == expected
    for x in range(m.order):
        assert (x in sets.nil) == naive_nilpotent(m, x)


def test_matrix_ring_rejects_noncommutative_base():
    m = make_matrix_ring(make_zmod(2), 2)
    with pytest.raises(ValueError):
        make_matrix_ring(m, 2)


def test_quotient_poly_dual_numbers():
    r = make_quotient_poly(make_zmod(2), [0, 0, 1])
    assert r.order == 4
    t = r.element_by_label("t")
    assert r.mul(t, t) == 0
    assert labels(r, element_sets(r).nil) == ["0", "t"]


def test_quotient_poly_field():
    f4 = make_quotient_poly(make_zmod(2), [1, 1, 1])
    assert f4.order == 4
    sets = element_sets(f4)
    assert sets.units == frozenset({1, 2, 3})
    # Exhaustive inverse search: every nonzero element has an inverse.
    for a in range(1, 4):
        assert any(f4.mul(a, b) == 1 for b in range(4))


def test_quotient_poly_z3():
    r = make_quotient_poly(make_zmod(3), [0, 0, 1])
    assert r.order == 9
    assert labels(r, element_sets(r).nil) == ["0", "2t", "t"]


def test_quotient_poly_rejects_non_monic():
    with pytest.raises(ValueError):
        make_quotient_poly(make_zmod(4), [1, 2])
    with pytest.raises(ValueError):
        make_quotient_poly(make_zmod(2), [1])


# --- element sets -----------------------------------------------------------

def test_element_sets_z4():
    z4 = make_zmod(4)
    sets = element_sets(z4)
    assert sets.nil == frozenset({0, 2})
    assert sets.units == frozenset({1, 3})
    assert sets.zd_star == frozenset({2})
    assert sets.z_nil == frozenset({0, 1, 2, 3})


def test_element_sets_f2xf2():
    p = make_product(make_zmod(2), make_zmod(2))
    sets = element_sets(p)
    assert sets.nil == frozenset({0})
    assert labels(p, sets.zd_star) == ["(0,1)", "(1,0)"]
    assert sets.z_nil == sets.left_zd | sets.right_zd


def test_element_sets_z8():
    sets = element_sets(make_zmod(8))
    assert sets.nil == frozenset({0, 2, 4, 6})


def test_element_set_invariants(corpus, analyses):
    for entry in corpus:
        ring, sets = entry.ring, analyses[entry.name].sets
        assert 0 in sets.nil
        assert not (sets.nil & sets.units)
        assert not (sets.zd_star & sets.units)
        for x in ring.elements():
            member = any(y != 0 and ring.mul(x, y) in sets.nil for y in ring.elements())
            assert (x in sets.z_nil) == member
        if sets.nil == frozenset({0}):
            assert sets.z_nil == sets.left_zd | sets.right_zd


def test_product_nilpotent_symmetry(corpus, analyses):
    # xy nilpotent iff yx nilpotent, exhaustively on the whole corpus.
    for entry in corpus:
        ring, nil = entry.ring, analyses[entry.name].sets.nil
        for x in ring.elements():
            for y in ring.elements():
                assert (ring.mul(x, y) in nil) == (ring.mul(y, x) in nil)


# --- ideals, primes, radicals ----------------------------------------------

def test_ideals_z6():
    z6 = make_zmod(6)
    ideals = {tuple(sorted(i)) for i in enumerate_ideals(z6)}
    assert ideals == {(0,), (0, 3), (0, 2, 4), (0, 1, 2, 3, 4, 5)}


def test_ideals_z4():
    ideals = {tuple(sorted(i)) for i in enumerate_ideals(make_zmod(4))}
    assert ideals == {(0,), (0, 2), (0, 1, 2, 3)}


def test_ideals_matrix_ring_simple():
    m = make_matrix_ring(make_zmod(2), 2)
    ideals = enumerate_ideals(m)
    assert sorted(len(i) for i in ideals) == [1, 16]


def test_ideal_cap_reports_which_cap():
    with pytest.raises(CapExceeded) as err:
        enumerate_ideals(make_zmod(100), ideal_cap=64)
    assert "ideal enumeration cap" in str(err.value)


def test_minimal_primes_z6():
    rad = radicals(make_zmod(6))
    assert {tuple(sorted(p)) for p in rad.minimal_primes} == {(0, 2, 4), (0, 3)}


def test_minimal_primes_z4():
    rad = radicals(make_zmod(4))
    assert [tuple(sorted(p)) for p in rad.minimal_primes] == [(0, 2)]


def test_minimal_primes_f2xf2():
    p = make_product(make_zmod(2), make_zmod(2))
    rad = radicals(p)
    prime_labels = {tuple(labels(p, pr)) for pr in rad.minimal_primes}
    assert prime_labels == {("(0,0)", "(1,0)"), ("(0,0)", "(0,1)")}


def test_radicals_z4():
    rad = radicals(make_zmod(4))
    assert rad.prime_radical == frozenset({0, 2})
    assert rad.upper_nilradical == frozenset({0, 2})


def test_radicals_matrix_ring():
    m = make_matrix_ring(make_zmod(2), 2)
    rad = radicals(m)
    assert rad.prime_radical == frozenset({0})
    assert rad.upper_nilradical == frozenset({0})
    assert element_sets(m).nil != frozenset({0})


def test_radicals_z6_reduced():
    rad = radicals(make_zmod(6))
    assert rad.prime_radical == frozenset({0})


def test_radical_inclusions(corpus, analyses):
    for entry in corpus:
        analysis = analyses[entry.name]
        rad = analysis.radical_report
        assert rad is not None
        intersection = frozenset(entry.ring.elements())
        for p in rad.minimal_primes:
            intersection &= p
        assert rad.prime_radical == intersection
        assert rad.prime_radical <= rad.upper_nilradical <= analysis.sets.nil


# --- structural predicates ---------------------------------------------------

def test_properties_z6():
    props = ring_properties(make_zmod(6))
    assert (props.reduced, props.reversible, props.symmetric) == (True, True, True)
    assert props.two_primal is True and props.ni is True


def test_properties_matrix_ring():
    m = make_matrix_ring(make_zmod(2), 2)
    props = ring_properties(m)
    assert props.reversible is False
    a, b = props.witnesses["reversible"]
    assert m.mul(a, b) == 0 and m.mul(b, a) != 0
    assert props.two_primal is False and props.ni is False


def test_properties_z4():
    props = ring_properties(make_zmod(4))
    assert props.reduced is False
    assert props.two_primal is True and props.ni is True


def test_property_implication_chain(corpus, analyses):
    # reduced implies symmetric implies reversible, over the whole corpus.
    for entry in corpus:
        props = analyses[entry.name].properties
        if props.reduced:
            assert props.symmetric
        if props.symmetric:
            assert props.reversible


def test_two_primal_iff_ni_on_corpus(corpus, analyses):
    # Finite rings in the corpus: the two predicates agree; disagreement
    # would be a build-stopping bug.
    for entry in corpus:
        props = analyses[entry.name].properties
        assert props.two_primal is not None
        assert props.two_primal == props.ni, entry.name


def test_znil_shortcut_agreement(corpus, analyses):
    # Definitional scan agrees with the shortcut: NI with a nonzero
    # nilpotent forces every element into the set.
    for entry in corpus:
        analysis = analyses[entry.name]
        sets, props = analysis.sets, analysis.properties
        if props.ni and sets.nil != frozenset({0}):
            assert sets.z_nil == frozenset(entry.ring.elements())


def test_isomorphism_rejects_different_rings():
    assert find_isomorphism(make_zmod(4), make_product(make_zmod(2), make_zmod(2))) is None
    assert find_isomorphism(make_zmod(4), make_zmod(6)) is None
