import pytest

from posit import (InvalidWitness, LassoWord, MonoidTooLarge,
                   PreconditionViolated, Witness1, Witness2, Witness3,
                   check_positional, check_property1, check_property2,
                   check_property3, compare_lassos, generate_monoid,
                   member_from, omega_accept, reachable_states,
                   verify_order_laws, witness_from_dict)
from posit.positionality import compose, element_of_word, letter_element
from posit.fixtures import DPA_NAMES, load_dpa

from oracles import (brute_property1, brute_property2, brute_property3,
                     certify_witness, lassos_up_to, word_behavior,
                     words_up_to)

POSITIONAL = ("buchi_a", "fin_a", "rabin", "ex3")

EXPECTED = {
    "buchi_a": None,
    "fin_a": None,
    "rabin": None,
    "ex3": None,
    "onea": (2, Witness2("", "a", LassoWord("", "b"))),
    "infab": (3, Witness3("", "a", "b")),
    "w2": (3, Witness3("", "ab", "ac")),
    "res": (1, Witness1("a", "b", LassoWord("", "b"), LassoWord("", "c"))),
}


class TestMonoid:
    def test_letter_element(self):
        a = load_dpa("onea")
        el = letter_element(a, "a")
        assert el.f == (1, 1)
        assert el.g == (1, 1)
        assert el.witness == "a"

    def test_compose_tracks_minimum(self):
        a = load_dpa("onea")
        ab = compose(letter_element(a, "a"), letter_element(a, "b"))
        assert ab.f == (1, 1)
        assert ab.g == (1, 1)
        assert ab.witness == "ab"
        bb = compose(letter_element(a, "b"), letter_element(a, "b"))
        assert bb.g == (1, 2)

    def test_onea_monoid_has_two_elements(self):
        # only "contains an a" matters: every word maps 0 with minimum 1
        assert len(generate_monoid(load_dpa("onea"))) == 2

    @pytest.mark.parametrize("name", DPA_NAMES)
    def test_monoid_is_exactly_the_word_behaviours(self, name):
        a = load_dpa(name)
        monoid = generate_monoid(a)
        keys = {(m.f, m.g) for m in monoid}
        # witnesses realise their element
        for m in monoid:
            assert word_behavior(a, m.witness) == (m.f, m.g)
        # closed under composition and containing the letters
        for c in a.alphabet:
            assert word_behavior(a, c) in keys
        for m1 in monoid:
            for m2 in monoid:
                comp = compose(m1, m2)
                assert (comp.f, comp.g) in keys
        # no behaviour of a short word is missing
        for word in words_up_to(a.alphabet, 4, min_len=1):
            assert word_behavior(a, word) in keys

    def test_witnesses_are_shortest_first(self):
        for name in DPA_NAMES:
            a = load_dpa(name)
            for m in generate_monoid(a):
                for word in words_up_to(a.alphabet, len(m.witness) - 1, 1):
                    assert word_behavior(a, word) != (m.f, m.g)

    def test_cap(self):
        with pytest.raises(MonoidTooLarge):
            generate_monoid(load_dpa("w2"), cap=3)

    def test_cap_from_environment(self, monkeypatch):
        monkeypatch.setenv("POSIT_MONOID_CAP", "3")
        with pytest.raises(MonoidTooLarge):
            generate_monoid(load_dpa("w2"))

    def test_element_of_word_rejects_empty(self):
        with pytest.raises(PreconditionViolated):
            element_of_word(load_dpa("onea"), "")


class TestOmegaAccept:
    @pytest.mark.parametrize("name", DPA_NAMES)
    def test_agrees_with_membership_of_the_witness_loop(self, name):
        a = load_dpa(name)
        for m in generate_monoid(a):
            for p in sorted(reachable_states(a)):
                expected = member_from(a, p, LassoWord("", m.witness))
                assert omega_accept(a, m, p) == expected


class TestProperties:
    @pytest.mark.parametrize("name", DPA_NAMES)
    def test_property1_matches_brute(self, name):
        a = load_dpa(name)
        report = check_property1(a)
        brute = brute_property1(a, lassos_up_to(a.alphabet, 2, 3))
        assert report.passed == (not brute)
        if not report.passed:
            assert certify_witness(a, report.witness)

    @pytest.mark.parametrize("name", DPA_NAMES)
    def test_property2_matches_brute(self, name):
        a = load_dpa(name)
        report = check_property2(a)
        brute = brute_property2(a, 2, 2, lassos_up_to(a.alphabet, 2, 2))
        assert report.passed == (not brute)
        if not report.passed:
            assert certify_witness(a, report.witness)

    @pytest.mark.parametrize("name", DPA_NAMES)
    def test_property3_matches_brute(self, name):
        a = load_dpa(name)
        report = check_property3(a)
        brute = brute_property3(a, 2, 2)
        assert report.passed == (not brute)
        if not report.passed:
            assert certify_witness(a, report.witness)

    @pytest.mark.parametrize("name", DPA_NAMES)
    def test_verdicts_and_witnesses(self, name):
        verdict = check_positional(load_dpa(name))
        if EXPECTED[name] is None:
            assert verdict.positional
            assert verdict.failed_property is None
            assert verdict.witness is None
        else:
            number, witness = EXPECTED[name]
            assert not verdict.positional
            assert verdict.failed_property == number
            assert verdict.witness == witness


class TestCompare:
    def test_incomparable_with_prefixes(self):
        a = load_dpa("res")
        c = compare_lassos(a, LassoWord("", "b"), LassoWord("", "c"))
        assert c.incomparable
        assert (c.u, c.up) == ("a", "b")

    def test_strict_order(self):
        a = load_dpa("buchi_a")
        c = compare_lassos(a, LassoWord("", "b"), LassoWord("", "a"))
        assert c.left_leq and not c.right_leq

    def test_equivalent(self):
        a = load_dpa("buchi_a")
        c = compare_lassos(a, LassoWord("", "a"), LassoWord("b", "ab"))
        assert c.equivalent


class TestOrderLaws:
    @pytest.mark.parametrize("name", POSITIONAL)
    def test_no_violations_on_positional_fixtures(self, name):
        report = verify_order_laws(load_dpa(name), samples=100, seed=3)
        assert report.passed
        assert report.samples == 100

    def test_requires_positional(self):
        with pytest.raises(PreconditionViolated):
            verify_order_laws(load_dpa("onea"), samples=5, seed=0)


class TestWitnessSerialization:
    @pytest.mark.parametrize("name", ("onea", "infab", "w2", "res"))
    def test_round_trip(self, name):
        a = load_dpa(name)
        witness = check_positional(a).witness
        again = witness_from_dict(witness.as_dict(), a.alphabet)
        assert again == witness

    def test_rejects_garbage(self):
        a = load_dpa("onea")
        with pytest.raises(InvalidWitness):
            witness_from_dict({"property": 9}, a.alphabet)
        with pytest.raises(InvalidWitness):
            witness_from_dict({"property": 2, "u": "", "v": 3, "w": ":b"},
                              a.alphabet)
        with pytest.raises(InvalidWitness):
            witness_from_dict(["not", "a", "dict"], a.alphabet)
