import pytest

from posit import (ADAM, EVE, InvalidWitness, LassoWord, UnknownLetter,
                   Witness1, Witness2, Witness3, certify_nonpositional,
                   check_positional, format_arena, gadget_from_witness,
                   parse_arena)
from posit.fixtures import load_dpa


class TestShapes:
    def test_choice_between_two_exits(self):
        dpa = load_dpa("res")
        witness = Witness1("a", "b", LassoWord("", "b"), LassoWord("", "c"))
        arena, start = gadget_from_witness(witness, dpa.alphabet)
        assert start == "s"
        assert arena.owners["s"] == ADAM
        assert arena.owners["e"] == EVE
        assert set(arena.out_edges("s")) == {("a", "e"), ("b", "e")}
        # hub commits to one of the two loops
        dsts = {dst for _letter, dst in arena.out_edges("e")}
        assert len(dsts) == 2
        for dst in dsts:
            (edge,) = arena.out_edges(dst)
            assert edge[1] == dst

    def test_loop_or_leave(self):
        dpa = load_dpa("onea")
        witness = Witness2("", "a", LassoWord("", "b"))
        arena, start = gadget_from_witness(witness, dpa.alphabet)
        assert start == "e"
        assert arena.owners["e"] == EVE
        assert ("a", "e") in arena.out_edges("e")
        exits = [dst for _l, dst in arena.out_edges("e") if dst != "e"]
        assert len(exits) == 1
        assert arena.out_edges(exits[0]) == [("b", exits[0])]

    def test_nonempty_access_adds_adam_start(self):
        dpa = load_dpa("onea")
        witness = Witness2("b", "a", LassoWord("", "b"))
        arena, start = gadget_from_witness(witness, dpa.alphabet)
        assert start == "s"
        assert arena.owners["s"] == ADAM
        assert arena.out_edges("s") == [("b", "e")]

    def test_exit_with_prefix(self):
        dpa = load_dpa("onea")
        witness = Witness2("", "a", LassoWord("b", "ab"))
        arena, _start = gadget_from_witness(witness, dpa.alphabet)
        # one entry thread into a two-vertex cycle spelling (ab)^omega
        exits = [dst for _l, dst in arena.out_edges("e") if dst != "e"]
        (entry,) = exits
        cycle = dict(arena.out_edges(entry))
        assert list(cycle) == ["a"]
        back = arena.out_edges(cycle["a"])
        assert back == [("b", entry)]

    def test_two_loops_through_hub(self):
        dpa = load_dpa("w2")
        witness = Witness3("", "ab", "ac")
        arena, start = gadget_from_witness(witness, dpa.alphabet)
        assert start == "e"
        out = arena.out_edges("e")
        assert [letter for letter, _ in out] == ["a", "a"]
        returns = sorted(arena.out_edges(dst)[0][0] for _l, dst in out)
        assert returns == ["b", "c"]

    def test_round_trip_through_text_format(self):
        dpa = load_dpa("w2")
        witness = Witness3("", "ab", "ac")
        arena, _start = gadget_from_witness(witness, dpa.alphabet)
        again = parse_arena(format_arena(arena))
        assert again.owners == arena.owners
        assert again.edges == arena.edges


class TestRejects:
    def test_empty_access_words(self):
        dpa = load_dpa("res")
        w = LassoWord("", "b")
        with pytest.raises(InvalidWitness, match="nonempty"):
            gadget_from_witness(Witness1("", "b", w, w), dpa.alphabet)
        with pytest.raises(InvalidWitness, match="nonempty"):
            gadget_from_witness(Witness1("a", "", w, w), dpa.alphabet)

    def test_empty_loop_words(self):
        alphabet = load_dpa("onea").alphabet
        with pytest.raises(InvalidWitness):
            gadget_from_witness(Witness2("", "", LassoWord("", "b")), alphabet)
        with pytest.raises(InvalidWitness):
            gadget_from_witness(Witness3("", "a", ""), alphabet)

    def test_unknown_witness_object(self):
        alphabet = load_dpa("onea").alphabet
        with pytest.raises(InvalidWitness):
            gadget_from_witness("garbage", alphabet)

    def test_foreign_letters(self):
        alphabet = load_dpa("onea").alphabet
        with pytest.raises(UnknownLetter):
            gadget_from_witness(Witness3("", "z", "a"), alphabet)


class TestCertify:
    @pytest.mark.parametrize("name", ["onea", "infab", "w2", "res"])
    def test_computed_witnesses_certify(self, name):
        dpa = load_dpa(name)
        verdict = check_positional(dpa)
        assert not verdict.positional
        assert certify_nonpositional(dpa, verdict.witness)

    def test_gadget_eve_cannot_win(self):
        # every play spells b^omega, which needs a's to be accepted
        dpa = load_dpa("buchi_a")
        witness = Witness2("", "b", LassoWord("", "b"))
        assert not certify_nonpositional(dpa, witness)

    def test_gadget_won_positionally(self):
        # the a loop alone wins, so the gadget separates nothing
        dpa = load_dpa("buchi_a")
        witness = Witness3("", "a", "b")
        assert not certify_nonpositional(dpa, witness)
