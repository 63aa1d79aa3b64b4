import random

import pytest

from z3conn.seqcore import (Classification, DegreeSequence, Kind, Route,
                            SequenceError, SequenceSyntaxError, classify,
                            is_graphic, parse_sequence, residual)

from helpers import brute_force_graphic, erdos_gallai_reference


def test_parse_basic_forms():
    assert parse_sequence("(6,5,4^4,3)").degrees == (6, 5, 4, 4, 4, 4, 3)
    assert parse_sequence("3,3,3,3").degrees == (3, 3, 3, 3)
    assert parse_sequence("(3^6)").degrees == (3,) * 6
    assert parse_sequence(" ( 5 , 3 ^ 5 ) ").degrees == (5, 3, 3, 3, 3, 3)
    # input order does not matter; output is canonical
    assert parse_sequence("(3,4,3,5)").degrees == (5, 4, 3, 3)


def test_parse_render_roundtrip():
    rng = random.Random(7)
    for _ in range(200):
        degs = sorted((rng.randint(1, 9) for _ in range(rng.randint(1, 12))),
                      reverse=True)
        seq = DegreeSequence(tuple(degs))
        assert parse_sequence(seq.render()) == seq


def test_render_exponents():
    assert DegreeSequence((6, 5, 4, 4, 4, 4, 3)).render() == "(6,5,4^4,3)"
    assert DegreeSequence((3, 3)).render() == "(3^2)"
    assert DegreeSequence((4,)).render() == "(4)"


@pytest.mark.parametrize("bad", ["", "()", "(3,", "3,,4", "(3^0)", "(3^)",
                                 "a", "(3))", "3)", "((3)", "0,3", "-3"])
def test_parse_rejects_malformed(bad):
    with pytest.raises(SequenceError):
        parse_sequence(bad)


def test_syntax_error_carries_position():
    with pytest.raises(SequenceSyntaxError) as info:
        parse_sequence("(3,x)")
    assert info.value.position >= 0


def test_sequence_validation():
    with pytest.raises(SequenceError):
        DegreeSequence((3, 4))  # increasing
    with pytest.raises(SequenceError):
        DegreeSequence(())
    with pytest.raises(SequenceError):
        DegreeSequence((3, 0))


def test_is_graphic_known_cases():
    assert is_graphic(parse_sequence("(3^4)"))
    assert is_graphic(parse_sequence("(3^6)"))
    assert not is_graphic(parse_sequence("(3^5)"))  # odd sum
    assert not is_graphic(parse_sequence("(5,3)"))  # d1 too large
    assert is_graphic(parse_sequence("(6,5,4^4,3)"))
    assert not is_graphic(parse_sequence("(4^4,3^3)"))  # odd sum


def test_is_graphic_matches_erdos_gallai():
    rng = random.Random(11)
    for _ in range(500):
        n = rng.randint(1, 10)
        degs = sorted((rng.randint(1, max(1, n - 1)) for _ in range(n)),
                      reverse=True)
        seq = DegreeSequence(tuple(degs))
        assert is_graphic(seq) == erdos_gallai_reference(degs), seq.render()


def test_is_graphic_matches_brute_force_small():
    rng = random.Random(13)
    for _ in range(60):
        n = rng.randint(2, 5)
        degs = sorted((rng.randint(1, n - 1) for _ in range(n)), reverse=True)
        seq = DegreeSequence(tuple(degs))
        assert is_graphic(seq) == brute_force_graphic(degs), seq.render()


def test_residual_example():
    rr = residual(parse_sequence("(6,5,4^4,3)"))
    # delete the trailing 3, decrement the three largest entries
    assert rr.sequence.degrees == (5, 4, 4, 4, 4, 3)
    # positions of the decremented entries in the new ordering
    decremented = {rr.new_to_old[i] for i in rr.decremented_new}
    assert decremented == {0, 1, 2}


def test_residual_ties_decrement_earliest():
    rr = residual(parse_sequence("(4,4,4,4,3)"))
    assert rr.sequence.degrees == (4, 3, 3, 3)
    assert {rr.new_to_old[i] for i in rr.decremented_new} == {0, 1, 2}
    # the untouched old position 3 keeps its value 4 and now leads
    assert rr.new_to_old[0] == 3


def test_residual_preserves_graphicality_both_ways():
    rng = random.Random(17)
    for _ in range(300):
        n = rng.randint(2, 9)
        degs = sorted((rng.randint(1, n - 1) for _ in range(n)), reverse=True)
        seq = DegreeSequence(tuple(degs))
        try:
            rr = residual(seq)
        except SequenceError:
            continue
        assert is_graphic(seq) == is_graphic(rr.sequence)


def test_residual_rejects_undefined():
    with pytest.raises(SequenceError):
        residual(DegreeSequence((3,)))


@pytest.mark.parametrize("text,kind,route,k", [
    ("(3^4)", Kind.EXCEPTION_ODD_K, None, 3),
    ("(5,3^5)", Kind.EXCEPTION_ODD_K, None, 5),
    ("(7,3^7)", Kind.EXCEPTION_ODD_K, None, 7),
    ("(5^2,3^4)", Kind.EXCEPTION_ODD_K_SQUARE, None, 5),
    ("(7^2,3^6)", Kind.EXCEPTION_ODD_K_SQUARE, None, 7),
    ("(3^6)", Kind.EXCEPTION_N3, None, None),
    ("(4,3^6)", Kind.EXCEPTION_N3, None, None),
    ("(5,3^7)", Kind.EXCEPTION_N3, None, None),
    ("(3^5)", Kind.NOT_GRAPHIC, None, None),
    ("(6,6,6,4)", Kind.NOT_GRAPHIC, None, None),
    ("(4,3^4)", Kind.COVERED, Route.T12, None),
    ("(6,5,4^4,3)", Kind.COVERED, Route.T12, None),
    ("(4^2,3^4)", Kind.COVERED, Route.L41, None),
    ("(6,6,3^6)", Kind.COVERED, Route.L41, None),
    ("(5^2,3^6)", Kind.COVERED, Route.T14, None),
    ("(4^3,3^4)", Kind.COVERED, Route.T14, None),
    ("(4^4,3^4)", Kind.COVERED, Route.T15, None),
    ("(6,4^5,3^4)", Kind.COVERED, Route.T15, None),
    ("(2,2,2)", Kind.OUT_OF_COVERAGE, None, None),
    ("(4,4,3,3,2)", Kind.OUT_OF_COVERAGE, None, None),
    ("(4,4,3^8)", Kind.OUT_OF_COVERAGE, None, None),  # d1 <= n-4, d_{n-5} = 3
])
def test_classify_cases(text, kind, route, k):
    c = classify(parse_sequence(text))
    assert c == Classification(kind, route, k)


def test_classify_even_k_star_is_covered():
    # (k, 3^k) with even k is not an exception
    c = classify(parse_sequence("(4,3^4)"))
    assert c.kind is Kind.COVERED


def test_classify_exceptions_require_min_degree_3_pattern():
    # exception tags only fire on the exact patterns
    assert classify(parse_sequence("(5,4,3^4)")).kind is Kind.NOT_GRAPHIC
    assert classify(parse_sequence("(5,4,3^5)")).kind is Kind.COVERED
