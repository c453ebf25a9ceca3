import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from zsets import (
    DomainError,
    ModulusMismatch,
    PcSet,
    Transform,
    canonical_form,
    complement,
    format_set,
    interval_content,
    interval_function,
    interval_vector,
    invert,
    multiply,
    parse_set,
    patterson,
    transform,
    transpose,
)


@st.composite
def pcsets(draw, min_n=1, max_n=32):
    n = draw(st.integers(min_n, max_n))
    mask = draw(st.integers(0, (1 << n) - 1))
    return PcSet(n, mask)


# -- PcSet ------------------------------------------------------------------


def test_pcset_invariants(S):
    a = S(8, 0, 3, 4, 5)
    assert a.members == (0, 3, 4, 5)
    assert len(a) == 4
    assert 3 in a and 1 not in a
    with pytest.raises(DomainError):
        PcSet(8, 1 << 8)
    with pytest.raises(DomainError):
        PcSet.of([8], 8)
    assert PcSet.reduce([9, -1], 8) == S(8, 1, 7)


# -- interval function / vector / content -------------------------------------


def test_ifunc_worked_example(S):
    a = S(12, 0, 2, 3, 5)
    assert interval_function(a, a) == (4, 1, 2, 2, 0, 1, 0, 1, 0, 2, 2, 1)


def test_ifunc_empty_and_small(S):
    assert interval_function(PcSet.empty(7), S(7, 1, 2)) == (0,) * 7
    assert interval_function(S(5, 0, 1), S(5, 0, 1)) == (2, 1, 0, 0, 1)


def test_ifunc_modulus_mismatch(S):
    with pytest.raises(ModulusMismatch):
        interval_function(S(8, 0), S(12, 0))


def test_interval_vector_examples(S):
    assert interval_vector(S(12, 0, 1, 3, 4, 7, 9)).counts == (6, 2, 2, 4, 3, 2, 4, 2, 3, 4, 2, 2)
    assert interval_vector(S(5, 0)).counts == (1, 0, 0, 0, 0)
    assert interval_vector(S(8, 0, 3, 4, 5)).counts == (4, 2, 1, 2, 2, 2, 1, 2)


@pytest.mark.parametrize(
    "n, elements, digits",
    [
        (12, (0, 1, 3, 4, 7, 9), (2, 2, 4, 3, 2, 2)),
        (8, (0, 3, 4, 5), (2, 1, 2, 1)),
        (8, (0, 1, 3, 5), (1, 2, 2, 1)),
        (12, (0, 1, 2, 3, 5, 6), (4, 3, 3, 2, 2, 1)),
        (12, (0, 1, 3, 5, 6, 10), (2, 3, 3, 2, 4, 1)),
    ],
)
def test_interval_content(n, elements, digits):
    assert interval_content(PcSet.of(elements, n)).digits == digits


def test_hexachord_unfolded_prefix(S):
    # the printed 433222 / 233242 are iv(1..6) before halving the tritone digit
    assert interval_vector(S(12, 0, 1, 2, 3, 5, 6)).counts[1:7] == (4, 3, 3, 2, 2, 2)
    assert interval_vector(S(12, 0, 1, 3, 5, 6, 10)).counts[1:7] == (2, 3, 3, 2, 4, 2)


def test_interval_content_rejects_tiny_modulus():
    with pytest.raises(DomainError):
        interval_content(PcSet.of([0], 1))


def test_content_string_form(S):
    assert str(interval_content(S(8, 0, 3, 4, 5))) == "2121"


@given(pcsets())
def test_interval_vector_invariants(a):
    iv = interval_vector(a).counts
    n, k = a.modulus, len(a)
    assert iv[0] == k
    assert sum(iv) == k * k
    assert all(iv[d] == iv[(n - d) % n] for d in range(n))
    if n % 2 == 0:
        assert iv[n // 2] % 2 == 0


@given(pcsets(min_n=2))
def test_content_recovers_cardinality(a):
    c = interval_content(a)
    assert len(c.digits) == a.modulus // 2
    assert c.cardinality == len(a) or len(a) == 0


@given(pcsets(), st.data())
def test_ifunc_antisymmetry(a, data):
    b = PcSet(a.modulus, data.draw(st.integers(0, (1 << a.modulus) - 1)))
    f, g = interval_function(a, b), interval_function(b, a)
    n = a.modulus
    assert all(f[d] == g[(n - d) % n] for d in range(n))


@given(pcsets(), st.data())
def test_ifunc_matches_bruteforce(a, data):
    b = PcSet(a.modulus, data.draw(st.integers(0, (1 << a.modulus) - 1)))
    assert interval_function(a, b) == oracles.ifunc(a.members, b.members, a.modulus)


# -- Patterson ---------------------------------------------------------------


def test_patterson_worked_example(S):
    p = patterson(S(12, 0, 2, 3, 5))
    assert p.coefficients == (4, 1, 2, 2, 0, 1, 0, 1, 0, 2, 2, 1)
    assert str(p) == "4 + x + 2x^2 + 2x^3 + x^5 + x^7 + 2x^9 + 2x^10 + x^11"


def test_patterson_empty():
    assert patterson(PcSet.empty(9)).coefficients == (0,) * 9
    assert str(patterson(PcSet.empty(9))) == "0"


def test_patterson_equals_interval_vector_random():
    rng = random.Random(20130601)
    for _ in range(500):
        n = rng.randint(1, 32)
        a = PcSet(n, rng.getrandbits(n))
        assert patterson(a).coefficients == interval_vector(a).counts
        assert patterson(a).coefficients == oracles.ivec(a.members, n)


# -- transforms --------------------------------------------------------------


def test_multiply_worked_example(S):
    assert multiply(S(12, 0, 1, 2, 3, 5, 6), 5) == S(12, 0, 1, 3, 5, 6, 10)
    assert Transform("M", 5)(S(12, 0, 1, 2, 3, 5, 6)) == S(12, 0, 1, 3, 5, 6, 10)


def test_identity_and_inversion(S):
    a = S(8, 0, 3, 4, 5)
    assert transpose(a, 0) == a
    assert invert(a, 0) == a


def test_transform_bijectivity_flag(S):
    assert Transform("M", 5).is_bijective(12)
    assert not Transform("M", 2).is_bijective(12)
    assert Transform("T", 3).is_bijective(12)
    # non-bijective multiplication is legal, it just collapses points
    assert multiply(S(12, 0, 6, 3), 2) == S(12, 0, 6)


def test_transform_param_range(S):
    with pytest.raises(DomainError):
        transform(S(8, 1), Transform("T", 8))
    with pytest.raises(DomainError):
        Transform("X", 1)


@given(pcsets(min_n=2), st.data())
def test_dihedral_invariance_of_interval_vector(a, data):
    t = data.draw(st.integers(0, a.modulus - 1))
    iv = interval_vector(a)
    assert interval_vector(transpose(a, t)) == iv
    assert interval_vector(invert(a, t)) == iv


# -- complement --------------------------------------------------------------


def test_complement(S):
    assert complement(S(8, 0, 1, 3, 5)) == S(8, 2, 4, 6, 7)
    assert complement(PcSet.empty(5)) == PcSet.full(5)


@given(pcsets())
def test_complement_involution(a):
    assert complement(complement(a)) == a
    assert len(complement(a)) == a.modulus - len(a)


# -- canonical form -----------------------------------------------------------


def test_canonical_examples(S):
    assert canonical_form(S(8, 0, 3, 4, 5)) == S(8, 0, 1, 2, 5)
    assert canonical_form(S(8, 0, 4, 5, 7)) == S(8, 0, 1, 3, 4)
    assert canonical_form(PcSet.empty(8)) == PcSet.empty(8)
    assert canonical_form(PcSet.full(8)) == PcSet.full(8)


@given(pcsets(max_n=16))
def test_canonical_matches_bruteforce(a):
    assert canonical_form(a).members == oracles.canonical(a.members, a.modulus)


@given(pcsets(), st.data())
def test_canonical_idempotent_and_invariant(a, data):
    c = canonical_form(a)
    assert canonical_form(c) == c
    t = data.draw(st.integers(0, a.modulus - 1))
    assert canonical_form(transpose(a, t)) == c
    assert canonical_form(invert(a, t)) == c


# -- set literals -------------------------------------------------------------


def test_parse_set_syntaxes(S):
    assert parse_set("15ab", 12) == S(12, 1, 5, 10, 11)
    assert parse_set("0,1,3,4", 8) == S(8, 0, 1, 3, 4)
    assert parse_set("{0, 1, 3}", 8) == S(8, 0, 1, 3)
    assert parse_set("", 8) == PcSet.empty(8)
    assert parse_set("{10}", 12) == S(12, 10)
    assert parse_set("10", 12) == S(12, 0, 1)


@pytest.mark.parametrize("text", ["0c", "0,,1", "0,a", "0,12", "00", "0x"])
def test_parse_set_errors(text):
    with pytest.raises(DomainError):
        parse_set(text, 12)


@given(pcsets(max_n=32))
def test_parse_format_roundtrip(a):
    assert parse_set(format_set(a, "compact"), a.modulus) == a
    if len(a) != 1:
        assert parse_set(format_set(a, "comma"), a.modulus) == a
    assert parse_set(str(a), a.modulus) == a
