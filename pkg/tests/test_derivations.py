import pytest
from hypothesis import given, settings, strategies as st

from hdist.derivations import (
    GeneratorDerivation,
    LinearMap,
    TableError,
    adem_pairs,
    compose,
    extend_leibniz,
    kappa_squared,
    kappa_squared_generators,
    kristensen_kappa,
    leibniz_on_word,
    parse_table,
    verify_derivation_property,
    verify_well_defined,
)
from hdist.steenrod import SteenrodElement as E, admissible_basis, basis_elements, normalize

P = E.parse
kappa = kristensen_kappa()


def perturbed():
    return GeneratorDerivation(-1, lambda m: E.zero() if m == 2 else E.sq(m - 1), name="perturbed")


def zero_map(shift=-1):
    return GeneratorDerivation(shift, lambda m: E.zero(), name="zero")


@pytest.mark.parametrize("x, want", [
    ("Sq2", "Sq1"),
    ("Sq2 Sq1", "Sq2"),
    ("Sq5", "Sq4"),
    ("Sq1", "1"),
    ("Sq3 Sq1", "Sq2 Sq1 + Sq3"),
    ("1", "0"),
    ("0", "0"),
])
def test_kappa_values(x, want):
    assert kappa(P(x)) == P(want)


def test_any_derivation_kills_unit():
    for D in (kappa, perturbed(), zero_map(), kappa_squared_generators()):
        assert extend_leibniz(D, E.one()) == E.zero()


def test_leibniz_on_word_before_normalizing():
    # Sq2 Sq2 as a word: kappa gives Sq1 Sq2 + Sq2 Sq1 = Sq3 + Sq2 Sq1
    assert leibniz_on_word(kappa, (2, 2)) == P("Sq3 + Sq2 Sq1")
    # and differently through the relation Sq2 Sq2 = Sq3 Sq1
    assert kappa(P("Sq3 Sq1")) == P("Sq3 + Sq2 Sq1")


def test_adem_pair_order():
    pairs = list(adem_pairs(4))
    assert pairs == [(1, 1), (1, 2), (1, 3), (2, 2)]
    assert all(0 < a < 2 * b for a, b in adem_pairs(30))


def test_kappa_well_defined_small():
    report = verify_well_defined(kappa, 4)
    assert report.passed
    assert report.checked == 4


def test_perturbed_fails_at_sq2sq2():
    report = verify_well_defined(perturbed(), 4)
    assert not report.passed
    ce = report.counterexample
    assert ce.inputs == (2, 2)
    assert P(ce.detail["residual"]) == P("Sq2 Sq1 + Sq3")
    assert P(ce.got) == E.zero()
    assert P(ce.expected) == P("Sq3 + Sq2 Sq1")


@pytest.mark.parametrize("max_degree", [2, 5, 12])
def test_zero_map_well_defined(max_degree):
    assert verify_well_defined(zero_map(), max_degree).passed


def test_kappa_well_defined_30():
    assert verify_well_defined(kappa, 30).passed


def test_kappa_squared_values():
    k2 = kappa_squared()
    for m in range(3, 12):
        assert k2(E.sq(m)) == E.sq(m - 2)
    assert k2(P("Sq2 Sq1")) == P("Sq1")
    assert k2(E.one()) == E.zero()
    assert k2.shift == -2
    assert k2(E.sq(2)) == E.one()
    assert k2(E.sq(1)) == E.zero()


def test_compose_shift_and_name():
    f = compose(kappa, kappa)
    assert f.shift == -2
    assert f(P("Sq4 Sq2")) == kappa(kappa(P("Sq4 Sq2")))


def test_kappa_is_derivation():
    assert verify_derivation_property(kappa, -1, 14).passed


def test_kappa_squared_is_derivation_small():
    assert verify_derivation_property(kappa_squared(), -2, 10).passed


def test_left_multiplication_is_not_derivation():
    F = LinearMap(lambda x: E.sq(1) * x, 1, "Sq1*")
    report = verify_derivation_property(F, 1, 6)
    assert not report.passed
    x, y = map(P, report.counterexample.inputs)
    assert x * y != E.zero()


def test_derivation_property_catches_wrong_degree():
    F = LinearMap(lambda x: x, -1, "id")
    report = verify_derivation_property(F, -1, 4)
    assert not report.passed


@pytest.mark.parametrize("deg", range(0, 13))
def test_kappa_squared_routes_agree(deg):
    gens = kappa_squared_generators()
    k2 = kappa_squared()
    for x in basis_elements(deg):
        assert k2(x) == extend_leibniz(gens, x)


@pytest.mark.parametrize("deg", range(0, 16))
def test_degree_bookkeeping(deg):
    for D in (kappa, kappa_squared_generators()):
        for x in basis_elements(deg):
            y = extend_leibniz(D, x)
            assert not y or y.degrees() == {deg + D.shift}


monos = st.integers(0, 14).flatmap(lambda d: st.sampled_from(admissible_basis(d)))


@settings(max_examples=150)
@given(st.lists(monos, max_size=4), st.lists(monos, max_size=4))
def test_linearity(a, b):
    x, y = normalize(a), normalize(b)
    for D in (kappa, kappa_squared_generators()):
        assert extend_leibniz(D, x + y) == extend_leibniz(D, x) + extend_leibniz(D, y)


@settings(max_examples=150)
@given(monos, monos)
def test_kappa_leibniz_random(a, b):
    x, y = normalize([a]), normalize([b])
    assert kappa(x * y) == kappa(x) * y + x * kappa(y)


def test_generator_value_homogeneity_enforced():
    bad = GeneratorDerivation(-1, lambda m: E.sq(m), name="bad")
    with pytest.raises(ValueError):
        bad.value(3)


def test_shift_must_be_negative():
    with pytest.raises(ValueError):
        GeneratorDerivation(0, lambda m: E.sq(m))


def test_missing_value_without_default():
    D = GeneratorDerivation(-1, {1: E.one()}, name="partial")
    with pytest.raises(KeyError):
        D.value(2)


def test_parse_table_perturbed():
    D = parse_table("# kappa with Sq2 killed\nshift: -1\nrule: Sq(m-1)\n2 -> 0\n")
    assert D.shift == -1
    assert D.value(2) == E.zero()
    assert D.value(5) == E.sq(4)
    assert D.value(1) == E.one()
    report = verify_well_defined(D, 4)
    assert report.counterexample.inputs == (2, 2)


def test_parse_table_infers_shift():
    D = parse_table("rule: Sq(m-1)\n")
    assert D.shift == -1
    assert verify_well_defined(D, 10).passed
    D = parse_table("1 -> 1\n2 -> Sq1\n")
    assert D.shift == -1
    assert D.value(2) == E.sq(1)


def test_parse_table_zero_rule():
    D = parse_table("shift: -2\nrule: zero\n")
    assert D.value(7) == E.zero()


@pytest.mark.parametrize("text", [
    "shift: x\n",
    "rule: Sq(m+1)\n",
    "2 => Sq1\n",
    "2 -> Sq\n",
    "shift: -2\nrule: Sq(m-1)\n",
    "0 -> 1\n",
    "2 -> Sq2\nshift: -1\n",
    "shift: 0\n1 -> Sq1\n",
    "",
])
def test_parse_table_errors(text):
    with pytest.raises(TableError):
        parse_table(text)
