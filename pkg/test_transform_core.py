import pytest

from transform_core import (
    MAX_DEGREE, PartialMap, all_full_maps, all_partial_maps, compose, format_partial_map,
    parse_partial_map, power, rank, standard_generators_ptn, standard_generators_tn,
)
from utils import DimensionMismatchError, InvalidElementError, ParseError


def pm(text):
    return parse_partial_map(text)


def test_compose_applies_left_map_first():
    assert compose(pm('[2,-,3]'), pm('[1,1,-]')) == pm('[1,-,-]')
    assert pm('[2,1]') * pm('[2,2]') == pm('[2,2]')


def test_identity_and_empty_laws():
    a = pm('[3,-,1]')
    one, zero = PartialMap.identity(3), PartialMap.empty(3)
    assert a * one == a == one * a
    assert a * zero == zero == zero * a


def test_compose_rejects_mixed_degrees():
    with pytest.raises(DimensionMismatchError):
        compose(PartialMap.identity(2), PartialMap.identity(3))


def test_composition_is_associative(rng):
    maps = list(all_partial_maps(3))
    for _ in range(200):
        a, b, c = (rng.choice(maps) for _ in range(3))
        assert (a * b) * c == a * (b * c)


def test_rank_counts_distinct_images():
    assert rank(pm('[2,2,-]')) == 1
    assert pm('[1,2,3]').rank() == 3
    assert PartialMap.empty(4).rank() == 0


def test_one_based_queries():
    a = pm('[2,-,3]')
    assert a(1) == 2 and a(2) is None
    assert a.domain() == [1, 3]
    assert a.image() == [2, 3]
    assert a.to_one_based() == [2, None, 3]
    assert not a.is_full and not a.is_empty


def test_permutations_are_full_and_injective():
    assert pm('[2,3,1]').is_permutation
    assert not pm('[1,1,3]').is_permutation
    assert not pm('[2,-,1]').is_permutation
    assert sum(1 for a in all_full_maps(3) if a.is_permutation) == 6


def test_cycle_and_power():
    rho = PartialMap.cycle(3, [1, 2, 3])
    assert rho == pm('[2,3,1]')
    assert power(rho, 3) == PartialMap.identity(3)
    assert rho ** 0 == PartialMap.identity(3)
    assert PartialMap.cycle(4, [2]) == PartialMap.identity(4)
    with pytest.raises(InvalidElementError):
        PartialMap.cycle(3, [1, 1])


def test_standard_generators_of_pt3():
    gens = standard_generators_ptn(3)
    assert gens['pi'] == pm('[2,1,3]')
    assert gens['rho'] == pm('[2,3,1]')
    assert gens['tau'] == pm('[2,2,3]')
    assert gens['sigma'] == pm('[-,2,3]')
    assert set(standard_generators_tn(3)) == {'pi', 'rho', 'tau'}


def test_standard_generators_need_degree_two():
    with pytest.raises(InvalidElementError):
        standard_generators_ptn(1)


def test_exhaustive_iterators():
    assert sum(1 for _ in all_partial_maps(2)) == 9
    assert sum(1 for _ in all_full_maps(3)) == 27
    assert len(set(all_partial_maps(3))) == 64


def test_format_and_parse():
    assert format_partial_map(PartialMap.from_one_based([2, None, 3])) == '[2,-,3]'
    assert str(pm(' [ 1 , - ] ')) == '[1,-]'


@pytest.mark.parametrize('text', ['[4,1,1]', '[a,1]', 'nope', '[1;2]'])
def test_parse_rejects_bad_text(text):
    with pytest.raises(ParseError):
        parse_partial_map(text)


def test_constructor_rejects_out_of_range_images():
    with pytest.raises(InvalidElementError):
        PartialMap([0, 2])
    with pytest.raises(InvalidElementError):
        PartialMap([])


def test_large_degrees_keep_their_points():
    one = PartialMap.identity(70000)
    assert one.is_full and one.is_permutation
    assert one(70000) == 70000
    assert int(one.images.min()) == 0


def test_degree_cap():
    with pytest.raises(InvalidElementError):
        PartialMap.identity(MAX_DEGREE + 1)
    with pytest.raises(InvalidElementError):
        PartialMap.empty(MAX_DEGREE + 1)


@pytest.mark.parametrize('text', ['[65537]', '[' + '9' * 30 + ']'])
def test_parse_rejects_images_beyond_the_dtype(text):
    with pytest.raises(ParseError):
        parse_partial_map(text)
