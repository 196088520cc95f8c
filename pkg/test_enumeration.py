import pytest

from block_monoid import order_formula, phi
from enumeration import (
    Congruence, canonical_forms_per_class, closure, congruence_from_pairs, congruences_equal,
    generating_pair, identity_congruence, is_generating, kernel_congruence,
    single_pair_congruence, tail_universal_check, universal_congruence,
)
from generators import FIVE_SYMBOLS, build_named_generators, eval_word
from transform_core import standard_generators_ptn, standard_generators_tn
from utils import CarrierMismatchError, DimensionMismatchError, InvalidElementError, LimitExceededError
from wreath import embed_slot, full_wreath_order, units_order, wreath_order

SLOW_DIMS = [pytest.param(3, 2, marks=pytest.mark.slow), pytest.param(2, 3, marks=pytest.mark.slow)]


def test_closure_of_standard_generators():
    pt2 = standard_generators_ptn(2)
    assert closure(list(pt2.values())).size == 9
    assert closure(list(standard_generators_ptn(3).values())).size == 64
    assert closure(list(standard_generators_tn(3).values())).size == 27


def test_closure_starts_at_the_identity(wreath_22):
    assert wreath_22.elements[0] == wreath_22.generators[0].identity_like()
    assert wreath_22.word(0).is_empty


def test_cayley_edges(wreath_22):
    em = wreath_22
    for i in range(0, em.size, 17):
        for g, gen in enumerate(em.generators):
            assert em.elements[em.right[i, g]] == em.elements[i] * gen
            assert em.elements[em.left[i, g]] == gen * em.elements[i]


def test_stored_words_evaluate_back(alphabet_22, wreath_22):
    five = alphabet_22.restrict(FIVE_SYMBOLS)
    for i in range(0, wreath_22.size, 7):
        assert eval_word(five, wreath_22.word(i)) == wreath_22.elements[i]


def test_closure_limit():
    gens = list(standard_generators_ptn(2).values())
    assert closure(gens, limit=9).size == 9
    with pytest.raises(LimitExceededError):
        closure(gens, limit=5)


def test_closure_input_errors():
    with pytest.raises(InvalidElementError):
        closure([])
    pt2, pt3 = standard_generators_ptn(2), standard_generators_ptn(3)
    with pytest.raises(DimensionMismatchError):
        closure([pt2['pi'], pt3['pi']])
    with pytest.raises(InvalidElementError):
        closure([pt2['pi']], names=['a', 'b'])


def test_index_of_rejects_non_members():
    pt2 = standard_generators_ptn(2)
    em = closure([pt2['pi']])
    assert em.size == 2 and pt2['pi'] in em
    with pytest.raises(InvalidElementError):
        em.index_of(pt2['tau'])


def test_five_generators_at_2_2(wreath_22, block_22):
    assert wreath_22.size == wreath_order(2, 2) == 324
    assert block_22.size == order_formula(2, 2) == 289


@pytest.mark.parametrize('n, m', [(2, 2)] + SLOW_DIMS)
def test_five_generators_generate_both_monoids(n, m):
    five = build_named_generators(n, m).restrict(FIVE_SYMBOLS)
    assert is_generating(five.elements(), wreath_order(n, m))
    assert is_generating(five.to_block().elements(), order_formula(n, m))


@pytest.mark.parametrize('n, m', [(2, 2), pytest.param(2, 3, marks=pytest.mark.slow)])
def test_every_four_element_subset_generates_less(n, m):
    five = build_named_generators(n, m).restrict(FIVE_SYMBOLS)
    block = five.to_block()
    for omitted in FIVE_SYMBOLS:
        names = [s for s in FIVE_SYMBOLS if s != omitted]
        assert not is_generating(five.elements(names), wreath_order(n, m)), omitted
        assert not is_generating(block.elements(names), order_formula(n, m)), omitted


@pytest.mark.parametrize('n, m', [(2, 2), (3, 2), (2, 3), (3, 3)])
def test_units(n, m):
    alphabet = build_named_generators(n, m)
    units = closure(alphabet.elements(['x1', 'x2']))
    assert units.size == units_order(n, m)
    assert all(phi(x).flat.is_permutation for x in units.elements)


@pytest.mark.parametrize('n, m, expected', [(2, 2, 64), (2, 3, 1728)])
def test_sigma_free_generators_give_the_full_wreath_product(n, m, expected):
    alphabet = build_named_generators(n, m)
    names = ['x1', 'x2', 'tau', 'tauB']
    em = closure(alphabet.elements(names), names)
    assert em.size == full_wreath_order(n, m) == expected
    assert all(x.tail.is_full and all(c.is_full for c in x.components) for x in em.elements)
    block = closure(alphabet.to_block().elements(names), names)
    assert all(b.is_full for b in block.elements)


def test_closure_is_idempotent(wreath_22):
    again = closure(wreath_22.elements)
    assert again.size == wreath_22.size
    assert set(again.index) == set(wreath_22.index)


def test_is_generating_respects_the_limit():
    with pytest.raises(LimitExceededError):
        is_generating(list(standard_generators_ptn(2).values()), 9, limit=5)


def test_trivial_congruences(wreath_22):
    assert identity_congruence(wreath_22).class_count == wreath_22.size
    universal = universal_congruence(wreath_22)
    assert universal.class_count == 1
    assert universal.is_compatible()


def test_labels_are_smallest_indices(wreath_22):
    congruence = Congruence(wreath_22)
    congruence.union(5, 3)
    congruence.union(3, 9)
    labels = congruence.labels()
    assert labels[0] == 0
    assert labels[5] == labels[9] == 3
    assert congruence.classes()[3] == [3, 5, 9]
    assert congruence.class_count_within([3, 5, 9, 0]) == 2


def test_an_arbitrary_merge_is_not_compatible(alphabet_22, wreath_22):
    congruence = Congruence(wreath_22)
    congruence.union(0, wreath_22.index_of(alphabet_22['sigma']))
    assert not congruence.is_compatible()


def test_kernel_equals_single_pair_congruence_at_2_2(wreath_22):
    kernel = kernel_congruence(wreath_22)
    pair = single_pair_congruence(wreath_22)
    assert kernel.class_count == 289
    assert congruences_equal(kernel, pair)
    assert kernel.is_compatible()
    assert set(canonical_forms_per_class(wreath_22, kernel).values()) == {1}
    assert tail_universal_check(wreath_22, pair)


@pytest.mark.parametrize('n, m', SLOW_DIMS)
def test_kernel_equals_single_pair_congruence(n, m):
    five = build_named_generators(n, m).restrict(FIVE_SYMBOLS)
    em = closure(five.elements(), FIVE_SYMBOLS)
    kernel = kernel_congruence(em)
    assert kernel.class_count == order_formula(n, m)
    assert congruences_equal(kernel, single_pair_congruence(em))
    assert set(canonical_forms_per_class(em, kernel).values()) == {1}


def test_generating_pair_is_in_the_kernel():
    a, b = generating_pair(2, 3)
    assert a != b
    assert phi(a) == phi(b)
    assert a == embed_slot(1, a.components[0], 3)


def test_pair_closure_of_an_identity_pair_is_trivial(wreath_22):
    congruence = congruence_from_pairs(wreath_22, [(wreath_22.elements[4], wreath_22.elements[4])])
    assert congruence.class_count == wreath_22.size


def test_more_pairs_give_a_coarser_congruence(wreath_22):
    pair = generating_pair(2, 2)
    finer = congruence_from_pairs(wreath_22, [pair])
    extra = (wreath_22.elements[3], wreath_22.elements[7])
    coarser = congruence_from_pairs(wreath_22, [pair, extra])
    assert coarser.class_count <= finer.class_count
    for i, label in enumerate(finer.labels()):
        assert coarser.same_class(i, int(label))
    kernel = kernel_congruence(wreath_22)
    assert all(kernel.same_class(i, int(label)) for i, label in enumerate(finer.labels()))


def test_kernel_needs_wreath_elements(block_22):
    with pytest.raises(InvalidElementError):
        kernel_congruence(block_22)


def test_congruences_on_different_monoids(wreath_22):
    other = closure(wreath_22.generators, FIVE_SYMBOLS)
    with pytest.raises(CarrierMismatchError):
        congruences_equal(Congruence(wreath_22), Congruence(other))
