import pytest

from block_monoid import BlockMap, parse_block, phi
from generators import (
    FIVE_SYMBOLS, Alphabet, Word, build_named_generators, eval_word, format_word,
    parse_word, slot_word, xi_generators, xi_words,
)
from transform_core import PartialMap, standard_generators_ptn
from utils import DimensionMismatchError, InvalidElementError, ParseError, UnboundSymbolError
from wreath import WreathElement, embed_slot, embed_tail


def test_parse_word_keeps_exponents_symbolic():
    word = parse_word('( x1 x2^3 )^4 x1')
    assert len(word) == 17
    assert word.expand()[:5] == ('x1', 'x2', 'x2', 'x2', 'x1')
    assert word.symbols() == {'x1', 'x2'}
    assert format_word(word) == '( x1 x2^3 )^4 x1'


def test_empty_word():
    assert parse_word('1').is_empty
    assert parse_word('  ').is_empty
    assert format_word(Word()) == '1'
    assert format_word(Word.symbol('x1', 0)) == '1'


@pytest.mark.parametrize('text', ['( x1', 'x1 )', 'x1^', 'x1 $', '^2'])
def test_parse_word_rejects_bad_text(text):
    with pytest.raises(ParseError):
        parse_word(text)


def test_word_algebra():
    w = Word.of('rho', 'sigma')
    assert (w ** 3).expand() == ('rho', 'sigma') * 3
    assert (Word.symbol('x1') ** 4).factors == (('x1', 4),)
    assert w ** 0 == Word()
    with pytest.raises(ValueError):
        w ** -1


def test_substitute():
    w = Word.of('rho', 'sigma').substitute({'rho': Word.of('x1', 'x2')})
    assert w.expand() == ('x1', 'x2', 'sigma')
    assert Word.of('tau').substitute({}) == Word.of('tau')


def test_named_generators(alphabet_22):
    slot = standard_generators_ptn(2)
    assert alphabet_22['sigma'] == embed_slot(1, slot['sigma'], 2)
    assert alphabet_22['tauB'] == embed_tail(PartialMap.from_one_based([2, 2]), 2)
    assert set(FIVE_SYMBOLS) <= set(alphabet_22.symbols)


def test_named_generators_need_two_points():
    with pytest.raises(InvalidElementError):
        build_named_generators(1, 2)


def test_eval_word(alphabet_22):
    assert eval_word(alphabet_22, parse_word('1')) == WreathElement.identity(2, 2)
    assert eval_word(alphabet_22, parse_word('pi pi')) == WreathElement.identity(2, 2)
    assert eval_word(alphabet_22, parse_word('x1 x2')) == alphabet_22['x1'] * alphabet_22['x2']


def test_eval_word_names_the_unbound_symbol(alphabet_22):
    with pytest.raises(UnboundSymbolError, match='foo'):
        eval_word(alphabet_22, parse_word('x1 foo'))


def test_alphabet_rejects_mixed_dimensions():
    with pytest.raises(DimensionMismatchError):
        Alphabet(2, 2, 'wreath', [('a', WreathElement.identity(2, 3))])
    with pytest.raises(InvalidElementError):
        Alphabet(2, 2, 'matrix')


def test_block_alphabet(alphabet_22):
    block = alphabet_22.to_block()
    assert block.target == 'block'
    assert block['tau'] == phi(alphabet_22['tau'])
    with pytest.raises(InvalidElementError):
        block.to_block()


@pytest.mark.parametrize('n', [2, 3])
def test_rho_sigma_power_is_empty_in_slot_one(n):
    alphabet = build_named_generators(n, 2)
    power = eval_word(alphabet, Word.of('rho', 'sigma') ** n)
    assert power == embed_slot(1, PartialMap.empty(n), 2)


def test_rho_sigma_power_in_the_block_monoid(alphabet_22):
    value = eval_word(alphabet_22.to_block(), parse_word('( rho sigma )^2'))
    assert value == parse_block('n=2 m=2 [-,-,3,4]')
    assert isinstance(value, BlockMap)


def test_xi_generators_depend_on_parity():
    xi1, _ = xi_generators(2, 2)
    assert xi1.tail == PartialMap.identity(2)
    xi1, xi2 = xi_generators(3, 2)
    assert xi1.tail == PartialMap.cycle(2, [1, 2])
    assert xi2.components[0] == PartialMap.cycle(3, [1, 2, 3])
    assert all(c.is_permutation for c in xi1.components + xi2.components)


@pytest.mark.parametrize('n, m', [(2, 2), (2, 4), (4, 2), (2, 3), (3, 2), (3, 3)])
def test_xi_words_evaluate_to_the_named_generators(n, m):
    alphabet = build_named_generators(n, m)
    for name, word in xi_words(n, m).items():
        assert eval_word(alphabet, word) == alphabet[name], name


@pytest.mark.parametrize('j', [1, 2, 3])
def test_slot_word_moves_a_generator_into_slot_j(j):
    alphabet = build_named_generators(2, 3)
    sigma = standard_generators_ptn(2)['sigma']
    assert eval_word(alphabet, slot_word(j, 'sigma', 3)) == embed_slot(j, sigma, 3)


def test_slot_word_range():
    with pytest.raises(DimensionMismatchError):
        slot_word(0, 'pi', 2)


@pytest.mark.parametrize('n, m', [(2, 2), (3, 2), (2, 3)])
def test_phi_commutes_with_evaluation(rng, n, m):
    wreath = build_named_generators(n, m)
    block = wreath.to_block()
    for _ in range(100):
        word = Word.of(*(rng.choice(wreath.symbols) for _ in range(rng.randint(0, 12))))
        assert phi(eval_word(wreath, word)) == eval_word(block, word), format_word(word)
    for word in xi_words(n, m).values():
        assert phi(eval_word(wreath, word)) == eval_word(block, word)
