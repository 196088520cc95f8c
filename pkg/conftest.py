import random

import pytest

from config import RANDOM_SEED
from enumeration import closure
from generators import FIVE_SYMBOLS, build_named_generators


@pytest.fixture
def rng():
    return random.Random(RANDOM_SEED)


@pytest.fixture(scope='session')
def alphabet_22():
    return build_named_generators(2, 2)


@pytest.fixture(scope='session')
def wreath_22(alphabet_22):
    """PT_2 wr T_2 enumerated from the five generators."""
    return closure(alphabet_22.elements(FIVE_SYMBOLS), FIVE_SYMBOLS)


@pytest.fixture(scope='session')
def block_22(alphabet_22):
    block = alphabet_22.restrict(FIVE_SYMBOLS).to_block()
    return closure(block.elements(), FIVE_SYMBOLS)
