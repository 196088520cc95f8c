"""
Named generators, words and alphabets
=====================================
Words keep exponents symbolic so the long xi-words stay small; evaluation
raises each factor by repeated squaring.

Word grammar: symbols separated by spaces, ``^k`` for exponents, parentheses
for grouping, ``1`` for the empty word, e.g. ``( x1 x2^3 )^4 x1``.
"""

import logging
import re
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple, Union

from block_monoid import BlockMap, phi
from transform_core import PartialMap, power, standard_generators_ptn, standard_generators_tn
from utils import DimensionMismatchError, InvalidElementError, ParseError, UnboundSymbolError
from wreath import WreathElement, embed_slot, embed_tail

logger = logging.getLogger(__name__)

SLOT_SYMBOLS = ('pi', 'rho', 'tau', 'sigma')
TAIL_SYMBOLS = ('piB', 'rhoB', 'tauB')
FIVE_SYMBOLS = ('x1', 'x2', 'tau', 'tauB', 'sigma')

_TOKEN = re.compile(r'\s*(?:(?P<open>\()|(?P<close>\))|(?P<caret>\^)|(?P<int>\d+)'
                    r'|(?P<sym>[A-Za-z_][A-Za-z0-9_]*))')


@dataclass(frozen=True)
class Word:
    """A word over named symbols; factors are (symbol or subword, exponent)."""
    factors: Tuple[Tuple[Union[str, 'Word'], int], ...] = ()

    @classmethod
    def symbol(cls, name: str, exponent: int = 1) -> 'Word':
        return cls(((name, exponent),)) if exponent else cls()

    @classmethod
    def of(cls, *names: str) -> 'Word':
        return cls(tuple((name, 1) for name in names))

    def __mul__(self, other: 'Word') -> 'Word':
        return Word(self.factors + other.factors)

    def __pow__(self, exponent: int) -> 'Word':
        if exponent < 0:
            raise ValueError(f"word exponent must be nonnegative, got {exponent}")
        if exponent == 0 or not self.factors:
            return Word()
        if exponent == 1:
            return self
        if len(self.factors) == 1:
            base, inner = self.factors[0]
            return Word(((base, inner * exponent),))
        return Word(((self, exponent),))

    def __len__(self) -> int:
        return sum(exp * (1 if isinstance(base, str) else len(base)) for base, exp in self.factors)

    @property
    def is_empty(self) -> bool:
        return len(self) == 0

    def symbols(self) -> set:
        found = set()
        for base, exp in self.factors:
            if exp == 0:
                continue
            if isinstance(base, str):
                found.add(base)
            else:
                found |= base.symbols()
        return found

    def expand(self) -> Tuple[str, ...]:
        """The flat letter sequence."""
        letters: List[str] = []
        for base, exp in self.factors:
            if isinstance(base, str):
                letters.extend([base] * exp)
            else:
                letters.extend(base.expand() * exp)
        return tuple(letters)

    def substitute(self, mapping: Dict[str, 'Word']) -> 'Word':
        factors = []
        for base, exp in self.factors:
            if isinstance(base, str):
                factors.append((mapping[base], exp) if base in mapping else (base, exp))
            else:
                factors.append((base.substitute(mapping), exp))
        return Word(tuple(factors))

    def __str__(self) -> str:
        return format_word(self)


def format_word(word: Word) -> str:
    parts = []
    for base, exp in word.factors:
        if exp == 0:
            continue
        text = base if isinstance(base, str) else f"( {format_word(base)} )"
        parts.append(text if exp == 1 else f"{text}^{exp}")
    return ' '.join(parts) if parts else '1'


def parse_word(text: str) -> Word:
    tokens = _tokenize(text)
    word, position = _parse_sequence(tokens, 0, text)
    if position != len(tokens):
        raise ParseError("unbalanced ')'", text)
    return word


def _tokenize(text: str) -> List[Tuple[str, str]]:
    tokens = []
    position = 0
    stripped = text.rstrip()
    while position < len(stripped):
        match = _TOKEN.match(stripped, position)
        if not match:
            raise ParseError(f"unexpected character at {position}", text)
        tokens.append((match.lastgroup, match.group(match.lastgroup)))
        position = match.end()
    return tokens


def _parse_sequence(tokens, position, text) -> Tuple[Word, int]:
    factors = []
    while position < len(tokens):
        kind, value = tokens[position]
        if kind == 'close':
            break
        if kind == 'open':
            base, position = _parse_sequence(tokens, position + 1, text)
            if position >= len(tokens) or tokens[position][0] != 'close':
                raise ParseError("missing ')'", text)
            position += 1
        elif kind == 'sym':
            base = value
            position += 1
        elif kind == 'int' and value == '1':
            base = Word()
            position += 1
        else:
            raise ParseError(f"unexpected token {value!r}", text)
        exponent = 1
        if position < len(tokens) and tokens[position][0] == 'caret':
            if position + 1 >= len(tokens) or tokens[position + 1][0] != 'int':
                raise ParseError("'^' must be followed by an integer", text)
            exponent = int(tokens[position + 1][1])
            position += 2
        if isinstance(base, Word):
            factors.extend((base ** exponent).factors)
        elif exponent:
            factors.append((base, exponent))
    return Word(tuple(factors)), position


class Alphabet:
    """Ordered symbol bindings into one concrete monoid (wreath or block)."""

    def __init__(self, n: int, m: int, target: str,
                 bindings: Iterable[Tuple[str, object]] = ()):
        if target not in ('wreath', 'block'):
            raise InvalidElementError(f"unknown alphabet target {target!r}")
        self.n = n
        self.m = m
        self.target = target
        self._bindings: Dict[str, object] = {}
        for name, element in bindings:
            if name in self._bindings:
                raise InvalidElementError(f"duplicate symbol {name!r}")
            if element.dims != (n, m):
                raise DimensionMismatchError(f"{name} has dims {element.dims}, expected {(n, m)}")
            self._bindings[name] = element

    @property
    def symbols(self) -> Tuple[str, ...]:
        return tuple(self._bindings)

    def __contains__(self, name: str) -> bool:
        return name in self._bindings

    def __getitem__(self, name: str):
        try:
            return self._bindings[name]
        except KeyError:
            raise UnboundSymbolError(name) from None

    def items(self):
        return self._bindings.items()

    def elements(self, names: Optional[Sequence[str]] = None) -> List[object]:
        return [self[name] for name in (names if names is not None else self.symbols)]

    def identity(self):
        if self.target == 'wreath':
            return WreathElement.identity(self.n, self.m)
        return BlockMap.identity(self.n, self.m)

    def restrict(self, names: Sequence[str]) -> 'Alphabet':
        return Alphabet(self.n, self.m, self.target, [(name, self[name]) for name in names])

    def to_block(self) -> 'Alphabet':
        """The same symbols pushed through phi into PT_{n x m}."""
        if self.target != 'wreath':
            raise InvalidElementError("only a wreath alphabet can be mapped through phi")
        return Alphabet(self.n, self.m, 'block', [(name, phi(x)) for name, x in self.items()])

    def __repr__(self) -> str:
        return f"Alphabet(n={self.n}, m={self.m}, target={self.target!r}, symbols={list(self.symbols)})"


def eval_word(alphabet: Alphabet, word: Word):
    """Left-to-right product of the bound elements; the empty word is the identity."""
    missing = sorted(word.symbols() - set(alphabet.symbols))
    if missing:
        raise UnboundSymbolError(missing[0])
    return _eval(alphabet, word)


def _eval(alphabet: Alphabet, word: Word):
    result = alphabet.identity()
    for base, exponent in word.factors:
        if exponent == 0:
            continue
        value = alphabet[base] if isinstance(base, str) else _eval(alphabet, base)
        result = result * power(value, exponent)
    return result


def _check_dims(n: int, m: int):
    if n < 2 or m < 2:
        raise InvalidElementError(f"named generators need n, m >= 2, got ({n}, {m})")


def xi_generators(n: int, m: int) -> Tuple[WreathElement, WreathElement]:
    """The two generators of the unit group S_n wr S_m; xi_1 depends on parity."""
    _check_dims(n, m)
    swap = PartialMap.cycle(n, [1, 2])
    if n % 2 == 0 and m % 2 == 0:
        outer = PartialMap.cycle(m, range(2, m + 1))
    else:
        outer = PartialMap.cycle(m, range(1, m + 1))
    xi1 = embed_slot(2, swap, m) * embed_tail(outer, n)
    xi2 = embed_slot(1, PartialMap.cycle(n, range(1, n + 1)), m) * embed_tail(PartialMap.cycle(m, [1, 2]), n)
    return xi1, xi2


def build_named_generators(n: int, m: int) -> Alphabet:
    """pi, rho, tau, sigma in slot 1; piB, rhoB, tauB on the tail; x1, x2."""
    _check_dims(n, m)
    slot = standard_generators_ptn(n)
    tail = standard_generators_tn(m)
    xi1, xi2 = xi_generators(n, m)
    bindings = [(name, embed_slot(1, slot[name], m)) for name in SLOT_SYMBOLS]
    bindings += [(name + 'B', embed_tail(tail[name], n)) for name in ('pi', 'rho', 'tau')]
    bindings += [('x1', xi1), ('x2', xi2)]
    logger.debug(f"Built named generators for (n, m) = ({n}, {m})")
    return Alphabet(n, m, 'wreath', bindings)


def xi_words(n: int, m: int) -> Dict[str, Word]:
    """Words in x1, x2 equal to pi, rho, piB and rhoB."""
    x1 = Word.symbol('x1')
    x2 = Word.symbol('x2')
    if n % 2 == 0 and m % 2 == 0:
        core = (x1 ** (m - 1) * x2 ** 2) ** ((m - 2) * (n - 1) ** 2) * \
            (x1 * x2 ** 2) ** ((m - 1) * (n * n - n - 1))
        return {
            'pi': core * (x1 * x2) ** m,
            'rho': core ** (n - 1),
            'piB': x2 ** (2 * n - 1) * core ** (n - 1),
            'rhoB': x2 ** (2 * n - 1) * core ** n * (x1 * x2) ** m * x2 ** (2 * n - 1) * x1 * x2,
        }
    a = x1 * x2 ** (2 * n - 1)
    b = x1 ** (m + 1) * x2 ** (2 * n - 1)
    return {
        'pi': a ** ((m - 1) * n) * b ** ((m - 1) * (n - 1)) * x1 ** m,
        'rho': a ** (n - 1) * b ** ((m - 2) * (n - 1)),
        'piB': x1 ** (2 * m - 1) * a ** n * b ** ((m - 2) * (n - 1)),
        'rhoB': x1 ** (2 * m - 1) * a ** ((m - 1) * n) * b ** ((m - 1) * (n - 1)) * x1 ** (m + 2),
    }


def slot_word(j: int, u: str, m: int) -> Word:
    """rhoB^(m-j+1) u rhoB^(j-1): the generator u moved into slot j."""
    if not 1 <= j <= m:
        raise DimensionMismatchError(f"slot {j} out of range 1..{m}")
    rho_bar = Word.symbol('rhoB')
    return rho_bar ** (m - j + 1) * Word.symbol(u) * rho_bar ** (j - 1)
