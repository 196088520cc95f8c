"""
Presentations of PT_n wr T_m and PT_{n x m}
===========================================
Relation sets over the seven generators pi, rho, tau, sigma, piB, rhoB, tauB
(and, after substituting the xi-words, over x1, x2, tau, sigma, tauB), checks
by evaluation in a concrete monoid, and word-graph enumeration of the monoid
a presentation defines.

Presentation files are line based: ``lhs = rhs`` per line in the word grammar,
``1`` for the empty word, ``#`` comments. A comment that is exactly one of the
provenance labels (``# R_P``) labels the relations that follow it.
"""

import logging
import os
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from config import QUOTIENT_NODE_LIMIT
from enumeration import EnumeratedMonoid, closure
from generators import (
    SLOT_SYMBOLS, TAIL_SYMBOLS, FIVE_SYMBOLS, Alphabet, Word, eval_word,
    format_word, parse_word, slot_word, xi_words,
)
from transform_core import standard_generators_ptn, standard_generators_tn
from utils import FileUtils, InvalidElementError, LimitExceededError, ParseError
from word_graph import WordGraph

logger = logging.getLogger(__name__)

PROVENANCE_LABELS = ('R_P', 'R_T', 'R1', 'R2', 'R3', 'extra', 'user')
SEVEN_SYMBOLS = SLOT_SYMBOLS + TAIL_SYMBOLS


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word
    label: str = 'user'

    def substitute(self, mapping: Dict[str, Word]) -> 'Relation':
        return Relation(self.lhs.substitute(mapping), self.rhs.substitute(mapping), self.label)

    def symbols(self) -> set:
        return self.lhs.symbols() | self.rhs.symbols()

    def __str__(self) -> str:
        return f"{format_word(self.lhs)} = {format_word(self.rhs)}"


@dataclass
class Presentation:
    """An alphabet of symbols and a list of relations over it."""
    symbols: Tuple[str, ...]
    relations: List[Relation] = field(default_factory=list)

    def __post_init__(self):
        self.symbols = tuple(self.symbols)
        if len(set(self.symbols)) != len(self.symbols):
            raise InvalidElementError(f"duplicate symbols in {self.symbols}")
        for relation in self.relations:
            self._check(relation)

    def _check(self, relation: Relation):
        stray = relation.symbols() - set(self.symbols)
        if stray:
            raise InvalidElementError(f"relation '{relation}' uses symbols outside the alphabet: {sorted(stray)}")

    def extend(self, relations: Iterable[Relation]) -> 'Presentation':
        return Presentation(self.symbols, self.relations + list(relations))

    def labels(self) -> Dict[str, int]:
        counts: Dict[str, int] = {}
        for relation in self.relations:
            counts[relation.label] = counts.get(relation.label, 0) + 1
        return counts


@dataclass
class RelationCheck:
    relation: Relation
    holds: bool
    lhs_value: Optional[object] = None
    rhs_value: Optional[object] = None


@dataclass
class RelationReport:
    checks: List[RelationCheck]

    @property
    def passed(self) -> bool:
        return all(check.holds for check in self.checks)

    @property
    def failures(self) -> List[RelationCheck]:
        return [check for check in self.checks if not check.holds]

    def __len__(self) -> int:
        return len(self.checks)


def _check_m(m: int):
    if m < 2:
        raise InvalidElementError(f"relation sets need m >= 2, got {m}")


def _rho_bar(k: int) -> Word:
    return Word.symbol('rhoB', k)


def build_R1(m: int) -> List[Relation]:
    """Generators in different slots commute: u_j v_k = v_k u_j for j < k."""
    _check_m(m)
    relations = []
    for j in range(1, m + 1):
        for k in range(j + 1, m + 1):
            for u in SLOT_SYMBOLS:
                for v in SLOT_SYMBOLS:
                    lhs = _rho_bar(m - j + 1) * Word.symbol(u) * _rho_bar(m + j - k) * Word.symbol(v) * _rho_bar(k - 1)
                    rhs = _rho_bar(m - k + 1) * Word.symbol(v) * _rho_bar(m + k - j) * Word.symbol(u) * _rho_bar(j - 1)
                    relations.append(Relation(lhs, rhs, 'R1'))
    return relations


def build_R2(m: int) -> List[Relation]:
    """piB swaps slots 1 and 2 and commutes with slots 3..m."""
    _check_m(m)
    pi_bar = Word.symbol('piB')
    relations = [Relation(pi_bar * slot_word(2, u, m), Word.symbol(u) * pi_bar, 'R2') for u in SLOT_SYMBOLS]
    for j in range(3, m + 1):
        for u in SLOT_SYMBOLS:
            relations.append(Relation(pi_bar * slot_word(j, u, m), slot_word(j, u, m) * pi_bar, 'R2'))
    return relations


def build_R3(m: int) -> List[Relation]:
    """tauB kills slot 1, copies slot 2 into slots 1 and 2, commutes with slots 3..m."""
    _check_m(m)
    tau_bar = Word.symbol('tauB')
    relations = [Relation(tau_bar * Word.symbol(u), tau_bar, 'R3') for u in SLOT_SYMBOLS]
    for u in SLOT_SYMBOLS:
        relations.append(Relation(tau_bar * slot_word(2, u, m),
                                  Word.symbol(u) * slot_word(2, u, m) * tau_bar, 'R3'))
    for j in range(3, m + 1):
        for u in SLOT_SYMBOLS:
            relations.append(Relation(tau_bar * slot_word(j, u, m), slot_word(j, u, m) * tau_bar, 'R3'))
    return relations


def extra_relation(n: int) -> Relation:
    """(rho sigma)^n = (rho sigma)^n tauB: true in PT_{n x m}, false in the wreath product."""
    if n < 2:
        raise InvalidElementError(f"extra relation needs n >= 2, got {n}")
    killer = Word.of('rho', 'sigma') ** n
    return Relation(killer, killer * Word.symbol('tauB'), 'extra')


def substitute(relations: Sequence[Relation], mapping: Dict[str, Word]) -> List[Relation]:
    return [relation.substitute(mapping) for relation in relations]


def xi_substitution(n: int, m: int) -> Dict[str, Word]:
    return xi_words(n, m)


def extra_relation_bar(n: int, m: int) -> Relation:
    """The extra relation with the xi-word for rho in place of rho."""
    return extra_relation(n).substitute({'rho': xi_words(n, m)['rho']})


def check_relations(alphabet: Alphabet, relations: Sequence[Relation]) -> RelationReport:
    """Evaluate both sides of every relation; failures keep the evaluated elements."""
    checks = []
    for relation in relations:
        lhs = eval_word(alphabet, relation.lhs)
        rhs = eval_word(alphabet, relation.rhs)
        if lhs == rhs:
            checks.append(RelationCheck(relation, True))
        else:
            logger.info(f"Relation fails in {alphabet.target} monoid: {relation}")
            checks.append(RelationCheck(relation, False, lhs, rhs))
    return RelationReport(checks)


def free_quotient_size(presentation: Presentation, limit: int = QUOTIENT_NODE_LIMIT) -> int:
    """Order of <X | R>; raises LimitExceededError instead of guessing."""
    letters = {symbol: k for k, symbol in enumerate(presentation.symbols)}
    relations = [
        (tuple(letters[s] for s in r.lhs.expand()), tuple(letters[s] for s in r.rhs.expand()))
        for r in presentation.relations
    ]
    logger.info(f"Enumerating <{len(letters)} generators | {len(relations)} relations>")
    return WordGraph(len(letters), relations, node_limit=limit).enumerate()


def cayley_relations(em: EnumeratedMonoid, label: str = 'user') -> List[Relation]:
    """Defining relations read off the Cayley graph: word(x) g = word(xg) off the BFS tree."""
    relations = []
    for i in range(em.size):
        for g, name in enumerate(em.generator_names):
            j = int(em.right[i, g])
            if em.parent[j] == i and em.letter[j] == g:
                continue
            relations.append(Relation(em.word(i) * Word.symbol(name), em.word(j), label))
    return relations


# R_P and R_T candidates

def candidate_rp(n: int) -> Tuple[List[Relation], str]:
    """Relations for PT_n over pi, rho, tau, sigma: the bundled file, else the Cayley graph."""
    path = FileUtils.bundled_relation_path(f"rp_{n}.rels")
    if path:
        return load_presentation(path, SLOT_SYMBOLS, default_label='R_P').relations, path
    gens = standard_generators_ptn(n)
    em = closure([gens[s] for s in SLOT_SYMBOLS], names=SLOT_SYMBOLS)
    return cayley_relations(em, 'R_P'), 'cayley'


def candidate_rt(m: int) -> Tuple[List[Relation], str]:
    """Relations for T_m over piB, rhoB, tauB: the bundled file, else the Cayley graph."""
    path = FileUtils.bundled_relation_path(f"rt_{m}.rels")
    if path:
        return load_presentation(path, TAIL_SYMBOLS, default_label='R_T').relations, path
    gens = standard_generators_tn(m)
    em = closure([gens['pi'], gens['rho'], gens['tau']], names=TAIL_SYMBOLS)
    return cayley_relations(em, 'R_T'), 'cayley'


@dataclass
class SelfCheck:
    """Enumerated order of a candidate against the order it must define."""
    expected: int
    order: Optional[int] = None  # None when the word graph hit its limit

    @property
    def holds(self) -> bool:
        return self.order == self.expected

    def __bool__(self) -> bool:
        return self.holds


def self_check(symbols: Sequence[str], relations: Sequence[Relation], expected: int,
               limit: int = QUOTIENT_NODE_LIMIT) -> SelfCheck:
    try:
        order = free_quotient_size(Presentation(tuple(symbols), list(relations)), limit)
    except LimitExceededError:
        logger.warning(f"Self-check of {len(relations)} relations hit the node limit {limit}")
        return SelfCheck(expected)
    return SelfCheck(expected, order)


def self_check_rp(relations: Sequence[Relation], n: int, limit: int = QUOTIENT_NODE_LIMIT) -> SelfCheck:
    return self_check(SLOT_SYMBOLS, relations, (n + 1) ** n, limit)


def self_check_rt(relations: Sequence[Relation], m: int, limit: int = QUOTIENT_NODE_LIMIT) -> SelfCheck:
    return self_check(TAIL_SYMBOLS, relations, m ** m, limit)


def wreath_presentation(m: int, rp: Sequence[Relation], rt: Sequence[Relation],
                        n: Optional[int] = None, with_extra: bool = False) -> Presentation:
    """R_P, R_T, R1, R2, R3 over the seven generators; the extra relation for PT_{n x m}."""
    presentation = Presentation(SEVEN_SYMBOLS, list(rp) + list(rt) + build_R1(m) + build_R2(m) + build_R3(m))
    if not with_extra:
        return presentation
    if n is None:
        raise InvalidElementError("the extra relation needs n")
    return presentation.extend([extra_relation(n)])


def xi_presentation(n: int, m: int, rp: Sequence[Relation], rt: Sequence[Relation],
                    with_extra: bool = False) -> Presentation:
    """The same relations over x1, x2, tau, sigma, tauB via the xi-words."""
    seven = wreath_presentation(m, rp, rt)
    presentation = Presentation(FIVE_SYMBOLS, substitute(seven.relations, xi_substitution(n, m)))
    return presentation.extend([extra_relation_bar(n, m)]) if with_extra else presentation


def eqt2_discrepancy(m: int) -> List[Tuple[Relation, Relation]]:
    """The two misprinted tauB relations, each paired with its corrected form.

    Printed: tauB pi_2 = pi_1 pi_1 tauB and tauB sigma_1 = sigma_1 sigma_2 tauB.
    """
    _check_m(m)
    tau_bar = Word.symbol('tauB')
    pairs = []
    for u, printed_lhs, printed_rhs in (
        ('pi', tau_bar * slot_word(2, 'pi', m), Word.of('pi', 'pi') * tau_bar),
        ('sigma', tau_bar * Word.symbol('sigma'), Word.symbol('sigma') * slot_word(2, 'sigma', m) * tau_bar),
    ):
        printed = Relation(printed_lhs, printed_rhs, 'user')
        corrected = Relation(tau_bar * slot_word(2, u, m), Word.symbol(u) * slot_word(2, u, m) * tau_bar, 'R3')
        pairs.append((printed, corrected))
    return pairs


# File codec

def parse_presentation(text: str, symbols: Sequence[str], default_label: str = 'user') -> Presentation:
    label = default_label
    relations = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith('#'):
            comment = line[1:].strip()
            if comment in PROVENANCE_LABELS:
                label = comment
            continue
        if line.count('=') != 1:
            raise ParseError(f"line {number}: expected exactly one '='", raw)
        lhs, rhs = line.split('=')
        relations.append(Relation(parse_word(lhs), parse_word(rhs), label))
    try:
        return Presentation(tuple(symbols), relations)
    except InvalidElementError as e:
        raise ParseError(str(e)) from e


def load_presentation(path: str, symbols: Sequence[str], default_label: str = 'user') -> Presentation:
    with open(path, 'r', encoding='utf-8') as handle:
        presentation = parse_presentation(handle.read(), symbols, default_label)
    logger.info(f"Loaded {len(presentation.relations)} relations from {os.path.basename(path)}")
    return presentation


def dump_presentation(presentation: Presentation) -> str:
    lines = [f"# symbols: {' '.join(presentation.symbols)}"]
    label = None
    for relation in presentation.relations:
        if relation.label != label:
            label = relation.label
            lines.append(f"# {label}")
        lines.append(str(relation))
    return '\n'.join(lines) + '\n'
