"""
Monoid enumeration and congruences
==================================
Breadth-first closure of a generating list with right and left Cayley edges,
and union-find congruences closed under translation by the generators.
"""

import logging
from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from block_monoid import phi
from config import ENUMERATION_LIMIT, PROGRESS_EVERY
from generators import Word
from transform_core import PartialMap, standard_generators_tn
from utils import CarrierMismatchError, DimensionMismatchError, InvalidElementError, LimitExceededError
from wreath import WreathElement, canonical_form, embed_slot, embed_tail

logger = logging.getLogger(__name__)


@dataclass
class EnumeratedMonoid:
    """Elements in BFS order (element 0 is the identity) with Cayley edges."""
    elements: List[object]
    index: Dict[bytes, int]
    generators: List[object]
    generator_names: Tuple[str, ...]
    right: np.ndarray
    left: np.ndarray
    parent: List[int] = field(repr=False)
    letter: List[int] = field(repr=False)

    @property
    def size(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, element) -> bool:
        return element.key in self.index

    def index_of(self, element) -> int:
        try:
            return self.index[element.key]
        except KeyError:
            raise InvalidElementError(f"{element} is not in the enumerated monoid") from None

    def word_indices(self, i: int) -> Tuple[int, ...]:
        """Generator indices of the first-found word for element i."""
        letters = []
        while i > 0:
            letters.append(self.letter[i])
            i = self.parent[i]
        return tuple(reversed(letters))

    def word(self, i: int) -> Word:
        return Word.of(*(self.generator_names[g] for g in self.word_indices(i)))


def closure(generators: Sequence[object], names: Optional[Sequence[str]] = None,
            limit: int = ENUMERATION_LIMIT) -> EnumeratedMonoid:
    """The submonoid generated by the list, identity included, in BFS order."""
    generators = list(generators)
    if not generators:
        raise InvalidElementError("closure needs at least one generator")
    names = tuple(names) if names is not None else tuple(f"g{k}" for k in range(len(generators)))
    if len(names) != len(generators):
        raise InvalidElementError(f"{len(names)} names for {len(generators)} generators")
    identity = generators[0].identity_like()
    for gen in generators[1:]:
        if gen.identity_like().key != identity.key:
            raise DimensionMismatchError("generators of different dimensions")

    elements = [identity]
    index = {identity.key: 0}
    parent = [-1]
    letter = [-1]
    right_rows = []
    position = 0
    while position < len(elements):
        x = elements[position]
        row = []
        for g, gen in enumerate(generators):
            y = x * gen
            j = index.get(y.key)
            if j is None:
                if len(elements) >= limit:
                    logger.warning(f"Closure stopped at {len(elements)} elements")
                    raise LimitExceededError("enumeration", limit)
                j = len(elements)
                elements.append(y)
                index[y.key] = j
                parent.append(position)
                letter.append(g)
                if j % PROGRESS_EVERY == 0:
                    logger.info(f"Closure reached {j} elements")
            row.append(j)
        right_rows.append(row)
        position += 1

    left_rows = [[index[(gen * x).key] for gen in generators] for x in elements]
    logger.info(f"Closure complete: {len(elements)} elements over {len(generators)} generators")
    return EnumeratedMonoid(
        elements=elements,
        index=index,
        generators=generators,
        generator_names=names,
        right=np.array(right_rows, dtype=np.int64),
        left=np.array(left_rows, dtype=np.int64),
        parent=parent,
        letter=letter,
    )


def is_generating(generators: Sequence[object], expected_order: int,
                  limit: int = ENUMERATION_LIMIT) -> bool:
    """True iff the closure of the generators has exactly expected_order elements."""
    if expected_order > limit:
        raise LimitExceededError("enumeration", limit)
    try:
        return closure(generators, limit=expected_order + 1).size == expected_order
    except LimitExceededError:
        return False


class Congruence:
    """A partition of element indices, stored as union-find with union by size."""

    def __init__(self, monoid: EnumeratedMonoid):
        self.monoid = monoid
        self._parent = list(range(monoid.size))
        self._size = [1] * monoid.size
        self._count = monoid.size

    def find(self, i: int) -> int:
        root = i
        while self._parent[root] != root:
            root = self._parent[root]
        while self._parent[i] != root:
            self._parent[i], i = root, self._parent[i]
        return root

    def union(self, i: int, j: int) -> bool:
        a, b = self.find(i), self.find(j)
        if a == b:
            return False
        if self._size[a] < self._size[b]:
            a, b = b, a
        self._parent[b] = a
        self._size[a] += self._size[b]
        self._count -= 1
        return True

    def same_class(self, i: int, j: int) -> bool:
        return self.find(i) == self.find(j)

    @property
    def class_count(self) -> int:
        return self._count

    def labels(self) -> np.ndarray:
        """Each index mapped to the smallest index of its class."""
        roots = [self.find(i) for i in range(self.monoid.size)]
        smallest: Dict[int, int] = {}
        for i, root in enumerate(roots):
            smallest.setdefault(root, i)
        return np.array([smallest[root] for root in roots], dtype=np.int64)

    def classes(self) -> List[List[int]]:
        groups = defaultdict(list)
        for i, label in enumerate(self.labels()):
            groups[int(label)].append(i)
        return [groups[k] for k in sorted(groups)]

    def class_count_within(self, indices: Iterable[int]) -> int:
        return len({self.find(i) for i in indices})

    def is_compatible(self) -> bool:
        """Closed under translation by every generator on both sides."""
        labels = self.labels()
        class_total = np.unique(labels).size
        for edges in (self.monoid.right, self.monoid.left):
            for g in range(edges.shape[1]):
                image = labels[edges[:, g]]
                if np.unique(np.stack([labels, image]), axis=1).shape[1] != class_total:
                    return False
        return True


def identity_congruence(em: EnumeratedMonoid) -> Congruence:
    return Congruence(em)


def universal_congruence(em: EnumeratedMonoid) -> Congruence:
    congruence = Congruence(em)
    for i in range(1, em.size):
        congruence.union(0, i)
    return congruence


def congruence_from_pairs(em: EnumeratedMonoid, pairs: Sequence[Tuple[object, object]]) -> Congruence:
    """The smallest congruence containing the pairs."""
    congruence = Congruence(em)
    right = em.right.tolist()
    left = em.left.tolist()
    generator_count = len(em.generators)
    queue = deque((em.index_of(a), em.index_of(b)) for a, b in pairs)
    merges = 0
    while queue:
        x, y = queue.popleft()
        if not congruence.union(x, y):
            continue
        merges += 1
        if merges % PROGRESS_EVERY == 0:
            logger.info(f"Congruence closure: {merges} merges, {congruence.class_count} classes")
        for g in range(generator_count):
            queue.append((right[x][g], right[y][g]))
            queue.append((left[x][g], left[y][g]))
    logger.info(f"Congruence closure complete: {congruence.class_count} classes")
    return congruence


def _require_wreath(em: EnumeratedMonoid):
    if not isinstance(em.elements[0], WreathElement):
        raise InvalidElementError("kernel classes are defined on wreath product elements")


def kernel_congruence(em: EnumeratedMonoid) -> Congruence:
    """Partition of a wreath submonoid by phi-image."""
    _require_wreath(em)
    congruence = Congruence(em)
    first: Dict[bytes, int] = {}
    for i, x in enumerate(em.elements):
        j = first.setdefault(phi(x).key, i)
        if j != i:
            congruence.union(j, i)
    return congruence


def canonical_forms_per_class(em: EnumeratedMonoid, congruence: Congruence) -> Dict[int, int]:
    """For each class (by smallest index), how many distinct canonical forms it holds."""
    _require_wreath(em)
    forms = defaultdict(set)
    for i, label in enumerate(congruence.labels()):
        forms[int(label)].add(canonical_form(em.elements[i]).key)
    return {label: len(keys) for label, keys in forms.items()}


def congruences_equal(a: Congruence, b: Congruence) -> bool:
    if a.monoid is not b.monoid:
        raise CarrierMismatchError("congruences live on different enumerated monoids")
    return bool(np.array_equal(a.labels(), b.labels()))


def generating_pair(n: int, m: int) -> Tuple[WreathElement, WreathElement]:
    """(empty map in slot 1, the same followed by tauB): one pair generating Ker phi."""
    empty_first = embed_slot(1, PartialMap.empty(n), m)
    return empty_first, empty_first * embed_tail(standard_generators_tn(m)['tau'], n)


def single_pair_congruence(em: EnumeratedMonoid) -> Congruence:
    _require_wreath(em)
    n, m = em.elements[0].dims
    return congruence_from_pairs(em, [generating_pair(n, m)])


def tail_universal_check(em: EnumeratedMonoid, congruence: Congruence) -> bool:
    """All elements whose components are all empty share one class."""
    _require_wreath(em)
    indices = [i for i, x in enumerate(em.elements) if all(c.is_empty for c in x.components)]
    return bool(indices) and congruence.class_count_within(indices) == 1
