"""
Word-graph enumeration for finitely presented monoids
=====================================================
Nodes stand for words of the free monoid, node 0 for the empty word. Every
relation is traced from every node, defining missing edges on the way, and
the two endpoints are identified. Identifications propagate through a
coincidence queue; node labels form a union-find where the smaller label
survives. When the graph is complete the live nodes are the monoid elements.
"""

import logging
from typing import List, Sequence, Tuple

from config import LOOKAHEAD_THRESHOLD, PROGRESS_EVERY, QUOTIENT_NODE_LIMIT
from utils import LimitExceededError

logger = logging.getLogger(__name__)

UNDEFINED = -1
Relation = Tuple[Sequence[int], Sequence[int]]


class WordGraph:
    """Todd-Coxeter style enumeration of <X | R> with |X| = generator_count."""

    def __init__(self, generator_count: int, relations: Sequence[Relation],
                 node_limit: int = QUOTIENT_NODE_LIMIT,
                 lookahead_threshold: int = LOOKAHEAD_THRESHOLD):
        for lhs, rhs in relations:
            for letter in list(lhs) + list(rhs):
                if not 0 <= letter < generator_count:
                    raise ValueError(f"letter {letter} outside 0..{generator_count - 1}")
        self.generator_count = generator_count
        self.relations = [(tuple(lhs), tuple(rhs)) for lhs, rhs in relations if tuple(lhs) != tuple(rhs)]
        self.node_limit = node_limit
        self.lookahead_threshold = lookahead_threshold
        self._edges: List[List[int]] = []
        self._labels: List[int] = []
        self._active = 0
        self._new_node()

    @property
    def active_nodes(self) -> int:
        return self._active

    def _new_node(self) -> int:
        if self._active >= self.node_limit:
            logger.warning(f"Word graph stopped at {self._active} active nodes")
            raise LimitExceededError("word-graph node", self.node_limit)
        node = len(self._edges)
        self._edges.append([UNDEFINED] * self.generator_count)
        self._labels.append(node)
        self._active += 1
        if node and node % PROGRESS_EVERY == 0:
            logger.info(f"Word graph defined {node} nodes, {self._active} active")
        return node

    def _find(self, node: int) -> int:
        labels = self._labels
        root = node
        while labels[root] != root:
            root = labels[root]
        while labels[node] != root:
            labels[node], node = root, labels[node]
        return root

    def _target(self, node: int, letter: int) -> int:
        target = self._edges[node][letter]
        return UNDEFINED if target == UNDEFINED else self._find(target)

    def _trace_defining(self, node: int, word: Sequence[int]) -> int:
        for letter in word:
            target = self._target(node, letter)
            if target == UNDEFINED:
                target = self._new_node()
                self._edges[node][letter] = target
            node = target
        return node

    def _trace(self, node: int, word: Sequence[int]) -> int:
        for letter in word:
            node = self._target(node, letter)
            if node == UNDEFINED:
                return UNDEFINED
        return node

    def _coincidence(self, first: int, second: int):
        queue = [(first, second)]
        while queue:
            a, b = queue.pop()
            a, b = self._find(a), self._find(b)
            if a == b:
                continue
            if a > b:
                a, b = b, a
            self._labels[b] = a
            self._active -= 1
            edges_a = self._edges[a]
            for letter, target in enumerate(self._edges[b]):
                if target == UNDEFINED:
                    continue
                if edges_a[letter] == UNDEFINED:
                    edges_a[letter] = target
                else:
                    queue.append((edges_a[letter], target))

    def _lookahead(self):
        before = self._active
        for node in range(len(self._edges)):
            if self._find(node) != node:
                continue
            for lhs, rhs in self.relations:
                if self._find(node) != node:
                    break
                x = self._trace(node, lhs)
                if x == UNDEFINED:
                    continue
                y = self._trace(node, rhs)
                if y != UNDEFINED and x != y:
                    self._coincidence(x, y)
        logger.info(f"Lookahead: {before} -> {self._active} active nodes")
        if self._active > self.lookahead_threshold // 2:
            self.lookahead_threshold *= 2

    def enumerate(self) -> int:
        """Run to completion and return the number of elements."""
        node = 0
        while node < len(self._edges):
            if self._find(node) == node:
                for lhs, rhs in self.relations:
                    x = self._trace_defining(node, lhs)
                    y = self._trace_defining(node, rhs)
                    if x != y:
                        self._coincidence(x, y)
                    if self._find(node) != node:
                        break
                if self._find(node) == node:
                    for letter in range(self.generator_count):
                        if self._target(node, letter) == UNDEFINED:
                            self._edges[node][letter] = self._new_node()
            if self._active > self.lookahead_threshold:
                self._lookahead()
            node += 1
        logger.info(f"Word graph complete: {self._active} elements from {len(self._edges)} defined nodes")
        return self._active
