"""
The monoid PT_{n x m}
=====================
Partial transformations of the nm points (i, j), i in 1..n, j in 1..m, that
keep points of one block inside one block. Points are stored flat and
column-major by block: (i, j) -> i + (j - 1) n.
"""

import logging
import re
from typing import Optional, Tuple

import numpy as np
import pandas as pd

from config import BRUTE_FORCE_MAX_POINTS, DEBUG
from transform_core import MAX_DEGREE, PartialMap, UNDEF, format_partial_map, parse_partial_map, power
from utils import DimensionMismatchError, InvalidElementError, LimitExceededError, ParseError
from wreath import WreathElement

logger = logging.getLogger(__name__)

_BLOCK_PATTERN = re.compile(r'^\s*n\s*=\s*(\d+)\s+m\s*=\s*(\d+)\s+(\[.*\])\s*$', re.DOTALL)


class BlockMap:
    """An E-preserving partial transformation of the n x m point set."""

    __slots__ = ('n', 'm', 'flat', '_key')

    def __init__(self, n: int, m: int, flat: PartialMap):
        if flat.degree != n * m:
            raise DimensionMismatchError(f"flat map of degree {flat.degree} is not on {n}x{m} points")
        if not preserves_partition(flat, n, m):
            raise InvalidElementError(f"{format_partial_map(flat)} does not preserve the {n}x{m} partition")
        self._set(n, m, flat)

    def _set(self, n, m, flat):
        self.n = n
        self.m = m
        self.flat = flat
        self._key = bytes((n % 256, m % 256)) + flat.key

    @classmethod
    def _wrap(cls, n, m, flat) -> 'BlockMap':
        obj = cls.__new__(cls)
        obj._set(n, m, flat)
        return obj

    @classmethod
    def identity(cls, n: int, m: int) -> 'BlockMap':
        return cls._wrap(n, m, PartialMap.identity(n * m))

    @property
    def key(self) -> bytes:
        return self._key

    @property
    def dims(self):
        return self.n, self.m

    def identity_like(self) -> 'BlockMap':
        return BlockMap.identity(self.n, self.m)

    def __mul__(self, other: 'BlockMap') -> 'BlockMap':
        if self.dims != other.dims:
            raise DimensionMismatchError(f"cannot multiply {self.dims} by {other.dims}")
        product = BlockMap._wrap(self.n, self.m, self.flat * other.flat)
        if DEBUG and not preserves_partition(product.flat, self.n, self.m):
            raise InvalidElementError(f"product left PT_{{{self.n}x{self.m}}}: {product}")
        return product

    def __pow__(self, exponent: int) -> 'BlockMap':
        return power(self, exponent)

    def __eq__(self, other) -> bool:
        return isinstance(other, BlockMap) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __call__(self, point: Tuple[int, int]) -> Optional[Tuple[int, int]]:
        """Image of the 1-based pair (i, j), or None when undefined."""
        i, j = point
        image = self.flat(i + (j - 1) * self.n)
        if image is None:
            return None
        return (image - 1) % self.n + 1, (image - 1) // self.n + 1

    def rank(self) -> int:
        return self.flat.rank()

    @property
    def is_full(self) -> bool:
        return self.flat.is_full

    def __str__(self) -> str:
        return format_block(self)

    def __repr__(self) -> str:
        return f"BlockMap('{format_block(self)}')"


def phi(x: WreathElement) -> BlockMap:
    """(i, j) is defined iff i is in the domain of component j; then (i, j) -> (i b_j, j t)."""
    n, m = x.dims
    if n * m > MAX_DEGREE:
        raise InvalidElementError(f"{n}x{m} points exceed the degree cap {MAX_DEGREE}")
    components = np.stack([c.images for c in x.components])
    tail = x.tail.images.astype(components.dtype)
    flat = np.where(components != UNDEF, components + tail[:, None] * n, UNDEF)
    return BlockMap._wrap(n, m, PartialMap._wrap(flat.ravel().astype(components.dtype)))


def phi_section(b: BlockMap) -> WreathElement:
    """The unique canonical-form preimage of b under phi."""
    n, m = b.dims
    rows = b.flat.images.reshape(m, n)
    components = []
    tail = np.zeros(m, dtype=rows.dtype)
    for j, row in enumerate(rows):
        defined = row != UNDEF
        if defined.any():
            tail[j] = row[defined][0] // n
            components.append(PartialMap._wrap(np.where(defined, row % n, UNDEF).astype(rows.dtype)))
        else:
            components.append(PartialMap.empty(n))
    return WreathElement._wrap(n, m, tuple(components), PartialMap._wrap(tail))


def kernel_equivalent(x: WreathElement, y: WreathElement) -> bool:
    """phi(x) == phi(y), decided without building either image."""
    if x.dims != y.dims:
        raise DimensionMismatchError(f"cannot compare {x.dims} with {y.dims}")
    for j, (a, b) in enumerate(zip(x.components, y.components)):
        if a != b:
            return False
        if not a.is_empty and x.tail.images[j] != y.tail.images[j]:
            return False
    return True


def order_formula(n: int, m: int) -> int:
    """|PT_{n x m}| = (m (n+1)^n - m + 1)^m, exact."""
    if n < 1 or m < 1:
        raise InvalidElementError(f"order formula needs n, m >= 1, got ({n}, {m})")
    return (m * (n + 1) ** n - m + 1) ** m


def order_table(max_n: int = 5, max_m: int = 5) -> pd.DataFrame:
    """Orders of PT_m and PT_{n x m} for 2 <= n <= max_n, 1 <= m <= max_m."""
    rows = []
    for m in range(1, max_m + 1):
        row = {'m': m, '|PT_m|': (m + 1) ** m}
        for n in range(2, max_n + 1):
            row[f'|PT_{n}xm|'] = order_formula(n, m)
        rows.append(row)
    return pd.DataFrame(rows).set_index('m')


def preserves_partition(p: PartialMap, n: int, m: int) -> bool:
    """True iff the defined images of every block fall in a single block."""
    if p.degree != n * m:
        raise DimensionMismatchError(f"degree {p.degree} is not {n}x{m}")
    rows = p.images.reshape(m, n)
    for row in rows:
        targets = row[row != UNDEF] // n
        if targets.size and np.any(targets != targets[0]):
            return False
    return True


def count_partition_preserving(n: int, m: int) -> int:
    """Brute-force count of flat partial maps of degree nm that preserve the partition."""
    points = n * m
    if points > BRUTE_FORCE_MAX_POINTS:
        raise LimitExceededError("brute-force point count", BRUTE_FORCE_MAX_POINTS)
    logger.info(f"Brute-forcing {(points + 1) ** points} partial maps of degree {points}")
    grid = np.indices((points + 1,) * points).reshape(points, -1).T - 1
    target_blocks = np.where(grid >= 0, grid // n, -1)
    ok = np.ones(grid.shape[0], dtype=bool)
    for j in range(m):
        block = target_blocks[:, j * n:(j + 1) * n]
        highest = block.max(axis=1)
        lowest = np.where(block >= 0, block, m).min(axis=1)
        ok &= (highest < 0) | (highest == lowest)
    return int(ok.sum())


def block_from_pairs(n: int, m: int, mapping) -> BlockMap:
    """Build a BlockMap from a dict of 1-based pairs {(i, j): (k, l)}."""
    images = [None] * (n * m)
    for (i, j), (k, l) in mapping.items():
        images[i - 1 + (j - 1) * n] = k + (l - 1) * n
    return BlockMap(n, m, PartialMap.from_one_based(images))


# Text codec

def format_block(b: BlockMap) -> str:
    return f"n={b.n} m={b.m} {format_partial_map(b.flat)}"


def parse_block(text: str) -> BlockMap:
    """Parse ``n=<n> m=<m> [i1,...,inm]``."""
    match = _BLOCK_PATTERN.match(text)
    if not match:
        raise ParseError("expected 'n=<n> m=<m> [...]'", text)
    n, m = int(match.group(1)), int(match.group(2))
    flat = parse_partial_map(match.group(3))
    try:
        return BlockMap(n, m, flat)
    except (InvalidElementError, DimensionMismatchError) as e:
        raise ParseError(str(e), text) from e
