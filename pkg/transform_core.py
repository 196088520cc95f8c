"""
Partial transformations of {1..n}
=================================
The element arithmetic everything else builds on. Maps act on the right:
``a * b`` applies ``a`` first, then ``b``. Points are 0-based internally and
1-based in every printed or parsed form.
"""

import itertools
import re
from typing import Dict, Iterator, List, Optional, Sequence

import numpy as np

from utils import DimensionMismatchError, InvalidElementError, ParseError

UNDEF = -1
UNDEF_TOKEN = '-'
_DTYPE = np.int32
# Largest degree whose points fit the image dtype.
MAX_DEGREE = int(np.iinfo(_DTYPE).max)
_MAP_PATTERN = re.compile(r'^\s*\[(.*)\]\s*$', re.DOTALL)


def power(element, exponent: int):
    """Raise a monoid element to a nonnegative power by repeated squaring."""
    if exponent < 0:
        raise ValueError(f"exponent must be nonnegative, got {exponent}")
    result = element.identity_like()
    base = element
    while exponent:
        if exponent & 1:
            result = result * base
        exponent >>= 1
        if exponent:
            base = base * base
    return result


class PartialMap:
    """A partial transformation of {1..n}; immutable, structural equality."""

    __slots__ = ('_images', '_key')

    def __init__(self, images: Sequence[int]):
        try:
            arr = np.array(images, dtype=np.int64)
        except (OverflowError, TypeError, ValueError) as e:
            raise InvalidElementError(f"images must be integers, got {images!r}") from e
        if arr.ndim != 1 or arr.size == 0:
            raise InvalidElementError(f"images must be a nonempty flat sequence, got {images!r}")
        n = arr.size
        _check_degree(n)
        if np.any((arr < UNDEF) | (arr >= n)):
            raise InvalidElementError(f"image out of range for degree {n}: {list(images)!r}")
        self._set(arr.astype(_DTYPE))

    def _set(self, arr: np.ndarray):
        arr.setflags(write=False)
        self._images = arr
        self._key = arr.tobytes()

    @classmethod
    def _wrap(cls, arr: np.ndarray) -> 'PartialMap':
        obj = cls.__new__(cls)
        obj._set(arr)
        return obj

    # Constructors

    @classmethod
    def from_one_based(cls, images: Sequence[Optional[int]]) -> 'PartialMap':
        """Build from 1-based images, with None marking an undefined point."""
        return cls([UNDEF if i is None else int(i) - 1 for i in images])

    @classmethod
    def identity(cls, degree: int) -> 'PartialMap':
        _check_degree(degree)
        return cls._wrap(np.arange(degree, dtype=_DTYPE))

    @classmethod
    def empty(cls, degree: int) -> 'PartialMap':
        """The nowhere-defined map."""
        _check_degree(degree)
        return cls._wrap(np.full(degree, UNDEF, dtype=_DTYPE))

    @classmethod
    def cycle(cls, degree: int, points: Sequence[int]) -> 'PartialMap':
        """The cycle (p1 p2 ... pk) on 1-based points; fewer than 2 points is the identity."""
        _check_degree(degree)
        arr = np.arange(degree, dtype=_DTYPE)
        points = [int(p) for p in points]
        if len(set(points)) != len(points) or any(p < 1 or p > degree for p in points):
            raise InvalidElementError(f"bad cycle {points!r} for degree {degree}")
        if len(points) >= 2:
            for src, dst in zip(points, points[1:] + points[:1]):
                arr[src - 1] = dst - 1
        return cls._wrap(arr)

    # Element protocol shared with WreathElement and BlockMap

    @property
    def degree(self) -> int:
        return int(self._images.size)

    @property
    def images(self) -> np.ndarray:
        """Read-only 0-based image array, UNDEF where undefined."""
        return self._images

    @property
    def key(self) -> bytes:
        return self._key

    def identity_like(self) -> 'PartialMap':
        return PartialMap.identity(self.degree)

    def __mul__(self, other: 'PartialMap') -> 'PartialMap':
        return compose(self, other)

    def __pow__(self, exponent: int) -> 'PartialMap':
        return power(self, exponent)

    def __eq__(self, other) -> bool:
        return isinstance(other, PartialMap) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    # Queries (1-based)

    def __call__(self, point: int) -> Optional[int]:
        image = int(self._images[point - 1])
        return None if image == UNDEF else image + 1

    def to_one_based(self) -> List[Optional[int]]:
        return [None if i == UNDEF else int(i) + 1 for i in self._images]

    def domain(self) -> List[int]:
        return [int(i) + 1 for i in np.flatnonzero(self._images != UNDEF)]

    def image(self) -> List[int]:
        defined = self._images[self._images != UNDEF]
        return [int(i) + 1 for i in np.unique(defined)]

    def rank(self) -> int:
        return rank(self)

    @property
    def is_full(self) -> bool:
        return not bool(np.any(self._images == UNDEF))

    @property
    def is_empty(self) -> bool:
        return bool(np.all(self._images == UNDEF))

    @property
    def is_permutation(self) -> bool:
        return self.is_full and np.unique(self._images).size == self.degree

    def __str__(self) -> str:
        return format_partial_map(self)

    def __repr__(self) -> str:
        return f"PartialMap('{format_partial_map(self)}')"


def _check_degree(degree: int):
    if degree < 1:
        raise InvalidElementError(f"degree must be positive, got {degree}")
    if degree > MAX_DEGREE:
        raise InvalidElementError(f"degree {degree} exceeds {MAX_DEGREE}")


def compose(a: PartialMap, b: PartialMap) -> PartialMap:
    """Apply ``a`` then ``b``; defined at i iff i in Dom a and i·a in Dom b."""
    if a.degree != b.degree:
        raise DimensionMismatchError(f"cannot compose degree {a.degree} with degree {b.degree}")
    # UNDEF == -1 picks the appended sentinel
    extended = np.append(b.images, _DTYPE(UNDEF)).astype(_DTYPE, copy=False)
    return PartialMap._wrap(extended[a.images])


def rank(a: PartialMap) -> int:
    """Number of distinct defined image values."""
    defined = a.images[a.images != UNDEF]
    return int(np.unique(defined).size)


def standard_generators_ptn(n: int) -> Dict[str, PartialMap]:
    """pi = (1 2), rho = (1 2 ... n), tau = [2,2,3,...,n], sigma = [-,2,3,...,n]."""
    if n < 2:
        raise InvalidElementError(f"generators of PT_n need n >= 2, got {n}")
    tau = np.arange(n, dtype=_DTYPE)
    tau[0] = 1
    sigma = np.arange(n, dtype=_DTYPE)
    sigma[0] = UNDEF
    return {
        'pi': PartialMap.cycle(n, [1, 2]),
        'rho': PartialMap.cycle(n, range(1, n + 1)),
        'tau': PartialMap._wrap(tau),
        'sigma': PartialMap._wrap(sigma),
    }


def standard_generators_tn(m: int) -> Dict[str, PartialMap]:
    """The full-transformation part of the standard set: pi, rho, tau of degree m."""
    gens = standard_generators_ptn(m)
    del gens['sigma']
    return gens


def all_partial_maps(degree: int) -> Iterator[PartialMap]:
    """Every partial map of the given degree, in lexicographic image order."""
    _check_degree(degree)
    for images in itertools.product(range(UNDEF, degree), repeat=degree):
        yield PartialMap._wrap(np.array(images, dtype=_DTYPE))


def all_full_maps(degree: int) -> Iterator[PartialMap]:
    _check_degree(degree)
    for images in itertools.product(range(degree), repeat=degree):
        yield PartialMap._wrap(np.array(images, dtype=_DTYPE))


# Text codec

def format_partial_map(a: PartialMap) -> str:
    return '[' + ','.join(UNDEF_TOKEN if i == UNDEF else str(int(i) + 1) for i in a.images) + ']'


def parse_partial_map(text: str) -> PartialMap:
    """Parse ``[i1,i2,...,in]`` with ``-`` for undefined points, 1-based."""
    match = _MAP_PATTERN.match(text)
    if not match:
        raise ParseError("expected a bracketed image list", text)
    tokens = [t.strip() for t in match.group(1).split(',')]
    images: List[Optional[int]] = []
    for token in tokens:
        if token == UNDEF_TOKEN:
            images.append(None)
        elif token.isdigit():
            images.append(int(token))
        else:
            raise ParseError(f"bad image token {token!r}", text)
    try:
        return PartialMap.from_one_based(images)
    except InvalidElementError as e:
        raise ParseError(str(e), text) from e
