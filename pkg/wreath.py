"""
Wreath product PT_n wr T_m
==========================
Elements are (b_1, ..., b_m; t) with b_j in PT_n and a full tail t in T_m.
The product follows the left action of the tail on coordinates:

    (s_1..s_m; x)(t_1..t_m; y) = (s_1 t_{1x}, ..., s_m t_{mx}; xy)
"""

import itertools
import math
import re
from typing import Iterator, Sequence

from transform_core import (
    PartialMap, all_full_maps, all_partial_maps, format_partial_map,
    parse_partial_map, power,
)
from utils import DimensionMismatchError, InvalidElementError, ParseError

_WREATH_PATTERN = re.compile(r'^\s*\((.*);(.*)\)\s*$', re.DOTALL)


class WreathElement:
    """An element of PT_n wr T_m; immutable, componentwise equality."""

    __slots__ = ('n', 'm', 'components', 'tail', '_key')

    def __init__(self, components: Sequence[PartialMap], tail: PartialMap):
        components = tuple(components)
        if not components:
            raise InvalidElementError("a wreath element needs at least one component")
        n = components[0].degree
        if any(c.degree != n for c in components):
            raise DimensionMismatchError(f"components of mixed degree: {[c.degree for c in components]}")
        if tail.degree != len(components):
            raise DimensionMismatchError(
                f"tail degree {tail.degree} does not match {len(components)} components")
        if not tail.is_full:
            raise InvalidElementError(f"tail must be a full transformation, got {tail}")
        self._set(n, len(components), components, tail)

    def _set(self, n, m, components, tail):
        self.n = n
        self.m = m
        self.components = components
        self.tail = tail
        self._key = bytes((n % 256, m % 256)) + b''.join(c.key for c in components) + tail.key

    @classmethod
    def _wrap(cls, n, m, components, tail) -> 'WreathElement':
        obj = cls.__new__(cls)
        obj._set(n, m, components, tail)
        return obj

    @classmethod
    def identity(cls, n: int, m: int) -> 'WreathElement':
        one = PartialMap.identity(n)
        return cls._wrap(n, m, (one,) * m, PartialMap.identity(m))

    @property
    def key(self) -> bytes:
        return self._key

    @property
    def dims(self):
        return self.n, self.m

    def identity_like(self) -> 'WreathElement':
        return WreathElement.identity(self.n, self.m)

    def __mul__(self, other: 'WreathElement') -> 'WreathElement':
        return wreath_multiply(self, other)

    def __pow__(self, exponent: int) -> 'WreathElement':
        return power(self, exponent)

    def __eq__(self, other) -> bool:
        return isinstance(other, WreathElement) and self._key == other._key

    def __hash__(self) -> int:
        return hash(self._key)

    def __str__(self) -> str:
        return format_wreath(self)

    def __repr__(self) -> str:
        return f"WreathElement('{format_wreath(self)}')"


def wreath_multiply(x: WreathElement, y: WreathElement) -> WreathElement:
    if x.dims != y.dims:
        raise DimensionMismatchError(f"cannot multiply {x.dims} by {y.dims}")
    tail = x.tail.images
    components = tuple(x.components[i] * y.components[int(tail[i])] for i in range(x.m))
    return WreathElement._wrap(x.n, x.m, components, x.tail * y.tail)


def embed_slot(j: int, a: PartialMap, m: int) -> WreathElement:
    """The slot embedding: a in position j (1-based), identity elsewhere and in the tail."""
    if not 1 <= j <= m:
        raise DimensionMismatchError(f"slot {j} out of range 1..{m}")
    one = PartialMap.identity(a.degree)
    components = tuple(a if i == j - 1 else one for i in range(m))
    return WreathElement._wrap(a.degree, m, components, PartialMap.identity(m))


def embed_tail(t: PartialMap, n: int) -> WreathElement:
    """The tail embedding: identity components, tail t (must be full)."""
    if not t.is_full:
        raise InvalidElementError(f"tail embedding needs a full transformation, got {t}")
    one = PartialMap.identity(n)
    return WreathElement._wrap(n, t.degree, (one,) * t.degree, t)


def conjugate_slot(j: int, a: PartialMap, m: int) -> WreathElement:
    """((1 j) tail) (a in slot 1) ((1 j) tail), which equals a in slot j."""
    if not 1 <= j <= m:
        raise DimensionMismatchError(f"slot {j} out of range 1..{m}")
    # (1 1) is the identity
    swap = embed_tail(PartialMap.cycle(m, sorted({1, j})), a.degree)
    return swap * embed_slot(1, a, m) * swap


def is_canonical(x: WreathElement) -> bool:
    return all(x.tail.images[j] == 0 for j, c in enumerate(x.components) if c.is_empty)


def canonical_form(x: WreathElement) -> WreathElement:
    """Send the tail entry of every all-undefined component to 1."""
    tail = x.tail.images.copy()
    for j, component in enumerate(x.components):
        if component.is_empty:
            tail[j] = 0
    return WreathElement._wrap(x.n, x.m, x.components, PartialMap._wrap(tail))


def tail_projection(x: WreathElement) -> PartialMap:
    """The homomorphism onto T_m that forgets the components."""
    return x.tail


def all_wreath_elements(n: int, m: int) -> Iterator[WreathElement]:
    pt_n = list(all_partial_maps(n))
    t_m = list(all_full_maps(m))
    for components in itertools.product(pt_n, repeat=m):
        for tail in t_m:
            yield WreathElement._wrap(n, m, components, tail)


def wreath_order(n: int, m: int) -> int:
    """|PT_n wr T_m| = ((n+1)^n)^m * m^m."""
    return ((n + 1) ** n) ** m * m ** m


def full_wreath_order(n: int, m: int) -> int:
    """|T_n wr T_m| = (n^n)^m * m^m."""
    return (n ** n) ** m * m ** m


def units_order(n: int, m: int) -> int:
    """|S_n wr S_m| = (n!)^m * m!."""
    return math.factorial(n) ** m * math.factorial(m)


# Text codec

def format_wreath(x: WreathElement) -> str:
    parts = ' | '.join(format_partial_map(c) for c in x.components)
    return f"({parts} ; {format_partial_map(x.tail)})"


def parse_wreath(text: str) -> WreathElement:
    """Parse ``(c1 | c2 | ... | cm ; tail)``."""
    match = _WREATH_PATTERN.match(text)
    if not match:
        raise ParseError("expected '(c1 | ... | cm ; tail)'", text)
    components = [parse_partial_map(part) for part in match.group(1).split('|')]
    tail = parse_partial_map(match.group(2))
    try:
        return WreathElement(components, tail)
    except (InvalidElementError, DimensionMismatchError) as e:
        raise ParseError(str(e), text) from e
