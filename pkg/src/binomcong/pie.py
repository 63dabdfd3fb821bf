"""Inclusion-exclusion over a finite universe ``{1, ..., n}``.

A family is a list of properties, each a subset of the universe. Expanding
the formal product ``S(1 - a)(1 - b)(1 - c)...`` gives one signed term per
subset of properties; summing the term cardinalities counts the elements
with none of the properties.

Subsets are stored as int bitmaps: bit ``k - 1`` is set when ``k`` belongs
to the subset.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Iterator, NamedTuple, Union

from .arith import check_natural
from .errors import DomainError, ExpansionTooLarge, UniverseTooLarge

MAX_PROPERTIES = 30
MAX_ENUMERATED_UNIVERSE = 1 << 24


def _multiples_bitmap(d: int, n: int) -> int:
    # bits d-1, 2d-1, ..., summed as a geometric series in 2**d
    m = n // d
    if m == 0:
        return 0
    return (1 << (d - 1)) * (((1 << (d * m)) - 1) // ((1 << d) - 1))


@dataclass(frozen=True)
class ExplicitSet:
    bitmap: int
    name: str = ""

    @classmethod
    def of(cls, members: Iterable[int], name: str = "") -> ExplicitSet:
        bitmap = 0
        for k in members:
            if k < 1:
                raise DomainError(f"set member {k} is not in the universe")
            bitmap |= 1 << (k - 1)
        return cls(bitmap, name)

    def members(self) -> list[int]:
        out, b, k = [], self.bitmap, 1
        while b:
            if b & 1:
                out.append(k)
            b >>= 1
            k += 1
        return out

    def __contains__(self, k: int) -> bool:
        return k >= 1 and (self.bitmap >> (k - 1)) & 1 == 1

    def __len__(self) -> int:
        return self.bitmap.bit_count()

    def label(self) -> str:
        return self.name or "{" + ",".join(map(str, self.members())) + "}"


@dataclass(frozen=True)
class DivisibleBy:
    d: int
    name: str = ""

    def __post_init__(self):
        check_natural(self.d, "d")
        if self.d < 2:
            raise DomainError(f"divisor must be >= 2, got {self.d}")

    def __contains__(self, k: int) -> bool:
        return k >= 1 and k % self.d == 0

    def label(self) -> str:
        return self.name or f"div{self.d}"


Property = Union[ExplicitSet, DivisibleBy]


@dataclass(frozen=True)
class PropertyFamily:
    universe_size: int
    properties: tuple[Property, ...] = field(default=())

    def __post_init__(self):
        check_natural(self.universe_size, "universe_size")
        object.__setattr__(self, "properties", tuple(self.properties))
        if len(self.properties) > MAX_PROPERTIES:
            raise ExpansionTooLarge(
                f"{len(self.properties)} properties exceed the cap of {MAX_PROPERTIES}"
            )
        for prop in self.properties:
            if isinstance(prop, ExplicitSet):
                if prop.bitmap < 0 or prop.bitmap.bit_length() > self.universe_size:
                    raise DomainError(f"set {prop.label()} has members outside 1..{self.universe_size}")
            elif not isinstance(prop, DivisibleBy):
                raise DomainError(f"unknown property type {type(prop).__name__}")


class Term(NamedTuple):
    sign: int
    index_set: tuple[int, ...]
    cardinality: int


class SignedExpansion(NamedTuple):
    terms: list[Term]

    def total(self) -> int:
        return sum(t.sign * t.cardinality for t in self.terms)


def _lcm_capped(a: int, b: int, cap: int) -> int:
    """lcm(a, b), or ``cap + 1`` once the value provably exceeds ``cap``."""
    value = a // gcd(a, b) * b
    return cap + 1 if value > cap else value


def intersection_size(family: PropertyFamily, index_set: Iterable[int]) -> int:
    """``|A_i ∩ A_j ∩ ...|`` for the given property indices (the universe when empty)."""
    n = family.universe_size
    lcm = 1
    explicit = None
    for i in index_set:
        prop = family.properties[i]
        if isinstance(prop, DivisibleBy):
            lcm = _lcm_capped(lcm, prop.d, n)
        else:
            explicit = prop.bitmap if explicit is None else explicit & prop.bitmap
    if lcm > n:
        return 0
    if explicit is None:
        return n // lcm
    if lcm == 1:
        return explicit.bit_count()
    if n > MAX_ENUMERATED_UNIVERSE:
        raise UniverseTooLarge(
            f"mixed intersection over a universe of {n} exceeds {MAX_ENUMERATED_UNIVERSE}"
        )
    return (explicit & _multiples_bitmap(lcm, n)).bit_count()


def iter_terms(family: PropertyFamily) -> Iterator[Term]:
    """Terms of the expansion, index sets in binary counting order."""
    count = len(family.properties)
    for mask in range(1 << count):
        index_set = tuple(i for i in range(count) if mask >> i & 1)
        sign = -1 if len(index_set) % 2 else 1
        yield Term(sign, index_set, intersection_size(family, index_set))


def expand(family: PropertyFamily) -> SignedExpansion:
    return SignedExpansion(list(iter_terms(family)))


def count_none(family: PropertyFamily) -> int:
    """Number of universe elements having none of the properties."""
    return sum(t.sign * t.cardinality for t in iter_terms(family))


def count_union(family: PropertyFamily) -> int:
    return family.universe_size - count_none(family)


class Indicator:
    """Characteristic function of a property over ``{1, ..., n}``."""

    def __init__(self, prop: Property, universe_size: int):
        self.prop = prop
        self.universe_size = universe_size

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.universe_size:
            return 0
        return 1 if x in self.prop else 0


def indicator_product_check(universe_size: int, a: ExplicitSet, b: ExplicitSet) -> bool:
    """Check ``chi(A ∩ B)(x) == chi(A)(x) * chi(B)(x)`` at every point of the universe."""
    chi_a = Indicator(a, universe_size)
    chi_b = Indicator(b, universe_size)
    chi_ab = Indicator(ExplicitSet(a.bitmap & b.bitmap), universe_size)
    return all(chi_ab(x) == chi_a(x) * chi_b(x) for x in range(1, universe_size + 1))


def complement_indicator_check(family: PropertyFamily) -> bool:
    """Check pointwise that ``1 - sum chi(A_i) + sum chi(A_ij) - ...`` equals ``chi`` of the complement.

    Intersections are evaluated as products of indicators, never through the
    cardinality routines above.
    """
    n = family.universe_size
    indicators = [Indicator(p, n) for p in family.properties]
    count = len(indicators)
    for x in range(1, n + 1):
        values = [chi(x) for chi in indicators]
        signed = 0
        for mask in range(1 << count):
            prod, bits = 1, 0
            for i in range(count):
                if mask >> i & 1:
                    prod *= values[i]
                    bits += 1
            signed += -prod if bits % 2 else prod
        in_complement = 0 if any(values) else 1
        if signed != in_complement:
            return False
    return True
