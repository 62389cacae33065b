"""Integer type model: the five supported C types, their limits, and scaling profiles.

Limits come from a fixed two's-complement table rather than a platform probe so
that analyses are reproducible everywhere.  A ``BoundsProfile`` maps each type
to the limits used during one analysis run: ``FULL_SCALE`` uses the real
hardware limits, ``ANALOG_8BIT`` maps every type onto a small domain so the
exhaustive internal solver stays tractable while boundary structure (max,
min = -max-1, unsigned zero floor) is preserved.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Mapping


class CType(Enum):
    CHAR = "char"
    SHORT = "short"
    INT = "int"
    UINT = "unsigned int"
    INT64 = "int64_t"
    VOID = "void"
    PTR = "pointer"   # opaque malloc handle, no arithmetic
    CSTR = "string"   # string-literal arguments only

    def __str__(self) -> str:
        return self.value


INTEGER_TYPES = frozenset({CType.CHAR, CType.SHORT, CType.INT, CType.UINT, CType.INT64})
SIGNED_TYPES = frozenset({CType.CHAR, CType.SHORT, CType.INT, CType.INT64})

FULL_LIMITS: Mapping[CType, int] = {
    CType.CHAR: 127,
    CType.SHORT: 32767,
    CType.INT: 2147483647,
    CType.UINT: 4294967295,
    CType.INT64: 9223372036854775807,
}

# Name of the <limits.h> max constant for each type, and the reverse map.
MAX_CONSTANT_NAMES: Mapping[CType, str] = {
    CType.CHAR: "CHAR_MAX",
    CType.SHORT: "SHRT_MAX",
    CType.INT: "INT_MAX",
    CType.UINT: "UINT_MAX",
    CType.INT64: "LLONG_MAX",
}
MIN_CONSTANT_NAMES: Mapping[CType, str] = {
    CType.CHAR: "CHAR_MIN",
    CType.SHORT: "SHRT_MIN",
    CType.INT: "INT_MIN",
    CType.INT64: "LLONG_MIN",
}
TYPE_OF_MAX_CONSTANT = {name: ctype for ctype, name in MAX_CONSTANT_NAMES.items()}
TYPE_OF_MIN_CONSTANT = {name: ctype for ctype, name in MIN_CONSTANT_NAMES.items()}


def is_signed(ctype: CType) -> bool:
    return ctype in SIGNED_TYPES


@dataclass(frozen=True)
class IntBounds:
    """Inclusive value range used for overflow checking of one integer type."""

    type_name: CType
    max_val: int
    min_val: int

    def contains(self, value: int) -> bool:
        return self.min_val <= value <= self.max_val


@dataclass(frozen=True)
class BoundsProfile:
    """A consistent assignment of limits to the five types for one run."""

    name: str
    limits: Mapping[CType, int]
    # Historical lower-bound convention: -max + 1 instead of the
    # two's-complement -max - 1.  Off by default.
    literal_min: bool = False

    def max_of(self, ctype: CType) -> int:
        return self.limits[ctype]

    def min_of(self, ctype: CType) -> int:
        if not is_signed(ctype):
            return 0
        if self.literal_min:
            return -self.limits[ctype] + 1
        return -self.limits[ctype] - 1

    def bounds(self, ctype: CType) -> IntBounds:
        if ctype not in self.limits:
            raise ValueError(f"no integer bounds for type {ctype}")
        return IntBounds(ctype, self.max_of(ctype), self.min_of(ctype))

    def named_constant(self, name: str) -> tuple[int, CType] | None:
        """Value and type of a recognized limit constant, or None."""
        if name in TYPE_OF_MAX_CONSTANT:
            ctype = TYPE_OF_MAX_CONSTANT[name]
            return self.max_of(ctype), ctype
        if name in TYPE_OF_MIN_CONSTANT:
            ctype = TYPE_OF_MIN_CONSTANT[name]
            return self.min_of(ctype), ctype
        return None

    def with_literal_min(self) -> "BoundsProfile":
        return BoundsProfile(self.name + "-literal-min", self.limits, literal_min=True)


FULL_SCALE = BoundsProfile("full", FULL_LIMITS)


def analog_profile(bits: int = 8) -> BoundsProfile:
    """Profile mapping every type onto a ``bits``-wide analog domain.

    All signed types share max = 2**(bits-1) - 1; the unsigned type gets
    2**bits - 1.  Enumeration over these domains is exhaustive in tests.
    """
    smax = 2 ** (bits - 1) - 1
    umax = 2**bits - 1
    limits = {
        CType.CHAR: smax,
        CType.SHORT: smax,
        CType.INT: smax,
        CType.UINT: umax,
        CType.INT64: smax,
    }
    return BoundsProfile(f"analog-{bits}bit", limits)


ANALOG_8BIT = analog_profile(8)


def enumeration_domain(ctype: CType, profile: BoundsProfile = ANALOG_8BIT) -> range:
    """Inclusive input domain used when exhaustively enumerating a variable."""
    b = profile.bounds(ctype)
    return range(b.min_val, b.max_val + 1)


def usual_arithmetic_type(left: CType, right: CType) -> CType:
    """C usual arithmetic conversions restricted to the five supported types."""
    if left not in INTEGER_TYPES or right not in INTEGER_TYPES:
        raise ValueError(f"non-integer operands: {left}, {right}")
    if CType.INT64 in (left, right):
        return CType.INT64
    if CType.UINT in (left, right):
        return CType.UINT
    return CType.INT
