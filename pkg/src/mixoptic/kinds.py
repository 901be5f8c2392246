"""Optic kinds and the capability sets that drive combinators and composition.

A capability names one of the monoidal actions an optic's transformer must
be lifted through. Implications (a capability presupposing another) are
closed over before any subset test.
"""

from __future__ import annotations

import enum
from typing import FrozenSet


class Capability(enum.Enum):
    PRODUCT = "product"
    SUM = "sum"
    LIST_ALGEBRA = "list-algebra"
    FUNLIST_APPLICATIVE = "funlist-applicative"
    FUNLIST_TRAVERSABLE = "funlist-traversable"
    CLOSED = "closed"


_IMPLIES = {
    Capability.LIST_ALGEBRA: {Capability.PRODUCT},
    Capability.FUNLIST_TRAVERSABLE: {Capability.PRODUCT, Capability.SUM},
}


def closure(caps: FrozenSet[Capability]) -> FrozenSet[Capability]:
    """Close a capability set under the implication relation."""
    out = set(caps)
    changed = True
    while changed:
        changed = False
        for cap in list(out):
            extra = _IMPLIES.get(cap, set())
            if not extra <= out:
                out |= extra
                changed = True
    return frozenset(out)


class OpticKind(enum.Enum):
    ADAPTER = "adapter"
    LENS = "lens"
    ACHROMATIC_LENS = "achromatic-lens"
    PRISM = "prism"
    AFFINE_TRAVERSAL = "affine-traversal"
    TRAVERSAL = "traversal"
    GRATE = "grate"
    GLASS = "glass"
    SETTER = "setter"
    GETTER = "getter"
    REVIEW = "review"
    FOLD = "fold"
    ALGEBRAIC_LENS = "algebraic-lens"
    KALEIDOSCOPE = "kaleidoscope"
    MONADIC_LENS = "monadic-lens"


_C = Capability
_ALL = frozenset(_C)

# Capability requirements per kind (pre-closure).
CAPABILITIES = {
    OpticKind.ADAPTER: frozenset(),
    OpticKind.LENS: frozenset({_C.PRODUCT}),
    OpticKind.ACHROMATIC_LENS: frozenset({_C.LIST_ALGEBRA}),
    OpticKind.PRISM: frozenset({_C.SUM}),
    OpticKind.AFFINE_TRAVERSAL: frozenset({_C.PRODUCT, _C.SUM}),
    OpticKind.TRAVERSAL: frozenset({_C.FUNLIST_TRAVERSABLE}),
    OpticKind.GRATE: frozenset({_C.CLOSED}),
    OpticKind.GLASS: frozenset({_C.PRODUCT, _C.CLOSED}),
    OpticKind.SETTER: _ALL,
    OpticKind.GETTER: frozenset({_C.PRODUCT}),
    OpticKind.REVIEW: frozenset({_C.SUM}),
    OpticKind.FOLD: frozenset({_C.FUNLIST_TRAVERSABLE}),
    OpticKind.ALGEBRAIC_LENS: frozenset({_C.LIST_ALGEBRA}),
    OpticKind.KALEIDOSCOPE: frozenset({_C.FUNLIST_APPLICATIVE}),
    OpticKind.MONADIC_LENS: frozenset({_C.PRODUCT}),
}


def capability_set(kind: OpticKind) -> FrozenSet[Capability]:
    return closure(CAPABILITIES[kind])


# Direction flags. "read" means the optic can produce foci from a whole;
# "write" means it can produce a new whole; "build" means it can construct
# a whole from a focus alone.
READ_CAPABLE = frozenset({
    OpticKind.ADAPTER, OpticKind.LENS, OpticKind.ACHROMATIC_LENS,
    OpticKind.PRISM, OpticKind.AFFINE_TRAVERSAL, OpticKind.TRAVERSAL,
    OpticKind.GETTER, OpticKind.FOLD, OpticKind.ALGEBRAIC_LENS,
    OpticKind.MONADIC_LENS,
})

WRITE_CAPABLE = frozenset(OpticKind) - frozenset({OpticKind.GETTER, OpticKind.FOLD})

BUILD_CAPABLE = frozenset({
    OpticKind.ADAPTER, OpticKind.PRISM, OpticKind.REVIEW,
    OpticKind.ACHROMATIC_LENS,
})

# Kinds whose read direction always yields exactly one focus.
SINGLE_FOCUS = frozenset({
    OpticKind.ADAPTER, OpticKind.LENS, OpticKind.ACHROMATIC_LENS,
    OpticKind.GETTER, OpticKind.ALGEBRAIC_LENS, OpticKind.MONADIC_LENS,
})
