"""Concrete optic representations and the combinators that run them.

Each optic variant is a frozen dataclass bundling the functions that define
it. The combinators (`view`, `over`, `preview`, ...) dispatch on the kind
and raise `KindError` when an optic does not support the requested
direction.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, List, Sequence, Tuple

from .errors import EmptyInputError, EmptyTrainingError, KindError
from .kinds import OpticKind


# ---------------------------------------------------------------------------
# Partial-match results.


@dataclass(frozen=True)
class Miss:
    """No focus; carries the fully rebuilt whole."""

    value: Any


@dataclass(frozen=True)
class Focus:
    """A focus was found; payload depends on the optic variant."""

    value: Any


# ---------------------------------------------------------------------------
# Concrete optics.


@dataclass(frozen=True)
class Adapter:
    forward: Callable[[Any], Any]
    backward: Callable[[Any], Any]

    kind = OpticKind.ADAPTER


@dataclass(frozen=True)
class Lens:
    view: Callable[[Any], Any]
    update: Callable[[Any, Any], Any]

    kind = OpticKind.LENS


@dataclass(frozen=True)
class AchromaticLens:
    """A lens that can also conjure a whole from a focus alone."""

    view: Callable[[Any], Any]
    update: Callable[[Any, Any], Any]
    create: Callable[[Any], Any]

    kind = OpticKind.ACHROMATIC_LENS


@dataclass(frozen=True)
class Prism:
    match: Callable[[Any], Any]  # s -> Miss t | Focus a
    build: Callable[[Any], Any]

    kind = OpticKind.PRISM


@dataclass(frozen=True)
class AffineTraversal:
    """At most one focus; `access` returns Miss t or Focus (a, b -> t)."""

    access: Callable[[Any], Any]

    kind = OpticKind.AFFINE_TRAVERSAL


@dataclass(frozen=True)
class Traversal:
    """`extract` returns (foci, rebuild); rebuild demands the same arity."""

    extract: Callable[[Any], Tuple[Sequence[Any], Callable[[Sequence[Any]], Any]]]

    kind = OpticKind.TRAVERSAL


@dataclass(frozen=True)
class Grate:
    """`run` turns a continuation ((s -> a) -> b) into a t."""

    run: Callable[[Callable[[Callable[[Any], Any]], Any]], Any]

    kind = OpticKind.GRATE


@dataclass(frozen=True)
class Glass:
    """Like a grate but with access to the concrete whole: run(f, s) -> t."""

    run: Callable[[Callable[[Callable[[Any], Any]], Any], Any], Any]

    kind = OpticKind.GLASS


@dataclass(frozen=True)
class Setter:
    over: Callable[[Callable[[Any], Any], Any], Any]

    kind = OpticKind.SETTER


@dataclass(frozen=True)
class Getter:
    get: Callable[[Any], Any]

    kind = OpticKind.GETTER


@dataclass(frozen=True)
class Review:
    build: Callable[[Any], Any]

    kind = OpticKind.REVIEW


@dataclass(frozen=True)
class Fold:
    foci: Callable[[Any], Sequence[Any]]

    kind = OpticKind.FOLD


@dataclass(frozen=True)
class AlgebraicLens:
    """A lens whose update direction consumes a list of wholes."""

    view: Callable[[Any], Any]
    classify: Callable[[Sequence[Any], Any], Any]

    kind = OpticKind.ALGEBRAIC_LENS


@dataclass(frozen=True)
class Kaleidoscope:
    """`aggregate` lifts a list-level focus function to the wholes."""

    aggregate: Callable[[Callable[[Sequence[Any]], Any]], Callable[[Sequence[Any]], Any]]

    kind = OpticKind.KALEIDOSCOPE


@dataclass(frozen=True)
class MonadicLens:
    """A lens whose update runs in an effect; `pure` injects into it."""

    view: Callable[[Any], Any]
    mupdate: Callable[[Any, Any], Any]
    pure: Callable[[Any], Any]

    kind = OpticKind.MONADIC_LENS


# ---------------------------------------------------------------------------
# Combinators.

_VIEWABLE = {
    OpticKind.ADAPTER, OpticKind.LENS, OpticKind.ACHROMATIC_LENS,
    OpticKind.GETTER, OpticKind.ALGEBRAIC_LENS, OpticKind.MONADIC_LENS,
}


def view(optic: Any, source: Any) -> Any:
    """Extract the unique focus of a single-focus read-capable optic."""
    kind = optic.kind
    if kind is OpticKind.ADAPTER:
        return optic.forward(source)
    if kind is OpticKind.GETTER:
        return optic.get(source)
    if kind in _VIEWABLE:
        return optic.view(source)
    raise KindError(f"cannot view through a {kind.value}")


# kinds whose capability set stays within {product, sum}
_PREVIEWABLE = {
    OpticKind.ADAPTER, OpticKind.LENS, OpticKind.PRISM,
    OpticKind.AFFINE_TRAVERSAL, OpticKind.GETTER, OpticKind.MONADIC_LENS,
}


def preview(optic: Any, source: Any) -> Any:
    """Return the focus if present, else None."""
    kind = optic.kind
    if kind not in _PREVIEWABLE:
        raise KindError(f"cannot preview through a {kind.value}")
    if kind is OpticKind.PRISM:
        res = optic.match(source)
        return res.value if isinstance(res, Focus) else None
    if kind is OpticKind.AFFINE_TRAVERSAL:
        res = optic.access(source)
        return res.value[0] if isinstance(res, Focus) else None
    return view(optic, source)


def over(optic: Any, fn: Callable[[Any], Any], source: Any) -> Any:
    """Rewrite every focus with `fn`, returning the new whole."""
    kind = optic.kind
    if kind is OpticKind.ADAPTER:
        return optic.backward(fn(optic.forward(source)))
    if kind in (OpticKind.LENS, OpticKind.ACHROMATIC_LENS):
        return optic.update(source, fn(optic.view(source)))
    if kind is OpticKind.PRISM:
        res = optic.match(source)
        return optic.build(fn(res.value)) if isinstance(res, Focus) else res.value
    if kind is OpticKind.AFFINE_TRAVERSAL:
        res = optic.access(source)
        if isinstance(res, Focus):
            focus, rebuild = res.value
            return rebuild(fn(focus))
        return res.value
    if kind is OpticKind.TRAVERSAL:
        foci, rebuild = optic.extract(source)
        return rebuild([fn(a) for a in foci])
    if kind is OpticKind.GRATE:
        return optic.run(lambda k: fn(k(source)))
    if kind is OpticKind.GLASS:
        return optic.run(lambda k: fn(k(source)), source)
    if kind is OpticKind.SETTER:
        return optic.over(fn, source)
    if kind is OpticKind.ALGEBRAIC_LENS:
        return optic.classify([source], fn(optic.view(source)))
    if kind is OpticKind.KALEIDOSCOPE:
        return optic.aggregate(lambda foci: fn(foci[0]))([source])
    if kind is OpticKind.MONADIC_LENS:
        return optic.mupdate(source, fn(optic.view(source))).value
    raise KindError(f"cannot rewrite through a {kind.value}")


_SETTABLE = {
    OpticKind.ADAPTER, OpticKind.LENS, OpticKind.PRISM,
    OpticKind.AFFINE_TRAVERSAL,
}


def set_value(optic: Any, source: Any, value: Any) -> Any:
    """Replace the focus with a constant; misses return the whole unchanged."""
    if optic.kind not in _SETTABLE:
        raise KindError(f"cannot set through a {optic.kind.value}")
    return over(optic, lambda _: value, source)


def to_list_of(optic: Any, source: Any) -> List[Any]:
    """Collect all foci of a read-capable optic, left to right."""
    kind = optic.kind
    if kind is OpticKind.FOLD:
        return list(optic.foci(source))
    if kind is OpticKind.TRAVERSAL:
        foci, _ = optic.extract(source)
        return list(foci)
    if kind in (OpticKind.PRISM, OpticKind.AFFINE_TRAVERSAL):
        found = preview(optic, source)
        return [] if found is None else [found]
    if kind in _VIEWABLE:
        return [view(optic, source)]
    raise KindError(f"cannot enumerate foci of a {kind.value}")


def classify(optic: Any, training: Sequence[Any], value: Any) -> Any:
    """Rebuild a whole from a focus, guided by a list of example wholes."""
    kind = optic.kind
    if kind is OpticKind.ALGEBRAIC_LENS:
        if not training:
            raise EmptyTrainingError("classify requires a non-empty training list")
        return optic.classify(training, value)
    if kind is OpticKind.ACHROMATIC_LENS:
        if not training:
            return optic.create(value)
        return optic.update(training[0], value)
    raise KindError(f"cannot classify through a {kind.value}")


def aggregate(optic: Any, fn: Callable[[Sequence[Any]], Any], sources: Sequence[Any]) -> Any:
    """Combine a list of wholes focus-wise with `fn`."""
    if optic.kind is not OpticKind.KALEIDOSCOPE:
        raise KindError(f"cannot aggregate through a {optic.kind.value}")
    if not sources:
        raise EmptyInputError("aggregate requires a non-empty input list")
    return optic.aggregate(fn)(list(sources))


def mupdate(optic: Any, source: Any, value: Any) -> Any:
    """Effectful update; returns the effect wrapping the new whole."""
    if optic.kind is not OpticKind.MONADIC_LENS:
        raise KindError(f"cannot run an effectful update through a {optic.kind.value}")
    return optic.mupdate(source, value)


def review(optic: Any, value: Any) -> Any:
    """Construct a whole from a focus alone."""
    kind = optic.kind
    if kind is OpticKind.PRISM:
        return optic.build(value)
    if kind is OpticKind.REVIEW:
        return optic.build(value)
    if kind is OpticKind.ADAPTER:
        return optic.backward(value)
    if kind is OpticKind.ACHROMATIC_LENS:
        return optic.create(value)
    raise KindError(f"cannot build through a {kind.value}")


def grate_apply(optic: Any, continuation: Callable[[Callable[[Any], Any]], Any],
                source: Any = None) -> Any:
    """Run a grate's or glass's zipping continuation directly.

    A grate ignores ``source``; a glass requires it.
    """
    if optic.kind is OpticKind.GRATE:
        return optic.run(continuation)
    if optic.kind is OpticKind.GLASS:
        return optic.run(continuation, source)
    raise KindError(f"cannot zip through a {optic.kind.value}")
