"""The free applicative over a store shape.

A ``FunList`` is either ``Done(b)`` or ``More(s, rest)`` where ``rest`` is a
FunList whose payload is a one-argument function. Evaluating a FunList means
supplying one replacement per stored source, innermost payload first; this
is the power-series witness used by traversals and kaleidoscopes.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, List, Sequence, Tuple, Union

from .errors import LengthError


@dataclass(frozen=True)
class Done:
    value: object


@dataclass(frozen=True)
class More:
    source: object
    rest: "FunList"  # payload of `rest` is a function of one argument


FunList = Union[Done, More]


def pure(b) -> FunList:
    return Done(b)


def fmap(f: Callable, fl: FunList) -> FunList:
    if isinstance(fl, Done):
        return Done(f(fl.value))
    return More(fl.source, fmap(lambda g: lambda a: f(g(a)), fl.rest))


def ap(ff: FunList, fa: FunList) -> FunList:
    """Applicative combination: apply the functions in ff to the values in fa."""
    if isinstance(ff, Done):
        return fmap(ff.value, fa)
    flipped = fmap(lambda g: lambda x: lambda a: g(a)(x), ff.rest)
    return More(ff.source, ap(flipped, fa))


def singleton(s) -> FunList:
    """One stored source whose payload is the identity on its replacement."""
    return More(s, Done(lambda a: a))


def no_fun(fl: FunList) -> Tuple[List[object], Callable[[Sequence[object]], object]]:
    """Split a FunList into its stored sources and a rebuilding function.

    The rebuilding function demands exactly one replacement per source and
    raises LengthError otherwise.
    """
    if isinstance(fl, Done):
        def rebuild_done(bs, _b=fl.value):
            if len(bs) != 0:
                raise LengthError(f"expected 0 replacements, got {len(bs)}")
            return _b

        return [], rebuild_done

    tail_sources, tail_rebuild = no_fun(fl.rest)
    sources = [fl.source] + tail_sources

    def rebuild(bs, _n=len(sources), _tail=tail_rebuild):
        if len(bs) != _n:
            raise LengthError(f"expected {_n} replacements, got {len(bs)}")
        return _tail(bs[1:])(bs[0])

    return sources, rebuild


def sequence(fls: Sequence[FunList]) -> FunList:
    """Combine a list of FunLists into a FunList of lists."""
    acc: FunList = Done([])
    for fl in reversed(fls):
        acc = ap(fmap(lambda x: lambda xs: [x] + xs, fl), acc)
    return acc


def of_extract(foci: Sequence[object], rebuild: Callable) -> FunList:
    """Build the FunList whose sources are ``foci`` and whose evaluation is
    ``rebuild`` applied to the replacements in order."""
    return fmap(lambda bs: rebuild(bs), sequence([singleton(a) for a in foci]))


def sources(fl: FunList) -> List[object]:
    out = []
    while isinstance(fl, More):
        out.append(fl.source)
        fl = fl.rest
    return out


def map_sources(f: Callable, fl: FunList) -> FunList:
    """Rewrite every stored source, keeping the payload untouched."""
    if isinstance(fl, Done):
        return fl
    return More(f(fl.source), map_sources(f, fl.rest))


def fuse(fl: FunList):
    """Evaluate a FunList by feeding each stored source back to the payload."""
    srcs, rebuild = no_fun(fl)
    return rebuild(srcs)
