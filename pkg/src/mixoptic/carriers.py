"""Combinator carriers: the profunctor-like accessor states optics act on.

Each carrier wraps a single ``run`` function and supports ``dimap`` plus a
declared subset of capability lifts. Lifting moves the carrier across a
residual context: product lifts act on ``(residual, value)`` pairs with the
residual first, sum lifts act on ``Miss``/``Focus`` values, list-algebra
lifts act on ``(list-residual, value)`` pairs and flatten residuals,
funlist lifts act on FunList containers, and closed lifts act on functions
into the focus.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import funlist as fl
from .errors import CapabilityError
from .optics import Focus, Miss


class Carrier:
    """Base carrier; every lift is undeclared until a subclass opts in."""

    def dimap(self, l: Callable, r: Callable) -> "Carrier":
        raise NotImplementedError

    def _no(self, capability: str) -> CapabilityError:
        return CapabilityError(
            f"{type(self).__name__} does not declare the {capability} capability"
        )

    def lift_product(self) -> "Carrier":
        raise self._no("product")

    def lift_sum(self) -> "Carrier":
        raise self._no("sum")

    def lift_list_algebra(self) -> "Carrier":
        raise self._no("list-algebra")

    def lift_funlist(self) -> "Carrier":
        raise self._no("funlist")

    def lift_closed(self) -> "Carrier":
        raise self._no("closed")


@dataclass(frozen=True)
class Viewing(Carrier):
    """run: S -> A. Read-only; dimap discards the output map."""

    run: Callable

    def dimap(self, l, r):
        return Viewing(lambda s: self.run(l(s)))

    def lift_product(self):
        return Viewing(lambda pair: self.run(pair[1]))

    def lift_list_algebra(self):
        return Viewing(lambda pair: self.run(pair[1]))


@dataclass(frozen=True)
class Previewing(Carrier):
    """run: S -> A or None."""

    run: Callable

    def dimap(self, l, r):
        return Previewing(lambda s: self.run(l(s)))

    def lift_product(self):
        return Previewing(lambda pair: self.run(pair[1]))

    def lift_sum(self):
        return Previewing(
            lambda m: None if isinstance(m, Miss) else self.run(m.value)
        )

    def lift_list_algebra(self):
        return Previewing(lambda pair: self.run(pair[1]))


@dataclass(frozen=True)
class Setting(Carrier):
    """run: (A -> B) -> S -> T."""

    run: Callable

    def dimap(self, l, r):
        return Setting(lambda u: lambda s: r(self.run(u)(l(s))))

    def lift_product(self):
        return Setting(lambda u: lambda pair: (pair[0], self.run(u)(pair[1])))

    def lift_sum(self):
        return Setting(
            lambda u: lambda m: m if isinstance(m, Miss)
            else Focus(self.run(u)(m.value))
        )


@dataclass(frozen=True)
class Replacing(Carrier):
    """run: (A -> B) -> S -> T. Like Setting but declares every capability."""

    run: Callable

    def dimap(self, l, r):
        return Replacing(lambda u: lambda s: r(self.run(u)(l(s))))

    def lift_product(self):
        return Replacing(lambda u: lambda pair: (pair[0], self.run(u)(pair[1])))

    def lift_sum(self):
        return Replacing(
            lambda u: lambda m: m if isinstance(m, Miss)
            else Focus(self.run(u)(m.value))
        )

    def lift_list_algebra(self):
        return Replacing(lambda u: lambda pair: (pair[0], self.run(u)(pair[1])))

    def lift_funlist(self):
        return Replacing(lambda u: lambda flist: fl.map_sources(self.run(u), flist))

    def lift_closed(self):
        return Replacing(lambda u: lambda k: lambda x: self.run(u)(k(x)))


@dataclass(frozen=True)
class Classifying(Carrier):
    """run: (list of S, B) -> T."""

    run: Callable

    def dimap(self, l, r):
        return Classifying(lambda ss, b: r(self.run([l(s) for s in ss], b)))

    def lift_list_algebra(self):
        # residuals are themselves lists; the algebra flattens them
        def lifted(pairs, b):
            residual = [w for ws, _ in pairs for w in ws]
            return residual, self.run([a for _, a in pairs], b)

        return Classifying(lifted)


@dataclass(frozen=True)
class Aggregating(Carrier):
    """run: (list of S, list-of-A -> B) -> T."""

    run: Callable

    def dimap(self, l, r):
        return Aggregating(lambda ss, f: r(self.run([l(s) for s in ss], f)))

    def lift_list_algebra(self):
        def lifted(pairs, f):
            residual = [w for ws, _ in pairs for w in ws]
            return residual, self.run([a for _, a in pairs], f)

        return Aggregating(lifted)

    def lift_funlist(self):
        # a list of FunLists is sequenced into a FunList of focus lists
        def lifted(flists, f):
            return fl.fmap(lambda ss: self.run(ss, f), fl.sequence(list(flists)))

        return Aggregating(lifted)


@dataclass(frozen=True)
class Updating(Carrier):
    """run: (B, S) -> effect of T. The effect must expose ``map``."""

    run: Callable

    def dimap(self, l, r):
        return Updating(lambda b, s: self.run(b, l(s)).map(r))

    def lift_product(self):
        return Updating(
            lambda b, pair: self.run(b, pair[1]).map(lambda t: (pair[0], t))
        )


@dataclass(frozen=True)
class Folding(Carrier):
    """run: S -> list of A."""

    run: Callable

    def dimap(self, l, r):
        return Folding(lambda s: self.run(l(s)))

    def lift_product(self):
        return Folding(lambda pair: self.run(pair[1]))

    def lift_sum(self):
        return Folding(lambda m: [] if isinstance(m, Miss) else self.run(m.value))

    def lift_list_algebra(self):
        return Folding(lambda pair: self.run(pair[1]))

    def lift_funlist(self):
        return Folding(
            lambda flist: [a for src in fl.sources(flist) for a in self.run(src)]
        )


@dataclass(frozen=True)
class Reviewing(Carrier):
    """run: B -> T. Write-only; dimap discards the input map."""

    run: Callable

    def dimap(self, l, r):
        return Reviewing(lambda b: r(self.run(b)))

    def lift_sum(self):
        return Reviewing(lambda b: Focus(self.run(b)))


@dataclass(frozen=True)
class Grating(Carrier):
    """run: ((S -> A) -> B) -> T."""

    run: Callable

    def dimap(self, l, r):
        return Grating(lambda h: r(self.run(lambda k: h(lambda s: k(l(s))))))


@dataclass(frozen=True)
class Glassing(Carrier):
    """run: (((S -> A) -> B), S) -> T."""

    run: Callable

    def dimap(self, l, r):
        return Glassing(
            lambda h, s: r(self.run(lambda k: h(lambda x: k(l(x))), l(s)))
        )
