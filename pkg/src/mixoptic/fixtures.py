"""Built-in fixtures: addresses, the iris dataset, and the logging box.

The typed fixtures mirror the reference examples exactly; the ``value_*``
factories wrap them for the document runtime used by the CLI, encoding
flowers and measurements as records.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from enum import Enum
from math import sqrt
from typing import List, Sequence

from .effects import Writer
from .iris_data import IRIS_ROWS
from .errors import FocusError
from .optics import (
    AlgebraicLens, Focus, Kaleidoscope, Lens, Miss, MonadicLens, Prism,
    Traversal,
)
from .values import (
    VNum, VRec, VText, Value, each_traversal, field_lens,
)


@dataclass(frozen=True)
class Address:
    street: str
    city: str
    country: str


class Species(Enum):
    SETOSA = "Setosa"
    VERSICOLOR = "Versicolor"
    VIRGINICA = "Virginica"

    def __str__(self):
        return f"Iris {self.value}"


@dataclass(frozen=True)
class Measurements:
    sepal_length: float
    sepal_width: float
    petal_length: float
    petal_width: float

    def as_tuple(self):
        return (self.sepal_length, self.sepal_width,
                self.petal_length, self.petal_width)


@dataclass(frozen=True)
class Flower:
    measurements: Measurements
    species: Species


@dataclass(frozen=True)
class Box:
    contents: object


home = "221b Baker St, London, UK"

mail = [
    "43 Adlington Rd, Wilmslow, United Kingdom",
    "26 Westcott Rd, Princeton, USA",
    "St James's Square, London, United Kingdom",
]


def load_iris() -> List[Flower]:
    return [
        Flower(Measurements(sl, sw, pl, pw), Species(name))
        for sl, sw, pl, pw, name in IRIS_ROWS
    ]


iris = load_iris()


# ---------------------------------------------------------------------------
# Typed optics.


def street_lens() -> Lens:
    return Lens(
        view=lambda a: a.street,
        update=lambda a, b: replace(a, street=b),
    )


def city_lens() -> Lens:
    return Lens(
        view=lambda a: a.city,
        update=lambda a, b: replace(a, city=b),
    )


def address_prism() -> Prism:
    """Prism from a postal string to an Address, splitting on ", " twice."""

    def read_until(text: str):
        if "," not in text:
            return None
        cut = text.index(",")
        return text[:cut], text[cut:]

    def match(text):
        first = read_until(text)
        if first is None:
            return Miss(text)
        street, rest = first
        second = read_until(rest[2:])  # drop ", "
        if second is None:
            return Miss(text)
        city, rest = second
        return Focus(Address(street, city, rest[2:]))

    def build(a: Address) -> str:
        return f"{a.street}, {a.city}, {a.country}"

    return Prism(match=match, build=build)


def each() -> Traversal:
    """Traversal over the elements of a plain list, in order."""

    def extract(items: Sequence):
        got = list(items)
        return got, lambda bs: list(bs)

    return Traversal(extract=extract)


def distance(a: Measurements, b: Measurements) -> float:
    return sqrt(sum(
        (x - y) ** 2 for x, y in zip(a.as_tuple(), b.as_tuple())
    ))


def measure_lens() -> AlgebraicLens:
    """Nearest-neighbour classifying lens over flowers."""

    def learn(flowers: Sequence[Flower], m: Measurements) -> Flower:
        # min() keeps the earliest of tied distances
        nearest = min(flowers, key=lambda f: distance(m, f.measurements))
        return Flower(m, nearest.species)

    return AlgebraicLens(view=lambda f: f.measurements, classify=learn)


def aggregate_kaleidoscope() -> Kaleidoscope:
    """Folds each of the four measurement components independently."""

    def aggregate(f):
        def run(ms: Sequence[Measurements]) -> Measurements:
            return Measurements(
                f([m.sepal_length for m in ms]),
                f([m.sepal_width for m in ms]),
                f([m.petal_length for m in ms]),
                f([m.petal_width for m in ms]),
            )

        return run

    return Kaleidoscope(aggregate=aggregate)


def mean(xs: Sequence[float]) -> float:
    return sum(xs) / len(xs)


def box_lens() -> MonadicLens:
    """Logs every update to the box contents."""

    def mupdate(box: Box, new) -> Writer:
        shown = json.dumps(new) if isinstance(new, (str, int, float)) \
            else str(new)
        return Writer.tell(Box(new), f"[box]: contents changed to {shown}.")

    return MonadicLens(
        view=lambda box: box.contents,
        mupdate=mupdate,
        pure=Writer.pure,
    )


# ---------------------------------------------------------------------------
# Value encodings for the document runtime.


def address_to_value(a: Address) -> Value:
    return VRec((
        ("street", VText(a.street)),
        ("city", VText(a.city)),
        ("country", VText(a.country)),
    ))


def value_to_address(v: Value) -> Address:
    if not isinstance(v, VRec):
        raise FocusError("expected an address record")
    parts = []
    for key in ("street", "city", "country"):
        item = v.get(key)
        if not isinstance(item, VText):
            raise FocusError(f"address record needs text field {key!r}")
        parts.append(item.value)
    return Address(*parts)


_MEASUREMENT_KEYS = ("sepalLength", "sepalWidth", "petalLength", "petalWidth")


def measurements_to_value(m: Measurements) -> Value:
    return VRec(tuple(
        (key, VNum(component))
        for key, component in zip(_MEASUREMENT_KEYS, m.as_tuple())
    ))


def value_to_measurements(v: Value) -> Measurements:
    if not isinstance(v, VRec):
        raise FocusError("expected a measurements record")
    parts = []
    for key in _MEASUREMENT_KEYS:
        item = v.get(key)
        if not isinstance(item, VNum):
            raise FocusError(f"measurements record needs number field {key!r}")
        parts.append(item.value)
    return Measurements(*parts)


def flower_to_value(f: Flower) -> Value:
    return VRec((
        ("measurements", measurements_to_value(f.measurements)),
        ("species", VText(f.species.value)),
    ))


def value_to_flower(v: Value) -> Flower:
    if not isinstance(v, VRec):
        raise FocusError("expected a flower record")
    species = v.get("species")
    if not isinstance(species, VText):
        raise FocusError("flower record needs text field 'species'")
    return Flower(
        value_to_measurements(v.get("measurements")),
        Species(species.value),
    )


def value_address_prism() -> Prism:
    """The address prism over text documents."""
    typed = address_prism()

    def match(v: Value):
        if not isinstance(v, VText):
            raise FocusError("expected a text document")
        res = typed.match(v.value)
        if isinstance(res, Miss):
            return Miss(VText(res.value))
        return Focus(address_to_value(res.value))

    return Prism(
        match=match,
        build=lambda v: VText(typed.build(value_to_address(v))),
    )


def value_measure_lens() -> AlgebraicLens:
    typed = measure_lens()

    def classify(flowers: Sequence[Value], m: Value) -> Value:
        return flower_to_value(typed.classify(
            [value_to_flower(f) for f in flowers],
            value_to_measurements(m),
        ))

    return AlgebraicLens(
        view=lambda v: measurements_to_value(value_to_flower(v).measurements),
        classify=classify,
    )


def value_aggregate_kaleidoscope() -> Kaleidoscope:
    """Component-wise aggregation; the fold sees plain floats."""
    typed = aggregate_kaleidoscope()

    def aggregate(f):
        lifted = typed.aggregate(lambda xs: f(list(xs)))

        def run(ms: Sequence[Value]) -> Value:
            return measurements_to_value(
                lifted([value_to_measurements(m) for m in ms])
            )

        return run

    return Kaleidoscope(aggregate=aggregate)


# built-in names resolvable in optic expressions
def registry():
    return {
        "address": value_address_prism(),
        "street": field_lens("street"),
        "city": field_lens("city"),
        "country": field_lens("country"),
        "each": each_traversal(),
        "measure": value_measure_lens(),
        "aggregate": value_aggregate_kaleidoscope(),
    }
