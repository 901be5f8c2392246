"""Domain fixtures: addresses, the flower dataset, and the logging box."""

import math
import random

import pytest

from mixoptic import (
    Writer, aggregate, classify, mupdate, over, preview, review, view,
)
from mixoptic.fixtures import (
    Address, Box, Flower, Measurements, Species, address_prism,
    address_to_value, aggregate_kaleidoscope, box_lens, city_lens, distance,
    flower_to_value, home, iris, mail, mean, measure_lens,
    measurements_to_value, street_lens, value_to_address, value_to_flower,
    value_to_measurements,
)

from conftest import gen_address


def test_dataset_shape():
    assert len(iris) == 150
    by_species = {s: sum(1 for f in iris if f.species is s)
                  for s in Species}
    assert set(by_species.values()) == {50}
    assert iris[4].measurements.as_tuple() == (5.0, 3.6, 1.4, 0.2)
    assert iris[4].species is Species.SETOSA


def test_species_rendering():
    assert str(Species.VERSICOLOR) == "Iris Versicolor"


def test_home_parses():
    assert preview(address_prism(), home) == Address(
        "221b Baker St", "London", "UK")


def test_mail_fixture_is_three_parseable_addresses():
    assert len(mail) == 3
    for line in mail:
        assert preview(address_prism(), line) is not None


def test_address_prism_round_trips_generated_addresses():
    r = random.Random(17)
    p = address_prism()
    for _ in range(150):
        a = gen_address(r)
        assert preview(p, review(p, a)) == a


def test_street_and_city_lenses():
    a = Address("10 High Ln", "Leeds", "UK")
    assert view(street_lens(), a) == "10 High Ln"
    assert over(city_lens(), str.upper, a) == Address(
        "10 High Ln", "LEEDS", "UK")


def test_distance_is_euclidean():
    a = Measurements(0.0, 0.0, 0.0, 0.0)
    b = Measurements(1.0, 2.0, 2.0, 0.0)
    assert distance(a, b) == pytest.approx(3.0)


def test_measure_lens_self_classification():
    alg = measure_lens()
    r = random.Random(23)
    for f in r.sample(iris, 30):
        assert classify(alg, iris, f.measurements).species is f.species


def test_mean():
    assert mean([1.0, 2.0, 6.0]) == pytest.approx(3.0)


def test_aggregate_kaleidoscope_componentwise_mean():
    kal = aggregate_kaleidoscope()
    got = aggregate(kal, mean, [f.measurements for f in iris])
    for component, want in zip(got.as_tuple(),
                               (5.843, 3.054, 3.759, 1.199)):
        assert math.isclose(component, want, abs_tol=0.001)


def test_box_lens_logs_every_update():
    lens = box_lens()
    assert view(lens, Box(42)) == 42
    w = mupdate(lens, Box(42), "hello")
    assert w == Writer(Box("hello"),
                       ('[box]: contents changed to "hello".',))


def test_value_codecs_round_trip():
    a = Address("1 Acre Fold", "Truro", "UK")
    assert value_to_address(address_to_value(a)) == a
    m = iris[10].measurements
    assert value_to_measurements(measurements_to_value(m)) == m
    f = iris[120]
    assert value_to_flower(flower_to_value(f)) == f
