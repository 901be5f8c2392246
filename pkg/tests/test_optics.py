"""Optic laws and combinator applicability."""

import random
from dataclasses import replace

import pytest
from hypothesis import given, strategies as st

from mixoptic import (
    Focus, Getter, Kaleidoscope, Miss, OpticKind, Setter,
    aggregate, classify, compose, over, preview, review, set_value,
    to_list_of, view,
)
from mixoptic.errors import EmptyInputError, EmptyTrainingError, KindError
from mixoptic.fixtures import (
    Address, Flower, Species, address_prism, aggregate_kaleidoscope,
    each, iris, measure_lens, street_lens,
)

from conftest import addr_ach, gen_address, gen_postal

K = OpticKind

addresses = st.builds(
    Address,
    st.text(st.characters(blacklist_characters=","), max_size=12),
    st.sampled_from(["London", "Leeds", "York"]),
    st.sampled_from(["UK", "USA"]),
)


@given(addresses)
def test_lens_view_update(a):
    lens = street_lens()
    assert set_value(lens, a, view(lens, a)) == a          # get-put
    assert view(lens, set_value(lens, a, "New")) == "New"  # put-get
    twice = set_value(lens, set_value(lens, a, "X"), "Y")
    assert twice == set_value(lens, a, "Y")                # put-put


def test_prism_laws():
    r = random.Random(3)
    prism = address_prism()
    for _ in range(200):
        s = gen_postal(r)
        hit = preview(prism, s)
        if hit is not None:
            assert review(prism, hit) == s      # match-build
        a = gen_address(r)
        assert preview(prism, review(prism, a)) == a  # build-match


def test_prism_miss_leaves_source_alone():
    prism = address_prism()
    assert preview(prism, "nothing here") is None
    assert over(prism, lambda a: replace(a, city="X"), "nothing here") == \
        "nothing here"


@given(st.lists(st.integers(), max_size=8))
def test_traversal_laws(xs):
    t = each()
    assert over(t, lambda n: n, xs) == xs                          # identity
    f, g = (lambda n: n + 1), (lambda n: n * 2)
    assert over(t, f, over(t, g, xs)) == over(t, lambda n: f(g(n)), xs)
    assert to_list_of(t, xs) == xs


@given(st.lists(st.integers(), max_size=8))
def test_setter_composes_functorially(xs):
    s = Setter(over=lambda f, src: [f(x) for x in src])
    f, g = (lambda n: n - 4), (lambda n: n * n)
    assert over(s, f, over(s, g, xs)) == over(s, lambda n: f(g(n)), xs)
    assert over(s, lambda n: n, xs) == xs


def test_achromatic_create_agrees_with_update():
    ach = addr_ach()
    built = review(ach, "1 Elm Way")
    assert view(ach, built) == "1 Elm Way"
    assert over(ach, lambda _: "2 Oak Rd", built) == replace(
        built, street="2 Oak Rd")


def test_achromatic_classify_falls_back_to_create():
    ach = addr_ach()
    sample = Address("9 Mill Bank", "Bath", "UK")
    assert classify(ach, [sample], "1 Elm Way") == replace(
        sample, street="1 Elm Way")
    assert classify(ach, [], "1 Elm Way") == Address("1 Elm Way",
                                                     "Nowhere", "ZZ")


def test_algebraic_lens_classifies_by_nearest_training_example():
    alg = measure_lens()
    flower = iris[4]
    assert view(alg, flower) == flower.measurements
    got = classify(alg, iris, flower.measurements)
    assert got == flower
    with pytest.raises(EmptyTrainingError):
        classify(alg, [], flower.measurements)


def test_algebraic_lens_tie_breaks_on_first_example():
    alg = measure_lens()
    m = iris[0].measurements
    twin = Flower(m, Species.VIRGINICA)
    assert classify(alg, [iris[0], twin], m) == Flower(m, iris[0].species)


def test_kaleidoscope_aggregates_componentwise():
    kal = aggregate_kaleidoscope()
    batch = [iris[0].measurements, iris[100].measurements]
    got = aggregate(kal, max, batch)
    assert got.as_tuple() == tuple(
        max(a, b) for a, b in zip(batch[0].as_tuple(), batch[1].as_tuple()))
    with pytest.raises(EmptyInputError):
        aggregate(kal, max, [])


def test_view_rejects_partial_optics():
    with pytest.raises(KindError):
        view(address_prism(), "x, y, z")
    with pytest.raises(KindError):
        view(each(), [1, 2])


def test_preview_rejects_multi_focus_optics():
    with pytest.raises(KindError):
        preview(each(), [1])
    with pytest.raises(KindError):
        preview(measure_lens(), iris[0])


def test_set_rejects_non_cartesian_optics():
    with pytest.raises(KindError):
        set_value(each(), [1, 2], 5)
    with pytest.raises(KindError):
        set_value(Getter(get=lambda s: s), 1, 2)


def test_review_rejects_non_build_optics():
    with pytest.raises(KindError):
        review(street_lens(), "X")


def test_aggregate_rejects_non_kaleidoscopes():
    with pytest.raises(KindError):
        aggregate(street_lens(), max, [])


def test_over_rejects_read_only_optics():
    with pytest.raises(KindError):
        over(Getter(get=lambda s: s), lambda n: n, 1)


def test_classify_rejects_plain_lenses():
    with pytest.raises(KindError):
        classify(street_lens(), [], "X")


def test_composite_affine_preview_and_set():
    first = compose(address_prism(), street_lens())
    assert first.kind is K.AFFINE_TRAVERSAL
    assert preview(first, "221b Baker St, London, UK") == "221b Baker St"
    assert set_value(first, "221b Baker St, London, UK",
                     "4 Marylebone Rd") == "4 Marylebone Rd, London, UK"
    assert set_value(first, "oops", "4 Marylebone Rd") == "oops"
