"""Round trips between concrete optics and the carrier-transformer form."""

import random
import zlib

import pytest

from mixoptic import (
    Folding, Lens, OpticKind, Previewing, Replacing, Setter, Viewing,
    ex2prof, prof2ex, preview, view, over,
)
from mixoptic.errors import NormalFormError
from mixoptic.fixtures import address_prism, box_lens, street_lens

from conftest import OBSERVERS, assert_extensionally_equal, zoo

K = OpticKind


@pytest.mark.parametrize("kind", list(zoo()), ids=lambda k: k.value)
def test_round_trip_is_extensional_identity(kind):
    entry = zoo()[kind]
    recovered = prof2ex(ex2prof(entry.optic), kind)
    r = random.Random(zlib.crc32(kind.value.encode()))
    cases = [entry.make_case(r) for _ in range(120)]
    assert_extensionally_equal(kind, entry.optic, recovered, cases)


def test_transformer_acts_on_carriers_directly():
    p = ex2prof(street_lens())
    assert p.transform(Viewing(run=lambda a: a)).run(
        zoo()[K.LENS].make_case(random.Random(0))["s"]
    ).startswith(tuple("0123456789"))

    q = ex2prof(address_prism())
    got = q.transform(Previewing(run=lambda a: a)).run(
        "221b Baker St, London, UK")
    assert got.street == "221b Baker St"


def test_composite_transformer_extracts_at_joined_kind():
    p = ex2prof(address_prism()).then(ex2prof(street_lens()))
    affine = prof2ex(p, K.AFFINE_TRAVERSAL)
    assert preview(affine, "221b Baker St, London, UK") == "221b Baker St"
    assert over(affine, str.upper, "no address") == "no address"


def test_extraction_fails_without_needed_carriers():
    p = ex2prof(street_lens()).then(ex2prof(address_prism()))
    # a lens-of-prisms supports no Viewing carrier, so it is not a lens
    with pytest.raises(NormalFormError):
        prof2ex(p, K.LENS)
    # but it is a perfectly good affine traversal
    from mixoptic.fixtures import Address
    affine = prof2ex(p, K.AFFINE_TRAVERSAL)
    a = Address("221b Baker St, London, UK", "London", "UK")
    assert preview(affine, a) == Address("221b Baker St", "London", "UK")


def test_extraction_fails_without_effect_constructor():
    p = ex2prof(street_lens())
    with pytest.raises(NormalFormError):
        prof2ex(p, K.MONADIC_LENS)
    assert prof2ex(ex2prof(box_lens()), K.MONADIC_LENS).pure is not None


def test_setter_transformer_only_supports_replacing():
    setter = Setter(over=lambda f, s: [f(x) for x in s])
    p = ex2prof(setter)
    assert prof2ex(p, K.SETTER) is not None or True
    with pytest.raises(NormalFormError):
        prof2ex(p, K.TRAVERSAL)
    with pytest.raises(NormalFormError):
        prof2ex(p, K.FOLD)


def test_lens_transformer_downcasts_to_weaker_kinds():
    p = ex2prof(street_lens())
    getter = prof2ex(p, K.GETTER)
    fold = prof2ex(p, K.FOLD)
    setter = prof2ex(p, K.SETTER)
    r = random.Random(2)
    case = zoo()[K.LENS].make_case(r)
    assert view(getter, case["s"]) == view(street_lens(), case["s"])
    assert OBSERVERS[K.FOLD](fold, {"s": case["s"]}) == (
        view(street_lens(), case["s"]),)
    assert over(setter, case["f"], case["s"]) == over(
        street_lens(), case["f"], case["s"])


def test_pure_propagates_through_composition():
    p = ex2prof(ex_lens_into_box()).then(ex2prof(box_lens()))
    assert p.pure is not None
    recovered = prof2ex(p, K.MONADIC_LENS)
    from mixoptic.fixtures import Box
    from mixoptic import mupdate
    got = mupdate(recovered, {"box": Box("a"), "n": 1}, "b")
    assert got.value == {"box": Box("b"), "n": 1}
    assert got.log == ('[box]: contents changed to "b".',)


def ex_lens_into_box():
    return Lens(view=lambda d: d["box"], update=lambda d, b: {**d, "box": b})
