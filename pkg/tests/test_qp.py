import json
import random

import pytest
from hypothesis import given, settings, strategies as st

from braidgen import random_word
from qpkit.braid import BraidWord, exponent_sum
from qpkit.data import path
from qpkit.errors import GroupMismatch
from qpkit.garside import words_equal
from qpkit.qp import (QPBand, QuasipositiveFactorization, SurfaceType, boundary_sum,
                      builtin_factorizations, expand, load_factorization, prepend_band,
                      surface_type)

CAT = builtin_factorizations()


def st_tuple(f):
    t = surface_type(f)
    return t.euler_characteristic, t.boundary_components, t.genus


def test_single_band():
    f = QuasipositiveFactorization.from_pairs(2, [((), 1)])
    assert expand(f).letters == (1,)


def test_expansions_match_displayed_braids(beta, beta_prime):
    assert words_equal(expand(CAT["D"]), beta)
    assert words_equal(expand(CAT["D'"]), beta_prime)
    # D is displayed without cancellations, so its expansion is letter-identical
    assert expand(CAT["D"]) == beta


@pytest.mark.parametrize("name, expected", [
    ("D", (1, 1, 0)), ("D'", (1, 1, 0)),
    ("A", (0, 2, 0)), ("A'", (0, 2, 0)),
    ("A0", (0, 2, 0)), ("T0", (-1, 1, 1)),
])
def test_catalog_surface_types(name, expected):
    assert st_tuple(CAT[name]) == expected


def test_identity_factorization():
    for n in range(1, 6):
        assert st_tuple(QuasipositiveFactorization(n)) == (n, n, 0)


def test_prepend_band_c(beta):
    c = QPBand(BraidWord.identity(5), 2)
    a = prepend_band(CAT["D"], c)
    assert a == CAT["A"]
    assert expand(a).letters == (2,) + beta.letters
    single = prepend_band(QuasipositiveFactorization(3), QPBand(BraidWord(3, (2,)), 1))
    assert len(single.bands) == 1


def test_prepend_mismatch():
    with pytest.raises(GroupMismatch):
        prepend_band(CAT["D"], QPBand(BraidWord.identity(3), 1))


def test_boundary_sum_of_disks():
    one = QuasipositiveFactorization(1)
    s = boundary_sum(one, one)
    assert s.strands == 2
    assert [(b.conjugator.letters, b.generator_index) for b in s.bands] == [((), 1)]
    assert st_tuple(s) == (1, 1, 0)


def test_boundary_sum_planar():
    # chi = 0 + 0 - 1, boundary = 2 + 2 - 1
    assert st_tuple(boundary_sum(CAT["A"], CAT["A0"])) == (-1, 3, 0)


def test_boundary_sum_shifts_indices():
    f = QuasipositiveFactorization.from_pairs(3, [((2,), 1)])
    g = QuasipositiveFactorization.from_pairs(3, [((-1,), 2)])
    s = boundary_sum(f, g)
    assert s.strands == 6
    got = [(b.conjugator.letters, b.generator_index) for b in s.bands]
    assert got == [((2,), 1), ((-4,), 5), ((), 3)]


def test_surface_type_rejects_inconsistent():
    with pytest.raises(AssertionError):
        SurfaceType(1, 2)


def test_shipped_files_match_catalog():
    files = {"D": "D.qp", "D'": "D_prime.qp", "A": "A.qp", "A'": "A_prime.qp",
             "A0": "A0.qp", "T0": "T0.qp"}
    for name, fname in files.items():
        assert load_factorization(path(fname)) == CAT[name]


def test_json_round_trip():
    f = CAT["D'"]
    assert QuasipositiveFactorization.from_json(json.loads(json.dumps(f.to_json()))) == f


@pytest.mark.parametrize("bad", [
    {"strands": 3},
    {"strands": 0, "bands": []},
    {"strands": 3, "bands": [{"conjugator": "1", "generator": 3}]},
    {"strands": 3, "bands": [{"conjugator": "1 0", "generator": 1}]},
    {"strands": 3, "bands": [{"conjugator": "1", "generator": 1, "extra": 0}]},
])
def test_json_rejects(bad):
    with pytest.raises(ValueError):
        QuasipositiveFactorization.from_json(bad)


def _random_factorization(rng, max_strands=5, max_bands=5):
    n = rng.randint(1, max_strands)
    if n == 1:
        return QuasipositiveFactorization(1)
    bands = [QPBand(random_word(rng, n, rng.randint(0, 6)), rng.randint(1, n - 1))
             for _ in range(rng.randint(0, max_bands))]
    return QuasipositiveFactorization(n, tuple(bands))


@pytest.mark.property
class TestProperties:
    @settings(max_examples=200, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_exponent_sum_is_band_count(self, seed):
        f = _random_factorization(random.Random(seed))
        assert exponent_sum(expand(f)) == len(f.bands)
        t = surface_type(f)
        assert (2 - t.euler_characteristic - t.boundary_components) % 2 == 0

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_prepend_drops_chi(self, seed):
        rng = random.Random(seed)
        f = _random_factorization(rng)
        if f.strands < 2:
            return
        b = QPBand(random_word(rng, f.strands, 4), rng.randint(1, f.strands - 1))
        assert surface_type(prepend_band(f, b)).euler_characteristic == \
            surface_type(f).euler_characteristic - 1

    @settings(max_examples=100, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_boundary_sum_arithmetic(self, seed):
        rng = random.Random(seed)
        f, g, h = (_random_factorization(rng) for _ in range(3))
        tf, tg = surface_type(f), surface_type(g)
        s = surface_type(boundary_sum(f, g))
        assert s.euler_characteristic == tf.euler_characteristic + tg.euler_characteristic - 1
        assert s.boundary_components == tf.boundary_components + tg.boundary_components - 1
        assert s.genus == tf.genus + tg.genus
        assert surface_type(boundary_sum(boundary_sum(f, g), h)) == \
            surface_type(boundary_sum(f, boundary_sum(g, h)))
