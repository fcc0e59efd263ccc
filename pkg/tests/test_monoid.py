import random

import pytest
from conftest import C12, C22
from hypothesis import given
from hypothesis import strategies as st

from nmonoid.codes import Code, is_maximal_joinless
from nmonoid.errors import DimensionTooSmall, NotJoinless, UnknownGenerator, ZeroMorphism
from nmonoid.monoid import (
    GeneratorSet,
    acts_on_first_coordinate,
    certificate_equal,
    certificate_level,
    eval_word,
    factorize_gmg,
    is_unit,
    jsimplicity_witness,
    maximal_prefix_code,
    pseudo_inverse,
    unit_inverse,
    word_equal,
)
from nmonoid.oracle import oracle_equal
from nmonoid.sampling import random_rm0_table, random_rm1_table, random_unit
from nmonoid.tables import (
    MorphismClass,
    Table,
    classify,
    compose,
    identity,
    maxlen_of,
    morphism_equal,
    normalize,
    zero,
)
from nmonoid.words import Context

RM2_TABLE = {"0,0": "e,e", "0,1": "e,0", "1,0": "0,e"}
BIT_SWAP = {"00": "00", "01": "10", "10": "01", "11": "11"}


@pytest.fixture
def gens():
    return GeneratorSet(
        C12,
        {
            "f": Table(C12, {"0": "0", "1": "10"}),
            "g": Table(C12, {"0": "0", "1": "0"}),
            "h": Table(C12, {"0": "0", "1": "00"}),
            "r": Table(C12, {"0": "0", "1": "1"}),
        },
    )


def test_generator_set_validation(gens):
    assert gens.c == 2 and gens.c_gamma == 12
    with pytest.raises(NotJoinless):
        GeneratorSet(C22, {"bad": Table(C22, {"e,0": "e,0", "0,e": "0,e"})})
    with pytest.raises(UnknownGenerator):
        eval_word(gens, "f q")


def test_eval_word_examples(gens):
    assert eval_word(gens, "") == identity(C12)
    assert eval_word(gens, "h") == normalize(gens["h"])
    assert morphism_equal(eval_word(gens, "g f"), Table(C12, {"0": "0", "1": "00"}))
    assert classify(eval_word(gens, "g f h f")) is MorphismClass.NORM


def test_word_equal_examples(gens):
    assert word_equal(gens, "f g", "f g")
    assert word_equal(gens, "f", "f r")
    assert word_equal(gens, "g f", "h")
    assert word_equal(gens, "g f", "h", certificate=True)
    assert certificate_equal(gens, "g f", "h", level=2, method="enumerate")
    assert not word_equal(gens, "f", "g")
    assert not word_equal(gens, "f", "g", certificate=True)
    assert certificate_level(gens, ("g", "f"), ("h",)) == 12 * 8


def test_certificate_methods_agree(gens):
    for u, v in [("g f", "h"), ("f", "g"), ("f f", "f"), ("h h", "h g f")]:
        a = certificate_equal(gens, u, v, level=6, method="enumerate")
        b = certificate_equal(gens, u, v, level=6, method="cylinder")
        assert a == b == word_equal(gens, u, v)


def test_pseudo_inverse_examples():
    assert pseudo_inverse(identity(C12)) == identity(C12)
    phi = Table(C12, {"00": "00", "01": "01", "1": "00"})
    fp = pseudo_inverse(phi)
    assert fp == Table(C12, {"00": "00", "01": "01"})
    assert morphism_equal(compose(phi, compose(fp, phi)), phi)
    assert pseudo_inverse(zero(C12)) == zero(C12)


def test_unit_examples():
    assert unit_inverse(identity(C22)) == identity(C22)
    swap = Table(C12, BIT_SWAP)
    assert is_unit(swap)
    assert morphism_equal(compose(unit_inverse(swap), swap), identity(C12))
    assert not is_unit(Table(C12, {"0": "0", "1": "00"}))
    assert not is_unit(zero(C12))
    assert not is_unit(Table(C12, {"0": "0"}))


def _check_factorization(f, fac):
    assert is_unit(fac.g1) and is_unit(fac.g2)
    assert acts_on_first_coordinate(fac.h)
    assert morphism_equal(compose(fac.g2, compose(fac.h, fac.g1)), normalize(f))


def test_factorization_examples():
    sigma = Table(C22, {"0,e": "e,0", "1,e": "e,1"})
    fac = factorize_gmg(sigma)
    assert fac.case == 1
    _check_factorization(sigma, fac)
    # RM2_TABLE misses (1,1), so its domain is not maximal.
    f = Table(C22, RM2_TABLE)
    fac = factorize_gmg(f)
    assert fac.case == 3
    _check_factorization(f, fac)
    total = Table(C22, {"0,e": "0,e", "1,e": "0,1"})
    fac = factorize_gmg(total)
    assert fac.case == 2
    _check_factorization(total, fac)
    partial = Table(C22, {"0,e": "0,e"})
    fac = factorize_gmg(partial)
    assert fac.case == 4
    _check_factorization(partial, fac)
    with pytest.raises(ZeroMorphism):
        factorize_gmg(zero(C22))
    with pytest.raises(DimensionTooSmall):
        factorize_gmg(identity(C12))


def test_factorization_with_comb_codes():
    f = Table(C22, RM2_TABLE)
    _check_factorization(f, factorize_gmg(f, shape="comb"))


def test_maximal_prefix_code_shapes():
    assert maximal_prefix_code(2, 4, shape="comb") == ["000", "001", "01", "1"]
    assert maximal_prefix_code(2, 4) == ["00", "01", "10", "11"]
    assert maximal_prefix_code(3, 5) == ["00", "01", "02", "1", "2"]
    with pytest.raises(ValueError):
        maximal_prefix_code(3, 4)
    for size in range(1, 40, 2):
        C = Code(C12, [(w,) for w in maximal_prefix_code(2, size)])
        assert len(C) == size and is_maximal_joinless(C)


def test_jsimplicity_examples():
    alpha, beta = jsimplicity_witness(identity(C22))
    assert alpha == beta == identity(C22)
    f = Table(C12, {"0": "0", "1": "00"})
    alpha, beta = jsimplicity_witness(f, key="1")
    assert alpha == Table(C12, {"": "1"}) and beta == Table(C12, {"00": ""})
    assert morphism_equal(compose(beta, compose(f, alpha)), identity(C12))
    g = Table(C22, RM2_TABLE)
    alpha, beta = jsimplicity_witness(g)
    assert alpha == Table(C22, {",": "0,0"}) and beta == identity(C22)
    assert morphism_equal(compose(beta, compose(g, alpha)), identity(C22))
    with pytest.raises(ZeroMorphism):
        jsimplicity_witness(zero(C12))


seeds = st.integers(0, 10**6)


def _random_gens(rng):
    ctx = Context(rng.randint(1, 2), 2)
    count = rng.randint(1, 4)
    return GeneratorSet(ctx, {f"g{j}": random_rm1_table(rng, ctx, 2) for j in range(count)})


@given(seeds)
def test_word_problem_routes_agree(seed):
    rng = random.Random(seed)
    G = _random_gens(rng)
    u = tuple(rng.choice(G.names) for _ in range(rng.randint(0, 5)))
    v = tuple(rng.choice(G.names) for _ in range(rng.randint(0, 5)))
    fu, fv = eval_word(G, u), eval_word(G, v)
    answer = word_equal(G, u, v)
    assert answer == word_equal(G, u, v, certificate=True) == oracle_equal(fu, fv)
    assert maxlen_of(fu) <= 6 * G.c * len(u) ** 3 or not u


@given(seeds)
def test_regularity(seed):
    rng = random.Random(seed)
    f = random_rm0_table(rng, Context(rng.randint(1, 2), 2), 2)
    fp = pseudo_inverse(f)
    assert morphism_equal(compose(f, compose(fp, f)), f)


@given(seeds)
def test_unit_group(seed):
    rng = random.Random(seed)
    ctx = Context(rng.randint(1, 2), rng.randint(2, 3))
    a, b = random_unit(rng, ctx, 2), random_unit(rng, ctx, 2)
    assert is_unit(a) and is_unit(b)
    inv = unit_inverse(a)
    assert is_unit(inv)
    assert morphism_equal(compose(inv, a), identity(ctx))
    assert morphism_equal(compose(a, inv), identity(ctx))
    assert is_unit(compose(a, b))


@given(seeds)
def test_factorization_contract(seed):
    rng = random.Random(seed)
    f = random_rm0_table(rng, C22, 2, nonzero=True)
    _check_factorization(f, factorize_gmg(f))


@given(seeds)
def test_witness_contract(seed):
    rng = random.Random(seed)
    ctx = Context(rng.randint(1, 2), rng.randint(2, 3))
    f = random_rm0_table(rng, ctx, 2, nonzero=True)
    alpha, beta = jsimplicity_witness(f)
    assert morphism_equal(compose(beta, compose(f, alpha)), identity(ctx))
