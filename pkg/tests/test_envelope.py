import random

import pytest

from affenv.bdd import FALSE, TRUE, Manager
from affenv.envelope import (
    MisalignedError, cons, extend, has_uniform_paths, is_affine,
    path_variables, satisfies, to_aff, to_aff_literal, translate, trav,
    xor_close, xor_close_translated, zero_vector)
from affenv.randgen import GenConfig, rand_bdd

from conftest import (
    FOUR_ENVELOPE, FOUR_MODELS, V, W, X, Y, Z, bits, brute_xor3, from_models,
    from_table, models_of, random_table)


def strs(ints, n):
    return {format(i, f'0{n}b') for i in ints}


def random_function(rng, n, density=None):
    mgr = Manager(n)
    d = rng.random() if density is None else density
    return mgr, from_table(mgr, random_table(rng, n, d))


# translate

def test_translate_four_models():
    mgr = Manager(5)
    r = from_models(mgr, FOUR_MODELS)
    out = translate(mgr, r, '01100')
    assert strs(models_of(mgr, out), 5) == {'00111', '00000', '11011', '10101'}


def test_translate_by_zero_is_identity():
    rng = random.Random(0)
    mgr, r = random_function(rng, 6)
    assert translate(mgr, r, (0,) * 6) == r


@pytest.mark.parametrize('n', [1, 4, 8])
def test_translate_is_xor_on_models(n):
    rng = random.Random(n)
    for _ in range(15):
        mgr, r = random_function(rng, n)
        mu = rng.getrandbits(n)
        out = translate(mgr, r, bits(mu, n))
        assert models_of(mgr, out) == {m ^ mu for m in models_of(mgr, r)}
        assert translate(mgr, out, bits(mu, n)) == r


def test_translate_eliminates_open_variables():
    mgr = Manager(3)
    r = from_models(mgr, ['010', '111'])
    out = translate(mgr, r, (None, 1, 0))
    # x0 is existentially removed, x1 flipped: 010 -> ?00, 111 -> ?01
    assert models_of(mgr, out) == {0b000, 0b001, 0b100, 0b101}


# cons

def test_cons():
    mgr = Manager(2)
    y = mgr.var(1)
    ny = mgr.bdd_not(y)
    assert cons(mgr, 0, y, ny, (1, None)) == mgr.mk_node(0, y, ny)
    assert cons(mgr, 0, y, y, (None, None)) == y
    assert cons(mgr, 0, y, ny, (None, None)) == TRUE


# extend and trav

def test_extend_sinks():
    mgr = Manager(5)
    s = zero_vector(mgr, range(5))
    mu = (0, 0, 1, 0, 1)
    assert extend(mgr, TRUE, s, mu) == TRUE
    assert extend(mgr, s, TRUE, mu) == TRUE
    assert extend(mgr, FALSE, s, mu) == translate(mgr, s, mu)


def test_extend_covers_new_vector():
    mgr = Manager(5)
    s0 = zero_vector(mgr, range(5))
    s1 = extend(mgr, s0, s0, (0, 0, 1, 0, 1))
    assert strs(models_of(mgr, s1), 5) == {'00000', '00101'}


def test_extend_rejects_misaligned_roots():
    mgr = Manager(3)
    with pytest.raises(MisalignedError):
        extend(mgr, mgr.var(0), mgr.var(1), (1, 1, 1))


def test_trav_sinks():
    mgr = Manager(3)
    s = zero_vector(mgr, range(3))
    assert trav(mgr, FALSE, (None,) * 3, s) == s
    assert trav(mgr, TRUE, (0, 0, 0), s) == s


def test_satisfies_refuses_open_variables():
    mgr = Manager(2)
    s = zero_vector(mgr, range(2))
    assert satisfies(mgr, (0, 0), s)
    assert not satisfies(mgr, (0, 1), s)
    assert not satisfies(mgr, (0, None), s)


# the worked five-variable example, step by step

def test_worked_example_replay(five):
    mgr, r = five
    mu = (0, 0, 0, 1, 1)
    shifted = translate(mgr, r, mu)
    assert strs(models_of(mgr, shifted), 5) == {
        '00000', '00101', '01010', '01110', '10110'}

    s = zero_vector(mgr, mgr.vars_of(shifted))
    s = extend(mgr, s, s, (0, 0, 1, 0, 1))
    assert strs(models_of(mgr, s), 5) == {'00000', '00101'}
    # the path 01x10 leaves x open
    s = extend(mgr, s, s, (0, 1, None, 1, 0))
    assert mgr.vars_of(s) == {V, W, Y}
    assert models_of(mgr, s) == {
        m for m in range(32) if bits(m, 5)[V] == 0
        and bits(m, 5)[W] == bits(m, 5)[Y]}
    s = extend(mgr, s, s, (1, 0, 1, 1, 0))
    space = {m for m in range(32)
             if bits(m, 5)[V] ^ bits(m, 5)[W] ^ bits(m, 5)[Y] == 0}
    assert models_of(mgr, s) == space

    assert trav(mgr, shifted, (None,) * 5,
                zero_vector(mgr, mgr.vars_of(shifted))) == s
    assert xor_close(mgr, shifted) == s

    env = translate(mgr, s, mu)
    assert models_of(mgr, env) == {m ^ 0b00011 for m in space}
    assert env == to_aff(mgr, r)


def test_five_model_envelope(five):
    mgr, r = five
    env = to_aff(mgr, r)
    assert mgr.sat_count(env) == 16
    assert mgr.vars_of(env) == {V, W, Y}
    assert models_of(mgr, env) == brute_xor3(models_of(mgr, r))
    assert has_uniform_paths(mgr, env)
    assert path_variables(mgr, env) == (V, W, Y)


# to_aff

def test_to_aff_four_models():
    mgr = Manager(5)
    env = to_aff(mgr, from_models(mgr, FOUR_MODELS))
    assert strs(models_of(mgr, env), 5) == set(FOUR_ENVELOPE)


def test_to_aff_sinks():
    mgr = Manager(4)
    assert to_aff(mgr, FALSE) == FALSE
    assert to_aff(mgr, TRUE) == TRUE


def test_xor_close_four_models():
    mgr = Manager(5)
    s = from_models(mgr, ['00111', '00000', '11011', '10101'])
    assert strs(models_of(mgr, xor_close(mgr, s)), 5) == {
        '00111', '00000', '11011', '10101', '11100', '10010', '01110', '01001'}


def test_xor_close_of_zero_vector():
    mgr = Manager(4)
    z = zero_vector(mgr, range(4))
    assert xor_close(mgr, z) == z


def test_single_model_envelope_is_itself():
    mgr = Manager(6)
    r = from_models(mgr, ['101101'])
    assert to_aff(mgr, r) == r


@pytest.mark.parametrize('n', range(1, 9))
def test_to_aff_matches_brute_closure(n):
    rng = random.Random(n)
    for _ in range(25):
        mgr, r = random_function(rng, n, rng.choice([0.05, 0.2, 0.5]))
        env = to_aff(mgr, r)
        assert models_of(mgr, env) == brute_xor3(models_of(mgr, r))


@pytest.mark.parametrize('n', range(2, 9))
def test_xor_close_output_is_vector_space(n):
    rng = random.Random(50 + n)
    for _ in range(15):
        mgr, r = random_function(rng, n, 0.2)
        mu = mgr.get_model(r)
        if mu is None:
            continue
        s = xor_close(mgr, translate(mgr, r, mu))
        ms = models_of(mgr, s)
        assert 0 in ms
        assert all(a ^ b in ms for a in ms for b in ms)
        assert has_uniform_paths(mgr, s)


def test_fused_and_literal_pipelines_agree():
    rng = random.Random(9)
    for n in range(2, 13):
        for pr in range(n + 1):
            mgr = Manager(n)
            r = rand_bdd(mgr, GenConfig(n, pr, rng.getrandbits(32)))
            mu = mgr.get_model(r)
            if mu is None:
                continue
            assert xor_close_translated(mgr, r, mu) == xor_close(
                mgr, translate(mgr, r, mu))
            assert to_aff(mgr, r) == to_aff_literal(mgr, r)


def test_to_aff_rejects_non_model():
    mgr = Manager(2)
    with pytest.raises(ValueError):
        to_aff(mgr, mgr.var(0), model=(0, 0))


def test_skipped_variable_is_eliminated():
    rng = random.Random(4)
    n = 6
    for _ in range(60):
        mgr, r = random_function(rng, n, 0.1)
        ms = models_of(mgr, r)
        env_vars = mgr.vars_of(to_aff(mgr, r))
        for v in range(n):
            bit = 1 << (n - 1 - v)
            if any(m ^ bit in ms for m in ms):
                assert v not in env_vars


def test_model_choice_does_not_matter():
    rng = random.Random(12)
    for _ in range(30):
        mgr, r = random_function(rng, 7, 0.1)
        env = to_aff(mgr, r)
        for m in models_of(mgr, r):
            assert to_aff(mgr, r, model=bits(m, 7)) == env


# is_affine and the path property

def test_is_affine():
    mgr = Manager(5)
    assert is_affine(mgr, TRUE)
    assert is_affine(mgr, FALSE)
    assert not is_affine(mgr, from_models(mgr, FOUR_MODELS))
    assert is_affine(mgr, from_models(mgr, FOUR_ENVELOPE))


def test_parity_is_affine():
    mgr = Manager(2)
    assert is_affine(mgr, mgr.bdd_xor(mgr.var(0), mgr.var(1)))
    assert brute_xor3({0b01, 0b10}) == {0b01, 0b10}


def test_path_property_fails_on_non_affine(five):
    mgr, r = five
    assert not has_uniform_paths(mgr, r)
    assert path_variables(mgr, TRUE) == ()
