import random
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from nilcentral.analyzer.deciders import is_centralizing, is_commuting
from nilcentral.analyzer.decompose import (
    DecompositionError,
    decompose_centralizing,
    decompose_commuting,
)
from nilcentral.analyzer.sampling import random_functional, random_omega_triple, random_scalar
from nilcentral.maps import (
    AffineMapError,
    g_map,
    identity_map,
    map_from_images,
    omega_map,
    p_map,
    zero_map,
    zeta_map,
)
from nilcentral.nilmatrix import RingContext, UTMatrix, unit


def picker(ctx, *pairs):
    v = [0] * ctx.n
    for ij in pairs:
        v[ctx.idx(*ij)] = 1
    return v


def test_scalar_identity(ctx4):
    cd = decompose_centralizing(3 * identity_map(ctx4))
    assert cd.lam == 3 and cd.mu == zero_map(ctx4)


def test_identity_plus_g_plus_zeta(ctx4):
    z = zeta_map(ctx4, picker(ctx4, (2, 3)))
    f = 2 * identity_map(ctx4) + g_map(ctx4) + z
    cd = decompose_centralizing(f)
    assert cd.lam == 2
    assert cd.mu == g_map(ctx4) + z
    assert cd.assemble() == f


def test_omega_map_r5():
    ctx = RingContext(5)
    f = omega_map(ctx, random_omega_triple(ctx, random.Random(5)))
    assert is_centralizing(f).verdict
    cd = decompose_centralizing(f)
    assert cd.lam == 0 and cd.mu == f


def test_commuting_examples():
    ctx4, ctx5 = RingContext(4), RingContext(5)
    md = decompose_commuting(Fraction(1, 2) * identity_map(ctx4))
    assert (md.lam, md.a, md.zeta, md.is_standard_form) == (Fraction(1, 2), 0, (0,) * 6, True)
    md = decompose_commuting(identity_map(ctx5) + 4 * g_map(ctx5))
    assert (md.lam, md.a, md.zeta, md.is_standard_form) == (1, 4, (0,) * 10, False)
    functional = picker(ctx4, (1, 2), (3, 4))
    md = decompose_commuting(zeta_map(ctx4, functional))
    assert (md.lam, md.a, md.is_standard_form) == (0, 0, True)
    assert list(md.zeta) == functional


def test_errors(ctx4):
    with pytest.raises(ValueError):
        decompose_centralizing(identity_map(RingContext(3)))
    with pytest.raises(AffineMapError):
        decompose_centralizing(p_map(ctx4))
    images = [UTMatrix.zero(ctx4)] * 6
    images[ctx4.idx(2, 3)] = unit(ctx4, 2, 3)
    with pytest.raises(DecompositionError) as err:
        decompose_centralizing(map_from_images(ctx4, images))
    assert err.value.image is not None


def test_centralizing_but_not_commuting_rejected(ctx4):
    images = [UTMatrix.zero(ctx4)] * 6
    images[ctx4.idx(1, 2)] = unit(ctx4, 1, 3)
    f = map_from_images(ctx4, images)
    assert is_centralizing(f).verdict and not is_commuting(f).verdict
    with pytest.raises(DecompositionError):
        decompose_commuting(f)
    images = [UTMatrix.zero(ctx4)] * 6
    images[ctx4.idx(2, 3)] = unit(ctx4, 1, 3)
    f = map_from_images(ctx4, images)
    assert is_centralizing(f).verdict and not is_commuting(f).verdict
    with pytest.raises(DecompositionError):
        decompose_commuting(f)


ctxs = st.sampled_from([RingContext(r) for r in (4, 5, 6)])
seeds = st.integers(0, 2**32)


@given(ctxs, seeds)
def test_centralizing_roundtrip_and_uniqueness(ctx, seed):
    rng = random.Random(seed)
    lam = random_scalar(ctx, rng)
    mu = omega_map(ctx, random_omega_triple(ctx, rng))
    f = lam * identity_map(ctx) + mu
    cd = decompose_centralizing(f)
    assert cd.lam == lam and cd.mu == mu
    assert cd.assemble() == f


@given(ctxs, seeds, st.booleans())
def test_commuting_roundtrip(ctx, seed, standard):
    rng = random.Random(seed)
    lam = random_scalar(ctx, rng)
    a = 0 if standard else random_scalar(ctx, rng, nonzero=True)
    zeta = random_functional(ctx, rng)
    f = lam * identity_map(ctx) + a * g_map(ctx) + zeta_map(ctx, zeta)
    md = decompose_commuting(f)
    assert (md.lam, md.a, md.zeta) == (lam, a, zeta)
    assert md.is_standard_form == standard
    assert md.assemble(ctx) == f
