import random

import pytest
import sympy

from nilcentral.analyzer.centralizer import (
    centralizer_closed_form,
    centralizer_oracle,
    lemma2_form_check,
    s1_generic_diagonals,
    span_s_rank,
)
from nilcentral.analyzer.sampling import random_omega_triple, random_superdiagonal
from nilcentral.linsolve import span
from nilcentral.maps import g_map, identity_map, omega_map
from nilcentral.nilmatrix import RingContext, UTMatrix, named_matrix, power, s1_element, unit

from oracle import dense, sympy_to_fraction


def sympy_centralizer(a):
    """Null space of the dense n x n matrix of X -> AX - XA, computed by sympy."""
    ctx = a.ctx
    A = dense(a)
    cols = []
    for i, j in ctx.pairs:
        X = sympy.zeros(ctx.r, ctx.r)
        X[i - 1, j - 1] = 1
        C = A * X - X * A
        cols.append([C[p - 1, q - 1] for p, q in ctx.pairs])
    ad = sympy.Matrix(cols).T
    vecs = [[sympy_to_fraction(x) for x in v] for v in ad.nullspace()]
    return span(vecs, ctx.n) if vecs else None


def test_closed_form_examples(ctx4):
    j = named_matrix(ctx4, "J")
    cj = centralizer_closed_form(j)
    assert cj.dimension == 3
    assert cj.equals(span([power(j, t).coords() for t in (1, 2, 3)], 6))
    assert centralizer_closed_form(2 * j).equals(cj)
    assert centralizer_closed_form(named_matrix(ctx4, "W1")).dimension == 3
    with pytest.raises(ValueError):
        centralizer_closed_form(unit(ctx4, 1, 4))


def test_oracle_examples(ctx4, ctx5):
    j = named_matrix(ctx4, "J")
    assert centralizer_oracle(j).equals(centralizer_closed_form(j))
    assert centralizer_oracle(UTMatrix.zero(ctx5)).dimension == 10
    assert centralizer_oracle(unit(ctx4, 1, 4)).dimension == 6


@pytest.mark.parametrize("r", [4, 5, 6])
def test_oracle_against_sympy(r):
    ctx = RingContext(r)
    rng = random.Random(r)
    for _ in range(3):
        a = random_superdiagonal(ctx, rng)
        assert centralizer_oracle(a).equals(sympy_centralizer(a))
    b = unit(ctx, 1, 2) + unit(ctx, 2, 4)
    assert centralizer_oracle(b).equals(sympy_centralizer(b))


def test_lemma2_form_check():
    ctx = RingContext(5)
    j = named_matrix(ctx, "J")
    assert lemma2_form_check(2 * identity_map(ctx) + g_map(ctx), j)
    rng = random.Random(0)
    a = s1_element(ctx, [1, 2, -1, 3, 5])
    assert lemma2_form_check(omega_map(ctx, random_omega_triple(ctx, rng)), a)
    assert lemma2_form_check(identity_map(ctx), a)
    with pytest.raises(ValueError):
        lemma2_form_check(identity_map(ctx), unit(ctx, 1, 3))


def test_lemma2_form_check_rejects_stray_entry():
    # f(J) = e_{2,4} is outside span{J, J^2, J^3} + Omega
    ctx = RingContext(6)
    j = named_matrix(ctx, "J")
    from nilcentral.maps import map_from_images

    images = [UTMatrix.zero(ctx)] * ctx.n
    images[ctx.idx(1, 2)] = unit(ctx, 2, 4)
    assert not lemma2_form_check(map_from_images(ctx, images), j)


@pytest.mark.parametrize("r, n", [(4, 6), (5, 10), (6, 15)])
def test_span_s_rank(r, n):
    assert span_s_rank(RingContext(r)) == n


def test_generic_diagonals_give_vandermonde_superdiagonals():
    ctx = RingContext(5)
    for k, d in enumerate(s1_generic_diagonals(ctx), start=1):
        sd = s1_element(ctx, d)
        assert sd == UTMatrix(ctx, {(i, i + 1): k**i for i in range(1, 5)})


def test_geometric_diagonals_only_reach_multiples_of_j():
    # d = (1, k, ..., k^{r-1}) conjugates J to k*J: a rank-one family
    ctx = RingContext(5)
    j = named_matrix(ctx, "J")
    for k in range(1, 6):
        assert s1_element(ctx, [k**i for i in range(5)]) == k * j
