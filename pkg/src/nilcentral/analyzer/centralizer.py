"""Centralizers of superdiagonal elements, the power-span-plus-Omega form check, and the S-span rank."""

from __future__ import annotations

from ..linsolve import SubspaceBasis, null_space, span
from ..maps import MapOnN, apply
from ..nilmatrix import (
    RingContext,
    UTMatrix,
    is_s1_shaped,
    omega_slots,
    power,
    s1_element,
    s2_element,
    unit,
)
from .deciders import bracket_with_unit

__all__ = [
    "centralizer_closed_form",
    "centralizer_oracle",
    "lemma2_form_check",
    "s1_generic_diagonals",
    "span_s_rank",
]


def centralizer_closed_form(a: UTMatrix) -> SubspaceBasis:
    """span{A, A^2, ..., A^{r-1}} for A with a full nonzero superdiagonal."""
    if not is_s1_shaped(a):
        raise ValueError("closed-form centralizer needs a superdiagonal matrix with all entries nonzero")
    ctx = a.ctx
    return span([power(a, t).coords() for t in range(1, ctx.r)], ctx.n)


def centralizer_oracle(a: UTMatrix) -> SubspaceBasis:
    """Null space of X -> [A, X] on coordinates; works for any A."""
    ctx = a.ctx
    entries = a.entries
    zero = ctx.field.zero()
    # column k of ad_A is the coordinate vector of [A, e_k]
    rows = [[zero] * ctx.n for _ in range(ctx.n)]
    for k, ij in enumerate(ctx.pairs):
        for pos, v in bracket_with_unit(entries, *ij).items():
            rows[ctx.idx(*pos)][k] = v
    return null_space(rows, ctx.n, ctx.field)


def lemma2_form_check(f: MapOnN, a: UTMatrix) -> bool:
    """Is f(A) in span{A, ..., A^{r-3}} + Omega?"""
    ctx = a.ctx
    if ctx.r < 4:
        raise ValueError("needs r >= 4")
    if not is_s1_shaped(a):
        raise ValueError("A must have a full nonzero superdiagonal and nothing else")
    gens = [power(a, t).coords() for t in range(1, ctx.r - 2)]
    gens += [unit(ctx, *ij).coords() for ij in omega_slots(ctx)]
    return span(gens, ctx.n).contains(apply(f, a).coords())


def s1_generic_diagonals(ctx: RingContext) -> list[list[int]]:
    """Diagonals d_i = k^{i(i-1)/2}, k = 1..r, giving superdiagonals (k, k^2, ..., k^{r-1}).

    Those superdiagonals form a Vandermonde system, so the r conjugates of J
    span the whole superdiagonal.
    """
    r = ctx.r
    return [[k ** (i * (i - 1) // 2) for i in range(1, r + 1)] for k in range(1, r + 1)]


def span_s_rank(ctx: RingContext) -> int:
    diagonals = [d for d in s1_generic_diagonals(ctx) if all(ctx.field(x) != 0 for x in d)]
    gens = [s1_element(ctx, d).coords() for d in diagonals]
    gens += [s2_element(ctx, i, j).coords() for i, j in ctx.pairs]
    return span(gens, ctx.n).dimension
