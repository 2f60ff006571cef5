"""Exact deciders for the centralizing and commuting properties.

Write x = sum_k c_k e_k.  For f = L + c0,

    [f(x), x] = sum_k c_k^2 [L e_k, e_k]
              + sum_{k<l} c_k c_l ([L e_k, e_l] + [L e_l, e_k])
              + sum_k c_k [c0, e_k]

is a polynomial of degree <= 2 in each c_k.  Over Q, or F_p with p >= 3,
it takes values in a subspace for every x iff each coefficient does, so the
decision reduces to finitely many commutators of basis units.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from ..maps import MapOnN, apply
from ..nilmatrix import RingContext, UTMatrix, commutator, unit

__all__ = ["Witness", "DecideReport", "is_centralizing", "is_commuting", "bracket_with_unit", "violation"]


@dataclass(frozen=True)
class Witness:
    """A concrete x with [f(x), x] outside the target, plus the failed basis condition."""

    x: UTMatrix
    commutator: UTMatrix
    condition: str  # "diagonal", "cross" or "constant"
    units: tuple[tuple[int, int], ...]

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "units": [list(u) for u in self.units],
            "x": self.x.to_dict(),
            "commutator": self.commutator.to_dict(),
        }


@dataclass
class DecideReport:
    prop: str
    verdict: bool
    witnesses: list[Witness] = field(default_factory=list)

    def __bool__(self):
        return self.verdict

    def to_dict(self) -> dict:
        return {
            "property": self.prop,
            "verdict": self.verdict,
            "witnesses": [w.to_dict() for w in self.witnesses],
        }


def bracket_with_unit(entries: dict, a: int, b: int) -> dict:
    """[A, e_{a,b}] as a sparse dict, using A e_{ab} = sum_i A_{ia} e_{ib}, e_{ab} A = sum_j A_{bj} e_{aj}."""
    out: dict = {}
    for (i, j), v in entries.items():
        if j == a:
            out[(i, b)] = out.get((i, b), 0) + v
        if i == b:
            out[(a, j)] = out.get((a, j), 0) - v
    return {ij: v for ij, v in out.items() if v != 0}


def violation(entries: dict, ctx: RingContext, allow_center: bool) -> dict:
    """Entries of a commutator lying outside Z (or outside {0})."""
    corner = (1, ctx.r)
    return {ij: v for ij, v in entries.items() if not (allow_center and ij == corner)}


def _add(a: dict, b: dict) -> dict:
    out = dict(a)
    for ij, v in b.items():
        s = out.get(ij, 0) + v
        if s == 0:
            out.pop(ij, None)
        else:
            out[ij] = s
    return out


def _find_witness(f: MapOnN, units, allow_center: bool, condition: str) -> Witness:
    ctx = f.ctx
    mats = [unit(ctx, *u) for u in units]
    one = ctx.field.one()
    values = (one, -one, ctx.field.zero())
    for coeffs in product(values, repeat=len(mats)):
        if all(c == 0 for c in coeffs):
            continue
        x = UTMatrix.zero(ctx)
        for c, m in zip(coeffs, mats):
            x = x + c * m
        com = commutator(apply(f, x), x)
        if violation(com.entries, ctx, allow_center):
            return Witness(x, com, condition, tuple(units))
    # a nonzero polynomial of degree <= 2 per variable cannot vanish on {0, 1, -1}^2 when p >= 3
    raise AssertionError(f"no witness found for failed {condition} condition on {units}")


def _decide(f: MapOnN, allow_center: bool, max_witnesses: int | None) -> list[Witness]:
    ctx = f.ctx
    pairs = ctx.pairs
    images = [f.image_of_unit(k).entries for k in range(ctx.n)]
    witnesses: list[Witness] = []

    def full():
        return max_witnesses is not None and len(witnesses) >= max_witnesses

    for k, u in enumerate(pairs):
        if violation(bracket_with_unit(images[k], *u), ctx, allow_center):
            witnesses.append(_find_witness(f, [u], allow_center, "diagonal"))
            if full():
                return witnesses
    for k, u in enumerate(pairs):
        for l in range(k + 1, ctx.n):
            v = pairs[l]
            cross = _add(bracket_with_unit(images[k], *v), bracket_with_unit(images[l], *u))
            if violation(cross, ctx, allow_center):
                witnesses.append(_find_witness(f, [u, v], allow_center, "cross"))
                if full():
                    return witnesses
    if f.constant is not None:
        c0 = f.constant.entries
        for u in pairs:
            if violation(bracket_with_unit(c0, *u), ctx, allow_center):
                witnesses.append(_find_witness(f, [u], allow_center, "constant"))
                if full():
                    return witnesses
    return witnesses


def is_centralizing(f: MapOnN, max_witnesses: int | None = 8) -> DecideReport:
    """Decide whether [f(x), x] lies in the center e_{1,r}F for every x."""
    w = _decide(f, True, max_witnesses)
    return DecideReport("centralizing", not w, w)


def is_commuting(f: MapOnN, max_witnesses: int | None = 8) -> DecideReport:
    w = _decide(f, False, max_witnesses)
    return DecideReport("commuting", not w, w)
