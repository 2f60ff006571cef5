"""Dimension of the space of centralizing (or commuting) linear maps, and the F_p sweep.

The n^2 entries M[s, k] of a coefficient matrix are the unknowns (unknown
index ``k * n + s``, matching ``MapOnN.columns``).  Each basis pair k <= l
contributes the coordinates of [L e_k, e_l] + [L e_l, e_k] that must vanish.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from ..exactfield import FieldSpec, parse_field
from ..linsolve import Eliminator, SubspaceBasis, null_space_of
from ..maps import MapOnN
from ..nilmatrix import RingContext

__all__ = [
    "KINDS",
    "SweepRow",
    "charp_sweep",
    "map_space_dimension",
    "maps_from_basis",
    "predicted_dimension",
]

KINDS = ("centralizing", "commuting")


def _unit_brackets(ctx: RingContext) -> dict[tuple[int, int], list[tuple[int, int]]]:
    """(s, l) -> [(coordinate q, +-1)] for the commutator [e_s, e_l] of basis units."""
    pairs = ctx.pairs
    out = {}
    for s, (a, b) in enumerate(pairs):
        for l, (c, d) in enumerate(pairs):
            terms = []
            if b == c:
                terms.append((ctx.idx(a, d), 1))
            if d == a:
                terms.append((ctx.idx(c, b), -1))
            if terms:
                out[(s, l)] = terms
    return out


def constraint_rows(ctx: RingContext, kind: str):
    """Yield the linear constraints (sparse dicts over the n^2 unknowns)."""
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    n = ctx.n
    one = ctx.field.one()
    corner = ctx.idx(1, ctx.r)
    skip = corner if kind == "centralizing" else None
    brackets = _unit_brackets(ctx)
    by_l: dict[int, list] = {}
    for (s, l), terms in brackets.items():
        by_l.setdefault(l, []).append((s, terms))
    for k in range(n):
        for l in range(k, n):
            rows: dict[int, dict] = {}
            # sum_s M[s,k] [e_s, e_l]  (+ the symmetric term when k != l)
            sources = [(k, l)] if k == l else [(k, l), (l, k)]
            for col, other in sources:
                for s, terms in by_l.get(other, ()):
                    u = col * n + s
                    for q, sign in terms:
                        if q == skip:
                            continue
                        row = rows.setdefault(q, {})
                        v = row.get(u, 0) + (one if sign > 0 else -one)
                        if v == 0:
                            row.pop(u, None)
                        else:
                            row[u] = v
            for row in rows.values():
                if row:
                    yield row


def map_space_dimension(ctx: RingContext, kind: str) -> tuple[int, SubspaceBasis]:
    """Dimension and basis (vectors of length n^2) of the space of linear maps of this kind."""
    e = Eliminator(ctx.n * ctx.n)
    for row in constraint_rows(ctx, kind):
        e.add_row(row)
    basis = null_space_of(e, ctx.field)
    return basis.dimension, basis


def maps_from_basis(ctx: RingContext, basis: SubspaceBasis) -> list[MapOnN]:
    n = ctx.n
    return [
        MapOnN(ctx, tuple(tuple(v[k * n : (k + 1) * n]) for k in range(n))) for v in basis.vectors
    ]


def predicted_dimension(ctx: RingContext, kind: str) -> int | None:
    """3n+1 (centralizing) or n+2 (commuting) over Q for r >= 4; None elsewhere."""
    if not ctx.field.is_rational or ctx.r < 4:
        return None
    return 3 * ctx.n + 1 if kind == "centralizing" else ctx.n + 2


@dataclass(frozen=True)
class SweepRow:
    r: int
    field: str
    n: int
    dim_centralizing: int
    dim_commuting: int
    pred_centralizing: int | None
    pred_commuting: int | None

    @property
    def exploration(self) -> bool:
        return self.field != "Q"

    @property
    def match(self) -> bool | None:
        """None when there is no prediction to compare against."""
        if self.pred_centralizing is None:
            return None
        return self.dim_centralizing == self.pred_centralizing and self.dim_commuting == self.pred_commuting

    CSV_HEADER = "r,p,n,dim_centralizing,dim_commuting,pred_centralizing,pred_commuting,match"

    def csv_line(self) -> str:
        def cell(v):
            return "n/a" if v is None else str(v)

        if self.match is None:
            match = "exploration" if self.exploration else "n/a"
        else:
            match = "true" if self.match else "false"
        return ",".join(
            [
                str(self.r),
                self.field,
                str(self.n),
                str(self.dim_centralizing),
                str(self.dim_commuting),
                cell(self.pred_centralizing),
                cell(self.pred_commuting),
                match,
            ]
        )


def _sweep_cell(args: tuple[int, str]) -> SweepRow:
    r, field_text = args
    ctx = RingContext(r, parse_field(field_text))
    dc, _ = map_space_dimension(ctx, "centralizing")
    dm, _ = map_space_dimension(ctx, "commuting")
    return SweepRow(
        r,
        field_text,
        ctx.n,
        dc,
        dm,
        predicted_dimension(ctx, "centralizing"),
        predicted_dimension(ctx, "commuting"),
    )


def _workers(cells: int, workers: int | None) -> int:
    if workers is None:
        cap = os.environ.get("NILCENTRAL_THREADS")
        workers = int(cap) if cap else (os.cpu_count() or 1)
    return max(1, min(workers, cells))


def charp_sweep(r_values, fields, workers: int | None = None) -> list[SweepRow]:
    """Census over every (r, field) cell; rows come back ordered by r, then by field as given.

    ``fields`` holds FieldSpec objects or their text ("Q", "F101"); any prime
    field must have p >= 3 and prime, otherwise FieldError is raised up front.
    """
    texts = [str(f if isinstance(f, FieldSpec) else parse_field(f)) for f in fields]
    cells = [(r, t) for r in sorted(r_values) for t in texts]
    for r, _ in cells:
        RingContext(r)
    w = _workers(len(cells), workers)
    if w == 1:
        return [_sweep_cell(c) for c in cells]
    with ProcessPoolExecutor(max_workers=w) as pool:
        return list(pool.map(_sweep_cell, cells))
