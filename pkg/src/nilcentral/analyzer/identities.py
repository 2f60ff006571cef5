"""Mechanical checks of the displayed formulas used in the centralizing-map proofs.

Every check evaluates the displayed formula literally and compares it with a
direct exact computation.  Matrix entries are always produced by explicit
multiplication, never by trusting a closed form.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from math import factorial, prod

from ..exactfield import QQ, render_scalar
from ..linsolve import null_space
from ..nilmatrix import (
    RingContext,
    UTMatrix,
    commutator,
    in_center,
    matrices_from_units,
    named_matrix,
    power,
    s2_element,
    superdiagonal,
)
from .sampling import random_superdiagonal

__all__ = [
    "IdentityRecord",
    "IdentityCheckReport",
    "CoefficientSystemResult",
    "factorial_inequality_check",
    "w1c_identity_check",
    "power_closed_form_check",
    "lemma3_coefficient_system",
    "lemma3_report",
    "s1_commutator_check",
]


def _render_entries(entries: dict) -> list[dict]:
    return [{"i": i, "j": j, "v": render_scalar(v)} for (i, j), v in sorted(entries.items())]


@dataclass
class IdentityRecord:
    """One parameter point.

    ``status`` compares the displayed formula with the direct computation;
    ``claim_holds`` is the truth of the statement the proof draws from it
    (None when the display carries no such statement).
    """

    params: dict
    status: str  # "matches_paper" or "mismatch"
    displayed: object
    direct: object
    claim_holds: bool | None = None
    notes: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "params": self.params,
            "status": self.status,
            "displayed": self.displayed,
            "direct": self.direct,
            "claim_holds": self.claim_holds,
            "notes": self.notes,
        }


@dataclass
class IdentityCheckReport:
    name: str
    param_range: dict
    records: list[IdentityRecord]

    def mismatches(self) -> list[IdentityRecord]:
        return [rec for rec in self.records if rec.status != "matches_paper"]

    @property
    def all_match(self) -> bool:
        return not self.mismatches()

    @property
    def claims_hold(self) -> bool:
        return all(rec.claim_holds is not False for rec in self.records)

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "range": self.param_range,
            "records": [rec.to_dict() for rec in self.records],
            "all_match": self.all_match,
            "claims_hold": self.claims_hold,
        }


def _status(same: bool) -> str:
    return "matches_paper" if same else "mismatch"


# ---------------------------------------------------------------- factorials


def factorial_record(r: int, t: int) -> IdentityRecord:
    lhs = factorial(r)
    rhs = factorial(t + 1) * factorial(r - t) + (r - t) * factorial(r - 1) - factorial(t) * factorial(r - t)
    literal_rhs = factorial(t) * (r - t)
    holds = lhs != rhs
    literal_holds = lhs != literal_rhs
    return IdentityRecord(
        params={"r": r, "t": t},
        status=_status(holds),
        displayed="r! != (t+1)!(r-t)! + (r-t)(r-1)! - t!(r-t)!",
        direct={"r!": str(lhs), "rhs": str(rhs)},
        claim_holds=holds and literal_holds,
        notes={
            "literal_rhs_t!(r-t)": str(literal_rhs),
            "literal_inequality_holds": literal_holds,
            "factorial_form_t!(r-t)!_equal": lhs == factorial(t) * factorial(r - t),
        },
    )


def factorial_inequality_check(r_max: int) -> IdentityCheckReport:
    if r_max < 5:
        raise ValueError("r_max must be >= 5")
    recs = [factorial_record(r, t) for r in range(5, r_max + 1) for t in range(2, r - 2)]
    return IdentityCheckReport("factorial_inequality", {"r": [5, r_max], "t": "1<t<r-2"}, recs)


# ---------------------------------------------------------------- [W1, C]


def w1c_display_formula(ctx: RingContext, i: int, j: int) -> UTMatrix:
    r = ctx.r
    terms = [(-1, t, t + 2) for t in range(1, r - 1)]
    terms += [(-(i - 2), i - 2, j), (i + j - 1, i - 1, j + 1), (-(j + 1), i, j + 2)]
    return matrices_from_units(ctx, terms)


def w1c_record(ctx: RingContext, i: int, j: int) -> IdentityRecord:
    direct = commutator(named_matrix(ctx, "W1"), s2_element(ctx, i, j))
    displayed = w1c_display_formula(ctx, i, j)
    return IdentityRecord(
        params={"r": ctx.r, "i": i, "j": j},
        status=_status(direct == displayed),
        displayed=_render_entries(displayed.entries),
        direct=_render_entries(direct.entries),
        claim_holds=not in_center(direct),
    )


def w1c_identity_check(ctx: RingContext) -> IdentityCheckReport:
    if ctx.r < 4:
        raise ValueError("needs r >= 4")
    recs = [w1c_record(ctx, i, j) for i, j in ctx.pairs]
    return IdentityCheckReport("w1c_identity", {"r": ctx.r, "pairs": "1<=i<j<=r"}, recs)


# ---------------------------------------------------------------- W^t displays


def power_literal_display(r: int, t: int, which: str) -> dict:
    """Displayed sum over i=1..r-t of i(i+1)...t e_{i,i+t-1} (W1), or (r-i)...(r-t) e_{i,i+t-1} (W2).

    The product "i(i+1)...t" is read as prod(m for m in i..t), empty (=1) when i > t.
    May place entries on the diagonal, so this is a plain dict, not a UTMatrix.
    """
    out = {}
    for i in range(1, r - t + 1):
        ms = range(i, t + 1)
        c = prod(ms) if which == "W1" else prod(r - m for m in ms)
        if c != 0:
            out[(i, i + t - 1)] = QQ(c)
    return out


def power_corrected_display(r: int, t: int, which: str) -> dict:
    """sum i(i+1)...(i+t-1) e_{i,i+t} (W1), or (r-i)(r-i-1)...(r-i-t+1) e_{i,i+t} (W2)."""
    out = {}
    for i in range(1, r - t + 1):
        if which == "W1":
            c = prod(i + m for m in range(t))
        else:
            c = prod(r - i - m for m in range(t))
        if c != 0:
            out[(i, i + t)] = QQ(c)
    return out


def power_record(r: int, t: int, which: str) -> IdentityRecord:
    ctx = RingContext(r)
    direct = power(named_matrix(ctx, which), t).entries
    literal = power_literal_display(r, t, which)
    corrected = power_corrected_display(r, t, which)
    return IdentityRecord(
        params={"r": r, "t": t, "matrix": which},
        status=_status(literal == direct),
        displayed=_render_entries(literal),
        direct=_render_entries(direct),
        notes={"corrected": _render_entries(corrected), "corrected_matches": corrected == direct},
    )


def power_closed_form_check(r: int, t: int) -> IdentityCheckReport:
    if r < 4 or not 1 <= t <= r - 1:
        raise ValueError(f"need r >= 4 and 1 <= t <= r-1, got r={r}, t={t}")
    recs = [power_record(r, t, "W1"), power_record(r, t, "W2")]
    return IdentityCheckReport("power_closed_form", {"r": r, "t": t}, recs)


# ---------------------------------------------------------------- coefficient system


@dataclass
class CoefficientSystemResult:
    """gamma * (rJ)^t[slot] = alpha * W1^t[slot] + beta * W2^t[slot] at three slots."""

    r: int
    t: int
    equations: list[dict]
    forced_trivial: bool
    display_equations: list[dict]
    display_agrees: list[bool]
    display_system_forced_trivial: bool

    def to_dict(self) -> dict:
        def ren(eqs):
            return [{k: (str(v) if k != "slot" else list(v)) for k, v in e.items()} for e in eqs]

        return {
            "r": self.r,
            "t": self.t,
            "equations": ren(self.equations),
            "forced_trivial": self.forced_trivial,
            "display_equations": ren(self.display_equations),
            "display_agrees": self.display_agrees,
            "display_system_forced_trivial": self.display_system_forced_trivial,
        }


def _alpha_beta_forced_zero(eqs: list[dict]) -> bool:
    # unknowns (alpha, beta, gamma):  alpha*A + beta*B - gamma*G = 0
    rows = [[QQ(e["alpha"]), QQ(e["beta"]), -QQ(e["gamma"])] for e in eqs]
    ns = null_space(rows, 3, QQ)
    return all(v[0] == 0 and v[1] == 0 for v in ns.vectors)


def lemma3_coefficient_system(r: int, t: int) -> CoefficientSystemResult:
    if r < 5 or not 1 < t < r - 2:
        raise ValueError(f"need r >= 5 and 1 < t < r-2, got r={r}, t={t}")
    ctx = RingContext(r)
    rj_t = power(r * named_matrix(ctx, "J"), t)
    w1_t = power(named_matrix(ctx, "W1"), t)
    w2_t = power(named_matrix(ctx, "W2"), t)
    slots = [(1, 1 + t), (2, 2 + t), (r - t, r)]
    eqs = [{"slot": s, "gamma": rj_t[s], "alpha": w1_t[s], "beta": w2_t[s]} for s in slots]
    f = factorial
    displayed = [
        {"slot": slots[0], "gamma": r**t, "alpha": f(t), "beta": f(r) // f(r - t)},
        {"slot": slots[1], "gamma": r**t, "alpha": f(t + 1), "beta": f(r - 1) // f(r - t - 1)},
        {"slot": slots[2], "gamma": r**t, "alpha": f(r) // f(r - t), "beta": f(t)},
    ]
    agrees = [
        all(QQ(p[k]) == d[k] for k in ("gamma", "alpha", "beta")) for p, d in zip(displayed, eqs)
    ]
    return CoefficientSystemResult(
        r, t, eqs, _alpha_beta_forced_zero(eqs), displayed, agrees, _alpha_beta_forced_zero(displayed)
    )


def lemma3_record(r: int, t: int) -> IdentityRecord:
    res = lemma3_coefficient_system(r, t)
    d = res.to_dict()
    return IdentityRecord(
        params={"r": r, "t": t},
        status=_status(all(res.display_agrees)),
        displayed=d["display_equations"],
        direct=d["equations"],
        claim_holds=res.forced_trivial,
        notes={"display_agrees": res.display_agrees, "display_system_forced_trivial": res.display_system_forced_trivial},
    )


def lemma3_report(r_max: int) -> IdentityCheckReport:
    recs = [lemma3_record(r, t) for r in range(5, r_max + 1) for t in range(2, r - 2)]
    return IdentityCheckReport("lemma3_coefficient_system", {"r": [5, r_max], "t": "1<t<r-2"}, recs)


# ---------------------------------------------------------------- [A, B] on S1


def s1_display_formula(a: UTMatrix, b: UTMatrix) -> UTMatrix:
    ctx = a.ctx
    terms = []
    for i in range(1, ctx.r - 1):
        terms.append((a[(i, i + 1)] * b[(i + 1, i + 2)], i, i + 2))
        terms.append((-b[(i, i + 1)] * a[(i + 1, i + 2)], i, i + 2))
    return matrices_from_units(ctx, terms)


def s1_record(a: UTMatrix, b: UTMatrix, label) -> IdentityRecord:
    direct = commutator(a, b)
    displayed = s1_display_formula(a, b)
    da, db = superdiagonal(a), superdiagonal(b)
    proportional = all(x * db[0] == y * da[0] for x, y in zip(da, db))
    return IdentityRecord(
        params={
            "r": a.ctx.r,
            "case": label,
            "A": [render_scalar(v) for v in da],
            "B": [render_scalar(v) for v in db],
        },
        status=_status(direct == displayed),
        displayed=_render_entries(displayed.entries),
        direct=_render_entries(direct.entries),
        claim_holds=in_center(direct) == direct.is_zero(),
        notes={"independent": not proportional, "commute": direct.is_zero()},
    )


def s1_commutator_check(ctx: RingContext, trials: int, seed: int = 0) -> IdentityCheckReport:
    """Random S1-shaped pairs (entries in -9..9, nonzero), plus J against 2J and W1."""
    if ctx.r < 4:
        raise ValueError("needs r >= 4")
    rng = random.Random(seed)
    j = named_matrix(ctx, "J")
    recs = [s1_record(j, 2 * j, "J,2J"), s1_record(j, named_matrix(ctx, "W1"), "J,W1")]
    for k in range(trials):
        recs.append(s1_record(random_superdiagonal(ctx, rng), random_superdiagonal(ctx, rng), k))
    return IdentityCheckReport("s1_commutator", {"r": ctx.r, "trials": trials, "seed": seed}, recs)
