"""Exact scalars: rationals (``fractions.Fraction``) and residues mod an odd prime.

Every other module manipulates raw field elements with ordinary Python
operators, so the two element types share one protocol: ``+ - * /``, unary
minus, ``== 0`` for zero tests.  Plain ``int`` operands are accepted by both and
are mapped into the field; mixing two different fields raises
:class:`FieldMismatchError`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = [
    "FieldError",
    "FieldMismatchError",
    "ScalarParseError",
    "ModP",
    "FieldSpec",
    "QQ",
    "Scalar",
    "is_prime",
    "parse_field",
    "parse_scalar",
    "render_scalar",
    "scalar_arith",
]


class FieldError(ValueError):
    pass


class FieldMismatchError(FieldError, TypeError):
    pass


class ScalarParseError(FieldError):
    pass


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    k = 3
    while k * k <= p:
        if p % k == 0:
            return False
        k += 2
    return True


class ModP:
    """Residue class modulo a prime ``p``, stored as its representative in ``0..p-1``."""

    __slots__ = ("value", "p")

    def __init__(self, value: int, p: int):
        self.value = value % p
        self.p = p

    def _other(self, other):
        if isinstance(other, ModP):
            if other.p != self.p:
                raise FieldMismatchError(f"cannot combine F{self.p} with F{other.p}")
            return other.value
        if isinstance(other, int):
            return other
        if isinstance(other, Fraction):
            raise FieldMismatchError(f"cannot combine F{self.p} with a rational")
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(self.value + o, self.p)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(self.value - o, self.p)

    def __rsub__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(o - self.value, self.p)

    def __mul__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(self.value * o, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "ModP":
        if self.value == 0:
            raise ZeroDivisionError(f"division by zero in F{self.p}")
        return ModP(pow(self.value, -1, self.p), self.p)

    def __truediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return self * ModP(o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is NotImplemented:
            return o
        return ModP(o, self.p) * self.inverse()

    def __neg__(self):
        return ModP(-self.value, self.p)

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e < 0:
            return self.inverse() ** (-e)
        return ModP(pow(self.value, e, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, ModP):
            return self.p == other.p and self.value == other.value
        if isinstance(other, int):
            return (self.value - other) % self.p == 0
        return NotImplemented

    def __hash__(self):
        return hash((self.value, self.p))

    def __bool__(self):
        return self.value != 0

    def __repr__(self):
        return f"ModP({self.value}, {self.p})"

    def __str__(self):
        return str(self.value)


Scalar = Union[Fraction, ModP]

_SCALAR_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")
_FIELD_RE = re.compile(r"^F(\d+)$")


@dataclass(frozen=True)
class FieldSpec:
    """Which exact field is active: ``FieldSpec()`` is Q, ``FieldSpec("F", 7)`` is F_7."""

    kind: str = "Q"
    p: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.p is not None:
                raise FieldError("the rational field takes no modulus")
        elif self.kind == "F":
            if self.p is None or not is_prime(self.p) or self.p < 3:
                raise FieldError(f"prime field needs a prime p >= 3, got {self.p}")
        else:
            raise FieldError(f"unknown field kind {self.kind!r}")

    @classmethod
    def prime(cls, p: int) -> "FieldSpec":
        return cls("F", p)

    @property
    def is_rational(self) -> bool:
        return self.kind == "Q"

    @property
    def characteristic(self) -> int:
        return 0 if self.kind == "Q" else self.p

    def __str__(self):
        return "Q" if self.kind == "Q" else f"F{self.p}"

    def __call__(self, x) -> Scalar:
        """Coerce ``x`` (int, Fraction, ModP or scalar text) into this field."""
        if isinstance(x, str):
            return parse_scalar(x, self)
        if self.kind == "Q":
            if isinstance(x, ModP):
                raise FieldMismatchError(f"F{x.p} element used over Q")
            if isinstance(x, (int, Fraction)):
                return Fraction(x)
            raise FieldError(f"cannot coerce {x!r} into Q")
        if isinstance(x, ModP):
            if x.p != self.p:
                raise FieldMismatchError(f"F{x.p} element used over F{self.p}")
            return x
        if isinstance(x, int):
            return ModP(x, self.p)
        if isinstance(x, Fraction):
            return ModP(x.numerator, self.p) / x.denominator
        raise FieldError(f"cannot coerce {x!r} into F{self.p}")

    def zero(self) -> Scalar:
        return self(0)

    def one(self) -> Scalar:
        return self(1)

    def owns(self, x) -> bool:
        if self.kind == "Q":
            return isinstance(x, Fraction)
        return isinstance(x, ModP) and x.p == self.p


QQ = FieldSpec()


def parse_field(text: str) -> FieldSpec:
    """``"Q"`` or ``"F<p>"``."""
    if text == "Q":
        return QQ
    m = _FIELD_RE.match(text)
    if not m:
        raise FieldError(f"malformed field spec {text!r}; expected 'Q' or 'F<p>'")
    return FieldSpec.prime(int(m.group(1)))


def parse_scalar(text: str, spec: FieldSpec = QQ) -> Scalar:
    m = _SCALAR_RE.match(text)
    if not m:
        raise ScalarParseError(f"malformed scalar {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ScalarParseError(f"zero denominator in {text!r}")
    if spec.is_rational:
        return Fraction(num, den)
    if den % spec.p == 0:
        raise ScalarParseError(f"denominator of {text!r} vanishes in {spec}")
    return ModP(num, spec.p) / den


def render_scalar(x) -> str:
    if isinstance(x, Fraction):
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, (ModP, int)):
        return str(x)
    raise FieldError(f"not a field element: {x!r}")


def scalar_arith(a: Scalar, b: Scalar, op: str) -> Scalar:
    """Apply ``op`` in {"add", "sub", "mul", "div"}; both operands must share a field."""
    if type(a) is not type(b) or (isinstance(a, ModP) and a.p != b.p):
        raise FieldMismatchError(f"operands from different fields: {a!r}, {b!r}")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b == 0:
            raise ZeroDivisionError("division by zero")
        return a / b
    raise ValueError(f"unknown op {op!r}")
