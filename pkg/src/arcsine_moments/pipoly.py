"""Exact polynomials in pi over Q(sqrt 2)."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import mpmath
from mpmath import mp

__all__ = ["QSqrt2", "PiPoly", "SQRT2", "PI"]


def _frac(v) -> Fraction:
    return v if isinstance(v, Fraction) else Fraction(v)


@dataclass(frozen=True)
class QSqrt2:
    """u + v*sqrt(2) with rational u, v."""

    u: Fraction = Fraction(0)
    v: Fraction = Fraction(0)

    def __post_init__(self) -> None:
        object.__setattr__(self, "u", _frac(self.u))
        object.__setattr__(self, "v", _frac(self.v))

    @classmethod
    def coerce(cls, other) -> "QSqrt2":
        if isinstance(other, QSqrt2):
            return other
        return cls(_frac(other), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self.u) or bool(self.v)

    def __add__(self, other):
        o = QSqrt2.coerce(other)
        return QSqrt2(self.u + o.u, self.v + o.v)

    __radd__ = __add__

    def __neg__(self):
        return QSqrt2(-self.u, -self.v)

    def __sub__(self, other):
        return self + (-QSqrt2.coerce(other))

    def __rsub__(self, other):
        return QSqrt2.coerce(other) - self

    def __mul__(self, other):
        o = QSqrt2.coerce(other)
        return QSqrt2(self.u * o.u + 2 * self.v * o.v, self.u * o.v + self.v * o.u)

    __rmul__ = __mul__

    def conjugate(self) -> "QSqrt2":
        return QSqrt2(self.u, -self.v)

    def __truediv__(self, other):
        o = QSqrt2.coerce(other)
        norm = o.u * o.u - 2 * o.v * o.v
        if norm == 0:
            raise ZeroDivisionError("division by zero in Q(sqrt2)")
        num = self * o.conjugate()
        return QSqrt2(num.u / norm, num.v / norm)

    def __pow__(self, e: int):
        if e < 0:
            return QSqrt2(1) / (self ** (-e))
        out, base = QSqrt2(1), self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def value(self):
        return self.u + self.v * mpmath.sqrt(2)

    def __str__(self) -> str:
        text = _join([_scaled(self.u, ""), _scaled(self.v, "sqrt2")])
        return text or "0"


def _scaled(q: Fraction, mono: str) -> tuple[int, str] | None:
    """(sign, text) for q*mono written as 'a*mono/b', or None when q = 0."""
    if not q:
        return None
    a, b = abs(q.numerator), q.denominator
    if not mono:
        body = str(a) if b == 1 else f"{a}/{b}"
    else:
        body = mono if a == 1 else f"{a}*{mono}"
        if b != 1:
            body += f"/{b}"
    return (-1 if q < 0 else 1), body


def _join(parts) -> str:
    out = ""
    for part in parts:
        if part is None:
            continue
        sign, body = part
        if not out:
            out = body if sign > 0 else f"-{body}"
        else:
            out += f" + {body}" if sign > 0 else f" - {body}"
    return out


SQRT2 = QSqrt2(0, 1)


class PiPoly:
    """Polynomial in pi with Q(sqrt 2) coefficients; equality is coefficient-wise."""

    __slots__ = ("_c",)

    def __init__(self, coefficients: Mapping[int, object] | None = None) -> None:
        c: dict[int, QSqrt2] = {}
        for k, v in (coefficients or {}).items():
            q = QSqrt2.coerce(v)
            if q:
                c[int(k)] = q
        self._c = c

    @classmethod
    def constant(cls, v) -> "PiPoly":
        return cls({0: v})

    @classmethod
    def monomial(cls, power: int, coeff=1) -> "PiPoly":
        return cls({power: coeff})

    @property
    def degree(self) -> int:
        return max(self._c, default=-1)

    def coefficient(self, power: int) -> QSqrt2:
        return self._c.get(power, QSqrt2())

    def items(self):
        return sorted(self._c.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, PiPoly):
            other = PiPoly.constant(other)
        return self._c == other._c

    def __hash__(self):
        return hash(tuple(self.items()))

    def __add__(self, other):
        if not isinstance(other, PiPoly):
            other = PiPoly.constant(other)
        out = dict(self._c)
        for k, v in other._c.items():
            out[k] = out.get(k, QSqrt2()) + v
        return PiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return PiPoly({k: -v for k, v in self._c.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, PiPoly) else -QSqrt2.coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, PiPoly):
            out: dict[int, QSqrt2] = {}
            for i, u in self._c.items():
                for j, v in other._c.items():
                    out[i + j] = out.get(i + j, QSqrt2()) + u * v
            return PiPoly(out)
        q = QSqrt2.coerce(other)
        return PiPoly({k: v * q for k, v in self._c.items()})

    __rmul__ = __mul__

    def __truediv__(self, other):
        q = QSqrt2.coerce(other)
        return PiPoly({k: v / q for k, v in self._c.items()})

    def __pow__(self, e: int):
        out = PiPoly.constant(1)
        for _ in range(e):
            out = out * self
        return out

    def value(self):
        """Numeric value at the ambient mpmath precision (Horner in pi)."""
        acc = mpmath.mpf(0)
        for k in range(self.degree, -1, -1):
            acc = acc * mp.pi + self.coefficient(k).value()
        return acc

    def to_json(self) -> dict:
        return {
            "terms": [
                {
                    "pi": k,
                    "u": [str(v.u.numerator), str(v.u.denominator)],
                    "v": [str(v.v.numerator), str(v.v.denominator)],
                }
                for k, v in self.items()
            ]
        }

    def __str__(self) -> str:
        parts = []
        for k, v in sorted(self._c.items(), reverse=True):
            mono = "" if k == 0 else ("pi" if k == 1 else f"pi^{k}")
            if v.u and v.v and not mono:
                parts += [_scaled(v.u, ""), _scaled(v.v, "sqrt2")]
            elif v.u and v.v:
                parts.append((1, f"({v})*{mono}"))
            elif v.u:
                parts.append(_scaled(v.u, mono))
            else:
                parts.append(_scaled(v.v, f"sqrt2*{mono}" if mono else "sqrt2"))
        return _join(parts) or "0"

    def to_latex(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k, v in sorted(self._c.items(), reverse=True):
            mono = "" if k == 0 else (r"\pi" if k == 1 else rf"\pi^{{{k}}}")
            pieces = []
            if v.u:
                pieces.append(_latex_frac(v.u))
            if v.v:
                pieces.append(_latex_frac(v.v) + r"\sqrt{2}")
            coeff = pieces[0] if len(pieces) == 1 else "(" + " + ".join(pieces) + ")"
            parts.append(coeff + mono if mono else coeff)
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"PiPoly({self})"


def _latex_frac(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    sign = "-" if q < 0 else ""
    return rf"{sign}\frac{{{abs(q.numerator)}}}{{{q.denominator}}}"


PI = PiPoly.monomial(1)
