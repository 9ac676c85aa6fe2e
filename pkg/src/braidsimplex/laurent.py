"""
Exact Laurent polynomials in two variables q and t with integer coefficients.

A LaurentQT is an immutable map (q-exponent, t-exponent) -> nonzero int. It is the
scalar ring for every symbolic matrix in the package; Python's int gives the
arbitrary-precision coefficients for free.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

from .errors import ZeroBase

Exps = tuple[int, int]
Number = Union[int, Fraction, float]


class LaurentQT:
    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exps, int] | Iterable[tuple[Exps, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exps, int] = {}
        for (a, b), c in items:
            c = int(c)
            if c:
                key = (int(a), int(b))
                s = acc.get(key, 0) + c
                if s:
                    acc[key] = s
                else:
                    acc.pop(key, None)
        self._terms = acc
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exps, int]) -> LaurentQT:
        # terms must already be canonical (no zero coefficients)
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # constructors
    @classmethod
    def const(cls, c: int) -> LaurentQT:
        return cls._raw({(0, 0): int(c)} if c else {})

    @classmethod
    def monomial(cls, qexp: int = 0, texp: int = 0, coeff: int = 1) -> LaurentQT:
        return cls._raw({(qexp, texp): int(coeff)} if coeff else {})

    @classmethod
    def coerce(cls, x) -> LaurentQT:
        if isinstance(x, LaurentQT):
            return x
        if isinstance(x, bool) or not isinstance(x, int):
            if isinstance(x, Fraction) and x.denominator == 1:
                return cls.const(x.numerator)
            raise TypeError(f"cannot coerce {x!r} to LaurentQT")
        return cls.const(x)

    @property
    def terms(self) -> dict[Exps, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_unit_monomial(self) -> bool:
        """True for +-q^a t^b, the units of Z[q, 1/q, t, 1/t]."""
        return len(self._terms) == 1 and abs(next(iter(self._terms.values()))) == 1

    # ring operations
    def __add__(self, other):
        try:
            other = LaurentQT.coerce(other)
        except TypeError:
            return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        acc = dict(self._terms)
        for k, c in other._terms.items():
            s = acc.get(k, 0) + c
            if s:
                acc[k] = s
            else:
                del acc[k]
        return LaurentQT._raw(acc)

    __radd__ = __add__

    def __neg__(self):
        return LaurentQT._raw({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = LaurentQT.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        try:
            other = LaurentQT.coerce(other)
        except TypeError:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        try:
            other = LaurentQT.coerce(other)
        except TypeError:
            return NotImplemented
        a, b = self._terms, other._terms
        if not a or not b:
            return _ZERO
        if len(b) == 1 and (0, 0) in b:
            c = b[(0, 0)]
            return self if c == 1 else LaurentQT._raw({k: v * c for k, v in a.items()})
        if len(a) == 1 and (0, 0) in a:
            return other * self
        acc: dict[Exps, int] = {}
        for (qa, ta), ca in a.items():
            for (qb, tb), cb in b.items():
                key = (qa + qb, ta + tb)
                acc[key] = acc.get(key, 0) + ca * cb
        return LaurentQT._raw({k: v for k, v in acc.items() if v})

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if not self.is_unit_monomial():
                raise ValueError("only unit monomials are invertible in the Laurent ring")
            ((qe, te), c), = self._terms.items()
            return LaurentQT.monomial(qe * k, te * k, c ** (-k))
        out = _ONE
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # comparison / hashing
    def __eq__(self, other):
        if isinstance(other, LaurentQT):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if isinstance(other, Fraction) and other.denominator != 1:
                return False
            return self._terms == ({(0, 0): int(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # substitution
    def eval(self, q0: Number = 1, t0: Number = 1):
        """Substitute numbers for q and t. Exact for int/Fraction inputs, float otherwise."""
        if isinstance(q0, int) and not isinstance(q0, bool):
            q0 = Fraction(q0)
        if isinstance(t0, int) and not isinstance(t0, bool):
            t0 = Fraction(t0)
        total = Fraction(0) if isinstance(q0, Fraction) and isinstance(t0, Fraction) else 0.0
        for (a, b), c in self._terms.items():
            if (a < 0 and q0 == 0) or (b < 0 and t0 == 0):
                raise ZeroBase("negative exponent evaluated at zero")
            total += c * q0 ** a * t0 ** b
        return total

    def subs_t(self, t0: int) -> LaurentQT:
        """Specialize t to an integer, keeping q symbolic."""
        if t0 == 0 and any(b < 0 for _, b in self._terms):
            raise ZeroBase("negative t exponent evaluated at t=0")
        if t0 not in (1, -1) and any(b < 0 for _, b in self._terms):
            raise ValueError("non-unit t specialization would leave the integer ring")
        acc: dict[Exps, int] = {}
        for (a, b), c in self._terms.items():
            v = c * (t0 ** b if b >= 0 else t0 ** (-b))
            acc[(a, 0)] = acc.get((a, 0), 0) + v
        return LaurentQT(acc)

    def invert_q(self) -> LaurentQT:
        """The image under q -> 1/q."""
        return LaurentQT._raw({(-a, b): c for (a, b), c in self._terms.items()})

    def q_degree(self) -> int:
        """Highest power of q present (0 for the zero polynomial)."""
        return max((a for a, _ in self._terms), default=0)

    def q_low_degree(self) -> int:
        return min((a for a, _ in self._terms), default=0)

    def t_degree(self) -> int:
        return max((b for _, b in self._terms), default=0)

    # serialization
    def to_json(self) -> list[dict]:
        return [{"q": a, "t": b, "c": str(c)} for (a, b), c in sorted(self._terms.items())]

    @classmethod
    def from_json(cls, data: list[dict]) -> LaurentQT:
        return cls(((int(d["q"]), int(d["t"])), int(d["c"])) for d in data)

    def __repr__(self):
        return f"LaurentQT({self})"

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for (a, b), c in sorted(self._terms.items(), key=lambda kv: (-kv[0][1], -kv[0][0])):
            mono = "*".join(
                s for s in (_power("t", b), _power("q", a)) if s
            )
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        out = " + ".join(parts)
        return out.replace("+ -", "- ")


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    if e == 1:
        return var
    return f"{var}^{e}"


_ZERO = LaurentQT()
_ONE = LaurentQT.const(1)

ZERO = _ZERO
ONE = _ONE
Q = LaurentQT.monomial(1, 0)
T = LaurentQT.monomial(0, 1)


def poly_mul(a: LaurentQT, b: LaurentQT) -> LaurentQT:
    return a * b


def poly_eval(a: LaurentQT, q0: Number, t0: Number = 1):
    return a.eval(q0, t0)
