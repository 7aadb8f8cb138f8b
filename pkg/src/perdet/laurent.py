"""Exact scalars: Python ints and Laurent polynomials in one variable ``q``.

Every value handled by the linear algebra is either a plain ``int`` or a
:class:`Laurent`.  Arithmetic never rounds.  A Laurent polynomial whose only
term is a constant collapses back to ``int`` through :func:`normalize`, so
integer matrices stay on the fast path.
"""
from __future__ import annotations

import re
from typing import Dict, Iterable, Tuple, Union

__all__ = [
    "Laurent",
    "RingElement",
    "Q",
    "normalize",
    "exact_div",
    "is_unit",
    "ring_eq",
    "evaluate",
    "as_laurent",
    "parse_poly",
    "format_poly",
]


class Laurent:
    """Laurent polynomial ``sum c_k q^k`` with arbitrary-precision coefficients.

    Stored densely as ``low`` (smallest exponent) and a coefficient tuple with
    nonzero first and last entries.  The zero polynomial has no coefficients.
    """

    __slots__ = ("low", "coeffs", "_hash")

    def __init__(self, terms: Union[Dict[int, int], None] = None, *, low: int = 0,
                 coeffs: Iterable[int] = ()):
        if terms is not None:
            items = [(e, c) for e, c in terms.items() if c]
            if items:
                lo = min(e for e, _ in items)
                hi = max(e for e, _ in items)
                buf = [0] * (hi - lo + 1)
                for e, c in items:
                    buf[e - lo] += c
                low, coeffs = lo, buf
            else:
                low, coeffs = 0, ()
        coeffs = list(coeffs)
        i = 0
        while i < len(coeffs) and coeffs[i] == 0:
            i += 1
        j = len(coeffs)
        while j > i and coeffs[j - 1] == 0:
            j -= 1
        self.coeffs: Tuple[int, ...] = tuple(coeffs[i:j])
        self.low: int = low + i if self.coeffs else 0
        self._hash = None

    # -- construction helpers -------------------------------------------------
    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "Laurent":
        return cls(low=exponent, coeffs=(coeff,))

    @classmethod
    def _raw(cls, low: int, coeffs: list) -> "Laurent":
        return cls(low=low, coeffs=coeffs)

    # -- queries ------------------------------------------------------------
    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def terms(self) -> Dict[int, int]:
        """Sparse exponent -> coefficient map (no zero coefficients)."""
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def coefficient_list(self) -> list:
        """Coefficients from exponent 0 up to the top exponent (low must be >= 0)."""
        if not self.coeffs:
            return []
        if self.low < 0:
            raise ValueError("negative exponents present")
        return [0] * self.low + list(self.coeffs)

    def __call__(self, x):
        return evaluate(self, x)

    # -- arithmetic ---------------------------------------------------------
    def __neg__(self):
        return Laurent._raw(self.low, [-c for c in self.coeffs])

    def __add__(self, other):
        other = as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        buf = [0] * (hi - lo + 1)
        off = self.low - lo
        for i, c in enumerate(self.coeffs):
            buf[off + i] = c
        off = other.low - lo
        for i, c in enumerate(other.coeffs):
            buf[off + i] += c
        return Laurent._raw(lo, buf)

    __radd__ = __add__

    def __sub__(self, other):
        other = as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return 0
            return Laurent._raw(self.low, [c * other for c in self.coeffs])
        other = as_laurent(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Laurent()
        if len(a) < len(b):
            a, b = b, a
        buf = [0] * (len(a) + len(b) - 1)
        for j, cb in enumerate(b):
            if cb:
                for i, ca in enumerate(a):
                    buf[i + j] += ca * cb
        return Laurent._raw(self.low + other.low, buf)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            if not self.is_monomial() or abs(self.coeffs[0]) != 1:
                raise ZeroDivisionError("only unit monomials have inverses")
            c = self.coeffs[0]
            return Laurent.monomial(self.low * n, c ** (-n))
        result = Laurent.monomial(0)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def divmod_exact(self, other: "Laurent") -> "Laurent":
        """Quotient of an exact division; raises ArithmeticError otherwise."""
        if not other.coeffs:
            raise ZeroDivisionError("division by zero polynomial")
        if not self.coeffs:
            return Laurent()
        num = list(self.coeffs)
        den = other.coeffs
        dl = len(den)
        if len(num) < dl:
            raise ArithmeticError("inexact polynomial division")
        lead = den[-1]
        qlen = len(num) - dl + 1
        quot = [0] * qlen
        for k in range(qlen - 1, -1, -1):
            c = num[k + dl - 1]
            if c:
                qk, r = divmod(c, lead)
                if r:
                    raise ArithmeticError("inexact coefficient division")
                quot[k] = qk
                for i in range(dl):
                    num[k + i] -= qk * den[i]
        if any(num[: dl - 1]):
            raise ArithmeticError("inexact polynomial division")
        return Laurent._raw(self.low - other.low, quot)

    # -- comparison ---------------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            if other == 0:
                return not self.coeffs
            return self.low == 0 and self.coeffs == (other,)
        if isinstance(other, Laurent):
            return self.low == other.low and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.low == 0 and len(self.coeffs) == 1:
                self._hash = hash(self.coeffs[0])
            elif not self.coeffs:
                self._hash = hash(0)
            else:
                self._hash = hash((self.low, self.coeffs))
        return self._hash

    def __repr__(self):
        return f"Laurent({format_poly(self)!r})"

    def __str__(self):
        return format_poly(self)


RingElement = Union[int, Laurent]

#: The formal variable.
Q = Laurent.monomial(1)


def as_laurent(x) -> Laurent:
    if isinstance(x, Laurent):
        return x
    if isinstance(x, int):
        return Laurent._raw(0, [x]) if x else Laurent()
    return NotImplemented


def normalize(x: RingElement) -> RingElement:
    """Collapse constant polynomials to ``int``."""
    if isinstance(x, Laurent):
        if not x.coeffs:
            return 0
        if x.low == 0 and len(x.coeffs) == 1:
            return x.coeffs[0]
    return x


def exact_div(a: RingElement, b: RingElement) -> RingElement:
    """Exact quotient ``a / b``; raises ``ArithmeticError`` if it does not exist."""
    if isinstance(a, int) and isinstance(b, int):
        if b == 0:
            raise ZeroDivisionError("division by zero")
        q, r = divmod(a, b)
        if r:
            raise ArithmeticError(f"inexact integer division {a}/{b}")
        return q
    return normalize(as_laurent(a).divmod_exact(as_laurent(b)))


def is_unit(x: RingElement) -> bool:
    """Units of Z[q, 1/q] are the signed monomials."""
    if isinstance(x, int):
        return x in (1, -1)
    return len(x.coeffs) == 1 and x.coeffs[0] in (1, -1)


def ring_eq(a: RingElement, b: RingElement) -> bool:
    return normalize(a) == normalize(b)


def evaluate(x: RingElement, value):
    """Substitute ``q = value`` (int, Fraction, float, complex, ...)."""
    if isinstance(x, int):
        return x
    total = 0
    for e, c in x.terms().items():
        total += c * value ** e
    return total


_TERM = re.compile(r"([+-]?)(\d*)(q(?:\^(-?\d+))?)?")


def parse_poly(text: str) -> RingElement:
    """Parse ``1+2q^3``, ``q^-1+1``, ``-q``, ``7`` ..."""
    s = text.replace(" ", "")
    if not s:
        raise ValueError("empty polynomial literal")
    terms: Dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos:
            raise ValueError(f"bad polynomial literal {text!r}")
        sign, digits, var, exp = m.groups()
        if pos > 0 and not sign:
            raise ValueError(f"bad polynomial literal {text!r}")
        if not digits and not var:
            raise ValueError(f"bad polynomial literal {text!r}")
        c = int(digits) if digits else 1
        if sign == "-":
            c = -c
        e = (int(exp) if exp is not None else 1) if var else 0
        terms[e] = terms.get(e, 0) + c
        pos = m.end()
    return normalize(Laurent(terms))


def format_poly(x: RingElement) -> str:
    """Canonical text, ascending exponents: ``q^-1+1``, ``1+2q^3``."""
    x = normalize(x)
    if isinstance(x, int):
        return str(x)
    parts = []
    for e, c in sorted(x.terms().items()):
        if e == 0:
            body = str(abs(c))
        else:
            coef = "" if abs(c) == 1 else str(abs(c))
            body = coef + ("q" if e == 1 else f"q^{e}")
        sign = "-" if c < 0 else "+"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(sign + body)
    return "".join(parts)
