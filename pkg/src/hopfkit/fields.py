"""Exact scalars: arbitrary-precision rationals and prime fields.

Rationals are plain ``fractions.Fraction`` (already stored in lowest terms
with positive denominator).  Prime-field elements are immutable residues in
``[0, p)``.  Every other module is field-generic: it only relies on the
scalar operators ``+ - * /``, truthiness (zero test), and a ``Field`` handle
for coercion and serialization.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DocumentError, HopfkitError

_SCALAR_RE = re.compile(r"^-?\d+(/-?\d+)?$")


def is_prime(n: int) -> bool:
    """Trial division; moduli are small by design."""
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class Fp:
    """Residue ``v`` modulo the prime ``p``, normalized to ``0 <= v < p``."""

    p: int
    v: int

    def _same(self, other: "Fp") -> None:
        if not isinstance(other, Fp) or other.p != self.p:
            raise HopfkitError(f"mixed-field arithmetic: F{self.p} vs {other!r}")

    def __add__(self, other):
        self._same(other)
        return Fp(self.p, (self.v + other.v) % self.p)

    def __sub__(self, other):
        self._same(other)
        return Fp(self.p, (self.v - other.v) % self.p)

    def __mul__(self, other):
        self._same(other)
        return Fp(self.p, (self.v * other.v) % self.p)

    def __truediv__(self, other):
        self._same(other)
        if other.v == 0:
            raise ZeroDivisionError(f"division by zero in F{self.p}")
        return Fp(self.p, (self.v * pow(other.v, -1, self.p)) % self.p)

    def __neg__(self):
        return Fp(self.p, (-self.v) % self.p)

    def __pow__(self, n: int):
        if n < 0:
            if self.v == 0:
                raise ZeroDivisionError(f"inverse of zero in F{self.p}")
            return Fp(self.p, pow(pow(self.v, -1, self.p), -n, self.p))
        return Fp(self.p, pow(self.v, n, self.p))

    def __bool__(self):
        return self.v != 0

    def __repr__(self):
        return f"{self.v}∈F{self.p}"


class Field:
    """Common interface of the two supported ground fields."""

    characteristic: int

    @property
    def zero(self):
        raise NotImplementedError

    @property
    def one(self):
        raise NotImplementedError

    def scalar(self, x):
        """Coerce an int, canonical string, or same-field scalar."""
        raise NotImplementedError

    def serialize(self, x):
        """JSON-ready form: int where possible, else a lowest-terms string."""
        raise NotImplementedError

    def label(self):
        """Document-format field tag."""
        raise NotImplementedError


@dataclass(frozen=True)
class RationalField(Field):
    characteristic = 0

    @property
    def zero(self):
        return Fraction(0)

    @property
    def one(self):
        return Fraction(1)

    def scalar(self, x):
        if isinstance(x, Fraction):
            return x
        if isinstance(x, int):
            return Fraction(x)
        if isinstance(x, str):
            if not _SCALAR_RE.match(x):
                raise DocumentError(f"malformed rational scalar {x!r}")
            return Fraction(x)
        raise DocumentError(f"cannot coerce {x!r} into Q (floats are not allowed)")

    def serialize(self, x):
        if x.denominator == 1:
            return int(x)
        return f"{x.numerator}/{x.denominator}"

    def label(self):
        return "Q"

    def __repr__(self):
        return "Q"


@dataclass(frozen=True)
class PrimeField(Field):
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise DocumentError(f"modulus {self.p} is not prime")

    @property
    def characteristic(self):
        return self.p

    @property
    def zero(self):
        return Fp(self.p, 0)

    @property
    def one(self):
        return Fp(self.p, 1)

    def scalar(self, x):
        if isinstance(x, Fp):
            if x.p != self.p:
                raise HopfkitError(f"scalar from F{x.p} used in F{self.p}")
            return x
        if isinstance(x, int):
            return Fp(self.p, x % self.p)
        if isinstance(x, Fraction):
            return Fp(self.p, x.numerator % self.p) / Fp(self.p, x.denominator % self.p)
        if isinstance(x, str):
            if not _SCALAR_RE.match(x):
                raise DocumentError(f"malformed scalar {x!r}")
            if "/" in x:
                num, den = x.split("/")
                return Fp(self.p, int(num) % self.p) / Fp(self.p, int(den) % self.p)
            return Fp(self.p, int(x) % self.p)
        raise DocumentError(f"cannot coerce {x!r} into F{self.p} (floats are not allowed)")

    def serialize(self, x):
        return x.v

    def label(self):
        return {"Fp": self.p}

    def __repr__(self):
        return f"F{self.p}"


QQ = RationalField()
