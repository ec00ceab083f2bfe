# Copyright 2026 Jitesh Prakash Chaudhary
# Website: https://jiteshprakash.netlify.app/
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import math
from fractions import Fraction
from functools import total_ordering
from typing import Union

Number = Union[int, Fraction, "ExactScalar"]


@total_ordering
class ExactScalar:
    """Element p + q*sqrt(d) of Q or Q(sqrt(d)), d squarefree, d = 0 for Q."""

    __slots__ = ("_p", "_q", "_d")

    def __init__(self, p: Union[int, Fraction] = 0, q: Union[int, Fraction] = 0, d: int = 0) -> None:
        self._p = Fraction(p)
        self._q = Fraction(q)
        if self._q and d <= 1:
            raise ValueError("irrational part needs a field with d > 1")
        self._d = d if self._q else 0

    @property
    def p(self) -> Fraction:
        return self._p

    @property
    def q(self) -> Fraction:
        return self._q

    @property
    def d(self) -> int:
        return self._d

    @classmethod
    def of(cls, value: Number) -> "ExactScalar":
        if isinstance(value, ExactScalar):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        raise TypeError(f"cannot convert {type(value).__name__} to ExactScalar")

    @staticmethod
    def _field(x: "ExactScalar", y: "ExactScalar") -> int:
        if x._d and y._d and x._d != y._d:
            raise ValueError(f"mixed fields Q(sqrt({x._d})) and Q(sqrt({y._d}))")
        return x._d or y._d

    def is_rational(self) -> bool:
        return self._q == 0

    def conjugate(self) -> "ExactScalar":
        return ExactScalar(self._p, -self._q, self._d)

    def norm(self) -> Fraction:
        return self._p * self._p - self._d * self._q * self._q

    def sign(self) -> int:
        p, q = self._p, self._q
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return (q > 0) - (q < 0)
        if (p > 0) == (q > 0):
            return 1 if p > 0 else -1
        # opposite signs: the larger magnitude wins
        if p * p > self._d * q * q:
            return 1 if p > 0 else -1
        return 1 if q > 0 else -1

    def __add__(self, other: Number) -> "ExactScalar":
        try:
            o = ExactScalar.of(other)
        except TypeError:
            return NotImplemented
        return ExactScalar(self._p + o._p, self._q + o._q, ExactScalar._field(self, o))

    def __radd__(self, other: Number) -> "ExactScalar":
        return self + other

    def __neg__(self) -> "ExactScalar":
        return ExactScalar(-self._p, -self._q, self._d)

    def __sub__(self, other: Number) -> "ExactScalar":
        try:
            o = ExactScalar.of(other)
        except TypeError:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Number) -> "ExactScalar":
        return (-self) + other

    def __mul__(self, other: Number) -> "ExactScalar":
        try:
            o = ExactScalar.of(other)
        except TypeError:
            return NotImplemented
        d = ExactScalar._field(self, o)
        p = self._p * o._p + d * self._q * o._q
        q = self._p * o._q + self._q * o._p
        return ExactScalar(p, q, d)

    def __rmul__(self, other: Number) -> "ExactScalar":
        return self * other

    def inverse(self) -> "ExactScalar":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero scalar")
        return self.conjugate() * ExactScalar(1 / n)

    def __truediv__(self, other: Number) -> "ExactScalar":
        try:
            o = ExactScalar.of(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Number) -> "ExactScalar":
        return ExactScalar.of(other) * self.inverse()

    def __abs__(self) -> "ExactScalar":
        return -self if self.sign() < 0 else self

    def __bool__(self) -> bool:
        return bool(self._p) or bool(self._q)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._q == 0 and self._p == other
        if isinstance(other, ExactScalar):
            return self._p == other._p and self._q == other._q and self._d == other._d
        return NotImplemented

    def __lt__(self, other: Number) -> bool:
        return (self - other).sign() < 0

    def __hash__(self) -> int:
        return hash((self._p, self._q, self._d))

    def __float__(self) -> float:
        return float(self._p) + float(self._q) * math.sqrt(self._d)

    def __repr__(self) -> str:
        if self._q == 0:
            return f"ExactScalar({self._p})"
        return f"ExactScalar({self._p}, {self._q}, d={self._d})"

    def __str__(self) -> str:
        if self._q == 0:
            return str(self._p)
        q = "" if abs(self._q) == 1 else str(abs(self._q))
        w = f"{q}w" if self._q > 0 else f"-{q}w"
        if self._p == 0:
            return w
        return f"{self._p}{w}" if w.startswith("-") else f"{self._p}+{w}"


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
