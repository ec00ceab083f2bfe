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
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np
from sympy import mod_inverse
from sympy.core.intfunc import igcdex

from core.errors import PreconditionError

MAX_MODULUS = 1 << 20


def check_modulus(modulus: int) -> int:
    modulus = int(modulus)
    if modulus < 2 or modulus > MAX_MODULUS:
        raise PreconditionError(f"modulus must satisfy 2 <= m <= {MAX_MODULUS}, got {modulus}")
    return modulus


@dataclass(frozen=True)
class ModScalar:
    residue: int
    modulus: int

    @classmethod
    def of(cls, value: int, modulus: int) -> "ModScalar":
        return cls(int(value) % modulus, modulus)

    def is_unit(self) -> bool:
        return math.gcd(self.residue, self.modulus) == 1

    def inverse(self) -> "ModScalar":
        if not self.is_unit():
            raise ZeroDivisionError(f"{self.residue} is not a unit mod {self.modulus}")
        return ModScalar(int(mod_inverse(self.residue, self.modulus)), self.modulus)

    def __add__(self, other: "ModScalar") -> "ModScalar":
        return ModScalar.of(self.residue + other.residue, self.modulus)

    def __mul__(self, other: "ModScalar") -> "ModScalar":
        return ModScalar.of(self.residue * other.residue, self.modulus)

    def __neg__(self) -> "ModScalar":
        return ModScalar.of(-self.residue, self.modulus)

    def __int__(self) -> int:
        return self.residue


class ModMatrix:
    """Dense matrix over Z/m; rows are the module elements."""

    def __init__(self, rows: Iterable[Sequence[int]], modulus: int, ncols: Optional[int] = None) -> None:
        self.modulus = check_modulus(modulus)
        data = [list(map(int, r)) for r in rows]
        if data:
            width = len(data[0])
            if any(len(r) != width for r in data):
                raise ValueError("ragged rows")
            if ncols is not None and ncols != width:
                raise ValueError(f"expected {ncols} columns, got {width}")
            arr = np.array(data, dtype=np.int64).reshape(len(data), width)
        else:
            arr = np.zeros((0, ncols or 0), dtype=np.int64)
        self._data = np.mod(arr, self.modulus)
        self._data.setflags(write=False)

    @classmethod
    def from_array(cls, array: np.ndarray, modulus: int) -> "ModMatrix":
        array = np.asarray(array, dtype=np.int64)
        return cls(array.tolist(), modulus, ncols=array.shape[1])

    @classmethod
    def zeros(cls, nrows: int, ncols: int, modulus: int) -> "ModMatrix":
        return cls([[0] * ncols for _ in range(nrows)], modulus, ncols=ncols)

    @classmethod
    def identity(cls, n: int, modulus: int) -> "ModMatrix":
        return cls(np.eye(n, dtype=np.int64).tolist(), modulus, ncols=n)

    @property
    def array(self) -> np.ndarray:
        return self._data

    @property
    def shape(self) -> Tuple[int, int]:
        return self._data.shape[0], self._data.shape[1]

    @property
    def nrows(self) -> int:
        return self._data.shape[0]

    @property
    def ncols(self) -> int:
        return self._data.shape[1]

    def rows(self) -> List[Tuple[int, ...]]:
        return [tuple(int(x) for x in r) for r in self._data]

    def row(self, index: int) -> Tuple[int, ...]:
        return tuple(int(x) for x in self._data[index])

    def is_zero(self) -> bool:
        return not self._data.any()

    def _same_ring(self, other: "ModMatrix") -> None:
        if self.modulus != other.modulus:
            raise ValueError(f"modulus mismatch: {self.modulus} vs {other.modulus}")

    def vstack(self, other: "ModMatrix") -> "ModMatrix":
        self._same_ring(other)
        if self.ncols != other.ncols:
            raise ValueError("column count mismatch")
        return ModMatrix.from_array(np.vstack([self._data, other.array]), self.modulus)

    def hstack(self, other: "ModMatrix") -> "ModMatrix":
        self._same_ring(other)
        if self.nrows != other.nrows:
            raise ValueError("row count mismatch")
        return ModMatrix.from_array(np.hstack([self._data, other.array]), self.modulus)

    def __matmul__(self, other: "ModMatrix") -> "ModMatrix":
        self._same_ring(other)
        return ModMatrix.from_array(np.mod(self._data @ other.array, self.modulus), self.modulus)

    def apply(self, vector: Sequence[int]) -> Tuple[int, ...]:
        """Row vector times matrix."""
        v = np.array(list(vector), dtype=np.int64).reshape(1, self.nrows)
        out = np.mod(v @ self._data, self.modulus)
        return tuple(int(x) for x in out[0])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModMatrix):
            return NotImplemented
        return self.modulus == other.modulus and self.shape == other.shape and bool((self._data == other.array).all())

    def __hash__(self) -> int:
        return hash((self.modulus, self.shape, self._data.tobytes()))

    def __repr__(self) -> str:
        return f"ModMatrix({self.rows()}, modulus={self.modulus})"

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "shape": list(self.shape), "rows": [list(r) for r in self.rows()]}

    def to_tsv(self, row_labels: Optional[Sequence[str]] = None, col_labels: Optional[Sequence[str]] = None) -> str:
        lines = []
        if col_labels is not None:
            lines.append("\t".join([""] + list(col_labels)))
        for i, r in enumerate(self.rows()):
            cells = [str(x) for x in r]
            if row_labels is not None:
                cells.insert(0, row_labels[i])
            lines.append("\t".join(cells))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class HowellForm:
    form: ModMatrix
    transform: ModMatrix


def pivots(form: ModMatrix) -> List[Tuple[int, int]]:
    """(column, value) of the leading entry of each row of a Howell form."""
    out = []
    for row in form.array:
        nz = np.flatnonzero(row)
        out.append((int(nz[0]), int(row[nz[0]])))
    return out


def _unit_normalizer(a: int, modulus: int) -> int:
    # unit c with c*a == gcd(a, modulus) (mod modulus)
    g = math.gcd(a, modulus)
    reduced = modulus // g
    c = int(mod_inverse(a // g, reduced)) if reduced > 1 else 1
    while math.gcd(c, modulus) != 1:
        c += reduced
    return c % modulus


def howell_form(matrix: ModMatrix) -> HowellForm:
    m = matrix.modulus
    rows = [r.copy() for r in matrix.array]
    trans = [r.copy() for r in np.eye(matrix.nrows, dtype=np.int64)]
    ncols = matrix.ncols
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        trans[r], trans[pivot] = trans[pivot], trans[r]

        u = _unit_normalizer(int(rows[r][c]), m)
        rows[r] = np.mod(rows[r] * u, m)
        trans[r] = np.mod(trans[r] * u, m)

        for i in range(r + 1, len(rows)):
            b = int(rows[i][c])
            if b == 0:
                continue
            a = int(rows[r][c])
            s, t, g = (int(x) for x in igcdex(a, b))
            s, t = s % m, t % m
            x, y = (-b // g) % m, (a // g) % m
            rows[r], rows[i] = np.mod(s * rows[r] + t * rows[i], m), np.mod(x * rows[r] + y * rows[i], m)
            trans[r], trans[i] = np.mod(s * trans[r] + t * trans[i], m), np.mod(x * trans[r] + y * trans[i], m)

        p = int(rows[r][c])
        for i in range(r):
            if rows[i][c] >= p:
                q = int(rows[i][c]) // p
                rows[i] = np.mod(rows[i] - q * rows[r], m)
                trans[i] = np.mod(trans[i] - q * trans[r], m)

        # Howell property: the annihilator multiple of the pivot row joins the matrix
        ann = m // math.gcd(p, m)
        extra = np.mod(ann * rows[r], m)
        if extra.any():
            rows.append(extra)
            trans.append(np.mod(ann * trans[r], m))
        r += 1

    form = ModMatrix([list(x) for x in rows[:r]], m, ncols=ncols)
    width = len(trans[0]) if trans else matrix.nrows
    transform = ModMatrix([list(x) for x in trans[:r]], m, ncols=width)
    return HowellForm(form, transform)


def reduce_vector(form: ModMatrix, vector: Sequence[int]) -> Tuple[int, ...]:
    """Canonical representative of vector modulo the row space of a Howell form."""
    m = form.modulus
    v = np.mod(np.array(list(vector), dtype=np.int64), m)
    for row, (c, p) in zip(form.array, pivots(form)):
        q = int(v[c]) // p
        if q:
            v = np.mod(v - q * row, m)
    return tuple(int(x) for x in v)


def row_space_contains(form: ModMatrix, vector: Sequence[int]) -> bool:
    return not any(reduce_vector(form, vector))


def row_space_size(form: ModMatrix) -> int:
    size = 1
    for _, p in pivots(form):
        size *= form.modulus // p
    return size
