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

from dataclasses import dataclass, field
from functools import reduce
from typing import List, Tuple

from sympy import ZZ, isprime
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import invariant_factors

from core.errors import NotASubmodule
from linalg.modular import ModMatrix, howell_form, reduce_vector, row_space_contains


@dataclass(frozen=True)
class ModuleInvariants:
    """Z/d1 + ... + Z/dk with d1 | d2 | ... | dk | m and every di > 1."""

    modulus: int
    factors: Tuple[int, ...]
    generators: Tuple[Tuple[int, ...], ...] = field(default=(), compare=False)

    @property
    def order(self) -> int:
        return reduce(lambda x, y: x * y, self.factors, 1)

    @property
    def rank(self) -> int:
        return sum(1 for d in self.factors if d == self.modulus)

    @property
    def dimension(self) -> int:
        if not isprime(self.modulus):
            raise ValueError(f"dimension needs a prime modulus, got {self.modulus}")
        return len(self.factors)

    def is_trivial(self) -> bool:
        return not self.factors

    def is_free(self) -> bool:
        return all(d == self.modulus for d in self.factors)

    def describe(self) -> str:
        if not self.factors:
            return "0"
        if isprime(self.modulus):
            k = len(self.factors)
            return f"F{self.modulus}" if k == 1 else f"F{self.modulus}^{k}"
        return " + ".join(f"Z/{d}" for d in self.factors)

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "factors": list(self.factors),
            "text": self.describe(),
            "generators": [list(g) for g in self.generators],
        }


def kernel_generators(matrix: ModMatrix) -> ModMatrix:
    """Canonical generators of {x : x * matrix = 0}."""
    m = matrix.modulus
    r, c = matrix.shape
    augmented = matrix.hstack(ModMatrix.identity(r, m))
    form = howell_form(augmented).form
    keep = [row[c:] for row in form.rows() if not any(row[:c])]
    return ModMatrix(keep, m, ncols=r)


def _relation_factors(relations: List[Tuple[int, ...]], width: int, modulus: int) -> Tuple[int, ...]:
    rows = [list(r) for r in relations]
    for i in range(width):
        rows.append([modulus if j == i else 0 for j in range(width)])
    dm = DomainMatrix([[ZZ(x) for x in r] for r in rows], (len(rows), width), ZZ)
    factors = sorted(abs(int(d)) for d in invariant_factors(dm))
    return tuple(d for d in factors if d > 1)


def quotient_invariants(big: ModMatrix, sub: ModMatrix) -> ModuleInvariants:
    if big.modulus != sub.modulus or big.ncols != sub.ncols:
        raise ValueError("big and sub must live in the same free module")
    m = big.modulus
    big_form = howell_form(big).form
    for row in sub.rows():
        if not row_space_contains(big_form, row):
            raise NotASubmodule(f"vector {list(row)} is not in the row space of big")
    g = big_form.nrows
    if g == 0:
        return ModuleInvariants(m, ())

    # relations among the generators of big modulo sub
    stacked = big_form.vstack(sub)
    relations = [row[:g] for row in kernel_generators(stacked).rows()]
    factors = _relation_factors(relations, g, m)

    sub_form = howell_form(sub).form
    current = sub_form
    chosen = []
    for row in big_form.rows():
        if row_space_contains(current, row):
            continue
        chosen.append(reduce_vector(sub_form, row))
        current = howell_form(current.vstack(ModMatrix([row], m))).form
    return ModuleInvariants(m, factors, tuple(chosen))


def submodule_invariants(generators: ModMatrix) -> ModuleInvariants:
    return quotient_invariants(generators, ModMatrix.zeros(0, generators.ncols, generators.modulus))


def kernel(matrix: ModMatrix) -> Tuple[ModMatrix, ModuleInvariants]:
    gens = kernel_generators(matrix)
    return gens, submodule_invariants(gens)
