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

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Mapping, Optional, Tuple

from algebra.orlik_solomon import OneForm
from core.arrangement import Arrangement, Point
from core.chambers import Chamber, ChamberClassification, classify_chambers
from core.errors import PreconditionError
from core.flag import Flag, validate_flag
from linalg.invariants import ModuleInvariants, kernel_generators, quotient_invariants
from linalg.modular import ModMatrix


@dataclass(frozen=True)
class DegreeTable:
    rows: Tuple[str, ...]
    columns: Tuple[str, ...]
    table: Tuple[Tuple[int, ...], ...]

    def entry(self, row: str, column: str) -> int:
        return self.table[self.rows.index(row)][self.columns.index(column)]

    def row(self, label: str) -> Tuple[int, ...]:
        return self.table[self.rows.index(label)]

    def to_json(self) -> dict:
        return {"rows": list(self.rows), "columns": list(self.columns), "table": [list(r) for r in self.table]}

    def to_tsv(self) -> str:
        lines = ["\t".join(("",) + self.columns)]
        for label, r in zip(self.rows, self.table):
            lines.append("\t".join([label] + [str(x) for x in r]))
        return "\n".join(lines) + "\n"


@dataclass(frozen=True)
class ChamberCochain:
    degree: int
    values: Tuple[int, ...]
    modulus: int

    def to_json(self) -> dict:
        return {"degree": self.degree, "modulus": self.modulus, "values": list(self.values)}


class ChamberComplex:
    """Chamber cochains of one arrangement under one flag."""

    def __init__(self, arrangement: Arrangement, flag: Flag, labels: Optional[Mapping[str, Point]] = None) -> None:
        self.arrangement = arrangement
        self.flag = validate_flag(arrangement, flag)
        self.labels = dict(labels or {})

    @cached_property
    def classification(self) -> ChamberClassification:
        return classify_chambers(self.arrangement, self.flag, self.labels)

    @property
    def ch1(self) -> Tuple[Chamber, ...]:
        return self.classification.ch1

    @property
    def ch2(self) -> Tuple[Chamber, ...]:
        return self.classification.ch2

    def _degree(self, i: int, chamber: Chamber) -> int:
        order = self.flag.order
        side = self.classification.side
        if i == len(order):
            return -1 if side(chamber, order[-1]) > 0 else 0
        here, after = side(chamber, order[i - 1]), side(chamber, order[i])
        if here < 0 and after > 0:
            return 1
        if here > 0 and after < 0:
            return -1
        return 0

    @cached_property
    def degree_table(self) -> DegreeTable:
        table = tuple(
            tuple(self._degree(i, d) for d in self.ch2) for i in range(1, len(self.ch1) + 1)
        )
        return DegreeTable(
            tuple(c.label for c in self.ch1),
            tuple(d.label for d in self.ch2),
            table,
        )

    def _check_form(self, eta: OneForm) -> None:
        if eta.ids != self.arrangement.line_ids:
            raise PreconditionError("1-form does not match the arrangement's lines")

    def separating_sum(self, eta: OneForm, first: Chamber, second: Chamber) -> int:
        return sum(eta[i] for i in self.classification.separation(first, second)) % eta.modulus

    def nabla0(self, eta: OneForm) -> ChamberCochain:
        self._check_form(eta)
        m = eta.modulus
        values: List[int] = []
        running = 0
        for line_id in self.flag.order:
            running = (running + eta[line_id]) % m
            values.append(running)
        return ChamberCochain(1, tuple(values), m)

    def nabla1(self, eta: OneForm) -> ModMatrix:
        self._check_form(eta)
        table = self.degree_table.table
        rows = []
        for c, degrees in zip(self.ch1, table):
            rows.append([deg * self.separating_sum(eta, c, d) if deg else 0 for d, deg in zip(self.ch2, degrees)])
        return ModMatrix(rows, eta.modulus, ncols=len(self.ch2))

    def is_cochain_complex(self, eta: OneForm) -> bool:
        if not self.ch1:
            return True
        product = self.nabla1(eta).apply(self.nabla0(eta).values)
        return not any(product)

    def h1(self, eta: OneForm) -> ModuleInvariants:
        m = eta.modulus
        if not self.ch1:
            return ModuleInvariants(m, ())
        cocycles = kernel_generators(self.nabla1(eta))
        return quotient_invariants(cocycles, ModMatrix([self.nabla0(eta).values], m))

    def phi(self, cochain: ChamberCochain) -> OneForm:
        if cochain.degree != 1 or len(cochain.values) != len(self.flag.order):
            raise PreconditionError("phi takes a degree-one chamber cochain")
        m = cochain.modulus
        order = self.flag.order
        coefficients: Dict[int, int] = {i: 0 for i in order}
        for k, c in enumerate(cochain.values):
            coefficients[order[k]] += c
            if k + 1 < len(order):
                coefficients[order[k + 1]] -= c
        return OneForm.of(coefficients, m, self.arrangement.line_ids)

    def dump(self, eta: OneForm) -> dict:
        return {
            "chambers": self.classification.to_json(),
            "degree_table": self.degree_table.to_json(),
            "nabla0": self.nabla0(eta).to_json(),
            "nabla1": self.nabla1(eta).to_json(),
            "cochain_complex": self.is_cochain_complex(eta),
            "h1": self.h1(eta).to_json(),
        }

    def to_tsv(self, eta: OneForm) -> Dict[str, str]:
        rows = list(self.degree_table.rows)
        cols = list(self.degree_table.columns)
        return {
            "degree_table.tsv": self.degree_table.to_tsv(),
            "nabla0.tsv": ModMatrix([self.nabla0(eta).values], eta.modulus).to_tsv(["C0"], rows),
            "nabla1.tsv": self.nabla1(eta).to_tsv(rows, cols),
        }


def degree_table(arrangement: Arrangement, flag: Flag, labels: Optional[Mapping[str, Point]] = None) -> DegreeTable:
    return ChamberComplex(arrangement, flag, labels).degree_table


def nabla0(arrangement: Arrangement, flag: Flag, eta: OneForm) -> ChamberCochain:
    return ChamberComplex(arrangement, flag).nabla0(eta)


def nabla1(arrangement: Arrangement, flag: Flag, eta: OneForm, labels: Optional[Mapping[str, Point]] = None) -> ModMatrix:
    return ChamberComplex(arrangement, flag, labels).nabla1(eta)


def h1_chambers(arrangement: Arrangement, flag: Flag, eta: OneForm) -> ModuleInvariants:
    return ChamberComplex(arrangement, flag).h1(eta)


def phi(arrangement: Arrangement, flag: Flag, cochain: ChamberCochain) -> OneForm:
    return ChamberComplex(arrangement, flag).phi(cochain)


def is_cochain_complex(arrangement: Arrangement, flag: Flag, eta: OneForm) -> bool:
    return ChamberComplex(arrangement, flag).is_cochain_complex(eta)
