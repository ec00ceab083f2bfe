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
from functools import cached_property
from typing import Dict, Iterable, Mapping, Optional, Tuple

from sympy import isprime

from algebra.chamber_complex import ChamberComplex
from algebra.orlik_solomon import OneForm, Subarrangement, h1_direct, subset_form, wedge
from core.arrangement import Arrangement, Point
from core.chambers import Chamber
from core.errors import NonUnitAlpha, PreconditionError, TheoremViolation
from core.flag import Flag
from linalg.invariants import ModuleInvariants, kernel, quotient_invariants
from linalg.modular import ModMatrix

ISOMORPHIC = "Isomorphic"
INJECTIVE_ONLY = "InjectiveOnly"


@dataclass(frozen=True)
class Band:
    label: str
    walls: Tuple[int, int]
    position: int
    u1: Chamber
    u2: Chamber
    separating: frozenset

    @property
    def length(self) -> int:
        return len(self.separating)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "walls": list(self.walls),
            "u1": self.u1.label,
            "u2": self.u2.label,
            "length": self.length,
        }


@dataclass(frozen=True)
class ResonantBandVector:
    bands: Tuple[Band, ...]
    values: Tuple[int, ...]
    modulus: int

    def describe(self) -> str:
        terms = []
        for band, c in zip(self.bands, self.values):
            if c:
                terms.append(f"[{band.label}]" if c == 1 else f"{c}[{band.label}]")
        return " + ".join(terms) or "0"

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "coefficients": {b.label: c for b, c in zip(self.bands, self.values) if c}}


class BandComplex:
    """Bands of one arrangement and flag, and the reduced map on the resonant ones."""

    def __init__(self, arrangement: Arrangement, flag: Flag, labels: Optional[Mapping[str, Point]] = None) -> None:
        self.complex = ChamberComplex(arrangement, flag, labels)
        self.arrangement = arrangement
        self.flag = self.complex.flag

    @cached_property
    def bands(self) -> Tuple[Band, ...]:
        order = self.flag.order
        classification = self.complex.classification
        by_signs = {d.signs: d for d in classification.ch2}
        found = []
        for i in range(1, len(order)):
            first, second = self.arrangement.line(order[i - 1]), self.arrangement.line(order[i])
            if not first.is_parallel(second):
                continue
            u1 = classification.ch1[i - 1]
            flips = tuple(
                -s if not line.is_parallel(first) else s
                for s, line in zip(u1.signs, self.arrangement.lines)
            )
            # a strip crossed by no other line is a single chamber
            u2 = u1 if flips == u1.signs else by_signs.get(flips)
            if u2 is None:
                raise TheoremViolation(f"no far chamber for the band between {first.name} and {second.name}")
            found.append(Band(f"B{len(found) + 1}", (first.id, second.id), i, u1, u2, classification.separation(u1, u2)))
        return tuple(found)

    def is_resonant(self, band: Band, eta: OneForm) -> bool:
        return sum(eta[i] for i in band.separating) % eta.modulus == 0

    def resonant_bands(self, eta: OneForm) -> Tuple[Band, ...]:
        return tuple(b for b in self.bands if self.is_resonant(b, eta))

    def inside(self, band: Band, chamber: Chamber) -> bool:
        return self.complex.classification.inside(chamber, (band.walls[0],), (band.walls[1],))

    def reduced_row(self, band: Band, eta: OneForm) -> Tuple[int, ...]:
        row = []
        for d in self.complex.ch2:
            row.append(self.complex.separating_sum(eta, band.u1, d) if self.inside(band, d) else 0)
        return tuple(row)

    def reduced_matrix(self, eta: OneForm) -> ModMatrix:
        rows = [self.reduced_row(b, eta) for b in self.resonant_bands(eta)]
        return ModMatrix(rows, eta.modulus, ncols=len(self.complex.ch2))

    def kernel(self, eta: OneForm) -> Tuple[ModuleInvariants, Tuple[ResonantBandVector, ...]]:
        m = eta.modulus
        resonant = self.resonant_bands(eta)
        if not resonant:
            return ModuleInvariants(m, ()), ()
        _, invariants = kernel(self.reduced_matrix(eta))
        vectors = tuple(ResonantBandVector(resonant, tuple(g), m) for g in invariants.generators)
        return invariants, vectors

    def psi(self, vector: ResonantBandVector) -> OneForm:
        coefficients: Dict[int, int] = {}
        for band, c in zip(vector.bands, vector.values):
            i, j = band.walls
            coefficients[i] = coefficients.get(i, 0) + c
            coefficients[j] = coefficients.get(j, 0) - c
        return OneForm.of(coefficients, vector.modulus, self.arrangement.line_ids)

    def h1(self, eta: OneForm) -> Tuple[ModuleInvariants, str]:
        m = eta.modulus
        alpha = eta.boundary
        if math.gcd(alpha, m) != 1:
            raise NonUnitAlpha(alpha, m)
        invariants, vectors = self.kernel(eta)
        images = [self.psi(v) for v in vectors]
        for image in images:
            if not wedge(self.arrangement, eta, image).is_zero():
                raise TheoremViolation(f"psi({image.describe()}) is not a cocycle")
        # psi must stay injective after dividing by R*eta
        span = ModMatrix([f.values for f in images] + [eta.values], m)
        image_invariants = quotient_invariants(span, ModMatrix([eta.values], m))
        if image_invariants.factors != invariants.factors:
            raise TheoremViolation("psi is not injective on the resonant-band kernel")

        if isprime(m) or len(self.resonant_bands(eta)) == len(self.bands):
            direct, _ = h1_direct(self.arrangement, eta)
            if direct.factors != invariants.factors:
                raise TheoremViolation(
                    f"resonant bands give {invariants.describe()}, direct computation gives {direct.describe()}"
                )
            return invariants, ISOMORPHIC
        return invariants, INJECTIVE_ONLY

    def dump(self, eta: OneForm) -> dict:
        resonant = self.resonant_bands(eta)
        invariants, vectors = self.kernel(eta)
        return {
            "bands": [dict(b.to_json(), resonant=self.is_resonant(b, eta)) for b in self.bands],
            "resonant": [b.label for b in resonant],
            "reduced_matrix": self.reduced_matrix(eta).to_json(),
            "columns": [d.label for d in self.complex.ch2],
            "kernel": invariants.to_json(),
            "kernel_generators": [v.describe() for v in vectors],
            "psi": [self.psi(v).to_json() for v in vectors],
        }


def bands(arrangement: Arrangement, flag: Flag) -> Tuple[Band, ...]:
    return BandComplex(arrangement, flag).bands


def resonant_bands(arrangement: Arrangement, flag: Flag, eta: OneForm) -> Tuple[Tuple[Band, ...], ModMatrix]:
    complex_ = BandComplex(arrangement, flag)
    return complex_.resonant_bands(eta), complex_.reduced_matrix(eta)


def kernel_rb(arrangement: Arrangement, flag: Flag, eta: OneForm) -> Tuple[ModuleInvariants, Tuple[ResonantBandVector, ...]]:
    return BandComplex(arrangement, flag).kernel(eta)


def psi(arrangement: Arrangement, flag: Flag, vector: ResonantBandVector) -> OneForm:
    return BandComplex(arrangement, flag).psi(vector)


def h1_via_rb(arrangement: Arrangement, flag: Flag, eta: OneForm) -> Tuple[ModuleInvariants, str]:
    return BandComplex(arrangement, flag).h1(eta)


@dataclass(frozen=True)
class F2Dictionary:
    subset: Subarrangement
    resonant: Tuple[Band, ...]
    rows: ModMatrix
    kernel: ModuleInvariants
    computes_h1: bool

    def to_json(self) -> dict:
        return {
            "subset": self.subset.to_json(),
            "resonant": [b.label for b in self.resonant],
            "rows": self.rows.to_json(),
            "kernel": self.kernel.to_json(),
            "computes_h1": self.computes_h1,
        }


def f2_dictionary(arrangement: Arrangement, flag: Flag, subset: Iterable[int]) -> F2Dictionary:
    chosen = Subarrangement.of(subset)
    eta = subset_form(arrangement.line_ids, chosen, 2)
    complex_ = BandComplex(arrangement, flag)
    resonant = tuple(b for b in complex_.bands if len(chosen.ids & b.separating) % 2 == 0)
    rows = complex_.reduced_matrix(eta)
    invariants, _ = complex_.kernel(eta)
    return F2Dictionary(chosen, resonant, rows, invariants, len(chosen) % 2 == 1)


def subarrangement_of(arrangement: Arrangement, flag: Flag, vector: ResonantBandVector) -> Subarrangement:
    if vector.modulus % 2:
        raise PreconditionError("parity needs an even modulus")
    image = BandComplex(arrangement, flag).psi(vector)
    return Subarrangement(frozenset(i for i, a in zip(image.ids, image.values) if a % 2))
