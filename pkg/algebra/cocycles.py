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
from itertools import product
from typing import List, Sequence, Tuple

from sympy import isprime

from algebra.orlik_solomon import OneForm, Source, Subarrangement, subset_form, wedge, wedge_matrix
from core.arrangement import IntersectionPoint, as_incidence
from core.errors import PreconditionError, TheoremViolation
from linalg.invariants import ModuleInvariants, kernel
from linalg.modular import ModMatrix, howell_form


@dataclass(frozen=True)
class PointViolation:
    point: IntersectionPoint
    condition: str
    detail: str

    def to_json(self) -> dict:
        return {"point": self.point.label(), "condition": self.condition, "detail": self.detail}


@dataclass(frozen=True)
class CocycleReport:
    ok: bool
    violations: Tuple[PointViolation, ...] = ()

    def to_json(self) -> dict:
        return {"ok": self.ok, "violations": [v.to_json() for v in self.violations]}


def _agrees_with_wedge(source: Source, omega: OneForm, ok: bool) -> None:
    eta = OneForm.diagonal(omega.ids, omega.modulus)
    if wedge(source, eta, omega).is_zero() != ok:
        raise TheoremViolation("local cocycle conditions disagree with the wedge product")


def is_cocycle_modp(source: Source, eta: OneForm, omega: OneForm) -> CocycleReport:
    """Pointwise test of eta_0 ^ omega = 0 over F_p."""
    p = omega.modulus
    if not isprime(p):
        raise PreconditionError(f"modulus {p} is not prime")
    if eta.ids != omega.ids or eta.modulus != p:
        raise PreconditionError("eta and omega live on different arrangements or rings")
    if any(a != 1 for a in eta.values):
        raise PreconditionError("eta must be the diagonal element")

    violations: List[PointViolation] = []
    for point in as_incidence(source).points:
        coeffs = [omega[i] for i in point.incident]
        if point.multiplicity % p == 0:
            total = sum(coeffs) % p
            if total:
                violations.append(PointViolation(point, "i", f"p divides {point.multiplicity} but the sum is {total}"))
        elif len(set(coeffs)) > 1:
            violations.append(PointViolation(point, "ii", f"coefficients {coeffs} are not all equal"))
    report = CocycleReport(not violations, tuple(violations))
    _agrees_with_wedge(source, omega, report.ok)
    return report


def mod2_subset_check(source: Source, subset: Subarrangement) -> CocycleReport:
    incidence = as_incidence(source)
    violations: List[PointViolation] = []
    for point in incidence.points:
        chosen = len(subset.restricted(point))
        if point.multiplicity % 2 == 0:
            if chosen % 2:
                violations.append(PointViolation(point, "i", f"{chosen} of {point.multiplicity} lines chosen"))
        elif chosen not in (0, point.multiplicity):
            violations.append(PointViolation(point, "ii", f"{chosen} of {point.multiplicity} lines chosen"))
    report = CocycleReport(not violations, tuple(violations))
    _agrees_with_wedge(incidence, subset_form(incidence.line_ids, subset, 2), report.ok)
    return report


def diagonal_cocycles(source: Source, p: int) -> Tuple[ModMatrix, ModuleInvariants]:
    if not isprime(p):
        raise PreconditionError(f"modulus {p} is not prime")
    ids = as_incidence(source).line_ids
    return kernel(wedge_matrix(source, OneForm.diagonal(ids, p)))


def enumerate_f2_cocycles(source: Source) -> List[Subarrangement]:
    """Every subset S with eta_0 ^ e(S) = 0, read off the F_2 kernel."""
    ids: Sequence[int] = as_incidence(source).line_ids
    generators, _ = diagonal_cocycles(source, 2)
    basis = howell_form(generators).form.rows()
    found = set()
    for choice in product((0, 1), repeat=len(basis)):
        vector = [0] * len(ids)
        for pick, row in zip(choice, basis):
            if pick:
                vector = [(x + y) % 2 for x, y in zip(vector, row)]
        found.add(frozenset(i for i, x in zip(ids, vector) if x))
    return sorted((Subarrangement(s) for s in found), key=lambda s: (len(s), sorted(s.ids)))
