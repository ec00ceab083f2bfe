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
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from core.arrangement import Arrangement, Incidence, IntersectionPoint, as_incidence
from core.errors import PreconditionError
from core.projective import ProjectiveArrangement
from linalg.invariants import ModuleInvariants, kernel_generators, quotient_invariants
from linalg.modular import ModMatrix, check_modulus

Source = Union[Arrangement, ProjectiveArrangement, Incidence]


@dataclass(frozen=True)
class OneForm:
    """sum a_i e_i over Z/m, coefficients listed in line order."""

    ids: Tuple[int, ...]
    values: Tuple[int, ...]
    modulus: int

    @classmethod
    def of(cls, coefficients: Mapping[int, int], modulus: int, ids: Optional[Sequence[int]] = None) -> "OneForm":
        m = check_modulus(modulus)
        order = tuple(ids) if ids is not None else tuple(sorted(coefficients))
        extra = set(coefficients) - set(order)
        if extra:
            raise PreconditionError(f"coefficients on unknown lines {sorted(extra)}")
        return cls(order, tuple(int(coefficients.get(i, 0)) % m for i in order), m)

    @classmethod
    def zero(cls, ids: Sequence[int], modulus: int) -> "OneForm":
        return cls.of({}, modulus, ids)

    @classmethod
    def basis(cls, ids: Sequence[int], line_id: int, modulus: int) -> "OneForm":
        return cls.of({line_id: 1}, modulus, ids)

    @classmethod
    def diagonal(cls, ids: Sequence[int], modulus: int) -> "OneForm":
        return cls.of({i: 1 for i in ids}, modulus, ids)

    def __getitem__(self, line_id: int) -> int:
        try:
            return self.values[self.ids.index(line_id)]
        except ValueError:
            return 0

    def as_dict(self) -> Dict[int, int]:
        return dict(zip(self.ids, self.values))

    @property
    def boundary(self) -> int:
        return sum(self.values) % self.modulus

    @property
    def support(self) -> FrozenSet[int]:
        return frozenset(i for i, a in zip(self.ids, self.values) if a)

    def is_zero(self) -> bool:
        return not any(self.values)

    def _aligned(self, other: "OneForm") -> None:
        if self.modulus != other.modulus or self.ids != other.ids:
            raise PreconditionError("1-forms live on different arrangements or rings")

    def __add__(self, other: "OneForm") -> "OneForm":
        self._aligned(other)
        return OneForm(self.ids, tuple((x + y) % self.modulus for x, y in zip(self.values, other.values)), self.modulus)

    def __neg__(self) -> "OneForm":
        return OneForm(self.ids, tuple(-x % self.modulus for x in self.values), self.modulus)

    def __sub__(self, other: "OneForm") -> "OneForm":
        return self + (-other)

    def scale(self, c: int) -> "OneForm":
        return OneForm(self.ids, tuple(c * x % self.modulus for x in self.values), self.modulus)

    def describe(self) -> str:
        terms = []
        for i, a in zip(self.ids, self.values):
            if a:
                terms.append(f"e{i}" if a == 1 else f"{a}e{i}")
        return " + ".join(terms) or "0"

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "coefficients": {str(i): a for i, a in zip(self.ids, self.values) if a}}


@dataclass(frozen=True)
class TwoForm:
    """Brieskorn blocks: point -> coefficients on e_min ^ e_j, j in the point, j != min."""

    blocks: Tuple[Tuple[IntersectionPoint, Tuple[int, ...]], ...]
    modulus: int

    def is_zero(self) -> bool:
        return not any(any(c) for _, c in self.blocks)

    def block(self, incident: Sequence[int]) -> Tuple[int, ...]:
        key = tuple(sorted(incident))
        for point, coeffs in self.blocks:
            if point.incident == key:
                return coeffs
        raise KeyError(key)

    def flatten(self) -> Tuple[int, ...]:
        return tuple(c for _, coeffs in self.blocks for c in coeffs)

    def nonzero_points(self) -> Tuple[IntersectionPoint, ...]:
        return tuple(point for point, coeffs in self.blocks if any(coeffs))

    def to_json(self) -> dict:
        return {
            "modulus": self.modulus,
            "blocks": {point.label(): list(coeffs) for point, coeffs in self.blocks if any(coeffs)},
        }


@dataclass(frozen=True)
class Subarrangement:
    ids: FrozenSet[int]

    @classmethod
    def of(cls, ids: Iterable[int]) -> "Subarrangement":
        return cls(frozenset(ids))

    def __len__(self) -> int:
        return len(self.ids)

    def __contains__(self, line_id: object) -> bool:
        return line_id in self.ids

    def restricted(self, point: IntersectionPoint) -> FrozenSet[int]:
        return self.ids.intersection(point.incident)

    def to_json(self) -> List[int]:
        return sorted(self.ids)


def subset_form(line_ids: Sequence[int], subset: Union[Subarrangement, Iterable[int]], modulus: int = 2) -> OneForm:
    members = subset.ids if isinstance(subset, Subarrangement) else frozenset(subset)
    unknown = members - set(line_ids)
    if unknown:
        raise PreconditionError(f"subset names lines outside the arrangement: {sorted(unknown)}")
    return OneForm.of({i: 1 for i in members}, modulus, line_ids)


def form_subset(form: OneForm) -> Subarrangement:
    """Lines with odd coefficient."""
    if form.modulus % 2:
        raise PreconditionError("parity needs an even modulus")
    return Subarrangement(frozenset(i for i, a in zip(form.ids, form.values) if a % 2))


def cone_oneform(form: OneForm, infinity_id: int = 0) -> OneForm:
    if infinity_id in form.ids:
        raise PreconditionError(f"form already has a coefficient on line {infinity_id}")
    m = form.modulus
    return OneForm(form.ids + (infinity_id,), form.values + (-sum(form.values) % m,), m)


def decone_oneform(form: OneForm, line_id: int) -> OneForm:
    if form.boundary:
        raise PreconditionError(f"coefficient sum is {form.boundary}, expected 0")
    if line_id not in form.ids:
        raise PreconditionError(f"line {line_id} is not in the coned arrangement")
    keep = [k for k, i in enumerate(form.ids) if i != line_id]
    return OneForm(tuple(form.ids[k] for k in keep), tuple(form.values[k] for k in keep), form.modulus)


def localize(form: OneForm, point: IntersectionPoint) -> OneForm:
    return OneForm(form.ids, tuple(a if i in point.incident else 0 for i, a in zip(form.ids, form.values)), form.modulus)


def _block_wedge(eta: OneForm, omega: OneForm, point: IntersectionPoint) -> Tuple[int, ...]:
    m = eta.modulus
    a = [eta[i] for i in point.incident]
    b = [omega[i] for i in point.incident]
    total_a, total_b = sum(a), sum(b)
    return tuple((total_a * b[k] - total_b * a[k]) % m for k in range(1, len(a)))


def wedge(source: Source, eta: OneForm, omega: OneForm) -> TwoForm:
    eta._aligned(omega)
    incidence = as_incidence(source)
    if tuple(incidence.line_ids) != eta.ids:
        raise PreconditionError("1-forms do not match the arrangement's lines")
    return TwoForm(tuple((point, _block_wedge(eta, omega, point)) for point in incidence.points), eta.modulus)


def block_sizes(source: Source) -> Tuple[int, ...]:
    return tuple(p.multiplicity - 1 for p in as_incidence(source).points)


def wedge_matrix(source: Source, eta: OneForm, basis: Optional[Sequence[OneForm]] = None) -> ModMatrix:
    """Row k is wedge(eta, basis[k]); the standard basis by default."""
    incidence = as_incidence(source)
    if basis is None:
        basis = [OneForm.basis(eta.ids, i, eta.modulus) for i in eta.ids]
    rows = [wedge(incidence, eta, omega).flatten() for omega in basis]
    return ModMatrix(rows, eta.modulus, ncols=sum(block_sizes(incidence)))


def _representatives(invariants: ModuleInvariants, ids: Sequence[int], modulus: int) -> Tuple[OneForm, ...]:
    return tuple(OneForm(tuple(ids), tuple(g), modulus) for g in invariants.generators)


def h1_direct(source: Source, eta: OneForm, modulus: Optional[int] = None) -> Tuple[ModuleInvariants, Tuple[OneForm, ...]]:
    """Ker(eta ^ -) / R*eta on the full degree-one part."""
    if modulus is not None and modulus != eta.modulus:
        eta = OneForm.of(eta.as_dict(), modulus, eta.ids)
    m = eta.modulus
    cocycles = kernel_generators(wedge_matrix(source, eta))
    invariants = quotient_invariants(cocycles, ModMatrix([eta.values], m))
    return invariants, _representatives(invariants, eta.ids, m)


def h1_coned(source: Source, eta: OneForm, modulus: Optional[int] = None) -> Tuple[ModuleInvariants, Tuple[OneForm, ...]]:
    """H^1 on the sum-zero part, in coordinates e_j - e_z for the last line z."""
    if modulus is not None and modulus != eta.modulus:
        eta = OneForm.of(eta.as_dict(), modulus, eta.ids)
    if eta.boundary:
        raise PreconditionError(f"coefficient sum is {eta.boundary}, expected 0")
    m = eta.modulus
    ids = eta.ids
    if len(ids) < 2:
        return ModuleInvariants(m, ()), ()
    z = ids[-1]
    anchor = OneForm.basis(ids, z, m)
    basis = [OneForm.basis(ids, j, m) - anchor for j in ids[:-1]]
    cocycles = kernel_generators(wedge_matrix(source, eta, basis))
    invariants = quotient_invariants(cocycles, ModMatrix([eta.values[:-1]], m))
    reps = []
    for g in invariants.generators:
        reps.append(OneForm(ids, tuple(g) + (-sum(g) % m,), m))
    return invariants, tuple(reps)
