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
from typing import Dict, List, Optional, Tuple, Union

from algebra.cocycles import mod2_subset_check
from algebra.orlik_solomon import Subarrangement
from core.arrangement import Arrangement, Incidence, IntersectionPoint
from core.errors import PreconditionError, TheoremViolation
from core.projective import ProjectiveArrangement, cyclic_order_at_point
from nets.multinet import NetPartition, verify_multinet

Geometry = Union[Arrangement, ProjectiveArrangement]

CASES = ("i", "ii", "iii", "iv")


@dataclass(frozen=True)
class NonSepEntry:
    point: IntersectionPoint
    cyclic_order: Tuple[int, ...]
    selected: Tuple[int, int]
    case: str

    def to_json(self) -> dict:
        return {
            "point": self.point.label(),
            "cyclic_order": list(self.cyclic_order),
            "selected": list(self.selected),
            "case": self.case,
        }


@dataclass(frozen=True)
class NonSepReport:
    entries: Tuple[NonSepEntry, ...]
    counts: Tuple[Tuple[str, int], ...]
    essential: bool

    @property
    def separated(self) -> Tuple[NonSepEntry, ...]:
        return tuple(e for e in self.entries if e.case == "iv")

    @property
    def violations(self) -> Tuple[NonSepEntry, ...]:
        # pencils sit outside the theorem
        return self.separated if self.essential else ()

    def to_json(self) -> dict:
        return {
            "entries": [e.to_json() for e in self.entries],
            "counts": dict(self.counts),
            "essential": self.essential,
            "violations": len(self.violations),
        }


def _require_geometry(source: object) -> Geometry:
    if isinstance(source, Incidence):
        raise PreconditionError("cyclic orders need a real arrangement, not bare incidence data")
    return source  # type: ignore[return-value]


def classify_quadruple(source: Geometry, point: IntersectionPoint, subset: Subarrangement) -> Tuple[str, Tuple[int, ...]]:
    order = cyclic_order_at_point(source, point)
    chosen = [k for k, i in enumerate(order) if i in subset]
    if not chosen:
        return "i", order
    if len(chosen) == 4:
        return "ii", order
    if len(chosen) != 2:
        raise PreconditionError(f"{len(chosen)} selected lines at {point.label()}")
    gap = chosen[1] - chosen[0]
    return ("iii" if gap in (1, 3) else "iv"), order


def non_separation_check(source: Geometry, subset: Subarrangement) -> NonSepReport:
    geometry = _require_geometry(source)
    incidence = geometry.incidence()
    unknown = subset.ids - set(incidence.line_ids)
    if unknown:
        raise PreconditionError(f"subset names lines outside the arrangement: {sorted(unknown)}")
    check = mod2_subset_check(incidence, subset)
    if not check.ok:
        first = check.violations[0]
        raise PreconditionError(f"subset is not a mod-2 cocycle: {first.detail} at {first.point.label()}")

    counts: Dict[str, int] = {case: 0 for case in CASES}
    entries: List[NonSepEntry] = []
    for point in incidence.points:
        if point.multiplicity != 4:
            continue
        case, order = classify_quadruple(geometry, point, subset)
        counts[case] += 1
        if case in ("iii", "iv"):
            selected = tuple(i for i in order if i in subset)
            entries.append(NonSepEntry(point, order, (selected[0], selected[1]), case))
    return NonSepReport(tuple(entries), tuple(counts.items()), incidence.is_essential())


@dataclass(frozen=True)
class Certificate:
    kind: str
    detail: str
    point: Optional[IntersectionPoint] = None
    relabeled: Optional[NetPartition] = None
    subset: Optional[Subarrangement] = None
    violation: bool = False

    def to_json(self) -> dict:
        out: Dict[str, object] = {"kind": self.kind, "detail": self.detail, "violation": self.violation}
        if self.point is not None:
            out["point"] = self.point.label()
        if self.relabeled is not None:
            out["classes"] = [sorted(c) for c in self.relabeled.classes]
        if self.subset is not None:
            out["subset"] = self.subset.to_json()
        return out


def refute_4net(source: Union[Geometry, Incidence], partition: NetPartition) -> Certificate:
    """A reason the claimed 4-net cannot exist on this arrangement."""
    incidence = source if isinstance(source, Incidence) else source.incidence()
    if partition.k != 4 or not partition.is_partition_of(incidence.line_ids):
        return Certificate("partition", f"{partition.k} classes do not split the {len(incidence.line_ids)} lines four ways")

    if not isinstance(source, Incidence):
        for point in incidence.points:
            if point.multiplicity != 4:
                continue
            order = cyclic_order_at_point(source, point)
            owners = [partition.class_of(i) for i in order]
            if len(set(owners)) != 4:
                continue
            # classes renumbered along the cyclic order, so 1 and 3 sit opposite
            relabeled = NetPartition(tuple(partition.classes[c] for c in owners), partition.base_locus)
            subset = Subarrangement(relabeled.classes[0] | relabeled.classes[2])
            check = mod2_subset_check(incidence, subset)
            if not check.ok:
                bad = check.violations[0]
                return Certificate(
                    "cocycle",
                    f"classes 1 and 3 fail the mod-2 test at {bad.point.label()}: {bad.detail}",
                    bad.point,
                    relabeled,
                    subset,
                )
            essential = incidence.is_essential()
            return Certificate(
                "separation",
                f"lines {order[0]} and {order[2]} are separated at {point.label()}",
                point,
                relabeled,
                subset,
                violation=essential,
            )

    report = verify_multinet(incidence, partition)
    if not report.ok:
        condition, detail = report.violations[0]
        return Certificate("multinet", f"condition ({condition}) fails: {detail}")
    if isinstance(source, Incidence):
        raise PreconditionError("incidence data passes as a 4-net; it has no real realization to refute")
    raise TheoremViolation("a verified 4-net has no quadruple point meeting every class")
