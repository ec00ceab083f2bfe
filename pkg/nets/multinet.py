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
from itertools import combinations, product
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from algebra.cocycles import diagonal_cocycles, mod2_subset_check
from algebra.orlik_solomon import OneForm, Source, Subarrangement
from core.arrangement import Incidence, IntersectionPoint, as_incidence
from core.errors import PreconditionError, TheoremViolation
from linalg.modular import howell_form


@dataclass(frozen=True)
class NetPartition:
    classes: Tuple[FrozenSet[int], ...]
    base_locus: Optional[Tuple[IntersectionPoint, ...]] = field(default=None, compare=False)

    @classmethod
    def of(cls, classes: Iterable[Iterable[int]], base_locus: Optional[Sequence[IntersectionPoint]] = None) -> "NetPartition":
        normalized = tuple(frozenset(c) for c in classes)
        return cls(normalized, tuple(base_locus) if base_locus is not None else None)

    @property
    def k(self) -> int:
        return len(self.classes)

    @property
    def d(self) -> int:
        return len(self.classes[0]) if self.classes else 0

    def class_of(self, line_id: int) -> int:
        for index, members in enumerate(self.classes):
            if line_id in members:
                return index
        raise KeyError(line_id)

    def canonical(self) -> "NetPartition":
        ordered = sorted(self.classes, key=lambda c: sorted(c))
        return NetPartition(tuple(ordered), self.base_locus)

    def is_partition_of(self, line_ids: Iterable[int]) -> bool:
        members = [i for c in self.classes for i in c]
        return len(members) == len(set(members)) and set(members) == set(line_ids)

    def to_json(self) -> dict:
        out: Dict[str, object] = {"classes": [sorted(c) for c in self.canonical().classes]}
        if self.base_locus is not None:
            out["base_locus"] = [p.label() for p in self.base_locus]
        return out


@dataclass(frozen=True)
class MultinetReport:
    ok: bool
    is_net: bool
    violations: Tuple[Tuple[str, str], ...]
    base_locus: Tuple[IntersectionPoint, ...]

    @property
    def first_violation(self) -> Optional[Tuple[str, str]]:
        return self.violations[0] if self.violations else None

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "is_net": self.is_net,
            "violations": [{"condition": c, "detail": d} for c, d in self.violations],
            "base_locus": [p.label() for p in self.base_locus],
        }


def _classes_at(partition: NetPartition, point: IntersectionPoint) -> List[int]:
    counts = [0] * partition.k
    for line_id in point.incident:
        counts[partition.class_of(line_id)] += 1
    return counts


def verify_multinet(source: Source, partition: NetPartition) -> MultinetReport:
    """Checks a reduced (k, d)-multinet; the base locus is derived when absent."""
    incidence = as_incidence(source)
    if not partition.is_partition_of(incidence.line_ids):
        raise PreconditionError("classes do not partition the lines of the arrangement")

    violations: List[Tuple[str, str]] = []
    if partition.k < 3:
        violations.append(("k", f"a multinet needs at least 3 classes, got {partition.k}"))

    sizes = sorted({len(c) for c in partition.classes})
    if len(sizes) > 1:
        violations.append(("i", f"class sizes differ: {sizes}"))
    elif sizes and sizes[0] < 2:
        violations.append(("i", "classes need at least 2 lines"))

    if partition.base_locus is None:
        base = tuple(p for p in incidence.points if sum(1 for c in _classes_at(partition, p) if c) >= 2)
    else:
        base = partition.base_locus
    base_keys = {p.incident for p in base}

    for i, j in combinations(incidence.line_ids, 2):
        if partition.class_of(i) == partition.class_of(j):
            continue
        point = incidence.meet(i, j)
        if point is None:
            violations.append(("ii", f"lines {i} and {j} from different classes do not meet"))
        elif point.incident not in base_keys:
            violations.append(("ii", f"lines {i} and {j} meet at {point.label()} outside the base locus"))

    all_ones = True
    for point in base:
        counts = _classes_at(partition, point)
        if len(set(counts)) != 1:
            violations.append(("iii", f"class counts {counts} at {point.label()} are not constant"))
        if any(c != 1 for c in counts):
            all_ones = False

    for index, members in enumerate(partition.classes):
        graph = nx.Graph()
        graph.add_nodes_from(members)
        for i, j in combinations(sorted(members), 2):
            point = incidence.meet(i, j)
            if point is not None and point.incident not in base_keys:
                graph.add_edge(i, j)
        if len(members) > 1 and not nx.is_connected(graph):
            violations.append(("iv", f"class {index + 1} is not connected away from the base locus"))

    ok = not violations
    return MultinetReport(ok, ok and all_ones, tuple(violations), tuple(base))


def extract_3nets(source: Source) -> List[NetPartition]:
    """3-nets read off the mod-3 cocycles of the diagonal element."""
    incidence = as_incidence(source)
    ids = incidence.line_ids
    if len(ids) % 3:
        raise PreconditionError(f"3 does not divide the number of lines ({len(ids)})")
    for point in incidence.points:
        if point.multiplicity % 3 == 0 and point.multiplicity > 3:
            raise PreconditionError(f"point {point.label()} has multiplicity {point.multiplicity}")

    generators, _ = diagonal_cocycles(incidence, 3)
    basis = howell_form(generators).form.rows()
    found = {}
    for choice in product(range(3), repeat=len(basis)):
        vector = [0] * len(ids)
        for c, row in zip(choice, basis):
            vector = [(x + c * y) % 3 for x, y in zip(vector, row)]
        if sum(vector) % 3 or len(set(vector)) == 1:
            continue
        classes = [frozenset(i for i, x in zip(ids, vector) if x == value) for value in range(3)]
        if any(not c for c in classes):
            continue
        candidate = NetPartition.of(classes).canonical()
        if candidate.classes not in found:
            found[candidate.classes] = candidate

    nets = []
    for candidate in found.values():
        report = verify_multinet(incidence, candidate)
        if report.ok:
            nets.append(NetPartition(candidate.classes, report.base_locus))
    return sorted(nets, key=lambda n: [sorted(c) for c in n.classes])


def fournet_cocycles(source: Source, partition: NetPartition) -> Tuple[Subarrangement, Subarrangement, Subarrangement]:
    incidence = as_incidence(source)
    report = verify_multinet(incidence, partition)
    if partition.k != 4 or not report.ok:
        raise PreconditionError(f"not a 4-multinet: {report.first_violation or ('k', str(partition.k))}")
    first = partition.classes[0]
    subsets = tuple(Subarrangement(first | other) for other in partition.classes[1:])
    for subset in subsets:
        if not mod2_subset_check(incidence, subset).ok:
            raise TheoremViolation(f"{sorted(subset.ids)} fails the mod-2 cocycle test")
    total = OneForm.zero(incidence.line_ids, 2)
    for subset in subsets:
        total = total + OneForm.of({i: 1 for i in subset.ids}, 2, incidence.line_ids)
    if total != OneForm.diagonal(incidence.line_ids, 2):
        raise TheoremViolation("the three class-union cocycles do not sum to the diagonal")
    return subsets  # type: ignore[return-value]


def search_nets(source: Source, k: int) -> List[NetPartition]:
    """All (k, d)-nets, up to relabeling the classes."""
    if k not in (3, 4):
        raise PreconditionError(f"net search supports k = 3 or 4, got {k}")
    incidence = as_incidence(source)
    ids = incidence.line_ids
    if not ids or len(ids) % k:
        return []
    d = len(ids) // k
    if d < 2:
        return []

    # lines through a point that cannot be a base point share a class
    forced = nx.Graph()
    forced.add_nodes_from(ids)
    for point in incidence.points:
        if point.multiplicity != k:
            nx.add_path(forced, point.incident)
    groups = sorted(tuple(sorted(g)) for g in nx.connected_components(forced))
    if any(len(g) > d for g in groups):
        return []
    k_points = [p for p in incidence.points if p.multiplicity == k]

    colour: Dict[int, int] = {}
    sizes = [0] * k
    results: List[NetPartition] = []

    def consistent() -> bool:
        for point in k_points:
            seen = [colour[i] for i in point.incident if i in colour]
            distinct = len(set(seen))
            if distinct not in (1, len(seen)) and seen:
                return False
        return True

    def place(index: int, used: int) -> None:
        if index == len(groups):
            if used != k:
                return
            classes = [frozenset(i for i in ids if colour[i] == c) for c in range(k)]
            candidate = NetPartition.of(classes).canonical()
            report = verify_multinet(incidence, candidate)
            if report.is_net:
                results.append(NetPartition(candidate.classes, report.base_locus))
            return
        group = groups[index]
        for c in range(min(used + 1, k)):
            if sizes[c] + len(group) > d:
                continue
            for i in group:
                colour[i] = c
            sizes[c] += len(group)
            if consistent():
                place(index + 1, max(used, c + 1))
            sizes[c] -= len(group)
            for i in group:
                del colour[i]

    place(0, 0)
    return sorted(results, key=lambda n: [sorted(c) for c in n.classes])


def hessian_incidence() -> Incidence:
    """Dual affine plane of order 3: 12 lines, 9 quadruple points, a (4, 3)-net."""
    points = [(x, y) for x in range(3) for y in range(3)]
    lines: List[FrozenSet[Tuple[int, int]]] = []
    for dx, dy in ((0, 1), (1, 0), (1, 1), (1, 2)):
        for base in points:
            line = frozenset(((base[0] + t * dx) % 3, (base[1] + t * dy) % 3) for t in range(3))
            if line not in lines:
                lines.append(line)
    blocks = [[k + 1 for k, line in enumerate(lines) if p in line] for p in points]
    return Incidence.from_blocks(range(1, len(lines) + 1), blocks, projective=True)


def hessian_partition() -> NetPartition:
    return NetPartition.of([range(1, 4), range(4, 7), range(7, 10), range(10, 13)])
