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
from itertools import combinations
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple, Union

from core.errors import DuplicateLine, PreconditionError, ZeroNormal
from core.scalar import ZERO, ExactScalar, Number

Point = Tuple[ExactScalar, ExactScalar]


def cross(u: Point, v: Point) -> ExactScalar:
    return u[0] * v[1] - u[1] * v[0]


def canonical_direction(x: ExactScalar, y: ExactScalar) -> Point:
    # angle in [0, pi)
    if y.sign() < 0 or (y.sign() == 0 and x.sign() < 0):
        return -x, -y
    return x, y


@dataclass(frozen=True)
class Line:
    """The affine line a*x + b*y = c, first nonzero of (a, b) equal to 1."""

    id: int
    a: ExactScalar
    b: ExactScalar
    c: ExactScalar
    name: str = ""

    @classmethod
    def create(cls, line_id: int, a: Number, b: Number, c: Number, name: str = "") -> "Line":
        a, b, c = ExactScalar.of(a), ExactScalar.of(b), ExactScalar.of(c)
        lead = a if a else b
        if not lead:
            raise ZeroNormal(f"line {name or line_id} has a zero normal vector")
        return cls(line_id, a / lead, b / lead, c / lead, name or f"H{line_id}")

    @property
    def coefficients(self) -> Tuple[ExactScalar, ExactScalar, ExactScalar]:
        return self.a, self.b, self.c

    def value(self, point: Point) -> ExactScalar:
        return self.a * point[0] + self.b * point[1] - self.c

    def side(self, point: Point) -> int:
        return self.value(point).sign()

    def is_parallel(self, other: "Line") -> bool:
        return not (self.a * other.b - self.b * other.a)

    def meet(self, other: "Line") -> Optional[Point]:
        det = self.a * other.b - self.b * other.a
        if not det:
            return None
        x = (self.c * other.b - self.b * other.c) / det
        y = (self.a * other.c - self.c * other.a) / det
        return x, y

    def direction(self) -> Point:
        return canonical_direction(self.b, -self.a)

    def base_point(self) -> Point:
        if self.a:
            return self.c / self.a, ZERO
        return ZERO, self.c / self.b

    def homogeneous(self) -> Tuple[ExactScalar, ExactScalar, ExactScalar]:
        return self.a, self.b, -self.c


@dataclass(frozen=True)
class IntersectionPoint:
    incident: Tuple[int, ...]
    location: Optional[Point] = None
    direction: Optional[Point] = None

    @property
    def multiplicity(self) -> int:
        return len(self.incident)

    @property
    def at_infinity(self) -> bool:
        return self.direction is not None

    def contains(self, line_id: int) -> bool:
        return line_id in self.incident

    def label(self) -> str:
        return "{" + ",".join(str(i) for i in self.incident) + "}"

    def to_json(self) -> dict:
        out: Dict[str, object] = {"incident": list(self.incident), "multiplicity": self.multiplicity}
        if self.location is not None:
            out["location"] = [str(self.location[0]), str(self.location[1])]
        if self.direction is not None:
            out["direction"] = [str(self.direction[0]), str(self.direction[1])]
        return out


@dataclass(frozen=True)
class Incidence:
    """Lines and multiple points, with or without geometry behind them."""

    line_ids: Tuple[int, ...]
    points: Tuple[IntersectionPoint, ...]
    projective: bool = False

    @classmethod
    def from_blocks(cls, line_ids: Iterable[int], blocks: Iterable[Iterable[int]], projective: bool = True) -> "Incidence":
        ids = tuple(line_ids)
        known = set(ids)
        seen: Dict[FrozenSet[int], Tuple[int, ...]] = {}
        points: List[IntersectionPoint] = []
        for block in blocks:
            members = tuple(sorted(set(block)))
            if len(members) < 2:
                raise PreconditionError(f"block {members} has fewer than two lines")
            if not known.issuperset(members):
                raise PreconditionError(f"block {members} names unknown lines")
            for pair in combinations(members, 2):
                key = frozenset(pair)
                if key in seen:
                    raise PreconditionError(f"lines {pair} meet in two blocks")
                seen[key] = members
            points.append(IntersectionPoint(members))
        if projective:
            for pair in combinations(sorted(ids), 2):
                if frozenset(pair) not in seen:
                    points.append(IntersectionPoint(pair))
        points.sort(key=lambda p: p.incident)
        return cls(ids, tuple(points), projective)

    @cached_property
    def _pair_map(self) -> Dict[FrozenSet[int], IntersectionPoint]:
        out: Dict[FrozenSet[int], IntersectionPoint] = {}
        for point in self.points:
            for pair in combinations(point.incident, 2):
                out[frozenset(pair)] = point
        return out

    def meet(self, i: int, j: int) -> Optional[IntersectionPoint]:
        return self._pair_map.get(frozenset((i, j)))

    def is_essential(self) -> bool:
        if len(self.line_ids) < 3:
            return False
        return all(p.multiplicity < len(self.line_ids) for p in self.points)

    def to_json(self) -> dict:
        return {
            "lines": list(self.line_ids),
            "projective": self.projective,
            "points": [p.to_json() for p in self.points],
        }


class Arrangement:
    def __init__(self, lines: Sequence[Line], field_d: int = 0, infinity_id: int = 0) -> None:
        seen_ids = set()
        seen_coeffs: Dict[Tuple[ExactScalar, ...], str] = {}
        for line in lines:
            if line.id in seen_ids:
                raise DuplicateLine(f"line id {line.id} used twice")
            if line.coefficients in seen_coeffs:
                raise DuplicateLine(f"{line.name} repeats {seen_coeffs[line.coefficients]}")
            seen_ids.add(line.id)
            seen_coeffs[line.coefficients] = line.name
        if infinity_id in seen_ids:
            infinity_id = max(seen_ids) + 1
        self.lines: Tuple[Line, ...] = tuple(lines)
        self.field_d = field_d
        self.infinity_id = infinity_id
        self._index = {line.id: k for k, line in enumerate(self.lines)}
        self._points: Optional[Tuple[IntersectionPoint, ...]] = None
        self._classes: Optional[Tuple[Tuple[int, ...], ...]] = None

    def __len__(self) -> int:
        return len(self.lines)

    def __repr__(self) -> str:
        return f"Arrangement({[line.name for line in self.lines]}, field_d={self.field_d})"

    @property
    def line_ids(self) -> Tuple[int, ...]:
        return tuple(line.id for line in self.lines)

    def line(self, line_id: int) -> Line:
        return self.lines[self._index[line_id]]

    def index(self, line_id: int) -> int:
        return self._index[line_id]

    def parallel_classes(self) -> Tuple[Tuple[int, ...], ...]:
        if self._classes is None:
            groups: Dict[Tuple[ExactScalar, ExactScalar], List[int]] = {}
            for line in self.lines:
                groups.setdefault((line.a, line.b), []).append(line.id)
            self._classes = tuple(tuple(g) for g in groups.values())
        return self._classes

    def points(self) -> Tuple[IntersectionPoint, ...]:
        if self._points is None:
            found: Dict[Point, set] = {}
            for first, second in combinations(self.lines, 2):
                where = first.meet(second)
                if where is None:
                    continue
                found.setdefault(where, set()).update((first.id, second.id))
            points = [IntersectionPoint(tuple(sorted(ids)), location=loc) for loc, ids in found.items()]
            points.sort(key=lambda p: p.incident)
            self._points = tuple(points)
        return self._points

    def incidence(self) -> Incidence:
        return Incidence(self.line_ids, self.points(), projective=False)


def intersection_poset(arrangement: Arrangement, with_infinity: bool = False) -> Tuple[IntersectionPoint, ...]:
    points = list(arrangement.points())
    if with_infinity:
        for group in arrangement.parallel_classes():
            direction = arrangement.line(group[0]).direction()
            incident = tuple(sorted(group + (arrangement.infinity_id,)))
            points.append(IntersectionPoint(incident, direction=direction))
    return tuple(points)


def betti_numbers(arrangement: Arrangement) -> Tuple[int, int, int]:
    return 1, len(arrangement), sum(p.multiplicity - 1 for p in arrangement.points())


def as_incidence(source: Union[Arrangement, Incidence, "object"]) -> Incidence:
    if isinstance(source, Incidence):
        return source
    return source.incidence()
