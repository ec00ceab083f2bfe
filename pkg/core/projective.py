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

from functools import cmp_to_key
from typing import List, Sequence, Tuple, Union

from core.arrangement import Arrangement, Incidence, IntersectionPoint, Line, cross, intersection_poset
from core.errors import PreconditionError
from core.scalar import ONE, ZERO, ExactScalar

Row = Tuple[ExactScalar, ExactScalar, ExactScalar]


class ProjectiveArrangement:
    """Projective closure of an affine chart.

    with_infinity says whether the chart's line at infinity (id
    chart.infinity_id) is a member of the arrangement.
    """

    def __init__(self, chart: Arrangement, with_infinity: bool = True) -> None:
        self.chart = chart
        self.with_infinity = with_infinity

    def __len__(self) -> int:
        return len(self.chart) + (1 if self.with_infinity else 0)

    def __repr__(self) -> str:
        return f"ProjectiveArrangement({self.chart!r}, with_infinity={self.with_infinity})"

    @property
    def infinity_id(self) -> int:
        return self.chart.infinity_id

    @property
    def line_ids(self) -> Tuple[int, ...]:
        ids = self.chart.line_ids
        return ids + (self.infinity_id,) if self.with_infinity else ids

    def points(self) -> Tuple[IntersectionPoint, ...]:
        if self.with_infinity:
            return intersection_poset(self.chart, with_infinity=True)
        points = list(self.chart.points())
        for group in self.chart.parallel_classes():
            if len(group) >= 2:
                direction = self.chart.line(group[0]).direction()
                points.append(IntersectionPoint(tuple(sorted(group)), direction=direction))
        return tuple(points)

    def incidence(self) -> Incidence:
        return Incidence(self.line_ids, self.points(), projective=True)

    def is_essential(self) -> bool:
        return self.incidence().is_essential()

    def homogeneous(self, line_id: int) -> Row:
        if self.with_infinity and line_id == self.infinity_id:
            return ZERO, ZERO, ONE
        return self.chart.line(line_id).homogeneous()

    def name(self, line_id: int) -> str:
        if self.with_infinity and line_id == self.infinity_id:
            return f"H{line_id}"
        return self.chart.line(line_id).name

    def decone(self, line_id: int) -> Arrangement:
        return decone_geometry(self, line_id)


def _det3(m: Sequence[Row]) -> ExactScalar:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _inverse3(m: Sequence[Row]) -> List[List[ExactScalar]]:
    det = _det3(m)
    if not det:
        raise ZeroDivisionError("singular chart change")
    inv = [[ZERO] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            rows = [r for k, r in enumerate(m) if k != j]
            minor = [[x for k, x in enumerate(r) if k != i] for r in rows]
            cof = minor[0][0] * minor[1][1] - minor[0][1] * minor[1][0]
            inv[i][j] = cof / det if (i + j) % 2 == 0 else -cof / det
    return inv


def decone_geometry(projective: ProjectiveArrangement, line_id: int) -> Arrangement:
    if line_id not in projective.line_ids:
        raise PreconditionError(f"line {line_id} is not a member of the arrangement")
    chart = projective.chart
    if projective.with_infinity and line_id == projective.infinity_id:
        return Arrangement(chart.lines, chart.field_d, chart.infinity_id)

    target = projective.homogeneous(line_id)
    if target[2]:
        keep = (0, 1)
    elif target[1]:
        keep = (0, 2)
    else:
        keep = (1, 2)
    unit_rows = [tuple(ONE if k == j else ZERO for k in range(3)) for j in keep]
    change = [unit_rows[0], unit_rows[1], target]
    inverse = _inverse3(change)

    lines: List[Line] = []
    for other in projective.line_ids:
        if other == line_id:
            continue
        row = projective.homogeneous(other)
        image = [sum((row[k] * inverse[k][j] for k in range(3)), ZERO) for j in range(3)]
        lines.append(Line.create(other, image[0], image[1], -image[2], projective.name(other)))
    return Arrangement(lines, chart.field_d, infinity_id=line_id)


def _chart_of(source: Union[Arrangement, ProjectiveArrangement]) -> Arrangement:
    return source.chart if isinstance(source, ProjectiveArrangement) else source


def cyclic_order_at_point(source: Union[Arrangement, ProjectiveArrangement], point: IntersectionPoint) -> Tuple[int, ...]:
    chart = _chart_of(source)
    if point.at_infinity:
        finite = [i for i in point.incident if i in chart.line_ids]
        order = sorted(finite, key=lambda i: chart.line(i).c)
        order += [i for i in point.incident if i not in chart.line_ids]
    else:
        directions = {i: chart.line(i).direction() for i in point.incident}

        def by_angle(i: int, j: int) -> int:
            return -cross(directions[i], directions[j]).sign()

        order = sorted(point.incident, key=cmp_to_key(by_angle))
    start = order.index(min(order))
    return tuple(order[start:] + order[:start])
