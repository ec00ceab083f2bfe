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
from itertools import count
from typing import Dict, Optional, Tuple

from core.arrangement import Arrangement, Point, cross
from core.errors import InvalidFlag
from core.scalar import ZERO, ExactScalar, Number


@dataclass(frozen=True)
class Flag:
    """F0 = origin, F1 = the line through origin along direction."""

    origin: Point
    direction: Point
    order: Tuple[int, ...] = ()

    @classmethod
    def from_numbers(cls, x0: Number, y0: Number, dx: Number, dy: Number) -> "Flag":
        return cls(
            (ExactScalar.of(x0), ExactScalar.of(y0)),
            (ExactScalar.of(dx), ExactScalar.of(dy)),
        )

    def position(self, line_id: int) -> int:
        """1-based index of the line along F1."""
        return self.order.index(line_id) + 1

    def point_at(self, t: ExactScalar) -> Point:
        return self.origin[0] + t * self.direction[0], self.origin[1] + t * self.direction[1]

    def to_json(self) -> dict:
        return {
            "origin": [str(x) for x in self.origin],
            "direction": [str(x) for x in self.direction],
            "order": list(self.order),
        }


def crossing_parameters(arrangement: Arrangement, flag: Flag) -> Dict[int, ExactScalar]:
    params: Dict[int, ExactScalar] = {}
    for line in arrangement.lines:
        rate = line.a * flag.direction[0] + line.b * flag.direction[1]
        if not rate:
            raise InvalidFlag("crossing", f"F1 is parallel to {line.name}")
        params[line.id] = -line.value(flag.origin) / rate
    return params


def validate_flag(arrangement: Arrangement, flag: Flag) -> Flag:
    if not (flag.direction[0] or flag.direction[1]):
        raise InvalidFlag("crossing", "F1 has a zero direction")
    for line in arrangement.lines:
        if not line.value(flag.origin):
            raise InvalidFlag("genericity", f"F0 lies on {line.name}")

    params = crossing_parameters(arrangement, flag)
    for line_id, t in params.items():
        if t.sign() < 0:
            raise InvalidFlag("order", f"{arrangement.line(line_id).name} crosses F1 before F0")
    if len(set(params.values())) != len(params):
        raise InvalidFlag("crossing", "two lines cross F1 at the same point")

    sides = set()
    for point in arrangement.points():
        offset = (point.location[0] - flag.origin[0], point.location[1] - flag.origin[1])
        side = cross(flag.direction, offset).sign()
        if side == 0:
            raise InvalidFlag("near-infinity", f"intersection {point.label()} lies on F1")
        sides.add(side)
    if len(sides) > 1:
        raise InvalidFlag("near-infinity", "F1 separates intersection points")

    order = tuple(sorted(params, key=lambda i: params[i]))
    return Flag(flag.origin, flag.direction, order)


def _usable_direction(arrangement: Arrangement, k: int) -> bool:
    direction = (ExactScalar(1), ExactScalar(k))
    for line in arrangement.lines:
        if not (line.a + k * line.b):
            return False
    locations = [p.location for p in arrangement.points()]
    for i, p in enumerate(locations):
        for q in locations[i + 1:]:
            if not cross(direction, (p[0] - q[0], p[1] - q[1])):
                return False
    return True


def choose_flag(arrangement: Arrangement, hint: Optional[Flag] = None) -> Flag:
    if hint is not None:
        return validate_flag(arrangement, hint)
    if not arrangement.lines:
        return Flag((ZERO, ZERO), (ExactScalar(1), ZERO))

    k = next(k for k in count(1) if _usable_direction(arrangement, k))
    direction = (ExactScalar(1), ExactScalar(k))
    # F1 = {-k*x + y = level}, strictly below every intersection point
    heights = [p.location[1] - k * p.location[0] for p in arrangement.points()]
    level = min(heights) - 1 if heights else ZERO
    scale = ExactScalar(k * k + 1)
    foot = (-k * level / scale, level / scale)
    probe = Flag(foot, direction)
    first = min(crossing_parameters(arrangement, probe).values())
    origin = probe.point_at(first - 1)
    return validate_flag(arrangement, Flag(origin, direction))
