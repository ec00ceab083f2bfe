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

import re
from dataclasses import dataclass, replace
from typing import Dict, FrozenSet, List, Mapping, Optional, Sequence, Tuple

from core.arrangement import Arrangement, Line, Point
from core.errors import InvalidFlag, PreconditionError
from core.flag import Flag
from core.scalar import ZERO, ExactScalar

SignVector = Tuple[int, ...]


@dataclass(frozen=True)
class Chamber:
    signs: SignVector
    witness: Point
    flag_class: Optional[str] = None
    label: Optional[str] = None

    def sign_text(self) -> str:
        return "".join("+" if s > 0 else "-" for s in self.signs)

    def to_json(self) -> dict:
        return {
            "label": self.label,
            "class": self.flag_class,
            "signs": self.sign_text(),
            "witness": [str(self.witness[0]), str(self.witness[1])],
        }


def _edge_points(line: Line, previous: Sequence[Line]) -> List[Point]:
    base = line.base_point()
    step = (line.b, -line.a)
    params = set()
    for other in previous:
        rate = other.a * step[0] + other.b * step[1]
        if rate:
            params.add(-other.value(base) / rate)
    ts = sorted(params)
    if not ts:
        samples = [ZERO]
    else:
        samples = [ts[0] - 1] + [(s + t) / 2 for s, t in zip(ts, ts[1:])] + [ts[-1] + 1]
    return [(base[0] + t * step[0], base[1] + t * step[1]) for t in samples]


def _normal_offset(line: Line, previous: Sequence[Line], point: Point) -> ExactScalar:
    # largest safe step along the normal, halved
    limit: Optional[ExactScalar] = None
    for other in previous:
        rate = other.a * line.a + other.b * line.b
        if rate:
            hit = abs(other.value(point) / rate)
            if limit is None or hit < limit:
                limit = hit
    return limit / 2 if limit is not None else ExactScalar(1)


def chambers(arrangement: Arrangement) -> Tuple[Chamber, ...]:
    """All chambers, built by inserting the lines one at a time."""
    cells: Dict[SignVector, Point] = {(): (ZERO, ZERO)}
    lines = arrangement.lines
    for k, line in enumerate(lines):
        previous = lines[:k]
        split: Dict[SignVector, Point] = {}
        for point in _edge_points(line, previous):
            split[tuple(other.side(point) for other in previous)] = point
        grown: Dict[SignVector, Point] = {}
        for key, witness in cells.items():
            if key in split:
                mid = split[key]
                t = _normal_offset(line, previous, mid)
                for sign in (1, -1):
                    w = (mid[0] + sign * t * line.a, mid[1] + sign * t * line.b)
                    grown[key + (line.side(w),)] = w
            else:
                grown[key + (line.side(witness),)] = witness
        cells = grown
    return tuple(Chamber(key, cells[key]) for key in sorted(cells))


def separation(arrangement: Arrangement, first: Chamber, second: Chamber) -> FrozenSet[int]:
    return frozenset(
        line.id for line, s, t in zip(arrangement.lines, first.signs, second.signs) if s != t
    )


def distance(arrangement: Arrangement, first: Chamber, second: Chamber) -> int:
    return len(separation(arrangement, first, second))


def locate(arrangement: Arrangement, point: Point) -> SignVector:
    signs = tuple(line.side(point) for line in arrangement.lines)
    if 0 in signs:
        raise PreconditionError(f"point ({point[0]}, {point[1]}) lies on a line")
    return signs


@dataclass(frozen=True)
class ChamberClassification:
    """Chambers re-signed so that F0 lies on the minus side of every line."""

    arrangement: Arrangement
    flag: Flag
    c0: Chamber
    ch1: Tuple[Chamber, ...]
    ch2: Tuple[Chamber, ...]

    def side(self, chamber: Chamber, line_id: int) -> int:
        return chamber.signs[self.arrangement.index(line_id)]

    def by_label(self, label: str) -> Chamber:
        for chamber in (self.c0,) + self.ch1 + self.ch2:
            if chamber.label == label:
                return chamber
        raise KeyError(label)

    def separation(self, first: Chamber, second: Chamber) -> FrozenSet[int]:
        return separation(self.arrangement, first, second)

    def inside(self, chamber: Chamber, plus: Sequence[int], minus: Sequence[int]) -> bool:
        return all(self.side(chamber, i) > 0 for i in plus) and all(self.side(chamber, i) < 0 for i in minus)

    def to_json(self) -> dict:
        return {
            "order": list(self.flag.order),
            "ch0": self.c0.to_json(),
            "ch1": [c.to_json() for c in self.ch1],
            "ch2": [c.to_json() for c in self.ch2],
        }


def _label_key(label: str) -> Tuple[int, str]:
    digits = re.search(r"(\d+)$", label)
    return (int(digits.group(1)) if digits else 0, label)


def classify_chambers(
    arrangement: Arrangement,
    flag: Flag,
    labels: Optional[Mapping[str, Point]] = None,
) -> ChamberClassification:
    if not flag.order and arrangement.lines:
        raise InvalidFlag("order", "flag has no induced numbering; validate it first")
    flips = [-line.side(flag.origin) for line in arrangement.lines]
    oriented: Dict[SignVector, Chamber] = {}
    for chamber in chambers(arrangement):
        signs = tuple(s * f for s, f in zip(chamber.signs, flips))
        oriented[signs] = Chamber(signs, chamber.witness)

    n = len(arrangement)
    def pattern(i: int) -> SignVector:
        return tuple(1 if flag.position(line.id) <= i else -1 for line in arrangement.lines)

    try:
        c0 = replace(oriented.pop(pattern(0)), flag_class="ch0", label="C0")
        ch1 = tuple(replace(oriented.pop(pattern(i)), flag_class="ch1", label=f"C{i}") for i in range(1, n + 1))
    except KeyError:
        raise InvalidFlag("near-infinity", "chambers along F1 do not follow the flag numbering")

    expected = sum(p.multiplicity - 1 for p in arrangement.points())
    if len(oriented) != expected:
        raise InvalidFlag("near-infinity", f"found {len(oriented)} chambers away from F1, expected {expected}")

    named: Dict[SignVector, str] = {}
    flip_of = dict(zip(arrangement.line_ids, flips))
    for name, point in (labels or {}).items():
        raw = tuple(line.side(point) for line in arrangement.lines)
        if 0 in raw:
            raise PreconditionError(f"label {name} lies on a line")
        signs = tuple(s * flip_of[line.id] for s, line in zip(raw, arrangement.lines))
        if signs in oriented:
            named[signs] = name

    def flag_key(signs: SignVector) -> SignVector:
        return tuple(signs[arrangement.index(i)] for i in flag.order)

    labelled = sorted((s for s in oriented if s in named), key=lambda s: _label_key(named[s]))
    rest = sorted((s for s in oriented if s not in named), key=flag_key)
    ch2 = []
    for j, signs in enumerate(labelled + rest, start=1):
        ch2.append(replace(oriented[signs], flag_class="ch2", label=named.get(signs, f"D{j}")))
    return ChamberClassification(arrangement, flag, c0, ch1, tuple(ch2))
