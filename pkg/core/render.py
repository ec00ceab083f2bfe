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

from typing import List, Optional, Tuple

from core.arrangement import Arrangement, Line
from core.flag import Flag

CANVAS = 480
MARGIN = 40

Box = Tuple[float, float, float, float]


def _bounds(arrangement: Arrangement, flag: Optional[Flag]) -> Box:
    xs: List[float] = []
    ys: List[float] = []
    for point in arrangement.points():
        xs.append(float(point.location[0]))
        ys.append(float(point.location[1]))
    for line in arrangement.lines:
        base = line.base_point()
        xs.append(float(base[0]))
        ys.append(float(base[1]))
    if flag is not None:
        xs.append(float(flag.origin[0]))
        ys.append(float(flag.origin[1]))
    if not xs:
        return -1.0, -1.0, 1.0, 1.0
    pad = max(max(xs) - min(xs), max(ys) - min(ys), 2.0) * 0.25
    return min(xs) - pad, min(ys) - pad, max(xs) + pad, max(ys) + pad


def _clip(a: float, b: float, c: float, box: Box) -> Optional[Tuple[Tuple[float, float], Tuple[float, float]]]:
    x0, y0, x1, y1 = box
    hits = []
    if abs(b) > 1e-12:
        for x in (x0, x1):
            y = (c - a * x) / b
            if y0 - 1e-9 <= y <= y1 + 1e-9:
                hits.append((x, y))
    if abs(a) > 1e-12:
        for y in (y0, y1):
            x = (c - b * y) / a
            if x0 - 1e-9 <= x <= x1 + 1e-9:
                hits.append((x, y))
    if len(hits) < 2:
        return None
    hits.sort()
    return hits[0], hits[-1]


def render_svg(arrangement: Arrangement, flag: Optional[Flag] = None) -> str:
    """Static picture; floats are used for drawing only."""
    box = _bounds(arrangement, flag)
    x0, y0, x1, y1 = box
    scale = (CANVAS - 2 * MARGIN) / max(x1 - x0, y1 - y0)

    def to_canvas(p: Tuple[float, float]) -> Tuple[float, float]:
        return MARGIN + (p[0] - x0) * scale, CANVAS - MARGIN - (p[1] - y0) * scale

    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{CANVAS}" height="{CANVAS}" viewBox="0 0 {CANVAS} {CANVAS}">',
        '<rect width="100%" height="100%" fill="white"/>',
    ]
    line: Line
    for line in arrangement.lines:
        segment = _clip(float(line.a), float(line.b), float(line.c), box)
        if segment is None:
            continue
        (ax, ay), (bx, by) = (to_canvas(p) for p in segment)
        parts.append(f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}" stroke="black" stroke-width="1.5"/>')
        parts.append(f'<text x="{bx + 4:.2f}" y="{by:.2f}" font-size="12">{line.name}</text>')

    if flag is not None:
        dx, dy = float(flag.direction[0]), float(flag.direction[1])
        ox, oy = float(flag.origin[0]), float(flag.origin[1])
        segment = _clip(-dy, dx, -dy * ox + dx * oy, box)
        if segment is not None:
            (ax, ay), (bx, by) = (to_canvas(p) for p in segment)
            parts.append(
                f'<line x1="{ax:.2f}" y1="{ay:.2f}" x2="{bx:.2f}" y2="{by:.2f}" stroke="red" stroke-dasharray="6 4"/>'
            )
        cx, cy = to_canvas((ox, oy))
        parts.append(f'<circle cx="{cx:.2f}" cy="{cy:.2f}" r="4" fill="red"/>')
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
