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

import pytest

from core.arrangement import Arrangement, Incidence, Line, betti_numbers, intersection_poset
from core.errors import DuplicateLine, PreconditionError
from core.projective import ProjectiveArrangement, cyclic_order_at_point


def _incidents(points):
    return sorted(p.incident for p in points)


def _cyclic_class(order):
    turns = []
    for seq in (tuple(order), tuple(reversed(order))):
        turns += [seq[k:] + seq[:k] for k in range(len(seq))]
    return min(turns)


def test_tri3_points(tri3):
    arrangement = tri3.arrangement
    assert _incidents(arrangement.points()) == [(1, 2), (1, 3), (2, 3)]
    assert betti_numbers(arrangement) == (1, 3, 3)


def test_fig2_points_and_betti(fig2):
    arrangement = fig2.arrangement
    assert _incidents(arrangement.points()) == [
        (1, 2, 5), (1, 3, 6), (1, 4), (2, 4), (2, 6), (3, 4), (3, 5),
    ]
    assert betti_numbers(arrangement) == (1, 6, 9)


def test_fig2_points_at_infinity(fig2):
    at_infinity = [p for p in intersection_poset(fig2.arrangement, with_infinity=True) if p.at_infinity]
    assert sorted(p.multiplicity for p in at_infinity) == [2, 3, 4]
    assert all(p.contains(0) for p in at_infinity)


def test_parallel_classes(fig2, par2):
    assert sorted(fig2.arrangement.parallel_classes()) == [(1,), (2, 3), (4, 5, 6)]
    assert par2.arrangement.parallel_classes() == ((1, 2),)
    assert par2.arrangement.points() == ()


def test_pencil_poset(pencil3):
    points = pencil3.arrangement.points()
    assert len(points) == 1
    assert points[0].multiplicity == 3
    assert betti_numbers(pencil3.arrangement) == (1, 3, 2)


def test_duplicate_line_id():
    with pytest.raises(DuplicateLine):
        Arrangement([Line.create(1, 1, 0, 0), Line.create(1, 0, 1, 0)])


def test_infinity_id_moves_out_of_the_way():
    arrangement = Arrangement([Line.create(0, 1, 0, 0), Line.create(1, 0, 1, 0)])
    assert arrangement.infinity_id == 2


def test_decone_pencil_gives_parallel_lines(pencil4):
    projective = pencil4.projective_view()
    assert not projective.is_essential()
    chart = projective.decone(1)
    assert chart.line_ids == (2, 3, 4)
    assert len(chart.parallel_classes()) == 1
    assert chart.points() == ()
    assert chart.infinity_id == 1


def test_decone_keeps_the_combinatorics(tri3):
    projective = tri3.projective_view()
    assert projective.line_ids == (1, 2, 3, 0)
    chart = projective.decone(1)
    assert sorted(chart.line_ids) == [0, 2, 3]
    assert betti_numbers(chart) == (1, 3, 3)


def test_decone_by_infinity_is_the_chart(fig2):
    chart = fig2.projective_view().decone(0)
    assert chart.line_ids == fig2.arrangement.line_ids
    assert _incidents(chart.points()) == _incidents(fig2.arrangement.points())


def test_decone_unknown_line(tri3):
    with pytest.raises(PreconditionError):
        tri3.projective_view().decone(9)


def test_a16_is_essential(a16):
    projective = a16.projective_view()
    assert len(projective) == 16
    assert projective.is_essential()


def test_cyclic_order_pencil(pencil3):
    point = pencil3.arrangement.points()[0]
    assert cyclic_order_at_point(pencil3.arrangement, point) == (1, 2, 3)


def test_cyclic_order_at_infinity_follows_offsets(fig2):
    projective = ProjectiveArrangement(fig2.arrangement)
    point = next(p for p in projective.points() if p.multiplicity == 4)
    assert cyclic_order_at_point(projective, point) == (0, 4, 5, 6)


@pytest.mark.parametrize("name", ["fig2", "fig3", "quad", "ico"])
def test_cyclic_order_is_the_same_in_every_chart(request, name):
    projective = request.getfixturevalue(name).projective_view()
    checked = 0
    for point in projective.points():
        if point.multiplicity < 3:
            continue
        expected = _cyclic_class(cyclic_order_at_point(projective, point))
        for line_id in projective.line_ids:
            chart = ProjectiveArrangement(projective.decone(line_id))
            same = next(p for p in chart.points() if set(p.incident) == set(point.incident))
            assert _cyclic_class(cyclic_order_at_point(chart, same)) == expected
            checked += 1
    assert checked > 0

def test_incidence_from_blocks():
    incidence = Incidence.from_blocks(range(1, 5), [(1, 2, 3)])
    assert _incidents(incidence.points) == [(1, 2, 3), (1, 4), (2, 4), (3, 4)]
    assert incidence.meet(1, 4).incident == (1, 4)
    assert incidence.is_essential()


def test_incidence_rejects_double_meeting():
    with pytest.raises(PreconditionError):
        Incidence.from_blocks(range(1, 5), [(1, 2, 3), (1, 2, 4)])
    with pytest.raises(PreconditionError):
        Incidence.from_blocks(range(1, 4), [(1,)])
