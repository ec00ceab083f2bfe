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

from core.arrangement import betti_numbers
from core.chambers import chambers, classify_chambers, distance, locate
from core.errors import InvalidFlag, PreconditionError
from core.flag import Flag, choose_flag, validate_flag
from core.scalar import ExactScalar


@pytest.mark.parametrize("name, count", [("par2", 3), ("tri3", 7), ("pencil3", 6), ("fig2", 16), ("fig3", 16)])
def test_chamber_count_matches_betti(request, name, count):
    arrangement = request.getfixturevalue(name).arrangement
    found = chambers(arrangement)
    assert len(found) == count == sum(betti_numbers(arrangement))
    assert len({c.signs for c in found}) == count


def test_witnesses_are_inside_their_chambers(fig2):
    arrangement = fig2.arrangement
    for chamber in chambers(arrangement):
        assert locate(arrangement, chamber.witness) == chamber.signs


def test_locate_on_a_line(tri3):
    with pytest.raises(PreconditionError):
        locate(tri3.arrangement, (ExactScalar(0), ExactScalar(5)))


def test_fig2_flag_numbering(fig2):
    flag = validate_flag(fig2.arrangement, fig2.flag_hint)
    assert flag.order == (1, 2, 3, 4, 5, 6)
    assert flag.position(4) == 4


def test_fig2_classification(fig2):
    arrangement = fig2.arrangement
    classification = classify_chambers(arrangement, validate_flag(arrangement, fig2.flag_hint), fig2.labels)
    assert [c.label for c in classification.ch1] == ["C1", "C2", "C3", "C4", "C5", "C6"]
    assert [c.label for c in classification.ch2] == [f"D{j}" for j in range(1, 10)]
    c0, c3 = classification.c0, classification.by_label("C3")
    assert classification.separation(c0, c3) == frozenset({1, 2, 3})
    assert c0.sign_text() == "------"
    assert distance(arrangement, c0, classification.by_label("C6")) == 6


def test_labels_land_in_their_chambers(fig2):
    arrangement = fig2.arrangement
    classification = classify_chambers(arrangement, validate_flag(arrangement, fig2.flag_hint), fig2.labels)
    d8 = classification.by_label("D8")
    assert classification.inside(d8, plus=(2, 4, 5, 6), minus=(1, 3))


def test_chosen_flag_is_valid(tri3, pencil3, fig3):
    for document in (tri3, pencil3, fig3):
        flag = choose_flag(document.arrangement)
        assert sorted(flag.order) == sorted(document.arrangement.line_ids)
        classification = classify_chambers(document.arrangement, flag)
        assert len(classification.ch1) == len(document.arrangement)


def test_pencil3_second_class(pencil3):
    classification = classify_chambers(pencil3.arrangement, choose_flag(pencil3.arrangement))
    assert len(classification.ch2) == 2


def test_par2_has_no_second_class(par2):
    classification = classify_chambers(par2.arrangement, choose_flag(par2.arrangement))
    assert classification.ch2 == ()
    assert len(classification.ch1) == 2


def test_flag_on_a_line(tri3):
    with pytest.raises(InvalidFlag) as info:
        validate_flag(tri3.arrangement, Flag.from_numbers(0, 5, 1, 0))
    assert info.value.condition == "genericity"


def test_flag_parallel_to_a_line(tri3):
    with pytest.raises(InvalidFlag) as info:
        validate_flag(tri3.arrangement, Flag.from_numbers(-1, -1, 1, 0))
    assert info.value.condition == "crossing"


def test_flag_between_points(fig2):
    # F1 running between the triple points leaves some on each side
    with pytest.raises(InvalidFlag) as info:
        validate_flag(fig2.arrangement, Flag.from_numbers(10, 100, 1, 0))
    assert info.value.condition in ("near-infinity", "order")


def test_classification_needs_a_validated_flag(tri3):
    with pytest.raises(InvalidFlag):
        classify_chambers(tri3.arrangement, Flag.from_numbers(-1, -1, 1, 2))


@pytest.mark.parametrize("name", ["par2", "tri3", "pencil3", "fig2", "fig3"])
def test_distance_is_a_metric(request, name):
    arrangement = request.getfixturevalue(name).arrangement
    found = chambers(arrangement)
    for a in found:
        for b in found:
            d = distance(arrangement, a, b)
            assert d == distance(arrangement, b, a)
            assert (d == 0) == (a.signs == b.signs)
            for c in found:
                assert distance(arrangement, a, c) <= d + distance(arrangement, b, c)
