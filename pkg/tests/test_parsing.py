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

from core.errors import DuplicateLine, MixedField, ParseError, PreconditionError, ZeroNormal
from parsing.arrangement_file import parse_arrangement, parse_classes, parse_document, parse_eta, parse_subset
from parsing.validator import RecordValidator


def test_tri3_from_bare_lines():
    arrangement = parse_arrangement("line L1 1 0 0\nline L2 0 1 0\nline L3 1 1 1\n")
    assert arrangement.line_ids == (1, 2, 3)
    assert len(arrangement.points()) == 3


def test_names_without_digits_use_position():
    arrangement = parse_arrangement("line a 1 0 0\nline b 0 1 0\n")
    assert arrangement.line_ids == (1, 2)
    assert arrangement.line(2).name == "b"


def test_comments_and_blank_lines_are_skipped():
    text = "# header\n\nfield rational\nline H1 1 0 0   # x = 0\n"
    assert len(parse_arrangement(text)) == 1


def test_repeated_line_is_refused():
    with pytest.raises(DuplicateLine):
        parse_arrangement("line H1 1 0 0\nline H2 1 0 0\n")


def test_scaled_copy_is_the_same_line():
    with pytest.raises(DuplicateLine):
        parse_arrangement("line H1 1 1 1\nline H2 2 2 2\n")


def test_zero_normal():
    with pytest.raises(ZeroNormal) as info:
        parse_arrangement("line H1 1 0 0\nline H2 0 0 3\n")
    assert info.value.line_number == 2


def test_unknown_record():
    with pytest.raises(ParseError) as info:
        parse_document("field rational\ncircle C 0 0 1\n")
    assert info.value.line_number == 2


def test_wrong_arity():
    with pytest.raises(ParseError):
        parse_document("line H1 1 0\n")


def test_conflicting_fields():
    with pytest.raises(MixedField):
        parse_document("field rational\nfield quadratic 2\n")


def test_radicand_must_be_squarefree():
    with pytest.raises(ParseError):
        parse_document("field quadratic 8\n")


def test_flag_labels_and_projective_marker():
    document = parse_document(
        "field quadratic 2\nprojective\nline H1 1 0 w\nline H2 0 1 0\nflag 1 -1 1 0\nlabel D1 3 2\n"
    )
    assert document.projective
    assert document.field_d == 2
    assert document.flag_hint is not None
    assert "D1" in document.labels
    assert document.projective_view().line_ids == (1, 2)


def test_affine_document_adds_the_line_at_infinity():
    document = parse_document("line H1 1 0 0\nline H2 0 1 0\n")
    assert document.projective_view().line_ids == (1, 2, 0)
    assert document.names()["H0"] == 0


def test_validator_reports_reason():
    check = RecordValidator().validate("line H1 1 0 0 ; rm")
    assert not check.allowed
    assert "Unexpected" in check.reason


def test_eta_literals():
    ids = (1, 2, 3)
    assert parse_eta("0,1,1", ids) == {1: 0, 2: 1, 3: 1}
    assert parse_eta("H2:5", ids, {"H2": 2}) == {1: 0, 2: 5, 3: 0}
    with pytest.raises(PreconditionError):
        parse_eta("1,1", ids)


def test_subset_and_classes():
    ids = (0, 1, 2, 3, 4, 5)
    names = {f"H{i}": i for i in ids}
    assert parse_subset("H2,H3,H2", ids, names) == (2, 3)
    assert parse_classes("H0,H1|H2,H3|H4,H5", ids, names) == ((0, 1), (2, 3), (4, 5))
    with pytest.raises(PreconditionError):
        parse_subset("H9", ids, names)
    with pytest.raises(PreconditionError):
        parse_classes("H0||H1", ids, names)
