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

from fractions import Fraction

import pytest

from core.errors import MalformedScalar, MixedField
from core.scalar import ONE, ZERO, ExactScalar
from parsing.arrangement_file import parse_scalar

W = ExactScalar(0, 1, 2)


def test_rational_arithmetic_is_exact():
    x = ExactScalar(Fraction(1, 3))
    assert x + x + x == 1
    assert (x * 3) / 3 == x
    assert ONE - x == ExactScalar(Fraction(2, 3))


def test_sqrt2_squares_to_two():
    assert W * W == 2
    assert (1 + W) * (W - 1) == 1
    assert (1 + W).inverse() == W - 1


@pytest.mark.parametrize(
    "value,sign",
    [
        (ExactScalar(1, -1, 2), -1),
        (ExactScalar(-1, 1, 2), 1),
        (ExactScalar(Fraction(3, 2), -1, 2), 1),
        (ExactScalar(Fraction(7, 5), -1, 2), -1),
        (ZERO, 0),
    ],
)
def test_sign_is_decided_without_floats(value, sign):
    assert value.sign() == sign


def test_order_matches_real_embedding():
    values = [W, ExactScalar(Fraction(7, 5)), ExactScalar(Fraction(3, 2)), -W, ZERO]
    assert sorted(values) == sorted(values, key=float)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO


def test_mixed_fields_refused():
    with pytest.raises(ValueError):
        W + ExactScalar(0, 1, 3)


@pytest.mark.parametrize(
    "token,expected",
    [
        ("3", ExactScalar(3)),
        ("-5/2", ExactScalar(Fraction(-5, 2))),
        ("w", W),
        ("-w", -W),
        ("1-w", 1 - W),
        ("-1+w", W - 1),
        ("3/2w", ExactScalar(0, Fraction(3, 2), 2)),
        ("1/2+3w", ExactScalar(Fraction(1, 2), 3, 2)),
    ],
)
def test_parse_scalar_tokens(token, expected):
    assert parse_scalar(token, 2) == expected


def test_str_reads_back():
    for value in (1 + W, -W, ExactScalar(Fraction(-3, 2), Fraction(1, 2), 2), ExactScalar(4)):
        assert parse_scalar(str(value), 2) == value


@pytest.mark.parametrize("token", ["", "abc", "1w2", "w+1", "--1", "1/0"])
def test_malformed_scalars(token):
    with pytest.raises(MalformedScalar):
        parse_scalar(token, 2)


def test_w_in_rational_file():
    with pytest.raises(MixedField):
        parse_scalar("w", 0)


def test_inverse_goes_through_the_conjugate():
    x = 2 + W
    assert x.conjugate() == 2 - W
    assert x.inverse() == (2 - W) / 2
    assert x * x.inverse() == ONE


def test_equality_sees_the_field():
    root2, root3 = ExactScalar(1, 1, 2), ExactScalar(1, 1, 3)
    assert root2 != root3
    assert len({root2, root3}) == 2
    assert ExactScalar(3) == ExactScalar(3, 0, 2)
