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
from typing import List

RECORD_KEYWORDS: List[str] = [
    "field",
    "line",
    "flag",
    "label",
    "projective",
]

FIELD_NAMES: List[str] = [
    "rational",
    "quadratic",
]

# fields for which `w` is an exact square root the ordering can decide
MAX_RADICAND = 1000

RECORD_ARITY = {
    "field": (1, 2),
    "line": (4, 4),
    "flag": (4, 4),
    "label": (3, 3),
    "projective": (0, 0),
}

_NUMBER = r"\d+(?:\.\d+)?(?:/\d+)?"

SCALAR_PATTERN = re.compile(
    rf"^(?:(?P<rational>[+-]?{_NUMBER})(?P<surd>[+-](?:{_NUMBER})?w)?|(?P<lone>[+-]?(?:{_NUMBER})?w))$"
)

NAME_PATTERN = re.compile(r"^[A-Za-z_][A-Za-z0-9_']*$|^\d+$")

TRAILING_ID = re.compile(r"(\d+)$")

BLOCKED_CHARACTERS: List[str] = [
    "\x00",
    ";",
    "=",
    "{",
    "}",
]
