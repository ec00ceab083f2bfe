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
from typing import Tuple

from parsing.grammar import BLOCKED_CHARACTERS, FIELD_NAMES, NAME_PATTERN, RECORD_ARITY, RECORD_KEYWORDS


@dataclass
class RecordCheck:
    allowed: bool
    reason: str
    keyword: str
    fields: Tuple[str, ...]


class RecordValidator:
    """First pass over one arrangement-file line: shape only, no arithmetic."""

    def __init__(self) -> None:
        self.block_tokens = list(BLOCKED_CHARACTERS)

    def _normalize(self, raw: str) -> str:
        text = raw.split("#", 1)[0]
        return " ".join(text.strip().split())

    def is_blank(self, raw: str) -> bool:
        return not self._normalize(raw)

    def validate(self, raw: str) -> RecordCheck:
        normalized = self._normalize(raw)
        if not normalized:
            return RecordCheck(False, "Empty record", "", ())

        for token in self.block_tokens:
            if token in normalized:
                return RecordCheck(False, f"Unexpected character: {token!r}", "", ())

        keyword, *fields = normalized.split(" ")
        keyword = keyword.lower()
        if keyword not in RECORD_KEYWORDS:
            return RecordCheck(False, f"Unknown record type: {keyword}", keyword, tuple(fields))

        low, high = RECORD_ARITY[keyword]
        if not low <= len(fields) <= high:
            expected = str(low) if low == high else f"{low}-{high}"
            return RecordCheck(False, f"{keyword} takes {expected} fields, got {len(fields)}", keyword, tuple(fields))

        if keyword == "field" and fields[0].lower() not in FIELD_NAMES:
            return RecordCheck(False, f"Unknown field: {fields[0]}", keyword, tuple(fields))

        if keyword in ("line", "label") and not NAME_PATTERN.match(fields[0]):
            return RecordCheck(False, f"Bad name: {fields[0]}", keyword, tuple(fields))

        return RecordCheck(True, "Record validated", keyword, tuple(fields))
