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

from typing import Optional


class AomotoError(ValueError):
    pass


class ParseError(AomotoError):
    def __init__(self, message: str, line_number: Optional[int] = None) -> None:
        self.line_number = line_number
        if line_number is not None:
            message = f"line {line_number}: {message}"
        super().__init__(message)


class DuplicateLine(ParseError):
    pass


class ZeroNormal(ParseError):
    pass


class MalformedScalar(ParseError):
    pass


class MixedField(ParseError):
    pass


class InvalidFlag(AomotoError):
    def __init__(self, condition: str, detail: str = "") -> None:
        self.condition = condition
        self.detail = detail
        text = f"invalid flag ({condition})"
        if detail:
            text += f": {detail}"
        super().__init__(text)


class NotASubmodule(AomotoError):
    pass


class NonUnitAlpha(AomotoError):
    def __init__(self, alpha: int, modulus: int) -> None:
        self.alpha = alpha
        self.modulus = modulus
        super().__init__(f"alpha = {alpha} is not a unit mod {modulus}")


class PreconditionError(AomotoError):
    pass


class TheoremViolation(RuntimeError):
    pass
