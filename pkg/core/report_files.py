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

import os
from dataclasses import dataclass
from typing import Dict, Optional

from core.errors import AomotoError

ALLOWED_EXTENSIONS = {
    ".json",
    ".tsv",
    ".svg",
    ".txt",
}


@dataclass
class PathCheck:
    allowed: bool
    reason: str
    absolute_path: str


class ReportWriter:
    """Writes report artifacts below one output directory."""

    def __init__(self, base_dir: Optional[str] = None) -> None:
        self.base_dir = os.path.abspath(base_dir or os.getcwd())

    def _resolve_under_base(self, relative_path: str) -> PathCheck:
        rel = relative_path.strip().replace("/", os.sep)
        if not rel:
            return PathCheck(False, "Empty path", "")
        if os.path.isabs(rel):
            return PathCheck(False, "Absolute paths are not allowed", "")
        if ".." in os.path.normpath(rel).split(os.sep):
            return PathCheck(False, "Path traversal is not allowed", "")
        return PathCheck(True, "OK", os.path.join(self.base_dir, rel))

    def write_text_file(self, relative_path: str, content: str, overwrite: bool = True) -> str:
        check = self._resolve_under_base(relative_path)
        if not check.allowed:
            raise AomotoError(check.reason)

        _, ext = os.path.splitext(check.absolute_path)
        if ext.lower() not in ALLOWED_EXTENSIONS:
            raise AomotoError(f"File extension not allowed: {ext or '(none)'}")

        os.makedirs(os.path.dirname(check.absolute_path), exist_ok=True)
        if os.path.exists(check.absolute_path) and not overwrite:
            raise AomotoError(f"File exists: {check.absolute_path}")

        with open(check.absolute_path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(content)
        return check.absolute_path

    def write_many(self, files: Dict[str, str]) -> Dict[str, str]:
        return {name: self.write_text_file(name, content) for name, content in sorted(files.items())}


def write_output(path: str, content: str) -> str:
    absolute = os.path.abspath(path)
    return ReportWriter(os.path.dirname(absolute)).write_text_file(os.path.basename(absolute), content)
