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

import json

from logger.activity_logger import ActivityLogger
from utils.helpers import clean_single_line, input_digest, safe_truncate, utc_timestamp


def test_log_event_writes_json_lines(tmp_path):
    path = tmp_path / "runs.log"
    logger = ActivityLogger(str(path))
    logger.log_event({"command": "h1", "exit_code": 0})
    logger.log_event({"command": "rb", "exit_code": 1})
    logger.close()
    events = [json.loads(line) for line in path.read_text(encoding="utf-8").splitlines()]
    assert [e["command"] for e in events] == ["h1", "rb"]
    assert events[0]["timestamp"].endswith("Z")


def test_compact_mode_hides_matrices(tmp_path):
    path = tmp_path / "runs.log"
    logger = ActivityLogger(str(path))
    logger.set_compact_mode(True)
    logger.log_event({"command": "rb", "results": {"matrix": [[1, 0]], "h1": "F2"}})
    logger.close()
    event = json.loads(path.read_text(encoding="utf-8"))
    assert event["results"] == {"matrix": "[OMITTED]", "h1": "F2"}


def test_null_logger_writes_nothing(tmp_path):
    logger = ActivityLogger(None)
    logger.log_event({"command": "flag"})
    logger.close()
    assert list(tmp_path.iterdir()) == []


def test_helpers():
    assert clean_single_line("a\n  b\r\tc ") == "a b c"
    assert safe_truncate("abcdef", 3) == "abc\n...[truncated]"
    assert safe_truncate(None) == ""
    assert input_digest(b"") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855"
    assert len(utc_timestamp()) == 20
