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
import logging
from logging.handlers import RotatingFileHandler
from typing import Any, Dict, Optional

from utils.helpers import utc_timestamp

BULKY_FIELDS = ("matrix", "rows", "table", "generators")


class ActivityLogger:
    def __init__(self, log_file: Optional[str] = "aomoto_runs.log", max_bytes: int = 10 * 1024 * 1024) -> None:
        self.log_file = log_file
        self.logger = logging.getLogger("aomoto_activity")
        self.logger.setLevel(logging.INFO)
        self.logger.propagate = False
        for old in list(self.logger.handlers):
            old.close()
        self.logger.handlers.clear()

        if log_file:
            handler: logging.Handler = RotatingFileHandler(log_file, maxBytes=max_bytes, backupCount=3, encoding="utf-8")
        else:
            handler = logging.NullHandler()
        handler.setFormatter(logging.Formatter("%(message)s"))
        self.logger.addHandler(handler)

        self.compact_mode = False

    def set_compact_mode(self, enabled: bool) -> None:
        self.compact_mode = bool(enabled)

    def _compact(self, payload: Dict[str, Any]) -> Dict[str, Any]:
        out: Dict[str, Any] = {}
        for key, value in payload.items():
            if key in BULKY_FIELDS:
                out[key] = "[OMITTED]"
            elif isinstance(value, dict):
                out[key] = self._compact(value)
            else:
                out[key] = value
        return out

    def log_event(self, payload: Dict[str, Any]) -> None:
        if self.compact_mode:
            payload = self._compact(payload)
        event = {"timestamp": utc_timestamp(), **payload}
        self.logger.info(json.dumps(event, ensure_ascii=False, sort_keys=True))

    def close(self) -> None:
        for handler in list(self.logger.handlers):
            handler.close()
            self.logger.removeHandler(handler)
