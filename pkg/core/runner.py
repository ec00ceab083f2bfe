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

import asyncio
import glob
import math
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence

from algebra.chamber_complex import ChamberComplex
from algebra.cocycles import enumerate_f2_cocycles
from algebra.orlik_solomon import OneForm, h1_direct
from algebra.resonant_bands import BandComplex
from core.arrangement import Arrangement, betti_numbers
from core.errors import AomotoError, PreconditionError, TheoremViolation
from core.flag import choose_flag
from nets.multinet import extract_3nets, search_nets
from nets.nonsep import non_separation_check
from parsing.arrangement_file import ArrangementDocument, read_document

CORPUS_SUFFIX = ".arr"
DEFAULT_TIMEOUT_SECONDS = 60


@dataclass
class RunResult:
    path: str
    return_code: int
    status: str
    message: str = ""
    summary: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "path": self.path,
            "return_code": self.return_code,
            "status": self.status,
            "message": self.message,
            "summary": self.summary,
        }


def affine_chart(document: ArrangementDocument, decone: Optional[int] = None) -> Arrangement:
    if decone is not None:
        return document.projective_view().decone(decone)
    if document.projective:
        return document.projective_view().decone(min(document.arrangement.line_ids))
    return document.arrangement


def check_document(document: ArrangementDocument) -> Dict[str, Any]:
    """Cross-checks every H^1 path and the net theorems on one arrangement."""
    projective = document.projective_view()
    chart = affine_chart(document)
    hint = None if document.projective else document.flag_hint
    flag = choose_flag(chart, hint)
    labels = {} if document.projective else document.labels
    complex_ = ChamberComplex(chart, flag, labels)
    bands = BandComplex(chart, flag, labels)

    counts = (1, len(complex_.ch1), len(complex_.ch2))
    if counts != betti_numbers(chart):
        raise TheoremViolation(f"chamber counts {counts} differ from {betti_numbers(chart)}")

    h1: Dict[str, str] = {}
    for modulus in (2, 3, 4):
        eta = OneForm.diagonal(chart.line_ids, modulus)
        if not complex_.is_cochain_complex(eta):
            raise TheoremViolation(f"nabla1 * nabla0 != 0 mod {modulus}")
        direct, _ = h1_direct(chart, eta)
        chambers = complex_.h1(eta)
        if direct.factors != chambers.factors:
            raise TheoremViolation(f"mod {modulus}: direct {direct.describe()} but chambers {chambers.describe()}")
        h1[str(modulus)] = direct.describe()
        if math.gcd(eta.boundary, modulus) == 1:
            _, status = bands.h1(eta)
            h1[str(modulus)] += f" ({status})"

    cocycles = enumerate_f2_cocycles(projective)
    separated = 0
    violations = 0
    for subset in cocycles:
        report = non_separation_check(projective, subset)
        separated += len(report.separated)
        violations += len(report.violations)
    if violations:
        raise TheoremViolation(f"{violations} separated quadruple points on an essential arrangement")

    four_nets = search_nets(projective, 4)
    if four_nets and projective.is_essential():
        raise TheoremViolation(f"found a 4-net on a real arrangement: {four_nets[0].to_json()}")
    three_nets = search_nets(projective, 3)
    try:
        extracted = extract_3nets(projective)
    except PreconditionError:
        extracted = None
    if extracted is not None and [n.classes for n in extracted] != [n.classes for n in three_nets]:
        raise TheoremViolation("net search and cocycle extraction disagree on 3-nets")

    return {
        "lines": len(projective),
        "chambers": list(counts),
        "bands": len(bands.bands),
        "h1_diagonal": h1,
        "f2_cocycles": len(cocycles),
        "separated_on_pencils": separated,
        "three_nets": len(three_nets),
        "four_nets": len(four_nets),
    }


def check_file(path: str) -> Dict[str, Any]:
    document, _ = read_document(path)
    return check_document(document)


def corpus_files(directory: str) -> List[str]:
    if not os.path.isdir(directory):
        raise AomotoError(f"corpus directory not found: {directory}")
    return sorted(glob.glob(os.path.join(directory, f"*{CORPUS_SUFFIX}")))


class CorpusRunner:
    def __init__(self, timeout_seconds: float = DEFAULT_TIMEOUT_SECONDS, jobs: int = 4) -> None:
        self.timeout_seconds = timeout_seconds
        self.jobs = max(1, jobs)

    async def _run_one(self, path: str, gate: asyncio.Semaphore) -> RunResult:
        async with gate:
            try:
                summary = await asyncio.wait_for(asyncio.to_thread(check_file, path), self.timeout_seconds)
                return RunResult(path, 0, "ok", summary=summary)
            except asyncio.TimeoutError:
                return RunResult(path, 124, "timeout", f"timed out after {self.timeout_seconds}s")
            except TheoremViolation as exc:
                return RunResult(path, 2, "violation", str(exc))
            except AomotoError as exc:
                return RunResult(path, 1, "failed", str(exc))
            except Exception as exc:
                return RunResult(path, 1, "error", f"{type(exc).__name__}: {exc}")

    async def _run_all(self, paths: Sequence[str]) -> List[RunResult]:
        gate = asyncio.Semaphore(self.jobs)
        return list(await asyncio.gather(*(self._run_one(p, gate) for p in paths)))

    def run(self, paths: Sequence[str]) -> List[RunResult]:
        if not paths:
            return []
        return asyncio.run(self._run_all(paths))
