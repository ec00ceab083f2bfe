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

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

from sympy.ntheory.factor_ import core as squarefree_part

from core.arrangement import Arrangement, Line, Point
from core.errors import AomotoError, DuplicateLine, MalformedScalar, MixedField, ParseError, PreconditionError
from core.flag import Flag
from core.projective import ProjectiveArrangement
from core.scalar import ExactScalar
from parsing.grammar import MAX_RADICAND, SCALAR_PATTERN, TRAILING_ID
from parsing.validator import RecordValidator


@dataclass
class ArrangementDocument:
    arrangement: Arrangement
    flag_hint: Optional[Flag] = None
    labels: Dict[str, Point] = field(default_factory=dict)
    projective: bool = False

    @property
    def field_d(self) -> int:
        return self.arrangement.field_d

    def projective_view(self) -> ProjectiveArrangement:
        # a `projective` file lists every member; otherwise the chart's H0 joins
        return ProjectiveArrangement(self.arrangement, with_infinity=not self.projective)

    def names(self) -> Dict[str, int]:
        out = {line.name: line.id for line in self.arrangement.lines}
        if not self.projective:
            out.setdefault(f"H{self.arrangement.infinity_id}", self.arrangement.infinity_id)
        return out


def parse_scalar(token: str, field_d: int = 0, line_number: Optional[int] = None) -> ExactScalar:
    match = SCALAR_PATTERN.match(token)
    if not token or match is None:
        raise MalformedScalar(f"cannot read scalar {token!r}", line_number)
    rational, surd = match.group("rational"), match.group("surd") or match.group("lone")
    try:
        p = Fraction(rational) if rational else Fraction(0)
        q = Fraction(0)
        if surd:
            body = surd[:-1]
            if body in ("", "+"):
                q = Fraction(1)
            elif body == "-":
                q = Fraction(-1)
            else:
                q = Fraction(body)
    except (ValueError, ZeroDivisionError):
        raise MalformedScalar(f"cannot read scalar {token!r}", line_number)
    if q and not field_d:
        raise MixedField(f"{token!r} uses w in a rational file", line_number)
    return ExactScalar(p, q, field_d)


def _read_field(fields: Sequence[str], line_number: int) -> int:
    if fields[0].lower() == "rational":
        if len(fields) != 1:
            raise ParseError("field rational takes no radicand", line_number)
        return 0
    if len(fields) != 2 or not fields[1].isdigit():
        raise ParseError("field quadratic needs an integer radicand", line_number)
    d = int(fields[1])
    if not 2 <= d <= MAX_RADICAND or squarefree_part(d) != d:
        raise ParseError(f"radicand {d} must be squarefree in [2, {MAX_RADICAND}]", line_number)
    return d


def line_id_from_name(name: str, position: int) -> int:
    match = TRAILING_ID.search(name)
    return int(match.group(1)) if match else position


def parse_document(text: str) -> ArrangementDocument:
    validator = RecordValidator()
    field_d: Optional[int] = None
    raw_lines: List[Tuple[int, Tuple[str, ...]]] = []
    raw_flag: Optional[Tuple[int, Tuple[str, ...]]] = None
    raw_labels: List[Tuple[int, Tuple[str, ...]]] = []
    projective = False

    for number, raw in enumerate(text.splitlines(), start=1):
        if validator.is_blank(raw):
            continue
        check = validator.validate(raw)
        if not check.allowed:
            raise ParseError(check.reason, number)
        if check.keyword == "field":
            d = _read_field(check.fields, number)
            if field_d is not None and field_d != d:
                raise MixedField("conflicting field declarations", number)
            if raw_lines or raw_flag or raw_labels:
                raise ParseError("field must come before any line, flag or label", number)
            field_d = d
        elif check.keyword == "line":
            raw_lines.append((number, check.fields))
        elif check.keyword == "flag":
            if raw_flag is not None:
                raise ParseError("more than one flag record", number)
            raw_flag = (number, check.fields)
        elif check.keyword == "label":
            raw_labels.append((number, check.fields))
        else:
            projective = True

    d = field_d or 0
    lines: List[Line] = []
    seen_names: Dict[str, int] = {}
    for position, (number, fields) in enumerate(raw_lines, start=1):
        name = fields[0]
        if name in seen_names:
            raise DuplicateLine(f"name {name} already used on line {seen_names[name]}", number)
        seen_names[name] = number
        a, b, c = (parse_scalar(tok, d, number) for tok in fields[1:])
        try:
            lines.append(Line.create(line_id_from_name(name, position), a, b, c, name))
        except ParseError as exc:
            raise type(exc)(str(exc), number)
    arrangement = Arrangement(lines, field_d=d)

    flag_hint = None
    if raw_flag is not None:
        number, fields = raw_flag
        flag_hint = Flag.from_numbers(*(parse_scalar(tok, d, number) for tok in fields))

    labels: Dict[str, Point] = {}
    for number, fields in raw_labels:
        if fields[0] in labels:
            raise ParseError(f"label {fields[0]} repeated", number)
        labels[fields[0]] = (parse_scalar(fields[1], d, number), parse_scalar(fields[2], d, number))

    return ArrangementDocument(arrangement, flag_hint, labels, projective)


def parse_arrangement(text: str) -> Arrangement:
    return parse_document(text).arrangement


# command-line literals


def _resolve(token: str, names: Mapping[str, int], known: Sequence[int]) -> int:
    token = token.strip()
    if token in names:
        return names[token]
    if token.lstrip("-").isdigit() and int(token) in known:
        return int(token)
    match = TRAILING_ID.search(token)
    if match and int(match.group(1)) in known:
        return int(match.group(1))
    raise PreconditionError(f"unknown line {token!r}")


def parse_eta(literal: str, line_ids: Sequence[int], names: Optional[Mapping[str, int]] = None) -> Dict[int, int]:
    """`0,1,1,0,0,1` in line order, or `H2:1,H3:1` by name."""
    names = names or {}
    parts = [p.strip() for p in literal.split(",") if p.strip()]
    try:
        if any(":" in p for p in parts):
            out = {i: 0 for i in line_ids}
            for part in parts:
                key, _, value = part.partition(":")
                out[_resolve(key, names, line_ids)] = int(value)
            return out
        values = [int(p) for p in parts]
    except ValueError:
        raise PreconditionError(f"cannot read coefficients {literal!r}")
    if len(values) != len(line_ids):
        raise PreconditionError(f"eta has {len(values)} coefficients, arrangement has {len(line_ids)} lines")
    return dict(zip(line_ids, values))


def parse_subset(literal: str, line_ids: Sequence[int], names: Optional[Mapping[str, int]] = None) -> Tuple[int, ...]:
    names = names or {}
    parts = [p for p in literal.split(",") if p.strip()]
    return tuple(sorted({_resolve(p, names, line_ids) for p in parts}))


def parse_classes(literal: str, line_ids: Sequence[int], names: Optional[Mapping[str, int]] = None) -> Tuple[Tuple[int, ...], ...]:
    groups = literal.split("|")
    if any(not g.strip() for g in groups):
        raise PreconditionError(f"empty class in {literal!r}")
    return tuple(parse_subset(g, line_ids, names) for g in groups)


def read_document(path: str) -> Tuple[ArrangementDocument, bytes]:
    try:
        with open(path, "rb") as handle:
            data = handle.read()
    except OSError as exc:
        raise AomotoError(f"cannot read {path}: {exc.strerror}")
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError:
        raise ParseError(f"{path} is not UTF-8 text")
    return parse_document(text), data
