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

import pytest

from core.errors import AomotoError
from core.report_files import ReportWriter, write_output
from core.runner import CorpusRunner, affine_chart, check_document, check_file, corpus_files


def test_affine_chart_of_a_projective_file(quad):
    chart = affine_chart(quad)
    assert chart.infinity_id == 1
    assert sorted(chart.line_ids) == [2, 3, 4, 5, 6]


def test_affine_chart_keeps_an_affine_file(fig2):
    assert affine_chart(fig2) is fig2.arrangement
    assert affine_chart(fig2, decone=0).line_ids == fig2.arrangement.line_ids


def test_check_fig2(fig2):
    summary = check_document(fig2)
    assert summary["chambers"] == [1, 6, 9]
    assert summary["bands"] == 3
    assert summary["four_nets"] == 0


def test_check_quad(quad):
    summary = check_document(quad)
    assert summary["three_nets"] == 1
    assert summary["four_nets"] == 0


def test_check_pencil_counts_separations(pencil4):
    summary = check_document(pencil4)
    assert summary["separated_on_pencils"] > 0


def test_check_file(corpus_dir):
    assert check_file(os.path.join(corpus_dir, "tri3.arr"))["chambers"] == [1, 3, 3]


def test_corpus_files(corpus_dir, tmp_path):
    names = [os.path.basename(p) for p in corpus_files(corpus_dir)]
    assert names == sorted(names)
    assert "fig2.arr" in names
    with pytest.raises(AomotoError):
        corpus_files(str(tmp_path / "missing"))


def test_runner_statuses(tmp_path, corpus_dir):
    good = tmp_path / "par2.arr"
    good.write_text(open(os.path.join(corpus_dir, "par2.arr")).read())
    bad = tmp_path / "bad.arr"
    bad.write_text("field quadratic 4\n")
    outcomes = CorpusRunner(timeout_seconds=60, jobs=2).run([str(good), str(bad)])
    assert [(o.status, o.return_code) for o in outcomes] == [("ok", 0), ("failed", 1)]
    assert CorpusRunner().run([]) == []


def test_report_writer(tmp_path):
    writer = ReportWriter(str(tmp_path))
    written = writer.write_many({"a.tsv": "x\n", "sub/b.json": "{}"})
    assert sorted(written) == ["a.tsv", "sub/b.json"]
    assert (tmp_path / "sub" / "b.json").read_text() == "{}"


@pytest.mark.parametrize("name", ["../escape.tsv", "/abs.tsv", "", "table.exe"])
def test_report_writer_refuses(tmp_path, name):
    with pytest.raises(AomotoError):
        ReportWriter(str(tmp_path)).write_text_file(name, "x")


def test_report_writer_no_overwrite(tmp_path):
    writer = ReportWriter(str(tmp_path))
    writer.write_text_file("a.txt", "one")
    with pytest.raises(AomotoError):
        writer.write_text_file("a.txt", "two", overwrite=False)


def test_write_output(tmp_path):
    path = write_output(str(tmp_path / "pic.svg"), "<svg/>")
    assert open(path).read() == "<svg/>"
