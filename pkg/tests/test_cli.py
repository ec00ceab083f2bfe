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
import os

import pytest
from click.testing import CliRunner

from main import cli, main


def _run(*args):
    result = CliRunner().invoke(cli, ["--no-log", "--quiet", *args])
    return result, (json.loads(result.output) if result.output.strip().startswith("{") else None)


def test_h1_by_resonant_bands(corpus_dir):
    result, report = _run("h1", "--method", "rb", "--mod", "2", "--eta", "0,1,1,0,0,1", os.path.join(corpus_dir, "fig3.arr"))
    assert result.exit_code == 0
    assert report["results"]["h1"] == "F2^2"
    assert report["results"]["status"] == "Isomorphic"
    assert report["command"] == "h1"
    assert len(report["digest"]) == 64


def test_report_echoes_the_command_line(corpus_dir):
    path = os.path.join(corpus_dir, "fig3.arr")
    _, report = _run("h1", "--method", "rb", "--mod", "2", "--eta", "0,1,1,0,0,1", path)
    argv = report["argv"]
    assert "--no-log" in argv and "--quiet" in argv
    tail = argv[argv.index("h1") + 1:]
    assert path in tail
    for option, value in (("--method", "rb"), ("--mod", "2"), ("--eta", "0,1,1,0,0,1")):
        assert tail[tail.index(option) + 1] == value


@pytest.mark.parametrize("method", ["direct", "chambers", "rb"])
def test_h1_methods_agree(corpus_dir, method):
    path = os.path.join(corpus_dir, "fig3.arr")
    _, report = _run("h1", "--method", method, "--eta", "H2:1,H3:1,H6:1", path)
    assert report["results"]["h1"] == "F2^2"


def test_a16_by_bands(corpus_dir):
    eta = ",".join(str(1 if i % 2 else 6) for i in range(2, 17))
    result, report = _run("h1", "--method", "rb", "--mod", "8", "--decone", "1", "--eta", eta,
                          os.path.join(corpus_dir, "a16-1.arr"))
    assert result.exit_code == 0
    assert report["results"]["h1"] == "Z/8"


def test_non_unit_alpha_exits_1(corpus_dir):
    result, _ = _run("h1", "--method", "rb", os.path.join(corpus_dir, "fig2.arr"))
    assert result.exit_code == 1


def test_nets_k4_quad(corpus_dir):
    result, report = _run("nets", "--k", "4", os.path.join(corpus_dir, "quad.arr"))
    assert result.exit_code == 0
    assert report["results"]["nets"] == []


def test_nets_k3_quad(corpus_dir):
    _, report = _run("nets", os.path.join(corpus_dir, "quad.arr"))
    assert report["results"]["nets"] == [{"classes": [[1, 4], [2, 3], [5, 6]], "base_locus": ["{1,2,5}", "{1,3,6}", "{2,4,6}", "{3,4,5}"]}]
    assert report["results"]["from_cocycles"] == report["results"]["nets"]


def test_chambers_fig2(corpus_dir):
    _, report = _run("chambers", os.path.join(corpus_dir, "fig2.arr"))
    assert report["results"]["chamber_count"] == 16
    assert report["results"]["betti"] == [1, 6, 9]
    assert [c["label"] for c in report["results"]["classified"]["ch2"]][:2] == ["D1", "D2"]


def test_chamber_complex_tsv(corpus_dir, tmp_path):
    result, report = _run("chamber-complex", "--tsv", str(tmp_path), os.path.join(corpus_dir, "fig2.arr"))
    assert result.exit_code == 0
    assert (tmp_path / "degree_table.tsv").read_text().splitlines()[1].split("\t") == ["C1", "0", "-1", "0", "0", "1", "0", "1", "1", "0"]
    assert report["results"]["cochain_complex"] is True


def test_nonsep_pencil(corpus_dir):
    result, report = _run("nonsep", "--subset", "H1,H2", os.path.join(corpus_dir, "pencil4.arr"))
    assert result.exit_code == 0
    assert report["results"]["report"]["counts"]["iv"] == 1
    assert report["results"]["report"]["violations"] == 0


def test_nonsep_needs_a_cocycle(corpus_dir):
    result, _ = _run("nonsep", "--subset", "H1", os.path.join(corpus_dir, "pencil3.arr"))
    assert result.exit_code == 1


def test_refute_quad(corpus_dir):
    result, report = _run("refute-4net", "--classes", "H1,H4|H2,H3|H5|H6", os.path.join(corpus_dir, "quad.arr"))
    assert result.exit_code == 0
    assert report["results"]["certificate"]["kind"] == "multinet"


def test_cocycles_fig3(corpus_dir):
    _, report = _run("cocycles", os.path.join(corpus_dir, "fig3.arr"))
    assert report["results"]["subsets"] == [[], [0, 1, 2, 3, 4, 5, 6]]


def test_svg(corpus_dir, tmp_path):
    out = tmp_path / "fig2.svg"
    result, _ = _run("svg", os.path.join(corpus_dir, "fig2.arr"), str(out))
    assert result.exit_code == 0
    assert out.read_text().startswith("<svg")


def test_missing_file_exits_1(tmp_path):
    result, _ = _run("flag", str(tmp_path / "nothing.arr"))
    assert result.exit_code == 1


def test_bad_flag_exits_1(tmp_path):
    path = tmp_path / "bad.arr"
    path.write_text("line H1 1 0 0\nline H2 0 1 0\nflag 0 5 1 0\n")
    result, _ = _run("flag", str(path))
    assert result.exit_code == 1


def test_corpus_command(tmp_path, corpus_dir):
    for name in ("tri3.arr", "quad.arr"):
        (tmp_path / name).write_text(open(os.path.join(corpus_dir, name)).read())
    (tmp_path / "broken.arr").write_text("line H1 0 0 1\n")
    result, report = _run("corpus", "--jobs", "2", str(tmp_path))
    assert result.exit_code == 1
    statuses = {f["path"]: f["status"] for f in report["results"]["files"]}
    assert statuses == {"broken.arr": "failed", "quad.arr": "ok", "tri3.arr": "ok"}


def test_main_returns_exit_codes(corpus_dir, tmp_path):
    log = tmp_path / "runs.log"
    assert main(["--quiet", "--log-file", str(log), "flag", os.path.join(corpus_dir, "tri3.arr")]) == 0
    assert main(["--quiet", "--log-file", str(log), "h1", "--method", "rb", os.path.join(corpus_dir, "fig2.arr")]) == 1
    assert main(["--quiet", "--no-log", "h1", "--method", "nope", "x.arr"]) == 1
    events = [json.loads(line) for line in log.read_text().splitlines()]
    assert [e["exit_code"] for e in events] == [0, 1]
    assert events[1]["status"] == "failed"
