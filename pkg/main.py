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

import functools
import json
import os
import sys
import time
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import click
from colorama import Fore, Style, init

from algebra.chamber_complex import ChamberComplex
from algebra.cocycles import diagonal_cocycles, enumerate_f2_cocycles
from algebra.orlik_solomon import OneForm, Subarrangement, h1_coned, h1_direct
from algebra.resonant_bands import INJECTIVE_ONLY, BandComplex
from core.arrangement import Arrangement, betti_numbers
from core.chambers import chambers
from core.errors import AomotoError, TheoremViolation
from core.flag import Flag, choose_flag
from core.render import render_svg
from core.report_files import ReportWriter, write_output
from core.runner import DEFAULT_TIMEOUT_SECONDS, CorpusRunner, affine_chart, corpus_files
from linalg.modular import check_modulus
from logger.activity_logger import ActivityLogger
from nets.multinet import NetPartition, extract_3nets, search_nets
from nets.nonsep import non_separation_check, refute_4net
from parsing.arrangement_file import ArrangementDocument, parse_classes, parse_eta, parse_subset, read_document
from utils.helpers import clean_single_line, elapsed_ms, input_digest, safe_truncate

PROGRAM = "aomoto"
DEFAULT_LOG_FILE = "aomoto_runs.log"
CORPUS_ENV = "AOMOTO_CORPUS"
BUNDLED_CORPUS = os.path.join(os.path.dirname(os.path.abspath(__file__)), "corpus")

METHODS = ("direct", "chambers", "rb")


class Session:
    def __init__(self, logger: ActivityLogger, quiet: bool) -> None:
        self.logger = logger
        self.quiet = quiet

    def status(self, colour: str, text: str) -> None:
        if not self.quiet:
            click.echo(colour + text + Style.RESET_ALL, err=True)


class Loaded:
    """An input file, its digest and the affine chart commands work on."""

    def __init__(self, path: str, decone: Optional[int] = None) -> None:
        self.path = path
        self.document, data = read_document(path)
        self.digest = input_digest(data)
        self.decone = decone
        self.chart = affine_chart(self.document, decone)

    @property
    def own_chart(self) -> bool:
        return self.decone is None and not self.document.projective

    def flag(self) -> Flag:
        return choose_flag(self.chart, self.document.flag_hint if self.own_chart else None)

    def labels(self) -> Dict:
        return self.document.labels if self.own_chart else {}

    def chart_names(self) -> Dict[str, int]:
        return {line.name: line.id for line in self.chart.lines}

    def eta(self, literal: Optional[str], modulus: int) -> OneForm:
        ids = self.chart.line_ids
        if not literal:
            return OneForm.diagonal(ids, modulus)
        return OneForm.of(parse_eta(literal, ids, self.chart_names()), modulus, ids)


def _words(ctx: click.Context) -> List[str]:
    words: List[str] = []
    for param in ctx.command.params:
        value = ctx.params.get(param.name)
        if value is None or value is False:
            continue
        if isinstance(param, click.Option):
            words.append(param.opts[0])
            if param.is_flag:
                continue
        words.append(str(value))
    return words


def command_line(ctx: click.Context) -> List[str]:
    """The invocation rebuilt from parsed parameters, defaults included."""
    root = ctx.find_root()
    words = [root.info_name or PROGRAM, *_words(root)]
    if ctx is not root:
        words += [ctx.info_name or "", *_words(ctx)]
    return words


def _report(
    command: str, argv: List[str], loaded: Optional[Loaded], results: Dict[str, Any], started: float
) -> Dict[str, Any]:
    report: Dict[str, Any] = {
        "command": command,
        "argv": argv,
        "results": results,
        "timing_ms": elapsed_ms(started),
    }
    if loaded is not None:
        report["input"] = loaded.path
        report["digest"] = loaded.digest
    return report


def reported(command: str) -> Callable:
    """Runs a command body, prints its JSON report and maps errors to exit codes."""

    def decorate(body: Callable) -> Callable:
        @functools.wraps(body)
        @click.pass_context
        def wrapper(ctx: click.Context, *args: Any, **kwargs: Any) -> None:
            session: Session = ctx.obj
            started = time.perf_counter()
            path = kwargs.get("path") or kwargs.get("directory") or ""
            code, status, message, digest = 0, "success", "", ""
            try:
                loaded, results, code = body(session, *args, **kwargs)
                digest = loaded.digest if loaded is not None else ""
                click.echo(json.dumps(_report(command, command_line(ctx), loaded, results, started), indent=2, sort_keys=True))
                status = {0: "success", 1: "failed", 2: "violation"}.get(code, "failed")
                if code == 2:
                    session.status(Fore.RED, "Theorem violation found.")
                elif code == 0:
                    session.status(Fore.GREEN, f"{command}: done.")
            except TheoremViolation as exc:
                code, status, message = 2, "violation", str(exc)
                session.status(Fore.RED, f"Theorem violation: {clean_single_line(message)}")
            except AomotoError as exc:
                code, status, message = 1, "failed", str(exc)
                session.status(Fore.RED, f"Error: {clean_single_line(message)}")
            session.logger.log_event(
                {
                    "command": command,
                    "input": path,
                    "digest": digest,
                    "exit_code": code,
                    "status": status,
                    "message": safe_truncate(message, 500),
                    "timing_ms": elapsed_ms(started),
                }
            )
            ctx.exit(code)

        return wrapper

    return decorate


def decone_option(body: Callable) -> Callable:
    return click.option("--decone", type=int, default=None, help="Decone the projective view by this line id first.")(body)


def modulus_option(body: Callable) -> Callable:
    return click.option("--mod", "modulus", type=int, default=2, show_default=True, help="Coefficient ring Z/m.")(body)


def eta_option(body: Callable) -> Callable:
    return click.option("--eta", default=None, help="Coefficients `0,1,1` in line order or `H2:1,H3:1`; all ones by default.")(body)


@click.group(name=PROGRAM)
@click.option("--log-file", default=DEFAULT_LOG_FILE, show_default=True, help="JSON-lines activity log.")
@click.option("--no-log", is_flag=True, help="Do not write the activity log.")
@click.option("--quiet", is_flag=True, help="No status lines on stderr.")
@click.pass_context
def cli(ctx: click.Context, log_file: str, no_log: bool, quiet: bool) -> None:
    """Aomoto complexes of real line arrangements over Z/m."""
    logger = ActivityLogger(None if no_log else log_file)
    ctx.obj = Session(logger, quiet)
    ctx.call_on_close(logger.close)


@cli.command("chambers")
@click.argument("path", type=click.Path(dir_okay=False))
@decone_option
@reported("chambers")
def chambers_command(session: Session, path: str, decone: Optional[int]) -> Tuple[Loaded, Dict, int]:
    loaded = Loaded(path, decone)
    chart = loaded.chart
    found = chambers(chart)
    results: Dict[str, Any] = {
        "lines": [line.name for line in chart.lines],
        "points": [p.to_json() for p in chart.points()],
        "betti": list(betti_numbers(chart)),
        "chamber_count": len(found),
        "chambers": [c.to_json() for c in found],
    }
    complex_ = ChamberComplex(chart, loaded.flag(), loaded.labels())
    results["classified"] = complex_.classification.to_json()
    return loaded, results, 0


@cli.command("flag")
@click.argument("path", type=click.Path(dir_okay=False))
@decone_option
@reported("flag")
def flag_command(session: Session, path: str, decone: Optional[int]) -> Tuple[Loaded, Dict, int]:
    loaded = Loaded(path, decone)
    flag = loaded.flag()
    results = {
        "flag": flag.to_json(),
        "numbering": [loaded.chart.line(i).name for i in flag.order],
        "from_file": loaded.own_chart and loaded.document.flag_hint is not None,
    }
    return loaded, results, 0


@cli.command("chamber-complex")
@click.argument("path", type=click.Path(dir_okay=False))
@eta_option
@modulus_option
@decone_option
@click.option("--tsv", "tsv_dir", default=None, type=click.Path(file_okay=False), help="Also dump the tables as TSV here.")
@reported("chamber-complex")
def chamber_complex_command(
    session: Session, path: str, eta: Optional[str], modulus: int, decone: Optional[int], tsv_dir: Optional[str]
) -> Tuple[Loaded, Dict, int]:
    check_modulus(modulus)
    loaded = Loaded(path, decone)
    complex_ = ChamberComplex(loaded.chart, loaded.flag(), loaded.labels())
    form = loaded.eta(eta, modulus)
    results = complex_.dump(form)
    if tsv_dir:
        written = ReportWriter(tsv_dir).write_many(complex_.to_tsv(form))
        results["tsv"] = sorted(written)
    return loaded, results, 0


@cli.command("rb")
@click.argument("path", type=click.Path(dir_okay=False))
@eta_option
@modulus_option
@decone_option
@reported("rb")
def rb_command(session: Session, path: str, eta: Optional[str], modulus: int, decone: Optional[int]) -> Tuple[Loaded, Dict, int]:
    check_modulus(modulus)
    loaded = Loaded(path, decone)
    bands = BandComplex(loaded.chart, loaded.flag(), loaded.labels())
    return loaded, bands.dump(loaded.eta(eta, modulus)), 0


@cli.command("h1")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--method", type=click.Choice(METHODS), default="direct", show_default=True)
@eta_option
@modulus_option
@decone_option
@reported("h1")
def h1_command(
    session: Session, path: str, method: str, eta: Optional[str], modulus: int, decone: Optional[int]
) -> Tuple[Loaded, Dict, int]:
    check_modulus(modulus)
    loaded = Loaded(path, decone)
    form = loaded.eta(eta, modulus)
    results: Dict[str, Any] = {"method": method, "eta": form.to_json()}
    if method == "direct":
        invariants, representatives = h1_direct(loaded.chart, form)
        results["representatives"] = [r.describe() for r in representatives]
    elif method == "chambers":
        invariants = ChamberComplex(loaded.chart, loaded.flag(), loaded.labels()).h1(form)
    else:
        invariants, status = BandComplex(loaded.chart, loaded.flag(), loaded.labels()).h1(form)
        results["status"] = status
        if status == INJECTIVE_ONLY:
            results["lower_bound"] = True
            session.status(Fore.YELLOW, "Some band is not resonant; this is a lower bound. Try `h1 --method chambers`.")
    results["invariants"] = invariants.to_json()
    results["h1"] = invariants.describe()
    return loaded, results, 0


@cli.command("cocycles")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--p", "prime", type=int, default=2, show_default=True)
@reported("cocycles")
def cocycles_command(session: Session, path: str, prime: int) -> Tuple[Loaded, Dict, int]:
    loaded = Loaded(path)
    projective = loaded.document.projective_view()
    generators, invariants = diagonal_cocycles(projective, prime)
    results: Dict[str, Any] = {
        "lines": list(projective.line_ids),
        "p": prime,
        "kernel": invariants.to_json(),
    }
    diagonal = OneForm.diagonal(projective.line_ids, prime)
    if not diagonal.boundary:
        coned, reps = h1_coned(projective, diagonal)
        results["h1_coned"] = coned.describe()
        results["h1_representatives"] = [r.describe() for r in reps]
    if prime == 2:
        results["subsets"] = [s.to_json() for s in enumerate_f2_cocycles(projective)]
    return loaded, results, 0


@cli.command("nets")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--k", "k", type=int, default=3, show_default=True)
@reported("nets")
def nets_command(session: Session, path: str, k: int) -> Tuple[Loaded, Dict, int]:
    loaded = Loaded(path)
    projective = loaded.document.projective_view()
    found = search_nets(projective, k)
    results: Dict[str, Any] = {"k": k, "nets": [n.to_json() for n in found]}
    if k == 3:
        try:
            results["from_cocycles"] = [n.to_json() for n in extract_3nets(projective)]
        except AomotoError as exc:
            results["from_cocycles"] = None
            results["extraction_skipped"] = str(exc)
    code = 2 if k == 4 and found and projective.is_essential() else 0
    return loaded, results, code


@cli.command("nonsep")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--subset", required=True, help="Lines of the subarrangement, e.g. `H0,H1,H3`.")
@reported("nonsep")
def nonsep_command(session: Session, path: str, subset: str) -> Tuple[Loaded, Dict, int]:
    loaded = Loaded(path)
    projective = loaded.document.projective_view()
    chosen = Subarrangement.of(parse_subset(subset, projective.line_ids, loaded.document.names()))
    report = non_separation_check(projective, chosen)
    return loaded, {"subset": chosen.to_json(), "report": report.to_json()}, 2 if report.violations else 0


@cli.command("refute-4net")
@click.argument("path", type=click.Path(dir_okay=False))
@click.option("--classes", required=True, help="Claimed classes, e.g. `H1,H2|H3,H4|H5,H6|H7,H8`.")
@reported("refute-4net")
def refute_command(session: Session, path: str, classes: str) -> Tuple[Loaded, Dict, int]:
    loaded = Loaded(path)
    projective = loaded.document.projective_view()
    partition = NetPartition.of(parse_classes(classes, projective.line_ids, loaded.document.names()))
    certificate = refute_4net(projective, partition)
    return loaded, {"certificate": certificate.to_json()}, 2 if certificate.violation else 0


@cli.command("corpus")
@click.argument("directory", required=False, type=click.Path(file_okay=False))
@click.option("--jobs", type=int, default=4, show_default=True)
@click.option("--timeout", "timeout", type=float, default=DEFAULT_TIMEOUT_SECONDS, show_default=True)
@reported("corpus")
def corpus_command(session: Session, directory: Optional[str], jobs: int, timeout: float) -> Tuple[None, Dict, int]:
    directory = directory or os.environ.get(CORPUS_ENV) or BUNDLED_CORPUS
    paths = corpus_files(directory)
    outcomes = CorpusRunner(timeout, jobs).run(paths)
    for outcome in outcomes:
        session.logger.log_event({"command": "corpus-file", **outcome.to_json()})
        colour = Fore.GREEN if outcome.status == "ok" else Fore.RED
        session.status(colour, f"{os.path.basename(outcome.path)}: {outcome.status}")
    statuses = {o.status for o in outcomes}
    code = 2 if "violation" in statuses else (1 if statuses - {"ok"} else 0)
    results = {
        "directory": directory,
        "files": [dict(o.to_json(), path=os.path.basename(o.path)) for o in outcomes],
    }
    return None, results, code


@cli.command("svg")
@click.argument("path", type=click.Path(dir_okay=False))
@click.argument("out", type=click.Path(dir_okay=False))
@decone_option
@reported("svg")
def svg_command(session: Session, path: str, out: str, decone: Optional[int]) -> Tuple[Loaded, Dict, int]:
    loaded = Loaded(path, decone)
    written = write_output(out, render_svg(loaded.chart, loaded.flag()))
    return loaded, {"svg": written}, 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    init()
    args: List[str] = list(sys.argv[1:] if argv is None else argv)
    try:
        rv = cli.main(args=args, prog_name=PROGRAM, standalone_mode=False)
    except click.ClickException as exc:
        exc.show()
        return 1
    except click.exceptions.Abort:
        click.echo(Fore.YELLOW + "Aborted." + Style.RESET_ALL, err=True)
        return 1
    return rv if isinstance(rv, int) else 0


if __name__ == "__main__":
    sys.exit(main())
