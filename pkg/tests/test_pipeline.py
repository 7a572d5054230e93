"""
Pipeline and command-line tests.
Runs compute, invariance, dump-matrix and verify end to end, and checks
that each failure class maps to its exit code.
"""

import json
from pathlib import Path
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from config import settings
from core.pipeline import (
    load_input,
    matrix_for,
    parse_input_spec,
    run_compute,
    run_invariance,
)
from core.schemas import RunConfig
from core.verification import (
    VerifyOptions,
    basis_for,
    check_decoration_change,
    check_euler,
    check_mirror,
    check_spectral,
    check_transverse,
    to_report,
)
from cube.decoration import Decoration
from diagram.braid import parse_braid
from diagram.models import DiagramError
from differential.checks import CheckResult
from homology.ranks import HomologyError
from loaders.loader import entry_diagram
from scripts.cli import (
    EXIT_DIFFERENTIAL,
    EXIT_INPUT,
    EXIT_OK,
    EXIT_UNEXPECTED,
    EXIT_VERIFY,
    main,
)
from tests.samples import HOPF_NEGATIVE_PD, TREFOIL_RIGHT_PD


class TestRunConfig:
    def test_needs_an_input(self):
        """A run needs one input."""
        with pytest.raises(ValidationError):
            RunConfig()

    def test_rejects_two_inputs(self):
        """Only one input may be given."""
        with pytest.raises(ValidationError):
            RunConfig(pd=TREFOIL_RIGHT_PD, braid="2: 1 1 1")

    def test_rejects_unknown_theory(self):
        """Unknown theory names are rejected."""
        with pytest.raises(ValidationError):
            RunConfig(braid="2: 1", theory="odd")


def test_load_corpus_input_with_basepoint(corpus_loader):
    """A corpus input keeps its name and an explicit basepoint."""
    loaded = load_input(RunConfig(corpus="trefoil-right-pd", basepoint=3), corpus_loader)
    assert loaded.name == "trefoil-right-pd"
    assert loaded.diagram.effective_basepoint == 3


def test_parse_input_spec(corpus_loader):
    """Input specs need a known prefix."""
    assert parse_input_spec("braid:2: 1 1", corpus_loader).diagram.n == 2
    assert parse_input_spec("pd:", corpus_loader).diagram.n == 0
    with pytest.raises(DiagramError):
        parse_input_spec("trefoil", corpus_loader)
    with pytest.raises(DiagramError):
        parse_input_spec("dt:4 6 2", corpus_loader)


def test_run_compute_unknot():
    """The unknot run reports ranks, pages and a matching Jones polynomial."""
    report = run_compute(RunConfig(pd="", unknot=True, pages=True, jones=True))
    assert report.ranks["delta"] == {"-1": 1, "1": 1}
    assert report.total_rank == 2
    assert report.jones == report.euler_characteristic == "1*q^1 + 1*q^-1"
    assert len(report.pages) == 1


def test_run_compute_transverse():
    """The transverse element of a positive braid is closed and survives."""
    report = run_compute(RunConfig(braid="2: 1 1 1", transverse=True))
    assert report.transverse.resolution == "000"
    assert report.transverse.h == 0
    assert report.transverse.closed
    assert report.transverse.survives


def test_transverse_needs_braid():
    """A PD input has no transverse element."""
    with pytest.raises(DiagramError):
        run_compute(RunConfig(pd=TREFOIL_RIGHT_PD, transverse=True))


def test_reduced_is_half_of_unreduced():
    """Reduced homology has half the total rank."""
    full = run_compute(RunConfig(braid="2: 1 1 1", theory="szabo"))
    reduced = run_compute(RunConfig(braid="2: 1 1 1", theory="reduced"))
    assert 2 * reduced.total_rank == full.total_rank


@pytest.mark.parametrize(
    "specs",
    [
        ["corpus:trefoil-right-pd", "corpus:trefoil-right-braid"],
        ["corpus:hopf-negative-pd", "corpus:hopf-negative-braid"],
        [f"pd:{HOPF_NEGATIVE_PD}", "braid:2: -1 -1"],
    ],
)
def test_invariance_across_diagrams(specs, corpus_loader):
    """Diagrams of one link give equal ranks and page tables."""
    report = run_invariance(specs, decorations=1, seed=3, loader=corpus_loader)
    assert report.equal, report.mismatches
    assert report.page_tables_equal
    assert len(report.inputs) == 2 * len(specs)


def test_invariance_detects_different_links(corpus_loader):
    """Different links are reported as mismatches."""
    report = run_invariance(
        ["corpus:trefoil-right-braid", "corpus:unknot"], decorations=0, loader=corpus_loader
    )
    assert not report.equal
    assert report.mismatches


class TestCli:
    @pytest.fixture(autouse=True)
    def _settings(self, isolated_settings):
        return isolated_settings

    def test_khovanov_table_json(self, capsys):
        """JSON output carries the bigraded table and generator count."""
        code = main(["compute", "--braid", "2: 1 1", "--theory", "khovanov", "--output", "json"])
        assert code == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["ranks"]["bigraded"] == {"0,0": 1, "2,0": 1, "4,2": 1, "6,2": 1}
        assert report["generators"] == 12

    def test_jones_matches_euler(self, capsys):
        """The Jones polynomial equals the graded Euler characteristic."""
        code = main(["compute", "--pd", TREFOIL_RIGHT_PD, "--jones", "--output", "json"])
        assert code == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["jones"] == report["euler_characteristic"]
        assert report["jones"] == "-1*q^9 + 1*q^5 + 1*q^3 + 1*q^1"

    def test_csv_output(self, capsys):
        """CSV output has a header and one row per rank."""
        assert main(["compute", "--pd", "", "--unknot", "--output", "csv"]) == EXIT_OK
        lines = capsys.readouterr().out.splitlines()
        assert lines[0] == "table,key,rank"
        assert "delta,-1,1" in lines

    def test_text_output_with_pages(self, capsys):
        """Text output lists the total rank and the pages."""
        assert main(["compute", "--corpus", "unknot", "--pages", "--output", "text"]) == EXIT_OK
        out = capsys.readouterr().out
        assert "total rank: 2" in out
        assert "E_1 [stable]" in out

    def test_writes_run_log(self, isolated_settings):
        """A run appends one record to runs.jsonl."""
        main(["compute", "--braid", "2: 1", "--output", "json"])
        log_file = Path(isolated_settings.LOG_DIR) / "runs.jsonl"
        lines = log_file.read_text(encoding="utf-8").splitlines()
        record = json.loads(lines[-1])
        assert record["event_type"] == "run"
        assert record["crossings"] == 1
        assert sum(record["faces"].values()) >= 1

    @pytest.mark.parametrize(
        "argv",
        [
            ["compute", "--pd", "X(1,2,3)"],
            ["compute", "--pd", ""],
            ["compute", "--pd", TREFOIL_RIGHT_PD, "--transverse"],
            ["compute", "--braid", "2: 1 3"],
            ["compute", "--corpus", "no-such-entry"],
            ["compute", "--braid", "2: 1 1", "--decoration", "101"],
            ["compute", "--pd", TREFOIL_RIGHT_PD, "--theory", "reduced", "--basepoint", "99"],
        ],
    )
    def test_input_errors(self, argv, capsys):
        """Malformed input exits with the input error code."""
        assert main(argv) == EXIT_INPUT
        assert "✗" in capsys.readouterr().err

    def test_crossing_cap(self, isolated_settings, monkeypatch):
        """The crossing cap holds unless large inputs are allowed."""
        monkeypatch.setattr(isolated_settings, "MAX_CROSSINGS", 2)
        assert main(["compute", "--braid", "2: 1 1 1"]) == EXIT_INPUT
        assert main(["compute", "--braid", "2: 1 1 1", "--allow-large"]) == EXIT_OK

    def test_bad_differential_exit_code(self):
        """A differential that does not square to zero has its own exit code."""
        with patch(
            "core.pipeline.homology_ranks", side_effect=HomologyError("d squared is nonzero")
        ):
            assert main(["compute", "--braid", "2: 1 1"]) == EXIT_DIFFERENTIAL

    def test_unexpected_exit_code(self):
        """Unexpected exceptions exit with code 1."""
        with patch("scripts.cli.run_compute", side_effect=RuntimeError("boom")):
            assert main(["compute", "--braid", "2: 1 1"]) == EXIT_UNEXPECTED

    def test_verify_failure_exit_code(self, capsys):
        """A failed check prints its name and exits with the verify code."""
        failing = [CheckResult("duality", samples=16, failures=["type 1: mismatch"])]
        with patch("scripts.cli.run_verification", return_value=failing):
            assert main(["verify", "--quick"]) == EXIT_VERIFY
        captured = capsys.readouterr()
        assert "✗ duality (16 samples)" in captured.err
        assert captured.out.strip() == "FAIL"

    def test_verify_json_report(self, capsys):
        """The verify JSON report lists every check."""
        passing = [CheckResult("d_squared", samples=4)]
        with patch("scripts.cli.run_verification", return_value=passing):
            assert main(["verify", "--output", "json"]) == EXIT_OK
        report = json.loads(capsys.readouterr().out)
        assert report["passed"]
        assert report["checks"][0]["name"] == "d_squared"

    def test_invariance_command(self, capsys):
        """The invariance command prints EQUAL for two unknot diagrams."""
        code = main(
            [
                "invariance",
                "corpus:unknot",
                "corpus:unknot-r2",
                "--decorations",
                "1",
            ]
        )
        assert code == EXIT_OK
        assert capsys.readouterr().out.strip().endswith("EQUAL")

    def test_dump_matrix(self, capsys):
        """The matrix dump starts with a header line."""
        assert main(["dump-matrix", "--braid", "2: 1 1", "--component", "dk", "--k", "1"]) == EXIT_OK
        out = capsys.readouterr().out.splitlines()
        assert out[0].startswith("# dk 12x12 nnz=")

    def test_dump_matrix_needs_k(self):
        """The dk component needs --k."""
        with pytest.raises(SystemExit) as exc:
            main(["dump-matrix", "--braid", "2: 1 1", "--component", "dk"])
        assert exc.value.code == EXIT_INPUT

    @pytest.mark.parametrize(
        "extra",
        [
            ["--component", "hm", "--m", "99"],
            ["--component", "dk", "--k", "50"],
            ["--component", "g", "--decoration-to", "011"],
            ["--component", "g", "--decoration-to", "000"],
            ["--component", "g", "--m", "0"],
        ],
    )
    def test_dump_matrix_bad_parameters_are_input_errors(self, extra, capsys):
        """Out-of-range crossings and bad decoration pairs exit as input errors."""
        argv = ["dump-matrix", "--braid", "2: 1 1 1", "--decoration", "000", *extra]
        assert main(argv) == EXIT_INPUT
        assert "✗" in capsys.readouterr().err

    def test_matrix_for_without_k(self, trefoil_braid):
        """Direct callers get an input error too."""
        with pytest.raises(DiagramError):
            matrix_for(trefoil_braid, Decoration((0, 0, 0)), "dk")


class TestVerificationChecks:
    NAMES = ["unknot-kink-positive", "hopf-negative-pd", "trefoil-right-braid"]

    @pytest.fixture
    def named(self, corpus_loader):
        return [(name, entry_diagram(corpus_loader.get(name))) for name in self.NAMES]

    def test_quick_options(self):
        """Quick mode keeps the seed and samples fewer decorations."""
        options = VerifyOptions.quick(seed=5)
        assert options.seed == 5
        assert options.decorations == 3
        assert not options.include_slow

    def test_mirror_ranks(self, named):
        """Mirrors have reflected delta ranks."""
        result = check_mirror(named, seed=1)
        assert result.passed, result.failures
        assert result.samples == 2 * len(named)

    def test_spectral_and_euler(self, named, corpus_loader):
        """E_2, E_infinity and the Euler characteristic agree with their references."""
        tabulated = {name: corpus_loader.get(name).jones for name in self.NAMES}
        results = [*check_spectral(named, seed=2), *check_euler(named, tabulated)]
        for result in results:
            assert result.passed, (result.name, result.failures)
        table = next(r for r in results if r.name == "jones_table")
        assert table.samples == len(self.NAMES)

    def test_wrong_tabulated_jones_fails(self, named):
        """A tabulated value that disagrees with the cube is reported."""
        bracket, table = check_euler(named, {"trefoil-right-braid": "q + q^3 + q^5 + q^9"})
        assert bracket.passed
        assert not table.passed
        assert table.failures[0].startswith("trefoil-right-braid")

    def test_shared_basis_per_diagram(self, trefoil_braid):
        """Checks on equal diagrams share one generator basis."""
        assert basis_for(trefoil_braid) is basis_for(parse_braid("2: 1 1 1"))

    def test_transverse_sample_size(self):
        """Transverse braids are sampled as configured."""
        assert VerifyOptions().transverse_braids == settings.VERIFY_TRANSVERSE_BRAIDS
        assert VerifyOptions.quick().transverse_braids == 10
        result = check_transverse(4, 5, seed=1)
        assert result.passed, result.failures
        assert result.samples == 4

    def test_decoration_change(self, named):
        """Decoration change checks pass on small diagrams."""
        for result in check_decoration_change(named, seed=4):
            assert result.passed, (result.name, result.failures)

    def test_report_keeps_order(self):
        """The report keeps check order and fails with any failure."""
        report = to_report([CheckResult("a", samples=1), CheckResult("b", failures=["x"])])
        assert [check.name for check in report.checks] == ["a", "b"]
        assert not report.passed
