"""
Tests for per-diagram reports, CSV loading, the bracket cache and the batch runner.
"""

import io
import json
import logging

import pytest

from aajones import aa
from aajones.batch import BatchRunner, analyze_diagram, analyze_record, check_jones, load_records
from aajones.cache import CACHE_FILE, BracketCache, open_cache
from aajones.config import Settings
from aajones.diagram import parse_pd, serialize
from aajones.errors import CacheError, ParseError, ValidationError
from aajones.kauffman import bracket
from aajones.schemas import BatchRecord, DiagramReport
from tests.conftest import FIXTURES_CSV


class TestAnalyzeDiagram:
    """Tests for the report behind every command."""

    def test_alternating(self, trefoil, settings):
        """An alternating diagram gets extreme coefficients and no AA block."""
        report = analyze_diagram(trefoil, settings, name="trefoil")
        assert report.classification == "Alternating"
        assert report.dasbach_lin.gamma0 == 1
        assert report.aa is None
        assert report.turaev_genus == 0
        assert report.bracket == "-A^(-5) - A^3 + A^7"

    def test_almost_alternating(self, aa_example, settings):
        """The AA block holds the four alphas and the verdicts."""
        report = analyze_diagram(aa_example, settings)
        assert report.classification == "AAStronglyReduced"
        assert [c.crossing for c in report.dealternators if c.strongly_reduced] == [0]
        assert report.aa.stats.v == 7 and report.aa.stats_bar.v == 5
        assert report.aa.sign_verdict == "Consistent"
        assert report.aa.nontriviality == "NontrivialJones"

    def test_single_dealternator_search(self, aa_example, settings, monkeypatch):
        """Classification and the dealternator list come from one search."""
        calls = []
        search = aa.find_dealternators

        def counting(d):
            calls.append(d)
            return search(d)

        monkeypatch.setattr(aa, "find_dealternators", counting)
        report = analyze_diagram(aa_example, settings)
        assert len(calls) == 1
        assert [c.crossing for c in report.dealternators] == [c.crossing for c in search(aa_example)]

    def test_without_aa(self, aa_example, settings):
        """include_aa=False stops after the Turaev genus."""
        report = analyze_diagram(aa_example, settings, include_aa=False)
        assert report.classification is None
        assert report.turaev_genus == 1

    def test_split_and_crossingless(self, trefoil, settings):
        """Split and crossingless diagrams get polynomials only."""
        split = analyze_diagram(parse_pd("loops=1 " + serialize(trefoil)), settings)
        assert split.jones is not None and split.classification is None
        unknot = analyze_diagram(parse_pd("loops=1"), settings)
        assert unknot.jones == "1"
        assert unknot.turaev_genus is None

    def test_check(self, trefoil, settings):
        """Expected values compare as polynomials, not strings."""
        report = analyze_diagram(trefoil, settings)
        assert check_jones(report, "t^(-1) + t^(-3) - t^(-4)") == "pass"
        assert check_jones(report, "t + t^3 - t^4") == "fail"

    def test_record_errors_inline(self, settings):
        """Input errors in a record become an error field."""
        report = analyze_record(BatchRecord(name="bad", pd="X[1,2,3,4]"), settings, check=False)
        assert report.error.type == "ValidationError"
        assert report.pd == "X[1,2,3,4]"
        capped = analyze_record(
            BatchRecord(name="big", pd=serialize(parse_pd("X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"))),
            Settings(cap=2, progress=False),
            check=False,
        )
        assert capped.error.exit_code == 3


class TestLoadRecords:
    """Tests for reading fixture tables."""

    def test_packaged_fixtures(self):
        """The packaged table has five named records with tags split on semicolons."""
        records = load_records(FIXTURES_CSV)
        assert [r.name for r in records] == ["unknot", "trefoil_std", "hopf", "AAExample", "15n41133"]
        assert records[1].tags == ["alternating", "knot"]
        assert all(r.expected_jones for r in records)

    def test_optional_columns(self, tmp_path):
        """expected_jones and tags may be absent."""
        path = tmp_path / "t.csv"
        path.write_text('name,pd\nk,"X[1,1,2,2]"\n', encoding="utf-8")
        (record,) = load_records(path)
        assert record.expected_jones is None
        assert record.tags == []

    def test_duplicates(self, tmp_path):
        """Record names must be unique."""
        path = tmp_path / "t.csv"
        path.write_text("name,pd\na,loops=1\na,loops=2\n", encoding="utf-8")
        with pytest.raises(ValidationError):
            load_records(path)

    def test_missing_file(self, tmp_path):
        """A missing table is a ParseError."""
        with pytest.raises(ParseError):
            load_records(tmp_path / "absent.csv")

    def test_not_utf8(self, tmp_path):
        """Bytes that are not UTF-8 are rejected."""
        path = tmp_path / "t.csv"
        path.write_bytes(b"name,pd\n\xff\xfe,loops=1\n")
        with pytest.raises(ParseError):
            load_records(path)


class TestBracketCache:
    """Tests for the append-only cache file."""

    def test_put_and_get(self, tmp_path, trefoil):
        """A stored bracket comes back equal, also through a fresh instance."""
        cache = BracketCache(tmp_path)
        key = serialize(trefoil)
        assert cache.get(key) is None
        cache.put(key, bracket(trefoil))
        cache.put(key, bracket(trefoil))
        assert len(cache) == 1
        assert BracketCache(tmp_path).get(key) == bracket(trefoil)
        assert len((tmp_path / CACHE_FILE).read_text().splitlines()) == 1

    def test_other_version_ignored(self, tmp_path, trefoil):
        """Entries written by another version are not returned."""
        BracketCache(tmp_path, version="0.0.1").put(serialize(trefoil), bracket(trefoil))
        assert BracketCache(tmp_path).get(serialize(trefoil)) is None

    def test_malformed_lines_skipped(self, tmp_path, trefoil, caplog):
        """Broken lines are skipped with a warning."""
        good = json.dumps({"pd": "k", "version": "0.1.0", "bracket": "-A^3"})
        (tmp_path / CACHE_FILE).write_text("{not json\n" + '{"pd": "x"}\n' + good + "\n")
        with caplog.at_level(logging.WARNING, logger="aajones.cache"):
            cache = BracketCache(tmp_path, version="0.1.0")
            assert len(cache) == 1
        assert "Skipping malformed cache line 1" in caplog.text
        assert "line 2" in caplog.text

    def test_directory_is_a_file(self, tmp_path):
        """A cache path that is a regular file cannot be used."""
        path = tmp_path / "file"
        path.write_text("")
        with pytest.raises(CacheError):
            BracketCache(path)

    def test_open_cache(self, tmp_path):
        """No directory means no cache."""
        assert open_cache(None) is None
        assert open_cache("") is None
        assert isinstance(open_cache(tmp_path / "c"), BracketCache)


class TestBatchRunner:
    """Tests for the runner behind the batch command."""

    def test_writes_lines_in_order(self, tmp_path, settings):
        """One JSON line per record, in input order, with a summary log."""
        path = tmp_path / "t.csv"
        path.write_text('name,pd,expected_jones\nk,"X[1,1,2,2]",1\nu,loops=2,\n', encoding="utf-8")
        out = io.StringIO()
        runner = BatchRunner(Settings(progress=False, log_dir=str(tmp_path / "logs")), check=True, out=out)
        assert runner.run(path) == 0
        reports = [DiagramReport.model_validate_json(line) for line in out.getvalue().splitlines()]
        assert [r.name for r in reports] == ["k", "u"]
        assert reports[0].check == "pass"
        assert reports[1].check is None
        assert runner.results == {"ok": 2, "errors": 0, "pass": 1, "fail": 0}
        summary = (tmp_path / "logs" / "summary.log").read_text()
        assert "Records: 2" in summary

    def test_errors_logged(self, tmp_path):
        """Record errors go to the error log and set exit code 1."""
        path = tmp_path / "t.csv"
        path.write_text("name,pd\nbad,X[1\n", encoding="utf-8")
        out = io.StringIO()
        runner = BatchRunner(Settings(progress=False, log_dir=str(tmp_path / "logs")), out=out)
        assert runner.run(path) == 1
        assert "bad: ParseError" in (tmp_path / "logs" / "error.log").read_text()

    def test_cache_in_settings(self, tmp_path):
        """A cache directory in the settings is filled by the run."""
        path = tmp_path / "t.csv"
        path.write_text('name,pd\nt,"X[1,4,2,5] X[3,6,4,1] X[5,2,6,3]"\n', encoding="utf-8")
        settings = Settings(progress=False, cache_dir=str(tmp_path / "cache"))
        assert BatchRunner(settings, out=io.StringIO()).run(path) == 0
        assert len(BracketCache(tmp_path / "cache")) == 1
