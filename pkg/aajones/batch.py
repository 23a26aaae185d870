"""
Per-diagram analysis and the CSV batch runner.

``analyze_diagram`` produces the report every command prints; ``BatchRunner``
maps it over a fixture table, optionally in a process pool, and writes one
JSON line per record in input order.
"""

import logging
import re
import sys
import time
from concurrent.futures import ProcessPoolExecutor, as_completed
from dataclasses import replace
from pathlib import Path
from typing import Dict, List, Optional, TextIO

import pandas as pd
from tqdm import tqdm

from aajones.aa import (
    DiagramClass,
    aa_report,
    classify_with_certs,
    dasbach_lin_coeffs,
    sign_obstruction,
)
from aajones.cache import BracketCache, open_cache
from aajones.config import Settings
from aajones.diagram import LinkDiagram, is_reduced, is_split, parse_pd, serialize, writhe
from aajones.errors import AAJonesError, ParseError, ValidationError
from aajones.kauffman import bracket, jones_from_bracket, turaev_genus
from aajones.laurent import LaurentPoly, Unit, format_poly, parse_poly
from aajones.schemas import (
    AAReportModel,
    BatchRecord,
    DasLinModel,
    DealternatorModel,
    DiagramReport,
    ErrorModel,
)

logger = logging.getLogger(__name__)


def cached_bracket(d: LinkDiagram, settings: Settings, cache: Optional[BracketCache] = None) -> LaurentPoly:
    key = serialize(d)
    if cache is not None:
        hit = cache.get(key)
        if hit is not None:
            logger.debug("cache hit for %s", key)
            return hit
    result = bracket(
        d,
        cap=settings.cap,
        workers=settings.workers,
        chunk_bits=settings.chunk_bits,
        progress=settings.progress,
    )
    if cache is not None:
        cache.put(key, result)
    return result


def error_report(e: AAJonesError, name: Optional[str] = None, **fields) -> DiagramReport:
    return DiagramReport(
        name=name,
        error=ErrorModel(type=type(e).__name__, message=str(e), exit_code=e.exit_code),
        **fields,
    )


def analyze_diagram(
    d: LinkDiagram,
    settings: Settings,
    name: Optional[str] = None,
    cache: Optional[BracketCache] = None,
    include_aa: bool = True,
) -> DiagramReport:
    """Bracket, Jones, Turaev genus, classification and the AA report when one applies."""
    w = writhe(d)
    br = cached_bracket(d, settings, cache)
    v = jones_from_bracket(br, w)
    fields = dict(
        name=name,
        pd=serialize(d),
        crossings=d.c,
        components=d.component_count,
        writhe=w,
        bracket=format_poly(br),
        jones=format_poly(v),
        sign_verdict=None if v.is_zero() else sign_obstruction(v).value,
    )
    if d.c == 0 or is_split(d):
        return DiagramReport(**fields)

    fields["turaev_genus"] = turaev_genus(d)
    if include_aa:
        kind, certs = classify_with_certs(d)
        fields["classification"] = kind.value
        if kind is DiagramClass.ALTERNATING:
            if is_reduced(d):
                fields["dasbach_lin"] = DasLinModel.from_coeffs(dasbach_lin_coeffs(d))
        else:
            fields["dealternators"] = [
                DealternatorModel(crossing=c.crossing, strongly_reduced=c.strongly_reduced, reason=c.reason)
                for c in certs
            ]
            strong = next((c for c in certs if c.strongly_reduced), None)
            if strong is not None:
                fields["aa"] = AAReportModel.from_report(aa_report(d, strong, v))
    return DiagramReport(**fields)


def check_jones(report: DiagramReport, expected: str) -> str:
    """'pass' when the computed Jones polynomial equals ``expected``."""
    computed = parse_poly(report.jones, Unit.HALF_T)
    return "pass" if parse_poly(expected, Unit.HALF_T) == computed else "fail"


def analyze_record(record: BatchRecord, settings: Settings, check: bool) -> DiagramReport:
    """Worker entry point; input errors become an inline ``error`` field."""
    extra = {"tags": record.tags, "expected_jones": record.expected_jones}
    try:
        d = parse_pd(record.pd)
        report = analyze_diagram(d, settings, name=record.name, cache=open_cache(settings.cache_dir))
        report = report.model_copy(update=extra)
        if check and record.expected_jones:
            report = report.model_copy(update={"check": check_jones(report, record.expected_jones)})
        return report
    except AAJonesError as e:
        return error_report(e, name=record.name, pd=record.pd, **extra)


def load_records(csv_path) -> List[BatchRecord]:
    """Read a UTF-8 CSV with columns name, pd and optional expected_jones, tags."""
    path = Path(csv_path)
    try:
        table = pd.read_csv(path, dtype=str, keep_default_na=False, encoding="utf-8")
    except FileNotFoundError:
        raise ParseError(f"File not found: {path}")
    except pd.errors.EmptyDataError:
        return []
    except (pd.errors.ParserError, UnicodeDecodeError) as e:
        raise ParseError(f"Invalid CSV in {path}: {e}")

    missing = [col for col in ("name", "pd") if col not in table.columns]
    if missing:
        raise ValidationError(f"{path} is missing column(s): {', '.join(missing)}")
    duplicated = sorted(set(table["name"][table["name"].duplicated()]))
    if duplicated:
        raise ValidationError(f"duplicate record names in {path}: {', '.join(duplicated)}")

    records = []
    for row in table.to_dict(orient="records"):
        expected = row.get("expected_jones", "").strip() or None
        tags = [t for t in re.split(r"[;\s]+", row.get("tags", "")) if t]
        records.append(BatchRecord(name=row["name"], pd=row["pd"], expected_jones=expected, tags=tags))
    return records


class BatchRunner:
    def __init__(
        self,
        settings: Settings,
        check: bool = False,
        num_workers: Optional[int] = None,
        out: Optional[TextIO] = None,
    ):
        self.settings = settings
        self.check = check
        self.num_workers = num_workers or 1
        self.out = out or sys.stdout
        self.log_dir = Path(settings.log_dir) if settings.log_dir else None
        if self.log_dir is not None:
            self.log_dir.mkdir(parents=True, exist_ok=True)
        self.results = {"ok": 0, "errors": 0, "pass": 0, "fail": 0}
        # one bar per run; pool workers enumerate states serially
        self.worker_settings = replace(settings, progress=False)
        self.pool_settings = replace(settings, progress=False, workers=1)

        self.summary_logger = self._setup_summary_logger()
        self.error_logger = self._setup_error_logger()

    def _setup_summary_logger(self):
        """Configure logger for summary and progress messages"""
        logger = logging.getLogger("BatchRunner.Summary")
        logger.setLevel(logging.INFO)
        logger.handlers.clear()

        formatter = logging.Formatter("%(message)s")

        # reports own stdout
        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(logging.INFO)
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

        if self.log_dir is not None:
            file_handler = logging.FileHandler(self.log_dir / "summary.log", mode="w")
            file_handler.setLevel(logging.INFO)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

        logger.propagate = False
        return logger

    def _setup_error_logger(self):
        """Configure logger for error and warning messages"""
        logger = logging.getLogger("BatchRunner.Error")
        logger.setLevel(logging.WARNING)
        logger.handlers.clear()

        formatter = logging.Formatter("[%(levelname)s] %(message)s")

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setLevel(logging.WARNING)
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

        if self.log_dir is not None:
            file_handler = logging.FileHandler(self.log_dir / "error.log", mode="w")
            file_handler.setLevel(logging.WARNING)
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

        logger.propagate = False
        return logger

    def _record(self, report: DiagramReport) -> None:
        if report.error is not None:
            self.results["errors"] += 1
            self.error_logger.error(f"{report.name}: {report.error.type}: {report.error.message}")
        else:
            self.results["ok"] += 1
        if report.check == "pass":
            self.results["pass"] += 1
        elif report.check == "fail":
            self.results["fail"] += 1
            self.error_logger.warning(
                f"{report.name}: expected {report.expected_jones}, computed {report.jones}"
            )

    def _emit(self, report: DiagramReport) -> None:
        self.out.write(report.model_dump_json() + "\n")
        self.out.flush()

    def run(self, csv_path) -> int:
        """Analyze every record; returns the exit code (2 on a check mismatch, 1 on record errors)."""
        records = load_records(csv_path)
        started = time.perf_counter()

        self.summary_logger.info("=" * 60)
        self.summary_logger.info(f"     Batch {csv_path}: {len(records)} records, {self.num_workers} worker(s)")
        self.summary_logger.info(f"         - Cap: {self.settings.cap}")
        self.summary_logger.info(f"         - Check: {self.check}")
        self.summary_logger.info(f"         - Cache: {self.settings.cache_dir or 'off'}")
        self.summary_logger.info("=" * 60)

        bar_fmt = "{l_bar}{bar}| {n_fmt}/{total_fmt} [{elapsed}<{remaining}, {rate_fmt}] {postfix}"
        with tqdm(
            total=len(records),
            desc="Diagrams",
            unit="diagram",
            bar_format=bar_fmt,
            disable=not self.settings.progress or not records,
        ) as pbar:
            if self.num_workers <= 1:
                for record in records:
                    report = analyze_record(record, self.worker_settings, self.check)
                    self._record(report)
                    self._emit(report)
                    pbar.set_postfix(self.results, refresh=True)
                    pbar.update(1)
            else:
                self._run_pool(records, pbar)

        self.summary_logger.info("=" * 60)
        self.summary_logger.info("     Summary:")
        self.summary_logger.info(f"         - Records: {len(records)}")
        self.summary_logger.info(f"         - Analyzed: {self.results['ok']}")
        self.summary_logger.info(f"         - Errors: {self.results['errors']}")
        if self.check:
            self.summary_logger.info(f"         - Check passed: {self.results['pass']}")
            self.summary_logger.info(f"         - Check failed: {self.results['fail']}")
        self.summary_logger.info(f"         - Elapsed: {time.perf_counter() - started:.2f}s")
        self.summary_logger.info("=" * 60)

        if self.results["fail"]:
            return 2
        if self.results["errors"]:
            return 1
        return 0

    def _run_pool(self, records: List[BatchRecord], pbar) -> None:
        finished: Dict[int, DiagramReport] = {}
        next_index = 0
        with ProcessPoolExecutor(max_workers=self.num_workers) as executor:
            future_to_index = {
                executor.submit(analyze_record, record, self.pool_settings, self.check): idx
                for idx, record in enumerate(records)
            }
            for future in as_completed(future_to_index):
                idx = future_to_index[future]
                try:
                    report = future.result()
                except Exception as e:
                    self.error_logger.error(f"Record {records[idx].name} failed with exception: {e}")
                    report = DiagramReport(
                        name=records[idx].name,
                        pd=records[idx].pd,
                        error=ErrorModel(type=type(e).__name__, message=str(e), exit_code=1),
                    )
                self._record(report)
                finished[idx] = report
                # stream in input order
                while next_index in finished:
                    self._emit(finished.pop(next_index))
                    next_index += 1
                pbar.set_postfix(self.results, refresh=True)
                pbar.update(1)


__all__ = [
    "cached_bracket",
    "error_report",
    "analyze_diagram",
    "check_jones",
    "analyze_record",
    "load_records",
    "BatchRunner",
]
