"""
Logging and metrics helpers.
"""

import json
import logging

from config import settings
from monitoring.logging import JSONFormatter, StructuredLogger
from monitoring.metrics import get_metrics, get_metrics_registry, measure_latency, track_timing
from monitoring.tracing import trace_span


def test_json_formatter_keeps_extras():
    """Extra record attributes become JSON fields next to the message."""
    record = logging.LogRecord("runs", logging.INFO, __file__, 1, "done", None, None)
    record.theory = "szabo"
    data = json.loads(JSONFormatter().format(record))
    assert data["message"] == "done"
    assert data["theory"] == "szabo"
    assert data["level"] == "INFO"


def test_structured_logger_writes_checks(tmp_path):
    """A failed check is written as an ERROR line in checks.jsonl."""
    checks = StructuredLogger("checks", log_dir=str(tmp_path))
    checks.log_check("duality", passed=False, samples=16, detail="type 1")
    record = json.loads((tmp_path / "checks.jsonl").read_text(encoding="utf-8").splitlines()[-1])
    assert record["level"] == "ERROR"
    assert record["check"] == "duality"
    assert record["detail"] == "type 1"


def test_latency_and_counters():
    """Timers and face counters accumulate in the registry."""
    metrics = get_metrics()
    metrics.reset()

    @track_timing("tracked")
    def work():
        return 7

    assert work() == 7
    with measure_latency("block") as elapsed:
        assert elapsed() >= 0.0
    metrics.merge_counts({"faces.type_1": 2})
    metrics.increment("faces.type_1")

    registry = get_metrics_registry()
    assert registry["counters"]["faces.type_1"] == 3
    assert metrics.face_counts() == {"type_1": 3}
    assert len(registry["timers"]["tracked"]) == 1
    assert metrics.get_avg_timing("block") is not None
    assert metrics.get_avg_timing("missing") is None


def test_trace_span_disabled(monkeypatch):
    """With tracing off the span context yields None."""
    monkeypatch.setattr(settings, "ENABLE_TRACING", False)
    with trace_span("assemble_d", crossings=3) as span:
        assert span is None
