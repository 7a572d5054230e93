"""
Monitoring and observability package.

Provides observability tools for pipeline runs:
- Structured logging of runs and checks (StructuredLogger, setup_logging)
- Face counters and stage timings (MetricsCollector, get_metrics, measure_latency, track_timing)
- Optional OpenTelemetry spans (setup_tracing, get_tracer, trace_span)
"""

from .logging import StructuredLogger, setup_logging
from .metrics import (
    MetricsCollector,
    get_metrics,
    get_metrics_registry,
    measure_latency,
    track_timing,
)
from .tracing import get_tracer, setup_tracing, trace_span

__all__ = [
    "StructuredLogger",
    "setup_logging",
    "MetricsCollector",
    "get_metrics",
    "get_metrics_registry",
    "measure_latency",
    "track_timing",
    "setup_tracing",
    "get_tracer",
    "trace_span",
]
