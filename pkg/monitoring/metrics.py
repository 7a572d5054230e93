"""
Counters and latency measurements for the cube pipeline.
Keeps an in-memory registry of face classification counts and stage
timings, with decorator-based instrumentation for hot functions.
"""

import time
from collections.abc import Callable, Iterator
from contextlib import contextmanager
from functools import wraps
from typing import Any

_metrics_registry: dict[str, Any] = {
    "counters": {},
    "timers": {},
}


class MetricsCollector:
    """Metrics collector for face counts and stage timings."""

    def __init__(self):
        """Initialize metrics collector."""
        self.counts: dict[str, int] = {}
        self.timings: dict[str, list[float]] = {}

    def increment(self, metric_name: str, value: int = 1) -> None:
        """Increment a counter metric.

        Args:
            metric_name: Name of the metric.
            value: Value to increment by.
        """
        self.counts[metric_name] = self.counts.get(metric_name, 0) + value
        _metrics_registry["counters"][metric_name] = self.counts[metric_name]

    def merge_counts(self, counts: dict[str, int]) -> None:
        """Fold counters reported by a worker process into this collector.

        Args:
            counts: Mapping of metric name to increment.
        """
        for name in sorted(counts):
            self.increment(name, counts[name])

    def record_timing(self, metric_name: str, duration: float) -> None:
        """Record a timing metric.

        Args:
            metric_name: Name of the metric.
            duration: Duration in milliseconds.
        """
        self.timings.setdefault(metric_name, []).append(duration)
        _metrics_registry["timers"].setdefault(metric_name, []).append(
            duration
        )

    def get_count(self, metric_name: str) -> int:
        """Get count for a metric."""
        return self.counts.get(metric_name, 0)

    def face_counts(self) -> dict[str, int]:
        """Faces seen per configuration family, keyed without the prefix."""
        prefix = "faces."
        return {
            name[len(prefix) :]: count
            for name, count in sorted(self.counts.items())
            if name.startswith(prefix)
        }

    def get_avg_timing(self, metric_name: str) -> float | None:
        """Get average timing for a metric.

        Args:
            metric_name: Name of the metric.

        Returns:
            Average duration in milliseconds, or None if no data.
        """
        timings = self.timings.get(metric_name)
        if not timings:
            return None
        return sum(timings) / len(timings)

    def reset(self) -> None:
        """Reset all metrics."""
        self.counts.clear()
        self.timings.clear()
        _metrics_registry["counters"].clear()
        _metrics_registry["timers"].clear()


_metrics = MetricsCollector()


def get_metrics() -> MetricsCollector:
    """Get the global metrics collector."""
    return _metrics


def get_metrics_registry() -> dict[str, Any]:
    """Get a copy of the in-memory metrics registry.

    Returns:
        Dictionary with 'counters' and 'timers' keys.
    """
    return {
        "counters": dict(_metrics_registry["counters"]),
        "timers": {k: list(v) for k, v in _metrics_registry["timers"].items()},
    }


@contextmanager
def measure_latency(name: str) -> Iterator[Callable[[], float]]:
    """Context manager to measure latency in milliseconds.

    Args:
        name: Name of the metric.

    Yields:
        Callable returning the elapsed milliseconds so far.

    Example:
        with measure_latency("assemble_d") as elapsed_ms:
            d = assemble_d(diagram, decoration)
        logger.info(f"assembly took {elapsed_ms():.1f} ms")
    """
    start = time.perf_counter()

    def get_elapsed() -> float:
        return (time.perf_counter() - start) * 1000.0

    try:
        yield get_elapsed
    finally:
        get_metrics().record_timing(name, get_elapsed())


def track_timing(metric_name: str):
    """Decorator to track function execution time.

    Args:
        metric_name: Name of the metric to record.
    """

    def decorator(func: Callable) -> Callable:
        @wraps(func)
        def wrapper(*args: Any, **kwargs: Any) -> Any:
            with measure_latency(metric_name):
                return func(*args, **kwargs)

        return wrapper

    return decorator
