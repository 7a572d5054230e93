"""
Optional OpenTelemetry spans around pipeline stages.
Tracing is a no-op unless ENABLE_TRACING is set and the SDK is
installed; spans are exported to the console for inspection.
"""

from collections.abc import Iterator
from contextlib import contextmanager
from typing import Any

from config import settings

_tracer: Any | None = None
_tracer_provider: Any | None = None


def setup_tracing() -> None:
    """Set up OpenTelemetry tracing if enabled.

    No-op if settings.ENABLE_TRACING is False or the SDK is missing.
    """
    global _tracer, _tracer_provider

    if not settings.ENABLE_TRACING:
        return

    try:
        from opentelemetry import trace
        from opentelemetry.sdk.trace import TracerProvider
        from opentelemetry.sdk.trace.export import (
            BatchSpanProcessor,
            ConsoleSpanExporter,
        )

        _tracer_provider = TracerProvider()
        trace.set_tracer_provider(_tracer_provider)
        _tracer_provider.add_span_processor(
            BatchSpanProcessor(ConsoleSpanExporter())
        )
        _tracer = trace.get_tracer(__name__)

    except ImportError:
        _tracer = None
        _tracer_provider = None


def get_tracer() -> Any | None:
    """Get OpenTelemetry tracer instance.

    Returns:
        Tracer instance if tracing is enabled and available, None otherwise.
    """
    if not settings.ENABLE_TRACING:
        return None

    if _tracer is None:
        try:
            from opentelemetry import trace

            return trace.get_tracer(__name__)
        except ImportError:
            return None

    return _tracer


@contextmanager
def trace_span(name: str, **attributes: Any) -> Iterator[Any | None]:
    """Open a span named `name` when tracing is active.

    Args:
        name: Span name, e.g. "assemble_d".
        **attributes: Span attributes (crossings, theory, ...).

    Yields:
        The span, or None when tracing is disabled.
    """
    tracer = get_tracer()
    if tracer is None:
        yield None
        return

    with tracer.start_as_current_span(name) as span:
        for key, value in attributes.items():
            span.set_attribute(key, value)
        yield span


setup_tracing()
