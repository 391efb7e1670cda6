"""OpenTelemetry logging and tracing for the command line and the search runner.

Diagnostics are exported as structured records to stderr unless OTLP endpoints
are configured; stdout stays reserved for data output.
"""

from __future__ import annotations

import logging
import sys
from contextlib import contextmanager
from dataclasses import dataclass
from datetime import datetime, timezone
from typing import TYPE_CHECKING, Any, Dict, Iterator, Mapping, Optional

from opentelemetry import baggage, context as otel_context, trace
from opentelemetry.exporter.otlp.proto.http import Compression
from opentelemetry.exporter.otlp.proto.http._log_exporter import OTLPLogExporter
from opentelemetry.exporter.otlp.proto.http.trace_exporter import OTLPSpanExporter
from opentelemetry.sdk._logs import LoggerProvider, LoggingHandler, LogRecordProcessor
from opentelemetry.sdk._logs.export import (
    BatchLogRecordProcessor,
    ConsoleLogExporter,
    LogExporter,
    SimpleLogRecordProcessor,
)
from opentelemetry.sdk.resources import SERVICE_NAME, Resource
from opentelemetry.sdk.trace import SpanProcessor, TracerProvider
from opentelemetry.sdk.trace.export import BatchSpanProcessor, SpanExporter

if TYPE_CHECKING:  # pragma: no cover
    from .settings import RuntimeSettings

# anything on a record beyond these came in through ``extra``
_PLAIN_RECORD_KEYS = frozenset(vars(logging.makeLogRecord({}))) | {"message", "asctime"}


def _context_attributes(record: logging.LogRecord) -> Dict[str, object]:
    attributes = {
        key: value for key, value in vars(record).items() if key not in _PLAIN_RECORD_KEYS
    }
    current = baggage.get_all(context=otel_context.get_current())
    attributes.update({f"baggage.{key}": value for key, value in current.items()})
    return attributes


class _StructuredLogFilter(logging.Filter):
    """Turn the record body into a dictionary carrying resource and context."""

    def __init__(self, resource: Resource) -> None:
        super().__init__()
        self._resource: Dict[str, object] = dict(resource.attributes)

    def _body(self, record: logging.LogRecord, attributes: Mapping[str, object]) -> Dict[str, object]:
        created = datetime.fromtimestamp(record.created, tz=timezone.utc)
        body: Dict[str, object] = {
            "timestamp": created.isoformat(),
            "severity_text": record.levelname,
            "logger_name": record.name,
            "message": record.getMessage(),
        }
        if self._resource:
            body["resource"] = dict(self._resource)
        if attributes:
            body["attributes"] = dict(attributes)
        return body

    def filter(self, record: logging.LogRecord) -> bool:  # type: ignore[override]
        attributes = _context_attributes(record)
        body = self._body(record, attributes)
        record.message = str(body["message"])
        record.msg, record.args = body, None
        vars(record).update(attributes)
        if SERVICE_NAME in self._resource:
            vars(record)[SERVICE_NAME] = self._resource[SERVICE_NAME]
        return True


@dataclass
class LoggingSetup:
    """What :func:`configure_otel_logging` installed, so it can be flushed and removed."""

    logger_provider: LoggerProvider
    tracer_provider: TracerProvider
    handler: LoggingHandler
    log_processor: LogRecordProcessor
    span_processor: Optional[SpanProcessor]
    resource: Resource
    attached_to_root: bool

    def configure_logger(self, logger: logging.Logger) -> logging.Logger:
        """Route ``logger`` through this handler only."""

        if self.handler not in logger.handlers:
            logger.addHandler(self.handler)
        logger.setLevel(self.handler.level)
        logger.propagate = False
        return logger

    def force_flush(self) -> None:
        self.logger_provider.force_flush()
        self.tracer_provider.force_flush()

    def shutdown(self) -> None:
        self.logger_provider.shutdown()
        if self.span_processor is not None:
            self.span_processor.shutdown()
        root = logging.getLogger()
        if self.attached_to_root and self.handler in root.handlers:
            root.removeHandler(self.handler)


def _compression(value: Optional[object]) -> Optional[Compression]:
    if value is None or isinstance(value, Compression):
        return value
    if not isinstance(value, str):
        raise TypeError("compression must be a Compression member, its name, or None")
    wanted = value.strip().lower()
    for option in Compression:
        if wanted in (option.name.lower(), option.value):
            return option
    raise ValueError(f"unsupported compression setting: {value!r}")


def _otlp_options(
    endpoint: str,
    headers: Optional[Mapping[str, str]],
    compression: Optional[object],
    timeout: Optional[int],
) -> Dict[str, Any]:
    return {
        "endpoint": endpoint,
        "headers": dict(headers) if headers else None,
        "compression": _compression(compression),
        "timeout": timeout,
    }


def create_otlp_log_exporter(
    endpoint: str,
    *,
    headers: Optional[Mapping[str, str]] = None,
    compression: Optional[str] = "gzip",
    timeout: Optional[int] = None,
) -> LogExporter:
    """OTLP/HTTP exporter for log records."""

    return OTLPLogExporter(**_otlp_options(endpoint, headers, compression, timeout))


def create_otlp_span_exporter(
    endpoint: str,
    *,
    headers: Optional[Mapping[str, str]] = None,
    compression: Optional[str] = "gzip",
    timeout: Optional[int] = None,
) -> SpanExporter:
    """OTLP/HTTP exporter for spans."""

    return OTLPSpanExporter(**_otlp_options(endpoint, headers, compression, timeout))


def _shared_tracer_provider(resource: Resource) -> TracerProvider:
    # the global provider can only be set once per process
    current = trace.get_tracer_provider()
    if isinstance(current, TracerProvider):
        return current
    provider = TracerProvider(resource=resource)
    trace.set_tracer_provider(provider)
    return provider


def _log_processor(
    logs_endpoint: Optional[str], log_exporter: Optional[LogExporter]
) -> LogRecordProcessor:
    if log_exporter is not None:
        return BatchLogRecordProcessor(log_exporter)
    if logs_endpoint:
        return BatchLogRecordProcessor(create_otlp_log_exporter(logs_endpoint))
    return SimpleLogRecordProcessor(ConsoleLogExporter(out=sys.stderr))


def _span_processor(
    traces_endpoint: Optional[str], span_exporter: Optional[SpanExporter]
) -> Optional[SpanProcessor]:
    if span_exporter is None and traces_endpoint:
        span_exporter = create_otlp_span_exporter(traces_endpoint)
    return None if span_exporter is None else BatchSpanProcessor(span_exporter)


def configure_otel_logging(
    *,
    service_name: str,
    logs_endpoint: Optional[str] = None,
    traces_endpoint: Optional[str] = None,
    resource_attributes: Optional[Mapping[str, object]] = None,
    log_exporter: Optional[LogExporter] = None,
    span_exporter: Optional[SpanExporter] = None,
    log_processor: Optional[LogRecordProcessor] = None,
    span_processor: Optional[SpanProcessor] = None,
    log_level: int = logging.WARNING,
    attach_to_root: bool = True,
) -> LoggingSetup:
    """Install a logging handler and tracer provider for ``service_name``.

    Without ``logs_endpoint`` or ``log_exporter`` records go to stderr as JSON.
    Spans are exported only when ``traces_endpoint`` or a span exporter is given.
    """

    resource = Resource.create({SERVICE_NAME: service_name, **(resource_attributes or {})})

    logger_provider = LoggerProvider(resource=resource)
    log_processor = log_processor or _log_processor(logs_endpoint, log_exporter)
    logger_provider.add_log_record_processor(log_processor)
    handler = LoggingHandler(level=log_level, logger_provider=logger_provider)
    handler.addFilter(_StructuredLogFilter(resource))

    tracer_provider = _shared_tracer_provider(resource)
    span_processor = span_processor or _span_processor(traces_endpoint, span_exporter)
    if span_processor is not None:
        tracer_provider.add_span_processor(span_processor)

    if attach_to_root:
        root = logging.getLogger()
        if handler not in root.handlers:
            root.addHandler(handler)
        root.setLevel(log_level)

    return LoggingSetup(
        logger_provider=logger_provider,
        tracer_provider=tracer_provider,
        handler=handler,
        log_processor=log_processor,
        span_processor=span_processor,
        resource=resource,
        attached_to_root=attach_to_root,
    )


def configure_from_settings(settings: "RuntimeSettings") -> LoggingSetup:
    """:func:`configure_otel_logging` driven by the ``GPTE_*`` settings."""

    return configure_otel_logging(
        service_name=settings.service_name,
        logs_endpoint=settings.otlp_logs_endpoint,
        traces_endpoint=settings.otlp_traces_endpoint,
        log_level=settings.log_level_number,
    )


@contextmanager
def correlation_context(
    attributes: Mapping[str, object] | None = None, **more: object
) -> Iterator[None]:
    """Attach ``attributes`` and ``more`` as baggage for the duration of the block.

    Dotted keys such as ``search.fingerprint`` go through the mapping.
    """

    context = otel_context.get_current()
    for key, value in {**(attributes or {}), **more}.items():
        context = baggage.set_baggage(key, value, context=context)
    token = otel_context.attach(context)
    try:
        yield
    finally:
        otel_context.detach(token)


__all__ = [
    "LoggingSetup",
    "configure_from_settings",
    "configure_otel_logging",
    "correlation_context",
    "create_otlp_log_exporter",
    "create_otlp_span_exporter",
]
