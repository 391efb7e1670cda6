from __future__ import annotations

import logging
from typing import Iterator, List, Tuple

import pytest
from opentelemetry import baggage, trace
from opentelemetry.sdk._logs.export import InMemoryLogExporter, SimpleLogRecordProcessor
from opentelemetry.sdk.trace.export.in_memory_span_exporter import InMemorySpanExporter

from gaussian_pte.logging_integration import (
    LoggingSetup,
    configure_from_settings,
    configure_otel_logging,
    correlation_context,
    create_otlp_log_exporter,
    create_otlp_span_exporter,
)
from gaussian_pte.search import SearchConfig, run
from gaussian_pte.settings import RuntimeSettings

InMemory = Tuple[LoggingSetup, InMemoryLogExporter, InMemorySpanExporter]


@pytest.fixture
def in_memory() -> Iterator[InMemory]:
    logs, spans = InMemoryLogExporter(), InMemorySpanExporter()
    setup = configure_otel_logging(
        service_name="pte-test",
        log_exporter=logs,
        span_exporter=spans,
        log_level=logging.INFO,
        attach_to_root=False,
    )
    yield setup, logs, spans
    setup.shutdown()


def _isolated_logger(setup: LoggingSetup, name: str, level: int | None = None) -> logging.Logger:
    logger = logging.getLogger(name)
    logger.handlers = []
    setup.configure_logger(logger)
    if level is not None:
        logger.setLevel(level)
    return logger


def _messages(setup: LoggingSetup, logs: InMemoryLogExporter) -> List[str]:
    setup.force_flush()
    return [item.log_record.body["message"] for item in logs.get_finished_logs()]


def test_chunk_log_carries_span_ids_and_baggage(in_memory: InMemory) -> None:
    setup, logs, spans = in_memory
    logger = _isolated_logger(setup, "pte-runner")

    with trace.get_tracer(__name__).start_as_current_span("search.chunk") as span:
        with correlation_context({"search.chunk": "3"}):
            logger.info("chunk %d complete", 3, extra={"candidates": 41})

    setup.force_flush()
    (item,) = logs.get_finished_logs()
    record = item.log_record
    expected = span.get_span_context()
    assert (record.trace_id, record.span_id) == (expected.trace_id, expected.span_id)

    assert record.body["message"] == "chunk 3 complete"
    assert record.body["severity_text"] == "INFO"
    assert record.body["resource"]["service.name"] == "pte-test"
    attributes = dict(record.attributes)
    assert attributes["candidates"] == 41
    assert attributes["baggage.search.chunk"] == "3"
    assert [finished.name for finished in spans.get_finished_spans()] == ["search.chunk"]


def test_records_below_the_level_are_dropped(in_memory: InMemory) -> None:
    setup, logs, _ = in_memory
    logger = _isolated_logger(setup, "pte-quiet", logging.WARNING)
    logger.info("not exported")
    logger.warning("exported")
    assert _messages(setup, logs) == ["exported"]


def test_correlation_context_is_scoped() -> None:
    assert baggage.get_all() == {}
    with correlation_context({"search.fingerprint": "abc"}, attempt="1"):
        assert baggage.get_baggage("search.fingerprint") == "abc"
        assert baggage.get_baggage("attempt") == "1"
    assert baggage.get_all() == {}


def test_otlp_exporters_keep_their_endpoints() -> None:
    log_exporter = create_otlp_log_exporter("http://collector/v1/logs")
    span_exporter = create_otlp_span_exporter("http://collector/v1/traces", compression="none")
    assert getattr(log_exporter, "_endpoint") == "http://collector/v1/logs"
    assert getattr(span_exporter, "_endpoint") == "http://collector/v1/traces"


def test_unknown_compression_is_rejected() -> None:
    with pytest.raises(ValueError):
        create_otlp_log_exporter("http://collector/v1/logs", compression="brotli")


def test_configure_from_settings_attaches_to_root() -> None:
    root = logging.getLogger()
    previous_level = root.level
    settings = RuntimeSettings.from_env({"GPTE_LOG_LEVEL": "info", "GPTE_SERVICE_NAME": "pte-cli"})
    setup = configure_from_settings(settings)
    try:
        assert setup.handler in root.handlers
        assert setup.handler.level == logging.INFO
        assert setup.resource.attributes["service.name"] == "pte-cli"
        assert isinstance(setup.log_processor, SimpleLogRecordProcessor)
        assert setup.span_processor is None
    finally:
        setup.shutdown()
        root.setLevel(previous_level)
    assert setup.handler not in root.handlers


def test_search_chunk_logs_carry_the_fingerprint(in_memory: InMemory) -> None:
    setup, logs, _ = in_memory
    logger = _isolated_logger(setup, "gaussian_pte.search.runner", logging.INFO)
    cfg = SearchConfig(n=3, box=1, chunk_count=2)
    try:
        run(cfg)
    finally:
        logger.removeHandler(setup.handler)
        logger.setLevel(logging.NOTSET)
        logger.propagate = True
    setup.force_flush()
    chunk_records = [
        item.log_record
        for item in logs.get_finished_logs()
        if item.log_record.body["message"].startswith("chunk ")
    ]
    assert len(chunk_records) == 2
    for record in chunk_records:
        attributes = dict(record.attributes)
        assert attributes["baggage.search.fingerprint"] == cfg.fingerprint()
    assert {dict(r.attributes)["baggage.search.chunk"] for r in chunk_records} == {"0", "1"}
