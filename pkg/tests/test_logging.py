import logging

import structlog

from app.domain.services.digraph_ops import directed_cycle
from app.domain.services.ham_solver import hamiltonian_cycle
from app.infrastructure.logging import configure_default_logging, setup_logging


def test_package_import_routes_structlog_through_stdlib():
    assert structlog.is_configured()
    assert isinstance(structlog.get_config()["logger_factory"], structlog.stdlib.LoggerFactory)


def test_default_configuration_keeps_an_existing_one():
    before = structlog.get_config()["processors"]
    configure_default_logging()
    assert structlog.get_config()["processors"] is before


def test_debug_records_go_to_stderr(capsys):
    setup_logging("DEBUG")
    hamiltonian_cycle(directed_cycle(3))
    captured = capsys.readouterr()
    assert captured.out == ""
    assert "hamiltonian_cycle" in captured.err
    assert "method=subset-dp" in captured.err


def test_json_output(capsys):
    setup_logging("INFO", json_output=True)
    structlog.get_logger("app.tests").info("batch_finished", failed=0)
    line = capsys.readouterr().err.strip()
    assert line.startswith("{") and '"event": "batch_finished"' in line
    assert logging.getLogger().level == logging.INFO
