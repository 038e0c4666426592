import logging

from app.utils.errors import IndeterminateError, InputError
from app.utils.logging import TagFormatter, get_logger
from app.utils.responses import dump, error_response, success_response


def _record(name: str, msg: str) -> logging.LogRecord:
    return logging.LogRecord(name, logging.INFO, __file__, 1, msg, None, None)


def test_log_lines_carry_the_bare_tag():
    assert TagFormatter().format(_record("cht.oracle", "t*_A=0.5")) == "[oracle] t*_A=0.5"
    assert TagFormatter().format(_record("cht", "ready")) == "[cht] ready"


def test_loggers_live_under_one_namespace():
    assert get_logger("suite").name == "cht.suite"


def test_envelopes():
    payload, code = success_response("ok", {"type": "A"})
    assert (payload, code) == ({"success": True, "message": "ok", "data": {"type": "A"}}, 0)
    payload, code = error_response("bad triple", code="INVALID_TRIPLE", exit_code=2)
    assert payload == {"success": False, "message": "bad triple", "code": "INVALID_TRIPLE"}
    assert dump({"b": 1, "a": 2}).index('"a"') < dump({"b": 1, "a": 2}).index('"b"')


def test_error_exit_codes():
    assert InputError("x").exit_code == 2
    assert IndeterminateError("x").exit_code == 3
