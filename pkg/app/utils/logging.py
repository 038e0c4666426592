# app/utils/logging.py
import logging
import sys

from app.config.settings import LOG_LEVEL

ROOT = "cht"

_configured = False


class TagFormatter(logging.Formatter):
    """"[tag] message", with the tag being the logger name below the cht namespace."""

    def __init__(self):
        super().__init__("[%(tag)s] %(message)s")

    def format(self, record: logging.LogRecord) -> str:
        record.tag = record.name.removeprefix(f"{ROOT}.")
        return super().format(record)


def _configure():
    global _configured
    if _configured:
        return
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(TagFormatter())
    root = logging.getLogger(ROOT)
    root.addHandler(handler)
    root.setLevel(LOG_LEVEL)
    root.propagate = False
    _configured = True


def get_logger(tag: str) -> logging.Logger:
    _configure()
    return logging.getLogger(f"{ROOT}.{tag}")


def set_level(level: str):
    _configure()
    logging.getLogger(ROOT).setLevel(level.upper())
