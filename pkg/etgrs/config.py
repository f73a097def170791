import os
from pathlib import Path
from typing import Any

from dotenv import load_dotenv

from . import EtgrsError

load_dotenv()


class ConfigError(EtgrsError):
    """Exception raised for malformed environment configuration."""


def _int_env(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw, 0)
    except ValueError as e:
        msg = f"{name} must be an integer, got {raw!r}"
        raise ConfigError(msg) from e
    if value < 1:
        msg = f"{name} must be positive, got {value}"
        raise ConfigError(msg)
    return value


DEFAULT_BUDGET = 2**24

ENUMERATION_BUDGET = _int_env("ETGRS_BUDGET", DEFAULT_BUDGET)
DEFAULT_WORKERS = _int_env("ETGRS_WORKERS", 1)
LOG_FILE = os.getenv("ETGRS_LOG_FILE")
LOG_LEVEL = os.getenv("ETGRS_LOG_LEVEL", "WARNING").upper()


def enumeration_budget() -> int:
    """Budget read at call time so that ``ETGRS_BUDGET`` changes after import are honoured."""
    return _int_env("ETGRS_BUDGET", ENUMERATION_BUDGET)


def build_logging_config(log_file: str | Path | None = LOG_FILE, level: str = LOG_LEVEL) -> dict[str, Any]:
    handlers: dict[str, dict[str, Any]] = {
        "stderr": {
            "class": "logging.StreamHandler",
            "level": level,
            "formatter": "simple",
            "stream": "ext://sys.stderr",
        },
    }
    if log_file is not None:
        handlers["file_json"] = {
            "class": "logging.handlers.RotatingFileHandler",
            "level": "DEBUG",
            "formatter": "json",
            "filename": str(log_file),
            "maxBytes": 1000000,
            "backupCount": 5,
        }
    handlers["queue_handler"] = {
        "class": "logging.handlers.QueueHandler",
        "handlers": [name for name in handlers if name != "queue_handler"],
        "respect_handler_level": True,
    }
    return {
        "version": 1,
        "disable_existing_loggers": False,
        "formatters": {
            "simple": {
                "format": "[%(levelname)s|%(module)s|L%(lineno)d] %(asctime)s: %(message)s",
                "datefmt": "%Y-%m-%dT%H:%M:%S%z",
            },
            "json": {
                "()": f"{__package__}.common.logging.JSONFormatter",
                "fmt_keys": {
                    "level": "levelname",
                    "message": "message",
                    "timestamp": "timestamp",
                    "logger": "name",
                    "module": "module",
                    "function": "funcName",
                    "line": "lineno",
                    "thread_name": "threadName",
                },
            },
        },
        "handlers": handlers,
        "loggers": {"etgrs": {"level": "DEBUG", "handlers": ["queue_handler"], "propagate": False}},
    }


logging_config = build_logging_config()
