import atexit
import datetime as dt
import json
import logging
import logging.config
from collections.abc import Generator, Iterable
from pathlib import Path
from typing import Any

import numpy as np

from etgrs.config import build_logging_config

LOG_RECORD_BUILTIN_ATTRS = {
    "args",
    "asctime",
    "created",
    "exc_info",
    "exc_text",
    "filename",
    "funcName",
    "levelname",
    "levelno",
    "lineno",
    "module",
    "msecs",
    "message",
    "msg",
    "name",
    "pathname",
    "process",
    "processName",
    "relativeCreated",
    "stack_info",
    "thread",
    "threadName",
    "taskName",
}


def serialize(obj: object) -> Any:  # noqa: C901, PLR0912
    """
    Convert a log payload into JSON-ready values without recursion.

    Numpy arrays (including galois field arrays) become nested integer lists, so a subset or
    a codeword attached through ``extra=`` shows up as plain integer encodings.

    Args:
        obj (object): The object to be serialized.

    Returns
    -------
        Any: A JSON-compatible rendering of ``obj``.

    Examples
    --------
        >>> serialize({"subset": (1, 2), "holds": True})
        {'subset': [1, 2], 'holds': True}
    """
    stack: list[tuple[object, Any, Any, tuple]] = [(obj, None, None, ())]
    result = None
    seen: dict[int, tuple] = {}

    while stack:
        current_obj, parent, parent_key, path = stack.pop()

        if isinstance(current_obj, np.ndarray):
            current_obj = current_obj.view(np.ndarray).tolist()
        elif isinstance(current_obj, np.generic):
            current_obj = current_obj.item()

        if not isinstance(current_obj, (str, int, float, bool, type(None))):
            if id(current_obj) in seen:
                kind = "SelfReference" if seen[id(current_obj)] == path else "CircularReference"
                parent[parent_key] = (kind, seen[id(current_obj)])
                continue
            seen[id(current_obj)] = path

        match current_obj:
            case bytes() | str() | int() | float() | bool() | None:
                current_result = current_obj
            case list() | tuple() | set() | frozenset() as seq:
                items = list(seq)
                current_result = [None] * len(items)
                stack.extend((item, current_result, idx, (*path, idx)) for idx, item in enumerate(items))
            case dict() as dct:
                current_result = {}
                stack.extend((v, current_result, k, (*path, k)) for k, v in dct.items() if not callable(v))
            case model if hasattr(model, "model_dump"):
                current_result = model.model_dump(mode="json")
            case cls if isinstance(cls, type):
                current_result = {"class": type(cls).__name__, "name": cls.__name__}
            case gen if isinstance(gen, Generator):
                current_result = repr(gen)
            case itr if isinstance(itr, Iterable):
                items = list(itr)
                current_result = [None] * len(items)
                stack.extend((item, current_result, idx, (*path, idx)) for idx, item in enumerate(items))
            case other if hasattr(other, "__dict__"):
                current_result = {
                    k: v for k, v in vars(other).items() if not k.startswith("_") and not callable(v)
                }
                current_result["class"] = other.__class__.__name__
            case _:
                current_result = repr(current_obj)

        if parent is not None:
            parent[parent_key] = current_result
        else:
            result = current_result

    return result


class JSONFormatter(logging.Formatter):
    def __init__(self, *, fmt_keys: dict[str, str] | None = None) -> None:
        super().__init__()
        self.fmt_keys = fmt_keys if fmt_keys is not None else {}

    def format(self, record: logging.LogRecord) -> str:
        message = self._prepare_log_dict(record)
        return json.dumps(message, default=str)

    def _prepare_log_dict(self, record: logging.LogRecord) -> dict:
        always_fields = {
            "message": record.getMessage(),
            "timestamp": dt.datetime.fromtimestamp(record.created, tz=dt.UTC).isoformat(),
        }
        if record.exc_info is not None:
            always_fields["exc_info"] = self.formatException(record.exc_info)
        if record.stack_info is not None:
            always_fields["stack_info"] = self.formatStack(record.stack_info)

        message = {
            key: (msg_val if (msg_val := always_fields.pop(val, None)) is not None else getattr(record, val))
            for key, val in self.fmt_keys.items()
        } | always_fields
        for key, val in record.__dict__.items():
            if key not in LOG_RECORD_BUILTIN_ATTRS:
                message[key] = serialize(val)
        return message


_configured = False


def configure_logging(level: str | None = None, log_file: str | Path | None = None) -> logging.Logger:
    """Install the package handlers once per process and return the package logger."""
    global _configured  # noqa: PLW0603
    logger = logging.getLogger("etgrs")
    if _configured:
        if level is not None:
            stderr_handler = logging.getHandlerByName("stderr")
            if stderr_handler is not None:
                stderr_handler.setLevel(level.upper())
        return logger

    kwargs: dict[str, Any] = {}
    if level is not None:
        kwargs["level"] = level.upper()
    if log_file is not None:
        kwargs["log_file"] = log_file
    config = build_logging_config(**kwargs)
    for handler_config in config["handlers"].values():
        if (filename := handler_config.get("filename")) is not None:
            Path(filename).resolve().parent.mkdir(parents=True, exist_ok=True)
    logging.config.dictConfig(config)
    queue_handler = logging.getHandlerByName("queue_handler")
    if queue_handler is not None and getattr(queue_handler, "listener", None) is not None:
        queue_handler.listener.start()  # type: ignore[attr-defined]
        atexit.register(queue_handler.listener.stop)  # type: ignore[attr-defined]
    _configured = True
    return logger
