import json
import logging

import numpy as np
import pytest

from etgrs.common import logging as etgrs_logging
from etgrs.common.logging import JSONFormatter, configure_logging, serialize
from etgrs.config import build_logging_config
from etgrs.reports import Finding


@pytest.mark.parametrize(
    ("input_obj", "expected_output"),
    [
        ({"subset": (1, 2), "holds": True}, {"subset": [1, 2], "holds": True}),
        ([1, [2, 3]], [1, [2, 3]]),
        ("text", "text"),
        (None, None),
        (frozenset([4]), [4]),
        (np.int64(7), 7),
        (np.array([[1, 2], [3, 4]]), [[1, 2], [3, 4]]),
        ({"f": len, "x": 1}, {"x": 1}),
    ],
    ids=[
        "dict", "nested-list", "string", "none",
        "frozenset", "numpy-scalar", "numpy-array", "drops-callables",
    ],
)
def test_serialize_happy_path(input_obj, expected_output):
    assert serialize(input_obj) == expected_output


def test_serialize_field_arrays(gf8):
    assert serialize({"word": gf8([1, 2, 7])}) == {"word": [1, 2, 7]}


def test_serialize_models():
    finding = Finding(kind="n-matrix", message="m", detail={"k": 3})
    assert serialize([finding]) == [{"kind": "n-matrix", "message": "m", "detail": {"k": 3}}]


def test_serialize_object_attributes():
    class Holder:
        def __init__(self):
            self._hidden = 1
            self.shown = 2

    assert serialize(Holder()) == {"shown": 2, "class": "Holder"}


def test_serialize_circular_reference():
    data: dict = {"a": 1}
    data["self"] = data
    assert serialize(data)["self"][0] == "CircularReference"


def test_json_formatter_includes_extra(gf13):
    formatter = JSONFormatter(fmt_keys={"level": "levelname", "message": "message"})
    record = logging.LogRecord("etgrs.codes", logging.WARNING, __file__, 1, "subset %s", ("x",), None)
    record.subset = gf13([1, 5])
    payload = json.loads(formatter.format(record))
    assert payload["level"] == "WARNING"
    assert payload["message"] == "subset x"
    assert payload["subset"] == [1, 5]
    assert "timestamp" in payload


def test_build_logging_config_with_file(tmp_path):
    config = build_logging_config(log_file=tmp_path / "etgrs.jsonl", level="INFO")
    assert config["handlers"]["stderr"]["level"] == "INFO"
    assert config["handlers"]["file_json"]["formatter"] == "json"
    assert config["handlers"]["queue_handler"]["handlers"] == ["stderr", "file_json"]
    assert config["loggers"]["etgrs"]["propagate"] is False


def test_build_logging_config_without_file():
    config = build_logging_config(log_file=None)
    assert "file_json" not in config["handlers"]
    assert config["handlers"]["queue_handler"]["handlers"] == ["stderr"]


def test_configure_logging_runs_once(mocker, monkeypatch):
    monkeypatch.setattr(etgrs_logging, "_configured", False)
    dict_config = mocker.patch("logging.config.dictConfig")
    mocker.patch("logging.getHandlerByName", return_value=None)
    logger = configure_logging(level="debug")
    configure_logging(level="info")
    assert logger.name == "etgrs"
    dict_config.assert_called_once()
    assert dict_config.call_args.args[0]["handlers"]["stderr"]["level"] == "DEBUG"
