import io
from fractions import Fraction

import pytest

from src.errors import InputError, InvalidWord
from src.helper_classes import OutputManager, config_value, json_vector, parse_coords, parse_word
from src.cli import run
from src.parallel import get_threads, parallel_map, resolve_threads


def test_parse_coords():
    assert parse_coords("1, 0,-2") == (1, 0, -2)
    assert parse_coords("1/2;0") == (Fraction(1, 2), 0)
    with pytest.raises(InputError):
        parse_coords("1,x")
    with pytest.raises(InputError):
        parse_coords("1,0", length=3)


def test_parse_word():
    assert parse_word("", 2) == ()
    assert parse_word("0,1,0", 2) == (0, 1, 0)
    with pytest.raises(InvalidWord):
        parse_word("0,2", 2)
    with pytest.raises(InvalidWord):
        parse_word("a", 2)


def test_json_vector():
    assert json_vector((Fraction(-1, 2), Fraction(4, 2), 3)) == ["-1/2", 2, 3]


def test_output_manager_json_and_csv():
    header = OutputManager.create_metadata("t", "me", extra={"command": "roots"})
    rows = [{"a": [1, 2], "b": None}]
    doc = OutputManager("json").render(header, rows, ["a", "b"], body={"count": 1})
    assert '"count": 1' in doc
    text = OutputManager("csv").render(header, rows, ["a", "b"])
    assert text.splitlines()[-2:] == ["a,b", '"[1, 2]",']
    with pytest.raises(InputError):
        OutputManager("xml")


def test_config_value():
    config = {"window": {"depth": 4}}
    assert config_value(config, "window", "depth") == 4
    assert config_value(config, "window", "tdeg", default=6) == 6
    assert config_value(config, "missing", "depth") is None


def test_thread_resolution(monkeypatch):
    monkeypatch.delenv("KM_SATAKE_THREADS", raising=False)
    assert resolve_threads(None, 2) == 2
    assert resolve_threads(3, 2) == 3


def test_thread_resolution_reads_configured_variable(monkeypatch):
    monkeypatch.setenv("KM_SATAKE_THREADS", "5")
    monkeypatch.setenv("SATAKE_WORKERS", "7")
    assert resolve_threads(3, 2, env_var="SATAKE_WORKERS") == 7
    monkeypatch.delenv("SATAKE_WORKERS")
    assert resolve_threads(3, 2, env_var="SATAKE_WORKERS") == 3


def test_cli_uses_configured_thread_variable(monkeypatch, config):
    monkeypatch.delenv("KM_SATAKE_THREADS", raising=False)
    monkeypatch.setenv("SATAKE_WORKERS", "4")
    custom = dict(config, parallel=dict(config.get("parallel", {}), env_var="SATAKE_WORKERS"))
    assert run(["roots", "--datum", "A1", "--depth", "1"], stdout=io.StringIO(), config=custom) == 0
    assert get_threads() == 4
    monkeypatch.setenv("KM_SATAKE_THREADS", "5")
    assert resolve_threads(3, 2) == 5
    monkeypatch.setenv("KM_SATAKE_THREADS", "many")
    assert resolve_threads(3, 2) == 3


def test_parallel_map_keeps_order():
    assert parallel_map(lambda x: x * x, range(10), 4) == [x * x for x in range(10)]
