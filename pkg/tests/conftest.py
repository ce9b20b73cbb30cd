import io
import json
from pathlib import Path

import pytest

from src.gcm_core import build_simply_connected_datum
from src.helper_classes import import_config
from src.parallel import set_threads

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(autouse=True)
def single_thread():
    set_threads(1)
    yield
    set_threads(1)


@pytest.fixture
def data_dir():
    return DATA_DIR


@pytest.fixture(scope="session")
def config():
    return import_config()


@pytest.fixture(scope="session")
def a1():
    return build_simply_connected_datum([[2]], name="A1")


@pytest.fixture(scope="session")
def a2():
    return build_simply_connected_datum([[2, -1], [-1, 2]], name="A2")


@pytest.fixture(scope="session")
def b2():
    return build_simply_connected_datum([[2, -2], [-1, 2]], name="B2")


@pytest.fixture(scope="session")
def g2():
    return build_simply_connected_datum([[2, -1], [-3, 2]], name="G2")


@pytest.fixture(scope="session")
def affine_a1():
    return build_simply_connected_datum([[2, -2], [-2, 2]], name="affine_A1")


@pytest.fixture(scope="session")
def affine_a2():
    return build_simply_connected_datum([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]], name="affine_A2")


@pytest.fixture(scope="session")
def hyperbolic():
    return build_simply_connected_datum([[2, -3], [-3, 2]], name="hyperbolic_3")


@pytest.fixture
def run_cli(config):
    """Run the command line and return ``(exit_code, stdout_text)``."""
    from src import cli

    def _run(*argv):
        out = io.StringIO()
        code = cli.run(list(argv), stdout=out, config=config)
        return code, out.getvalue()

    return _run


@pytest.fixture
def run_cli_json(run_cli):
    def _run(*argv):
        code, text = run_cli(*argv)
        return code, (json.loads(text) if text else None)

    return _run
