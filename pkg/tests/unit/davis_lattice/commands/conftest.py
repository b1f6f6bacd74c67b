import textwrap

import pytest

from davis_lattice.config import Bounds, RunConfig


@pytest.fixture
def run_config():
    def _run_config(command, catalog="two_apex(4,4)", **kwargs):
        kwargs.setdefault("bounds", Bounds())
        if "system_path" in kwargs:
            catalog = None
        return RunConfig(command=command, catalog=catalog, **kwargs)

    return _run_config


@pytest.fixture
def system_file(tmp_path):
    path = tmp_path / "two_apex.txt"
    path.write_text(textwrap.dedent(
        """
        # s1, s2, s3 below the apices s4 and s5
        generators: s1 s2 s3 s4 s5
        default = inf
        m s1 s4 = 4
        m s2 s4 = 4
        m s3 s4 = 4
        m s1 s5 = 4
        m s2 s5 = 4
        m s3 s5 = 4
        """
    ), encoding="utf-8")
    return path
