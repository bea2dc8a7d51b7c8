import os
import subprocess
import sys

import pytest

from embrace import documents, library, suites
from embrace.linalg import FieldSpec

ACCEPTANCE = {}  # criterion number -> (passed, label); filled by test_acceptance


@pytest.fixture(scope="session")
def Q():
    return FieldSpec.Q()


@pytest.fixture(scope="session")
def e1():
    return library.dual_numbers()


@pytest.fixture(scope="session")
def e2():
    return library.a2_path_category()


@pytest.fixture(scope="session")
def e1_doc():
    return documents.corpus("e1")


@pytest.fixture(scope="session")
def e2_doc():
    return documents.corpus("e2")


@pytest.fixture(scope="session")
def ctx(e1_doc, e2_doc):
    return suites.Context({"e1": e1_doc, "e2": e2_doc})


@pytest.fixture(scope="session")
def verify_subprocess():
    """``embrace verify --seed 0`` in a fresh interpreter with a different hash seed.

    Started as early as the first test asks for it; the output is collected
    by the determinism criterion.
    """
    env = dict(os.environ, PYTHONHASHSEED="12345")
    proc = subprocess.Popen([sys.executable, "-m", "embrace", "verify", "--seed", "0"],
                            stdout=subprocess.PIPE, stderr=subprocess.PIPE, env=env)
    yield proc
    if proc.poll() is None:
        proc.kill()
        proc.communicate()


@pytest.fixture(scope="session")
def suite_reports(ctx):
    """Every suite run once with seed 0, shared by the acceptance tests."""
    return {r.suite: r for r in suites.run("all", seed=0, ctx=ctx)}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        passed, label = ACCEPTANCE[k]
        terminalreporter.write_line("criterion %2d: %s  %s" % (k, "PASS" if passed else "FAIL", label))
