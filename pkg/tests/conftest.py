import sys

import pytest

from cambrian.sortable import coxeter_element
from cambrian.systems import affine_c3, dihedral, type_a

SEED = 0xCA3B41A4


@pytest.fixture(scope="session")
def c3():
    return affine_c3()


@pytest.fixture(scope="session")
def c3_gamma(c3):
    return coxeter_element(c3, "s0 s1 s2 s3")


@pytest.fixture(scope="session")
def fig2_top(c3):
    return c3.element("s0 s1 s2 s3 s1 s2 s3 s1 s2 s3")


@pytest.fixture(scope="session")
def a2():
    return type_a(2)


@pytest.fixture(scope="session")
def a3():
    return type_a(3)


@pytest.fixture(scope="session")
def i2inf():
    return dihedral(0)


def pytest_terminal_summary(terminalreporter):
    module = sys.modules.get("test_acceptance")
    if module is None:
        return
    terminalreporter.section("acceptance criteria")
    for n, title in module.TITLES.items():
        if n not in module.RESULTS:
            terminalreporter.write_line(f"criterion {n}: NOT RUN  {title}")
            continue
        ok, seconds, detail = module.RESULTS[n]
        line = f"criterion {n}: {'PASS' if ok else 'FAIL'}  {title}  ({seconds:.2f} s)"
        terminalreporter.write_line(line + (f"  [{detail}]" if detail else ""))
