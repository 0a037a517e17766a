import pytest

from warpdeg.diagram import parse

TREFOIL = "O1+ U2+ O3+ U1+ O2+ U3+\n"
HOPF = "O1+ U2+\nU1+ O2+\n"
KINK = "O1+ U1+\n"
NONALT3 = "O1+ O2+ U1+ O3+ U2+ U3+\n"

# three circles with linking matrix rows (0 1 0 / 1 0 0 / 2 2 0) in order (1,2,3)
MATRIX_FIXTURE = """\
U1+ O2+ O3+ O4-
O1+ U2+ O5+ O6-
U3+ U4- U5+ U6-
"""

# trefoil with a circle linked through it: d + d(-D) + sr = 2 + 2 + 1 = 5
TREFOIL_PLUS_CIRCLE = """\
O1+ U2+ O3+ O4+ U1+ O2+ U5+ U3+
U4+ O5+
"""

# three circles, every pair balanced, so ld = lc/2 = 5 in every order;
# |Link| = 2, 0, 1 for pairs (1,2), (1,3), (2,3)
LD5 = """\
U1+ O2+ U3+ O4+ U5+ O6- U7- O8+
O1+ U2+ O3+ U4+ U9+ O10+
O5+ U6- O7- U8+ O9+ U10+
"""

# two circles, each under twice against the other with cancelling signs
CANCEL4 = "U1+ U2- O3+ O4-\nO1+ O2- U3+ U4-\n"
STACKED_CANCEL4 = "O1+ O2- O3+ O4-\nU1+ U2- U3+ U4-\n"

# a pair where component 1 is under 2 times and over 4 times
UNBALANCED = "U1+ U2- O3+ O4+ O5- O6-\nO1+ O2- U3+ U4+ U5- U6-\n"


@pytest.fixture
def trefoil():
    return parse(TREFOIL)


@pytest.fixture
def hopf():
    return parse(HOPF)


@pytest.fixture
def kink():
    return parse(KINK)


@pytest.fixture
def matrix_fixture():
    return parse(MATRIX_FIXTURE)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n, ok, text in sorted(RESULTS):
        terminalreporter.write_line(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {text}")
