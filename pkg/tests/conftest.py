"""Shared fixtures: the family suite and frozen oracle data.

The frozen spectra and intersection arrays below are standard facts about
these families (circulant eigenvalues for cycles, binomial eigenvalue
multiplicities for the folded cubes, the alternating k - i eigenvalues for
the odd graphs); the tests treat them as independent oracles for the
numerical pipeline.
"""

import math

import pytest

import oddgirth as og

# one line per acceptance criterion, echoed after the run by the summary hook
ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)

FAMILY_SUITE = (
    [("petersen", ())]
    + [("odd", (4,))]
    + [("folded_cube", (m,)) for m in (5, 7)]
    + [("cycle", (k,)) for k in (5, 7, 9, 11)]
    + [("complete", (k,)) for k in range(2, 11)]
)


def suite_label(family, params):
    return family if not params else "%s_%s" % (family, "_".join(map(str, params)))


def _cycle_spectrum(n):
    # circulant eigenvalues 2 cos(2 pi j / n), j = 0 .. (n-1)/2, doubled except j=0
    out = [(2.0, 1)]
    for j in range(1, (n + 1) // 2):
        out.append((2.0 * math.cos(2.0 * math.pi * j / n), 2))
    return sorted(out, reverse=True)


KNOWN_SPECTRA = {
    "petersen": [(3, 1), (1, 5), (-2, 4)],
    "odd_4": [(4, 1), (2, 14), (-1, 14), (-3, 6)],
    "folded_cube_5": [(5, 1), (1, 10), (-3, 5)],
    "folded_cube_7": [(7, 1), (3, 21), (-1, 35), (-5, 7)],
}
for k in (5, 7, 9, 11):
    KNOWN_SPECTRA["cycle_%d" % k] = _cycle_spectrum(k)
for k in range(2, 11):
    KNOWN_SPECTRA["complete_%d" % k] = [(k - 1, 1), (-1, k - 1)]

KNOWN_ARRAYS = {
    "petersen": {"b": [3, 2], "c": [1, 1]},
    "odd_4": {"b": [4, 3, 3], "c": [1, 1, 2]},
    "folded_cube_5": {"b": [5, 4], "c": [1, 2]},
    "folded_cube_7": {"b": [7, 6, 5], "c": [1, 2, 3]},
}
for k in (5, 7, 9, 11):
    D = (k - 1) // 2
    KNOWN_ARRAYS["cycle_%d" % k] = {"b": [2] + [1] * (D - 1), "c": [1] * D}
for k in range(2, 11):
    KNOWN_ARRAYS["complete_%d" % k] = {"b": [k - 1], "c": [1]}


@pytest.fixture(scope="session")
def family_suite():
    return [
        (suite_label(fam, params), og.generate_family(fam, params))
        for fam, params in FAMILY_SUITE
    ]


@pytest.fixture(scope="session")
def petersen():
    return og.generate_family("petersen")


@pytest.fixture(scope="session")
def prism():
    return og.generate_family("prism")


@pytest.fixture(scope="session")
def p3():
    return og.generate_family("path", (3,))


@pytest.fixture(scope="session")
def c5():
    return og.generate_family("cycle", (5,))
