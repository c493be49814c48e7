"""Shared corpus of simplicial complexes used across the suite.

rp2_6 is the minimal 6-vertex triangulation of the real projective plane
(10 triangles, 15 edges, 6 vertices); its counts and Euler characteristic
are asserted in test_chains before anything relies on its torsion.
"""

import pytest

from polysmash.complexes import (
    empty_complex,
    from_facets,
    full_simplex,
    random_complex,
    simplex_boundary,
)

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)



RP2_FACETS = [
    (1, 2, 3),
    (1, 3, 4),
    (1, 4, 5),
    (1, 2, 6),
    (1, 5, 6),
    (2, 3, 5),
    (2, 4, 5),
    (2, 4, 6),
    (3, 4, 6),
    (3, 5, 6),
]


@pytest.fixture(scope="session")
def point():
    return full_simplex(0)


@pytest.fixture(scope="session")
def two_points():
    return from_facets(2, [(1,), (2,)])


@pytest.fixture(scope="session")
def triangle_boundary():
    return simplex_boundary(2)


@pytest.fixture(scope="session")
def tetra_boundary():
    return simplex_boundary(3)


@pytest.fixture(scope="session")
def path_complex():
    return from_facets(3, [(1, 2), (2, 3)])


@pytest.fixture(scope="session")
def rp2():
    return from_facets(6, RP2_FACETS)


def _random_corpus():
    out = []
    for seed in range(10):
        m = 3 + seed % 4  # m in 3..6
        out.append(random_complex(m, 3, "1/2", seed=100 + seed))
    return out


@pytest.fixture(scope="session")
def random_corpus():
    return _random_corpus()


@pytest.fixture(scope="session")
def named_corpus(point, two_points, triangle_boundary, tetra_boundary,
                 path_complex, rp2):
    return {
        "point": point,
        "two_points": two_points,
        "triangle_boundary": triangle_boundary,
        "tetra_boundary": tetra_boundary,
        "path": path_complex,
        "rp2": rp2,
    }


@pytest.fixture(scope="session")
def full_corpus(named_corpus, random_corpus):
    corpus = dict(named_corpus)
    for idx, K in enumerate(random_corpus):
        corpus[f"random_{idx}"] = K
    return corpus


@pytest.fixture(scope="session")
def empty_k():
    return empty_complex(1)
