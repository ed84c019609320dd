"""
Shared fixtures: the standard presentations used across the suite.
"""

import os

import pytest
from hypothesis import HealthCheck, settings

from koszul_check.algebra import QuadraticPresentation
from koszul_check.linalg import FieldSpec
from koszul_check.quiver import Quiver, disjoint_union, preprojective_presentation

settings.register_profile("default", deadline=None, suppress_health_check=[HealthCheck.too_slow])
settings.register_profile("ci", parent=settings.get_profile("default"), max_examples=50)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

QQ = FieldSpec.rational()
GF2 = FieldSpec.prime(2)
GF3 = FieldSpec.prime(3)


def one_vertex(field, arrows, relations):
    quiver = Quiver.from_names(["1"], [(a, "1", "1") for a in arrows])
    return QuadraticPresentation.create(field, quiver, relations)


def polynomial_one(field=QQ):
    """k[x], a single loop and no relations."""
    return one_vertex(field, ["x"], [])


def polynomial_two(field=QQ):
    """k[x, y] = k<x, y>/(xy - yx)."""
    return one_vertex(field, ["x", "y"], [[(1, ("x", "y")), (-1, ("y", "x"))]])


def exterior_two(field=QQ):
    """k<x, y>/(x^2, y^2, xy + yx)."""
    return one_vertex(field, ["x", "y"], [
        [(1, ("x", "x"))],
        [(1, ("y", "y"))],
        [(1, ("x", "y")), (1, ("y", "x"))],
    ])


def xy_algebra(field=QQ):
    """k<x, y>/(xy)."""
    return one_vertex(field, ["x", "y"], [[(1, ("x", "y"))]])


def three_cycle():
    return Quiver.from_names(["0", "1", "2"], [("a", "0", "1"), ("b", "1", "2"), ("c", "2", "0")])


def star_d4():
    return Quiver.from_names(
        ["c", "l1", "l2", "l3", "l4"],
        [(f"a{k}", f"l{k}", "c") for k in range(1, 5)],
    )


@pytest.fixture
def k_x():
    return polynomial_one()


@pytest.fixture
def k_xy_commutative():
    return polynomial_two()


@pytest.fixture
def exterior():
    return exterior_two()


@pytest.fixture
def xy():
    return xy_algebra()


@pytest.fixture
def preprojective_a2():
    return preprojective_presentation(three_cycle(), QQ)


@pytest.fixture
def preprojective_d4():
    return preprojective_presentation(star_d4(), QQ)


@pytest.fixture
def two_a2():
    return preprojective_presentation(disjoint_union(three_cycle(), three_cycle()), QQ)


@pytest.fixture
def write_input(tmp_path):
    """Write a JSON or TOML input document and return its path."""

    def write(text: str, name: str = "input.json") -> str:
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write
