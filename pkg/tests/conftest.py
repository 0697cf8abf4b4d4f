import pytest

from hyperelliptic_census.algebra.gf2n import field
from hyperelliptic_census.algebra.polyring import monomial, one
from hyperelliptic_census.core.models import Curve


@pytest.fixture
def F2():
    return field(1)


@pytest.fixture
def F4():
    return field(2)


@pytest.fixture
def F8():
    return field(3)


@pytest.fixture
def F16():
    return field(4)


@pytest.fixture
def x7_curve(F2):
    """y^2 + y = x^7 over GF(2), genus 3."""
    return Curve(one(F2), monomial(1, 7, F2), 3)
