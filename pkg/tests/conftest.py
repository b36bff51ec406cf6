import pytest

from formalab import catalog_group


@pytest.fixture(scope="session")
def s3():
    return catalog_group("S3")


@pytest.fixture(scope="session")
def a4():
    return catalog_group("A4")


@pytest.fixture(scope="session")
def s4():
    return catalog_group("S4")


@pytest.fixture(scope="session")
def q8():
    return catalog_group("Q8")


@pytest.fixture(scope="session")
def sl23():
    return catalog_group("SL(2,3)")


@pytest.fixture(scope="session")
def c12():
    return catalog_group("C12")


@pytest.fixture(scope="session")
def ex324():
    return catalog_group("Ex1.2")
