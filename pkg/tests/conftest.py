import pytest

from modskein.bundles import (sweedler_bundle, trivial_bundle, uqsl2_bundle,
                              z2_bundle, z4_bundle)


@pytest.fixture(scope="session")
def z2():
    return z2_bundle()


@pytest.fixture(scope="session")
def sweedler():
    return sweedler_bundle()


@pytest.fixture(scope="session")
def z4():
    return z4_bundle()


@pytest.fixture(scope="session")
def trivial():
    return trivial_bundle()


@pytest.fixture(scope="session")
def uqsl2_p2():
    return uqsl2_bundle(2)
