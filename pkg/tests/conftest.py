import pytest

from stringc.catalog import FamilySpec, build


@pytest.fixture(scope="session")
def grp():
    """Session-wide cache of built catalog instances."""
    built = {}

    def get(family, n, m, historical=False):
        key = (family, n, m, historical)
        if key not in built:
            built[key] = build(FamilySpec(family, n, m, historical=historical))
        return built[key]

    return get
