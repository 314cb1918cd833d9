import pytest

from circsmith import companion, element, smith_form, to_matrix


@pytest.fixture(autouse=True, scope="session")
def always_crosscheck():
    # Test builds re-derive every small fast-path result through the
    # elimination oracle.
    companion.set_crosscheck("always")
    yield
    companion.set_crosscheck("sampled")


def oracle_chain(f, g):
    """Invariant factors of f(C_g) by classical elimination."""
    return smith_form(to_matrix(element(f, g))).invariant_factors
