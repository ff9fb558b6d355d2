import pytest

from specfn import adjudicate, build_suite, gn_asymptotics, run_all


@pytest.fixture(scope="session")
def suite():
    return build_suite()


@pytest.fixture(scope="session")
def reports(suite):
    return run_all(suite.identities)


@pytest.fixture(scope="session")
def reports_by_id(reports):
    return {r.id: r for r in reports}


@pytest.fixture(scope="session")
def outcomes(suite):
    return {cid: adjudicate(case) for cid, case in suite.cases.items()}


@pytest.fixture(scope="session")
def gn_rows():
    return gn_asymptotics(10)
