import pytest

from cross5.graphs import complete_bipartite, complete_graph, construct_named, cycle_graph


@pytest.fixture(scope="session")
def k4():
    return complete_graph(4)


@pytest.fixture(scope="session")
def k5():
    return complete_graph(5)


@pytest.fixture(scope="session")
def k6():
    return complete_graph(6)


@pytest.fixture(scope="session")
def k33():
    return complete_bipartite(3, 3)


@pytest.fixture(scope="session")
def k35():
    return complete_bipartite(3, 5)


@pytest.fixture(scope="session")
def c5():
    return cycle_graph(5)


@pytest.fixture(scope="session")
def c3_join_c5():
    return construct_named("join(C3,C5)")


@pytest.fixture(scope="session")
def k6_three_crossing_drawing(k6):
    from cross5.solver import decide_crossing_number
    out = decide_crossing_number(k6, 3)
    assert out.status == "sat" and out.witness.crossing_total == 3
    return out.witness
