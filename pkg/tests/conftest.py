import pytest

from arbornet import construct, graphs, oracle


def dh_graphs(max_n):
    for n in range(2, max_n + 1):
        for g in oracle.enumerate_graphs(n):
            if graphs.is_distance_hereditary(g)[0]:
                yield g


@pytest.fixture(scope="session")
def corpus6():
    """Every distance-hereditary graph on 2..6 vertices paired with its
    built explanation; shared across the acceptance criteria that sweep
    the full corpus."""
    return [(g, construct.explain_dh(g)) for g in dh_graphs(6)]


@pytest.fixture(scope="session")
def corpus4():
    return [(g, construct.explain_dh(g)) for g in dh_graphs(4)]
