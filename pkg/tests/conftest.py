"""Shared fixtures: hand-built and trained knowledge bases."""

import pytest

from bpr.domains import GolfDomain, SurveillanceDomain, TelephoneDomain
from bpr.models import train_offline
from bpr.records import SignalKind

from factories import build_kb, mixed_signal, point_signal


@pytest.fixture
def make_kb():
    return build_kb


@pytest.fixture
def disjoint_kb():
    """Two types, two policies; policy 0 reveals the type, policy 1 does not."""
    obs = [
        [point_signal(0, 2), mixed_signal([0.5, 0.5])],
        [point_signal(1, 2), mixed_signal([0.5, 0.5])],
    ]
    return build_kb([[1.0, 0.0], [0.0, 1.0]], obs=obs, signal_kind=SignalKind.RETURN)


@pytest.fixture(scope="session")
def golf_domain():
    return GolfDomain()


@pytest.fixture(scope="session")
def golf_kb(golf_domain):
    kb, _ = train_offline(golf_domain, episodes_per_pair=10_000, seed=7)
    return kb


@pytest.fixture(scope="session")
def telephone_kbs():
    """Telephone knowledge bases for every signal kind, trained with the same seed."""
    kbs = {}
    for kind in (SignalKind.TRANSITION, SignalKind.REWARD, SignalKind.RETURN):
        domain = TelephoneDomain(signal_kind=kind)
        kbs[kind] = (domain, *train_offline(domain, episodes_per_pair=300, seed=3))
    return kbs


@pytest.fixture(scope="session")
def surveillance_domain():
    return SurveillanceDomain()


@pytest.fixture(scope="session")
def surveillance_kb(surveillance_domain):
    kb, _ = train_offline(surveillance_domain, episodes_per_pair=200, seed=11)
    return kb
