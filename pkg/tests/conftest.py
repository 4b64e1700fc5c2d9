"""Fixtures shared across the suite, including the optional USAir97 data."""

from __future__ import annotations

import os
from pathlib import Path

import pytest

from netdensity import pajek
from netdensity.triangles import count_edge_triangles, node_neighborhood_edges

REPO_ROOT = Path(__file__).resolve().parent.parent
FIXTURE_NAME = "USAir97.net"
SKIP_NOTE = (
    "USAir97.net fixture not present; run 'python scripts/fetch_usair97.py' or "
    "point NETDENSITY_DATA at a directory containing it"
)


def usair_file() -> Path | None:
    candidates = []
    env = os.environ.get("NETDENSITY_DATA")
    if env:
        candidates.append(Path(env) / FIXTURE_NAME)
    candidates.append(REPO_ROOT / "data" / FIXTURE_NAME)
    for cand in candidates:
        if cand.is_file():
            return cand
    return None


@pytest.fixture(scope="session")
def usair_file_path() -> str:
    path = usair_file()
    if path is None:
        pytest.skip(SKIP_NOTE)
    return str(path)


@pytest.fixture(scope="session")
def usair(usair_file_path):
    net, _ = pajek.read_net(usair_file_path)
    return net


@pytest.fixture(scope="session")
def usair_tri(usair):
    return count_edge_triangles(usair)


@pytest.fixture(scope="session")
def usair_ecounts(usair, usair_tri):
    return node_neighborhood_edges(usair, usair_tri)
